"""
bounce-lab command-line surface.
"""
