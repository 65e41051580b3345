"""
System services: report file handling.
"""

from core.services.system.file_handler import FileHandler

__all__ = ["FileHandler"]
