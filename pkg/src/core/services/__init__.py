"""
Core services package for bounce-lab.
Market data, level engine, inference and feature services, plus report files.
"""

# System services
from core.services.system.file_handler import FileHandler

__all__ = [
    "FileHandler",
]
