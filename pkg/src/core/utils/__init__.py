"""
Core utilities module.
"""

from core.utils.seeds import derive_seed, spawn_seeds
from core.utils.serialization import to_builtin

__all__ = ["spawn_seeds", "derive_seed", "to_builtin"]
