"""
Utility module
Disk cache and memory monitoring.
"""

from .cache import IndexCache
from .memory_monitor import MemoryMonitor, memory_monitor

__all__ = ["IndexCache", "MemoryMonitor", "memory_monitor"]
