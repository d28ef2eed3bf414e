"""
Memory usage monitoring utility
Index tables are dense arrays of size p, so long prime scans are watched
against a configurable budget.
"""

import os
import logging
from typing import Dict

from ..errors import MemoryBudgetExceeded

try:
    import psutil

    PSUTIL_AVAILABLE = True
except ImportError:
    PSUTIL_AVAILABLE = False


# int64 index table plus the transient arrays of one counting pass
BYTES_PER_RESIDUE = 8 * 4


class MemoryMonitor:
    """Memory usage monitoring"""

    def __init__(self, max_memory_mb: int = 2048):
        self.max_memory_mb = max_memory_mb
        self.logger = logging.getLogger(__name__)
        self.warning_threshold = 0.8  # 80% warning threshold
        self.critical_threshold = 0.9  # 90% critical threshold

    def get_memory_usage(self) -> Dict:
        """Return current memory usage"""
        if not PSUTIL_AVAILABLE:
            return self._get_memory_usage_fallback()

        try:
            process = psutil.Process(os.getpid())
            memory_mb = process.memory_info().rss / 1024 / 1024

            return {
                "memory_mb": memory_mb,
                "memory_percent": (memory_mb / self.max_memory_mb) * 100,
                "is_safe": memory_mb < self.max_memory_mb * self.warning_threshold,
                "is_critical": memory_mb > self.max_memory_mb * self.critical_threshold,
                "max_memory_mb": self.max_memory_mb,
            }
        except Exception as e:
            self.logger.warning(f"Failed to check memory usage: {str(e)}")
            return self._get_memory_usage_fallback()

    def _get_memory_usage_fallback(self) -> Dict:
        """Fallback method when psutil is not available"""
        return {
            "memory_mb": 0,
            "memory_percent": 0,
            "is_safe": True,  # Assume safe if cannot check
            "is_critical": False,
            "max_memory_mb": self.max_memory_mb,
            "psutil_available": False,
        }

    def estimate_index_mb(self, p: int) -> float:
        """Projected footprint of one prime's index table and counting pass"""
        return p * BYTES_PER_RESIDUE / 1024 / 1024

    def check_prime_budget(self, p: int) -> bool:
        """Warn when a prime's tables would push past the budget"""
        usage = self.get_memory_usage()
        projected = usage["memory_mb"] + self.estimate_index_mb(p)
        if projected > self.max_memory_mb * self.critical_threshold:
            self.logger.error(
                f"Index table for p={p} projects {projected:.1f}MB of {self.max_memory_mb}MB"
            )
            return False
        if projected > self.max_memory_mb * self.warning_threshold:
            self.logger.warning(
                f"Index table for p={p} projects {projected:.1f}MB of {self.max_memory_mb}MB"
            )
        return True

    def require_prime_budget(self, p: int):
        """Raise before building a prime whose tables would not fit"""
        if not self.check_prime_budget(p):
            projected = self.get_memory_usage()["memory_mb"] + self.estimate_index_mb(p)
            raise MemoryBudgetExceeded(p, projected, self.max_memory_mb)

    def log_memory_usage(self, context: str = ""):
        """Log memory usage"""
        usage = self.get_memory_usage()

        if usage.get("psutil_available", True):
            level = logging.DEBUG
            if usage.get("is_critical", False):
                level = logging.ERROR
            elif not usage.get("is_safe", True):
                level = logging.WARNING

            self.logger.log(
                level,
                f"Memory usage ({context}): {usage['memory_mb']:.1f}MB ({usage['memory_percent']:.1f}%)",
            )
        else:
            self.logger.debug(f"Memory monitoring unavailable ({context})")


# Global memory monitor instance
memory_monitor = MemoryMonitor()
