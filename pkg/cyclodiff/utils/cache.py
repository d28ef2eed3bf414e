"""
Disk cache
Layout under the cache root:
    ind/<p>_<g>.bin          index tables (header p, g as <u8; then p−1 <u4 entries)
    params/<p>.json          per-prime parameter records
    tables/<F1>_<V1>_<Z>_<T>.json   coefficient tables
"""

# Standard library imports
import json
import logging
import os
from typing import Dict, Optional

# Third-party imports
import numpy as np

logger = logging.getLogger(__name__)

HEADER_DTYPE = np.dtype("<u8")
ENTRY_DTYPE = np.dtype("<u4")


class IndexCache:
    """Binary and JSON artifacts keyed by prime, generator and class"""

    def __init__(self, root: Optional[str]):
        self.root = root

    @property
    def enabled(self) -> bool:
        return bool(self.root)

    def _path(self, *parts: str) -> str:
        return os.path.join(self.root, *parts)

    def index_path(self, p: int, g: int) -> str:
        return self._path("ind", f"{p}_{g}.bin")

    def params_path(self, p: int) -> str:
        return self._path("params", f"{p}.json")

    def table_path(self, label: str) -> str:
        return self._path("tables", f"{label}.json")

    # Index tables

    def save_index(self, p: int, g: int, ind: np.ndarray):
        if not self.enabled:
            return
        path = self.index_path(p, g)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "wb") as fh:
            fh.write(np.array([p, g], dtype=HEADER_DTYPE).tobytes())
            fh.write(np.asarray(ind[1:], dtype=ENTRY_DTYPE).tobytes())
        logger.debug(f"Cached index table {path}")

    def load_index(self, p: int, g: int) -> Optional[np.ndarray]:
        """Full-size table (ind[0] = −1) or None when absent or malformed"""
        if not self.enabled:
            return None
        path = self.index_path(p, g)
        if not os.path.exists(path):
            return None
        try:
            raw = np.fromfile(path, dtype=np.uint8)
            header = np.frombuffer(raw[:16].tobytes(), dtype=HEADER_DTYPE)
            if int(header[0]) != p or int(header[1]) != g:
                logger.warning(f"Index cache header mismatch in {path}")
                return None
            entries = np.frombuffer(raw[16:].tobytes(), dtype=ENTRY_DTYPE)
            if entries.size != p - 1:
                logger.warning(f"Index cache truncated: {path}")
                return None
        except (OSError, ValueError) as e:
            logger.warning(f"Failed to read index cache {path}: {e}")
            return None
        ind = np.empty(p, dtype=np.int64)
        ind[0] = -1
        ind[1:] = entries
        return ind

    # JSON records

    def save_json(self, path: str, record):
        if not self.enabled:
            return
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as fh:
            json.dump(record, fh, indent=2)

    def load_json(self, path: str) -> Optional[Dict]:
        if not self.enabled or not os.path.exists(path):
            return None
        try:
            with open(path) as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"Failed to read cache record {path}: {e}")
            return None
