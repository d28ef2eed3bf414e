# Standard library imports
import os

# Third-party imports
from dotenv import load_dotenv

# Load .env file
load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.environ.get(name, default).strip().lower() in ("1", "true", "yes")


def _env_int(name: str, default: int) -> int:
    # Tolerate trailing comments in .env values ("500000 # bound")
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    return int(raw.split("#")[0].strip())


class Config:
    # Prime bound for harvesting and direct scans
    PMAX = _env_int("CYCLODIFF_PMAX", 500_000)

    # Worker processes for per-prime and per-class work
    JOBS = _env_int("CYCLODIFF_JOBS", 1)

    # Disk cache root (empty disables caching)
    CACHE_DIR = os.environ.get("CYCLODIFF_CACHE_DIR", "cache") or None
    TABLE_DIR = os.environ.get("CYCLODIFF_TABLE_DIR") or (
        os.path.join(CACHE_DIR, "tables") if CACHE_DIR else "tables"
    )

    # Logging
    LOG_DIR = os.environ.get("CYCLODIFF_LOG_DIR", "logs")
    LOG_LEVEL = os.environ.get("CYCLODIFF_LOG_LEVEL", "INFO").upper()

    # Table derivation
    MIN_FIT_PRIMES = 18
    HELD_OUT = _env_int("CYCLODIFF_HELD_OUT", 5)
    # Primes harvested per class (fitting plus held out)
    PER_CLASS = _env_int("CYCLODIFF_PER_CLASS", 30)

    # Progress bars
    PROGRESS = _env_bool("CYCLODIFF_PROGRESS", "true")

    # Memory monitor budget (index tables are dense arrays of size p)
    MAX_MEMORY_MB = _env_int("CYCLODIFF_MAX_MEMORY_MB", 2048)

    TESTING = False


class TestConfig(Config):
    """Test configuration"""

    TESTING = True
    PMAX = 5_000
    JOBS = 1
    CACHE_DIR = None
    TABLE_DIR = "tables"
    PROGRESS = False
    LOG_LEVEL = "DEBUG"
