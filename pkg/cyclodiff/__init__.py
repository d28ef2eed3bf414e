# Standard library imports
import logging
import os
from logging.handlers import RotatingFileHandler

# Local imports
from .config import Config
from .utils.memory_monitor import memory_monitor

__version__ = "1.0.0"


def init_app(config_class=Config, testing=False):
    """cyclodiff runtime factory: instantiate the configuration and wire up logging"""

    config = config_class()
    if testing:
        config.TESTING = True

    logger = logging.getLogger("cyclodiff")
    memory_monitor.max_memory_mb = config.MAX_MEMORY_MB
    logger.setLevel(getattr(logging, config.LOG_LEVEL, logging.INFO))

    # Logging setup
    if not config.TESTING:
        if not os.path.exists(config.LOG_DIR):
            os.makedirs(config.LOG_DIR, exist_ok=True)
        log_path = os.path.join(config.LOG_DIR, "cyclodiff.log")
        if not any(
            isinstance(h, RotatingFileHandler)
            and getattr(h, "baseFilename", None) == os.path.abspath(log_path)
            for h in logger.handlers
        ):
            file_handler = RotatingFileHandler(log_path, maxBytes=10240, backupCount=10)
            file_handler.setFormatter(
                logging.Formatter(
                    "%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]"
                )
            )
            file_handler.setLevel(logging.INFO)
            logger.addHandler(file_handler)

        logger.info("cyclodiff started")

    return config
