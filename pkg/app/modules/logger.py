"""
Project logger. Records go through a queue to a stderr handler; stdout carries command output only.
"""

import atexit
import logging
import logging.handlers
import sys
from queue import Queue

from settings import get_settings

settings = get_settings()

LOG_FORMAT = "[%(asctime)s][%(levelname)s][%(name)s]%(message)s"

log_queue: Queue = Queue()

rig_logger = logging.getLogger(settings.PROJECT_NAME)
rig_logger.setLevel(getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO))
rig_logger.propagate = False

stderr_handler = logging.StreamHandler(sys.stderr)
stderr_handler.setFormatter(logging.Formatter(LOG_FORMAT))

rig_logger.addHandler(logging.handlers.QueueHandler(log_queue))

listener = logging.handlers.QueueListener(log_queue, stderr_handler)
listener.start()
atexit.register(listener.stop)


def set_log_level(level: str) -> None:
    """Overrides LOG_LEVEL for the rest of the process."""
    rig_logger.setLevel(getattr(logging, level.upper()))
