import logging
import sys
import time
import traceback
from logging.handlers import RotatingFileHandler

import settings as st


def setup_logger(log_file=None, level=None):
    logger = logging.getLogger("lamplighter")
    logger.setLevel(level or st.LOG_LEVEL)

    if logger.handlers:
        return logger

    handler = RotatingFileHandler(
        log_file or st.LOG_FILE, maxBytes=50 * 1024 * 1024, backupCount=1, delay=True
    )  # 50 MB, one backup
    formatter = logging.Formatter("%(asctime)s - %(levelname)s - %(message)s")
    handler.setFormatter(formatter)
    logger.addHandler(handler)

    stream = logging.StreamHandler(sys.stderr)
    stream.setLevel(logging.ERROR)
    stream.setFormatter(formatter)
    logger.addHandler(stream)
    return logger


def log_error(logger, process_name, exception):
    timestamp = time.strftime("%Y-%m-%d %H:%M:%S")
    logger.error(f"Time: {timestamp} | Process: {process_name} | Error: {str(exception)}")
    traceback_str = ''.join(traceback.format_exception(type(exception), exception, exception.__traceback__))
    logger.debug(f"Traceback:\n{traceback_str}")
