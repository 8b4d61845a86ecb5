import logging
from logging import FileHandler, Formatter
import os
import time

from raag.config import log_directory


def get_logger(name, level=logging.INFO, directory_name=log_directory):
    logger = logging.getLogger(name)
    logger.setLevel(level)
    # Repeated calls from the same process share one file.
    if any(isinstance(h, FileHandler) for h in logger.handlers):
        return logger

    log_name = f"{int(time.time())}_{name}.log"
    os.makedirs(directory_name, exist_ok=True)
    pathname = os.path.join(directory_name, log_name)
    logger_file_handler = FileHandler(pathname)
    logger_file_handler.setLevel(level)
    logger_file_handler.setFormatter(Formatter("%(asctime)s %(levelname)s %(message)s"))
    logger.addHandler(logger_file_handler)
    return logger
