import os
import json
import logging.config
import psutil

from . import packageConfig


class RAMLoggingFilter(logging.Filter):
    def filter(self, record):
        memory = psutil.virtual_memory()
        used_ram_gb = (memory.total - memory.available) / (1024 ** 3)
        total_ram_gb = memory.total / (1024 ** 3)
        # Add custom attributes to the log record
        record.used_ram = f"{used_ram_gb:.2f}"
        record.total_ram = f"{total_ram_gb:.2f}"

        return True


def _set_basic_logging(level):
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(message)s")


def setup_logging(default_level=logging.WARNING, env_key=packageConfig.LOG_CONFIG_ENV_KEY):
    """
    Setup logging configuration. If the environment variable env_key names a JSON dictConfig file, that file
    is used (its file handlers are placed under 'log_directory'); otherwise a basic stderr setup is used.
    """
    path = os.getenv(env_key)

    if path and os.path.exists(path):
        with open(path, "rt") as f:
            config = json.load(f)
        log_dir = config.pop('log_directory', None)
        if log_dir:
            for name in ("info_file_handler", "error_file_handler"):
                handler = config.get("handlers", {}).get(name)
                if handler:
                    handler["filename"] = os.path.join(log_dir, handler["filename"])
            if not os.path.exists(log_dir):
                os.makedirs(log_dir)
        logging.config.dictConfig(config)
        logging.info("Logging Config setup success.")
    else:
        _set_basic_logging(default_level)
        logging.debug("Logging Config path not found - using basic setup")


def override_stream_log_level(new_level):
    """
    Override the log level of the console handlers (and lower the root level if needed).

    Args:
        new_level (int): The new logging level (e.g., logging.DEBUG).
    """
    logger = logging.getLogger()
    if logger.level > new_level:
        logger.setLevel(new_level)

    for handler in logger.handlers:
        if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
            handler.setLevel(new_level)
    logging.info(f"Console log level changed to: {logging.getLevelName(new_level)}")
