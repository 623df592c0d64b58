"""Logging configuration for hybrid_switch."""

import sys

from loguru import logger

from hybrid_switch.config import LOG_LEVEL


def configure_logging(level=LOG_LEVEL, sink=sys.stderr, format="{level: <9} {message}"):
    """
    Configures the Loguru logger.

    This function removes the default Loguru handler and adds a new one with
    the specified parameters. Standard output is left untouched so CLI results
    stay machine-parseable.

    Args:
        level (str, optional): The minimum logging level to output.
            Defaults to ``HYBRID_SWITCH_LOG_LEVEL`` or "INFO".
        sink (file-like object, optional): The destination for logs.
            Defaults to `sys.stderr`.
        format (str, optional): The Loguru format string for the log messages.
            Defaults to "{level: <9} {message}".

    Returns:
        The configured logger instance.
    """
    logger.remove()
    logger.add(sink, format=format, level=level)
    return logger


__all__ = ["logger", "configure_logging"]
