"""
Logging Utilities Package

Centralized logging configuration shared by every package of the harness.

Usage:
    from common.logging_utils import get_logger, set_console_level

    logger = get_logger('graphalg')
    logger.info('Checking exchange relations...')
    set_console_level(logger, 'DEBUG')
"""

from .logging_config import (
    get_logger,
    set_console_level,
    LOGGING_CONFIG,
    DEFAULT_LOG_DIR,
    DEFAULT_LOG_FORMAT,
    DEFAULT_DATE_FORMAT,
)

__all__ = [
    'get_logger',
    'set_console_level',
    'LOGGING_CONFIG',
    'DEFAULT_LOG_DIR',
    'DEFAULT_LOG_FORMAT',
    'DEFAULT_DATE_FORMAT',
]
