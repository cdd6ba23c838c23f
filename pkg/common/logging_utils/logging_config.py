"""
Logging Configuration Module

Centralized logging for the verification harness and the algebra packages.
Every package asks for its logger by name; names, file targets and output
switches live in LOGGING_CONFIG so a run can be made quiet or chatty without
touching the computation code.

Key Features:
- Per-package logger configuration merged over global defaults
- Separate console and file levels
- Size-based rotation of log files
- Platform-specific log locations (Windows: AppData\\Local, elsewhere: project root)
- Console level adjustable at runtime (used by the CLI --verbose flag)

Configuration Structure:
- LOGGING_CONFIG: defaults plus per-logger overrides
- DEFAULT_LOG_DIR / DEFAULT_LOG_FORMAT / DEFAULT_DATE_FORMAT

Version: 1.0.0
"""

import logging
import logging.handlers
import os
import sys
from pathlib import Path
from typing import Optional


# ============================================================================
# LOGGING CONFIGURATION
# ============================================================================
def _package_logger(filename: str) -> dict:
    return {"log_filename": filename, "console_output": True, "file_output": True}


LOGGING_CONFIG = {
    "defaults": {
        "console_level": "WARNING",
        "file_level": "WARNING",
        "console_output": True,
        "file_output": True,
        "rotation": {
            "mode": "size",
            "max_bytes": 10 * 1024 * 1024,  # 10MB
            "backup_count": 7
        }
    },
    "loggers": {
        # Coefficient tower
        "scalar": _package_logger("scalar.log"),
        # U_q(sl2) normal forms and Verma oracle
        "uqsl2": _package_logger("uqsl2.log"),
        # Modules, R-matrix, quantum traces
        "repv": _package_logger("repv.log"),
        # Graph algebra and Alekseev embedding
        "graphalg": _package_logger("graphalg.log"),
        # Root-of-unity centre and Frobenius
        "rootcenter": _package_logger("rootcenter.log"),
        # Quantum coadjoint derivations
        "qca": _package_logger("qca.log"),
        # Classical brackets
        "poisson": _package_logger("poisson.log"),
        # Skein bridge
        "skein": _package_logger("skein.log"),
        # Suite runner
        "harness": _package_logger("harness.log"),
        "harness_cli": _package_logger("harness_cli.log"),
        # Startup dependency check
        "dependency_checker": _package_logger("dependency_checker.log"),
        # Main entry point
        "main": _package_logger("main.log"),
    },
    "strict_config": False  # if True, unknown logger names raise an error
}

# ============================================================================
# DEFAULT SETTINGS
# ============================================================================
DEFAULT_LOG_DIR = "logs"
DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
APP_NAME = "L-graph-algebra"


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================

def determine_log_dir(base_dir: Optional[Path] = None) -> Path:
    """
    Resolve the log directory.

    Args:
        base_dir (Optional[Path]): Explicit directory; wins over everything else.

    Returns:
        Path: LOCALAPPDATA/APP_NAME/logs on Windows, <project root>/logs elsewhere.
    """
    if base_dir is not None:
        return Path(base_dir)

    if os.name == 'nt':
        localappdata = os.environ.get('LOCALAPPDATA')
        if localappdata:
            return Path(localappdata) / APP_NAME / "logs"

    # Imported here to avoid a circular import with common.utils
    from common.utils.file_sys_utils import get_project_root
    return get_project_root() / DEFAULT_LOG_DIR


def create_rotating_file_handler(
    log_path: Path,
    level: str,
    max_bytes: int,
    backup_count: int
) -> logging.handlers.RotatingFileHandler:
    """Create a size-based rotating file handler, creating the directory if needed."""
    log_path.parent.mkdir(parents=True, exist_ok=True)

    handler = logging.handlers.RotatingFileHandler(
        log_path,
        maxBytes=max_bytes,
        backupCount=backup_count,
        encoding='utf-8'
    )
    handler.setLevel(getattr(logging, level.upper()))
    return handler


def set_console_level(logger: logging.Logger, level: str) -> None:
    """
    Change the console handler level of an existing logger.

    File handlers keep their level.

    Example:
        >>> logger = get_logger('harness')
        >>> set_console_level(logger, 'DEBUG')
    """
    log_level = getattr(logging, level.upper())

    for handler in logger.handlers:
        if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
            handler.setLevel(log_level)


def get_logger(
    logger_name: str,
    log_dir: Optional[Path] = None,
    console_level: Optional[str] = None,
    file_level: Optional[str] = None,
) -> logging.Logger:
    """
    Get or create a configured logger with console and rotating file handlers.

    Defaults from LOGGING_CONFIG are merged with the per-logger entry, then with
    the explicit arguments. A logger that already has handlers is returned as is.

    Args:
        logger_name (str): Name of the logger (a key of LOGGING_CONFIG["loggers"])
        log_dir (Optional[Path]): Directory for log files
        console_level (Optional[str]): Console level override
        file_level (Optional[str]): File level override

    Returns:
        logging.Logger: Configured logger instance

    Raises:
        ValueError: If strict_config is enabled and logger_name is unknown
    """
    defaults = LOGGING_CONFIG.get("defaults", {})
    known = LOGGING_CONFIG.get("loggers", {})
    logger_config = known.get(logger_name, {})
    strict_config = LOGGING_CONFIG.get("strict_config", False)

    if logger_name not in known:
        if strict_config:
            raise ValueError(f"Logger '{logger_name}' not found in configuration and strict_config is enabled")
        # Warn only once per unknown logger
        if not hasattr(get_logger, '_warned_loggers'):
            get_logger._warned_loggers = set()
        if logger_name not in get_logger._warned_loggers:
            print(f"WARNING: Logger '{logger_name}' not in configuration, using defaults")
            get_logger._warned_loggers.add(logger_name)

    settings = {**defaults, **logger_config}
    if console_level is not None:
        settings["console_level"] = console_level
    if file_level is not None:
        settings["file_level"] = file_level
    if log_dir is not None:
        settings["log_dir"] = log_dir

    logger = logging.getLogger(logger_name)

    if not logger.handlers:
        logger.setLevel(logging.DEBUG)  # handlers filter
        logger.propagate = False

        formatter = logging.Formatter(fmt=DEFAULT_LOG_FORMAT, datefmt=DEFAULT_DATE_FORMAT)

        if settings.get("console_output", True):
            console_handler = logging.StreamHandler(sys.stdout)
            console_handler.setLevel(getattr(logging, settings["console_level"].upper()))
            console_handler.setFormatter(formatter)
            logger.addHandler(console_handler)

        if settings.get("file_output", True):
            target_dir = determine_log_dir(settings.get("log_dir"))
            log_file = target_dir / settings.get("log_filename", f"{logger_name}.log")
            rotation = settings.get("rotation", {})
            file_handler = create_rotating_file_handler(
                log_file,
                settings["file_level"],
                rotation.get("max_bytes", 10 * 1024 * 1024),
                rotation.get("backup_count", 7),
            )
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

    return logger
