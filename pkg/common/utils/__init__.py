"""
Utilities Package

Cross-platform path helpers used by logging and by the report writer.

Usage:
    from common.utils import resolve_path, ensure_directory, default_report_path

    path = default_report_path("presentation", 2, 3, "reports")
"""

from .file_sys_utils import (
    resolve_path,
    ensure_directory,
    get_project_root,
    sanitize_filename,
    default_report_path,
)

__all__ = [
    "resolve_path",
    "ensure_directory",
    "get_project_root",
    "sanitize_filename",
    "default_report_path",
]
