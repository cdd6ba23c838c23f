"""
Path Utilities Module

Path handling shared by the harness: project root detection (including frozen
executables), directory creation, relative path resolution and the default
location of JSON reports.

Version: 1.0.0
"""

import re
import sys
from pathlib import Path
from typing import Optional, Union


def get_project_root() -> Path:
    """
    Get the project root directory.

    When frozen by PyInstaller, returns the directory containing the executable;
    otherwise the directory two levels above common/utils/.

    Raises:
        OSError: If the project root cannot be determined
    """
    try:
        if getattr(sys, 'frozen', False):
            return Path(sys.executable).resolve().parent
        return Path(__file__).resolve().parent.parent.parent
    except Exception as e:
        raise OSError(f"Failed to determine project root directory: {e}")


def resolve_path(path_input: Union[str, Path], base_dir: Optional[Path] = None) -> Path:
    """
    Resolve a path against base_dir (default: project root).

    Absolute paths are returned resolved; relative paths are joined to base_dir.

    Args:
        path_input (Union[str, Path]): Input path
        base_dir (Optional[Path]): Base for relative paths

    Returns:
        Path: Absolute path

    Raises:
        ValueError: If path_input is empty
        OSError: If resolution fails

    Example:
        >>> resolve_path("reports/all_n1_l3.json")
        PosixPath('/path/to/project/reports/all_n1_l3.json')
    """
    if path_input is None or str(path_input).strip() == "":
        raise ValueError("Path input cannot be empty")
    try:
        base = get_project_root() if base_dir is None else Path(base_dir)
        candidate = Path(path_input)
        if candidate.is_absolute():
            return candidate.resolve()
        return (base / candidate).resolve()
    except Exception as e:
        raise OSError(f"Failed to resolve path '{path_input}': {e}")


def ensure_directory(directory_path: Union[str, Path]) -> Path:
    """
    Create a directory and its parents if missing; safe to call repeatedly.

    Raises:
        ValueError: If the path is empty
        OSError: If the directory cannot be created
    """
    if not str(directory_path).strip():
        raise ValueError("Directory path cannot be empty")
    directory = Path(directory_path)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except Exception as e:
        raise OSError(f"Failed to ensure directory '{directory}': {e}")
    return directory


def sanitize_filename(filename: str, replacement: str = "_") -> str:
    """
    Replace characters that are unsafe in file names.

    Example:
        >>> sanitize_filename("threading n=2 l=3")
        'threading_n_2_l_3'
    """
    cleaned = re.sub(r"[^A-Za-z0-9._-]+", replacement, filename.strip())
    cleaned = cleaned.strip(replacement + ".")
    if not cleaned:
        raise ValueError(f"Filename '{filename}' has no usable characters")
    return cleaned


def default_report_path(suite: str, n: int, l: int, report_dir: Union[str, Path]) -> Path:
    """Default JSON report location for a suite run, e.g. reports/presentation_n2_l3.json."""
    directory = ensure_directory(resolve_path(report_dir))
    return directory / f"{sanitize_filename(f'{suite}_n{n}_l{l}')}.json"
