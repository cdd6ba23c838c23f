"""Shared fixtures; puts the project root and src/ on sys.path like main.py does."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
for entry in (ROOT, ROOT / "src"):
    if str(entry) not in sys.path:
        sys.path.insert(0, str(entry))

from scalar import root_of_unity  # noqa: E402


@pytest.fixture(scope="session")
def root3():
    return root_of_unity(3)


@pytest.fixture(scope="session")
def root5():
    return root_of_unity(5)
