"""Scalar configuration package."""

from scalar.configs.scalar_config import config, ScalarConfig

__all__ = ['config', 'ScalarConfig']
