"""
Common configuration module.

Application-wide settings: safe bounds, runtime settings, dependency-check flags.
"""

from .config_app import config, AppConfig, DependencyCheckFlags, SafeBounds, RuntimeSettings

__all__ = ['config', 'AppConfig', 'DependencyCheckFlags', 'SafeBounds', 'RuntimeSettings']
