"""
Skein Configuration Package
"""

from skein.configs.skein_config import config, SkeinConfig

__all__ = ['config', 'SkeinConfig']
