"""
Harness Configuration Package
"""

from harness.configs.harness_config import config, SuiteConfig, SUITE_NAMES

__all__ = ['config', 'SuiteConfig', 'SUITE_NAMES']
