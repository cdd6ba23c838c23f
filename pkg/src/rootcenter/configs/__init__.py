"""Root-of-unity center configuration package."""

from rootcenter.configs.rootcenter_config import config, RootCenterConfig

__all__ = ['config', 'RootCenterConfig']
