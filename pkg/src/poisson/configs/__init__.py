"""Poisson configuration package."""

from poisson.configs.poisson_config import config, PoissonConfig

__all__ = ['config', 'PoissonConfig']
