"""Quantum coadjoint action configuration package."""

from qca.configs.qca_config import config, QcaConfig

__all__ = ['config', 'QcaConfig']
