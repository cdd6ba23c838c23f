"""U_q(sl2) configuration package."""

from uqsl2.configs.uqsl2_config import config, Uqsl2Config

__all__ = ['config', 'Uqsl2Config']
