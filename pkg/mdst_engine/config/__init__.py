"""
Configuration management
"""

from mdst_engine.config.settings import settings

__all__ = ["settings"]
