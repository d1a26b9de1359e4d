"""Configuration management."""

from tmtb.core.config.loader import Config, load_config

__all__ = ["Config", "load_config"]
