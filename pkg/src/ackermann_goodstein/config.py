"""Configuration management using pydantic-settings.

Settings can be configured via environment variables or .env file.
All environment variables are prefixed with GOODSTEIN_.
"""

from typing import Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit configuration.

    All settings can be overridden via environment variables
    prefixed with GOODSTEIN_ (e.g., GOODSTEIN_MAX_DIGITS, GOODSTEIN_LOG_LEVEL).
    """

    model_config = SettingsConfigDict(
        env_prefix="GOODSTEIN_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Evaluation budget
    max_digits: int = Field(
        default=100_000,
        gt=0,
        description="Cap on the decimal length of any intermediate value",
    )
    max_calls: int = Field(
        default=10_000_000,
        gt=0,
        description="Cap on fresh Ackermann unfoldings per evaluation",
    )
    max_term_size: int = Field(
        default=200_000,
        gt=0,
        description="Cap on the node count of symbolically produced terms",
    )

    # Caching
    memo_size: int = Field(
        default=65_536,
        gt=0,
        description="Capacity of the shared Ackermann value cache",
    )
    nf_cache_size: int = Field(
        default=262_144,
        gt=0,
        description="Capacity of the normal form cache",
    )

    # Experiments
    random_seed: int = Field(
        default=20240101,
        description="Default RNG seed for sampled verification suites",
    )
    default_max_steps: int = Field(
        default=64,
        gt=0,
        description="Default step cap for Goodstein runs and stepdowns",
    )

    # Logging
    log_level: str = Field(
        default="INFO",
        description="Log level (DEBUG, INFO, WARNING, ERROR)",
    )
    log_format: Literal["json", "text"] = Field(
        default="text",
        description="Log format (json for experiment logs, text for terminals)",
    )


# Global settings instance (lazy loaded)
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the global settings instance.

    Settings are loaded once and cached.

    Returns:
        Settings instance

    Example:
        >>> settings = get_settings()
        >>> print(settings.max_digits)
        100000
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reload_settings() -> Settings:
    """Force reload settings from environment.

    Useful for testing or after environment changes.

    Returns:
        Fresh Settings instance
    """
    global _settings
    _settings = Settings()
    return _settings
