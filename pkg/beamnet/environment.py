"""Configuration settings, loaded from environment variables

Typical usage:

    from beamnet.environment import settings
"""

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class ApplicationSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="BEAMNET_")

    # Seed fallback used when neither a flag nor the config file sets one
    seed: int | None = None

    debug: bool = False

    # Default worker count for sweeps; never affects results
    jobs: int = 1
    output_dir: Path = Path("output")


# Configure settings object from environment variables
settings = ApplicationSettings()
