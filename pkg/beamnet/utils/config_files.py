"""World configuration from `key = value` files

Values resolve in this order: explicit overrides (CLI flags), then the config file, then the
`BEAMNET_SEED` environment variable for the seed only, then the WorldConfig defaults.
"""

from collections.abc import Mapping
from pathlib import Path
from typing import Any

from dotenv import dotenv_values
from pydantic import ValidationError

from beamnet.environment import settings
from beamnet.exceptions import ConfigError
from beamnet.schemas import WorldConfig


def read_config_file(path: Path) -> dict[str, str]:
    """Parses a `key = value` file; comment lines start with `#`"""
    if not path.is_file():
        raise ConfigError(f"Config file <{path}> does not exist.")
    values = dotenv_values(path)
    missing = tuple(key for key, value in values.items() if value is None)
    if missing:
        raise ConfigError(keys=missing)
    return dict(values)


def build_world_config(values: Mapping[str, Any]) -> WorldConfig:
    """Validates raw values, naming every offending key on failure"""
    try:
        return WorldConfig.model_validate(dict(values))
    except ValidationError as e:
        keys = []
        for error in e.errors():
            key = str(error["loc"][0]) if error["loc"] else "config"
            if key not in keys:
                keys.append(key)
        problems = "; ".join(
            f"{error['loc'][0] if error['loc'] else 'config'}: {error['msg']}"
            for error in e.errors()
        )
        raise ConfigError(
            f"Invalid configuration for: {', '.join(keys)} ({problems})",
            keys=tuple(keys),
        )


def load_world_config(
    path: Path | None = None, overrides: Mapping[str, Any] | None = None
) -> WorldConfig:
    values: dict[str, Any] = {}
    if path is not None:
        values.update(read_config_file(path))
    if overrides:
        values.update({key: value for key, value in overrides.items() if value is not None})
    if "seed" not in values and settings.seed is not None:
        values["seed"] = settings.seed
    return build_world_config(values)
