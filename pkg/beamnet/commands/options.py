"""Flags shared by the subcommands

Every WorldConfig field gets exactly one `--field-name` flag whose help text is the field
description. Flags default to unset so that only values the user typed override the config file.
"""

import argparse
import logging
from collections.abc import Collection
from pathlib import Path

from beamnet import __version__
from beamnet.environment import settings
from beamnet.exceptions import ArtifactError
from beamnet.schemas import RunManifest, WorldConfig
from beamnet.utils.config_files import load_world_config
from beamnet.utils.formats import write_text

logger = logging.getLogger(__name__)

# Extra spellings for fields people type often
FLAG_ALIASES = {"node_count": ["--n"]}

PRECEDENCE = (
    "Values resolve as: command-line flag, then the --config file, then BEAMNET_SEED "
    "(seed only), then the built-in default."
)


def flag_name(field: str) -> str:
    return "--" + field.replace("_", "-")


def add_common_options(parser: argparse.ArgumentParser, suppress: bool = False):
    """`--verbose` and `--config`, accepted before or after the subcommand"""
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--verbose",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="log at DEBUG level",
    )
    parser.add_argument(
        "--config",
        type=Path,
        default=default,
        metavar="FILE",
        help="plain-text `key = value` world configuration",
    )


def add_world_options(parser: argparse.ArgumentParser, exclude: Collection[str] = ()):
    group = parser.add_argument_group("world configuration")
    for name, field in WorldConfig.model_fields.items():
        if name in exclude:
            continue
        group.add_argument(
            *FLAG_ALIASES.get(name, []),
            flag_name(name),
            dest=name,
            default=None,
            metavar=name.upper(),
            help=f"{field.description} (default: {field.default})",
        )


def add_output_option(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--output-dir",
        type=Path,
        default=None,
        help=f"directory receiving every artifact (default: {settings.output_dir})",
    )


def resolve_config(args: argparse.Namespace) -> WorldConfig:
    overrides = {
        name: getattr(args, name, None) for name in WorldConfig.model_fields
    }
    return load_world_config(getattr(args, "config", None), overrides)


def prepare_output_dir(path: Path | None) -> Path:
    output_dir = path or settings.output_dir
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ArtifactError(f"Unable to create output directory <{output_dir}>: {e}")
    return output_dir


def write_manifest(
    config: WorldConfig, command: str, output_dir: Path, **parameters
) -> RunManifest:
    manifest = RunManifest(
        config=config,
        command=command,
        output_dir=str(output_dir),
        version=__version__,
        parameters=parameters,
    )
    write_text(output_dir / "manifest.json", manifest.model_dump_json(indent=2) + "\n")
    logger.debug(f"Wrote manifest for <{command}> to <{output_dir}>")
    return manifest
