"""
Helpers for experiment configuration: preset discovery and config files.
"""

import hashlib
import os

from pydantic import ValidationError

from app.core.exceptions import ConfigurationException
from app.core.yml_parser import YmlFileParser
from app.models.experiment import ExperimentConfig
from app.modules.logger import rig_logger
from settings import get_settings

settings = get_settings()

ALLOWED_FILE_FORMATS = ("yml", "yaml")


def config_from_dict(document: dict, source: str) -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(document)
    except ValidationError as e:
        raise ConfigurationException(f"invalid experiment config in {source}: {e}") from e


def load_presets(presets_dir: str | None = None) -> dict[str, ExperimentConfig]:
    """
    Loads every experiment preset found in the presets directory.

    Presets that fail to parse or validate are skipped with a warning.

    Args:
        presets_dir (str | None): Directory to scan, PRESETS_DIR by default

    Returns:
        dict[str, ExperimentConfig]: Presets by name
    """
    presets_dir = presets_dir or settings.PRESETS_DIR
    presets: dict[str, ExperimentConfig] = {}
    for root, _, files in os.walk(presets_dir):
        for file in sorted(files):
            if not file.endswith(ALLOWED_FILE_FORMATS):
                continue
            file_path = os.path.join(root, file)
            try:
                for document in YmlFileParser.parse(file_path):
                    config = config_from_dict(document, file_path)
                    if config.name in presets:
                        rig_logger.warning(f"[Presets] duplicate preset name {config.name!r} in {file_path}, skipped")
                        continue
                    presets[config.name] = config
            except ConfigurationException as e:
                rig_logger.warning(f"[Presets] {e}")
    rig_logger.debug(f"[Presets] loaded {len(presets)} presets from {presets_dir}")
    return presets


def get_preset(name: str, presets_dir: str | None = None) -> ExperimentConfig:
    """
    Looks a preset up by name.

    Raises:
        ConfigurationException: If no preset has that name
    """
    presets = load_presets(presets_dir)
    if name not in presets:
        available = ", ".join(sorted(presets)) or "none"
        raise ConfigurationException(f"unknown preset {name!r} (available: {available})")
    return presets[name]


def load_config(path: str) -> ExperimentConfig:
    """
    Loads a single experiment config from a JSON or YAML file.

    Raises:
        ConfigurationException: If the file is unreadable, holds more or less than one document, or fails validation
    """
    documents = list(YmlFileParser.parse(path))
    if len(documents) != 1:
        raise ConfigurationException(f"{path}: expected exactly one config document, got {len(documents)}")
    return config_from_dict(documents[0], path)


def config_hash(config: ExperimentConfig) -> str:
    """SHA-256 of the canonical JSON form of a config."""
    return hashlib.sha256(config.model_dump_json().encode("utf-8")).hexdigest()
