"""Run settings: defaults, an optional YAML file, then environment variables

Command-line flags are applied last by the CLI through ``Settings.override``.
"""

from dataclasses import dataclass, fields, replace
from logging import getLogger
import logging
import os
from pathlib import Path

import yaml

from vwlab.exactmath import FieldSpec

logger = getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 10 ** 6

ENV_CAP = 'VW_CAP'
ENV_LOG_LEVEL = 'VW_LOG_LEVEL'


@dataclass(frozen=True)
class Settings:
    """Resolved settings of one run

    Parameters
    ----------
    enumeration_cap : int
        Largest group order enumerated before giving up
    default_field : str
        Field used when none is given, "Q" or "GF(p)"
    log_level : str
        Name of the logging level
    log_json : bool
        Emit log records as JSON lines
    """
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    default_field: str = 'Q'
    log_level: str = 'WARNING'
    log_json: bool = False

    def __post_init__(self):
        if isinstance(self.enumeration_cap, bool) or not isinstance(self.enumeration_cap, int):
            raise ValueError(f"enumeration_cap must be an integer. Value given: {self.enumeration_cap!r}")
        if self.enumeration_cap < 1:
            raise ValueError(f"enumeration_cap must be positive. Value given: {self.enumeration_cap}")
        if not isinstance(self.default_field, str):
            raise ValueError(f"default_field must be 'Q' or 'GF(p)'. Value given: {self.default_field!r}")
        FieldSpec.parse(self.default_field)
        if not isinstance(logging.getLevelName(str(self.log_level).upper()), int):
            raise ValueError(f"log_level is not a logging level. Value given: {self.log_level!r}")
        if not isinstance(self.log_json, bool):
            raise ValueError(f"log_json must be true or false. Value given: {self.log_json!r}")

    def override(self, **changes) -> "Settings":
        """Copy with the given non-None values replaced
        """
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _parse_cap(text: str, source: str) -> int:
    try:
        return int(text)
    except ValueError as e:
        raise ValueError(f"{source} must be an integer. Value given: {text!r}") from e


def load_settings(path: str | Path | None = None, environ: dict | None = None) -> Settings:
    """Resolve settings from defaults, a YAML file and the environment

    Parameters
    ----------
    path : str | Path | None, optional
        YAML file with any of the ``Settings`` keys
    environ : dict | None, optional
        Environment to read, by default ``os.environ``

    Raises
    ------
    ValueError
        Unknown key in the file, or a value of the wrong kind
    """
    environ = os.environ if environ is None else environ
    settings = Settings()

    if path is not None:
        with open(path, encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError(f"Config file {path} must hold a mapping")
        known = {f.name for f in fields(Settings)}
        if unknown := sorted(set(data) - known):
            raise ValueError(f"Unknown config keys in {path}: {unknown}")
        settings = replace(settings, **data)
        logger.debug("Loaded settings from %s", path)

    if ENV_CAP in environ:
        settings = replace(settings, enumeration_cap=_parse_cap(environ[ENV_CAP], ENV_CAP))
    if ENV_LOG_LEVEL in environ:
        settings = replace(settings, log_level=environ[ENV_LOG_LEVEL])
    return settings
