"""Runtime settings: builtin defaults, config file, environment, flags.

Resolution order for each key is flag > environment > config file > builtin.
The config file is TOML-like ``key = value`` lines with ``#`` comments; it is
read from an explicit ``--config`` path, else ``./mzvlab.conf`` when present.
Only the cutoff has an environment override (``MZVLAB_CUTOFF``).
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Mapping

from .numerics import DEFAULT_CUTOFF, DEFAULT_TOL, DIRICHLET_CUTOFF, INNER_CUTOFF

__all__ = ["ConfigError", "DEFAULTS", "read_config_file", "load_settings", "resolve"]

DEFAULT_CONFIG_NAME = "mzvlab.conf"

DEFAULTS: dict[str, float | int] = {
    "cutoff": DEFAULT_CUTOFF,
    "tol": DEFAULT_TOL,
    "max_weight": 6,
    "inner_cutoff": INNER_CUTOFF,
    "dirichlet_cutoff": DIRICHLET_CUTOFF,
}

_PARSERS = {
    "cutoff": int,
    "tol": float,
    "max_weight": int,
    "inner_cutoff": int,
    "dirichlet_cutoff": int,
}


class ConfigError(ValueError):
    """Malformed config file or value."""


def _parse_value(key: str, raw: str, where: str) -> float | int:
    try:
        return _PARSERS[key](raw)
    except ValueError:
        raise ConfigError(f"{where}: bad value {raw!r} for {key}") from None


def read_config_file(path: str | Path) -> dict[str, float | int]:
    """Parse key = value lines; unknown keys and bad values are errors."""
    out: dict[str, float | int] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected key = value, got {line!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        if key not in DEFAULTS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = _parse_value(key, raw.strip(), f"{path}:{lineno}")
    return out


def load_settings(
    config_path: str | None = None,
    env: Mapping[str, str] | None = None,
) -> dict[str, float | int]:
    """Defaults overlaid with the config file, then environment overrides."""
    env = os.environ if env is None else env
    settings = dict(DEFAULTS)
    path = config_path
    if path is None and Path(DEFAULT_CONFIG_NAME).is_file():
        path = DEFAULT_CONFIG_NAME
    if path is not None:
        if not Path(path).is_file():
            raise ConfigError(f"config file not found: {path}")
        settings.update(read_config_file(path))
    if "MZVLAB_CUTOFF" in env:
        settings["cutoff"] = _parse_value("cutoff", env["MZVLAB_CUTOFF"], "MZVLAB_CUTOFF")
    return settings


def resolve(settings: Mapping[str, float | int], key: str, flag_value):
    """Explicit flag wins; otherwise the loaded settings value."""
    return settings[key] if flag_value is None else flag_value
