"""
Named parameter sets and the layered SweepConfig loader.

Precedence, lowest first: preset, INI file, command-line flags. Every value
remembers where it came from so validation errors can point at it.
"""
import configparser
import logging
import re
from pathlib import Path

from pydantic import ValidationError

from config import settings
from errors.sweep import SweepConfigError
from models.sweep import SweepConfig

logger = logging.getLogger(__name__)

CONFIG_SECTION = "sweep"

# {d, tau} from the two proposed setups; dx = d / 2 and B3 = 1 T in both.
PRESETS: dict[str, dict[str, float]] = {
    "setA": {"d": 1e-8, "dx": 0.5e-8, "tau": 1e3, "B3": 1.0},
    "setB": {"d": 1e-10, "dx": 0.5e-10, "tau": 1e6, "B3": 1.0},
}

# INI key / flag name -> SweepConfig field
KEY_ALIASES: dict[str, str] = {
    "model": "models",
    "models": "models",
    "d": "d",
    "dx": "dx",
    "tau": "tau",
    "b3": "B3",
    "sigma0": "sigma0",
    "sigma0p": "sigma0p",
    "mass_min": "mass_min",
    "mass-min": "mass_min",
    "mass_max": "mass_max",
    "mass-max": "mass_max",
    "points": "points",
    "log_grid": "log_grid",
    "log-grid": "log_grid",
    "kernel": "kernel",
    "integrator": "integrator",
    "steps": "steps",
    "units": "units",
    "out": "out_csv",
    "svg": "out_svg",
}

_FLAG_NAMES: dict[str, str] = {
    "models": "--model",
    "B3": "--b3",
    "mass_min": "--mass-min",
    "mass_max": "--mass-max",
    "out_csv": "--out",
    "out_svg": "--svg",
}


def preset_names() -> list[str]:
    return sorted(PRESETS)


def flag_name(field: str) -> str:
    return _FLAG_NAMES.get(field, "--" + field.replace("_", "-"))


def _normalize(field: str, value):
    if field == "models" and isinstance(value, str):
        return [part.strip() for part in value.split(",") if part.strip()]
    return value


def _find_line(lines: list[str], key: str) -> int | None:
    pattern = re.compile(rf"^\s*{re.escape(key)}\s*[=:]", re.IGNORECASE)
    for number, line in enumerate(lines, start=1):
        if pattern.match(line):
            return number
    return None


def read_config_file(path: str | Path) -> dict[str, tuple[str, str]]:
    """
    Parse an INI-style key=value file, with or without a [sweep] header.

    Raises:
        SweepConfigError: If the file cannot be read or holds an unknown key.

    Returns:
        SweepConfig field -> (raw value, "file:line").
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SweepConfigError(f"Cannot read config file {path}: {e}")

    lines = text.splitlines()
    has_section = any(line.strip().lower() == f"[{CONFIG_SECTION}]" for line in lines)
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        parser.read_string(text if has_section else f"[{CONFIG_SECTION}]\n{text}")
    except configparser.Error as e:
        raise SweepConfigError(f"Malformed config file {path}: {e}")

    values: dict[str, tuple[str, str]] = {}
    for key, raw in parser.items(CONFIG_SECTION):
        line = _find_line(lines, key)
        where = f"{path.name}:{line}" if line is not None else path.name
        field = KEY_ALIASES.get(key.lower())
        if field is None:
            raise SweepConfigError(f"Unknown config key '{key}' ({where})")
        values[field] = (raw, where)
    return values


def _describe_errors(e: ValidationError, sources: dict[str, str]) -> str:
    messages = []
    for error in e.errors():
        field = str(error["loc"][0]) if error["loc"] else None
        if field is not None:
            messages.append(f"{field}: {error['msg']} ({sources.get(field, 'default')})")
            continue
        involved = [name for name in sources if re.search(rf"\b{name}\b", error["msg"])]
        where = ", ".join(f"{name} from {sources[name]}" for name in involved)
        messages.append(f"{error['msg']}" + (f" ({where})" if where else ""))
    return "; ".join(messages)


def load_config(
    preset: str | None = None,
    config_path: str | Path | None = None,
    flags: dict | None = None,
) -> SweepConfig:
    """
    Merge preset, config file and flags into a validated SweepConfig.

    When d is overridden but dx is not, dx follows as d / 2 like in the presets.

    Raises:
        SweepConfigError: On an unknown preset, an unreadable file, or values
            that fail validation; the message names each value's source.
    """
    values: dict = {}
    sources: dict[str, str] = {}

    preset = preset or settings.DEFAULT_PRESET
    if preset not in PRESETS:
        raise SweepConfigError(f"Unknown preset '{preset}', expected one of {preset_names()}")
    for field, value in PRESETS[preset].items():
        values[field] = value
        sources[field] = f"preset {preset}"
    values["preset"] = preset
    logger.info("Using preset %s", preset)

    layers: list[dict[str, tuple[object, str]]] = []
    if config_path is not None:
        layers.append(read_config_file(config_path))
    if flags:
        layers.append({
            field: (value, f"{flag_name(field)} (flag)")
            for field, value in flags.items()
            if value is not None
        })

    for layer in layers:
        for field, (value, where) in layer.items():
            values[field] = _normalize(field, value)
            sources[field] = where

    d_overridden = any("d" in layer for layer in layers)
    dx_given = any("dx" in layer for layer in layers)
    if d_overridden and not dx_given:
        try:
            values["dx"] = float(values["d"]) / 2.0
            sources["dx"] = f"d/2 from {sources['d']}"
        except (TypeError, ValueError):
            pass

    try:
        return SweepConfig.model_validate(values)
    except ValidationError as e:
        raise SweepConfigError(_describe_errors(e, sources))
