"""Engine configuration and working precision.

Precision is global (it is mpmath's working precision); every numeric cache
in the package is keyed on it, so changing it never returns stale values.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import mpmath

__all__ = ["EngineConfig", "get_config", "set_config", "configure", "load_config_file"]

GUARD_DIGITS = 15
ENV_PRECISION = "HHSUM_PRECISION"


@dataclass(frozen=True)
class EngineConfig:
    precision_digits: int = 30
    oracle_max_terms: int = 10**6
    euler_truncation: int = 10**5
    default_tolerance: float = 1e-8
    # alternating-series acceleration depth (CVZ terms)
    acceleration_depth: int = 60
    # Euler-Maclaurin correction terms used for non-alternating tails
    tail_order: int = 12
    # oracle terms generated with exact rationals before switching to fixed point
    oracle_exact_terms: int = 100

    def __post_init__(self) -> None:
        if self.precision_digits < 15:
            raise ValueError("precision_digits must be >= 15")
        if self.default_tolerance <= 0:
            raise ValueError("default_tolerance must be > 0")
        for name in ("oracle_max_terms", "euler_truncation", "acceleration_depth", "tail_order"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.oracle_exact_terms < 0:
            raise ValueError("oracle_exact_terms must be >= 0")

    @property
    def working_dps(self) -> int:
        return self.precision_digits + GUARD_DIGITS

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


_CONFIG = EngineConfig()


def _apply(cfg: EngineConfig) -> None:
    mpmath.mp.dps = cfg.working_dps


def get_config() -> EngineConfig:
    return _CONFIG


def set_config(cfg: EngineConfig) -> EngineConfig:
    """Install ``cfg`` as the active configuration; returns the previous one."""
    global _CONFIG
    old = _CONFIG
    _CONFIG = cfg
    _apply(cfg)
    return old


def configure(**changes: Any) -> EngineConfig:
    """Replace selected fields of the active configuration."""
    return set_config(replace(_CONFIG, **changes))


def _coerce(name: str, value: Any) -> Any:
    kinds = {f.name: f.type for f in fields(EngineConfig)}
    if name not in kinds:
        raise ValueError(f"unknown config key {name!r}")
    if kinds[name] in ("float", float):
        return float(value)
    return int(float(value)) if isinstance(value, str) and "e" in value.lower() else int(value)


def load_config_file(path: str | os.PathLike) -> Dict[str, Any]:
    """Read a JSON object or ``key=value`` lines into a dict of config fields."""
    text = Path(path).read_text()
    stripped = text.strip()
    if stripped.startswith("{"):
        raw = json.loads(stripped)
    else:
        raw = {}
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed config line: {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            raw[key] = value
    return {k: _coerce(k, v) for k, v in raw.items()}


def config_from_sources(
    file: Optional[str] = None, env: Optional[Dict[str, str]] = None, **flags: Any
) -> EngineConfig:
    """Defaults < config file < HHSUM_PRECISION < explicit flags (None is ignored)."""
    values: Dict[str, Any] = {}
    if file:
        values.update(load_config_file(file))
    env = os.environ if env is None else env
    if env.get(ENV_PRECISION):
        values["precision_digits"] = int(env[ENV_PRECISION])
    values.update({k: v for k, v in flags.items() if v is not None})
    return replace(EngineConfig(), **values)


_apply(_CONFIG)
