"""Experiment configuration: the symbol, the seed, and the resolutions.

A config pins everything a run depends on - truncation order N, orbit
length K, boundary grid M (anti-aliasing requires M > 4N), and the
tolerances - so that identical configs produce byte-identical reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .jsonio import complex_to_json, json_to_complex
from .symbols import SymbolSpec


class ConfigError(ValueError):
    """Invalid experiment configuration or malformed config file."""


@dataclass(frozen=True)
class ToleranceSettings:
    inner_tol: float = 1e-9
    rank_tol: float = 1e-10
    eig_tol: float = 1e-10

    def __post_init__(self):
        for name in ("inner_tol", "rank_tol", "eig_tol"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")


@dataclass(frozen=True)
class OutputSettings:
    format: str = "json"
    path: str | None = None

    def __post_init__(self):
        if self.format not in ("json", "csv"):
            raise ConfigError(f"unknown output format {self.format!r}")


@dataclass(frozen=True)
class ExperimentConfig:
    symbol: SymbolSpec
    seed_coeffs: tuple = (1.0 + 0j,)
    truncation_order: int = 64
    orbit_length: int = 64
    boundary_grid: int = 512
    tolerances: ToleranceSettings = field(default_factory=ToleranceSettings)
    output: OutputSettings = field(default_factory=OutputSettings)

    def __post_init__(self):
        if self.truncation_order < 1:
            raise ConfigError("truncation_order must be >= 1")
        if self.orbit_length < 1:
            raise ConfigError("orbit_length must be >= 1")
        if self.boundary_grid <= 4 * self.truncation_order:
            raise ConfigError(
                f"boundary_grid {self.boundary_grid} too small: "
                f"need M > 4N = {4 * self.truncation_order}"
            )
        coeffs = tuple(complex(c) for c in self.seed_coeffs)
        if not coeffs:
            raise ConfigError("seed_coeffs must be nonempty")
        if not all(np.isfinite(c.real) and np.isfinite(c.imag) for c in coeffs):
            raise ConfigError("seed_coeffs must be finite")
        object.__setattr__(self, "seed_coeffs", coeffs)


# -- symbol spec <-> JSON ---------------------------------------------------


def symbol_spec_to_json(spec: SymbolSpec) -> dict:
    out: dict = {"kind": spec.kind}
    if spec.kind in ("constant", "scaled_shift"):
        out["value"] = complex_to_json(spec.value)
    elif spec.kind == "monomial":
        out["power"] = spec.power
    elif spec.kind == "polynomial":
        out["coeffs"] = [complex_to_json(c) for c in spec.coeffs]
    elif spec.kind == "blaschke":
        out["zeros"] = [complex_to_json(a) for a in spec.zeros]
        out["prefactor"] = complex_to_json(spec.prefactor)
    return out


def symbol_spec_from_json(obj: dict) -> SymbolSpec:
    try:
        kind = obj["kind"]
        if kind == "constant":
            return SymbolSpec.constant(json_to_complex(obj["value"]))
        if kind == "scaled_shift":
            return SymbolSpec.scaled_shift(json_to_complex(obj["value"]))
        if kind == "monomial":
            return SymbolSpec.monomial(int(obj["power"]))
        if kind == "polynomial":
            return SymbolSpec.polynomial([json_to_complex(c) for c in obj["coeffs"]])
        if kind == "blaschke":
            return SymbolSpec.blaschke(
                [json_to_complex(a) for a in obj["zeros"]],
                prefactor=json_to_complex(obj.get("prefactor", {"re": 1.0, "im": 0.0})),
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed symbol spec: {exc}") from exc
    raise ConfigError(f"unknown symbol kind {obj.get('kind')!r}")


# -- experiment config <-> JSON ---------------------------------------------


def config_to_json(cfg: ExperimentConfig) -> dict:
    return {
        "symbol": symbol_spec_to_json(cfg.symbol),
        "seed_coeffs": [complex_to_json(c) for c in cfg.seed_coeffs],
        "truncation_order": cfg.truncation_order,
        "orbit_length": cfg.orbit_length,
        "boundary_grid": cfg.boundary_grid,
        "tolerances": {
            "inner_tol": cfg.tolerances.inner_tol,
            "rank_tol": cfg.tolerances.rank_tol,
            "eig_tol": cfg.tolerances.eig_tol,
        },
        "output": {"format": cfg.output.format, "path": cfg.output.path},
    }


def config_from_json(obj: dict) -> ExperimentConfig:
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    try:
        tol = obj.get("tolerances", {})
        out = obj.get("output", {})
        return ExperimentConfig(
            symbol=symbol_spec_from_json(obj["symbol"]),
            seed_coeffs=tuple(json_to_complex(c) for c in obj["seed_coeffs"]),
            truncation_order=int(obj["truncation_order"]),
            orbit_length=int(obj["orbit_length"]),
            boundary_grid=int(obj["boundary_grid"]),
            tolerances=ToleranceSettings(
                inner_tol=float(tol.get("inner_tol", 1e-9)),
                rank_tol=float(tol.get("rank_tol", 1e-10)),
                eig_tol=float(tol.get("eig_tol", 1e-10)),
            ),
            output=OutputSettings(
                format=out.get("format", "json"), path=out.get("path")
            ),
        )
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed config: {exc}") from exc


def load_config(path) -> ExperimentConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return config_from_json(obj)
