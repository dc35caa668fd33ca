"""Analysis configuration: truncation ceiling, sampling, cross-checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

import sympy as sp


def _default_samples():
    return (sp.Rational(1), sp.Rational(-1, 2), sp.Rational(1, 3))


def _default_retry_pool():
    return (
        sp.Rational(2),
        sp.Rational(-1, 3),
        sp.Rational(3),
        sp.Rational(5, 2),
        sp.Rational(-2),
        sp.Rational(1, 5),
    )


@dataclass(frozen=True)
class AnalysisConfig:
    truncation_ceiling: int = 64
    seed: int = 1789
    m0_samples: int = 3
    t_samples: tuple = field(default_factory=_default_samples)
    t_retry_pool: tuple = field(default_factory=_default_retry_pool)
    crosscheck: bool = True
    cache_dir: str = None

    def with_overrides(self, **kwargs):
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **kwargs)


def parse_samples(text: str):
    """Parse a comma-separated list of rationals, e.g. "1,-1/2,1/3"."""
    values = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if chunk:
            values.append(sp.Rational(chunk))
    if not values:
        raise ValueError("empty sample list")
    return tuple(values)


def load_config_file(path) -> dict:
    """Read the optional JSON config file into override kwargs."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    out = {}
    if "truncation_ceiling" in doc:
        out["truncation_ceiling"] = int(doc["truncation_ceiling"])
    if "seed" in doc:
        out["seed"] = int(doc["seed"])
    if "m0_samples" in doc:
        out["m0_samples"] = int(doc["m0_samples"])
    if "samples" in doc:
        out["t_samples"] = parse_samples(str(doc["samples"]))
    if "crosscheck" in doc:
        out["crosscheck"] = bool(doc["crosscheck"])
    if "cache_dir" in doc:
        out["cache_dir"] = str(doc["cache_dir"])
    return out
