"""Catalog of classical germs and families, with expected invariant
fragments for the self-test."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: dict  # germ-file JSON shape
    expected: dict = field(default_factory=dict)  # invariant fragment
    kind: str = "germ"  # "germ" | "family"


ENTRIES = (
    CatalogEntry(
        name="immersion",
        spec={"name": "immersion", "components": ["x", "y", "0"]},
        expected={
            "C": 0, "T": 0, "mu_D2": 0, "mu_D2tilde": 0,
            "mu_D2tilde_mod_S2": 0, "mu_image": 0, "euler": 1, "m0": 1,
        },
    ),
    CatalogEntry(
        name="crosscap",
        spec={"name": "crosscap", "components": ["x", "y^2", "x*y"]},
        expected={
            "C": 1, "T": 0, "mu_D2": 0, "mu_D2tilde": 0,
            "mu_D2tilde_mod_S2": 0, "mu_image": 0, "euler": 1, "m0": 2,
        },
    ),
    CatalogEntry(
        name="S1",
        spec={"name": "S1", "components": ["x", "y^2", "y^3 + x^2*y"]},
        expected={
            "C": 2, "T": 0, "mu_D2": 1, "mu_D2tilde": 1,
            "mu_D2tilde_mod_S2": 0, "mu_image": 1, "euler": 2, "m0": 2,
        },
    ),
    CatalogEntry(
        name="S2",
        spec={"name": "S2", "components": ["x", "y^2", "y^3 + x^3*y"]},
        expected={
            "C": 3, "T": 0, "mu_D2": 2, "mu_D2tilde": 2,
            "mu_D2tilde_mod_S2": 0, "mu_image": 2, "euler": 3, "m0": 2,
        },
    ),
    CatalogEntry(
        name="H2",
        spec={"name": "H2", "components": ["x", "y^3", "x*y + y^5"]},
        expected={
            "C": 2, "T": 1, "mu_D2": 7, "mu_D2tilde": 1,
            "mu_D2tilde_mod_S2": 0, "mu_image": 2, "euler": 3, "m0": 3,
        },
    ),
    CatalogEntry(
        name="family-trivial",
        spec={
            "name": "family-trivial",
            "parameter": "t",
            "components": ["x", "y^2", "x*y + t*y^3"],
        },
        expected={"mu_constant": True, "excellent": True, "m0_constant": True},
        kind="family",
    ),
    CatalogEntry(
        name="family-S2-smoothing",
        spec={
            "name": "family-S2-smoothing",
            "parameter": "t",
            "components": ["x", "y^2", "y^3 + x^3*y + t*x*y"],
        },
        expected={
            "mu_constant": False,
            "mu_D2_generic": 0,
            "mu_D2_special": 2,
        },
        kind="family",
    ),
    CatalogEntry(
        name="family-mu-constant",
        spec={
            "name": "family-mu-constant",
            "parameter": "t",
            "components": ["x", "y^2", "y^3 + x^2*y + t*x^4*y"],
        },
        expected={
            "mu_constant": True,
            "mu_D2_generic": 1,
            "mu_D2_special": 1,
            "m0_constant": True,
        },
        kind="family",
    ),
)


def get_entry(name: str) -> CatalogEntry:
    for entry in ENTRIES:
        if entry.name == name:
            return entry
    raise KeyError(name)


def entry_names():
    return tuple(e.name for e in ENTRIES)
