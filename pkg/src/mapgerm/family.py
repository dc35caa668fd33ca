"""One-parameter families: generic-parameter invariants over Q(t),
specialization, and the equisingularity verdicts."""

from __future__ import annotations

from dataclasses import dataclass

import sympy as sp

from .config import AnalysisConfig
from .errors import (
    InternalContradiction,
    NotFinitelyDetermined,
    PoleAtSample,
)
from .germ import MapGerm, Unfolding
from .invariants import InvariantReport, invariant_report
from .rings import Ring, T, X, Y


@dataclass(frozen=True)
class ConditionResult:
    name: str
    holds: bool
    pairs: tuple  # ((invariant, generic, special), ...)


@dataclass(frozen=True)
class FamilyVerdict:
    report_generic: InvariantReport
    report_special: InvariantReport
    sample_reports: tuple  # ((t-value, InvariantReport), ...)
    mu_constant: bool
    topologically_trivial: bool
    whitney_equisingular: bool
    bilipschitz_trivial: bool
    excellent: bool
    equivalent_conditions: tuple  # four ConditionResult entries
    m0_constant: bool
    diagnostics: tuple = ()


def specialize(u: Unfolding, t0) -> MapGerm:
    """Exact substitution t = t0."""
    t0 = sp.Rational(t0)
    comps = []
    for c in u.components:
        c = sp.together(sp.sympify(c))
        _, den = sp.fraction(c)
        if sp.simplify(den.subs(T, t0)) == 0:
            raise PoleAtSample(f"pole at sample t = {t0}")
        comps.append(sp.expand(c.subs(T, t0)))
    return MapGerm(components=tuple(comps), ring=Ring((X, Y)), name=u.name)


def generic_report(u: Unfolding, cfg: AnalysisConfig = None, with_m0=True) -> InvariantReport:
    """Invariants over the rational-function field Q(t): exact values for
    all but finitely many t."""
    return invariant_report(u, cfg, with_m0=with_m0)


def _pair(name, generic: InvariantReport, special: InvariantReport):
    return (
        name,
        getattr(generic, name),
        getattr(special, name),
    )


def _evaluate_conditions(generic: InvariantReport, special: InvariantReport):
    """The four equivalent constancy conditions, each from its own
    invariant pairs."""
    defs = (
        ("mu(D2) constant", ("mu_d2",)),
        ("mu(D2~) and T constant", ("mu_d2tilde", "triple_points")),
        ("mu(D2~/S2), C and T constant", ("mu_d2tilde_mod_s2", "crosscaps", "triple_points")),
        ("mu_image constant", ("mu_image",)),
    )
    out = []
    for name, fields in defs:
        pairs = tuple(_pair(f, generic, special) for f in fields)
        holds = all(gv == sv for _, gv, sv in pairs)
        out.append(ConditionResult(name=name, holds=holds, pairs=pairs))
    return tuple(out)


_SEMICONTINUOUS_FIELDS = (
    "crosscaps",
    "triple_points",
    "mu_d2",
    "mu_d2tilde",
    "mu_d2tilde_mod_s2",
    "mu_image",
)


def family_verdict(u: Unfolding, cfg: AnalysisConfig = None, with_m0=True) -> FamilyVerdict:
    cfg = cfg or AnalysisConfig()
    generic = generic_report(u, cfg, with_m0=with_m0)
    special = invariant_report(specialize(u, 0), cfg, with_m0=with_m0)
    if not generic.finitely_determined_proxy:
        raise NotFinitelyDetermined("family not finitely determined near 0 (generic fiber)")
    if not special.finitely_determined_proxy:
        raise NotFinitelyDetermined("family not finitely determined at 0")

    diagnostics = []
    for name in _SEMICONTINUOUS_FIELDS:
        gv, sv = getattr(generic, name), getattr(special, name)
        if gv is None or sv is None:
            continue
        if gv > sv:
            raise InternalContradiction(
                f"semicontinuity violated for {name}: generic {gv} > special {sv}",
                evidence={"field": name, "generic": gv, "special": sv},
            )
        diagnostics.append(f"semicontinuity {name}: generic {gv} <= special {sv}")

    conditions = _evaluate_conditions(generic, special)
    answers = {c.holds for c in conditions}
    if len(answers) != 1:
        raise InternalContradiction(
            "the four equivalent constancy conditions disagree",
            evidence={c.name: (c.holds, c.pairs) for c in conditions},
        )
    mu_constant = conditions[0].holds

    samples = []
    for t0 in cfg.t_samples:
        try:
            rep = invariant_report(specialize(u, t0), cfg, with_m0=with_m0)
        except PoleAtSample:
            diagnostics.append(f"pole at sample t = {t0}; skipped")
            continue
        samples.append((t0, rep))
        if rep.value_tuple()[:7] != generic.value_tuple()[:7]:
            diagnostics.append(f"non-generic sample t = {t0}")

    m0_constant = True
    if with_m0:
        m0_values = [generic.m0, special.m0] + [r.m0 for _, r in samples]
        m0_constant = len({v for v in m0_values if v is not None}) == 1
        if mu_constant and not m0_constant:
            raise InternalContradiction(
                "mu-constant family with non-constant multiplicity",
                evidence={"m0_values": m0_values},
            )

    return FamilyVerdict(
        report_generic=generic,
        report_special=special,
        sample_reports=tuple(samples),
        mu_constant=mu_constant,
        topologically_trivial=mu_constant,
        whitney_equisingular=mu_constant,
        bilipschitz_trivial=mu_constant,
        excellent=mu_constant,
        equivalent_conditions=conditions,
        m0_constant=m0_constant,
        diagnostics=tuple(diagnostics),
    )
