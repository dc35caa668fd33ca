"""The classifying invariants: cross-caps C, triple points T, Milnor
numbers of the double point curves, image Milnor number, multiplicity, and
the identity checks tying them together."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import sympy as sp

from .config import AnalysisConfig
from .errors import (
    CorankPathUnavailable,
    CrossCheckMismatch,
    DegenerateProjections,
    NotACurve,
    TripleSchemeAnomaly,
)
from .gb import INFINITE, is_finite, local_colength
from .germ import MapGerm
from .multipt import (
    Corank1D2,
    PlaneCurve,
    corank1_d2_ideal,
    corank1_d3_ideal,
    d2_plane_curve,
)
from .rings import Ideal, Ring, expr_is_zero, linear_part, vanishes_at_origin


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: object
    rhs: object
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class InvariantReport:
    crosscaps: object = None  # C
    triple_points: object = None  # T
    mu_d2: object = None
    mu_d2tilde: object = None
    mu_d2tilde_mod_s2: object = None
    mu_image: object = None
    euler: object = None  # chi of the disentanglement
    m0: object = None
    finitely_determined_proxy: bool = False
    consistent: bool = True
    identity_checks: tuple = ()
    provenance: dict = field(default_factory=dict)
    warnings: tuple = ()

    def value_tuple(self):
        return (
            self.crosscaps,
            self.triple_points,
            self.mu_d2,
            self.mu_d2tilde,
            self.mu_d2tilde_mod_s2,
            self.mu_image,
            self.euler,
            self.m0,
        )


def jacobian_minor_ideal(g: MapGerm) -> Ideal:
    """Ideal of the 2x2 minors of the 3x2 Jacobian matrix (the ramification
    ideal whose colength counts cross-caps)."""
    ring = g.ring
    rows = [
        [sp.expand(sp.diff(c, v)) for v in ring.variables] for c in g.components
    ]
    minors = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        minors.append(sp.expand(rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]))
    return Ideal(ring, tuple(minors))


def crosscap_count(g: MapGerm, cfg: AnalysisConfig = None):
    cfg = cfg or AnalysisConfig()
    return local_colength(jacobian_minor_ideal(g), cfg.truncation_ceiling)


def triple_point_count(g: MapGerm, cfg: AnalysisConfig = None):
    """Colength of the corank-1 triple point scheme divided by 6 (the S3
    orbit size); the division must be exact."""
    cfg = cfg or AnalysisConfig()
    d3 = corank1_d3_ideal(g)
    col = local_colength(d3.ideal, cfg.truncation_ceiling)
    if not is_finite(col):
        return INFINITE
    if col % 6 != 0:
        raise TripleSchemeAnomaly(
            f"triple scheme multiplicity anomaly: colength {col} not divisible by 6"
        )
    return col // 6


def milnor_plane_curve(curve: PlaneCurve, cfg: AnalysisConfig = None):
    """Milnor number of a reduced plane curve germ: colength of the
    Jacobian ideal; 0 for the empty germ."""
    cfg = cfg or AnalysisConfig()
    if curve.is_empty:
        return 0
    g = curve.equation
    jac = Ideal(
        curve.ring, tuple(sp.expand(sp.diff(g, v)) for v in curve.ring.variables)
    )
    return local_colength(jac, cfg.truncation_ceiling)


def _jacobian_minors_of_pair(g1, g2, ring: Ring):
    rows = [
        [sp.expand(sp.diff(g1, v)) for v in ring.variables],
        [sp.expand(sp.diff(g2, v)) for v in ring.variables],
    ]
    minors = []
    for a, b in ((0, 1), (0, 2), (1, 2)):
        minors.append(sp.expand(rows[0][a] * rows[1][b] - rows[0][b] * rows[1][a]))
    return tuple(minors)


def d2tilde_singular_colength(d2: Corank1D2, cfg: AnalysisConfig = None):
    """Colength of the singular locus of the double point space curve
    V(P, Q).  Finite exactly when the curve is reduced with an isolated
    singularity; INFINITE flags a non-reduced scheme (a finite determinacy
    failure the plane-curve invariants alone can miss)."""
    cfg = cfg or AnalysisConfig()
    ring = d2.ring
    minors = _jacobian_minors_of_pair(d2.p_gen, d2.q_gen, ring)
    ideal = Ideal(ring, (d2.p_gen, d2.q_gen) + minors)
    return local_colength(ideal, cfg.truncation_ceiling)


def le_greuel_mu(d2: Corank1D2, cfg: AnalysisConfig = None):
    """Milnor number of the space curve V(P, Q) by the Le-Greuel formula,
    available when one generator is smooth: with g_s the smooth one,
    mu = colength((g_s) + 2x2 minors of Jac(g_s, g_other)).

    Returns None when no generator is smooth at the origin."""
    cfg = cfg or AnalysisConfig()
    ring = d2.ring
    gens = (d2.p_gen, d2.q_gen)
    if not all(vanishes_at_origin(h, ring) for h in gens):
        return None
    smooth = None
    for idx, h in enumerate(gens):
        if not expr_is_zero(linear_part(h, ring)):
            smooth = idx
            break
    if smooth is None:
        return None
    g_s = gens[smooth]
    g_o = gens[1 - smooth]
    minors = _jacobian_minors_of_pair(g_s, g_o, ring)
    ideal = Ideal(ring, (g_s,) + minors)
    return local_colength(ideal, cfg.truncation_ceiling)


def milnor_d2tilde(g: MapGerm, cfg: AnalysisConfig = None):
    """Space-curve Milnor number of the double point scheme.

    Primary path: mu(D2) - 6T.  When the corank-1 scheme has a smooth
    generator, the Le-Greuel computation cross-checks it; disagreement is
    an error carrying both values.

    Returns (value, provenance-string).
    """
    cfg = cfg or AnalysisConfig()
    mu_d2 = milnor_plane_curve(d2_plane_curve(g), cfg)
    T = triple_point_count(g, cfg)
    if not (is_finite(mu_d2) and is_finite(T)):
        return INFINITE, "direct"
    derived = mu_d2 - 6 * T
    if cfg.crosscheck:
        direct = le_greuel_mu(corank1_d2_ideal(g), cfg)
        if direct is not None:
            if direct != derived:
                raise CrossCheckMismatch("mu(D2~)", derived, direct)
            return derived, "cross-checked"
    return derived, "derived"


def multiplicity_m0(g: MapGerm, cfg: AnalysisConfig = None, seed: int = None):
    """Local multiplicity: minimum colength of two generic linear forms
    composed with f, over a fixed-seed sample of rational forms."""
    cfg = cfg or AnalysisConfig()
    rng = random.Random(cfg.seed if seed is None else seed)
    best = None
    found = 0
    attempts = 0
    while found < cfg.m0_samples and attempts < 10 * cfg.m0_samples + 20:
        attempts += 1
        rows = [[sp.Rational(rng.randint(-9, 9)) for _ in range(3)] for _ in range(2)]
        M = sp.Matrix(rows)
        if M.rank() != 2:
            continue
        comps = [
            sp.expand(sum(rows[k][i] * g.components[i] for i in range(3)))
            for k in range(2)
        ]
        col = local_colength(Ideal(g.ring, tuple(comps)), cfg.truncation_ceiling)
        if not is_finite(col):
            continue
        found += 1
        if best is None or col < best:
            best = col
    if best is None:
        raise DegenerateProjections("degenerate projections: no finite sample")
    return best


def invariant_report(
    g: MapGerm, cfg: AnalysisConfig = None, with_m0: bool = True
) -> InvariantReport:
    """Full report: direct invariants, derived quotient invariants, and the
    recorded identity checks."""
    cfg = cfg or AnalysisConfig()
    prov = {}
    warnings = []
    checks = []

    C = crosscap_count(g, cfg)
    prov["C"] = "direct"

    try:
        T = triple_point_count(g, cfg)
        prov["T"] = "direct"
    except CorankPathUnavailable as exc:
        T = None
        warnings.append(str(exc))

    try:
        curve = d2_plane_curve(g)
        mu_d2 = milnor_plane_curve(curve, cfg)
        prov["mu_D2"] = "direct"
    except NotACurve as exc:
        curve = None
        mu_d2 = INFINITE
        warnings.append(str(exc))
    except CorankPathUnavailable as exc:
        curve = None
        mu_d2 = None
        warnings.append(str(exc))

    # reducedness gate for the space curve D2~ (its plane projection can
    # look tame while the scheme itself is non-reduced)
    d2tilde_reduced = True
    if curve is not None and not curve.is_empty:
        try:
            sing = d2tilde_singular_colength(corank1_d2_ideal(g), cfg)
            if not is_finite(sing):
                d2tilde_reduced = False
                warnings.append(
                    "double point space curve is non-reduced or has a "
                    "non-isolated singularity"
                )
        except CorankPathUnavailable:
            pass

    proxy = (
        is_finite(C)
        and is_finite(mu_d2)
        and (T is None or is_finite(T))
        and d2tilde_reduced
    )
    if not proxy or T is None:
        return InvariantReport(
            crosscaps=C,
            triple_points=T,
            mu_d2=mu_d2,
            finitely_determined_proxy=False if not proxy else False,
            consistent=True,
            identity_checks=(),
            provenance=prov,
            warnings=tuple(warnings),
        )

    if curve is not None and curve.is_empty:
        # no double points at all: the Marar-Mond chain presumes a curve,
        # so the derived invariants collapse to the immersive values
        consistent = C == 0 and T == 0
        checks.append(
            IdentityCheck(
                "empty_double_curve_consistency", (C, T), (0, 0), consistent,
                note="empty D2 forces C = T = 0",
            )
        )
        m0 = multiplicity_m0(g, cfg) if with_m0 else None
        return InvariantReport(
            crosscaps=C,
            triple_points=T,
            mu_d2=0,
            mu_d2tilde=0,
            mu_d2tilde_mod_s2=0,
            mu_image=0,
            euler=1,
            m0=m0,
            finitely_determined_proxy=True,
            consistent=consistent,
            identity_checks=tuple(checks),
            provenance={**prov, "mu_D2tilde": "empty", "mu_D2tilde_mod_S2": "empty"},
            warnings=tuple(warnings),
        )

    mu_d2tilde = mu_d2 - 6 * T
    prov["mu_D2tilde"] = "derived"
    if cfg.crosscheck:
        direct = le_greuel_mu(corank1_d2_ideal(g), cfg)
        if direct is not None:
            if direct != mu_d2tilde:
                raise CrossCheckMismatch("mu(D2~)", mu_d2tilde, direct)
            prov["mu_D2tilde"] = "cross-checked"
            checks.append(
                IdentityCheck(
                    "le_greuel_crosscheck", mu_d2tilde, direct, True,
                    note="Le-Greuel colength vs derived value",
                )
            )

    parity = mu_d2tilde - C + 1
    parity_ok = parity >= 0 and parity % 2 == 0
    checks.append(
        IdentityCheck(
            "parity_mu_d2tilde_minus_C_plus_1",
            parity,
            "even and nonnegative",
            parity_ok,
        )
    )
    if not parity_ok:
        m0 = multiplicity_m0(g, cfg) if with_m0 else None
        return InvariantReport(
            crosscaps=C,
            triple_points=T,
            mu_d2=mu_d2,
            mu_d2tilde=mu_d2tilde,
            m0=m0,
            finitely_determined_proxy=True,
            consistent=False,
            identity_checks=tuple(checks),
            provenance=prov,
            warnings=tuple(warnings),
        )

    mu_q = parity // 2
    mu_image = C - 1 + T + mu_q
    euler = C + T + mu_q
    prov["mu_D2tilde_mod_S2"] = "derived"
    prov["mu_image"] = "derived"
    prov["euler"] = "derived"

    checks.append(
        IdentityCheck(
            "marar_mond_mu_d2", mu_d2, mu_d2tilde + 6 * T, mu_d2 == mu_d2tilde + 6 * T
        )
    )
    checks.append(
        IdentityCheck(
            "marar_mond_quotient",
            mu_d2,
            2 * mu_q + C + 6 * T - 1,
            mu_d2 == 2 * mu_q + C + 6 * T - 1,
        )
    )
    checks.append(
        IdentityCheck(
            "image_milnor", mu_image, C - 1 + T + mu_q, mu_image == C - 1 + T + mu_q
        )
    )
    checks.append(IdentityCheck("euler_vs_image", euler, mu_image + 1, euler == mu_image + 1))
    checks.append(IdentityCheck("image_milnor_nonneg", mu_image, ">= 0", mu_image >= 0))

    consistent = all(c.passed for c in checks)
    m0 = multiplicity_m0(g, cfg) if with_m0 else None
    return InvariantReport(
        crosscaps=C,
        triple_points=T,
        mu_d2=mu_d2,
        mu_d2tilde=mu_d2tilde,
        mu_d2tilde_mod_s2=mu_q,
        mu_image=mu_image,
        euler=euler,
        m0=m0,
        finitely_determined_proxy=True,
        consistent=consistent,
        identity_checks=tuple(checks),
        provenance=prov,
        warnings=tuple(warnings),
    )
