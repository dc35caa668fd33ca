"""Double- and triple-point schemes: the alpha matrix, the double point
ideal in (x, y, x', y'), the corank-1 divided-difference ideals, and the
reduced double-point plane curve."""

from __future__ import annotations

from dataclasses import dataclass

import sympy as sp

from .errors import CorankPathUnavailable, NotACurve
from .germ import MapGerm, normalized_shape
from .poly import (
    divided_difference,
    resultant_univar,
    squarefree_part,
    strip_unit_factors,
)
from .rings import (
    Ideal,
    Ring,
    X,
    XP,
    Y,
    Y1,
    Y2,
    Y3,
    YP,
    expr_is_zero,
    monic,
    multi_gcd,
    origin_value,
    vanishes_at_origin,
)
from . import gb


@dataclass(frozen=True)
class AlphaMatrix:
    """3x2 matrix with f_i(x,y) - f_i(x',y') = a_i1 (x-x') + a_i2 (y-y').

    Canonical iterated divided-difference representative, split at (x', y):
    a_i1 = (f_i(x,y) - f_i(x',y))/(x-x'), a_i2 = (f_i(x',y) - f_i(x',y'))/(y-y').
    """

    germ: MapGerm
    entries: tuple  # 3 rows of 2


@dataclass(frozen=True)
class DoublePointIdeal:
    """I2(f): the three component differences plus the 2x2 minors of alpha,
    in the product coordinates (x, y, x', y')."""

    germ: MapGerm
    ideal: Ideal
    alpha: AlphaMatrix


@dataclass(frozen=True)
class Corank1D2:
    """Corank-1 double point scheme in (x, y, y'): divided differences of
    the normalized shape (x, p, q)."""

    germ: MapGerm
    ring: Ring
    p_gen: object
    q_gen: object

    @property
    def ideal(self):
        return Ideal(self.ring, (self.p_gen, self.q_gen))


@dataclass(frozen=True)
class Corank1D3:
    """Corank-1 triple point scheme in (x, y1, y2, y3): first and second
    divided differences of p and q."""

    germ: MapGerm
    ring: Ring
    generators: tuple  # p[y1,y2], p[y1,y2,y3], q[y1,y2], q[y1,y2,y3]

    @property
    def ideal(self):
        return Ideal(self.ring, self.generators)


@dataclass(frozen=True)
class PlaneCurve:
    """Reduced double-point curve equation in (x, y); the constant 1 stands
    for an empty curve germ."""

    ring: Ring
    equation: object

    @property
    def is_empty(self):
        return expr_is_zero(self.equation - 1)


def alpha_matrix(g: MapGerm) -> AlphaMatrix:
    rows = []
    for c in g.components:
        a1 = divided_difference(c, X, XP)
        a2 = divided_difference(sp.expand(sp.sympify(c).subs(X, XP)), Y, YP)
        rows.append((a1, a2))
    return AlphaMatrix(germ=g, entries=tuple(rows))


def double_point_ideal(g: MapGerm) -> DoublePointIdeal:
    alpha = alpha_matrix(g)
    ring = Ring((X, Y, XP, YP), g.ring.parameter)
    diffs = [
        sp.expand(c - sp.sympify(c).subs({X: XP, Y: YP}, simultaneous=True))
        for c in g.components
    ]
    rows = alpha.entries
    minors = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        minors.append(sp.expand(rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]))
    return DoublePointIdeal(
        germ=g, ideal=Ideal(ring, tuple(diffs + minors)), alpha=alpha
    )


def corank1_d2_ideal(g: MapGerm) -> Corank1D2:
    data = normalized_shape(g)
    _, p, q = data.normalized
    ring = Ring((X, Y, YP), g.ring.parameter)
    return Corank1D2(
        germ=g,
        ring=ring,
        p_gen=divided_difference(p, Y, YP),
        q_gen=divided_difference(q, Y, YP),
    )


def corank1_d3_ideal(g: MapGerm) -> Corank1D3:
    data = normalized_shape(g)
    _, p, q = data.normalized
    ring = Ring((X, Y1, Y2, Y3), g.ring.parameter)
    gens = []
    for h in (p, q):
        h1 = sp.expand(sp.sympify(h).subs(Y, Y1))
        d12 = divided_difference(h1, Y1, Y2)
        d123 = divided_difference(d12, Y2, Y3)
        gens.extend([d12, d123])
    # order: p[y1,y2], p[y1,y2,y3], q[y1,y2], q[y1,y2,y3]
    return Corank1D3(germ=g, ring=ring, generators=tuple(gens))


def d2_plane_curve(g: MapGerm) -> PlaneCurve:
    """The reduced plane curve D2(f) = p1(D2~(f)) in the source plane.

    Corank <= 1 germs go through the resultant of the divided-difference
    pair in y'; the general path eliminates (x', y') from I2(f) and takes
    the gcd of the generators as the codimension-1 part.  Unit factors at
    the origin are stripped (germ vs. global representative), then the
    square-free part is taken.
    """
    curve_ring = Ring((X, Y), g.ring.parameter)
    try:
        d2 = corank1_d2_ideal(g)
    except CorankPathUnavailable:
        d2 = None
    if d2 is not None:
        p_gen, q_gen = d2.p_gen, d2.q_gen
        if not vanishes_at_origin(p_gen, d2.ring) or not vanishes_at_origin(
            q_gen, d2.ring
        ):
            return PlaneCurve(ring=curve_ring, equation=sp.S.One)
        if expr_is_zero(p_gen) or expr_is_zero(q_gen):
            raise NotACurve("double point locus is not a curve")
        candidate = resultant_univar(p_gen, q_gen, YP)
    else:
        dpi = double_point_ideal(g)
        elim = gb.elimination_ideal(dpi.ideal, (XP, YP))
        gens = elim.nonzero_generators
        if not gens:
            raise NotACurve("double point locus is not a curve")
        candidate = multi_gcd(gens)
    if expr_is_zero(candidate):
        raise NotACurve("double point locus is not a curve")
    if not (sp.sympify(candidate).free_symbols & {X, Y}):
        return PlaneCurve(ring=curve_ring, equation=sp.S.One)
    stripped = strip_unit_factors(candidate, curve_ring)
    if expr_is_zero(stripped - 1):
        return PlaneCurve(ring=curve_ring, equation=sp.S.One)
    reduced = squarefree_part(stripped, curve_ring)
    if not expr_is_zero(origin_value(reduced, curve_ring)):
        raise NotACurve("reduced double point equation misses the origin")
    return PlaneCurve(ring=curve_ring, equation=reduced)
