import random

import pytest
import sympy as sp

from mapgerm import gb
from mapgerm.errors import NotACurve
from mapgerm.germ import MapGerm
from mapgerm.multipt import (
    alpha_matrix,
    corank1_d2_ideal,
    corank1_d3_ideal,
    d2_plane_curve,
    double_point_ideal,
)
from mapgerm.rings import (
    Ideal,
    Ring,
    X,
    XP,
    Y,
    Y1,
    Y2,
    Y3,
    YP,
    expr_eq,
    expr_is_zero,
    monic,
)
from mapgerm.sampling import random_corank1_germ

RING = Ring((X, Y))


def germ(*comps):
    return MapGerm(components=tuple(sp.expand(c) for c in comps), ring=RING)


CROSSCAP = germ(X, Y**2, X * Y)
S1 = germ(X, Y**2, Y**3 + X**2 * Y)
H2 = germ(X, Y**3, X * Y + Y**5)


class TestAlphaMatrix:
    def test_crosscap_entries(self):
        rows = alpha_matrix(CROSSCAP).entries
        expected = ((1, 0), (0, Y + YP), (Y, XP))
        for row, want in zip(rows, expected):
            assert expr_eq(row[0], want[0])
            assert expr_eq(row[1], want[1])

    def test_factorization_identity(self):
        rng = random.Random(3)
        for _ in range(6):
            g = random_corank1_germ(rng)
            rows = alpha_matrix(g).entries
            for c, (a1, a2) in zip(g.components, rows):
                diff = c - sp.sympify(c).subs({X: XP, Y: YP}, simultaneous=True)
                assert expr_is_zero(sp.expand(diff - a1 * (X - XP) - a2 * (Y - YP)))

    def test_diagonal_restriction_is_jacobian(self):
        rows = alpha_matrix(S1).entries
        for c, (a1, a2) in zip(S1.components, rows):
            assert expr_eq(a1.subs({XP: X, YP: Y}), sp.diff(c, X))
            assert expr_eq(a2.subs({XP: X, YP: Y}), sp.diff(c, Y))


class TestDoublePointIdeal:
    def test_generator_count(self):
        dpi = double_point_ideal(CROSSCAP)
        assert len(dpi.ideal.generators) == 6
        assert dpi.ideal.ring.variables == (X, Y, XP, YP)

    def test_contains_diagonal_jacobian_minors(self):
        # restricting I2(f) to the diagonal lands inside the radical of the
        # ramification ideal (2x2 minors of the Jacobian), and conversely
        dpi = double_point_ideal(S1)
        J = sp.Matrix(
            [[sp.diff(c, v) for v in (X, Y)] for c in S1.components]
        )
        minors = [
            sp.expand(J[i, 0] * J[j, 1] - J[i, 1] * J[j, 0])
            for i, j in ((0, 1), (0, 2), (1, 2))
        ]
        minor_ideal = Ideal(RING, tuple(m for m in minors if not expr_is_zero(m)))
        diag = [
            sp.expand(g.subs({XP: X, YP: Y}, simultaneous=True))
            for g in dpi.ideal.generators
        ]
        for g in diag:
            assert gb.radical_contains(minor_ideal, g)
        diag_ideal = Ideal(RING, tuple(g for g in diag if not expr_is_zero(g)))
        for m in minor_ideal.generators:
            assert gb.radical_contains(diag_ideal, m)

    def test_s2_symmetry(self):
        # swapping (x, y) <-> (x', y') maps the ideal to itself: the reduced
        # basis of the swapped generators (same order) is unchanged
        dpi = double_point_ideal(H2)
        swap = {X: XP, XP: X, Y: YP, YP: Y}
        swapped = tuple(
            sp.expand(g.subs(swap, simultaneous=True)) for g in dpi.ideal.generators
        )
        basis = gb.groebner_basis(dpi.ideal).elements
        basis_swapped = gb.groebner_basis(Ideal(dpi.ideal.ring, swapped)).elements
        assert len(basis) == len(basis_swapped)
        assert all(expr_eq(a, b) for a, b in zip(basis, basis_swapped))


class TestCorank1Schemes:
    def test_crosscap_divided_differences(self):
        d2 = corank1_d2_ideal(CROSSCAP)
        assert expr_eq(d2.p_gen, Y + YP)
        assert expr_eq(d2.q_gen, X)

    def test_s1_divided_differences(self):
        d2 = corank1_d2_ideal(S1)
        assert expr_eq(d2.p_gen, Y + YP)
        assert expr_eq(d2.q_gen, Y**2 + Y * YP + YP**2 + X**2)

    def test_d3_generators(self):
        d3 = corank1_d3_ideal(CROSSCAP)
        p12, p123, q12, q123 = d3.generators
        assert expr_eq(p12, Y1 + Y2)
        assert expr_eq(p123, 1)
        assert expr_eq(q12, X)
        assert expr_is_zero(q123)

    def test_d3_vs_d2_restriction(self):
        # setting y3 = y2 in the first divided differences recovers the
        # (x, y, y') double point generators
        for g in (S1, H2):
            d2 = corank1_d2_ideal(g)
            d3 = corank1_d3_ideal(g)
            p12, _, q12, _ = d3.generators
            sub = {Y1: Y, Y2: YP}
            assert expr_eq(p12.subs(sub, simultaneous=True), d2.p_gen)
            assert expr_eq(q12.subs(sub, simultaneous=True), d2.q_gen)

    def test_agrees_with_full_double_point_ideal(self):
        # restricting I2(f) to x' = x and eliminating x' gives (P, Q):
        # mutual radical membership in (x, y, y')
        g = S1
        dpi = double_point_ideal(g)
        restricted = [
            sp.expand(h.subs(XP, X)) for h in dpi.ideal.generators
        ]
        ring3 = Ring((X, Y, YP))
        restricted_ideal = Ideal(
            ring3, tuple(h for h in restricted if not expr_is_zero(h))
        )
        d2 = corank1_d2_ideal(g)
        for gen in (d2.p_gen, d2.q_gen):
            assert gb.radical_contains(restricted_ideal, gen)
        for h in restricted_ideal.generators:
            assert gb.radical_contains(d2.ideal, h)


class TestPlaneCurve:
    def test_crosscap_curve(self):
        curve = d2_plane_curve(CROSSCAP)
        assert expr_eq(monic(curve.equation, curve.ring), X)

    def test_s1_curve(self):
        curve = d2_plane_curve(S1)
        assert expr_eq(monic(curve.equation, curve.ring), X**2 + Y**2)

    def test_immersion_curve_is_empty(self):
        curve = d2_plane_curve(germ(X, Y, 0))
        assert curve.is_empty

    def test_h2_curve_is_reduced_through_origin(self):
        curve = d2_plane_curve(H2)
        assert not curve.is_empty
        eq = curve.equation
        assert expr_is_zero(eq.subs({X: 0, Y: 0}))
        assert expr_eq(
            monic(sp.gcd(eq, sp.gcd(sp.diff(eq, X), sp.diff(eq, Y))), RING), 1
        )

    def test_not_a_curve(self):
        with pytest.raises(NotACurve):
            d2_plane_curve(germ(X, Y**2, sp.S.Zero))

    def test_general_path_matches_corank1_path(self):
        # feed the general (elimination) path directly and compare with the
        # resultant path on the same germ
        from mapgerm.poly import squarefree_part, strip_unit_factors
        from mapgerm.rings import multi_gcd

        g = S1
        dpi = double_point_ideal(g)
        elim = gb.elimination_ideal(dpi.ideal, (XP, YP))
        gens = elim.nonzero_generators
        assert gens
        general = multi_gcd(gens)
        general = squarefree_part(strip_unit_factors(general, RING), RING)
        special = d2_plane_curve(g).equation
        assert expr_eq(monic(general, RING), monic(special, RING))
