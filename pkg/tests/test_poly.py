import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from mapgerm import divided_difference, resultant_univar, squarefree_part, strip_unit_factors
from mapgerm.errors import MapGermError
from mapgerm.rings import Ring, X, Y, YP, expr_eq, expr_is_zero, monic
from mapgerm.sampling import random_polynomial

RING_XY = Ring((X, Y))


@st.composite
def polynomials(draw, variables=(X, Y)):
    n_terms = draw(st.integers(1, 4))
    out = sp.S.Zero
    for _ in range(n_terms):
        c = draw(st.integers(-5, 5))
        exps = [draw(st.integers(0, 4)) for _ in variables]
        out += c * sp.prod(v**e for v, e in zip(variables, exps))
    return sp.expand(out)


class TestDividedDifference:
    def test_square(self):
        assert expr_eq(divided_difference(Y**2, Y, YP), Y + YP)

    def test_constant_in_variable(self):
        assert expr_is_zero(divided_difference(X, Y, YP))

    def test_fourth_power_geometric_sum(self):
        expected = Y**3 + Y**2 * YP + Y * YP**2 + YP**3
        assert expr_eq(divided_difference(Y**4, Y, YP), expected)

    def test_fresh_variable_required(self):
        with pytest.raises(ValueError):
            divided_difference(Y * YP, Y, YP)

    @given(polynomials())
    @settings(max_examples=40, deadline=None)
    def test_defining_identity(self, p):
        q = divided_difference(p, Y, YP)
        assert expr_is_zero((Y - YP) * q + p.subs(Y, YP) - p)

    @given(polynomials())
    @settings(max_examples=40, deadline=None)
    def test_diagonal_is_partial_derivative(self, p):
        q = divided_difference(p, Y, YP)
        assert expr_eq(q.subs(YP, Y), sp.diff(p, Y))

    @given(polynomials())
    @settings(max_examples=25, deadline=None)
    def test_swap_symmetry(self, p):
        q = divided_difference(p, Y, YP)
        swapped = q.subs({Y: YP, YP: Y}, simultaneous=True)
        assert expr_eq(q, swapped)


class TestResultant:
    def test_constant_second_argument(self):
        r = resultant_univar(Y + YP, X, YP)
        assert expr_eq(monic(r, RING_XY), X)

    def test_sylvester_by_hand(self):
        r = resultant_univar(Y**2 + Y * YP + YP**2, X + Y + YP, YP)
        assert expr_eq(monic(r, RING_XY), X**2 + X * Y + Y**2)

    def test_direct_elimination(self):
        r = resultant_univar(Y - YP, Y + YP, YP)
        assert expr_eq(monic(r, RING_XY), Y)

    def test_both_zero_rejected(self):
        with pytest.raises(MapGermError):
            resultant_univar(sp.S.Zero, sp.S.Zero, YP)


class TestSquarefree:
    def test_perfect_square(self):
        assert expr_eq(squarefree_part((X + Y) ** 2, RING_XY), X + Y)

    def test_partial_power(self):
        assert expr_eq(squarefree_part(X**2 * Y, RING_XY), X * Y)

    def test_already_reduced(self):
        assert expr_eq(squarefree_part(X**2 + Y**2, RING_XY), X**2 + Y**2)

    def test_zero_rejected(self):
        with pytest.raises(MapGermError):
            squarefree_part(sp.S.Zero, RING_XY)

    def test_idempotent_on_random_inputs(self):
        rng = random.Random(7)
        for _ in range(15):
            g = random_polynomial(rng, (X, Y))
            if expr_is_zero(g):
                continue
            sf = squarefree_part(g, RING_XY)
            assert expr_eq(squarefree_part(sf, RING_XY), sf)
            # square-free: gcd with the common gcd of the partials is constant
            partials_gcd = sp.gcd(sp.diff(sf, X), sp.diff(sf, Y))
            assert sp.total_degree(sp.gcd(sf, partials_gcd), X, Y) == 0

    def test_divides_input(self):
        g = sp.expand((X + Y) ** 3 * (X - Y))
        sf = squarefree_part(g, RING_XY)
        assert expr_is_zero(sp.expand(sp.cancel(g / sf)) * 0 + sp.rem(sp.Poly(g, X, Y), sp.Poly(sf, X, Y)).as_expr())


class TestStripUnitFactors:
    def test_unit_cofactor(self):
        assert expr_eq(strip_unit_factors(X * (1 + X), RING_XY), X)

    def test_pure_unit(self):
        assert expr_eq(strip_unit_factors(1 + Y, RING_XY), 1)

    def test_irreducible_through_origin(self):
        assert expr_eq(strip_unit_factors(X**2 + Y**2, RING_XY), X**2 + Y**2)

    def test_keeps_multiplicity(self):
        got = strip_unit_factors(sp.expand(X**2 * (1 + Y) ** 3), RING_XY)
        assert expr_eq(got, X**2)


class TestRingAxioms:
    @given(polynomials(), polynomials(), polynomials())
    @settings(max_examples=25, deadline=None)
    def test_associativity_and_distributivity(self, a, b, c):
        assert expr_is_zero(sp.expand((a * b) * c) - sp.expand(a * (b * c)))
        assert expr_is_zero(sp.expand(a * (b + c)) - sp.expand(a * b + a * c))
        assert expr_is_zero(sp.expand((a + b) + c) - sp.expand(a + (b + c)))
