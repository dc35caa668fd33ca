"""Ground rings and exact linear algebra helpers.

Everything runs over one of two exact fields: the rationals, or rational
functions in a single parameter t with rational coefficients.  A Ring is a
polynomial ring over the active field with a fixed ordered variable tuple;
polynomials themselves are sympy expressions kept in expanded form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import sympy as sp
from sympy import QQ

# The fixed symbol vocabulary.  Source coordinates, the unfolding parameter,
# the primed copies used by double point ideals, and the corank-1 multiple
# point coordinates.
X, Y = sp.symbols("x y")
T = sp.Symbol("t")
XP, YP = sp.symbols("xp yp")
Y1, Y2, Y3 = sp.symbols("y1 y2 y3")


@dataclass(frozen=True)
class Ring:
    """Polynomial ring: ordered variables over QQ or QQ(t)."""

    variables: tuple
    parameter: object = None

    @property
    def domain(self):
        if self.parameter is not None:
            return QQ.frac_field(self.parameter)
        return QQ

    @property
    def all_symbols(self):
        if self.parameter is not None:
            return self.variables + (self.parameter,)
        return self.variables

    def with_variables(self, variables):
        return Ring(tuple(variables), self.parameter)

    def check_member(self, expr):
        extra = sp.sympify(expr).free_symbols - set(self.all_symbols)
        if extra:
            raise ValueError(f"foreign symbols {extra} in {expr}")


@dataclass(frozen=True)
class Ideal:
    """Finite generator list in an ambient ring.  The list may be redundant;
    semantic questions (membership, equality) go through the gb module."""

    ring: Ring
    generators: tuple

    def __post_init__(self):
        for g in self.generators:
            self.ring.check_member(g)

    @property
    def nonzero_generators(self):
        return tuple(g for g in self.generators if not expr_is_zero(g))


def expr_is_zero(e) -> bool:
    """Exact zero test for polynomial expressions with rational-function
    coefficients in t."""
    e = sp.sympify(e)
    if e == 0:
        return True
    num, _ = sp.fraction(sp.together(sp.expand(e)))
    return sp.expand(num) == 0


def expr_eq(a, b) -> bool:
    return expr_is_zero(sp.sympify(a) - sp.sympify(b))


def origin_value(expr, ring: Ring):
    """Value at the origin of the ring variables (may still involve t)."""
    return sp.expand(sp.sympify(expr).subs({v: 0 for v in ring.variables}))


def vanishes_at_origin(expr, ring: Ring) -> bool:
    return expr_is_zero(origin_value(expr, ring))


def graded_part(expr, ring: Ring, degree: int):
    """Sum of the terms of the given total degree in the ring variables."""
    p = sp.Poly(sp.expand(expr), *ring.variables, domain=ring.domain)
    out = sp.S.Zero
    for monom, coeff in zip(p.monoms(), p.coeffs()):
        if sum(monom) == degree:
            term = coeff.as_expr() if hasattr(coeff, "as_expr") else coeff
            out += sp.sympify(term) * sp.prod(
                v**e for v, e in zip(ring.variables, monom)
            )
    return sp.expand(out)


def linear_part(expr, ring: Ring):
    return graded_part(expr, ring, 1)


def higher_part(expr, ring: Ring):
    """Everything of total degree >= 2."""
    return sp.expand(
        sp.expand(expr) - graded_part(expr, ring, 0) - graded_part(expr, ring, 1)
    )


def poly_coeff_map(expr, ring: Ring):
    """Map exponent tuple -> coefficient (expr over the field)."""
    p = sp.Poly(sp.expand(expr), *ring.variables, domain=ring.domain)
    out = {}
    for monom, coeff in zip(p.monoms(), p.coeffs()):
        term = coeff.as_expr() if hasattr(coeff, "as_expr") else sp.sympify(coeff)
        out[monom] = sp.sympify(term)
    return out


def _iszero(v):
    return expr_is_zero(v)


def matrix_rank(rows) -> int:
    """Rank of a matrix of field elements (exact, cancel-based zero test)."""
    M = sp.Matrix(rows)
    return M.rank(iszerofunc=_iszero)


def matrix_nullspace(rows):
    """Nullspace basis vectors (columns) of a matrix of field elements."""
    M = sp.Matrix(rows)
    return M.nullspace(iszerofunc=_iszero)


def grevlex_key(monom):
    """Sort key: larger key = larger monomial in degrevlex."""
    return (sum(monom), tuple(-e for e in reversed(monom)))


def monic(expr, ring: Ring):
    """Divide by the degrevlex leading coefficient (a field unit)."""
    expr = sp.expand(expr)
    if expr_is_zero(expr):
        return sp.S.Zero
    cmap = poly_coeff_map(expr, ring)
    lead = max(cmap, key=grevlex_key)
    return sp.expand(sp.cancel(expr / cmap[lead]))


def multi_gcd(exprs):
    exprs = [sp.expand(e) for e in exprs if not expr_is_zero(e)]
    if not exprs:
        return sp.S.Zero
    return reduce(sp.gcd, exprs)
