"""Groebner engine: reduced bases, normal forms, elimination, and local
colength at the origin by m-adic truncation.

Only global monomial orders are used.  Local colengths rely on the Nakayama
stopping rule: the dimension of R/(I + m^N) is nondecreasing in N and
stabilizes exactly when m^N is contained in I locally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import sympy as sp

from .errors import ColengthUndecided
from .rings import (
    Ideal,
    Ring,
    expr_is_zero,
    grevlex_key,
    origin_value,
)

_RABINOWITSCH = sp.Symbol("_rab")


class _Infinite:
    """Sentinel for infinite local colength (positive local dimension)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


def is_finite(value) -> bool:
    return isinstance(value, int)


@dataclass(frozen=True)
class MonomialOrder:
    kind: str  # "degrevlex" | "elimination"
    front: tuple = ()


DEGREVLEX = MonomialOrder("degrevlex")


def elimination_order(front) -> MonomialOrder:
    return MonomialOrder("elimination", tuple(front))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    order: MonomialOrder
    elements: tuple  # reduced, monic
    _sympy_basis: object = None

    def __iter__(self):
        return iter(self.elements)


def _sympy_order_and_gens(ring: Ring, order: MonomialOrder):
    if order.kind == "degrevlex":
        return "grevlex", ring.variables
    if order.kind == "elimination":
        back = tuple(v for v in ring.variables if v not in order.front)
        # lex with the dropped block first is a valid elimination order
        return "lex", order.front + back
    raise ValueError(f"unknown order {order.kind}")


def groebner_basis(ideal: Ideal, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    gens = ideal.nonzero_generators
    if not gens:
        raise ValueError("Groebner basis of the zero ideal")
    name, syms = _sympy_order_and_gens(ideal.ring, order)
    G = sp.groebner(
        [sp.expand(g) for g in gens], *syms, order=name, domain=ideal.ring.domain
    )
    return GroebnerBasis(ideal.ring, order, tuple(G.exprs), G)


def normal_form(p, basis: GroebnerBasis):
    """Unique remainder of p modulo the reduced basis."""
    _, rem = basis._sympy_basis.reduce(sp.expand(sp.sympify(p)))
    return sp.expand(rem)


def ideal_contains(ideal: Ideal, p, order: MonomialOrder = DEGREVLEX) -> bool:
    if expr_is_zero(p):
        return True
    return expr_is_zero(normal_form(p, groebner_basis(ideal, order)))


def radical_contains(ideal: Ideal, p) -> bool:
    """Radical membership by the Rabinowitsch trick."""
    if expr_is_zero(p):
        return True
    ring = ideal.ring
    gens = list(ideal.nonzero_generators) + [1 - _RABINOWITSCH * sp.expand(p)]
    G = sp.groebner(
        gens, *(ring.variables + (_RABINOWITSCH,)), order="grevlex", domain=ring.domain
    )
    return list(G.exprs) == [sp.S.One]


def elimination_ideal(ideal: Ideal, drop) -> Ideal:
    """Intersection with the subring omitting the dropped variables."""
    drop = tuple(drop)
    for v in drop:
        if v not in ideal.ring.variables:
            raise ValueError(f"{v} not an ambient variable")
    keep = tuple(v for v in ideal.ring.variables if v not in drop)
    basis = groebner_basis(ideal, elimination_order(drop))
    dropped = set(drop)
    kept = tuple(g for g in basis.elements if not (dropped & g.free_symbols))
    return Ideal(ideal.ring.with_variables(keep), kept)


def _monomials_of_degree(variables, degree):
    n = len(variables)
    for cuts in itertools.combinations(range(degree + n - 1), n - 1):
        exps = []
        prev = -1
        for c in cuts:
            exps.append(c - prev - 1)
            prev = c
        exps.append(degree + n - 2 - prev)
        yield tuple(exps)


def _monomials_below_degree(n_vars, bound):
    """All exponent tuples of total degree < bound."""
    out = []
    for d in range(bound):
        for cuts in itertools.combinations(range(d + n_vars - 1), n_vars - 1):
            exps = []
            prev = -1
            for c in cuts:
                exps.append(c - prev - 1)
                prev = c
            exps.append(d + n_vars - 2 - prev)
            out.append(tuple(exps))
    return out


def _leading_monomials(gens, variables, domain):
    G = sp.groebner([sp.expand(g) for g in gens], *variables, order="grevlex", domain=domain)
    lms = []
    for p in G.polys:
        cmap = {m: c for m, c in zip(p.monoms(), p.coeffs())}
        lms.append(max(cmap, key=grevlex_key))
    return lms


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def substitute_linear_generators(gens, ring: Ring):
    """Local-ring preprocessing: a generator of the form c*v + h with c a
    nonzero field constant and h free of v defines v as a graph over the
    other variables; substituting it out preserves the local colength.

    Returns (gens, variables) over the possibly smaller variable tuple.
    """
    gens = [sp.expand(g) for g in gens if not expr_is_zero(g)]
    variables = list(ring.variables)
    changed = True
    while changed and gens and variables:
        changed = False
        for gi, g in enumerate(gens):
            for v in variables:
                p = sp.Poly(g, v)
                if p.degree() != 1:
                    continue
                coeffs = p.all_coeffs()
                c1 = sp.expand(coeffs[0])
                c0 = sp.expand(coeffs[1]) if len(coeffs) > 1 else sp.S.Zero
                if c1.free_symbols & set(variables):
                    continue
                if expr_is_zero(c1):
                    continue
                repl = sp.expand(sp.cancel(-c0 / c1))
                variables.remove(v)
                gens = [
                    sp.expand(h.subs(v, repl)) for j, h in enumerate(gens) if j != gi
                ]
                gens = [h for h in gens if not expr_is_zero(h)]
                changed = True
                break
            if changed:
                break
    return gens, tuple(variables)


def local_colength(ideal: Ideal, ceiling: int = 64):
    """Dimension over the field of (local ring at the origin)/I.

    Computed as dim R/(I + m^N) for growing N, stopping at the first
    repeat.  Returns INFINITE when the ceiling is reached while either
    (a) the staircase keeps an entire coordinate line free, or (b) the
    truncated dimensions have settled into linear growth with a constant
    positive increment (the Hilbert-Samuel function of a positive-
    dimensional local ring); raises ColengthUndecided otherwise.
    """
    gens = ideal.nonzero_generators
    if not gens:
        raise ValueError("local colength of the zero ideal")
    ring = ideal.ring
    for g in gens:
        if not expr_is_zero(origin_value(g, ring)):
            # a generator that is a unit at the origin: quotient is zero
            return 0
    gens, variables = substitute_linear_generators(gens, ring)
    if not variables:
        return 1 if not gens else 0
    if not gens:
        return INFINITE
    for g in gens:
        if not expr_is_zero(g.subs({v: 0 for v in variables})):
            return 0
    n = len(variables)
    domain = ring.domain
    # high-arity truncations get expensive fast; cap them (configured
    # ceilings beyond this are only reachable in <= 2 variables)
    effective = ceiling if n <= 2 else min(ceiling, 24)
    history = []
    lms = None
    for trunc in range(1, effective + 1):
        trunc_gens = list(gens) + [
            sp.prod(v**e for v, e in zip(variables, m))
            for m in _monomials_of_degree(variables, trunc)
        ]
        lms = _leading_monomials(trunc_gens, variables, domain)
        zero = (0,) * n
        if zero in lms:
            d = 0
        else:
            d = sum(
                1
                for m in _monomials_below_degree(n, trunc)
                if not any(_divides(lm, m) for lm in lms)
            )
        if history:
            if d < history[-1]:
                raise AssertionError("truncated dimension decreased")
            if d == history[-1]:
                return d
        history.append(d)
    # undecided at the ceiling: a whole free coordinate line in the
    # staircase certifies positive local dimension
    for i in range(n):
        blocked = any(
            sum(lm) == lm[i] and 0 < lm[i] < effective for lm in lms
        )
        if not blocked:
            return INFINITE
    # so does stabilized linear growth of the truncated dimensions
    # (Hilbert-Samuel function of a one-dimensional local ring)
    if len(history) >= 5:
        increments = [b - a for a, b in zip(history[-5:], history[-4:])]
        if increments[0] > 0 and len(set(increments)) == 1:
            return INFINITE
    raise ColengthUndecided(effective)
