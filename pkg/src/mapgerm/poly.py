"""Exact polynomial utilities: divided differences, resultants,
square-free parts, and local-unit stripping."""

from __future__ import annotations

import sympy as sp

from .errors import MapGermError
from .rings import (
    Ring,
    expr_is_zero,
    grevlex_key,
    monic,
    multi_gcd,
    origin_value,
    poly_coeff_map,
)


def divided_difference(p, v, v_new):
    """Exact quotient (p|_v - p|_{v_new}) / (v - v_new).

    Always an exact polynomial division; the result q satisfies
    (v - v_new) * q = p(v) - p(v_new) identically and is symmetric under
    swapping v and v_new.
    """
    p = sp.sympify(p)
    if v_new in p.free_symbols:
        raise ValueError(f"{v_new} is not fresh in {p}")
    diff = sp.expand(p - p.subs(v, v_new))
    q = sp.expand(sp.cancel(diff / (v - v_new)))
    if not expr_is_zero(sp.expand(q * (v - v_new)) - diff):
        raise MapGermError(f"inexact divided difference of {p}")  # unreachable
    return q


def resultant_univar(p, q, v):
    """Resultant of p and q with respect to v (Sylvester determinant)."""
    p = sp.expand(sp.sympify(p))
    q = sp.expand(sp.sympify(q))
    if expr_is_zero(p) and expr_is_zero(q):
        raise MapGermError("resultant undefined: both inputs zero")
    if expr_is_zero(p) or expr_is_zero(q):
        return sp.S.Zero
    return sp.expand(sp.resultant(p, q, v))


def squarefree_part(g, ring: Ring):
    """Product of the distinct irreducible factors of g, monic in degrevlex.

    Computed as g / gcd(g, partials) with multivariate gcd; the partials are
    taken with respect to the ring variables only (t is a field element).
    """
    g = sp.expand(sp.sympify(g))
    if expr_is_zero(g):
        raise MapGermError("squarefree part of zero")
    parts = [g] + [sp.diff(g, v) for v in ring.variables]
    h = multi_gcd(parts)
    sf = sp.expand(sp.cancel(g / h))
    return monic(sf, ring)


def strip_unit_factors(g, ring: Ring):
    """Remove every irreducible factor not vanishing at the origin of the
    ring variables; such factors are units in the local ring.  Returns 1
    when everything is a unit."""
    g = sp.expand(sp.sympify(g))
    if expr_is_zero(g):
        raise MapGermError("cannot strip factors of zero")
    _, factors = sp.factor_list(g)
    kept = sp.S.One
    for base, mult in factors:
        if expr_is_zero(origin_value(base, ring)):
            kept *= base**mult
    kept = sp.expand(kept)
    if expr_is_zero(kept - 1):
        return sp.S.One
    return monic(kept, ring)


def render_polynomial(p, ring: Ring) -> str:
    """Canonical text form accepted back by the parser.

    Terms in descending degrevlex over the ring variables; the parameter t
    is rendered like a variable, so only polynomial t-dependence is
    renderable (which is all the input grammar can produce).
    """
    p = sp.expand(sp.sympify(p))
    if expr_is_zero(p):
        return "0"
    syms = ring.all_symbols
    poly = sp.Poly(p, *syms, domain="QQ")
    items = sorted(
        zip(poly.monoms(), poly.coeffs()), key=lambda mc: grevlex_key(mc[0]), reverse=True
    )
    pieces = []
    for monom, coeff in items:
        c = sp.Rational(sp.sympify(coeff.as_expr() if hasattr(coeff, "as_expr") else coeff))
        factors = [
            (s.name if e == 1 else f"{s.name}^{e}")
            for s, e in zip(syms, monom)
            if e > 0
        ]
        mag = abs(c)
        if not factors:
            body = _render_rational(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_render_rational(mag)] + factors)
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _render_rational(r) -> str:
    r = sp.Rational(r)
    if r.q == 1:
        return str(r.p)
    return f"{r.p}/{r.q}"
