"""Fixed-seed random generators for property tests and sweeps: bounded
degree corank-1 germs, monomial ideals, linear coordinate changes."""

from __future__ import annotations

import random

import sympy as sp

from .germ import MapGerm
from .rings import Ring, X, Y


def nonzero_rational(rng: random.Random, height: int = 3):
    return sp.Rational(rng.choice([k for k in range(-height, height + 1) if k]))


def random_corank1_germ(rng: random.Random) -> MapGerm:
    """Bounded-degree (<= 6) corank-1 germ in the normalized shape
    (x, p, q), biased toward the classical finitely determined series so
    that most draws pass the finiteness proxy."""
    if rng.random() < 0.65:
        p = Y**2
        shape = rng.randint(0, 2)
        if shape == 0:  # y^{2a+1} + x^b y
            q = nonzero_rational(rng) * Y ** rng.choice([3, 5]) + nonzero_rational(
                rng
            ) * X ** rng.randint(1, 4) * Y
        elif shape == 1:  # x^2 y + y^{2k+1}
            q = nonzero_rational(rng) * X**2 * Y + nonzero_rational(
                rng
            ) * Y ** rng.choice([3, 5])
        else:  # x y^3 + x^k y
            q = nonzero_rational(rng) * X * Y**3 + nonzero_rational(
                rng
            ) * X ** rng.randint(1, 3) * Y
        if rng.random() < 0.4:
            q += nonzero_rational(rng) * X ** rng.randint(1, 3) * Y**3
    else:
        p = Y**3
        q = nonzero_rational(rng) * X * Y + nonzero_rational(rng) * Y ** rng.choice(
            [4, 5]
        )
        if rng.random() < 0.4:
            q += nonzero_rational(rng) * X ** rng.randint(2, 3) * Y
    return MapGerm(components=(X, sp.expand(p), sp.expand(q)), ring=Ring((X, Y)))


def random_polynomial(rng: random.Random, variables, max_terms=4, max_degree=5):
    out = sp.S.Zero
    for _ in range(rng.randint(1, max_terms)):
        term = nonzero_rational(rng)
        budget = max_degree
        for v in variables:
            e = rng.randint(0, budget)
            term *= v**e
            budget -= e
        out += term
    return sp.expand(out)


def random_monomial_ideal(rng: random.Random, variables, max_exp=6, extra=3):
    """Zero-dimensional monomial ideal: a pure power of every variable plus
    a few mixed monomials."""
    gens = []
    for v in variables:
        gens.append(v ** rng.randint(1, max_exp))
    for _ in range(rng.randint(0, extra)):
        m = sp.S.One
        for v in variables:
            m *= v ** rng.randint(0, max_exp - 1)
        if m != 1:
            gens.append(m)
    return gens


def random_invertible_matrix(rng: random.Random, size: int, height: int = 2):
    while True:
        M = sp.Matrix(
            [
                [sp.Rational(rng.randint(-height, height)) for _ in range(size)]
                for _ in range(size)
            ]
        )
        if M.det() != 0:
            return M
