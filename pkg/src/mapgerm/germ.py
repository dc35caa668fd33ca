"""Map germs (C^2,0) -> (C^3,0), one-parameter unfoldings, corank and
normalization to the corank-1 shape (x, p, q)."""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy as sp

from .errors import CorankPathUnavailable, MapGermError, SpecError
from .parser import GermSpec
from .rings import (
    Ring,
    X,
    Y,
    expr_is_zero,
    higher_part,
    linear_part,
    matrix_rank,
    origin_value,
    poly_coeff_map,
)


@dataclass(frozen=True)
class MapGerm:
    """Three polynomial components in (x, y), vanishing at the origin."""

    components: tuple
    ring: Ring = field(default_factory=lambda: Ring((X, Y)))
    name: str = None

    def __post_init__(self):
        if len(self.components) != 3:
            raise SpecError("a map germ has exactly 3 components")
        for i, c in enumerate(self.components):
            self.ring.check_member(c)
            if not expr_is_zero(origin_value(c, self.ring)):
                raise SpecError(f"nonzero constant term in component {i}")


@dataclass(frozen=True)
class Unfolding(MapGerm):
    """Components with coefficients in Q(t); every monomial contains x or y,
    so f_t(0) = 0 for all t."""

    warnings: tuple = ()

    def __post_init__(self):
        if self.ring.parameter is None:
            raise SpecError("an unfolding needs a parameter in its ring")
        super().__post_init__()


def validate_map_germ(spec: GermSpec):
    """Typed germ from a validated spec: Unfolding when a parameter is
    declared, MapGerm otherwise."""
    ring = spec.ring
    if spec.parameter is None:
        return MapGerm(components=spec.parsed, ring=ring, name=spec.name)
    warnings = ()
    if not any(spec.parameter in sp.sympify(c).free_symbols for c in spec.parsed):
        warnings = ("parameter declared but unused",)
    return Unfolding(
        components=spec.parsed, ring=ring, name=spec.name, warnings=warnings
    )


@dataclass(frozen=True)
class CorankData:
    corank: int
    source_change: object = None  # 2x2 sympy Matrix acting on (x, y)
    target_change: object = None  # 3x3 sympy Matrix acting on components
    normalized: tuple = None  # (x, p, q) with first component exactly x

    @property
    def normalizable(self):
        return self.normalized is not None


def differential_at_origin(g: MapGerm):
    """3x2 matrix of the linear parts."""
    rows = []
    for c in g.components:
        lin = linear_part(c, g.ring)
        rows.append([sp.expand(sp.diff(lin, v)) for v in g.ring.variables])
    return sp.Matrix(rows)


def apply_linear_changes(g: MapGerm, source, target) -> MapGerm:
    """target * f(source * (x, y)), both matrices invertible over the field."""
    x_new = sp.expand(source[0, 0] * X + source[0, 1] * Y)
    y_new = sp.expand(source[1, 0] * X + source[1, 1] * Y)
    subbed = [
        sp.expand(sp.sympify(c).subs({X: x_new, Y: y_new}, simultaneous=True))
        for c in g.components
    ]
    comps = tuple(
        sp.expand(sum(target[i, j] * subbed[j] for j in range(3))) for i in range(3)
    )
    cls = Unfolding if isinstance(g, Unfolding) else MapGerm
    return cls(components=comps, ring=g.ring, name=g.name)


def _exact_linear_combination(g: MapGerm):
    """A field vector c with c . f exactly linear and nonzero, or None.

    Deterministic: first suitable nullspace basis vector of the
    higher-degree coefficient matrix.
    """
    ring = g.ring
    highers = [higher_part(c, ring) for c in g.components]
    monomials = set()
    cmaps = []
    for h in highers:
        cmap = poly_coeff_map(h, ring) if not expr_is_zero(h) else {}
        cmaps.append(cmap)
        monomials.update(cmap)
    if monomials:
        rows = [[cmap.get(m, sp.S.Zero) for cmap in cmaps] for m in sorted(monomials)]
        basis = sp.Matrix(rows).nullspace(iszerofunc=expr_is_zero)
    else:
        basis = [sp.Matrix([1, 0, 0]), sp.Matrix([0, 1, 0]), sp.Matrix([0, 0, 1])]
    L = differential_at_origin(g)
    for vec in basis:
        form = sp.expand(sum(vec[i] * (L[i, 0] * X + L[i, 1] * Y) for i in range(3)))
        if not expr_is_zero(form):
            return sp.Matrix([vec[0], vec[1], vec[2]]).T
    return None


def corank(g: MapGerm) -> CorankData:
    """Corank of the differential at 0, with a verified linear normalization
    to (x, p, q) when one exists (corank <= 1)."""
    L = differential_at_origin(g)
    rank = matrix_rank(L)
    cr = 2 - rank
    if cr >= 2:
        return CorankData(corank=cr)
    c = _exact_linear_combination(g)
    if c is None:
        return CorankData(corank=cr)
    # complete the combination row to an invertible target change
    target = None
    for i, j in ((0, 1), (0, 2), (1, 2)):
        rows = [list(c), [0, 0, 0], [0, 0, 0]]
        rows[1][i] = 1
        rows[2][j] = 1
        M = sp.Matrix(rows)
        if not expr_is_zero(M.det()):
            target = M
            break
    mid = apply_linear_changes(g, sp.eye(2), target)
    lin = linear_part(mid.components[0], g.ring)
    a = sp.expand(sp.diff(lin, X))
    b = sp.expand(sp.diff(lin, Y))
    if not expr_is_zero(a):
        source = sp.Matrix([[sp.cancel(1 / a), sp.cancel(-b / a)], [0, 1]])
    else:
        source = sp.Matrix([[0, 1], [sp.cancel(1 / b), 0]])
    moved = apply_linear_changes(mid, source, sp.eye(3))
    if not expr_is_zero(moved.components[0] - X):
        raise MapGermError("normalization failed to produce x")  # unreachable
    shear = sp.eye(3)
    for i in (1, 2):
        lam = sp.expand(sp.diff(linear_part(moved.components[i], g.ring), X))
        shear[i, 0] = sp.expand(-lam)
    final = apply_linear_changes(moved, sp.eye(2), shear)
    if cr == 1:
        for i in (1, 2):
            if not expr_is_zero(linear_part(final.components[i], g.ring)):
                raise MapGermError("corank-1 normalization left a linear term")
    return CorankData(
        corank=cr,
        source_change=source,
        target_change=shear * target,
        normalized=final.components,
    )


def normalized_shape(g: MapGerm) -> CorankData:
    """Corank data, raising when the corank-1 construction is unavailable."""
    data = corank(g)
    if data.corank >= 2:
        raise CorankPathUnavailable("corank-1 path unavailable: corank 2")
    if not data.normalizable:
        raise CorankPathUnavailable(
            "corank-1 path unavailable: no component with an exact linear "
            "representative under linear changes"
        )
    return data
