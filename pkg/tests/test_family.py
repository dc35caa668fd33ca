import pytest
import sympy as sp

from mapgerm.config import AnalysisConfig
from mapgerm.errors import NotFinitelyDetermined, PoleAtSample
from mapgerm.family import family_verdict, generic_report, specialize
from mapgerm.germ import Unfolding, validate_map_germ
from mapgerm.parser import load_germ_spec
from mapgerm.rings import Ring, T, X, Y, expr_eq

PRING = Ring((X, Y), T)


def family(*comps):
    return Unfolding(components=tuple(sp.expand(c) for c in comps), ring=PRING)


TRIVIAL = family(X, Y**2, X * Y + T * Y**3)
S2_SMOOTHING = family(X, Y**2, Y**3 + X**3 * Y + T * X * Y)
MU_CONSTANT = family(X, Y**2, Y**3 + X**2 * Y + T * X**4 * Y)


class TestSpecialize:
    def test_exact_substitution(self):
        g = specialize(TRIVIAL, sp.Rational(1, 2))
        assert expr_eq(g.components[2], X * Y + Y**3 / 2)
        assert g.ring.parameter is None

    def test_pole_detected(self):
        u = family(X, Y**2, X * Y + (T / (T - 1)) * Y**3)
        specialize(u, 0)  # fine
        with pytest.raises(PoleAtSample):
            specialize(u, 1)


class TestGenericReport:
    def test_generic_values_over_function_field(self):
        rep = generic_report(S2_SMOOTHING, with_m0=False)
        # for generic t the xy term dominates: a cross-cap
        assert rep.crosscaps == 1
        assert rep.mu_d2 == 0

    def test_mu_constant_generic_value(self):
        rep = generic_report(MU_CONSTANT, with_m0=False)
        assert rep.mu_d2 == 1


class TestVerdicts:
    def test_trivial_family(self):
        v = family_verdict(TRIVIAL)
        assert v.mu_constant
        assert v.topologically_trivial
        assert v.whitney_equisingular
        assert v.bilipschitz_trivial
        assert v.excellent
        assert v.m0_constant
        assert all(c.holds for c in v.equivalent_conditions)

    def test_s2_smoothing_family(self):
        v = family_verdict(S2_SMOOTHING)
        assert not v.mu_constant
        assert not v.topologically_trivial
        assert not v.whitney_equisingular
        assert not v.bilipschitz_trivial
        assert not v.excellent
        assert v.report_generic.mu_d2 == 0
        assert v.report_special.mu_d2 == 2
        assert all(not c.holds for c in v.equivalent_conditions)
        # m0 happens to stay constant here even though mu jumps
        assert v.m0_constant

    def test_mu_constant_family(self):
        v = family_verdict(MU_CONSTANT)
        assert v.mu_constant
        assert v.m0_constant
        assert v.report_generic.mu_d2 == v.report_special.mu_d2 == 1
        assert v.report_generic.m0 == v.report_special.m0 == 2

    def test_four_conditions_agree_and_cover_distinct_invariants(self):
        v = family_verdict(S2_SMOOTHING, with_m0=False)
        names = [c.name for c in v.equivalent_conditions]
        assert len(names) == len(set(names)) == 4
        seen = {f for c in v.equivalent_conditions for f, _, _ in c.pairs}
        assert {"mu_d2", "mu_d2tilde", "mu_d2tilde_mod_s2", "mu_image"} <= seen

    def test_semicontinuity_diagnostics(self):
        v = family_verdict(S2_SMOOTHING, with_m0=False)
        assert any(d.startswith("semicontinuity mu_d2:") for d in v.diagnostics)

    def test_non_generic_sample_flagged(self):
        # at t = 1 the unfolding degenerates (the y^3 term cancels)
        u = family(X, Y**2, (1 - T) * Y**3 + X**2 * Y + Y**5)
        v = family_verdict(u, with_m0=False)
        assert v.mu_constant
        assert any("non-generic sample t = 1" in d for d in v.diagnostics)

    def test_not_finitely_determined_family(self):
        u = family(X, Y**2, T * Y**3)
        # at t = 0 the third component vanishes: not finitely determined
        with pytest.raises(NotFinitelyDetermined):
            family_verdict(u)

    def test_sample_reports_recorded(self):
        cfg = AnalysisConfig()
        v = family_verdict(TRIVIAL, cfg)
        assert len(v.sample_reports) == len(cfg.t_samples)
        for t0, rep in v.sample_reports:
            assert rep.finitely_determined_proxy

    def test_validate_unfolding_path(self):
        u = validate_map_germ(
            load_germ_spec(
                {
                    "parameter": "t",
                    "components": ["x", "y^2", "x*y + t*y^3"],
                }
            )
        )
        v = family_verdict(u, with_m0=False)
        assert v.mu_constant
