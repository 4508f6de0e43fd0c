"""The Milnor tower, genericity sampling, GSV routes and the Euler obstruction."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog import build_catalog
from germcalc.errors import (
    GenericityError,
    InvalidInputError,
    NonIcisError,
    NonIsolatedError,
)
from germcalc.exprparse import parse
from germcalc.invariants import (
    GermSpec,
    LinearForm,
    euler_obstruction,
    milnor_hypersurface,
    milnor_icis,
    milnor_of_function,
    mu_G,
    pick_generic,
    validate_icis,
)
from germcalc.stdbasis import INFINITE

CATALOG = build_catalog()


class TestLinearForm:
    def test_rejects_zero_vector(self):
        with pytest.raises(InvalidInputError):
            LinearForm((0, 0))

    def test_polynomial(self, xy):
        assert LinearForm((2, -3)).polynomial() == parse("2*x - 3*y", xy)


class TestMilnorHypersurface:
    def test_morse_point(self, xy):
        assert milnor_hypersurface(parse("x^2 + y^2", xy)) == 1

    def test_cusp(self, xy):
        assert milnor_hypersurface(parse("x^2 - y^3", xy)) == 2

    @pytest.mark.parametrize("a,b", [(3, 4), (2, 5), (4, 4)])
    def test_brieskorn_product_formula(self, xy, a, b):
        assert milnor_hypersurface(parse(f"x^{a} + y^{b}", xy)) == (a - 1) * (b - 1)

    def test_smooth_point_is_zero_not_an_error(self, xy):
        assert milnor_hypersurface(parse("x + y^2", xy)) == 0

    def test_non_isolated_singularity(self, xyz):
        with pytest.raises(NonIsolatedError):
            milnor_hypersurface(parse("x^2 - y^2", xyz))

    def test_requires_vanishing_at_origin(self, xy):
        with pytest.raises(InvalidInputError):
            milnor_hypersurface(parse("1 + x", xy))


class TestValidateIcis:
    def test_cone_is_icis(self, xyz):
        validate_icis([parse("x^2 + y^2 + z^2", xyz)], 3)

    def test_crossing_planes_are_not(self, xyz):
        with pytest.raises(NonIcisError, match="not isolated"):
            validate_icis([parse("x^2 - y^2", xyz)], 3)

    def test_smooth_ambient_is_fine(self):
        validate_icis([], 3)

    def test_too_many_equations(self, xy):
        with pytest.raises(NonIcisError):
            validate_icis([parse(s, xy) for s in ("x", "y", "x + y")], 2)


class TestMilnorIcis:
    def test_quadric_cone(self, xyz):
        assert milnor_icis([parse("x^2 + y^2 + z^2", xyz)], 3, 0) == 1

    def test_matches_hypersurface_route_on_cusp(self, xy):
        cusp = parse("x^2 - y^3", xy)
        assert milnor_icis([cusp], 2, 0) == milnor_hypersurface(cusp) == 2

    def test_fat_point_base_case(self):
        from germcalc.exprparse import VarTable

        x_only = VarTable(("x",))
        assert milnor_icis([parse("x^2", x_only)], 1, 0) == 1

    def test_smooth_ambient(self):
        assert milnor_icis([], 3, 0) == 0

    def test_independent_of_admissible_slices(self, xy):
        cusp = parse("x^2 - y^3", xy)
        values = {milnor_icis([cusp], 2, seed) for seed in range(8)}
        assert values == {2}


class TestSpaceCurve:
    """Codimension-2 ICIS: four pairwise-transverse concurrent lines in 3-space.

    V(x^2 + y^2 + z^2, x*y) smooths to an elliptic quartic minus its four
    points at infinity, so chi = -4 and mu = 5; equivalently 2*delta - r + 1
    with delta = 4 and r = 4 branches.
    """

    def germ_equations(self, xyz):
        return (parse("x^2 + y^2 + z^2", xyz), parse("x*y", xyz))

    def test_milnor_number(self, xyz):
        g = self.germ_equations(xyz)
        validate_icis(list(g), 3)
        assert {milnor_icis(list(g), 3, seed) for seed in range(6)} == {5}

    def test_gsv_routes_agree(self, xyz):
        germ = GermSpec(3, self.germ_equations(xyz), parse("z", xyz))
        assert mu_G(germ) == 8

    def test_general_function_has_zero_obstruction(self, xyz):
        # z is transverse to all four line directions, so mu(f) = mu(l) = 3.
        rep = euler_obstruction(GermSpec(3, self.germ_equations(xyz), parse("z", xyz)))
        assert (rep.muX, rep.muF, rep.muL, rep.euF) == (5, 3, 3, 0)
        assert rep.all_checks_passed

    def test_degenerate_quadratic_function(self, xyz):
        # mu(f) = colength <x^2+y^2, x*y, z^2> - 1 = 7: quotient basis
        # {1, x, y, y^2} x {1, z}.
        rep = euler_obstruction(
            GermSpec(3, self.germ_equations(xyz), parse("x^2 + y^2", xyz))
        )
        assert (rep.muF, rep.muL, rep.euF, rep.alphaQ) == (7, 3, -4, 4)
        assert rep.all_checks_passed


class TestMilnorOfFunction:
    def test_cusp_with_transverse_function(self, xy):
        germ = GermSpec(2, (parse("x^2 - y^3", xy),), parse("x", xy))
        assert milnor_of_function(germ, 0) == 2

    def test_cusp_with_general_function(self, xy):
        germ = GermSpec(2, (parse("x^2 - y^3", xy),), parse("y", xy))
        assert milnor_of_function(germ, 0) == 1

    def test_smooth_ambient_reduces_to_hypersurface(self, xy):
        germ = GermSpec(2, (), parse("x^2 + y^2", xy))
        assert milnor_of_function(germ, 0) == 1

    def test_function_vanishing_on_a_branch(self, xy):
        germ = GermSpec(2, (parse("x^3 - x*y^2", xy),), parse("x", xy))
        with pytest.raises(NonIsolatedError):
            milnor_of_function(germ, 0)


class TestPickGeneric:
    def test_cusp_generic_slice(self, xy):
        germ = GermSpec(2, (parse("x^2 - y^3", xy),), parse("x", xy))
        _witness, mu_l, trace = pick_generic(germ, 0)
        assert mu_l == 1
        assert all(s.mu >= mu_l for s in trace)

    def test_quadric_cone(self, xyz):
        germ = GermSpec(3, (parse("x^2 + y^2 + z^2", xyz),), parse("z", xyz))
        assert pick_generic(germ, 0)[1] == 1

    def test_smooth_plane(self, xy):
        germ = GermSpec(2, (), parse("x^2 + y^2", xy))
        assert pick_generic(germ, 0)[1] == 0

    def test_degenerate_sample_is_recorded_not_resolved(self, xy):
        # Seed 3 draws the form 2x, proportional to a component of the germ:
        # its slice value is recorded as infinite and the minimum over the
        # remaining finite samples still yields the generic value.
        germ = GermSpec(2, (parse("x^3 - x*y^2", xy),), parse("x + 2*y", xy))
        rep = euler_obstruction(germ, seed=3)
        assert any(s.mu == INFINITE for s in rep.samples_trace)
        assert rep.muL == 2 and rep.euF == 0 and rep.all_checks_passed

    def test_all_degenerate_samples_raise(self, xy):
        # Four concurrent lines eat every form with coefficients in [-1, 1].
        germ = GermSpec(2, (parse("x*y*(x^2 - y^2)", xy),), parse("x + 2*y", xy))
        with pytest.raises(GenericityError):
            pick_generic(germ, 0, samples=3, bound=1)


class TestMuG:
    def test_cusp(self, xy):
        germ = GermSpec(2, (parse("x^2 - y^3", xy),), parse("x", xy))
        assert mu_G(germ) == 4

    def test_quadric_cone(self, xyz):
        germ = GermSpec(3, (parse("x^2 + y^2 + z^2", xyz),), parse("z", xyz))
        assert mu_G(germ) == 2

    def test_smooth_ambient(self, xy):
        germ = GermSpec(2, (), parse("x^2 + y^2", xy))
        assert mu_G(germ) == 1

    def test_non_isolated_function(self, xy):
        germ = GermSpec(2, (parse("x^3 - x*y^2", xy),), parse("x", xy))
        with pytest.raises(NonIsolatedError):
            mu_G(germ)


class TestEulerObstruction:
    def test_cusp_transverse(self, xy):
        rep = euler_obstruction(GermSpec(2, (parse("x^2 - y^3", xy),), parse("x", xy)))
        assert (rep.muX, rep.muF, rep.muL) == (2, 2, 1)
        assert (rep.muG_f, rep.muG_l) == (4, 3)
        assert (rep.euF, rep.alphaQ) == (-1, 1)
        assert rep.all_checks_passed

    def test_cusp_general_function(self, xy):
        rep = euler_obstruction(GermSpec(2, (parse("x^2 - y^3", xy),), parse("y", xy)))
        assert rep.euF == 0 and rep.all_checks_passed

    def test_higher_cusp(self, xy):
        rep = euler_obstruction(GermSpec(2, (parse("x^2 - y^5", xy),), parse("x", xy)))
        assert (rep.euF, rep.alphaQ) == (-3, 3)
        assert rep.all_checks_passed

    def test_quadric_cone(self, xyz):
        rep = euler_obstruction(GermSpec(3, (parse("x^2 + y^2 + z^2", xyz),), parse("z", xyz)))
        assert rep.euF == 0 and rep.all_checks_passed

    @pytest.mark.parametrize(
        "n,src,mu",
        [(1, "x^2", 1), (2, "x^2 + y^3", 2), (3, "x^2 + y^2 + z^2", 1)],
    )
    def test_smooth_germ_reduction(self, n, src, mu):
        from germcalc.exprparse import VarTable

        vars_table = VarTable(("x", "y", "z")[:n])
        rep = euler_obstruction(GermSpec(n, (), parse(src, vars_table)))
        assert rep.muF == mu and rep.muL == 0
        assert rep.euF == (-1) ** n * mu
        assert rep.all_checks_passed

    def test_non_icis_rejected(self, xyz):
        germ = GermSpec(3, (parse("x^2 - y^2", xyz),), parse("x + 2*y + z^2", xyz))
        with pytest.raises(NonIcisError):
            euler_obstruction(germ)

    def test_report_dict_is_deterministic(self, xy):
        import json

        germ = GermSpec(2, (parse("x^2 - y^3", xy),), parse("x", xy))
        a = json.dumps(euler_obstruction(germ, seed=3).to_dict(("x", "y")), sort_keys=True)
        b = json.dumps(euler_obstruction(germ, seed=3).to_dict(("x", "y")), sort_keys=True)
        assert a == b


class TestCatalogIdentities:
    @pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.name)
    def test_identity_suite(self, entry):
        rep = euler_obstruction(entry.germ(), seed=0)
        assert rep.muX == entry.mu_x
        assert rep.all_checks_passed
        # every identity the report tracks, restated directly:
        assert rep.muF >= rep.alphaQ
        if rep.muX > 0:
            assert rep.muF > rep.alphaQ
            assert rep.muL > 0
        assert rep.muG_f == rep.muF + rep.muX
        assert rep.muG_l == rep.muL + rep.muX

    @pytest.mark.parametrize("entry", CATALOG[::5], ids=lambda e: e.name)
    def test_seed_independence(self, entry):
        germ = entry.germ()
        towers = {
            (rep.muX, rep.muF, rep.muL, rep.muG_f, rep.muG_l, rep.euF, rep.alphaQ)
            for rep in (euler_obstruction(germ, seed=s) for s in range(5))
        }
        assert len(towers) == 1

    @pytest.mark.parametrize("entry", CATALOG[::4], ids=lambda e: e.name)
    def test_fresh_generic_linear_function_has_zero_obstruction(self, entry):
        germ = entry.germ()
        witness, _mu, _trace = pick_generic(germ, random.Random(999))
        rep = euler_obstruction(
            GermSpec(germ.varcount, germ.defining, witness.polynomial()), seed=0
        )
        assert rep.euF == 0 and rep.all_checks_passed

    def test_semicontinuity_of_samples(self):
        for entry in CATALOG[::6]:
            rep = euler_obstruction(entry.germ(), seed=1)
            finite = [s.mu for s in rep.samples_trace if s.mu != INFINITE]
            assert finite and min(finite) == rep.muL


@st.composite
def quasi_homogeneous_cases(draw):
    a = draw(st.integers(2, 5))
    b = draw(st.integers(2, 5))
    c1 = draw(st.integers(-3, 3).filter(lambda v: v != 0))
    c2 = draw(st.integers(-3, 3).filter(lambda v: v != 0))
    f = draw(st.sampled_from(["x", "y", "x + y", "x - 2*y"]))
    return f"{c1}*x^{a} + {c2}*y^{b}", f


class TestTwoPathProperty:
    @given(quasi_homogeneous_cases())
    @settings(max_examples=25)
    def test_gsv_routes_agree_on_random_curves(self, case):
        gsrc, fsrc = case
        from germcalc.exprparse import VarTable

        vars_table = VarTable(("x", "y"))
        g = parse(gsrc, vars_table)
        f = parse(fsrc, vars_table)
        try:
            germ = GermSpec(2, (g,), f)
            value = mu_G(germ)  # raises CrossCheckError on route disagreement
        except (NonIsolatedError, NonIcisError):
            return
        assert value >= 0
