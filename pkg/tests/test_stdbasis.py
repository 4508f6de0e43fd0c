"""Standard bases, staircases, colengths, and the truncated-dimension oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from germcalc.errors import (
    InvalidInputError,
    OracleInconclusiveError,
    ResourceLimitError,
)
from germcalc.exprparse import parse
from germcalc.stdbasis import (
    INFINITE,
    IdealSpec,
    colength,
    colength_oracle,
    normal_form,
    stabilized_colength_oracle,
    standard_basis,
    standard_monomial_count,
)


def ideal(vars_table, *sources):
    return IdealSpec(
        tuple(parse(src, vars_table) for src in sources), vars_table.varcount
    )


class TestNormalForm:
    def test_membership_reduces_to_zero(self, xy):
        assert normal_form(parse("x^2", xy), [parse("x", xy)]).is_zero()

    def test_coprime_leaves_untouched(self, xy):
        p = parse("y", xy)
        assert normal_form(p, [parse("x", xy)]) == p

    def test_cusp_lies_in_its_jacobian_ideal(self, xy):
        # x^2 - y^3 = (x/2)(2x) + (y/3)(-3y^2)
        cusp = parse("x^2 - y^3", xy)
        assert normal_form(cusp, [parse("2*x", xy), parse("-3*y^2", xy)]).is_zero()

    def test_unit_multiple_membership(self, xy):
        # x is in the local ideal of x - x^2 even though not in the polynomial one.
        assert normal_form(parse("x", xy), [parse("x - x^2", xy)]).is_zero()

    def test_empty_reducer_list_is_a_no_op(self, xy):
        p = parse("x^2 - y^3", xy)
        assert normal_form(p, []) == p


class TestStandardBasis:
    def test_monomial_ideal(self, xy):
        sb = standard_basis(ideal(xy, "x", "y^3"))
        assert sb.staircase == frozenset({(1, 0), (0, 3)})
        assert sb.zero_dimensional

    def test_cusp_jacobian(self, xy):
        sb = standard_basis(ideal(xy, "2*x", "-3*y^2"))
        assert sb.staircase == frozenset({(1, 0), (0, 2)})

    def test_substitution_shrinks_staircase(self, xy):
        sb = standard_basis(ideal(xy, "x^2 - y^3", "y"))
        assert sb.staircase == frozenset({(0, 1), (2, 0)})

    def test_generators_reduce_to_zero(self, xy, xyz):
        for spec in [
            ideal(xy, "x^2 - y^3", "3*y^2"),
            ideal(xy, "x^3 - x*y^2", "x^2*y + y^4"),
            ideal(xyz, "x^2 + y^2 + z^3", "2*x", "2*y", "3*z^2"),
        ]:
            sb = standard_basis(spec)
            for g in spec.generators:
                assert normal_form(g, list(sb.basis)).is_zero()

    def test_unit_ideal_flagged(self, xy):
        sb = standard_basis(ideal(xy, "1 + x"))
        assert sb.is_unit_ideal and sb.zero_dimensional

    def test_pair_limit_enforced(self, xy):
        with pytest.raises(ResourceLimitError):
            standard_basis(ideal(xy, "x^2 - y^3", "x*y"), pair_limit=2)


class TestColength:
    def test_maximal_ideal(self, xy):
        assert colength(ideal(xy, "x", "y")) == 1

    def test_cusp_jacobian(self, xy):
        assert colength(ideal(xy, "2*x", "-3*y^2")) == 2

    def test_sliced_cusp(self, xy):
        assert colength(ideal(xy, "x^2 - y^3", "3*y^2")) == 4

    def test_monomial_box(self, xy):
        assert colength(ideal(xy, "x^2", "y^3")) == 6

    def test_unit_ideal(self, xy):
        assert colength(ideal(xy, "1 + x")) == 0

    def test_infinite_when_not_zero_dimensional(self, xyz):
        assert colength(ideal(xyz, "2*x", "-2*y")) == INFINITE

    @pytest.mark.parametrize("transform", ["permute", "scale", "combine"])
    def test_invariance_under_basis_changes(self, xy, transform):
        g1, g2 = parse("x^2 - y^3", xy), parse("x*y + y^3", xy)
        base = colength(IdealSpec((g1, g2), 2))
        if transform == "permute":
            changed = IdealSpec((g2, g1), 2)
        elif transform == "scale":
            changed = IdealSpec((g1 * Fraction(-3, 7), g2 * Fraction(5, 2)), 2)
        else:
            changed = IdealSpec((g1, g2 + parse("x^2 - y", xy) * g1), 2)
        assert colength(changed) == base

    def test_enumeration_guard(self, xy):
        sb = standard_basis(ideal(xy, "x^20", "y^20"))
        with pytest.raises(ResourceLimitError):
            standard_monomial_count(sb.staircase, 2, limit=100)

    def test_zero_dimensional_iff_finite(self, xy, xyz):
        finite = [ideal(xy, "x", "y^3"), ideal(xyz, "x", "y", "z^2")]
        infinite = [ideal(xy, "x^2"), ideal(xyz, "x^2 + y^2")]
        for spec in finite:
            assert standard_basis(spec).zero_dimensional
            assert colength(spec) != INFINITE
        for spec in infinite:
            assert not standard_basis(spec).zero_dimensional
            assert colength(spec) == INFINITE


class TestColengthOracle:
    def test_maximal_ideal(self, xy):
        assert colength_oracle(ideal(xy, "x", "y"), 3) == 1

    def test_truncation_degree_must_be_positive(self, xy):
        with pytest.raises(InvalidInputError):
            colength_oracle(ideal(xy, "x", "y"), 0)

    def test_cusp_jacobian(self, xy):
        assert colength_oracle(ideal(xy, "2*x", "-3*y^2"), 4) == 2

    def test_monomial_box(self, xy):
        assert colength_oracle(ideal(xy, "x^2", "y^3"), 6) == 6

    def test_estimates_grow_to_colength(self, xy):
        spec = ideal(xy, "x^2 - y^3", "3*y^2")
        values = [colength_oracle(spec, k) for k in range(1, 7)]
        assert values == sorted(values)
        assert values[-1] == colength(spec) == 4

    def test_unit_ideal(self, xy):
        assert stabilized_colength_oracle(ideal(xy, "1 + x")) == 0

    def test_inconclusive_on_positive_dimensional_ideal(self, xy):
        with pytest.raises(OracleInconclusiveError):
            stabilized_colength_oracle(ideal(xy, "x^2"), max_degree=8)

    @pytest.mark.parametrize(
        "sources",
        [
            ("x", "y"),
            ("2*x", "-3*y^2"),
            ("x^2 - y^3", "3*y^2"),
            ("x^2 - y^3", "x"),
            ("x^4", "y^4"),
            ("x^3 - x*y^2", "x + 2*y"),
            ("x^2*y + y^4", "2*x*y", "x^2 + 4*y^3"),
        ],
    )
    def test_agrees_with_standard_basis_route(self, xy, sources):
        spec = ideal(xy, *sources)
        value = colength(spec)
        assert value <= 30
        assert stabilized_colength_oracle(spec) == value

    def test_agreement_in_three_variables(self, xyz):
        # <x^2 + y^2 + z^3, x, y> = <x, y, z^3>: standard monomials 1, z, z^2.
        spec = ideal(xyz, "x^2 + y^2 + z^3", "2*x", "2*y")
        assert colength(spec) == stabilized_colength_oracle(spec) == 3

    def test_agreement_on_quadric_cone_slice(self, xyz):
        # <x^2 + y^2 + z^2, x, y> = <x, y, z^2>: standard monomials 1, z.
        spec = ideal(xyz, "x^2 + y^2 + z^2", "2*x", "2*y")
        assert colength(spec) == stabilized_colength_oracle(spec) == 2


@st.composite
def small_binomial_ideals(draw):
    """Random zero-dimensional-ish ideals: pure powers plus an optional mixer."""
    a = draw(st.integers(1, 4))
    b = draw(st.integers(1, 4))
    gens = [f"x^{a}", f"y^{b}"]
    if draw(st.booleans()):
        c = draw(st.integers(-3, 3).filter(lambda v: v != 0))
        gens.append(f"x^{max(a - 1, 1)}*y^{max(b - 1, 1)} + {c}*x^{a}*y")
    return gens


class TestOracleEquivalenceProperty:
    @given(small_binomial_ideals())
    @settings(max_examples=30)
    def test_random_small_ideals(self, gens):
        from germcalc.exprparse import VarTable

        vars_table = VarTable(("x", "y"))
        spec = IdealSpec(tuple(parse(s, vars_table) for s in gens), 2)
        value = colength(spec)
        if value <= 30:
            assert stabilized_colength_oracle(spec) == value
