"""Independent Morse-point counting on parametrized plane monomial curves.

A coprime pair ``2 <= p < q`` fixes the curve ``x^p - y^q = 0``, parametrized
by ``t -> (t^q, t^p)``.  Pulling a function back along the parametrization
turns counting critical points of a deformed function on the smooth part of
the curve into exact valuation arithmetic in one variable: deform ``f`` by a
symbolic multiple of a general linear form and compare the order of the
pullback derivative at the deformation parameter 0 with its order over the
rational-function field in the parameter.  The difference counts exactly the
critical points that converge to the origin as the deformation shrinks
(a Rouché count), excluding the ones escaping to infinity; each is a Morse
point when the deflated derivative is squarefree over the function field.

This route never touches standard bases, so it independently verifies the
Morse-count reading of the Euler obstruction computed by
:mod:`germcalc.invariants`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import GenericityError, InvalidInputError
from .invariants import (
    DEFAULT_BOUND,
    DEFAULT_SAMPLES,
    GermSpec,
    InvariantReport,
    LinearForm,
    euler_obstruction,
)
from .polyring import Polynomial

# Rational values used to specialize the deformation parameter when testing
# squarefreeness; one non-degenerate squarefree specialization certifies
# squarefreeness over the function field.
_SPECIALIZATIONS = (Fraction(1), Fraction(1, 2), Fraction(-1, 3))


@dataclass(frozen=True)
class MonomialCurve:
    """The plane curve ``x^p - y^q = 0`` with parametrization ``t -> (t^q, t^p)``."""

    p: int
    q: int

    def __post_init__(self):
        if not (2 <= self.p < self.q):
            raise InvalidInputError(f"need 2 <= p < q, got p={self.p}, q={self.q}")
        if gcd(self.p, self.q) != 1:
            raise InvalidInputError(f"p={self.p} and q={self.q} must be coprime")

    def equation(self) -> Polynomial:
        """Defining equation ``x^p - y^q`` in the variables (x, y)."""
        return Polynomial(2, {(self.p, 0): 1, (0, self.q): -1})

    def germ(self, func: Polynomial) -> GermSpec:
        return GermSpec(2, (self.equation(),), func)


def pullback(curve: MonomialCurve, func: Polynomial) -> Polynomial:
    """Substitute ``x = t^q, y = t^p`` into a polynomial in (x, y); exact."""
    if func.varcount != 2:
        raise InvalidInputError("pullback expects a polynomial in the two curve variables")
    if func.constant_term() != 0:
        raise InvalidInputError("the function must vanish at the origin")
    terms: dict[tuple[int, ...], Fraction] = {}
    for (a, b), coeff in func.items():
        e = (a * curve.q + b * curve.p,)
        terms[e] = terms.get(e, Fraction(0)) + coeff
    return Polynomial(1, terms)


def _univariate_derivative(poly: dict[int, Fraction]) -> dict[int, Fraction]:
    return {e - 1: c * e for e, c in poly.items() if e > 0}


def _univariate_gcd(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    def degree(p):
        return max(p) if p else -1

    def rem(num, den):
        num = dict(num)
        dd, dc = degree(den), den[degree(den)]
        while num and degree(num) >= dd:
            shift, factor = degree(num) - dd, num[degree(num)] / dc
            for e, c in den.items():
                val = num.get(e + shift, Fraction(0)) - factor * c
                if val:
                    num[e + shift] = val
                else:
                    num.pop(e + shift, None)
        return num

    while b:
        a, b = b, rem(a, b)
    return a


def _specialize(d_poly: Polynomial, value: Fraction) -> dict[int, Fraction]:
    """Evaluate the deformation variable of a (t, lambda) polynomial at ``value``."""
    out: dict[int, Fraction] = {}
    for (et, el), coeff in d_poly.items():
        c = out.get(et, Fraction(0)) + coeff * value**el
        if c:
            out[et] = c
        else:
            out.pop(et, None)
    return out


def _squarefree_over_parameter_field(d_poly: Polynomial) -> bool:
    """True when the polynomial in t is squarefree over the field in lambda.

    Tries a few rational specializations of lambda; a specialization that
    keeps the t-degree and is squarefree certifies a nonzero discriminant.
    """
    t_degree = max(et for (et, _el), _c in d_poly.items())
    for value in _SPECIALIZATIONS:
        specialized = _specialize(d_poly, value)
        if not specialized or max(specialized) != t_degree:
            continue
        derivative = _univariate_derivative(specialized)
        if not derivative:
            return max(specialized) == 0
        common = _univariate_gcd(specialized, derivative)
        if (max(common) if common else -1) <= 0:
            return True
    return False


def morse_count(curve: MonomialCurve, func: Polynomial, perturbation: LinearForm) -> int:
    """Morse points of the deformed function on the smooth part of the curve.

    Deforms ``f`` by ``lambda * perturbation``, pulls back along the
    parametrization and returns the drop in t-order of the derivative between
    the special value ``lambda = 0`` and a generic ``lambda``: the number of
    critical points, with multiplicity, converging to the origin.  Raises
    when the pullback derivative vanishes identically, when the perturbation
    pulls back to zero, or when the converging critical points fail the
    squarefreeness (Morse) check.
    """
    if len(perturbation.coefficients) != 2:
        raise InvalidInputError("the perturbation must be a linear form in (x, y)")
    base = pullback(curve, func)
    base_derivative = {e[0] - 1: c * e[0] for e, c in base.items() if e[0] > 0}
    if not base_derivative:
        raise InvalidInputError("the pullback derivative of the function vanishes identically")
    pert = pullback(curve, perturbation.polynomial())
    if pert.is_zero():
        raise InvalidInputError("the perturbation pulls back to zero on the curve")

    # Bivariate bookkeeping: exponents are (t-degree, lambda-degree).
    terms: dict[tuple[int, int], Fraction] = {
        (e, 0): c for e, c in base_derivative.items()
    }
    for (e,), c in pert.items():
        if e > 0:
            key = (e - 1, 1)
            terms[key] = terms.get(key, Fraction(0)) + c * e
    deformed = Polynomial(2, terms)

    order_special = min(et for (et, el), _c in deformed.items() if el == 0)
    order_generic = min(et for (et, _el), _c in deformed.items())
    count = order_special - order_generic

    deflated = Polynomial(
        2, {(et - order_generic, el): c for (et, el), c in deformed.items()}
    )
    if count > 0 and not _squarefree_over_parameter_field(deflated):
        raise GenericityError(
            "the deformation has non-simple critical points converging to the origin"
        )
    return count


@dataclass(frozen=True)
class MorseVerification:
    curve: MonomialCurve
    morse_count: int
    eu_f: int
    alpha_q: int
    passed: bool
    perturbations: tuple[tuple[tuple[int, int], int], ...]
    report: InvariantReport


def verify_morse_count(
    curve: MonomialCurve,
    func: Polynomial,
    seed: int = 0,
    draws: int = 5,
    samples: int = DEFAULT_SAMPLES,
    bound: int = DEFAULT_BOUND,
) -> MorseVerification:
    """Check that the valuation Morse count matches the Euler obstruction.

    Draws several perturbing linear forms (the y-coefficient is kept nonzero:
    on a monomial curve a perturbation is general exactly when its
    differential is nonzero on the tangent-cone limit, the y-axis).  All
    draws must agree -- disagreement is reported as a genericity failure, not
    resolved -- and the agreed count must equal ``(-1) * Eu_f`` for the curve.
    """
    rng = random.Random(seed)
    counts: list[tuple[tuple[int, int], int]] = []
    for _ in range(draws):
        c_x = rng.randint(-bound, bound)
        c_y = 0
        while c_y == 0:
            c_y = rng.randint(-bound, bound)
        pert = LinearForm((c_x, c_y))
        counts.append(((c_x, c_y), morse_count(curve, func, pert)))
    values = {count for _coeffs, count in counts}
    if len(values) > 1:
        raise GenericityError(f"perturbation draws disagree on the Morse count: {counts}")

    report = euler_obstruction(curve.germ(func), seed=seed, samples=samples, bound=bound)
    count = counts[0][1]
    passed = count == -report.euF and report.all_checks_passed
    return MorseVerification(
        curve=curve,
        morse_count=count,
        eu_f=report.euF,
        alpha_q=report.alphaQ,
        passed=passed,
        perturbations=tuple(counts),
        report=report,
    )
