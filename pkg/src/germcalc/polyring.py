"""Exact sparse multivariate polynomial arithmetic with a local monomial order.

A monomial is a tuple of nonnegative exponents, one entry per variable.  A
polynomial maps monomials to nonzero ``Fraction`` coefficients; the zero
polynomial is the empty map.  All coefficients are exact rationals backed by
arbitrary-precision integers -- there is no floating point anywhere in the
algebra, because every downstream invariant is an exact integer count.

The module fixes one *local* monomial order: lower total degree wins, and
ties between monomials of equal degree are broken reverse-lexicographically
(the smaller exponent in the first differing variable wins).  Consequences:

* the constant monomial ``1`` is the greatest monomial, so the leading term
  of a germ is its lowest-order part at the origin;
* the order is total and multiplicative, which is what Mora's standard-basis
  machinery in :mod:`germcalc.stdbasis` needs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping, Union

from .errors import DimensionError, InvalidInputError

Mono = tuple[int, ...]
CoeffLike = Union[int, Fraction]


def mono_degree(mono: Mono) -> int:
    """Total degree of a monomial."""
    return sum(mono)


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(i + j for i, j in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True when monomial ``a`` divides ``b``."""
    return all(i <= j for i, j in zip(a, b))


def mono_quotient(a: Mono, b: Mono) -> Mono:
    """Exponent vector of ``a / b``; requires ``b`` to divide ``a``."""
    return tuple(i - j for i, j in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(i, j) for i, j in zip(a, b))


def order_key(mono: Mono) -> tuple[int, Mono]:
    """Sort key of the local order: a *smaller* key means a *greater* monomial.

    Comparing ``(total degree, exponent tuple)`` ascending puts the constant
    monomial first, then degree 1, and so on; within a degree the
    lexicographically smaller exponent tuple is the greater monomial.
    """
    return (sum(mono), mono)


def mono_greater(a: Mono, b: Mono) -> bool:
    """True when ``a`` is strictly greater than ``b`` in the local order."""
    return order_key(a) < order_key(b)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    Terms are held in canonical form (no zero coefficients, all exponent
    tuples of length ``varcount``), so equality of polynomials is structural
    equality of their term maps.
    """

    __slots__ = ("_varcount", "_terms")

    def __init__(
        self,
        varcount: int,
        terms: Mapping[Mono, CoeffLike] | Iterable[tuple[Mono, CoeffLike]] = (),
    ):
        if varcount < 1:
            raise InvalidInputError("a polynomial ring needs at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Mono, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != varcount:
                raise DimensionError(
                    f"monomial {mono} has {len(mono)} exponents, expected {varcount}"
                )
            if any(e < 0 for e in mono):
                raise InvalidInputError(f"negative exponent in monomial {mono}")
            c = collected.get(mono, Fraction(0)) + Fraction(coeff)
            collected[mono] = c
        self._varcount = varcount
        self._terms = {m: c for m, c in collected.items() if c != 0}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, varcount: int) -> "Polynomial":
        return cls(varcount)

    @classmethod
    def constant(cls, varcount: int, value: CoeffLike) -> "Polynomial":
        return cls(varcount, {(0,) * varcount: value})

    @classmethod
    def variable(cls, varcount: int, index: int) -> "Polynomial":
        if not 0 <= index < varcount:
            raise IndexError(f"variable index {index} out of range for {varcount} variables")
        expo = [0] * varcount
        expo[index] = 1
        return cls(varcount, {tuple(expo): 1})

    # -- inspection -----------------------------------------------------------

    @property
    def varcount(self) -> int:
        return self._varcount

    def items(self) -> Iterator[tuple[Mono, Fraction]]:
        return iter(self._terms.items())

    def monomials(self) -> Iterator[Mono]:
        return iter(self._terms)

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, mono: Mono) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self._varcount, Fraction(0))

    def total_degree(self) -> int:
        """Maximal total degree of a term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    def min_degree(self) -> int:
        """Minimal total degree of a term (the order of the germ at 0)."""
        if not self._terms:
            raise InvalidInputError("the zero polynomial has no minimal degree")
        return min(mono_degree(m) for m in self._terms)

    def leading_term(self) -> tuple[Mono, Fraction]:
        """Greatest term in the local order; the constant leads when present."""
        if not self._terms:
            raise InvalidInputError("the zero polynomial has no leading term")
        mono = min(self._terms, key=order_key)
        return mono, self._terms[mono]

    def leading_monomial(self) -> Mono:
        return self.leading_term()[0]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other: "Polynomial | CoeffLike") -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._varcount != self._varcount:
                raise DimensionError(
                    f"mixing polynomials in {other._varcount} and {self._varcount} variables"
                )
            return other
        return Polynomial.constant(self._varcount, other)

    def __add__(self, other: "Polynomial | CoeffLike") -> "Polynomial":
        other = self._coerce(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = out.get(mono, Fraction(0)) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return self._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | CoeffLike") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: CoeffLike) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "Polynomial | CoeffLike") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                c = out.get(m, Fraction(0)) + c1 * c2
                if c:
                    out[m] = c
                else:
                    out.pop(m, None)
        return self._wrap(out)

    def __rmul__(self, other: CoeffLike) -> "Polynomial":
        return self.scale(other)

    def scale(self, factor: CoeffLike) -> "Polynomial":
        f = Fraction(factor)
        if f == 0:
            return Polynomial(self._varcount)
        return self._wrap({m: c * f for m, c in self._terms.items()})

    def term_mul(self, mono: Mono, coeff: CoeffLike) -> "Polynomial":
        """Multiply by a single term ``coeff * x^mono`` (fast path for reductions)."""
        f = Fraction(coeff)
        if f == 0:
            return Polynomial(self._varcount)
        return self._wrap({mono_mul(m, mono): c * f for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidInputError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial.constant(self._varcount, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def partial(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``index``."""
        if not 0 <= index < self._varcount:
            raise IndexError(f"variable index {index} out of range for {self._varcount} variables")
        out: dict[Mono, Fraction] = {}
        for mono, coeff in self._terms.items():
            e = mono[index]
            if e == 0:
                continue
            lowered = list(mono)
            lowered[index] = e - 1
            out[tuple(lowered)] = coeff * e
        return self._wrap(out)

    def primitive(self) -> "Polynomial":
        """Scale by a rational unit: integer coefficients, content 1, positive lead.

        Used as coefficient hygiene between reduction steps; the result spans
        the same ideal member since nonzero scalars are units.
        """
        if not self._terms:
            return self
        denom = 1
        for c in self._terms.values():
            denom = lcm(denom, c.denominator)
        numer = 0
        for c in self._terms.values():
            numer = gcd(numer, c.numerator * (denom // c.denominator))
        scale = Fraction(denom, numer)
        scaled = self._wrap({m: c * scale for m, c in self._terms.items()})
        if scaled.leading_coefficient() < 0:
            return -scaled
        return scaled

    # -- protocol plumbing ----------------------------------------------------

    def _wrap(self, terms: dict[Mono, Fraction]) -> "Polynomial":
        p = object.__new__(Polynomial)
        p._varcount = self._varcount
        p._terms = terms
        return p

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self == Polynomial.constant(self._varcount, other)
            return NotImplemented
        return self._varcount == other._varcount and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._varcount, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        terms = sorted(self._terms.items(), key=lambda t: order_key(t[0]))
        return f"Polynomial({self._varcount}, {terms!r})"
