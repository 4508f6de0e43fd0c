"""Mora standard bases in the local ring at the origin.

Everything downstream reduces to one number: the *colength* of an ideal, the
vector-space dimension of the local ring modulo the ideal.  This module
computes it two independent ways:

* ``standard_basis`` / ``colength`` -- Mora's tangent-cone algorithm.  The
  weak normal form picks, among the reducers whose leading monomial divides
  the current one, a reducer of minimal ecart (ties broken by the monomial
  order), inserting intermediate results as extra reducers when their ecart
  is exceeded; that is the classical termination guarantee for local orders.
  Completion is Buchberger-style over critical pairs in normal strategy
  (increasing lcm degree).  The minimal generators of the leading ideal form
  the staircase, and the standard monomials below it are counted by a
  depth-first walk.

* ``colength_oracle`` -- exact Gaussian elimination on the space of
  polynomials of degree below a truncation bound, entirely independent of
  the reduction machinery above.  The truncated dimension is nondecreasing
  in the bound and, once two consecutive bounds agree, it equals the true
  colength (Nakayama), which is what ``stabilized_colength_oracle`` exploits.

Normal forms here are *weak* normal forms: the result's leading monomial is
irreducible, but lower-order terms may remain divisible -- full reduction is
a power-series notion and generally has no finite polynomial answer under a
local order.  No property computed here depends on tails.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import InvalidInputError, OracleInconclusiveError, ResourceLimitError
from .polyring import (
    Mono,
    Polynomial,
    mono_degree,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_quotient,
    order_key,
)

INFINITE = float("inf")

DEFAULT_PAIR_LIMIT = 100_000
MONOMIAL_COUNT_LIMIT = 10**6


@dataclass(frozen=True)
class IdealSpec:
    """Generators of an ideal in the local ring at the origin."""

    generators: tuple[Polynomial, ...]
    varcount: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise InvalidInputError("an ideal needs at least one generator")
        for g in self.generators:
            if g.varcount != self.varcount:
                raise InvalidInputError(
                    f"generator in {g.varcount} variables inside a {self.varcount}-variable ideal"
                )


@dataclass(frozen=True)
class StandardBasis:
    """A Mora standard basis with the staircase of its leading ideal."""

    basis: tuple[Polynomial, ...]
    staircase: frozenset[Mono]
    zero_dimensional: bool

    @property
    def is_unit_ideal(self) -> bool:
        return any(mono_degree(m) == 0 for m in self.staircase)


def ecart(p: Polynomial) -> int:
    """Degree spread of a nonzero polynomial: total degree minus leading degree."""
    return p.total_degree() - mono_degree(p.leading_monomial())


def normal_form(p: Polynomial, reducers: Sequence[Polynomial]) -> Polynomial:
    """Mora weak normal form of ``p`` against ``reducers``.

    Returns ``r`` with ``u * p = r`` modulo the ideal of the reducers for some
    local unit ``u``, and with the leading monomial of ``r`` divisible by no
    reducer's leading monomial.  Intermediate results are rescaled to integer
    coefficients with content 1 after every step (a unit, so harmless).
    """
    entries = [
        (g.leading_monomial(), g.leading_coefficient(), ecart(g), g)
        for g in reducers
        if not g.is_zero()
    ]
    h = p
    while not h.is_zero():
        lm_h, lc_h = h.leading_term()
        best = None
        best_key = None
        for entry in entries:
            if mono_divides(entry[0], lm_h):
                key = (entry[2], order_key(entry[0]))
                if best_key is None or key < best_key:
                    best, best_key = entry, key
        if best is None:
            break
        ec_h = ecart(h)
        if best[2] > ec_h:
            entries.append((lm_h, lc_h, ec_h, h))
        h = h - best[3].term_mul(mono_quotient(lm_h, best[0]), lc_h / best[1])
        if not h.is_zero():
            h = h.primitive()
    return h


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """The critical-pair combination cancelling both leading terms."""
    lm_f, lc_f = f.leading_term()
    lm_g, lc_g = g.leading_term()
    m = mono_lcm(lm_f, lm_g)
    return f.term_mul(mono_quotient(m, lm_f), 1 / lc_f) - g.term_mul(
        mono_quotient(m, lm_g), 1 / lc_g
    )


def _unit_basis(varcount: int) -> StandardBasis:
    one = Polynomial.constant(varcount, 1)
    return StandardBasis((one,), frozenset({(0,) * varcount}), True)


def _minimal_staircase(monos: Iterable[Mono]) -> frozenset[Mono]:
    monos = set(monos)
    return frozenset(
        m for m in monos if not any(o != m and mono_divides(o, m) for o in monos)
    )


def _has_pure_power(staircase: frozenset[Mono], index: int) -> bool:
    return any(
        m[index] > 0 and all(e == 0 for j, e in enumerate(m) if j != index)
        for m in staircase
    )


def standard_basis(ideal: IdealSpec, pair_limit: int = DEFAULT_PAIR_LIMIT) -> StandardBasis:
    """Complete the generators to a standard basis of the local ideal.

    Raises :class:`ResourceLimitError` when more than ``pair_limit`` critical
    pairs would be generated.  Any element with nonzero constant term is a
    local unit and short-circuits to the unit ideal.
    """
    n = ideal.varcount
    gens = [g.primitive() for g in ideal.generators if not g.is_zero()]
    if not gens:
        return StandardBasis((), frozenset(), False)
    if any(g.constant_term() != 0 for g in gens):
        return _unit_basis(n)

    basis: list[Polynomial] = list(gens)
    pairs: list[tuple[int, int, int, int]] = []
    generated = 0

    def push_pairs(k: int):
        nonlocal generated
        lm_k = basis[k].leading_monomial()
        for i in range(k):
            lcm_deg = mono_degree(mono_lcm(basis[i].leading_monomial(), lm_k))
            generated += 1
            if generated > pair_limit:
                raise ResourceLimitError(
                    f"critical-pair queue exceeded the bound of {pair_limit} pairs"
                )
            heapq.heappush(pairs, (lcm_deg, generated, i, k))

    for k in range(len(basis)):
        push_pairs(k)
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        h = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if h.is_zero():
            continue
        if h.constant_term() != 0:
            return _unit_basis(n)
        basis.append(h.primitive())
        push_pairs(len(basis) - 1)

    staircase = _minimal_staircase(b.leading_monomial() for b in basis)
    zero_dim = all(_has_pure_power(staircase, i) for i in range(n))
    return StandardBasis(tuple(basis), staircase, zero_dim)


def standard_monomial_count(
    staircase: frozenset[Mono], varcount: int, limit: int = MONOMIAL_COUNT_LIMIT
) -> int:
    """Count monomials outside the leading ideal by depth-first enumeration.

    Only valid for zero-dimensional staircases (a pure power per variable
    bounds every exponent).  Guarded by ``limit`` against runaway counts.
    """
    if any(mono_degree(m) == 0 for m in staircase):
        return 0  # unit ideal
    bounds = []
    for i in range(varcount):
        pure = [
            m[i]
            for m in staircase
            if m[i] > 0 and all(e == 0 for j, e in enumerate(m) if j != i)
        ]
        if not pure:
            raise InvalidInputError("staircase is not zero-dimensional")
        bounds.append(min(pure))

    gens = sorted(staircase)
    count = 0
    visited = 0
    current = [0] * varcount

    def walk(var: int):
        nonlocal count, visited
        for e in range(bounds[var]):
            current[var] = e
            mono = tuple(current)
            visited += 1
            if visited > limit:
                raise ResourceLimitError(
                    f"standard-monomial enumeration exceeded {limit} monomials"
                )
            # Divisibility is monotone in each exponent: once a staircase
            # generator divides, it divides for every larger exponent too.
            if any(mono_divides(g, mono) for g in gens):
                break
            if var == varcount - 1:
                count += 1
            else:
                walk(var + 1)
        current[var] = 0

    walk(0)
    return count


def colength(ideal: IdealSpec, pair_limit: int = DEFAULT_PAIR_LIMIT) -> int | float:
    """Dimension of the local ring modulo the ideal; ``INFINITE`` when not 0-dim."""
    sb = standard_basis(ideal, pair_limit=pair_limit)
    if not sb.zero_dimensional:
        return INFINITE
    return standard_monomial_count(sb.staircase, ideal.varcount)


# -- independent truncated linear-algebra oracle ------------------------------


def monomials_below_degree(varcount: int, bound: int) -> list[Mono]:
    """All exponent tuples of total degree < ``bound``, in local order."""
    monos: list[Mono] = []
    for d in range(bound):
        for combo in combinations_with_replacement(range(varcount), d):
            mono = [0] * varcount
            for i in combo:
                mono[i] += 1
            monos.append(tuple(mono))
    return sorted(set(monos), key=order_key)


def _sparse_rank(rows: list[dict[int, Fraction]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                inv = 1 / row[col]
                pivots[col] = {c: v * inv for c, v in row.items()}
                break
            factor = row[col]
            for c, v in pivot.items():
                val = row.get(c, Fraction(0)) - factor * v
                if val:
                    row[c] = val
                else:
                    row.pop(c, None)
    return len(pivots)


def colength_oracle(ideal: IdealSpec, truncation_degree: int) -> int:
    """Colength estimate at one truncation degree, by exact Gaussian elimination.

    Computes the dimension of (polynomials of degree < K) modulo the span of
    all generator multiples truncated below degree K.  The estimate grows
    monotonically with K and reaches the true colength once K clears the
    staircase; it never appeals to standard bases, which is the point.
    """
    k = truncation_degree
    if k < 1:
        raise InvalidInputError("truncation degree must be at least 1")
    n = ideal.varcount
    cols = {mono: idx for idx, mono in enumerate(monomials_below_degree(n, k))}
    rows: list[dict[int, Fraction]] = []
    for g in ideal.generators:
        if g.is_zero():
            continue
        max_mult = k - 1 - g.min_degree()
        for mult in monomials_below_degree(n, max_mult + 1):
            row: dict[int, Fraction] = {}
            for mono, coeff in g.items():
                shifted = mono_mul(mono, mult)
                if mono_degree(shifted) < k:
                    idx = cols[shifted]
                    val = row.get(idx, Fraction(0)) + coeff
                    if val:
                        row[idx] = val
                    else:
                        row.pop(idx, None)
            if row:
                rows.append(row)
    return len(cols) - _sparse_rank(rows)


def stabilized_colength_oracle(ideal: IdealSpec, max_degree: int = 32) -> int:
    """Increase the truncation degree until two consecutive estimates agree.

    Agreement at consecutive degrees certifies the exact colength; failure to
    stabilize by ``max_degree`` (e.g. for a non-zero-dimensional ideal) raises
    :class:`OracleInconclusiveError`.
    """
    previous: int | None = None
    for k in range(1, max_degree + 1):
        value = colength_oracle(ideal, k)
        if previous == value:
            return value
        previous = value
    raise OracleInconclusiveError(
        f"truncated colength did not stabilize below degree {max_degree}"
    )
