"""Milnor numbers, GSV multiplicity and the Euler obstruction of a function.

The whole tower reduces to exact colengths of explicit ideals:

* ``milnor_hypersurface`` -- colength of the Jacobian ideal.
* ``milnor_icis`` -- the Milnor number of an isolated complete intersection
  germ, by the Le-Greuel recursion: slicing by a linear form ``l``,

      mu(X) + mu(X ∩ {l = 0}) = colength < g, maximal minors of Jac(g, l) >,

  down to the fat-point base case ``mu = colength - 1``.  The identity holds
  for *every* linear form whose slice is again an isolated complete
  intersection, and finiteness of the colengths along the recursion
  certifies exactly that, so the computed value does not depend on which
  admissible form the seeded generator happens to draw.
* ``milnor_of_function`` -- the Milnor number of a function on the germ,
  read as the Milnor number of the sliced germ (the Milnor fiber of the
  function is the smoothing of its zero slice).
* ``pick_generic`` -- generic linear forms by semicontinuity sampling: the
  slice Milnor number of a random integer form is minimal exactly on a
  Zariski-open set, so the minimum over samples realizes the generic value;
  every sampled value is recorded so genericity stays auditable.
* ``mu_G`` -- the GSV multiplicity, computed along two independent routes
  (mu(f) + mu(X) versus the colength of the critical-locus ideal of the
  ambient extension) that must agree.
* ``euler_obstruction`` -- the signed difference (-1)^dim X * [mu(f) - mu(l)]
  together with every identity cross-check, packed in an
  :class:`InvariantReport`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import (
    GenericityError,
    InvalidInputError,
    NonIcisError,
    NonIsolatedError,
    CrossCheckError,
)
from .exprparse import default_names, format_polynomial
from .polyring import Polynomial
from .stdbasis import INFINITE, IdealSpec, colength

DEFAULT_SAMPLES = 3
DEFAULT_BOUND = 7

# Retries per recursion level before giving up on finding an admissible slice.
_SLICE_TRIES = 12


@dataclass(frozen=True)
class LinearForm:
    """An integer linear form ``sum c_i * x_i``; not all coefficients zero."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if not self.coefficients or not any(self.coefficients):
            raise InvalidInputError("a linear form needs a nonzero coefficient vector")

    def polynomial(self) -> Polynomial:
        n = len(self.coefficients)
        return Polynomial(
            n,
            {
                tuple(1 if j == i else 0 for j in range(n)): c
                for i, c in enumerate(self.coefficients)
                if c
            },
        )


@dataclass(frozen=True)
class GermSpec:
    """An embedded germ: defining equations ``g_1..g_p`` plus a function ``f``.

    An empty ``defining`` list means the smooth ambient germ.  Every equation
    and the function must vanish at the origin, and the germ must have
    positive dimension ``varcount - p``.
    """

    varcount: int
    defining: tuple[Polynomial, ...]
    func: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "defining", tuple(self.defining))
        n = self.varcount
        if n < 1:
            raise InvalidInputError("a germ needs at least one ambient variable")
        if len(self.defining) >= n:
            raise InvalidInputError(
                "a germ with a function needs positive dimension: "
                f"{len(self.defining)} defining equations in {n} variables"
            )
        for g in self.defining:
            _require_vanishing_at_origin(g, n, "defining equation")
        _require_vanishing_at_origin(self.func, n, "function")

    @property
    def dimX(self) -> int:
        return self.varcount - len(self.defining)


def _require_vanishing_at_origin(p: Polynomial, varcount: int, what: str):
    if p.varcount != varcount:
        raise InvalidInputError(f"{what} has {p.varcount} variables, expected {varcount}")
    if p.is_zero():
        raise InvalidInputError(f"{what} must be nonzero")
    if p.constant_term() != 0:
        raise InvalidInputError(f"{what} must vanish at the origin")


# -- colength bookkeeping ------------------------------------------------------


@dataclass(frozen=True)
class ColengthRecord:
    label: str
    generators: tuple[Polynomial, ...]
    value: int | float


class ColengthLog:
    """Collects every intermediate colength so reports stay auditable."""

    def __init__(self):
        self.records: list[ColengthRecord] = []

    def record(self, label: str, generators: Sequence[Polynomial], value: int | float):
        self.records.append(ColengthRecord(label, tuple(generators), value))


def _colength(
    generators: Sequence[Polynomial],
    varcount: int,
    label: str,
    log: ColengthLog | None,
) -> int | float:
    value = colength(IdealSpec(tuple(generators), varcount))
    if log is not None:
        log.record(label, generators, value)
    return value


# -- Jacobians and minors ------------------------------------------------------


def jacobian(polys: Sequence[Polynomial], varcount: int) -> list[list[Polynomial]]:
    return [[p.partial(j) for j in range(varcount)] for p in polys]


def determinant(matrix: list[list[Polynomial]]) -> Polynomial:
    """Determinant by cofactor expansion; matrices here are tiny."""
    k = len(matrix)
    if k == 1:
        return matrix[0][0]
    n = matrix[0][0].varcount
    result = Polynomial.zero(n)
    for col in range(k):
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        term = matrix[0][col] * determinant(minor)
        result = result + term if col % 2 == 0 else result - term
    return result


def maximal_minors(matrix: list[list[Polynomial]]) -> list[Polynomial]:
    """All k x k minors of a k x N polynomial matrix (k <= N)."""
    k = len(matrix)
    ncols = len(matrix[0])
    return [
        determinant([[row[c] for c in cols] for row in matrix])
        for cols in combinations(range(ncols), k)
    ]


def _critical_ideal(
    defining: Sequence[Polynomial], func: Polynomial, varcount: int
) -> list[Polynomial]:
    """Generators ``g`` plus the maximal minors of ``Jac(g, f)``."""
    mat = jacobian(list(defining) + [func], varcount)
    return list(defining) + maximal_minors(mat)


# -- admission checks ----------------------------------------------------------


def _icis_criterion(
    gens: Sequence[Polynomial], varcount: int, label: str, log: ColengthLog | None
) -> int | float:
    """Colength of the singular-criterion ideal of ``V(gens)``.

    Finite exactly when the complete intersection has an isolated singular
    point at the origin.  For a zero-dimensional germ the criterion is the
    colength of the ideal itself.
    """
    p = len(gens)
    n = varcount
    if p > n:
        raise NonIcisError(f"{p} defining equations in {n} variables")
    if p == 0:
        return 0
    if p == n:
        return _colength(gens, n, label, log)
    mat = jacobian(list(gens), n)
    return _colength(list(gens) + maximal_minors(mat), n, label, log)


def validate_icis(
    defining: Sequence[Polynomial],
    varcount: int,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
) -> None:
    """Admission check: raise unless ``V(defining)`` is an ICIS at the origin.

    First decides isolation by the singular-criterion ideal (deterministic,
    sample-free), then exercises the iterated slicing used by
    :func:`milnor_icis` so slice-level failures surface with their level.
    """
    gens = list(defining)
    for g in gens:
        _require_vanishing_at_origin(g, varcount, "defining equation")
    if len(gens) > varcount:
        raise NonIcisError(f"{len(gens)} defining equations in {varcount} variables")
    if not gens:
        return
    if _icis_criterion(gens, varcount, "icis criterion", None) == INFINITE:
        raise NonIcisError("the singular locus of the germ is not isolated at the origin")
    milnor_icis(gens, varcount, random.Random(seed), bound=bound)


# -- Milnor numbers ------------------------------------------------------------


def milnor_hypersurface(h: Polynomial, log: ColengthLog | None = None) -> int:
    """Milnor number of a hypersurface function: colength of its Jacobian ideal."""
    if h.is_zero():
        raise InvalidInputError("the zero function has no Milnor number")
    if h.constant_term() != 0:
        raise InvalidInputError("the function must vanish at the origin")
    n = h.varcount
    value = _colength([h.partial(i) for i in range(n)], n, "jacobian ideal", log)
    if value == INFINITE:
        raise NonIsolatedError("the function has a non-isolated singularity")
    return int(value)


def draw_linear_form(rng: random.Random, varcount: int, bound: int) -> LinearForm:
    """A random integer linear form with coefficients in [-bound, bound], not all 0."""
    while True:
        coeffs = tuple(rng.randint(-bound, bound) for _ in range(varcount))
        if any(coeffs):
            return LinearForm(coeffs)


def _as_rng(rng: random.Random | int | None) -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(0 if rng is None else rng)


def milnor_icis(
    defining: Sequence[Polynomial],
    varcount: int,
    rng: random.Random | int | None = None,
    bound: int = DEFAULT_BOUND,
    log: ColengthLog | None = None,
    _level: int = 0,
) -> int:
    """Milnor number of the complete intersection germ ``V(defining)``.

    Recurses through linear slices via the Le-Greuel identity; the base case
    is a fat point, whose smoothing has ``colength - 1`` reduced points.  The
    identity holds for every slice that is again an ICIS, and finiteness of
    the colengths certifies exactly that, so no minimality sampling is needed
    here: a draw whose colengths come out infinite is simply discarded, and
    running out of draws raises :class:`GenericityError` naming the level.
    """
    rng = _as_rng(rng)
    gens = list(defining)
    n = varcount
    p = len(gens)
    if p > n:
        raise NonIcisError(f"{p} defining equations in {n} variables")
    if p == 0:
        return 0
    if p == n:
        value = _colength(gens, n, f"fat-point colength (level {_level})", log)
        if value == INFINITE:
            raise NonIcisError(
                f"the zero-dimensional slice at level {_level} is not a fat point"
            )
        return int(value) - 1
    for _ in range(_SLICE_TRIES):
        form = draw_linear_form(rng, n, bound)
        lg_gens = _critical_ideal(gens, form.polynomial(), n)
        lg = _colength(
            lg_gens, n, f"Le-Greuel ideal (level {_level}, l={list(form.coefficients)})", log
        )
        if lg == INFINITE:
            continue
        try:
            mu_slice = milnor_icis(
                gens + [form.polynomial()], n, rng, bound, log, _level + 1
            )
        except GenericityError:
            continue
        return int(lg) - mu_slice
    raise GenericityError(
        f"no admissible linear slice after {_SLICE_TRIES} draws at level {_level}"
    )


def milnor_of_function(
    germ: GermSpec,
    rng: random.Random | int | None = None,
    bound: int = DEFAULT_BOUND,
    log: ColengthLog | None = None,
) -> int:
    """Milnor number of ``f`` on the germ: the Milnor number of the zero slice."""
    rng = _as_rng(rng)
    slice_gens = list(germ.defining) + [germ.func]
    crit = _icis_criterion(slice_gens, germ.varcount, "slice criterion for f", log)
    if crit == INFINITE:
        raise NonIsolatedError(
            "the restriction of the function to the germ has a non-isolated singularity"
        )
    return milnor_icis(slice_gens, germ.varcount, rng, bound, log)


@dataclass(frozen=True)
class GenericitySample:
    form: LinearForm
    mu: int | float  # INFINITE marks a degenerate slice


def pick_generic(
    germ: GermSpec,
    rng: random.Random | int | None = None,
    samples: int = DEFAULT_SAMPLES,
    bound: int = DEFAULT_BOUND,
    log: ColengthLog | None = None,
) -> tuple[LinearForm, int, list[GenericitySample]]:
    """Sample linear forms and return one attaining the minimal slice Milnor number.

    The slice Milnor number is upper semicontinuous in the form, so the
    minimum over independent draws is the generic value; the full trace of
    sampled values is returned for the report rather than silently resolved.
    """
    if samples < 1:
        raise InvalidInputError("need at least one sample")
    rng = _as_rng(rng)
    trace: list[GenericitySample] = []
    witness: LinearForm | None = None
    best: int | None = None
    for _ in range(samples):
        form = draw_linear_form(rng, germ.varcount, bound)
        slice_gens = list(germ.defining) + [form.polynomial()]
        label = f"sampled slice l={list(form.coefficients)}"
        crit = _icis_criterion(slice_gens, germ.varcount, label + " (criterion)", log)
        if crit == INFINITE:
            trace.append(GenericitySample(form, INFINITE))
            continue
        try:
            mu = milnor_icis(slice_gens, germ.varcount, rng, bound, log)
        except GenericityError:
            trace.append(GenericitySample(form, INFINITE))
            continue
        trace.append(GenericitySample(form, mu))
        if best is None or mu < best:
            best, witness = mu, form
    if witness is None or best is None:
        raise GenericityError("every sampled linear form gave a degenerate slice")
    return witness, best, trace


def mu_G(
    germ: GermSpec,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    log: ColengthLog | None = None,
) -> int:
    """GSV multiplicity of the function, cross-checked along two routes.

    Route A adds the Milnor numbers of the germ and of the function; route B
    counts critical points of the ambient extension on the smoothing, as the
    colength of the defining equations plus the maximal minors of the full
    Jacobian.  Disagreement signals a bug or a degenerate input and raises.
    """
    rng = random.Random(seed)
    path_b = _colength(
        _critical_ideal(germ.defining, germ.func, germ.varcount),
        germ.varcount,
        "gsv critical-locus ideal",
        log,
    )
    if path_b == INFINITE:
        raise NonIsolatedError("the function has a non-isolated critical locus on the germ")
    mu_x = milnor_icis(germ.defining, germ.varcount, rng, bound, log)
    mu_f = milnor_of_function(germ, rng, bound, log)
    path_a = mu_f + mu_x
    if path_a != path_b:
        raise CrossCheckError(
            f"GSV multiplicity routes disagree: {path_a} (sum) vs {int(path_b)} (critical locus)"
        )
    return path_a


# -- the report ----------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str


@dataclass
class InvariantReport:
    """The invariant tower of a germ plus every identity cross-check."""

    varcount: int
    dimX: int
    muX: int
    muF: int
    muL: int
    muG_f: int
    muG_l: int
    euF: int
    alphaQ: int
    muG_f_paths: tuple[int, int]
    muG_l_paths: tuple[int, int]
    checks: list[CheckResult]
    witness: LinearForm
    samples_trace: list[GenericitySample]
    seed: int
    samples: int
    bound: int
    colengths: list[ColengthRecord] = field(default_factory=list)

    @property
    def all_checks_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, names: Sequence[str] | None = None) -> dict:
        """Deterministic plain-data rendering (the service/CLI wire payload)."""
        names = tuple(names) if names else default_names(self.varcount)

        def value(v: int | float):
            return "infinite" if v == INFINITE else int(v)

        return {
            "dim_x": self.dimX,
            "mu_x": self.muX,
            "mu_f": self.muF,
            "mu_l": self.muL,
            "mu_g_f": self.muG_f,
            "mu_g_l": self.muG_l,
            "eu_f": self.euF,
            "alpha_q": self.alphaQ,
            "mu_g_f_paths": list(self.muG_f_paths),
            "mu_g_l_paths": list(self.muG_l_paths),
            "checks": [
                {"name": c.name, "passed": c.passed, "details": c.details}
                for c in self.checks
            ],
            "genericity": {
                "witness": {
                    "coefficients": list(self.witness.coefficients),
                    "form": format_polynomial(self.witness.polynomial(), names),
                    "mu": self.muL,
                },
                "samples": [
                    {
                        "coefficients": list(s.form.coefficients),
                        "form": format_polynomial(s.form.polynomial(), names),
                        "mu": value(s.mu),
                    }
                    for s in self.samples_trace
                ],
            },
            "colengths": [
                {
                    "label": r.label,
                    "generators": [format_polynomial(g, names) for g in r.generators],
                    "value": value(r.value),
                }
                for r in self.colengths
            ],
            "seed": self.seed,
            "samples": self.samples,
            "bound": self.bound,
            "all_checks_passed": self.all_checks_passed,
        }


def euler_obstruction(
    germ: GermSpec,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    bound: int = DEFAULT_BOUND,
) -> InvariantReport:
    """Full invariant tower and Euler obstruction of the function on the germ.

    The obstruction is the signed Milnor-number difference
    ``(-1)^dim X * [mu(f) - mu(l)]`` for a generic linear form ``l``; the
    report cross-checks it against the same signed difference of GSV
    multiplicities, verifies both GSV routes, the inequality of ``mu(f)``
    against the signed obstruction (strict on singular germs), positivity of
    ``mu(l)`` on singular germs, and nonnegativity of the Morse-point count
    ``alpha_q = (-1)^dim X * Eu_f``.
    """
    log = ColengthLog()
    rng = random.Random(seed)
    n = germ.varcount

    if _icis_criterion(list(germ.defining), n, "icis criterion", log) == INFINITE:
        raise NonIcisError("the singular locus of the germ is not isolated at the origin")

    path_b_f = _colength(
        _critical_ideal(germ.defining, germ.func, n), n, "gsv critical-locus ideal (f)", log
    )
    if path_b_f == INFINITE:
        raise NonIsolatedError("the function has a non-isolated critical locus on the germ")

    mu_x = milnor_icis(germ.defining, n, rng, bound, log)
    mu_f = milnor_of_function(germ, rng, bound, log)
    witness, mu_l, trace = pick_generic(germ, rng, samples, bound, log)
    path_b_l = _colength(
        _critical_ideal(germ.defining, witness.polynomial(), n),
        n,
        "gsv critical-locus ideal (l)",
        log,
    )

    sign = (-1) ** germ.dimX
    eu_f = sign * (mu_f - mu_l)
    alpha_q = mu_f - mu_l
    mu_g_f = mu_f + mu_x
    mu_g_l = mu_l + mu_x

    checks = [
        CheckResult(
            "gsv two-path agreement (f)",
            mu_g_f == path_b_f,
            f"mu(f)+mu(X) = {mu_g_f}, critical-locus colength = {int(path_b_f)}",
        ),
        CheckResult(
            "gsv two-path agreement (l)",
            path_b_l != INFINITE and mu_g_l == path_b_l,
            f"mu(l)+mu(X) = {mu_g_l}, critical-locus colength = "
            f"{'infinite' if path_b_l == INFINITE else int(path_b_l)}",
        ),
        CheckResult(
            "gsv-difference route agreement",
            path_b_l != INFINITE and sign * (int(path_b_f) - int(path_b_l)) == eu_f,
            f"signed GSV difference vs signed Milnor difference = {eu_f}",
        ),
        CheckResult(
            "mu(f) bounds the signed obstruction",
            mu_f >= sign * eu_f,
            f"mu(f) = {mu_f} >= {sign * eu_f}",
        ),
        CheckResult(
            "strict bound on singular germs",
            mu_x == 0 or mu_f > sign * eu_f,
            f"mu(X) = {mu_x}, mu(f) = {mu_f}, signed obstruction = {sign * eu_f}",
        ),
        CheckResult(
            "generic slice mu positive on singular germs",
            mu_x == 0 or mu_l > 0,
            f"mu(X) = {mu_x}, mu(l) = {mu_l}",
        ),
        CheckResult(
            "morse-point count nonnegative",
            alpha_q >= 0,
            f"alpha_q = {alpha_q}",
        ),
    ]

    return InvariantReport(
        varcount=n,
        dimX=germ.dimX,
        muX=mu_x,
        muF=mu_f,
        muL=mu_l,
        muG_f=mu_g_f,
        muG_l=mu_g_l,
        euF=eu_f,
        alphaQ=alpha_q,
        muG_f_paths=(mu_g_f, int(path_b_f)),
        muG_l_paths=(mu_g_l, int(path_b_l) if path_b_l != INFINITE else -1),
        checks=checks,
        witness=witness,
        samples_trace=trace,
        seed=seed,
        samples=samples,
        bound=bound,
        colengths=log.records,
    )
