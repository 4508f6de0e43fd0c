"""Exact local invariants of isolated complex singularity germs.

Computes Milnor numbers, the GSV/virtual multiplicity and the local Euler
obstruction of a function on an embedded germ, entirely in exact rational
arithmetic, and verifies the identities tying them together.  Exposed three
ways: as a library, as a FastAPI service (:mod:`germcalc.service`) and as a
thin-client CLI (:mod:`germcalc.cli`).
"""

__version__ = "0.1.0"

from .errors import (
    CrossCheckError,
    DimensionError,
    GenericityError,
    GermcalcError,
    InvalidInputError,
    NonIcisError,
    NonIsolatedError,
    OracleInconclusiveError,
    ParseError,
    ResourceLimitError,
)
from .exprparse import VarTable, format_polynomial, parse
from .invariants import (
    GermSpec,
    InvariantReport,
    LinearForm,
    euler_obstruction,
    milnor_hypersurface,
    milnor_icis,
    milnor_of_function,
    mu_G,
    pick_generic,
    validate_icis,
)
from .morsify import MonomialCurve, morse_count, pullback, verify_morse_count
from .polyring import Polynomial
from .stdbasis import (
    INFINITE,
    IdealSpec,
    StandardBasis,
    colength,
    colength_oracle,
    normal_form,
    stabilized_colength_oracle,
    standard_basis,
)
from .strata import (
    StrataTable,
    StratumDatum,
    consistent_with_morse_count,
    stratified_euler_obstruction,
)

__all__ = [
    "CrossCheckError",
    "DimensionError",
    "GenericityError",
    "GermSpec",
    "GermcalcError",
    "IdealSpec",
    "INFINITE",
    "InvalidInputError",
    "InvariantReport",
    "LinearForm",
    "MonomialCurve",
    "NonIcisError",
    "NonIsolatedError",
    "OracleInconclusiveError",
    "ParseError",
    "Polynomial",
    "ResourceLimitError",
    "StandardBasis",
    "StrataTable",
    "StratumDatum",
    "VarTable",
    "colength",
    "colength_oracle",
    "consistent_with_morse_count",
    "euler_obstruction",
    "format_polynomial",
    "milnor_hypersurface",
    "milnor_icis",
    "milnor_of_function",
    "morse_count",
    "mu_G",
    "normal_form",
    "parse",
    "pick_generic",
    "pullback",
    "stabilized_colength_oracle",
    "standard_basis",
    "stratified_euler_obstruction",
    "validate_icis",
    "verify_morse_count",
]
