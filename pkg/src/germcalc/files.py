"""Germ and strata description documents (JSON with fixed keys).

A germ document::

    {
      "vars": ["x", "y"],
      "defining": ["x^2 - y^3"],
      "function": "x",
      "seed": 0, "samples": 3, "bound": 7
    }

A strata document::

    {
      "dimX": 2,
      "strata": [
        {"name": "W0", "chi_l": 1, "chi_f": 2, "eu_X": 2},
        {"name": "W1", "chi_l": 0, "chi_f": -2, "eu_X": 1, "regular": true}
      ],
      "expected_eu": 0
    }

Expressions use the grammar of :mod:`germcalc.exprparse` against the declared
variables.  ``seed``/``samples``/``bound`` are optional with the defaults
shown; ``expected_eu`` and ``regular`` are optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import InvalidInputError, ParseError
from .exprparse import VarTable, parse
from .invariants import DEFAULT_BOUND, DEFAULT_SAMPLES, GermSpec
from .polyring import Polynomial
from .strata import StrataTable, StratumDatum


@dataclass(frozen=True)
class GermDocument:
    names: tuple[str, ...]
    germ: GermSpec
    seed: int
    samples: int
    bound: int


@dataclass(frozen=True)
class StrataDocument:
    table: StrataTable
    expected_eu: int | None


def _require_int(doc: dict, key: str, default: int | None = None) -> int:
    value = doc.get(key, default)
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidInputError(f"{key!r} must be an integer")
    return value


def parse_germ_document(doc: dict) -> GermDocument:
    if not isinstance(doc, dict):
        raise InvalidInputError("a germ document must be a JSON object")
    names = doc.get("vars")
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise InvalidInputError("'vars' must be a list of variable names")
    vars_table = VarTable(tuple(names))
    defining_src = doc.get("defining", [])
    if not isinstance(defining_src, list) or not all(isinstance(s, str) for s in defining_src):
        raise InvalidInputError("'defining' must be a list of expression strings")
    function_src = doc.get("function")
    if not isinstance(function_src, str):
        raise InvalidInputError("'function' must be an expression string")
    defining: tuple[Polynomial, ...] = tuple(parse(s, vars_table) for s in defining_src)
    func = parse(function_src, vars_table)
    germ = GermSpec(vars_table.varcount, defining, func)
    return GermDocument(
        names=vars_table.names,
        germ=germ,
        seed=_require_int(doc, "seed", 0),
        samples=_require_int(doc, "samples", DEFAULT_SAMPLES),
        bound=_require_int(doc, "bound", DEFAULT_BOUND),
    )


def parse_strata_document(doc: dict) -> StrataDocument:
    if not isinstance(doc, dict):
        raise InvalidInputError("a strata document must be a JSON object")
    dim_x = _require_int(doc, "dimX")
    rows = doc.get("strata")
    if not isinstance(rows, list) or not rows:
        raise InvalidInputError("'strata' must be a nonempty list")
    strata = []
    for row in rows:
        if not isinstance(row, dict):
            raise InvalidInputError("each stratum must be an object")
        name = row.get("name")
        if not isinstance(name, str):
            raise InvalidInputError("each stratum needs a 'name'")
        regular = row.get("regular", False)
        if not isinstance(regular, bool):
            raise InvalidInputError("'regular' must be a boolean")
        strata.append(
            StratumDatum(
                name=name,
                chi_l=_require_int(row, "chi_l"),
                chi_f=_require_int(row, "chi_f"),
                eu_X=_require_int(row, "eu_X"),
                regular=regular,
            )
        )
    expected = doc.get("expected_eu")
    if expected is not None and (not isinstance(expected, int) or isinstance(expected, bool)):
        raise InvalidInputError("'expected_eu' must be an integer")
    return StrataDocument(table=StrataTable(tuple(strata), dim_x), expected_eu=expected)


def read_json_document(path: str | Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}", exc.pos + 1) from exc
    if not isinstance(doc, dict):
        raise InvalidInputError(f"{path}: expected a JSON object")
    return doc
