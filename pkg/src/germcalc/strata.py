"""Stratified evaluation of the Euler obstruction from user-supplied data.

For germs that are not complete intersections the obstruction is still the
weighted Euler-characteristic sum over the strata meeting the point: each
stratum contributes the difference between the Euler characteristics of its
generic-linear-slice Milnor fiber and its function Milnor fiber, weighted by
the local Euler obstruction of the closure along that stratum.  Those three
integers per stratum come from geometric inspection (complex links, slice
analysis) and are inputs here, not computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError


@dataclass(frozen=True)
class StratumDatum:
    """One stratum row: chi of the two Milnor-fiber slices and the Eu weight."""

    name: str
    chi_l: int
    chi_f: int
    eu_X: int
    regular: bool = False

    def __post_init__(self):
        if not self.name:
            raise InvalidInputError("a stratum needs a name")
        if self.regular and self.eu_X != 1:
            raise InvalidInputError(
                f"the regular stratum carries weight 1, got {self.eu_X} for {self.name!r}"
            )


@dataclass(frozen=True)
class StrataTable:
    strata: tuple[StratumDatum, ...]
    dimX: int

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        if not self.strata:
            raise InvalidInputError("a strata table needs at least one stratum")
        names = [s.name for s in self.strata]
        if len(set(names)) != len(names):
            raise InvalidInputError("stratum names must be distinct")
        if self.dimX < 0:
            raise InvalidInputError("the germ dimension cannot be negative")


def stratified_euler_obstruction(table: StrataTable) -> int:
    """Weighted sum ``sum_i (chi_l - chi_f) * eu_X`` over the strata."""
    return sum((s.chi_l - s.chi_f) * s.eu_X for s in table.strata)


def consistent_with_morse_count(table: StrataTable, alpha_q: int) -> bool:
    """Does the table reproduce ``(-1)^dim X`` times an independent Morse count?"""
    return stratified_euler_obstruction(table) == (-1) ** table.dimX * alpha_q
