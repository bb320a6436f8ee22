"""Disjunctive sums: extended nim-sum and outcome."""

from __future__ import annotations

from functools import reduce
from typing import Iterable

from .core import MOON, GrundyValue, Outcome, Position
from .fast import grundy_fast


def gsum(a: GrundyValue, b: GrundyValue) -> GrundyValue:
    """Nim-sum, with the moon absorbing everything."""
    if a is MOON or b is MOON:
        return MOON
    return a ^ b


def gsum_all(values: Iterable[GrundyValue]) -> GrundyValue:
    return reduce(gsum, values, 0)


def component_values(position: Position) -> list[GrundyValue]:
    return [grundy_fast(c) for c in position]


def position_value(position: Position) -> GrundyValue:
    return gsum_all(component_values(position))


def outcome(position: Position) -> Outcome:
    return Outcome.P if position_value(position) == 0 else Outcome.N
