"""Pieces, components, positions and their textual notation.

A component is stored as its canonical char string (``b`` for a
replaceable bulb, ``s`` for a broken socket), read left to right starting
at the plug. The run form ``b2s3b5`` is accepted on input only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Sequence, Union


class Piece(str, Enum):
    BULB = "b"
    SOCKET = "s"


class Run(NamedTuple):
    kind: Piece
    length: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.length}"


class Outcome(str, Enum):
    P = "P"  # previous player wins
    N = "N"  # next player wins


class ParseError(ValueError):
    """Malformed component or position text.

    ``offset`` is the byte offset into the text that was being parsed and
    ``component`` the index of the offending summand, when known.
    """

    def __init__(self, message: str, offset: int, component: int | None = None):
        self.offset = offset
        self.component = component
        where = f"offset {offset}"
        if component is not None:
            where = f"component {component}, {where}"
        super().__init__(f"{message} ({where})")


class Moon:
    """Grundy value of the moon, an unconditional next-player win."""

    _instance: "Moon | None" = None

    def __new__(cls) -> "Moon":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MOON"

    def __reduce__(self):
        return (Moon, ())


MOON = Moon()

# A finite nimber *n is the plain int n.
GrundyValue = Union[int, Moon]


def format_value(value: GrundyValue, unicode: bool = False) -> str:
    if value is MOON:
        return "☾" if unicode else "moon"
    return str(value)


def parse_value(text: str) -> GrundyValue:
    if text in ("moon", "☾"):
        return MOON
    n = int(text)
    if n < 0:
        raise ValueError(f"negative Grundy value {n}")
    return n


_CHAR_FORM = re.compile(r"[bs]*")
_RUN_TOKEN = re.compile(r"([bs])(\d+)")


@dataclass(frozen=True)
class Component:
    text: str = ""

    def __post_init__(self):
        if not _CHAR_FORM.fullmatch(self.text):
            bad = next(i for i, c in enumerate(self.text) if c not in "bs")
            raise ParseError(f"unexpected character {self.text[bad]!r}", bad)

    @classmethod
    def from_pieces(cls, pieces: Sequence[Piece]) -> "Component":
        return cls("".join(Piece(p).value for p in pieces))

    @classmethod
    def from_runs(cls, runs: Sequence[Run | tuple[Piece, int]]) -> "Component":
        return cls("".join(Piece(kind).value * length for kind, length in runs))

    @property
    def pieces(self) -> tuple[Piece, ...]:
        return tuple(Piece(c) for c in self.text)

    @property
    def runs(self) -> list[Run]:
        return runs_of(self)

    def __len__(self) -> int:
        return len(self.text)

    def __getitem__(self, i: int) -> Piece:
        return Piece(self.text[i])

    def __iter__(self) -> Iterator[Piece]:
        return iter(self.pieces)

    def __str__(self) -> str:
        return self.text

    @property
    def bulbs(self) -> int:
        return self.text.count("b")

    def run_notation(self) -> str:
        return "".join(str(r) for r in runs_of(self))


@dataclass(frozen=True)
class Position:
    components: tuple[Component, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)

    def __getitem__(self, i: int) -> Component:
        return self.components[i]

    def __str__(self) -> str:
        return print_position(self)

    @property
    def pieces(self) -> int:
        return sum(len(c) for c in self.components)

    def key(self) -> tuple[str, ...]:
        """Multiset of non-empty component strings; equal keys mean equal games."""
        return tuple(sorted(c.text for c in self.components if c.text))

    def replace(self, index: int, component: Component) -> "Position":
        comps = list(self.components)
        comps[index] = component
        return Position(tuple(comps))


def runs_of(component: Component | str) -> list[Run]:
    text = component if isinstance(component, str) else component.text
    return [Run(Piece(m.group()[0]), len(m.group()))
            for m in re.finditer(r"b+|s+", text)]


def parse_component(text: str) -> Component:
    """Parse char form (``bsb``) or run form (``b1s1b1``)."""
    if not any(c.isdigit() for c in text):
        return Component(text)
    pos = 0
    out = []
    while pos < len(text):
        m = _RUN_TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"expected run like 'b3' or 's1', got {text[pos]!r}", pos)
        count = int(m.group(2))
        if count == 0:
            raise ParseError("run length must be at least 1", m.start(2))
        out.append(m.group(1) * count)
        pos = m.end()
    return Component("".join(out))


def parse_position(text: str) -> Position:
    if text.strip() == "0":
        return Position()
    comps = []
    start = 0
    for i, part in enumerate(text.split("+")):
        lead = len(part) - len(part.lstrip())
        try:
            comps.append(parse_component(part.strip()))
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" (", 1)[0], start + lead + exc.offset, i) from None
        start += len(part) + 1
    return Position(tuple(comps))


def print_component(component: Component) -> str:
    return component.text


def print_position(position: Position) -> str:
    if not position.components:
        return "0"
    return " + ".join(c.text for c in position.components)
