"""Move generation and application for the three move types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Component, Position


class MoveKind(str, Enum):
    FIX = "fix"      # fix a bulb and everything right of it
    QUIET = "quiet"  # remove a socket, turn passes
    SHOCK = "shock"  # remove a socket sandwiched by bulbs, mover goes again


class IllegalMoveError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Move:
    component: int
    index: int
    kind: MoveKind

    @property
    def carries_on(self) -> bool:
        return self.kind is MoveKind.SHOCK

    def to_json(self) -> dict:
        return {"component": self.component, "index": self.index, "kind": self.kind.value}

    @classmethod
    def from_json(cls, obj: dict) -> "Move":
        return cls(int(obj["component"]), int(obj["index"]), MoveKind(obj["kind"]))

    def describe(self) -> str:
        what = {
            MoveKind.FIX: "fix bulb",
            MoveKind.QUIET: "remove socket",
            MoveKind.SHOCK: "remove sandwiched socket (shock, move again)",
        }[self.kind]
        return f"component {self.component}: {what} at piece {self.index}"


def socket_kind(text: str, i: int) -> MoveKind:
    if 0 < i < len(text) - 1 and text[i - 1] == "b" and text[i + 1] == "b":
        return MoveKind.SHOCK
    return MoveKind.QUIET


def text_moves(text: str) -> list[tuple[int, MoveKind]]:
    return [(i, MoveKind.FIX if c == "b" else socket_kind(text, i))
            for i, c in enumerate(text)]


def text_apply(text: str, index: int, kind: MoveKind) -> str:
    if kind is MoveKind.FIX:
        return text[:index]
    return text[:index] + text[index + 1:]


def legal_moves(component: Component, component_index: int = 0) -> list[Move]:
    return [Move(component_index, i, kind) for i, kind in text_moves(component.text)]


def apply(component: Component, move: Move) -> Component:
    text = component.text
    i = move.index
    if not 0 <= i < len(text):
        raise IllegalMoveError(f"piece index {i} out of range for {text!r}")
    if move.kind is MoveKind.FIX:
        if text[i] != "b":
            raise IllegalMoveError(f"piece {i} of {text!r} is not a bulb")
    else:
        if text[i] != "s":
            raise IllegalMoveError(f"piece {i} of {text!r} is not a socket")
        if socket_kind(text, i) is not move.kind:
            raise IllegalMoveError(
                f"removing socket {i} of {text!r} is a {socket_kind(text, i).value} move")
    return Component(text_apply(text, i, move.kind))


def legal_moves_position(position: Position) -> list[Move]:
    moves = []
    for ci, comp in enumerate(position.components):
        moves.extend(legal_moves(comp, ci))
    return moves


def apply_position(position: Position, move: Move) -> Position:
    if not 0 <= move.component < len(position.components):
        raise IllegalMoveError(f"no component {move.component} in position")
    return position.replace(move.component, apply(position.components[move.component], move))
