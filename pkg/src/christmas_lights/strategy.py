"""Winning turns: a chain of shock moves followed by one quiet move."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import GrundyValue, Position, format_value
from .fast import grundy_fast
from .moves import IllegalMoveError, Move, MoveKind, apply_position, legal_moves_position
from .sums import gsum, gsum_all, position_value


@dataclass(frozen=True)
class WinningLine:
    moves: tuple[Move, ...]
    final_value: GrundyValue = 0

    @property
    def shocks(self) -> int:
        return len(self.moves) - 1

    def to_json(self) -> dict:
        return {"line": [m.to_json() for m in self.moves],
                "final_value": format_value(self.final_value)}


def play_line(position: Position, moves: Sequence[Move]) -> Position:
    for move in moves:
        position = apply_position(position, move)
    return position


def best_line(position: Position) -> WinningLine | None:
    """Winning turn for the player to move, or None in a P-position.

    Lines with fewer shocks win ties; among equal shock counts, the
    smallest sequence of (component, piece) indices is returned.
    """
    layer: list[tuple[Position, tuple[Move, ...]]] = [(position, ())]
    seen = {position.key()}
    while layer:
        nxt = []
        for pos, prefix in layer:
            values = [grundy_fast(c) for c in pos]
            others = [gsum_all(v for j, v in enumerate(values) if j != i)
                      for i in range(len(values))]
            shocks = []
            for move in legal_moves_position(pos):
                if move.kind is MoveKind.SHOCK:
                    shocks.append(move)
                    continue
                after = apply_position(pos, move).components[move.component]
                if gsum(others[move.component], grundy_fast(after)) == 0:
                    return WinningLine(prefix + (move,), 0)
            for move in shocks:
                after = apply_position(pos, move)
                key = after.key()
                if key not in seen:
                    seen.add(key)
                    nxt.append((after, prefix + (move,)))
        layer = nxt
    return None


def validate_line(position: Position, line: WinningLine | Sequence[Move]) -> bool:
    """Legal shocks-then-quiet turn ending on a zero position."""
    moves = line.moves if isinstance(line, WinningLine) else tuple(line)
    if not moves:
        return False
    if any(m.kind is not MoveKind.SHOCK for m in moves[:-1]):
        return False
    if moves[-1].kind is MoveKind.SHOCK:
        return False
    try:
        final = play_line(position, moves)
    except IllegalMoveError:
        return False
    return position_value(final) == 0
