"""Ground-truth evaluation by exhaustive search.

``grundy_oracle`` applies the mex rule with carry-on targets to every
option recursively. ``outcome_playout`` ignores value theory altogether
and searches the actual game, where a shock hands the mover another turn.
"""

from __future__ import annotations

import itertools
import random
import sys
import threading
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .core import MOON, Component, GrundyValue, Outcome, Position, format_value
from .moves import MoveKind, text_apply, text_moves

# Recursion depth is bounded by piece count.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def mex(values: Iterable[int]) -> int:
    seen = set(values)
    n = 0
    while n in seen:
        n += 1
    return n


@dataclass
class EvalSets:
    immediate: set[int] = field(default_factory=set)
    carry_targets: list[GrundyValue] = field(default_factory=list)

    def value(self) -> GrundyValue:
        if not self.carry_targets:
            return mex(self.immediate)
        if any(t is MOON for t in self.carry_targets) or len(set(self.carry_targets)) > 1:
            return MOON
        n = self.carry_targets[0]
        # protected nimbers are everything except *n
        return MOON if n in self.immediate else n


class TranspositionTable:
    """Piece string -> Grundy value. Entries are write-once."""

    def __init__(self):
        self._table: dict[str, GrundyValue] = {"": 0}
        self._lock = threading.Lock()

    def get(self, key: str):
        return self._table.get(key)

    def put(self, key: str, value: GrundyValue) -> GrundyValue:
        with self._lock:
            return self._table.setdefault(key, value)

    def __contains__(self, key: str) -> bool:
        return key in self._table

    def __len__(self) -> int:
        return len(self._table)


def eval_sets(component: Component, memo: TranspositionTable | None = None) -> EvalSets:
    if memo is None:
        memo = TranspositionTable()
    return _eval_sets(component.text, memo)


def _eval_sets(text: str, memo) -> EvalSets:
    sets = EvalSets()
    for i, kind in text_moves(text):
        v = _grundy(text_apply(text, i, kind), memo)
        if kind is MoveKind.SHOCK:
            sets.carry_targets.append(v)
        elif v is not MOON:
            sets.immediate.add(v)
    return sets


def _grundy(text: str, memo) -> GrundyValue:
    if memo is not None:
        v = memo.get(text)
        if v is not None:
            return v
    v = _eval_sets(text, memo).value()
    if memo is not None:
        v = memo.put(text, v)
    return v


_shared_table = TranspositionTable()


def grundy_oracle(component: Component, memo: TranspositionTable | None = None,
                  use_memo: bool = True) -> GrundyValue:
    """Grundy value of ``component`` by full recursion over its options.

    With ``use_memo=False`` no table is consulted at all (slow; for
    checking the table itself).
    """
    if not use_memo:
        return _grundy(component.text, None)
    return _grundy(component.text, _shared_table if memo is None else memo)


def _mover_wins(key: tuple[str, ...], memo: dict) -> bool:
    hit = memo.get(key)
    if hit is not None:
        return hit
    win = False
    for ci, text in enumerate(key):
        rest = key[:ci] + key[ci + 1:]
        for i, kind in text_moves(text):
            after = text_apply(text, i, kind)
            nxt = tuple(sorted(rest + (after,))) if after else rest
            if kind is MoveKind.SHOCK:
                win = _mover_wins(nxt, memo)
            else:
                win = not _mover_wins(nxt, memo)
            if win:
                break
        if win:
            break
    memo[key] = win
    return win


def outcome_playout(position: Position, memo: dict | None = None) -> Outcome:
    """Win/loss of ``position`` for the player to move, by direct search."""
    if memo is None:
        memo = {}
    return Outcome.N if _mover_wins(position.key(), memo) else Outcome.P


def all_components(max_len: int) -> Iterable[Component]:
    for n in range(max_len + 1):
        for chars in itertools.product("bs", repeat=n):
            yield Component("".join(chars))


@dataclass
class VerifyReport:
    max_len: int
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    histogram: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        keys = sorted(self.histogram, key=lambda k: (k != "moon", int(k) if k != "moon" else 0))
        return {
            "max_len": self.max_len,
            "checked": self.checked,
            "mismatches": self.mismatches,
            "histogram": {k: self.histogram[k] for k in keys},
        }


def verify_range(max_len: int, memo: TranspositionTable | None = None) -> VerifyReport:
    """Compare oracle and fast solver on every component of length <= max_len."""
    from .fast import grundy_fast

    if memo is None:
        memo = TranspositionTable()
    report = VerifyReport(max_len)
    for comp in all_components(max_len):
        want = grundy_oracle(comp, memo)
        got = grundy_fast(comp)
        report.checked += 1
        report.histogram[format_value(want)] += 1
        if got != want:
            report.mismatches.append({
                "input": comp.text,
                "oracle": format_value(want),
                "fast": format_value(got),
            })
    return report


def random_position(rng: random.Random, max_pieces: int, max_components: int) -> Position:
    n_comp = rng.randint(1, max_components)
    total = rng.randint(0, max_pieces)
    cuts = sorted(rng.randint(0, total) for _ in range(n_comp - 1))
    lengths = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    return Position(tuple(
        Component("".join(rng.choice("bs") for _ in range(n))) for n in lengths))


@dataclass
class PlayoutReport:
    samples: int
    agree: int = 0
    disagreements: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agree == self.samples

    def to_json(self) -> dict:
        return {"samples": self.samples, "agree": self.agree,
                "disagreements": self.disagreements}


def playout_check(max_pieces: int = 10, max_components: int = 3, samples: int = 1000,
                  seed: int = 0) -> PlayoutReport:
    """Play-out outcome vs the nim-sum of oracle values on random positions."""
    from .sums import gsum_all

    rng = random.Random(seed)
    table = TranspositionTable()
    play_memo: dict = {}
    report = PlayoutReport(samples)
    for _ in range(samples):
        pos = random_position(rng, max_pieces, max_components)
        total = gsum_all(grundy_oracle(c, table) for c in pos)
        by_value = Outcome.P if total == 0 else Outcome.N
        by_play = outcome_playout(pos, play_memo)
        if by_value is by_play:
            report.agree += 1
        else:
            report.disagreements.append({
                "position": str(pos), "nim_sum": format_value(total),
                "playout": by_play.value})
    return report
