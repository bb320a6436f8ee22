"""Linear-time Grundy values by right-to-left folding of run triples.

A component is cut into blocks ``k̄ |m|`` (k bulbs then m sockets) read
from the right. The value of ``k̄ |m| X`` depends only on the value of the
bulb-leading suffix X, so the suffix is replaced by its value and the
next block to the left is folded in.
"""

from __future__ import annotations

import re
from typing import NamedTuple

import numpy as np

from .core import MOON, Component, GrundyValue

_RUN = re.compile(r"b+|s+")

# Below this length the pure Python fold beats numpy setup cost.
VECTOR_THRESHOLD = 4096


def triple_value(k: int, m: int, v: GrundyValue) -> GrundyValue:
    """Value of k bulbs, then m sockets, then a bulb-leading part of value v."""
    if v is MOON:
        return MOON
    n = v
    if m == 0:
        return k + n
    if k == 0:
        if m % 2 == 0:
            return n
        return n + (-1) ** n
    if n == 0:
        return k if m % 2 == 0 else k + 1
    if n == 1:
        if m == 1:
            return MOON
        return k if m % 2 == 1 else k + 1
    if m % 2 == 1:
        return k + n
    return k + n + (-1) ** n


class FoldStep(NamedTuple):
    bulbs: int
    sockets: int
    value: GrundyValue


def fold_steps(component: Component | str) -> list[FoldStep]:
    """Intermediate suffix values, rightmost block first."""
    text = component if isinstance(component, str) else component.text
    runs = [m.group() for m in _RUN.finditer(text)]
    steps = []
    v: GrundyValue = 0
    j = len(runs) - 1
    if j >= 0 and runs[j][0] == "b":
        v = len(runs[j])
        steps.append(FoldStep(v, 0, v))
        j -= 1
    while j >= 0:
        m = len(runs[j])
        k = len(runs[j - 1]) if j >= 1 else 0
        v = triple_value(k, m, v)
        steps.append(FoldStep(k, m, v))
        if v is MOON:
            break
        j -= 2
    return steps


def _fold_small(text: str) -> GrundyValue:
    # Scans from the right with str.rfind; stops early on the moon.
    j = len(text)
    v = 0
    if j and text[j - 1] == "b":
        i = text.rfind("s", 0, j)
        v = j - 1 - i
        j = i + 1
    while j > 0:
        i = text.rfind("b", 0, j)
        m = j - 1 - i
        j = i + 1
        if j > 0:
            i = text.rfind("s", 0, j)
            k = j - 1 - i
            j = i + 1
        else:
            k = 0
        v = triple_value(k, m, v)
        if v is MOON:
            return MOON
    return v


def _block_arrays(text: str) -> tuple[int, np.ndarray, np.ndarray]:
    """Leading suffix value and (bulbs, sockets) per block, rightmost first."""
    a = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
    cuts = np.flatnonzero(a[1:] != a[:-1]) + 1
    lengths = np.diff(np.concatenate(([0], cuts, [a.size])))[::-1]
    last_is_bulb = text[-1] == "b"
    v = int(lengths[0]) if last_is_bulb else 0
    rest = lengths[1:] if last_is_bulb else lengths
    sockets = rest[0::2]
    bulbs = np.zeros_like(sockets)
    k = rest[1::2]
    bulbs[: k.size] = k
    return v, bulbs, sockets


def _fold_vector(text: str) -> GrundyValue:
    v, bulbs, sockets = _block_arrays(text)
    count = sockets.size
    j = 0
    # Small suffix values need the special cases; v == 1 may persist
    # across runs of (k=1, m odd > 1) blocks, which are skipped in bulk.
    stay = (bulbs == 1) & (sockets % 2 == 1) & (sockets > 1)
    leave = np.flatnonzero(~stay)
    while j < count and v < 2:
        if v == 1:
            nxt = np.searchsorted(leave, j)
            if nxt == leave.size:
                return 1
            j = int(leave[nxt])
        v = triple_value(int(bulbs[j]), int(sockets[j]), v)
        if v is MOON:
            return MOON
        j += 1
    if j == count:
        return v
    # From here every block maps v to (v ^ flip) + k, with flip set for an
    # even socket run under bulbs, or an odd one at the left end (k == 0).
    k = bulbs[j:].astype(np.int64)
    m = sockets[j:]
    flip = np.where(k > 0, m % 2 == 0, m % 2 == 1).astype(np.int64)
    toggles = flip ^ (k & 1)
    parity_before = (v & 1) ^ (np.cumsum(toggles) - toggles) % 2
    correction = flip * (1 - 2 * parity_before)
    return v + int(k.sum()) + int(correction.sum())


def grundy_fast(component: Component | str) -> GrundyValue:
    text = component if isinstance(component, str) else component.text
    if len(text) < VECTOR_THRESHOLD:
        return _fold_small(text)
    return _fold_vector(text)
