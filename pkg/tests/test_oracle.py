import random
import threading

import pytest

from christmas_lights import (MOON, Component, EvalSets, Outcome, TranspositionTable,
                              eval_sets, grundy_oracle, gsum_all, mex, outcome_playout,
                              parse_position, playout_check, verify_range)
from christmas_lights.moves import MoveKind, apply, legal_moves
from christmas_lights.oracle import all_components, random_position

from conftest import WORKED_SUM

THREE_PIECES = {"bbb": 3, "bbs": 3, "bsb": MOON, "sbb": 3,
                "ssb": 1, "sbs": 3, "bss": 1, "sss": 1}


@pytest.mark.parametrize("values, expected", [(set(), 0), ({0, 1, 2}, 3), ({1, 2}, 0), ([0, 0, 2], 1)])
def test_mex(values, expected):
    assert mex(values) == expected


@pytest.mark.parametrize("text, expected", [
    ("", 0), ("bsb", MOON), ("bbs", 3), ("ssb", 1), ("bbsbbbb", 6),
    ("bbbbbb", 6), ("sssbb", 3), ("bbssssb", 3), ("bbsssb", 2),
    ("bbssbbbbb", 6), ("bbsssbbbbb", 7),
])
def test_oracle_examples(text, expected, table):
    assert grundy_oracle(Component(text), table) == expected


def test_three_piece_table(table):
    assert {t: grundy_oracle(Component(t), table) for t in THREE_PIECES} == THREE_PIECES


def test_eval_sets_of_lunar_component(table):
    sets = eval_sets(Component("bsb"), table)
    # fix left -> empty, fix right -> bs, shock -> bb
    assert sets.immediate == {0, 2}
    assert sets.carry_targets == [2]


def test_eval_sets_rules():
    assert EvalSets({0, 1}, []).value() == 2
    assert EvalSets({0, 1}, [2]).value() == 2
    assert EvalSets({0, 2}, [2]).value() is MOON
    assert EvalSets({0}, [3, 3]).value() == 3
    assert EvalSets({0}, [3, 4]).value() is MOON
    assert EvalSets({0}, [MOON]).value() is MOON


def test_moon_options_are_not_immediate(table):
    # quiet removal of the first socket gives bsb, the moon
    sets = eval_sets(Component("sbsb"), table)
    assert MOON not in sets.immediate


def test_memo_soundness():
    shared = TranspositionTable()
    for comp in all_components(6):
        assert grundy_oracle(comp, use_memo=False) == grundy_oracle(comp, shared)
    for text in ["bsbsbsbsbs", "sbsbsbsbsb", "bbsbbsbbsb", "bssbbssbbs", "ssssssss", "bbbbbbbbbb"]:
        assert grundy_oracle(Component(text), use_memo=False) == grundy_oracle(Component(text), shared)


def test_table_entries_are_write_once():
    t = TranspositionTable()
    assert t.put("b", 1) == 1
    assert t.put("b", 7) == 1
    assert t.get("b") == 1


def test_concurrent_evaluation_matches_sequential():
    comps = list(all_components(11))
    expected = [grundy_oracle(c, TranspositionTable()) for c in comps[-300:]]
    shared = TranspositionTable()
    results = {}

    def work(offset):
        results[offset] = [grundy_oracle(c, shared) for c in comps[-300:][offset::4]]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    for i in range(4):
        assert results[i] == expected[i::4]


def test_values_bounded_by_piece_count(table):
    for comp in all_components(12):
        v = grundy_oracle(comp, table)
        if v is not MOON:
            assert v <= len(comp)
    # not bounded by bulbs + 1
    assert grundy_oracle(Component("sbs"), table) == 3


def test_shock_keeps_finite_value(table):
    # carry-on moves from a finite component land on the same value
    for comp in all_components(12):
        v = grundy_oracle(comp, table)
        if v is MOON:
            continue
        for move in legal_moves(comp):
            if move.kind is MoveKind.SHOCK:
                assert grundy_oracle(apply(comp, move), table) == v, (comp, move)


@pytest.mark.parametrize("text, expected", [
    ("bsb", Outcome.N), ("b + b", Outcome.P), ("bsb + bsb", Outcome.N),
    ("0", Outcome.P), ("ss", Outcome.P), ("bbsbbbb + bbbbbb", Outcome.P),
    (WORKED_SUM, Outcome.N),
])
def test_outcome_playout(text, expected):
    assert outcome_playout(parse_position(text)) is expected


def test_playout_agrees_with_nim_sum(table):
    rng = random.Random(20240601)
    memo = {}
    checked = 0
    for _ in range(1000):
        pos = random_position(rng, 10, 3)
        total = gsum_all(grundy_oracle(c, table) for c in pos)
        want = Outcome.P if total == 0 else Outcome.N
        assert outcome_playout(pos, memo) is want, str(pos)
        checked += 1
    assert checked == 1000


def test_random_positions_respect_bounds():
    rng = random.Random(1)
    for _ in range(200):
        pos = random_position(rng, 10, 3)
        assert 1 <= len(pos) <= 3
        assert pos.pieces <= 10


def test_playout_check_report():
    report = playout_check(8, 3, 200, seed=5)
    assert report.ok
    assert report.to_json()["agree"] == 200


def test_verify_range_small():
    r0 = verify_range(0)
    assert r0.to_json() == {"max_len": 0, "checked": 1, "mismatches": [], "histogram": {"0": 1}}
    r3 = verify_range(3)
    assert r3.checked == 15
    assert r3.mismatches == []
    assert r3.histogram["moon"] == 1
    assert list(r3.to_json()["histogram"])[0] == "moon"
