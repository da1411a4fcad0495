"""Tests for the exact single-pile solver in cumsub.core.

The frozen table below is the S={5,7} reference: 56 heaps with both the
outcome o(x) and the canonical (largest) optimal action opt(x).  Key
structure visible in it: opt is 5 exactly on {5,6,17,18,29,30} and 7
everywhere else from heap 7 on, and the o row for x=28..41 repeats
verbatim for x=42..55 (period 14 = 2*max S).
"""

from __future__ import annotations

import random

import pytest

from cumsub import (
    HEAP_LIMIT,
    Mover,
    OutcomeTable,
    Position,
    Ruleset,
    build_outcome_table,
    canonical_trace,
    is_sacrifice,
    minimax_oracle,
    minimax_values,
    opt_action,
    rulesets_with_max_at_most,
)
from cumsub.core import _table_contiguous, _table_generic

# o(x) and opt(x) for S={5,7}, x = 0..55, one tuple entry per heap.
O_57 = (
    0, 0, 0, 0, 0, 5, 5, 7, 7, 7, 7, 7, 2, 2,
    0, 0, 0, 3, 3, 5, 5, 7, 7, 7, 4, 4, 2, 2,
    0, 1, 1, 3, 3, 5, 5, 7, 6, 6, 4, 4, 2, 2,
    0, 1, 1, 3, 3, 5, 5, 7, 6, 6, 4, 4, 2, 2,
)
OPT_57 = (
    None, None, None, None, None, 5, 5, 7, 7, 7, 7, 7, 7, 7,
    7, 7, 7, 5, 5, 7, 7, 7, 7, 7, 7, 7, 7, 7,
    7, 5, 5, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7,
    7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7,
)


class TestRuleset:
    def test_accessors(self):
        rs = Ruleset((5, 7))
        assert rs.min_action == 5
        assert rs.max_action == 7
        assert rs.is_two_action
        assert not rs.is_contiguous
        assert not rs.is_full_support
        assert str(rs) == "{5,7}"

    def test_contiguous_and_full_support_flags(self):
        assert Ruleset((2, 3, 4)).is_contiguous
        assert not Ruleset((2, 3, 4)).is_full_support
        assert Ruleset((1, 2, 3)).is_full_support
        assert Ruleset((5, 6)).is_contiguous

    def test_rejects_single_action(self):
        with pytest.raises(ValueError):
            Ruleset((5,))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Ruleset((0, 3))
        with pytest.raises(ValueError):
            Ruleset((-2, 3))

    def test_rejects_unsorted_or_duplicate(self):
        with pytest.raises(ValueError):
            Ruleset((5, 3))
        with pytest.raises(ValueError):
            Ruleset((3, 3))

    def test_terminal_and_playable(self):
        rs = Ruleset((5, 7))
        assert rs.is_terminal(4)
        assert not rs.is_terminal(5)
        assert rs.playable(4) == ()
        assert rs.playable(6) == (5,)
        assert rs.playable(7) == (5, 7)

    def test_greedy_action(self):
        rs = Ruleset((5, 7))
        assert rs.greedy_action(5) == 5
        assert rs.greedy_action(6) == 5
        assert rs.greedy_action(7) == 7
        assert rs.greedy_action(100) == 7
        with pytest.raises(ValueError):
            rs.greedy_action(4)


class TestPosition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Position(-1)
        with pytest.raises(ValueError):
            Position(HEAP_LIMIT + 1)
        assert Position(0).score == 0

    def test_after_moves_and_scores(self):
        rs = Ruleset((5, 7))
        pos = Position(17)
        nxt = pos.after(rs, Mover.POSITIVE, 5)
        assert (nxt.heap, nxt.score) == (12, 5)
        nxt = nxt.after(rs, Mover.NEGATIVE, 7)
        assert (nxt.heap, nxt.score) == (5, -2)
        assert not nxt.is_terminal(rs)
        assert nxt.after(rs, Mover.POSITIVE, 5).is_terminal(rs)

    def test_after_rejects_illegal(self):
        rs = Ruleset((5, 7))
        with pytest.raises(ValueError):
            Position(17).after(rs, Mover.POSITIVE, 6)
        with pytest.raises(ValueError):
            Position(6).after(rs, Mover.POSITIVE, 7)


class TestMover:
    def test_signs(self):
        assert Mover.POSITIVE.sign == 1
        assert Mover.NEGATIVE.sign == -1

    def test_opponent(self):
        assert Mover.POSITIVE.opponent is Mover.NEGATIVE
        assert Mover.NEGATIVE.opponent is Mover.POSITIVE


class TestOutcomeTable:
    def test_frozen_57_table(self):
        table = build_outcome_table(Ruleset((5, 7)), 55)
        assert table.outcomes == O_57
        assert table.opts == OPT_57

    def test_worked_example_2_3(self):
        # Heap 7 in {2,3}: the sacrifice 2 is strictly better than greedy 3.
        table = build_outcome_table(Ruleset((2, 3)), 7)
        assert table.outcome(7) == 1
        assert opt_action(table, 7) == 2

    def test_terminal_entries(self):
        table = build_outcome_table(Ruleset((5, 7)), 55)
        for x in range(5):
            assert table.outcomes[x] == 0
            assert table.opts[x] is None

    def test_recursion_closure(self):
        # Each entry must equal max(s - o(x-s)) with the largest maximizer.
        rs = Ruleset((2, 5, 6))
        table = build_outcome_table(rs, 150)
        for x in range(2, 151):
            options = [(s - table.outcomes[x - s], s) for s in rs.actions if s <= x]
            best = max(v for v, _ in options)
            assert table.outcomes[x] == best
            assert table.opts[x] == max(s for v, s in options if v == best)

    def test_outcome_bounds(self):
        for rs in (Ruleset((5, 7)), Ruleset((2, 3, 9)), Ruleset((1, 4))):
            table = build_outcome_table(rs, 200)
            assert all(0 <= v <= rs.max_action for v in table.outcomes)

    def test_outcome_range_check(self):
        table = build_outcome_table(Ruleset((5, 7)), 20)
        with pytest.raises(ValueError):
            table.outcome(21)
        with pytest.raises(ValueError):
            table.outcome(-1)

    def test_x_max_zero(self):
        table = build_outcome_table(Ruleset((5, 7)), 0)
        assert table.outcomes == (0,)
        assert table.opts == (None,)

    def test_rejects_bad_x_max(self):
        with pytest.raises(ValueError):
            build_outcome_table(Ruleset((5, 7)), -1)
        with pytest.raises(ValueError):
            build_outcome_table(Ruleset((5, 7)), HEAP_LIMIT + 1)


class TestContiguousFastPath:
    """The sliding-window solver must be bit-identical to the generic one."""

    @pytest.mark.parametrize(
        "actions", [(1, 2), (2, 3), (2, 3, 4), (3, 4, 5, 6), (5, 6, 7, 8, 9)]
    )
    def test_matches_generic(self, actions):
        rs = Ruleset(actions)
        assert rs.is_contiguous
        o_fast, opt_fast = _table_contiguous(rs, 250)
        o_slow, opt_slow = _table_generic(rs, 250)
        assert o_fast == o_slow
        assert opt_fast == opt_slow

    def test_build_routes_to_fast_path(self):
        # Same result through the public entry point.
        table = build_outcome_table(Ruleset((2, 3, 4)), 100)
        o_slow, opt_slow = _table_generic(Ruleset((2, 3, 4)), 100)
        assert list(table.outcomes) == o_slow
        assert list(table.opts) == opt_slow


class TestOptAction:
    def test_terminal_heap_rejected(self):
        table = build_outcome_table(Ruleset((5, 7)), 20)
        with pytest.raises(ValueError):
            opt_action(table, 4)

    def test_out_of_range_rejected(self):
        table = build_outcome_table(Ruleset((5, 7)), 20)
        with pytest.raises(ValueError):
            opt_action(table, 21)

    def test_largest_tie_break(self):
        # At heap 43 in {5,7} both actions achieve o=1; opt picks 7.
        table = build_outcome_table(Ruleset((5, 7)), 43)
        assert 5 - table.outcomes[38] == 7 - table.outcomes[36] == 1
        assert opt_action(table, 43) == 7
        assert table.outcomes[43] == 1


class TestMinimaxOracle:
    def test_spot_values(self):
        rs = Ruleset((5, 7))
        assert minimax_oracle(rs, 17) == 3
        assert minimax_oracle(rs, 4) == 0
        assert minimax_oracle(Ruleset((2, 3)), 7) == 1

    def test_rejects_negative_heap(self):
        with pytest.raises(ValueError):
            minimax_oracle(Ruleset((5, 7)), -1)

    def test_matches_table_on_frozen_example(self):
        assert minimax_values(Ruleset((5, 7)), 55) == O_57

    def test_matches_table_on_seeded_rulesets(self):
        rng = random.Random(20260825)
        for _ in range(25):
            size = rng.choice((2, 3, 4))
            actions = tuple(sorted(rng.sample(range(1, 13), size)))
            rs = Ruleset(actions)
            table = build_outcome_table(rs, 120)
            assert minimax_values(rs, 120) == table.outcomes, rs


class TestCanonicalTrace:
    def test_trace_with_inner_action_1_5_7(self):
        trace = canonical_trace(Ruleset((1, 5, 7)), 18)
        assert trace.actions == (5, 7, 5, 1)
        assert trace.final_score == 2
        assert [m.score_after for m in trace.moves] == [5, -2, 3, 2]

    def test_trace_with_inner_action_2_10_13_14(self):
        trace = canonical_trace(Ruleset((2, 10, 13, 14)), 35)
        assert trace.actions == (10, 13, 10, 2)
        assert trace.final_score == 5

    def test_trace_2_3_sacrifice_opening(self):
        trace = canonical_trace(Ruleset((2, 3)), 7)
        assert trace.actions == (2, 3, 2)
        assert trace.final_score == 1
        assert trace.moves[0].mover is Mover.POSITIVE

    def test_final_score_equals_table_outcome(self):
        rs = Ruleset((3, 4, 9))
        table = build_outcome_table(rs, 140)
        for x in range(141):
            trace = canonical_trace(rs, x, table=table)
            assert trace.final_score == table.outcomes[x]

    def test_movers_alternate(self):
        trace = canonical_trace(Ruleset((5, 7)), 40)
        movers = [m.mover for m in trace.moves]
        assert movers[0] is Mover.POSITIVE
        assert all(a is not b for a, b in zip(movers, movers[1:]))

    def test_actions_by_player(self):
        trace = canonical_trace(Ruleset((1, 5, 7)), 18)
        assert trace.actions_by(Mover.POSITIVE) == (5, 5)
        assert trace.actions_by(Mover.NEGATIVE) == (7, 1)

    def test_start_score_only_shifts(self):
        rs = Ruleset((2, 3))
        base = canonical_trace(rs, 31)
        shifted = canonical_trace(rs, 31, start_score=10)
        assert shifted.actions == base.actions
        assert shifted.final_score == base.final_score + 10
        assert shifted.start_score == 10

    def test_terminal_start_gives_empty_trace(self):
        trace = canonical_trace(Ruleset((5, 7)), 3)
        assert trace.moves == ()
        assert trace.final_score == 0

    def test_supplied_table_must_cover_game(self):
        rs = Ruleset((5, 7))
        small = build_outcome_table(rs, 10)
        with pytest.raises(ValueError):
            canonical_trace(rs, 20, table=small)
        other = build_outcome_table(Ruleset((2, 3)), 40)
        with pytest.raises(ValueError):
            canonical_trace(rs, 20, table=other)

    def test_rejects_out_of_range_start(self):
        with pytest.raises(ValueError):
            canonical_trace(Ruleset((5, 7)), -1)
        with pytest.raises(ValueError):
            canonical_trace(Ruleset((5, 7)), HEAP_LIMIT + 1)

    def test_as_dict_schema(self):
        d = canonical_trace(Ruleset((2, 3)), 7).as_dict()
        assert d["start_heap"] == 7
        assert d["final_score"] == 1
        assert d["moves"][0] == {"mover": "positive", "action": 2, "score_after": 2}


class TestIsSacrifice:
    def test_sacrifice_detection(self):
        rs = Ruleset((5, 7))
        assert is_sacrifice(rs, 17, 5)
        assert not is_sacrifice(rs, 17, 7)
        assert not is_sacrifice(rs, 6, 5)

    def test_rejects_illegal_action(self):
        rs = Ruleset((5, 7))
        with pytest.raises(ValueError):
            is_sacrifice(rs, 17, 6)
        with pytest.raises(ValueError):
            is_sacrifice(rs, 6, 7)


class TestRulesetEnumeration:
    def test_pair_count_and_order(self):
        pairs = rulesets_with_max_at_most(5, [2])
        assert len(pairs) == 10
        assert pairs[0].actions == (1, 2)
        assert pairs[-1].actions == (4, 5)

    def test_mixed_sizes(self):
        rs = rulesets_with_max_at_most(5, [2, 3])
        assert len(rs) == 10 + 10
        assert all(r.max_action <= 5 for r in rs)

    def test_degenerate_sizes_skipped(self):
        assert rulesets_with_max_at_most(5, [1]) == []
        assert rulesets_with_max_at_most(3, [4]) == []
