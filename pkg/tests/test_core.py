"""Simulation semantics, awareness queries and the schedule JSON format."""
from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from partialgossip import (
    AugmentedSchedule,
    Call,
    Schedule,
    ValidationError,
    apply_preliminary,
    awareness,
    is_exact_k_informing,
    is_k_informing,
    schedule_from_json,
    schedule_to_json,
    simulate,
)
from partialgossip.core import initial_state, simulate_prefixes


@st.composite
def schedules(draw, max_n: int = 6, max_calls: int = 8):
    n = draw(st.integers(2, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    calls = draw(st.lists(st.sampled_from(pairs), max_size=max_calls))
    return Schedule(n, calls)


class TestCallAndSchedule:
    def test_call_normalizes_order(self):
        assert Call(3, 1) == Call(1, 3)
        assert Call(1, 3).as_pair() == (1, 3)

    def test_self_call_rejected(self):
        with pytest.raises(ValidationError):
            Call(2, 2)

    def test_schedule_rejects_out_of_range_person(self):
        with pytest.raises(ValidationError):
            Schedule(3, [(0, 3)])

    def test_schedule_rejects_bad_n(self):
        with pytest.raises(ValidationError):
            Schedule(0, [])

    def test_repeated_pairs_allowed(self):
        s = Schedule(2, [(0, 1), (0, 1)])
        assert len(s.calls) == 2

    def test_preliminary_outside_universe_rejected(self):
        with pytest.raises(ValidationError):
            AugmentedSchedule([(0, 9)], Schedule(3, [(0, 1)]))


class TestSimulate:
    def test_single_call_symmetry(self):
        state = simulate(Schedule(2, [(0, 1)]))
        assert state.gossip_set(0) == state.gossip_set(1) == {0, 1}

    def test_initial_awareness_all_ones(self):
        assert awareness(initial_state(5)) == [1, 1, 1, 1, 1]

    def test_hub_tree_exactly_four(self, hub_tree_8):
        assert awareness(simulate(hub_tree_8)) == [4] * 8

    def test_hub_tree_plus_one_exactly_five(self, hub_tree_8_plus_one):
        assert awareness(apply_preliminary(hub_tree_8_plus_one)) == [5] * 8

    def test_wide_trees_exactly_four(self, wide_exact4_tree_12, wide_exact4_tree_10):
        assert awareness(simulate(wide_exact4_tree_12)) == [4] * 12
        assert awareness(simulate(wide_exact4_tree_10)) == [4] * 10

    def test_wide_trees_plus_two_exactly_six(
        self, wide_exact4_tree_12_plus_two, wide_exact4_tree_10_plus_two
    ):
        assert awareness(apply_preliminary(wide_exact4_tree_12_plus_two)) == [6] * 12
        assert awareness(apply_preliminary(wide_exact4_tree_10_plus_two)) == [6] * 10

    def test_no_preliminary_matches_plain_simulation(self, hub_tree_8):
        aug = AugmentedSchedule([], hub_tree_8)
        assert apply_preliminary(aug) == simulate(hub_tree_8)


class TestInformingPredicates:
    def test_hub_tree_k4_true_k5_false(self, hub_tree_8):
        assert is_k_informing(hub_tree_8, 4)
        assert not is_k_informing(hub_tree_8, 5)

    def test_empty_schedule_not_2_informing(self):
        assert not is_k_informing(Schedule(4, []), 2)

    def test_exactness(self, hub_tree_8, hub_tree_8_plus_one):
        assert is_exact_k_informing(hub_tree_8, 4)
        base = hub_tree_8_plus_one.base
        merged = Schedule(base.n, list(hub_tree_8_plus_one.preliminary) + list(base.calls))
        assert is_exact_k_informing(merged, 5)

    def test_star_center_not_exact(self):
        star = Schedule(4, [(0, 1), (0, 2), (0, 3)])
        assert not is_exact_k_informing(star, 2)  # center ends with 4

    def test_k_out_of_range(self, hub_tree_8):
        with pytest.raises(ValidationError):
            is_k_informing(hub_tree_8, 0)
        with pytest.raises(ValidationError):
            is_k_informing(hub_tree_8, 9)


# ---------------------------------------------------------------------------
# simulation invariants
# ---------------------------------------------------------------------------

@given(schedules())
def test_monotone_knowledge(s):
    states = simulate_prefixes(s)
    for before, after in zip(states, states[1:]):
        for x, y in zip(before.know, after.know):
            assert x & y == x  # no gossip is ever forgotten


@given(schedules())
def test_post_call_equality(s):
    states = simulate_prefixes(s)
    for c, state in zip(s.calls, states[1:]):
        assert state.know[c.a] == state.know[c.b]


@given(schedules())
def test_conservation_matches_forward_closure(s):
    """g is known to p iff a chronologically increasing call path carries g to p."""
    final = simulate(s)
    for g in range(s.n):
        reached = {g}
        for c in s.calls:
            if c.a in reached or c.b in reached:
                reached.update((c.a, c.b))
        for p in range(s.n):
            assert ((final.know[p] >> g) & 1 == 1) == (p in reached)


@given(schedules(max_n=5, max_calls=6), st.data())
def test_preliminary_gain_bounded_by_list_length(s, data):
    pairs = [(a, b) for a in range(s.n) for b in range(a + 1, s.n)]
    prelim = data.draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=3))
    before = awareness(simulate(s))
    after = awareness(apply_preliminary(AugmentedSchedule(prelim, s)))
    assert all(b - a <= len(prelim) for a, b in zip(before, after))


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

class TestScheduleJson:
    def test_round_trip_is_byte_exact(self, wide_exact4_tree_12_plus_two):
        text = schedule_to_json(wide_exact4_tree_12_plus_two)
        again = schedule_to_json(schedule_from_json(text))
        assert text == again

    def test_key_order_fixed(self, hub_tree_8):
        text = schedule_to_json(hub_tree_8)
        assert text.startswith('{"n":8,"preliminary":[],"calls":[[0,1],')

    def test_preliminary_defaults_to_empty(self):
        aug = schedule_from_json('{"n": 2, "calls": [[0, 1]]}')
        assert aug.preliminary == ()
        assert aug.base.calls == (Call(0, 1),)

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[1,2]",
            '{"calls": []}',
            '{"n": "two", "calls": []}',
            '{"n": 2, "calls": [[0]]}',
            '{"n": 2, "calls": [[0, 2]]}',
            '{"n": 2, "calls": [[0, 0]]}',
            '{"n": 2, "calls": [[0, 1]], "preliminary": [[0, "x"]]}',
        ],
    )
    def test_malformed_documents_rejected(self, text):
        with pytest.raises(ValidationError):
            schedule_from_json(text)
