"""The exact search: feasibility, chi_c, chi_s, budgets, color conversions."""

from __future__ import annotations

from fractions import Fraction

import oracles
import pytest
from gen import grids, signed_graphs
from hypothesis import given, settings
from hypothesis import strategies as st
from sgc.core import NEG, POS, CapacityError, SignedGraph, UncolorableError
from sgc.solver import (BudgetExhausted, ChiUndecided, Coloring, Pin,
                        SolveBudget, chi_c, chi_s, circular_to_zero_free,
                        feasible_pq, verify_coloring, zero_free_to_circular)


def sg(n, triples):
    return SignedGraph.from_triples(n, triples)


C4_NEG = sg(4, [(0, 1, POS), (1, 2, POS), (2, 3, POS), (3, 0, NEG)])
DIGON = sg(2, [(0, 1, POS), (0, 1, NEG)])


class TestVerifyColoring:
    def test_valid_and_invalid(self):
        assert verify_coloring(C4_NEG, Coloring(8, 3, (0, 3, 6, 1)))
        assert not verify_coloring(C4_NEG, Coloring(8, 3, (0, 3, 6, 0)))

    def test_loops(self):
        assert verify_coloring(sg(1, [(0, 0, NEG)]), Coloring(4, 2, (1,)))
        assert not verify_coloring(sg(1, [(0, 0, POS)]), Coloring(4, 1, (1,)))

    @pytest.mark.parametrize("c", [
        Coloring(8, 3, (0, 3, 6)),        # wrong length
        Coloring(8, 3, (0, 3, 6, 8)),     # color out of range
        Coloring(7, 3, (0, 3, 6, 1)),     # odd p
        Coloring(8, 5, (0, 3, 6, 1)),     # q > p/2
        Coloring(8, 3, (0, 3, 6, 1.0)),   # non-int color
    ])
    def test_malformed_raises(self, c):
        with pytest.raises(ValueError):
            verify_coloring(C4_NEG, c)

    @settings(max_examples=200, deadline=None)
    @given(signed_graphs(max_n=4, max_m=6, positive_loops=True), grids(8), st.data())
    def test_matches_independent_predicate(self, g, pq, data):
        p, q = pq
        colors = tuple(data.draw(st.integers(0, p - 1)) for _ in range(g.n))
        expected = all(oracles.edge_ok(p, q, e.sign, colors[e.u], colors[e.v])
                       for e in g.edges)
        assert verify_coloring(g, Coloring(p, q, colors)) == expected


class TestFeasiblePq:
    def test_digon_window(self):
        assert feasible_pq(DIGON, 8, 2) is not None
        assert feasible_pq(DIGON, 6, 2) is None

    def test_found_colorings_verify(self):
        c = feasible_pq(C4_NEG, 8, 3)
        assert c is not None and verify_coloring(C4_NEG, c)
        assert (c.p, c.q) == (8, 3)

    def test_deterministic(self):
        a = feasible_pq(C4_NEG, 8, 3)
        b = feasible_pq(C4_NEG, 8, 3)
        assert a == b

    def test_positive_loop_raises(self):
        with pytest.raises(UncolorableError):
            feasible_pq(sg(1, [(0, 0, POS)]), 4, 1)

    def test_pins(self):
        c = feasible_pq(DIGON, 8, 2, pins=(Pin(0, 3), Pin(1, 1)))
        assert c is not None and c.colors == (3, 1)
        assert feasible_pq(DIGON, 8, 2, pins=(Pin(0, 0), Pin(1, 3))) is None
        with pytest.raises(ValueError):
            feasible_pq(DIGON, 8, 2, pins=(Pin(0, 0), Pin(0, 1)))
        with pytest.raises(ValueError):
            feasible_pq(DIGON, 8, 2, pins=(Pin(5, 0),))
        with pytest.raises(ValueError):
            feasible_pq(DIGON, 8, 2, pins=(Pin(0, 9),))

    def test_bad_grid_rejected(self):
        with pytest.raises(ValueError):
            feasible_pq(DIGON, 7, 2)
        with pytest.raises(ValueError):
            feasible_pq(DIGON, 8, 0)

    def test_budget_exhaustion_raises(self):
        with pytest.raises(BudgetExhausted):
            feasible_pq(C4_NEG, 8, 3, budget=SolveBudget(max_nodes=1))

    @settings(max_examples=250, deadline=None)
    @given(signed_graphs(max_n=4, max_m=6), grids(8))
    def test_agrees_with_brute_force(self, g, pq):
        p, q = pq
        got = feasible_pq(g, p, q)
        assert (got is not None) == (oracles.brute_feasible(g, p, q) is not None)
        if got is not None:
            assert verify_coloring(g, got)

    @settings(max_examples=150, deadline=None)
    @given(signed_graphs(max_n=4, max_m=6), grids(8), st.data())
    def test_pinned_agrees_with_brute_force(self, g, pq, data):
        p, q = pq
        pins = (Pin(data.draw(st.integers(0, g.n - 1)), data.draw(st.integers(0, p - 1))),)
        got = feasible_pq(g, p, q, pins=pins)
        assert (got is not None) == (
            oracles.brute_feasible(g, p, q, pins=((pins[0].vertex, pins[0].color),)) is not None)
        if got is not None:
            assert got.colors[pins[0].vertex] == pins[0].color


class TestChiC:
    def test_edgeless(self):
        res = chi_c(sg(3, []))
        assert (res.value, res.witness, res.refuted) == (1, None, None)

    def test_balanced_families(self):
        res = chi_c(sg(2, [(0, 1, POS)]))
        assert res.value == 2 and res.refuted is None
        assert verify_coloring(sg(2, [(0, 1, POS)]), res.witness)
        # A negative loop alone also sits at exactly 2.
        assert chi_c(sg(1, [(0, 0, NEG)])).value == 2

    def test_negative_four_cycle(self):
        res = chi_c(C4_NEG)
        assert res.value == Fraction(8, 3)
        assert res.refuted == 2
        assert verify_coloring(C4_NEG, res.witness)
        assert (res.witness.p, res.witness.q) == (8, 3)

    def test_digon(self):
        # On 2 vertices the candidate ladder is just {2, 4}.
        res = chi_c(DIGON)
        assert res.value == 4 and res.refuted == 2

    def test_positive_loop_raises(self):
        with pytest.raises(UncolorableError):
            chi_c(sg(1, [(0, 0, POS)]))

    def test_budget_reports_bracket(self):
        with pytest.raises(ChiUndecided) as exc:
            chi_c(C4_NEG, budget=SolveBudget(max_nodes=1))
        err = exc.value
        assert err.lower == 2
        assert err.lower < err.undecided.value <= err.upper
        assert verify_coloring(C4_NEG, err.witness)

    @settings(max_examples=150, deadline=None)
    @given(signed_graphs(max_n=3, max_m=5))
    def test_agrees_with_ascending_oracle_scan(self, g):
        res = chi_c(g)
        assert res.value == oracles.oracle_chi(g)
        if res.witness is not None:
            assert verify_coloring(g, res.witness)


class TestChiS:
    def test_frozen(self):
        assert chi_s(sg(2, [(0, 1, POS)])) == 2
        assert chi_s(sg(3, [(0, 1, POS), (1, 2, POS), (2, 0, POS)])) == 3
        assert chi_s(sg(4, [(0, 1, POS), (1, 2, POS), (2, 3, POS), (3, 0, POS)])) == Fraction(8, 3)
        assert chi_s(sg(2, [])) == 1

    def test_signature_choice_is_irrelevant(self):
        # Same skeleton, different starting signs: the scan covers all classes.
        a = sg(3, [(0, 1, POS), (1, 2, NEG), (2, 0, POS)])
        b = sg(3, [(0, 1, NEG), (1, 2, NEG), (2, 0, NEG)])
        assert chi_s(a) == chi_s(b) == 3

    def test_non_simple_rejected(self):
        with pytest.raises(ValueError):
            chi_s(DIGON)
        with pytest.raises(ValueError):
            chi_s(sg(1, [(0, 0, NEG)]))

    def test_capacity_guard(self):
        k7 = sg(7, [(i, j, POS) for i in range(7) for j in range(i + 1, 7)])
        with pytest.raises(CapacityError):
            chi_s(k7)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(max_n=4, max_m=5, loops=False, parallel=False))
    def test_dominates_every_signature(self, g):
        # chi_s is a max over switching classes, so it dominates the given
        # signature and is attained by some signature on the same skeleton.
        bound = chi_s(g)
        assert chi_c(g).value <= bound


class TestZeroFreeConversions:
    def test_frozen_tables(self):
        assert zero_free_to_circular([1, -1], 1).colors == (0, 1)
        assert zero_free_to_circular([1, 2, -1, -2], 2).colors == (0, 1, 2, 3)
        assert circular_to_zero_free(Coloring(4, 1, (0, 1, 2, 3))) == [1, 2, -1, -2]

    def test_round_trip_errors(self):
        with pytest.raises(ValueError):
            zero_free_to_circular([0], 1)
        with pytest.raises(ValueError):
            zero_free_to_circular([3], 2)
        with pytest.raises(ValueError):
            zero_free_to_circular([1], 0)
        with pytest.raises(ValueError):
            circular_to_zero_free(Coloring(8, 2, (0,)))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 6), st.data())
    def test_round_trip_identity(self, k, data):
        n = data.draw(st.integers(1, 5))
        f = [data.draw(st.sampled_from([x for x in range(-k, k + 1) if x])) for _ in range(n)]
        c = zero_free_to_circular(f, k)
        assert circular_to_zero_free(c) == f
        again = data.draw(st.lists(st.integers(0, 2 * k - 1), min_size=n, max_size=n))
        c2 = Coloring(2 * k, 1, tuple(again))
        assert zero_free_to_circular(circular_to_zero_free(c2), k) == c2
