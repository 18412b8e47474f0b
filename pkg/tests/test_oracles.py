"""Pin the brute-force oracles to hand-derived facts.

The oracles validate the implementation elsewhere, so they are themselves
anchored here on instances small enough to check by hand.
"""

from __future__ import annotations

from fractions import Fraction

import oracles
from gen import grids, signed_graphs
from hypothesis import given, settings
from sgc.core import NEG, POS, SignedGraph


def sg(n, triples):
    return SignedGraph.from_triples(n, triples)


C4_NEG = sg(4, [(0, 1, POS), (1, 2, POS), (2, 3, POS), (3, 0, NEG)])
DIGON = sg(2, [(0, 1, POS), (0, 1, NEG)])
TRIANGLE = sg(3, [(0, 1, POS), (1, 2, POS), (2, 0, POS)])


class TestEdgeOk:
    def test_positive_is_plain_circular_distance(self):
        # p=6, q=2: colors 0 and 2 are distance 2 apart; 0 and 5 distance 1.
        assert oracles.edge_ok(6, 2, POS, 0, 2)
        assert not oracles.edge_ok(6, 2, POS, 0, 5)
        assert not oracles.edge_ok(6, 2, POS, 4, 4)

    def test_negative_measures_to_the_antipode(self):
        # p=8: antipode of 1 is 5; distance from 4 to 5 is 1 < q=2.
        assert not oracles.edge_ok(8, 2, NEG, 4, 1)
        # distance from 7 to 5 is 2 >= 2.
        assert oracles.edge_ok(8, 2, NEG, 7, 1)
        # A negative loop at color x measures p/2 >= q whenever p >= 2q.
        assert oracles.edge_ok(8, 3, NEG, 6, 6)


class TestBruteFeasible:
    def test_negative_four_cycle_at_8_3(self):
        assert oracles.brute_feasible(C4_NEG, 8, 3) is not None

    def test_negative_four_cycle_not_at_18_7(self):
        # 18/7 < 8/3, so no coloring can exist on that grid.
        assert oracles.brute_feasible(C4_NEG, 18, 7) is None

    def test_respects_pins(self):
        # A digon forces the terminal gap q <= d <= p/2 - q; at (8,2) only d=2.
        assert oracles.brute_feasible(DIGON, 8, 2, pins=((0, 0), (1, 2))) is not None
        assert oracles.brute_feasible(DIGON, 8, 2, pins=((0, 0), (1, 3))) is None
        assert oracles.brute_feasible(DIGON, 8, 2, pins=((0, 0), (0, 1))) is None

    def test_positive_loop_never_colorable(self):
        assert oracles.brute_feasible(sg(1, [(0, 0, POS)]), 8, 2) is None

    @settings(max_examples=200, deadline=None)
    @given(signed_graphs(max_n=3, max_m=4, positive_loops=True), grids(6))
    def test_agrees_with_unpruned_product_scan(self, g, pq):
        p, q = pq
        assert (oracles.brute_feasible(g, p, q) is not None) == oracles.product_feasible(g, p, q)


class TestOracleZset:
    def test_digon_gap_window(self):
        # Valid digon gaps are exactly q <= d <= p/2 - q.
        assert oracles.oracle_zset(DIGON, 0, 1, 4, 1) == (1,)
        assert oracles.oracle_zset(DIGON, 0, 1, 8, 2) == (2,)
        assert oracles.oracle_zset(DIGON, 0, 1, 6, 2) == ()

    def test_two_edge_paths_at_18_5(self):
        # Middle color needs gap >= 5 to color-0 (occupies 5..13).  A second
        # positive edge to a vertex at gap d survives iff d <= 8; flipping
        # that edge's sign shifts the window to 1..9.
        pos_path = sg(3, [(0, 2, POS), (2, 1, POS)])
        mix_path = sg(3, [(0, 2, POS), (2, 1, NEG)])
        assert oracles.oracle_zset(pos_path, 0, 1, 18, 5) == tuple(range(0, 9))
        assert oracles.oracle_zset(mix_path, 0, 1, 18, 5) == tuple(range(1, 10))


class TestOracleCandidates:
    def test_two_vertices(self):
        assert oracles.oracle_candidates(2) == [Fraction(2), Fraction(4)]

    def test_three_vertices(self):
        # 3 enters as 6/2; 8/3 and 5/2 would need numerators 8 and 10.
        assert oracles.oracle_candidates(3) == [Fraction(2), Fraction(3), Fraction(4), Fraction(6)]


class TestOracleChi:
    def test_edgeless(self):
        assert oracles.oracle_chi(sg(3, [])) == 1

    def test_single_positive_edge(self):
        assert oracles.oracle_chi(sg(2, [(0, 1, POS)])) == 2

    def test_digon(self):
        assert oracles.oracle_chi(DIGON) == 4

    def test_positive_triangle(self):
        assert oracles.oracle_chi(TRIANGLE) == 3

    def test_negative_triangle(self):
        assert oracles.oracle_chi(sg(3, [(0, 1, POS), (1, 2, POS), (2, 0, NEG)])) == 2

    def test_negative_four_cycle(self):
        assert oracles.oracle_chi(C4_NEG) == Fraction(8, 3)

    def test_negative_loop(self):
        assert oracles.oracle_chi(sg(1, [(0, 0, NEG)])) == 2


class TestOracleGirthTypes:
    def test_negative_four_cycle(self):
        # Back-and-forth on one edge: length 2, no negatives.  The cycle
        # itself: length 4, one negative.  Odd walks need an odd cycle.
        assert oracles.oracle_girth_types(C4_NEG) == {
            (0, 0): 2, (0, 1): None, (1, 0): 4, (1, 1): None}

    def test_negative_loop(self):
        # Each loop traversal adds 1 to both parities, so only (L%2, L%2).
        assert oracles.oracle_girth_types(sg(1, [(0, 0, NEG)])) == {
            (0, 0): 2, (0, 1): None, (1, 0): None, (1, 1): 1}

    def test_positive_triangle(self):
        assert oracles.oracle_girth_types(TRIANGLE) == {
            (0, 0): 2, (0, 1): 3, (1, 0): None, (1, 1): None}


class TestOracleBalanced:
    def test_values(self):
        assert oracles.oracle_balanced(sg(4, [(0, 1, POS), (1, 2, POS), (2, 3, POS), (3, 0, POS)]))
        assert not oracles.oracle_balanced(C4_NEG)
        # Two negative edges meeting at vertex 1: switch {1}.
        assert oracles.oracle_balanced(sg(3, [(0, 1, NEG), (1, 2, NEG), (2, 0, POS)]))
        assert not oracles.oracle_balanced(sg(1, [(0, 0, NEG)]))
        assert oracles.oracle_balanced(sg(1, [(0, 0, POS)]))


class TestOracleChromaticAndChiPlus:
    def test_chromatic(self):
        assert oracles.oracle_chromatic(3, {(0, 1), (1, 2), (0, 2)}) == 3
        assert oracles.oracle_chromatic(5, {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}) == 3
        assert oracles.oracle_chromatic(4, set()) == 1

    def test_chi_plus(self):
        # All-positive triangle: one switching isolates a single positive edge.
        assert oracles.oracle_chi_plus(TRIANGLE) == 2
        # Digon: both copies flip together, so one of the two is always positive.
        assert oracles.oracle_chi_plus(DIGON) == 2
        assert oracles.oracle_chi_plus(C4_NEG) == 2
        assert oracles.oracle_chi_plus(sg(2, [])) == 1
