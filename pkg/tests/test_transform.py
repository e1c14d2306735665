import pytest
from hypothesis import given, settings, strategies as st

from cliquebound.counting import clique_vector
from cliquebound.graphs import (
    complete,
    cycle,
    disjoint_union,
    from_edges,
    mask_of,
)
from cliquebound.structure import derive, tight_cliques
from cliquebound.transform import (
    Profitability,
    apply_fill,
    apply_k2_move,
    fill_profitable,
    gain_lower_bound,
    hill_climb,
)


def staging_graph():
    """Six vertices, seven edges: a near-K_4 whose two degree-2 vertices
    each drag along a pendant."""
    return from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)])


@st.composite
def capped(draw):
    n = draw(st.integers(1, 7))
    edges = draw(
        st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1]))
    )
    g = from_edges(n, edges)
    r = draw(st.integers(max(g.max_degree(), 1), n))
    return g, r


class TestFill:
    def test_cycle4_fill_gains_nothing(self):
        report = apply_fill(cycle(4), 2, 0b0001)
        assert report.move == "fill"
        assert report.k_before == report.k_after == 9
        assert report.gain == 0

    def test_staging_graph_pair_fill(self):
        report = apply_fill(staging_graph(), 3, mask_of([0, 1]))
        assert report.k_before == 16
        assert report.k_after == 18

    def test_staging_graph_singleton_fill(self):
        # filling around one degree-r vertex rebuilds K_4 u K_2 directly
        report = apply_fill(staging_graph(), 3, mask_of([2]))
        assert report.k_after == 19

    def test_result_contains_full_clique(self):
        g = staging_graph()
        report = apply_fill(g, 3, mask_of([2]))
        ts = report.tight_structure
        assert report.after.is_clique(ts.T | ts.S)
        assert report.after.max_degree() <= 3

    @settings(max_examples=150, deadline=None)
    @given(capped())
    def test_gain_never_below_proven_bound(self, gr):
        g, r = gr
        for t_mask in tight_cliques(g, r):
            report = apply_fill(g, r, t_mask)
            assert report.gain >= report.gain_lower_bound

    def test_non_tight_input_rejected(self):
        with pytest.raises(ValueError):
            apply_fill(cycle(5), 3, 0b00001)


class TestK2Move:
    def test_staging_graph(self):
        g = staging_graph()
        report = apply_k2_move(g, 3, mask_of([0, 1]))
        assert report.move == "k2"
        assert report.k_before == 16
        assert report.k_after == 18
        assert report.gain_lower_bound == 2

    def test_requires_pair(self):
        with pytest.raises(ValueError):
            apply_k2_move(cycle(4), 2, 0b0001)

    def test_requires_k2_component(self):
        g = complete(4)
        with pytest.raises(ValueError):
            apply_k2_move(g, 3, 0b0011)


class TestGainLowerBound:
    def test_cycle4_is_zero(self):
        assert gain_lower_bound(cycle(4), 2, 0b0001) == 0

    def test_matches_formula_on_staging_graph(self):
        g = staging_graph()
        # T = {0,1}: S = {2,3}, R = K_2, i(R) = 3, phi = 2
        assert gain_lower_bound(g, 3, mask_of([0, 1])) == 16 - 4 * 3 - 2


class TestProfitability:
    def test_cycle4_separates_the_two_readings(self):
        p = fill_profitable(cycle(4), 2, 0b0001)
        assert p == Profitability(literal=True, corrected=False)

    def test_corrected_implies_positive_proven_gain(self):
        g = staging_graph()
        for t_mask in tight_cliques(g, 3):
            p = fill_profitable(g, 3, t_mask)
            assert p.corrected == (gain_lower_bound(g, 3, t_mask) > 0)


class TestHillClimb:
    def test_staging_graph_one_move_to_18(self):
        trace = hill_climb(staging_graph(), 3)
        assert len(trace) >= 1
        assert trace[0].k_after == 18
        assert clique_vector(trace[-1].after).total == 18

    def test_cycle4_terminates_immediately(self):
        assert hill_climb(cycle(4), 2) == []
        assert clique_vector(cycle(4)).total == 9

    def test_complete_graph_is_a_fixed_point(self):
        assert hill_climb(complete(4), 3) == []

    def test_degree_cap_violation_rejected(self):
        with pytest.raises(ValueError):
            hill_climb(complete(5), 3)

    @settings(max_examples=80, deadline=None)
    @given(capped())
    def test_monotone_and_capped(self, gr):
        g, r = gr
        trace = hill_climb(g, r)
        k = clique_vector(g).total
        for step in trace:
            assert step.k_before == k
            assert step.k_after > step.k_before
            assert step.after.max_degree() <= r
            k = step.k_after
