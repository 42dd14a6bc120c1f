"""
Graph realizations.

Core claims:
    - every constructive family passes the incidence-isomorphism self-check
    - any vertex order of a tree is admissible and the monodromy polynomial
      does not depend on it
    - the obstruction finds a valid witness on Q3 and the oracle agrees
    - realizations of short cycles are unique up to rotation and reflection
"""

from itertools import combinations

import networkx as nx
import pytest

from coxeter_links.chord_core import ChordDiagram, SimpleGraph, incidence_graph, is_coxeter_type
from coxeter_links.errors import BudgetExceededError, InvalidGraphError, NotRealizableError
from coxeter_links.exact_forms import char_poly, monodromy, seifert_matrix
from coxeter_links.realizer import (
    CROSSING_PAIR,
    GraphRealizer,
    ObstructionWitness,
    RealizeMethod,
    all_realizations,
    brute_force_realize,
    join,
    obstruction_check,
    realize,
    realize_complete,
    realize_complete_bipartite,
    realize_cycle,
    realize_path,
    realize_tree,
    star_graph,
)


def _graph(nx_graph) -> SimpleGraph:
    return SimpleGraph.from_networkx(nx_graph)


def _random_tree(rng, n) -> SimpleGraph:
    if n < 3:
        return _graph(nx.path_graph(n))
    return _graph(nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)]))


def _q3() -> SimpleGraph:
    return _graph(nx.hypercube_graph(3))


# -- Joins and trees ---------------------------------------------------------

def test_join_of_two_crossing_pairs():
    d = join(CROSSING_PAIR, CROSSING_PAIR, 0, 0)
    assert d.n == 3
    assert incidence_graph(d).edges() == [(0, 1), (0, 2)]


def test_join_keeps_first_diagram_labels():
    triangle = ChordDiagram(((0, 3), (1, 4), (2, 5)))
    d = join(triangle, CROSSING_PAIR, 2, 0)
    assert incidence_graph(d).edges() == [(0, 1), (0, 2), (1, 2), (2, 3)]


@pytest.mark.parametrize("n", range(1, 9))
def test_path_ladder(n):
    d = realize_path(n)
    assert incidence_graph(d).edges() == [(k, k + 1) for k in range(n - 1)]


def test_random_trees_realized(rng):
    for _ in range(60):
        t = _random_tree(rng, rng.randint(1, 10))
        realization = realize_tree(t)
        assert realization.diagram.n == t.n
        system = realization.system()
        assert system is not None and is_coxeter_type(system)


def test_tree_order_independence(rng):
    for _ in range(15):
        t = _random_tree(rng, rng.randint(3, 9))
        base = realize_tree(t)
        expected = char_poly(monodromy(seifert_matrix(base.system())))
        for _ in range(4):
            order = list(range(t.n))
            rng.shuffle(order)
            realization = realize_tree(t.with_order(order))
            polynomial = char_poly(monodromy(seifert_matrix(realization.system())))
            assert polynomial.equivalent(expected)


def test_realize_tree_rejects_cycles():
    with pytest.raises(InvalidGraphError):
        realize_tree(_graph(nx.cycle_graph(4)))


def test_star_graph_layout():
    e10 = star_graph(2, 3, 7)
    assert e10.n == 10
    assert e10.degree(9) == 3
    assert star_graph(2, 3, 5).n == 8
    assert star_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(InvalidGraphError):
        star_graph(2, 0)


# -- Explicit families -----------------------------------------------------------

@pytest.mark.parametrize("n", range(3, 9))
def test_cycles(n):
    assert incidence_graph(realize_cycle(n)).is_isomorphic(_graph(nx.cycle_graph(n)))


def test_cycle_needs_three_vertices():
    with pytest.raises(InvalidGraphError):
        realize_cycle(2)


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_graphs(n):
    assert incidence_graph(realize_complete(n)).is_isomorphic(_graph(nx.complete_graph(n)))


@pytest.mark.parametrize("p, q", [(p, q) for p in range(1, 7) for q in range(1, 7) if p + q <= 7])
def test_complete_bipartite_graphs(p, q):
    d = realize_complete_bipartite(p, q)
    assert incidence_graph(d).is_isomorphic(_graph(nx.complete_bipartite_graph(p, q)))


# -- Dispatcher ----------------------------------------------------------------------

def test_dispatch_methods():
    assert realize(star_graph(2, 3, 7), RealizeMethod.STAR).method == RealizeMethod.TREE
    assert realize(_graph(nx.path_graph(5))).method == RealizeMethod.PATH
    assert realize(_graph(nx.cycle_graph(5)), RealizeMethod.CYCLE).method == RealizeMethod.CYCLE
    assert realize(_graph(nx.complete_graph(4)), RealizeMethod.COMPLETE).diagram.n == 4
    bipartite = realize(_graph(nx.complete_bipartite_graph(2, 3)), RealizeMethod.BIPARTITE)
    assert bipartite.method == RealizeMethod.BIPARTITE


def test_dispatch_shape_mismatch():
    with pytest.raises(InvalidGraphError):
        realize(_graph(nx.path_graph(4)), RealizeMethod.CYCLE)
    with pytest.raises(InvalidGraphError):
        realize(_graph(nx.complete_graph(3)), RealizeMethod.BIPARTITE)
    with pytest.raises(InvalidGraphError):
        realize(SimpleGraph(0, frozenset()))


def test_auto_uses_exhaustive_search_for_cycles():
    realization = GraphRealizer().realize(_graph(nx.cycle_graph(5)))
    assert realization.method == RealizeMethod.BRUTE
    realization.verify()


# -- Obstruction and oracle ------------------------------------------------------------

def test_q3_obstruction_witness():
    g = _q3()
    witness = obstruction_check(g)
    assert witness is not None
    assert witness.is_valid(g)
    assert len(witness.cycle) == 6


def test_q3_rejected_by_dispatcher():
    with pytest.raises(NotRealizableError) as info:
        GraphRealizer().realize(_q3())
    assert info.value.exit_code == 3
    assert set(info.value.details) == {"apex", "triple", "cycle"}


def test_no_obstruction_on_realizable_graphs():
    for g in (_graph(nx.cycle_graph(6)), star_graph(2, 3, 7), _graph(nx.complete_graph(5))):
        assert obstruction_check(g) is None


def test_invalid_witness_detected():
    g = _q3()
    assert not ObstructionWitness((0, 1, 2), 3, (0, 1, 2, 3)).is_valid(g)


def test_brute_force_finds_cycle():
    d = brute_force_realize(_graph(nx.cycle_graph(5)))
    assert d is not None
    assert incidence_graph(d).is_isomorphic(_graph(nx.cycle_graph(5)))


def test_brute_force_budget():
    with pytest.raises(BudgetExceededError):
        brute_force_realize(_q3(), budget=5)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cycle_realization_unique(n):
    found = all_realizations(_graph(nx.cycle_graph(n)))
    assert len(found) == 1
    assert all(a.equivalent(b) for a, b in combinations(found + [realize_cycle(n)], 2))


@pytest.mark.slow
def test_q3_exhaustive_search_finds_nothing():
    assert brute_force_realize(_q3()) is None


@pytest.mark.slow
def test_obstruction_soundness_and_oracle_consistency():
    for nx_graph in nx.graph_atlas_g()[1:]:
        if nx_graph.number_of_nodes() > 6 or not nx.is_connected(nx_graph):
            continue
        g = _graph(nx_graph)
        witness = obstruction_check(g)
        found = brute_force_realize(g)
        if witness is not None:
            assert witness.is_valid(g)
            assert found is None
        if found is not None:
            assert incidence_graph(found).is_isomorphic(g)


@pytest.mark.slow
def test_obstruction_soundness_on_seven_vertices():
    # a hexagon plus a vertex on three alternate corners, with 0..3 extra spokes
    obstructed = 0
    for nx_graph in nx.graph_atlas_g():
        if nx_graph.number_of_nodes() != 7:
            continue
        g = _graph(nx_graph)
        witness = obstruction_check(g)
        if witness is None:
            continue
        obstructed += 1
        assert witness.is_valid(g)
        assert brute_force_realize(g) is None
    assert obstructed == 4
