"""
Chord diagrams, chord systems and directed diagrams.

Core claims:
    - every constructor enforces the perfect-matching invariant
    - crossing is symmetric and the bilinear form is symmetric
    - reversing a chord negates its linking numbers
    - the slope ordering is always Coxeter-type
    - sink/source moves keep the monodromy characteristic polynomial
"""

import pytest

from coxeter_links.chord_core import (
    ChordDiagram,
    ChordSystem,
    DirectedDiagram,
    SimpleGraph,
    bilinear_form,
    coxeter_orientation,
    crosses,
    incidence_graph,
    is_coxeter_type,
    linking_number,
    order_from_directed,
    reverse_chord,
    sink_source_move,
    slope_order,
    to_directed,
)
from coxeter_links.errors import (
    ChordIndexError,
    CyclicRelationError,
    InvalidDiagramError,
    InvalidGraphError,
    InvalidMoveError,
)
from coxeter_links.exact_forms import char_poly, monodromy, seifert_matrix
from coxeter_links.realizer import realize_path

from .conftest import random_diagram


def _monodromy_poly(system):
    return char_poly(monodromy(seifert_matrix(system)))


# -- Construction ------------------------------------------------------------

@pytest.mark.parametrize("chords", [
    ((0, 1), (1, 2)),
    ((0, 1), (2, 4)),
    ((0, 0),),
    (),
])
def test_diagram_rejects_non_matchings(chords):
    with pytest.raises(InvalidDiagramError):
        ChordDiagram(chords)


def test_diagram_normalises_endpoint_pairs():
    d = ChordDiagram(((3, 0), (4, 1), (5, 2)))
    assert d.chords == ((0, 3), (1, 4), (2, 5))
    assert d.partner == (3, 4, 5, 0, 1, 2)
    assert d.points == 6


def test_system_rejects_orientation_off_its_chord():
    d = ChordDiagram(((0, 2), (1, 3)))
    with pytest.raises(InvalidDiagramError):
        ChordSystem(d, ((0, 2), (1, 2)), (0, 1))
    with pytest.raises(InvalidDiagramError):
        ChordSystem(d, ((0, 2), (1, 3)), (0, 0))


def test_dihedral_equivalence():
    a = ChordDiagram(((0, 1), (2, 3)))
    b = ChordDiagram(((1, 2), (3, 0)))
    crossing = ChordDiagram(((0, 2), (1, 3)))
    assert a.equivalent(b)
    assert not a.equivalent(crossing)


# -- Crossing and linking ----------------------------------------------------

def test_crosses_on_triangle(triangle):
    d = triangle.diagram
    assert all(crosses(d, i, j) for i in range(3) for j in range(3) if i != j)


def test_crosses_nested_and_disjoint():
    d = ChordDiagram(((0, 5), (1, 2), (3, 4)))
    assert not crosses(d, 0, 1)
    assert not crosses(d, 1, 2)


def test_crosses_index_errors(triangle):
    with pytest.raises(ChordIndexError):
        crosses(triangle.diagram, 1, 1)
    with pytest.raises(ChordIndexError):
        crosses(triangle.diagram, 0, 3)


def test_crosses_symmetric(rng):
    for _ in range(50):
        d = random_diagram(rng, rng.randint(2, 9))
        for i in range(d.n):
            for j in range(i + 1, d.n):
                assert crosses(d, i, j) == crosses(d, j, i)


def test_linking_sign_calibration(triangle, triangle_non_coxeter):
    assert bilinear_form(triangle).tolist() == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert bilinear_form(triangle_non_coxeter).tolist() == [[2, -1, -1], [-1, 2, 1], [-1, 1, 2]]
    assert is_coxeter_type(triangle)
    assert not is_coxeter_type(triangle_non_coxeter)


def test_linking_number_zero_for_disjoint_chords():
    s = ChordSystem.from_diagram(ChordDiagram(((0, 1), (2, 3))))
    assert linking_number(s, 0, 1) == 0
    with pytest.raises(ChordIndexError):
        linking_number(s, 1, 1)


def test_reversal_negates_linking(random_systems):
    for s in random_systems(40, 8):
        for i in range(s.n):
            flipped = reverse_chord(s, i)
            for j in range(s.n):
                if j != i:
                    assert linking_number(flipped, i, j) == -linking_number(s, i, j)


def test_bilinear_form_symmetric(random_systems):
    for s in random_systems(40, 10):
        assert bilinear_form(s).is_symmetric()


def test_reorientation_keeps_monodromy_polynomial(random_systems):
    for s in random_systems(30, 7):
        for i in range(s.n):
            assert _monodromy_poly(reverse_chord(s, i)) == _monodromy_poly(s)


# -- Coxeter-type orderings --------------------------------------------------

def test_slope_order_is_coxeter_type(rng):
    for _ in range(200):
        d = random_diagram(rng, rng.randint(1, 12))
        system = slope_order(d)
        assert system.diagram == d
        assert is_coxeter_type(system)


def test_slope_order_of_pentagon(pentagon):
    # upward directions sit at 144, 36, 108, 0 and 72 degrees (plus the offset)
    system = slope_order(pentagon.diagram)
    assert system.order == (3, 1, 4, 2, 0)
    assert system.orientations == ((0, 3), (5, 2), (7, 4), (6, 9), (8, 1))
    assert is_coxeter_type(system)


@pytest.mark.slow
def test_slope_order_is_coxeter_type_thousand(rng):
    for _ in range(1000):
        assert is_coxeter_type(slope_order(random_diagram(rng, rng.randint(1, 12))))


def test_coxeter_orientation_admissible_and_not(square_cyclic):
    d = square_cyclic.diagram
    assert coxeter_orientation(d, (0, 1, 2, 3)) is None
    system = coxeter_orientation(d, (0, 2, 1, 3))
    assert system is not None
    assert is_coxeter_type(system)
    assert system.order == (0, 2, 1, 3)


def test_coxeter_orientation_of_any_tree_order(rng):
    d = realize_path(6)
    for _ in range(20):
        order = list(range(6))
        rng.shuffle(order)
        system = coxeter_orientation(d, order)
        assert system is not None and is_coxeter_type(system)


# -- Directed diagrams -------------------------------------------------------

def test_directed_diagram_requires_every_crossing_pair(triangle):
    with pytest.raises(InvalidDiagramError):
        DirectedDiagram(triangle.diagram, frozenset({(0, 1), (1, 2)}))
    with pytest.raises(InvalidDiagramError):
        DirectedDiagram(ChordDiagram(((0, 1), (2, 3))), frozenset({(0, 1)}))


def test_sink_source_move_on_path():
    system = ChordSystem.from_diagram(realize_path(3))
    dd = to_directed(system)
    assert dd.over == frozenset({(0, 1), (1, 2)})
    assert dd.is_source(0) and dd.is_sink(2)
    moved = sink_source_move(dd, 0)
    assert moved.over == frozenset({(1, 0), (1, 2)})
    with pytest.raises(InvalidMoveError):
        sink_source_move(dd, 1)


def test_isolated_chord_is_source_and_sink():
    dd = to_directed(ChordSystem.from_diagram(ChordDiagram(((0, 1), (2, 4), (3, 5)))))
    assert dd.is_source(0) and dd.is_sink(0)
    assert sink_source_move(dd, 0) == dd


def test_order_from_directed_rejects_cycles(triangle):
    dd = DirectedDiagram(triangle.diagram, frozenset({(0, 1), (1, 2), (2, 0)}))
    with pytest.raises(CyclicRelationError):
        order_from_directed(dd)


def test_directed_round_trip(random_coxeter_systems):
    for s in random_coxeter_systems(40, 9):
        dd = to_directed(s)
        assert to_directed(order_from_directed(dd)) == dd


def test_sink_source_invariance(random_coxeter_systems):
    for s in random_coxeter_systems(40, 10):
        dd = to_directed(s)
        expected = _monodromy_poly(s)
        for k in range(s.n):
            if dd.is_source(k) or dd.is_sink(k):
                assert _monodromy_poly(order_from_directed(sink_source_move(dd, k))) == expected


# -- Graphs ------------------------------------------------------------------

def test_incidence_graph_of_triangle(triangle):
    g = incidence_graph(triangle.diagram)
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]
    assert g.degree(0) == 2


def test_simple_graph_validation():
    with pytest.raises(InvalidGraphError):
        SimpleGraph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidGraphError):
        SimpleGraph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidGraphError):
        SimpleGraph.from_edges(2, [(0, 2)])
    with pytest.raises(InvalidGraphError):
        SimpleGraph.from_edges(2, [(0, 1)], order=[0, 0])
    with pytest.raises(ChordIndexError):
        SimpleGraph.from_edges(2, [(0, 1)]).neighbors(2)


def test_graph_isomorphism():
    path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    relabelled = SimpleGraph.from_edges(3, [(2, 0), (0, 1)])
    triangle = SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    mapping = path.isomorphism(relabelled)
    assert mapping is not None
    assert all(relabelled.has_edge(mapping[u], mapping[v]) for u, v in path.edges())
    assert not path.is_isomorphic(triangle)
