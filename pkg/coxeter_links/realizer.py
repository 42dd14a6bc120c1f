"""
Graph-side machinery: chord diagrams whose incidence graph is a given graph.

Constructive realizations cover paths, trees (by iterated one-vertex joins),
cycles, complete and complete bipartite graphs. An independent triple of
neighbours of one vertex lying on an induced cycle rules a graph out, and an
exhaustive search over matchings serves as the oracle for everything else.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .chord_core import (
    ChordDiagram,
    ChordSystem,
    SimpleGraph,
    coxeter_orientation,
    crosses,
    incidence_graph,
)
from .config import DEFAULT_CONFIG, ToolkitConfig
from .enumeration import MatchingEnumerator
from .errors import InvalidGraphError, NotRealizableError, TheoremViolationError

logger = logging.getLogger(__name__)

CROSSING_PAIR = ChordDiagram(((0, 2), (1, 3)))


class RealizeMethod(str, Enum):
    AUTO = "auto"
    TREE = "tree"
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    BIPARTITE = "bipartite"
    STAR = "star"
    BRUTE = "brute"


@dataclass(frozen=True)
class Realization:
    """A chord diagram realizing ``graph``; vertex v is chord ``chord_of_vertex[v]``."""

    graph: SimpleGraph
    diagram: ChordDiagram
    chord_of_vertex: Tuple[int, ...]
    method: RealizeMethod

    def verify(self) -> None:
        """Raise ``TheoremViolationError`` unless crossings match the graph's edges exactly."""
        g = self.graph
        for u, v in combinations(range(g.n), 2):
            if crosses(self.diagram, self.chord_of_vertex[u], self.chord_of_vertex[v]) != g.has_edge(u, v):
                logger.error("realization does not match its graph", extra={"u": u, "v": v})
                raise TheoremViolationError(
                    f"{self.method.value} realization disagrees with the graph at vertices {u}, {v}",
                    {"chords": [list(c) for c in self.diagram.chords]},
                )

    def chord_order(self) -> Tuple[int, ...]:
        """Chord labels listed in the graph's vertex order."""
        return tuple(self.chord_of_vertex[v] for v in self.graph.vertex_order)

    def system(self) -> Optional[ChordSystem]:
        """Coxeter-type system ordered like the graph's vertices, or None if that order is not admissible."""
        return coxeter_orientation(self.diagram, self.chord_order())


@dataclass(frozen=True)
class ObstructionWitness:
    """Three independent neighbours of ``apex`` lying on the induced cycle ``cycle``."""

    triple: Tuple[int, int, int]
    apex: int
    cycle: Tuple[int, ...]

    def is_valid(self, g: SimpleGraph) -> bool:
        a, b, c = self.triple
        if len({a, b, c}) != 3 or any(g.has_edge(x, y) for x, y in ((a, b), (a, c), (b, c))):
            return False
        if not all(g.has_edge(self.apex, x) for x in self.triple):
            return False
        cycle = self.cycle
        k = len(cycle)
        if k < 3 or len(set(cycle)) != k or not set(self.triple) <= set(cycle):
            return False
        for i, j in combinations(range(k), 2):
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
        return True


# --------------------------------------------------------------------------
# Joins and trees
# --------------------------------------------------------------------------

def _arcs(d: ChordDiagram, k: int) -> Tuple[List[int], List[int]]:
    """Boundary points strictly inside chord k, then those outside it (both in cyclic order)."""
    a, b = d.chords[k]
    inside = list(range(a + 1, b))
    outside = list(range(b + 1, d.points)) + list(range(0, a))
    return inside, outside


def join(d1: ChordDiagram, d2: ChordDiagram, k1: int, k2: int) -> ChordDiagram:
    """
    One-vertex join: chord k1 of d1 and chord k2 of d2 become one chord.

    The boundary reads l, X2, Y1, l, X1, Y2 where X and Y are the two arcs
    cut off by the shared chord in each diagram. Chords of d1 keep their
    labels; the other chords of d2 follow in their original order.
    """
    d1.check_index(k1)
    d2.check_index(k2)
    x1, y1 = _arcs(d1, k1)
    x2, y2 = _arcs(d2, k2)
    word: List[Tuple[int, int]] = [(0, -1)]
    word += [(2, p) for p in x2] + [(1, p) for p in y1]
    word += [(0, -2)]
    word += [(1, p) for p in x1] + [(2, p) for p in y2]
    position: Dict[Tuple[int, int], int] = {token: i for i, token in enumerate(word)}

    chords: List[Tuple[int, int]] = []
    for label, (a, b) in enumerate(d1.chords):
        if label == k1:
            chords.append((position[(0, -1)], position[(0, -2)]))
        else:
            chords.append((position[(1, a)], position[(1, b)]))
    for label, (a, b) in enumerate(d2.chords):
        if label != k2:
            chords.append((position[(2, a)], position[(2, b)]))
    return ChordDiagram(tuple(chords))


def realize_path(n: int) -> ChordDiagram:
    """Ladder: (0, 2), then (2k - 1, 2k + 2), closing with (2n - 3, 2n - 1)."""
    if n < 1:
        raise InvalidGraphError("a path needs at least one vertex")
    if n == 1:
        return ChordDiagram(((0, 1),))
    chords = [(0, 2)]
    chords += [(2 * k - 1, 2 * k + 2) for k in range(1, n - 1)]
    chords.append((2 * n - 3, 2 * n - 1))
    return ChordDiagram(tuple(chords))


def _path_sequence(t: SimpleGraph) -> Optional[List[int]]:
    if t.n == 1:
        return [0]
    if any(t.degree(v) > 2 for v in range(t.n)):
        return None
    start = min(v for v in range(t.n) if t.degree(v) == 1)
    sequence = [start]
    previous = -1
    while len(sequence) < t.n:
        current = sequence[-1]
        step = next(w for w in t.neighbors(current) if w != previous)
        previous = current
        sequence.append(step)
    return sequence


def realize_tree(t: SimpleGraph) -> Realization:
    """Ladder for paths, iterated joins with a crossing pair otherwise."""
    if not t.is_tree():
        raise InvalidGraphError("graph is not a tree")
    sequence = _path_sequence(t)
    if sequence is not None:
        chord_of_vertex = [0] * t.n
        for chord, vertex in enumerate(sequence):
            chord_of_vertex[vertex] = chord
        realization = Realization(t, realize_path(t.n), tuple(chord_of_vertex), RealizeMethod.PATH)
    else:
        diagram = ChordDiagram(((0, 1),))
        chords = {0: 0}
        for parent, child in nx.bfs_edges(t.to_networkx(), 0):
            diagram = join(diagram, CROSSING_PAIR, chords[parent], 0)
            chords[child] = diagram.n - 1
        realization = Realization(
            t, diagram, tuple(chords[v] for v in range(t.n)), RealizeMethod.TREE
        )
    realization.verify()
    return realization


# --------------------------------------------------------------------------
# Explicit families
# --------------------------------------------------------------------------

def realize_cycle(n: int) -> ChordDiagram:
    """Chord k joins 2k and 2k + 3 (mod 2n)."""
    if n < 3:
        raise InvalidGraphError(f"a cycle needs at least 3 vertices, got {n}")
    return ChordDiagram(tuple((2 * k, (2 * k + 3) % (2 * n)) for k in range(n)))


def realize_complete(n: int) -> ChordDiagram:
    """n diameters (k, k + n)."""
    if n < 1:
        raise InvalidGraphError("a complete graph needs at least one vertex")
    return ChordDiagram(tuple((k, k + n) for k in range(n)))


def realize_complete_bipartite(p: int, q: int) -> ChordDiagram:
    """p nested chords (i, 2p + q - 1 - i) crossed by q nested chords (p + j, 2p + 2q - 1 - j)."""
    if p < 1 or q < 1:
        raise InvalidGraphError(f"complete bipartite graph needs both sides non-empty, got {p}, {q}")
    left = [(i, 2 * p + q - 1 - i) for i in range(p)]
    right = [(p + j, 2 * p + 2 * q - 1 - j) for j in range(q)]
    return ChordDiagram(tuple(left + right))


def star_graph(*arms: int) -> SimpleGraph:
    """
    Star(p_1, ..., p_k): k paths of p_i vertices sharing one end vertex.

    Vertices are numbered arm by arm from the leaf toward the hub and the hub
    comes last, so the vertex order directs every edge toward the hub.
    """
    if not arms or any(p < 1 for p in arms):
        raise InvalidGraphError(f"star arms must be positive, got {list(arms)}")
    total = sum(arms) - (len(arms) - 1)
    hub = total - 1
    edges = []
    vertex = 0
    for p in arms:
        arm = list(range(vertex, vertex + p - 1)) + [hub]
        edges += list(zip(arm, arm[1:]))
        vertex += p - 1
    return SimpleGraph.from_edges(total, edges)


# --------------------------------------------------------------------------
# Obstruction and brute force
# --------------------------------------------------------------------------

def _normalised_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    k = cycle.index(min(cycle))
    rotated = list(cycle[k:]) + list(cycle[:k])
    reverse = [rotated[0]] + rotated[:0:-1]
    return tuple(min(rotated, reverse))


def obstruction_check(g: SimpleGraph, cycle_cap: Optional[int] = None) -> Optional[ObstructionWitness]:
    """
    Look for three pairwise non-adjacent neighbours of one vertex on an induced cycle.

    Such a configuration makes g non-realizable. Only induced cycles of at
    most ``cycle_cap`` vertices are searched, and finding nothing does not
    prove g realizable. The witness returned is the first by apex, then
    triple, then (length, vertex sequence) of the cycle.
    """
    cap = cycle_cap if cycle_cap is not None else DEFAULT_CONFIG.induced_cycle_cap
    cycles = sorted(
        {_normalised_cycle(c) for c in nx.chordless_cycles(g.to_networkx(), length_bound=cap) if len(c) >= 4},
        key=lambda c: (len(c), c),
    )
    if not cycles:
        return None
    for apex in range(g.n):
        neighbours = g.neighbors(apex)
        for triple in combinations(neighbours, 3):
            if any(g.has_edge(x, y) for x, y in combinations(triple, 2)):
                continue
            for cycle in cycles:
                if set(triple) <= set(cycle):
                    witness = ObstructionWitness(tuple(triple), apex, cycle)
                    logger.debug("obstruction found", extra={"apex": apex, "triple": list(triple)})
                    return witness
    return None


def _matching_realizations(g: SimpleGraph, budget: Optional[int], first_only: bool) -> List[Realization]:
    target = g.to_networkx()
    max_degree = max((g.degree(v) for v in range(g.n)), default=0)
    enumerator = MatchingEnumerator(
        g.n, canonical_only=True, max_degree=max_degree, max_edges=len(g.edge_set), budget=budget
    )
    found: List[Realization] = []
    for diagram in enumerator:
        candidate = incidence_graph(diagram)
        if len(candidate.edge_set) != len(g.edge_set):
            continue
        if not nx.faster_could_be_isomorphic(target, candidate.to_networkx()):
            continue
        mapping = g.isomorphism(candidate)
        if mapping is None:
            continue
        realization = Realization(g, diagram, tuple(mapping[v] for v in range(g.n)), RealizeMethod.BRUTE)
        found.append(realization)
        if first_only:
            break
    logger.debug(
        "matching search finished",
        extra={"vertices": g.n, "examined": enumerator.examined, "found": len(found)},
    )
    return found


def brute_force_realize(g: SimpleGraph, budget: Optional[int] = None) -> Optional[ChordDiagram]:
    """
    First dihedral-canonical matching whose incidence graph is isomorphic to g.

    Returns None only after the search space is exhausted; running out of
    ``budget`` matchings raises ``BudgetExceededError`` instead.
    """
    found = brute_force_realization(g, budget)
    return found.diagram if found is not None else None


def brute_force_realization(g: SimpleGraph, budget: Optional[int] = None) -> Optional[Realization]:
    if g.n < 1:
        raise InvalidGraphError("graph has no vertices")
    found = _matching_realizations(g, budget, first_only=True)
    return found[0] if found else None


def all_realizations(g: SimpleGraph, budget: Optional[int] = None) -> List[ChordDiagram]:
    """Every dihedral-canonical realization of g, in lexicographic order."""
    if g.n < 1:
        raise InvalidGraphError("graph has no vertices")
    return [r.diagram for r in _matching_realizations(g, budget, first_only=False)]


# --------------------------------------------------------------------------
# Dispatcher
# --------------------------------------------------------------------------

def _matched(g: SimpleGraph, diagram: ChordDiagram, method: RealizeMethod) -> Realization:
    mapping = g.isomorphism(incidence_graph(diagram))
    if mapping is None:
        raise InvalidGraphError(f"graph does not have the shape required by method '{method.value}'")
    return Realization(g, diagram, tuple(mapping[v] for v in range(g.n)), method)


class GraphRealizer:
    """
    Chooses and runs a realization strategy for a graph.

    ``auto`` uses the tree construction for trees; for other graphs it tries
    the obstruction first and then the exhaustive search.
    """

    def __init__(self, config: Optional[ToolkitConfig] = None):
        self.config = config or DEFAULT_CONFIG

    def realize(self, g: SimpleGraph, method: RealizeMethod = RealizeMethod.AUTO) -> Realization:
        if g.n < 1:
            raise InvalidGraphError("graph has no vertices")
        method = RealizeMethod(method)
        if method == RealizeMethod.AUTO:
            method = RealizeMethod.TREE if g.is_tree() else RealizeMethod.BRUTE

        if method in (RealizeMethod.TREE, RealizeMethod.STAR):
            realization = realize_tree(g)
        elif method == RealizeMethod.PATH:
            realization = _matched(g, realize_path(g.n), method)
        elif method == RealizeMethod.CYCLE:
            realization = _matched(g, realize_cycle(g.n), method)
        elif method == RealizeMethod.COMPLETE:
            realization = _matched(g, realize_complete(g.n), method)
        elif method == RealizeMethod.BIPARTITE:
            graph = g.to_networkx()
            if not g.is_connected() or not nx.is_bipartite(graph):
                raise InvalidGraphError("graph is not a connected bipartite graph")
            left, right = nx.bipartite.sets(graph)
            realization = _matched(g, realize_complete_bipartite(len(left), len(right)), method)
        else:
            realization = self._brute(g)

        realization.verify()
        logger.info(
            "graph realized",
            extra={"vertices": g.n, "method": realization.method.value, "chords": realization.diagram.n},
        )
        return realization

    def _brute(self, g: SimpleGraph) -> Realization:
        witness = obstruction_check(g, self.config.induced_cycle_cap)
        if witness is not None:
            raise NotRealizableError(
                "graph is not realizable: independent neighbours of one vertex lie on an induced cycle",
                {"apex": witness.apex, "triple": list(witness.triple), "cycle": list(witness.cycle)},
            )
        found = brute_force_realization(g, self.config.realize_budget)
        if found is None:
            logger.warning(
                "no realization found and no obstruction witness",
                extra={"vertices": g.n, "edges": len(g.edge_set)},
            )
            raise NotRealizableError("graph is not realizable: no chord diagram has it as incidence graph")
        return found


def realize(g: SimpleGraph, method: RealizeMethod = RealizeMethod.AUTO,
            config: Optional[ToolkitConfig] = None) -> Realization:
    """Realize g with the named method (see ``RealizeMethod``)."""
    return GraphRealizer(config).realize(g, method)
