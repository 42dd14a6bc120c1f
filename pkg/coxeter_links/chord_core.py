"""
Chord diagrams and chord systems.

A chord diagram is a perfect matching of the points 0..2n-1 placed
counterclockwise on the boundary circle. Chords of a diagram are identified
by their *label* (position in ``ChordDiagram.chords``). A chord system adds an
orientation per chord and a total order; matrices built from a system are
indexed by *position* in that order (the chord l_i sits at position i).
"""

import heapq
import logging
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    ChordIndexError,
    CyclicRelationError,
    InvalidDiagramError,
    InvalidGraphError,
    InvalidMoveError,
)
from .matrices import IntMatrix

logger = logging.getLogger(__name__)

Chord = Tuple[int, int]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class ChordDiagram:
    """Perfect matching of 2n cyclically ordered boundary points."""

    chords: Tuple[Chord, ...]

    def __post_init__(self):
        normalised = tuple(tuple(sorted((int(a), int(b)))) for a, b in self.chords)
        object.__setattr__(self, "chords", normalised)
        n = len(normalised)
        if n < 1:
            raise InvalidDiagramError("a chord diagram needs at least one chord")
        seen = sorted(p for chord in normalised for p in chord)
        if seen != list(range(2 * n)):
            raise InvalidDiagramError(
                f"endpoints must use every index 0..{2 * n - 1} exactly once, got {seen}"
            )

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "ChordDiagram":
        return cls(tuple((p[0], p[1]) for p in pairs))

    @property
    def n(self) -> int:
        return len(self.chords)

    @property
    def points(self) -> int:
        return 2 * len(self.chords)

    @cached_property
    def partner(self) -> Tuple[int, ...]:
        """partner[x] is the endpoint joined to x."""
        result = [0] * self.points
        for a, b in self.chords:
            result[a], result[b] = b, a
        return tuple(result)

    def check_index(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise ChordIndexError(f"chord index {i} out of range for {self.n} chords")

    def canonical_form(self) -> Tuple[int, ...]:
        return canonical_partner(self.partner)

    def equivalent(self, other: "ChordDiagram") -> bool:
        """Same matching up to rotation and reflection of the boundary points."""
        return self.n == other.n and self.canonical_form() == other.canonical_form()


@dataclass(frozen=True)
class ChordSystem:
    """Chord diagram with oriented chords in a total order.

    ``orientations[label]`` is the (tail, head) of that chord and ``order``
    lists chord labels from l_1 to l_n.
    """

    diagram: ChordDiagram
    orientations: Tuple[Chord, ...]
    order: Tuple[int, ...]

    def __post_init__(self):
        d = self.diagram
        object.__setattr__(self, "orientations", tuple(tuple(o) for o in self.orientations))
        object.__setattr__(self, "order", tuple(self.order))
        if len(self.orientations) != d.n:
            raise InvalidDiagramError(f"expected {d.n} orientations, got {len(self.orientations)}")
        for label, (tail, head) in enumerate(self.orientations):
            if tail == head or tuple(sorted((tail, head))) != d.chords[label]:
                raise InvalidDiagramError(
                    f"orientation ({tail}, {head}) does not match chord {label} = {d.chords[label]}"
                )
        if sorted(self.order) != list(range(d.n)):
            raise InvalidDiagramError(f"order must be a permutation of 0..{d.n - 1}, got {list(self.order)}")

    @classmethod
    def from_diagram(cls, diagram: ChordDiagram, order: Optional[Sequence[int]] = None) -> "ChordSystem":
        """Default orientation (tail at the smaller endpoint) in list order unless given."""
        return cls(diagram, diagram.chords, tuple(order) if order is not None else tuple(range(diagram.n)))

    @property
    def n(self) -> int:
        return self.diagram.n

    @cached_property
    def position(self) -> Tuple[int, ...]:
        """position[label] is the index i of that chord in l_1..l_n (zero-based)."""
        result = [0] * self.n
        for i, label in enumerate(self.order):
            result[label] = i
        return tuple(result)

    def oriented(self, i: int) -> Chord:
        """(tail, head) of the chord at position i."""
        self.diagram.check_index(i)
        return self.orientations[self.order[i]]

    def label(self, i: int) -> int:
        self.diagram.check_index(i)
        return self.order[i]


@dataclass(frozen=True)
class DirectedDiagram:
    """Chord diagram plus, for each crossing pair, which chord is later.

    ``over`` holds pairs (earlier, later) of chord labels; the later band lies
    over the earlier one.
    """

    diagram: ChordDiagram
    over: FrozenSet[Edge]

    def __post_init__(self):
        d = self.diagram
        object.__setattr__(self, "over", frozenset(tuple(p) for p in self.over))
        for a, b in self.over:
            d.check_index(a)
            d.check_index(b)
            if a == b or not crosses(d, a, b):
                raise InvalidDiagramError(f"over-relation ({a}, {b}) is not on a crossing pair")
            if (b, a) in self.over:
                raise InvalidDiagramError(f"over-relation holds in both directions for ({a}, {b})")
        for a, b in crossing_pairs(d):
            if (a, b) not in self.over and (b, a) not in self.over:
                raise InvalidDiagramError(f"crossing pair ({a}, {b}) has no over-relation")

    def incident(self, k: int) -> List[Edge]:
        return sorted(p for p in self.over if k in p)

    def is_source(self, k: int) -> bool:
        return all(a == k for a, _ in self.incident(k))

    def is_sink(self, k: int) -> bool:
        return all(b == k for _, b in self.incident(k))


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1 with an optional vertex order."""

    n: int
    edge_set: FrozenSet[Edge]
    order: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError("vertex count must be non-negative")
        normalised = set()
        for u, v in self.edge_set:
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"edge ({u}, {v}) out of range for {self.n} vertices")
            normalised.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edge_set", frozenset(normalised))
        if self.order is not None:
            object.__setattr__(self, "order", tuple(self.order))
            if sorted(self.order) != list(range(self.n)):
                raise InvalidGraphError(f"vertex order must be a permutation of 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], order: Optional[Sequence[int]] = None) -> "SimpleGraph":
        edge_list = [tuple(e) for e in edges]
        keys = [(min(u, v), max(u, v)) for u, v in edge_list]
        if len(set(keys)) != len(keys):
            raise InvalidGraphError("multiple edges between the same pair of vertices")
        return cls(n, frozenset(edge_list), tuple(order) if order is not None else None)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SimpleGraph":
        """Vertices are relabelled 0..n-1 in sorted node order."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), frozenset((index[u], index[v]) for u, v in graph.edges()))

    @property
    def vertex_order(self) -> Tuple[int, ...]:
        return self.order if self.order is not None else tuple(range(self.n))

    def with_order(self, order: Sequence[int]) -> "SimpleGraph":
        return SimpleGraph(self.n, self.edge_set, tuple(order))

    def edges(self) -> List[Edge]:
        return sorted(self.edge_set)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    @cached_property
    def adjacency_lists(self) -> Tuple[Tuple[int, ...], ...]:
        neighbours: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edge_set:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neighbours)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        if not 0 <= v < self.n:
            raise ChordIndexError(f"vertex {v} out of range for {self.n} vertices")
        return self.adjacency_lists[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edge_set)
        return graph

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def is_tree(self) -> bool:
        return self.n > 0 and nx.is_tree(self.to_networkx())

    def isomorphism(self, other: "SimpleGraph") -> Optional[Dict[int, int]]:
        """A vertex map self -> other preserving adjacency, or None."""
        if self.n != other.n or len(self.edge_set) != len(other.edge_set):
            return None
        if sorted(map(len, self.adjacency_lists)) != sorted(map(len, other.adjacency_lists)):
            return None
        if self.n == 0:
            return {}
        return nx.vf2pp_isomorphism(self.to_networkx(), other.to_networkx())

    def is_isomorphic(self, other: "SimpleGraph") -> bool:
        return self.isomorphism(other) is not None


# --------------------------------------------------------------------------
# Crossing and linking
# --------------------------------------------------------------------------

def crosses(d: ChordDiagram, i: int, j: int) -> bool:
    """True iff chords i and j (labels) interleave on the boundary circle."""
    d.check_index(i)
    d.check_index(j)
    if i == j:
        raise ChordIndexError(f"a chord does not cross itself (index {i})")
    a, b = d.chords[i]
    c, e = d.chords[j]
    return (a < c < b) != (a < e < b)


def crossing_pairs(d: ChordDiagram) -> List[Edge]:
    return [(i, j) for i in range(d.n) for j in range(i + 1, d.n) if crosses(d, i, j)]


def oriented_link(first: Chord, second: Chord, points: int) -> int:
    """Linking number of two oriented chords, read with ``first`` as the lower index.

    -1 when the counterclockwise order is (tail1, tail2, head1, head2), +1 for
    (tail1, head2, head1, tail2), 0 when the chords do not interleave.
    """
    t1, h1 = first
    t2, h2 = second
    rel_h1 = (h1 - t1) % points
    rel_t2 = (t2 - t1) % points
    rel_h2 = (h2 - t1) % points
    if (rel_t2 < rel_h1) == (rel_h2 < rel_h1):
        return 0
    return -1 if rel_t2 < rel_h1 else 1


def linking_number(s: ChordSystem, i: int, j: int) -> int:
    """Linking number of l_i and l_j, read with the lower index first (symmetric in i, j)."""
    if i == j:
        raise ChordIndexError(f"linking number needs two distinct chords (index {i})")
    lo, hi = sorted((i, j))
    return oriented_link(s.oriented(lo), s.oriented(hi), s.diagram.points)


def incidence_graph(d: ChordDiagram) -> SimpleGraph:
    return SimpleGraph(d.n, frozenset(crossing_pairs(d)))


def bilinear_form(s: ChordSystem) -> IntMatrix:
    n = s.n
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = linking_number(s, i, j)
    return IntMatrix.from_rows(rows)


def is_coxeter_type(s: ChordSystem) -> bool:
    """Every crossing pair l_i, l_j with i < j links -1."""
    return all(
        linking_number(s, i, j) <= 0 for i in range(s.n) for j in range(i + 1, s.n)
    )


def reverse_chord(s: ChordSystem, i: int) -> ChordSystem:
    """Swap tail and head of the chord at position i."""
    label = s.label(i)
    orientations = list(s.orientations)
    tail, head = orientations[label]
    orientations[label] = (head, tail)
    return ChordSystem(s.diagram, tuple(orientations), s.order)


# --------------------------------------------------------------------------
# Coxeter-type orderings
# --------------------------------------------------------------------------

def endpoint_coordinates(d: ChordDiagram, offset: Optional[float] = None) -> List[Tuple[float, float]]:
    """Boundary points at angles 2*pi*k/2n, rotated by ``offset`` (default 1/(100n))."""
    n = d.n
    shift = 1.0 / (100 * n) if offset is None else offset
    return [
        (math.cos(math.pi * k / n + shift), math.sin(math.pi * k / n + shift))
        for k in range(2 * n)
    ]


def slope_order(d: ChordDiagram) -> ChordSystem:
    """Coxeter-type ordering of any diagram.

    Each chord is oriented upward (head has the larger second coordinate) and
    chords are ordered by the direction angle of that upward orientation,
    i.e. by slope measured against the second coordinate. The small rotation
    of the endpoints guarantees no chord is horizontal. Crossing chords then
    always meet with the later chord turning counterclockwise from the
    earlier one, which is the -1 linking pattern.
    """
    coords = endpoint_coordinates(d)
    orientations = []
    angles = []
    for a, b in d.chords:
        tail, head = (a, b) if coords[a][1] < coords[b][1] else (b, a)
        orientations.append((tail, head))
        dx = coords[head][0] - coords[tail][0]
        dy = coords[head][1] - coords[tail][1]
        angles.append(math.atan2(dy, dx))
    order = sorted(range(d.n), key=lambda k: (angles[k], k))
    return ChordSystem(d, tuple(orientations), tuple(order))


def coxeter_orientation(d: ChordDiagram, order: Sequence[int]) -> Optional[ChordSystem]:
    """Orient the chords so the system in ``order`` is Coxeter-type, or None.

    Reversing a chord negates its linking number with every crossing chord,
    so the problem is a parity labelling of the incidence graph: solved per
    connected component, starting from the default orientation of its
    smallest chord.
    """
    base = ChordSystem.from_diagram(d, order)
    position = base.position
    flip: Dict[int, int] = {}
    graph = incidence_graph(d)
    for start in range(d.n):
        if start in flip:
            continue
        flip[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph.neighbors(u):
                first, second = (u, v) if position[u] < position[v] else (v, u)
                sign = oriented_link(d.chords[first], d.chords[second], d.points)
                required = flip[u] ^ (1 if sign > 0 else 0)
                if v not in flip:
                    flip[v] = required
                    queue.append(v)
                elif flip[v] != required:
                    return None
    orientations = tuple(
        (b, a) if flip[label] else (a, b) for label, (a, b) in enumerate(d.chords)
    )
    return ChordSystem(d, orientations, tuple(order))


# --------------------------------------------------------------------------
# Directed diagrams
# --------------------------------------------------------------------------

def to_directed(s: ChordSystem) -> DirectedDiagram:
    position = s.position
    over = set()
    for a, b in crossing_pairs(s.diagram):
        over.add((a, b) if position[a] < position[b] else (b, a))
    return DirectedDiagram(s.diagram, frozenset(over))


def sink_source_move(dd: DirectedDiagram, k: int) -> DirectedDiagram:
    """Reverse every over-relation at chord k, which must be a source or a sink."""
    dd.diagram.check_index(k)
    incident = dd.incident(k)
    if not (dd.is_source(k) or dd.is_sink(k)):
        raise InvalidMoveError(f"chord {k} is neither a source nor a sink")
    over = (dd.over - set(incident)) | {(b, a) for a, b in incident}
    return DirectedDiagram(dd.diagram, frozenset(over))


def topological_order(n: int, over: Iterable[Edge]) -> Optional[Tuple[int, ...]]:
    """Linear extension with smallest-label tie-breaking, or None when cyclic."""
    successors: List[List[int]] = [[] for _ in range(n)]
    indegree = [0] * n
    for a, b in over:
        successors[a].append(b)
        indegree[b] += 1
    ready = [v for v in range(n) if indegree[v] == 0]
    heapq.heapify(ready)
    result = []
    while ready:
        v = heapq.heappop(ready)
        result.append(v)
        for w in successors[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                heapq.heappush(ready, w)
    return tuple(result) if len(result) == n else None


def order_from_directed(dd: DirectedDiagram) -> ChordSystem:
    """A chord system whose directed diagram is ``dd``.

    The orientation is Coxeter-type whenever the relation admits one; the
    monodromy does not depend on this choice.
    """
    order = topological_order(dd.diagram.n, dd.over)
    if order is None:
        raise CyclicRelationError("over-relation contains a cycle; no compatible chord order exists")
    system = coxeter_orientation(dd.diagram, order)
    if system is None:
        logger.debug("directed diagram admits no Coxeter orientation; using default orientation")
        system = ChordSystem.from_diagram(dd.diagram, order)
    return system


# --------------------------------------------------------------------------
# Dihedral equivalence
# --------------------------------------------------------------------------

def dihedral_images(partner: Sequence[int]) -> Iterable[Tuple[int, ...]]:
    """Partner arrays of all rotations and reflections of a matching."""
    points = len(partner)
    for reflect in (False, True):
        for shift in range(points):
            image = [0] * points
            for x, y in enumerate(partner):
                tx = ((-x if reflect else x) + shift) % points
                ty = ((-y if reflect else y) + shift) % points
                image[tx] = ty
            yield tuple(image)


def canonical_partner(partner: Sequence[int]) -> Tuple[int, ...]:
    return min(dihedral_images(partner))


def is_canonical_partner(partner: Sequence[int]) -> bool:
    """True iff no rotation or reflection gives a lexicographically smaller matching."""
    current = tuple(partner)
    return all(image >= current for image in dihedral_images(partner))


def diagram_from_partner(partner: Sequence[int]) -> ChordDiagram:
    return ChordDiagram(tuple((x, y) for x, y in enumerate(partner) if x < y))
