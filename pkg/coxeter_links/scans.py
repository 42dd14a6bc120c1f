"""
Enumeration of Coxeter-type orderings and the exhaustive Lehmer scan.

For a fixed diagram, a Coxeter-type system is determined up to its directed
diagram by a choice of chord reversals: once reversals are fixed, every
crossing pair has a forced earlier chord, and the choice is usable exactly
when those forced relations are acyclic. Directed diagrams are then grouped
into orbits of sink/source moves.
"""

import logging
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel

from .chord_core import (
    ChordDiagram,
    DirectedDiagram,
    Edge,
    crossing_pairs,
    incidence_graph,
    oriented_link,
    order_from_directed,
    sink_source_move,
    topological_order,
)
from .config import DEFAULT_CONFIG, ToolkitConfig
from .enumeration import iter_matchings
from .errors import BudgetExceededError, TheoremViolationError
from .exact_forms import char_poly, monodromy, seifert_matrix
from .polynomials import IntPolynomial
from .spectra import GateVerdict, lehmer_gate, lehmer_measure, mahler_measure

logger = logging.getLogger(__name__)

Relation = FrozenSet[Edge]


class OrderingOrbit(BaseModel):
    """One sink/source orbit of Coxeter-type directed diagrams."""

    size: int
    order: List[int]
    chords: List[List[int]]
    over: List[List[int]]
    char_poly: List[int]
    char_poly_canonical: List[int]
    char_poly_display: str


class OrderingsResult(BaseModel):
    name: Optional[str] = None
    chord_count: int
    directed_diagrams: int
    orbits: List[OrderingOrbit]
    complete: bool
    examined: int

    def to_text(self) -> str:
        lines = [
            f"{self.name or 'diagram'}: {self.directed_diagrams} Coxeter-type directed diagrams "
            f"in {len(self.orbits)} sink/source orbits"
        ]
        if not self.complete:
            lines.append(f"PARTIAL: budget exhausted after {self.examined} candidates")
        for number, orbit in enumerate(self.orbits, start=1):
            order = " ".join(str(k + 1) for k in orbit.order)
            lines.append(f"orbit {number} ({orbit.size} directed diagrams): order {order}")
            lines.append(f"  characteristic polynomial: {orbit.char_poly_display}")
        return "\n".join(lines)


class _Components:
    """Union-find over list positions."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, item: int) -> int:
        while self.parent[item] != item:
            self.parent[item] = self.parent[self.parent[item]]
            item = self.parent[item]
        return item

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def coxeter_relations(d: ChordDiagram, budget: Optional[int] = None) -> Iterator[Relation]:
    """
    Over-relations of every Coxeter-type system on d, each exactly once.

    A reversal vector is fixed at 0 on the smallest chord of each incidence
    component (reversing a whole component changes no linking number). For
    a crossing pair a < b with default-orientation link sigma, the reversed
    link is -1 exactly when a must come first. Raises
    ``BudgetExceededError`` after ``budget`` reversal vectors.
    """
    graph = incidence_graph(d)
    pairs = crossing_pairs(d)
    sigma = {(a, b): oriented_link(d.chords[a], d.chords[b], d.points) for a, b in pairs}
    leaders = {min(component) for component in nx.connected_components(graph.to_networkx())}
    free = [k for k in range(d.n) if k not in leaders]
    examined = 0
    for bits in product((0, 1), repeat=len(free)):
        examined += 1
        if budget is not None and examined > budget:
            raise BudgetExceededError(
                f"ordering enumeration for {d.n} chords exceeded its budget",
                examined=examined - 1,
                budget=budget,
            )
        flip = dict.fromkeys(leaders, 0)
        flip.update(zip(free, bits))
        over = []
        for a, b in pairs:
            reversed_sign = sigma[(a, b)] * (-1) ** (flip[a] + flip[b])
            over.append((a, b) if reversed_sign < 0 else (b, a))
        if topological_order(d.n, over) is not None:
            yield frozenset(over)


def orbits(d: ChordDiagram, relations: List[Relation]) -> List[List[Relation]]:
    """Group over-relations into sink/source orbits; members and orbits sorted."""
    index = {relation: i for i, relation in enumerate(relations)}
    components = _Components(len(relations))
    for i, relation in enumerate(relations):
        directed = DirectedDiagram(d, relation)
        for k in range(d.n):
            if directed.is_source(k) or directed.is_sink(k):
                moved = sink_source_move(directed, k).over
                if moved in index:
                    components.union(i, index[moved])
    groups: Dict[int, List[Relation]] = {}
    for i, relation in enumerate(relations):
        groups.setdefault(components.find(i), []).append(relation)
    result = [sorted(group, key=sorted) for group in groups.values()]
    return sorted(result, key=lambda group: sorted(group[0]))


def orbit_polynomial(d: ChordDiagram, relation: Relation) -> Tuple[IntPolynomial, DirectedDiagram]:
    directed = DirectedDiagram(d, relation)
    system = order_from_directed(directed)
    return char_poly(monodromy(seifert_matrix(system))), directed


def enumerate_orderings(d: ChordDiagram, config: Optional[ToolkitConfig] = None,
                        name: Optional[str] = None) -> OrderingsResult:
    """
    Coxeter-type directed diagrams of d, grouped by sink/source orbit.

    When the budget runs out the orbits of the relations found so far are
    reported with ``complete`` set to False.
    """
    cfg = config or DEFAULT_CONFIG
    relations: List[Relation] = []
    complete = True
    examined = 0
    try:
        for relation in coxeter_relations(d, cfg.orderings_budget):
            relations.append(relation)
    except BudgetExceededError as exc:
        complete = False
        examined = exc.examined
        logger.warning(
            "ordering enumeration stopped at budget; output is partial",
            extra={"chords": d.n, "budget": cfg.orderings_budget, "found": len(relations)},
        )
    else:
        free = d.n - nx.number_connected_components(incidence_graph(d).to_networkx())
        examined = 2 ** free

    result_orbits = []
    for group in orbits(d, relations):
        polynomial, directed = orbit_polynomial(d, group[0])
        system = order_from_directed(directed)
        for other in group[1:]:
            other_polynomial, _ = orbit_polynomial(d, other)
            if other_polynomial != polynomial:
                logger.error("sink/source move changed the characteristic polynomial")
                raise TheoremViolationError(
                    "characteristic polynomial differs inside a sink/source orbit",
                    {"first": list(polynomial.coeffs), "second": list(other_polynomial.coeffs)},
                )
        result_orbits.append(OrderingOrbit(
            size=len(group),
            order=list(system.order),
            chords=[list(o) for o in system.orientations],
            over=[list(p) for p in sorted(group[0])],
            char_poly=list(polynomial.coeffs),
            char_poly_canonical=list(polynomial.canonical().coeffs),
            char_poly_display=str(polynomial),
        ))
    logger.info("orderings enumerated", extra={"chords": d.n, "orbits": len(result_orbits), "complete": complete})
    return OrderingsResult(
        name=name,
        chord_count=d.n,
        directed_diagrams=len(relations),
        orbits=result_orbits,
        complete=complete,
        examined=examined,
    )


# --------------------------------------------------------------------------
# Lehmer scan
# --------------------------------------------------------------------------

class MeasureEntry(BaseModel):
    char_poly_canonical: List[int]
    char_poly_display: str
    mahler_measure: float
    lehmer_gate: GateVerdict
    systems: int


class ScanWitness(BaseModel):
    chords: List[List[int]]
    order: List[int]
    char_poly: List[int]
    char_poly_display: str
    mahler_measure: float


class ChordCountSummary(BaseModel):
    chords: int
    diagrams: int
    orbits: int
    trivial: int
    passed: int


class LehmerScanSummary(BaseModel):
    max_chords: int
    tolerance: float
    lehmer_measure: float
    per_size: List[ChordCountSummary]
    measures: List[MeasureEntry]
    minimal_nontrivial: Optional[ScanWitness] = None

    def to_text(self) -> str:
        lines = [f"Lehmer scan up to {self.max_chords} chords (mu(p_L) = {self.lehmer_measure:.6g}, "
                 f"tol {self.tolerance:g})"]
        lines.append(f"{'chords':>6} {'diagrams':>9} {'orbits':>7} {'trivial':>8} {'pass':>6}")
        for row in self.per_size:
            lines.append(f"{row.chords:>6} {row.diagrams:>9} {row.orbits:>7} {row.trivial:>8} {row.passed:>6}")
        lines.append(f"distinct characteristic polynomials: {len(self.measures)}")
        if self.minimal_nontrivial is None:
            lines.append("every Mahler measure equals 1")
        else:
            witness = self.minimal_nontrivial
            lines.append(f"minimal Mahler measure above 1: {witness.mahler_measure:.6g}")
            lines.append(f"  characteristic polynomial: {witness.char_poly_display}")
            lines.append(f"  chords: {witness.chords}  order: {[k + 1 for k in witness.order]}")
        return "\n".join(lines)


class LehmerScanner:
    """
    Exhaustive scan of Coxeter links with few chords.

    Every diagram up to dihedral equivalence, every sink/source orbit of its
    Coxeter-type orderings, one Mahler measure per orbit; a gate failure
    raises ``TheoremViolationError``.
    """

    def __init__(self, config: Optional[ToolkitConfig] = None):
        self.config = config or DEFAULT_CONFIG
        self._measures: Dict[IntPolynomial, Tuple[float, GateVerdict]] = {}

    def _measure(self, polynomial: IntPolynomial) -> Tuple[float, GateVerdict]:
        key = polynomial.canonical()
        if key not in self._measures:
            cfg = self.config
            verdict = lehmer_gate(key, cfg.gate_tolerance, cfg.root_tolerance, cfg.max_iterations)
            measure = mahler_measure(key, cfg.root_tolerance, cfg.max_iterations)
            self._measures[key] = (measure, verdict)
        return self._measures[key]

    def scan(self, max_chords: int) -> LehmerScanSummary:
        """
        Run the scan.

        Args:
            max_chords: Largest chord count; at most ``config.lehmer_scan_cap``.

        Returns:
            LehmerScanSummary with per-size counts, every distinct measure and
            the smallest measure above 1 with a witnessing system.
        """
        cfg = self.config
        if max_chords < 1:
            raise ValueError("max_chords must be at least 1")
        if max_chords > cfg.lehmer_scan_cap:
            raise BudgetExceededError(
                f"Lehmer scan is capped at {cfg.lehmer_scan_cap} chords, asked for {max_chords}",
                examined=0,
                budget=cfg.lehmer_scan_cap,
            )
        per_size: List[ChordCountSummary] = []
        counts: Dict[IntPolynomial, int] = {}
        best: Optional[ScanWitness] = None
        for n in range(1, max_chords + 1):
            diagrams = orbit_count = trivial = passed = 0
            for d in iter_matchings(n, canonical_only=True):
                diagrams += 1
                for group in orbits(d, list(coxeter_relations(d))):
                    orbit_count += 1
                    polynomial, directed = orbit_polynomial(d, group[0])
                    measure, verdict = self._measure(polynomial)
                    key = polynomial.canonical()
                    counts[key] = counts.get(key, 0) + 1
                    if verdict == GateVerdict.FAIL:
                        logger.error(
                            "Lehmer gate failed",
                            extra={"chords": [list(c) for c in d.chords], "char_poly": list(polynomial.coeffs)},
                        )
                        raise TheoremViolationError(
                            f"Coxeter link with Mahler measure {measure:.6g} below Lehmer's bound",
                            {"chords": [list(c) for c in d.chords], "char_poly": list(polynomial.coeffs)},
                        )
                    if verdict == GateVerdict.TRIVIAL:
                        trivial += 1
                        continue
                    passed += 1
                    if best is None or measure < best.mahler_measure - cfg.root_tolerance:
                        system = order_from_directed(directed)
                        best = ScanWitness(
                            chords=[list(o) for o in system.orientations],
                            order=list(system.order),
                            char_poly=list(polynomial.coeffs),
                            char_poly_display=str(polynomial),
                            mahler_measure=measure,
                        )
            per_size.append(ChordCountSummary(
                chords=n, diagrams=diagrams, orbits=orbit_count, trivial=trivial, passed=passed
            ))
            logger.debug("scan size finished", extra={"chords": n, "diagrams": diagrams, "orbits": orbit_count})

        measures = [
            MeasureEntry(
                char_poly_canonical=list(key.coeffs),
                char_poly_display=str(key),
                mahler_measure=self._measures[key][0],
                lehmer_gate=self._measures[key][1],
                systems=count,
            )
            for key, count in sorted(counts.items(), key=lambda item: (self._measures[item[0]][0], item[0].coeffs))
        ]
        summary = LehmerScanSummary(
            max_chords=max_chords,
            tolerance=cfg.gate_tolerance,
            lehmer_measure=lehmer_measure(cfg.root_tolerance, cfg.max_iterations),
            per_size=per_size,
            measures=measures,
            minimal_nontrivial=best,
        )
        logger.info(
            "Lehmer scan complete",
            extra={"max_chords": max_chords, "polynomials": len(measures),
                   "minimal": best.mahler_measure if best else None},
        )
        return summary


def lehmer_scan(max_chords: int, config: Optional[ToolkitConfig] = None) -> LehmerScanSummary:
    """Convenience wrapper around ``LehmerScanner.scan``."""
    return LehmerScanner(config).scan(max_chords)
