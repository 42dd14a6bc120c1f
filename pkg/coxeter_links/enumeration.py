"""
Perfect matchings of 2n cyclically ordered points.

Matchings are produced in lexicographic order of their partner arrays by
always pairing the smallest unmatched point. Branches whose partial
incidence graph already has too many edges or too high a degree are cut,
and with ``canonical_only`` only the dihedral representative of each class
is yielded.
"""

import logging
import math
from typing import Iterator, List, Optional, Tuple

from .chord_core import ChordDiagram, diagram_from_partner, is_canonical_partner
from .errors import BudgetExceededError

logger = logging.getLogger(__name__)


def matching_count(n: int) -> int:
    """(2n - 1)!!, the number of perfect matchings of 2n points."""
    return math.prod(range(1, 2 * n, 2))


class MatchingEnumerator:
    """
    Depth-first generator of chord diagrams on 2n points.

    Args:
        n: Number of chords.
        canonical_only: Yield only lexicographically least dihedral images.
        max_degree: Cut branches where a chord already crosses more chords.
        max_edges: Cut branches with more crossing pairs than this.
        budget: Maximum number of complete matchings to examine before
            ``BudgetExceededError`` is raised.
    """

    def __init__(self, n: int, canonical_only: bool = False, max_degree: Optional[int] = None,
                 max_edges: Optional[int] = None, budget: Optional[int] = None):
        if n < 1:
            raise ValueError("matchings need at least one chord")
        self.n = n
        self.canonical_only = canonical_only
        self.max_degree = max_degree
        self.max_edges = max_edges
        self.budget = budget
        self.examined = 0

    def partners(self) -> Iterator[Tuple[int, ...]]:
        points = 2 * self.n
        partner = [-1] * points
        chords: List[Tuple[int, int]] = []
        degrees: List[int] = []
        yield from self._extend(partner, chords, degrees, 0, points)

    def __iter__(self) -> Iterator[ChordDiagram]:
        for partner in self.partners():
            yield diagram_from_partner(partner)

    def _extend(self, partner: List[int], chords: List[Tuple[int, int]], degrees: List[int],
                edges: int, points: int) -> Iterator[Tuple[int, ...]]:
        if len(chords) == self.n:
            self.examined += 1
            if self.budget is not None and self.examined > self.budget:
                raise BudgetExceededError(
                    f"matching enumeration for {self.n} chords exceeded its budget",
                    examined=self.examined - 1,
                    budget=self.budget,
                )
            if not self.canonical_only or is_canonical_partner(partner):
                yield tuple(partner)
            return

        p = partner.index(-1)
        for q in range(p + 1, points):
            if partner[q] != -1:
                continue
            crossing = [j for j, (a, b) in enumerate(chords) if (p < a < q) != (p < b < q)]
            if self.max_edges is not None and edges + len(crossing) > self.max_edges:
                continue
            if self.max_degree is not None and (
                len(crossing) > self.max_degree or any(degrees[j] >= self.max_degree for j in crossing)
            ):
                continue
            partner[p], partner[q] = q, p
            for j in crossing:
                degrees[j] += 1
            chords.append((p, q))
            degrees.append(len(crossing))

            yield from self._extend(partner, chords, degrees, edges + len(crossing), points)

            degrees.pop()
            chords.pop()
            for j in crossing:
                degrees[j] -= 1
            partner[p] = partner[q] = -1


def iter_matchings(n: int, canonical_only: bool = False, max_degree: Optional[int] = None,
                   max_edges: Optional[int] = None, budget: Optional[int] = None) -> Iterator[ChordDiagram]:
    """Chord diagrams with n chords in lexicographic order of their matchings."""
    enumerator = MatchingEnumerator(n, canonical_only, max_degree, max_edges, budget)
    yield from enumerator
    logger.debug("matchings enumerated", extra={"chords": n, "examined": enumerator.examined})
