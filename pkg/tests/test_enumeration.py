"""Perfect matchings of cyclic points, all of them or one per dihedral class."""

import pytest

from coxeter_links.chord_core import crossing_pairs
from coxeter_links.enumeration import MatchingEnumerator, iter_matchings, matching_count
from coxeter_links.errors import BudgetExceededError


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 15), (4, 105), (5, 945)])
def test_all_matchings_counted(n, expected):
    assert matching_count(n) == expected
    assert sum(1 for _ in iter_matchings(n)) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 5), (4, 17), (5, 79)])
def test_dihedral_classes_counted(n, expected):
    assert sum(1 for _ in iter_matchings(n, canonical_only=True)) == expected


def test_matchings_in_lexicographic_order():
    partners = list(MatchingEnumerator(3).partners())
    assert partners == sorted(partners)
    assert partners[0] == (1, 0, 3, 2, 5, 4)


def test_non_crossing_pruning():
    diagrams = list(iter_matchings(4, max_edges=0))
    assert len(diagrams) == 14
    assert all(not crossing_pairs(d) for d in diagrams)


def test_degree_pruning():
    for d in iter_matchings(5, max_degree=1):
        degrees = [0] * d.n
        for a, b in crossing_pairs(d):
            degrees[a] += 1
            degrees[b] += 1
        assert max(degrees) <= 1


def test_budget_exceeded():
    enumerator = MatchingEnumerator(4, budget=10)
    with pytest.raises(BudgetExceededError) as info:
        list(enumerator)
    assert info.value.examined == 10
    assert info.value.budget == 10
    assert info.value.exit_code == 4


def test_rejects_empty():
    with pytest.raises(ValueError):
        MatchingEnumerator(0)
