"""
Shared fixtures: the small systems every module is calibrated on, and
seeded generators of random diagrams and systems.
"""

import logging
import random
from pathlib import Path
from typing import Callable, List

import pytest

from coxeter_links.chord_core import ChordDiagram, ChordSystem, coxeter_orientation, slope_order

ROOT = Path(__file__).resolve().parent.parent
DIAGRAMS_DIR = ROOT / "diagrams"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

SEED = 20240611


def random_diagram(rng: random.Random, n: int) -> ChordDiagram:
    points = list(range(2 * n))
    rng.shuffle(points)
    return ChordDiagram(tuple((points[2 * k], points[2 * k + 1]) for k in range(n)))


def random_system(rng: random.Random, n: int) -> ChordSystem:
    d = random_diagram(rng, n)
    orientations = tuple((b, a) if rng.random() < 0.5 else (a, b) for a, b in d.chords)
    order = list(range(n))
    rng.shuffle(order)
    return ChordSystem(d, orientations, tuple(order))


def random_coxeter_system(rng: random.Random, n: int) -> ChordSystem:
    """Random order when it is admissible, the slope ordering otherwise."""
    d = random_diagram(rng, n)
    order = list(range(n))
    rng.shuffle(order)
    system = coxeter_orientation(d, order)
    return system if system is not None else slope_order(d)


@pytest.fixture(autouse=True)
def detach_json_handler():
    """The CLI installs a stderr handler bound to the captured stream; drop it after each test."""
    yield
    package_logger = logging.getLogger("coxeter_links")
    for handler in list(package_logger.handlers):
        if getattr(handler, "_coxlink_handler", False):
            package_logger.removeHandler(handler)
    package_logger.propagate = True
    package_logger.setLevel(logging.NOTSET)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture
def random_systems(rng) -> Callable[[int, int], List[ChordSystem]]:
    def build(count: int, max_chords: int) -> List[ChordSystem]:
        return [random_system(rng, rng.randint(1, max_chords)) for _ in range(count)]
    return build


@pytest.fixture
def random_coxeter_systems(rng) -> Callable[[int, int], List[ChordSystem]]:
    def build(count: int, max_chords: int) -> List[ChordSystem]:
        return [random_coxeter_system(rng, rng.randint(1, max_chords)) for _ in range(count)]
    return build


@pytest.fixture
def triangle() -> ChordSystem:
    """Three pairwise crossing diameters; every pair links -1."""
    return ChordSystem.from_diagram(ChordDiagram(((0, 3), (1, 4), (2, 5))))


@pytest.fixture
def triangle_non_coxeter() -> ChordSystem:
    """Same diagram with chords listed {0,3}, {2,5}, {1,4}: the last pair links +1."""
    return ChordSystem.from_diagram(ChordDiagram(((0, 3), (2, 5), (1, 4))))


@pytest.fixture
def square_cyclic() -> ChordSystem:
    """Four-cycle in cyclic order; no orientation makes it Coxeter-type."""
    return ChordSystem.from_diagram(ChordDiagram(((0, 3), (2, 5), (4, 7), (1, 6))))


@pytest.fixture
def square_coxeter() -> ChordSystem:
    """Four-cycle in bipartite order with chord 2 reversed."""
    d = ChordDiagram(((0, 3), (2, 5), (4, 7), (1, 6)))
    return ChordSystem(d, ((0, 3), (2, 5), (7, 4), (1, 6)), (0, 2, 1, 3))


@pytest.fixture
def pentagon() -> ChordSystem:
    d = ChordDiagram(((0, 3), (2, 5), (4, 7), (6, 9), (1, 8)))
    return ChordSystem.from_diagram(d, (0, 1, 2, 4, 3))


@pytest.fixture
def triangle_with_tail() -> ChordSystem:
    d = ChordDiagram(((1, 5), (3, 6), (4, 7), (0, 2)))
    return ChordSystem(d, ((1, 5), (3, 6), (4, 7), (2, 0)), (0, 1, 2, 3))
