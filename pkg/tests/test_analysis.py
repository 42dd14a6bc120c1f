"""
End-to-end analysis reports.

Core claims:
    - the calibration systems reproduce their characteristic polynomials
    - classification agrees with the definiteness of the bilinear form
    - E10 realizes Lehmer's polynomial and passes the gate
"""

import pytest
from pytest import approx

from coxeter_links.analysis import CoxeterLinkAnalyzer, analyze_system
from coxeter_links.chord_core import DirectedDiagram, SimpleGraph, bilinear_form, order_from_directed
from coxeter_links.config import ToolkitConfig
from coxeter_links.enumeration import iter_matchings
from coxeter_links.errors import NotCoxeterTypeError
from coxeter_links.exact_forms import Definiteness, char_poly, coxeter_element, definiteness
from coxeter_links.polynomials import IntPolynomial
from coxeter_links.realizer import realize_tree, star_graph
from coxeter_links.scans import coxeter_relations
from coxeter_links.spectra import CoxeterClass, GateVerdict, classify, lehmer_polynomial

AGREEMENT = {
    Definiteness.POSITIVE_DEFINITE: CoxeterClass.SPHERICAL,
    Definiteness.POSITIVE_SEMIDEFINITE: CoxeterClass.AFFINE,
    Definiteness.INDEFINITE: CoxeterClass.HIGHER,
}


def test_triangle_report(triangle):
    report = analyze_system(triangle, name="triangle")
    assert report.coxeter_type
    assert report.seifert_matrix == [[1, -1, -1], [0, 1, -1], [0, 0, 1]]
    assert report.bilinear_form == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert report.adjacency == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert report.monodromy_is_minus_coxeter is True
    assert report.char_poly == [-1, -1, 1, 1]
    assert report.char_poly_canonical == [-1, -1, 1, 1]
    assert report.factorization == "(t - 1)(t + 1)^2"
    assert report.classification == CoxeterClass.AFFINE
    assert report.definiteness == Definiteness.POSITIVE_SEMIDEFINITE
    assert report.lehmer_gate == GateVerdict.TRIVIAL
    assert report.mahler_measure == 1.0
    assert report.alexander_agrees
    assert not report.is_knot


def test_non_coxeter_triangle_report(triangle_non_coxeter):
    report = analyze_system(triangle_non_coxeter)
    assert not report.coxeter_type
    assert report.coxeter_element is None
    assert report.monodromy_is_minus_coxeter is None
    assert report.classification is None
    assert report.char_poly_canonical == [-1, 1, -1, 1]
    assert report.definiteness == Definiteness.POSITIVE_DEFINITE
    assert "skipped" in report.to_text()


def test_require_coxeter_rejects(triangle_non_coxeter):
    with pytest.raises(NotCoxeterTypeError) as info:
        CoxeterLinkAnalyzer().analyze(triangle_non_coxeter, name="reversed triangle", require_coxeter=True)
    assert info.value.exit_code == 2
    assert info.value.details == {"name": "reversed triangle"}


def test_square_orderings(square_cyclic, square_coxeter):
    cyclic = analyze_system(square_cyclic)
    coxeter = analyze_system(square_coxeter)
    assert cyclic.char_poly_canonical == [1, -1, 0, -1, 1]
    assert not cyclic.coxeter_type
    assert coxeter.char_poly_canonical == [1, 0, -2, 0, 1]
    assert coxeter.classification == CoxeterClass.AFFINE


def test_triangle_with_tail_is_smallest_hyperbolic(triangle_with_tail):
    report = analyze_system(triangle_with_tail)
    assert report.char_poly_canonical == [1, -1, -3, -1, 1]
    assert report.classification == CoxeterClass.HIGHER
    assert report.lehmer_gate == GateVerdict.PASS
    assert report.mahler_measure == approx(2.36921, abs=1e-4)
    assert report.spectral_radius == approx(report.mahler_measure, abs=1e-9)
    assert report.is_knot
    text = report.to_text()
    assert "Mahler measure: 2.36921 (tol 1e-10)" in text
    assert "classification: higher" in text


def test_e10_star_gives_lehmer_polynomial():
    realization = realize_tree(star_graph(2, 3, 7))
    report = analyze_system(realization.system(), name="E10")
    assert report.chord_count == 10
    assert IntPolynomial(tuple(report.char_poly_canonical)) == lehmer_polynomial().canonical()
    assert report.classification == CoxeterClass.HIGHER
    assert report.lehmer_gate == GateVerdict.PASS
    assert report.mahler_measure == approx(1.17628081826, abs=1e-6)


@pytest.mark.parametrize("n", range(1, 8))
def test_path_links_are_torus_links(n):
    path = SimpleGraph.from_edges(n, [(k, k + 1) for k in range(n - 1)])
    report = analyze_system(realize_tree(path).system())
    assert IntPolynomial(tuple(report.char_poly)).equivalent(IntPolynomial((1,) * (n + 1)))
    assert report.classification == CoxeterClass.SPHERICAL
    assert report.is_knot == (n % 2 == 0)


def test_config_tolerance_is_reported(triangle_with_tail):
    report = CoxeterLinkAnalyzer(ToolkitConfig(root_tolerance=1e-8)).analyze(triangle_with_tail)
    assert report.tolerance == 1e-8
    assert report.mahler_measure == approx(2.36921, abs=1e-4)


def _classification_agreement(max_chords):
    for n in range(1, max_chords + 1):
        for d in iter_matchings(n, canonical_only=True):
            for relation in coxeter_relations(d):
                system = order_from_directed(DirectedDiagram(d, relation))
                b = bilinear_form(system)
                assert classify(char_poly(coxeter_element(b))) == AGREEMENT[definiteness(b)]


def test_classification_agrees_with_definiteness():
    _classification_agreement(4)


@pytest.mark.slow
def test_classification_agrees_with_definiteness_exhaustive():
    _classification_agreement(6)
