"""
Coxeter links toolkit.

Chord systems, the Seifert matrix and monodromy of their fibered links, the
Coxeter element of the associated simply-laced system, Mahler measures and
the Lehmer bound, and realizations of graphs as chord diagrams.
"""

from .analysis import AnalysisReport, CoxeterLinkAnalyzer, analyze_system
from .chord_core import (
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
from .config import ToolkitConfig
from .errors import CoxeterLinkError
from .exact_forms import (
    adjacency,
    alexander_polynomial,
    char_poly,
    coxeter_element,
    coxeter_generator,
    definiteness,
    monodromy,
    seifert_matrix,
    strict_upper,
    symmetrize,
)
from .matrices import IntMatrix, RationalMatrix
from .polynomials import IntPolynomial
from .realizer import (
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
from .scans import enumerate_orderings, lehmer_scan
from .spectra import (
    classify,
    coxeter_polynomial_of_graph,
    cyclotomic_factorization,
    is_reciprocal,
    lehmer_gate,
    lehmer_polynomial,
    mahler_measure,
    roots,
    spectral_radius,
)

__version__ = "1.0.0"
__all__ = [
    "AnalysisReport",
    "ChordDiagram",
    "ChordSystem",
    "CoxeterLinkAnalyzer",
    "CoxeterLinkError",
    "DirectedDiagram",
    "IntMatrix",
    "RationalMatrix",
    "IntPolynomial",
    "SimpleGraph",
    "ToolkitConfig",
    "adjacency",
    "alexander_polynomial",
    "analyze_system",
    "bilinear_form",
    "brute_force_realize",
    "char_poly",
    "classify",
    "coxeter_element",
    "coxeter_generator",
    "coxeter_orientation",
    "coxeter_polynomial_of_graph",
    "crosses",
    "cyclotomic_factorization",
    "definiteness",
    "enumerate_orderings",
    "incidence_graph",
    "is_coxeter_type",
    "is_reciprocal",
    "join",
    "lehmer_gate",
    "lehmer_polynomial",
    "lehmer_scan",
    "linking_number",
    "mahler_measure",
    "monodromy",
    "obstruction_check",
    "order_from_directed",
    "realize",
    "realize_complete",
    "realize_complete_bipartite",
    "realize_cycle",
    "realize_path",
    "realize_tree",
    "reverse_chord",
    "roots",
    "seifert_matrix",
    "sink_source_move",
    "slope_order",
    "spectral_radius",
    "star_graph",
    "strict_upper",
    "symmetrize",
    "to_directed",
]
