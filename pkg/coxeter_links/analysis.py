"""
End-to-end analysis of a chord system: every matrix of its Coxeter link,
the monodromy characteristic polynomial, classification, Mahler measure,
spectral radius and the Lehmer gate, with the structural identities checked
along the way.
"""

import logging
from typing import List, Optional

from pydantic import BaseModel, Field

from .chord_core import ChordSystem, bilinear_form, incidence_graph, is_coxeter_type
from .config import DEFAULT_CONFIG, ToolkitConfig
from .errors import NotCoxeterTypeError, TheoremViolationError
from .exact_forms import (
    Definiteness,
    adjacency,
    alexander_polynomial,
    char_poly,
    coxeter_element,
    definiteness,
    monodromy,
    seifert_matrix,
    symmetrize,
)
from .matrices import IntMatrix
from .spectra import (
    CoxeterClass,
    GateVerdict,
    classify,
    cyclotomic_factorization,
    lehmer_gate,
    lehmer_measure,
    mahler_measure,
    spectral_radius,
)

logger = logging.getLogger(__name__)

Rows = List[List[int]]


class AnalysisReport(BaseModel):
    """Everything computed for one chord system.

    Polynomials are listed constant term first. ``coxeter_element``,
    ``monodromy_is_minus_coxeter`` and ``classification`` are only filled in
    for Coxeter-type systems.
    """

    name: Optional[str] = None
    chord_count: int
    points: int
    chords: List[List[int]] = Field(description="(tail, head) per chord label")
    order: List[int] = Field(description="chord labels from l_1 to l_n")
    coxeter_type: bool
    incidence_edges: List[List[int]]

    adjacency: Rows
    bilinear_form: Rows
    seifert_matrix: Rows
    monodromy: Rows
    coxeter_element: Optional[Rows] = None
    monodromy_is_minus_coxeter: Optional[bool] = None

    char_poly: List[int]
    char_poly_canonical: List[int]
    char_poly_display: str
    factorization: str
    alexander_agrees: bool
    is_knot: bool

    classification: Optional[CoxeterClass] = None
    definiteness: Definiteness
    mahler_measure: float
    spectral_radius: float
    lehmer_gate: GateVerdict
    lehmer_measure: float
    tolerance: float

    def to_text(self) -> str:
        """Human-readable report; measures to six significant digits."""
        lines = []
        title = self.name or "chord system"
        lines.append(f"{title}: {self.chord_count} chords on {self.points} points")
        lines.append(f"order (labels, l_1 first): {' '.join(str(k + 1) for k in self.order)}")
        lines.append(f"Coxeter-type: {'yes' if self.coxeter_type else 'no'}")
        for heading, rows in (
            ("adjacency A", self.adjacency),
            ("bilinear form B", self.bilinear_form),
            ("Seifert matrix M", self.seifert_matrix),
            ("monodromy h*", self.monodromy),
            ("Coxeter element c", self.coxeter_element),
        ):
            if rows is None:
                continue
            lines.append(f"{heading}:")
            lines.append(_indent(str(IntMatrix.from_rows(rows)) if rows else "[]"))
        if self.monodromy_is_minus_coxeter is None:
            lines.append("h* = -c: skipped (not Coxeter-type)")
        else:
            lines.append(f"h* = -c: {'holds' if self.monodromy_is_minus_coxeter else 'FAILS'}")
        lines.append(f"characteristic polynomial: {self.char_poly_display}")
        lines.append(f"factorization: {self.factorization}")
        lines.append(f"Alexander polynomial agrees: {'yes' if self.alexander_agrees else 'no'}")
        lines.append(f"knot (one component): {'yes' if self.is_knot else 'no'}")
        if self.classification is not None:
            lines.append(f"classification: {self.classification.value}")
        lines.append(f"definiteness of B: {self.definiteness.value}")
        lines.append(f"Mahler measure: {self.mahler_measure:.6g} (tol {self.tolerance:g})")
        lines.append(f"spectral radius: {self.spectral_radius:.6g} (tol {self.tolerance:g})")
        lines.append(f"Lehmer gate: {self.lehmer_gate.value} (mu(p_L) = {self.lehmer_measure:.6g})")
        return "\n".join(lines)


def _indent(block: str, prefix: str = "  ") -> str:
    return "\n".join(prefix + line for line in block.splitlines())


class CoxeterLinkAnalyzer:
    """
    Runs the analysis pipeline on chord systems.

    The tolerances and iteration cap come from the configuration; every
    identity that must hold for all inputs (h* = -c on Coxeter-type
    systems, M + M^t = B, h*^t B h* = B, det(tM - M^t) = char poly of h*,
    the Lehmer gate on Coxeter-type systems) is checked and a failure raises
    ``TheoremViolationError``.
    """

    def __init__(self, config: Optional[ToolkitConfig] = None):
        self.config = config or DEFAULT_CONFIG

    def analyze(self, system: ChordSystem, name: Optional[str] = None,
                require_coxeter: bool = False) -> AnalysisReport:
        """
        Analyze one chord system.

        Args:
            system: The ordered, oriented chord system.
            name: Optional label carried into the report.
            require_coxeter: Reject systems that are not Coxeter-type.

        Returns:
            AnalysisReport with matrices, polynomial data and verdicts.
        """
        coxeter = is_coxeter_type(system)
        if require_coxeter and not coxeter:
            raise NotCoxeterTypeError(
                "chord system is not of Coxeter type (some crossing pair links +1)",
                {"name": name} if name else None,
            )

        graph = incidence_graph(system.diagram)
        a = adjacency(graph.with_order(system.order))
        b = bilinear_form(system)
        m = seifert_matrix(system)
        h = monodromy(m)
        self._check(symmetrize(m) == b, "M + M^t differs from the bilinear form", m, b)
        self._check(h.T @ b @ h == b, "monodromy does not preserve the bilinear form", h, b)

        c: Optional[IntMatrix] = None
        minus_coxeter: Optional[bool] = None
        classification: Optional[CoxeterClass] = None
        if coxeter:
            c = coxeter_element(b)
            minus_coxeter = h == -c
            self._check(minus_coxeter, "monodromy differs from minus the Coxeter element", h, c)
            classification = classify(char_poly(c))

        polynomial = char_poly(h)
        alexander = alexander_polynomial(m)
        if alexander != polynomial:
            logger.error(
                "Alexander polynomial differs from the monodromy polynomial",
                extra={"alexander": list(alexander.coeffs), "char_poly": list(polynomial.coeffs)},
            )
            raise TheoremViolationError(
                "det(tM - M^t) differs from the characteristic polynomial of the monodromy",
                {"alexander": list(alexander.coeffs), "char_poly": list(polynomial.coeffs)},
            )
        factorization = cyclotomic_factorization(polynomial)
        cfg = self.config
        measure = mahler_measure(polynomial, cfg.root_tolerance, cfg.max_iterations)
        radius = spectral_radius(h, cfg.root_tolerance, cfg.max_iterations)
        verdict = lehmer_gate(polynomial, cfg.gate_tolerance, cfg.root_tolerance, cfg.max_iterations)
        if coxeter and verdict == GateVerdict.FAIL:
            logger.error(
                "Lehmer gate failed on a Coxeter link",
                extra={"system": name, "char_poly": list(polynomial.coeffs), "mahler_measure": measure},
            )
            raise TheoremViolationError(
                f"Mahler measure {measure:.6g} of a Coxeter link is below Lehmer's bound",
                {"char_poly": list(polynomial.coeffs), "mahler_measure": measure},
            )

        report = AnalysisReport(
            name=name,
            chord_count=system.n,
            points=system.diagram.points,
            chords=[list(o) for o in system.orientations],
            order=list(system.order),
            coxeter_type=coxeter,
            incidence_edges=[list(e) for e in graph.edges()],
            adjacency=a.tolist(),
            bilinear_form=b.tolist(),
            seifert_matrix=m.tolist(),
            monodromy=h.tolist(),
            coxeter_element=c.tolist() if c is not None else None,
            monodromy_is_minus_coxeter=minus_coxeter,
            char_poly=list(polynomial.coeffs),
            char_poly_canonical=list(polynomial.canonical().coeffs),
            char_poly_display=str(polynomial),
            factorization=factorization.format(),
            alexander_agrees=alexander == polynomial,
            is_knot=abs(polynomial.evaluate(1)) == 1,
            classification=classification,
            definiteness=definiteness(b),
            mahler_measure=measure,
            spectral_radius=radius,
            lehmer_gate=verdict,
            lehmer_measure=lehmer_measure(cfg.root_tolerance, cfg.max_iterations),
            tolerance=cfg.root_tolerance,
        )
        logger.info(
            "analysis complete",
            extra={"system": name, "chords": system.n, "coxeter_type": coxeter, "mahler_measure": measure},
        )
        return report

    def _check(self, holds: bool, message: str, left: IntMatrix, right: IntMatrix) -> None:
        if holds:
            return
        logger.error(message, extra={"left": left.tolist(), "right": right.tolist()})
        raise TheoremViolationError(message, {"left": left.tolist(), "right": right.tolist()})


def analyze_system(system: ChordSystem, config: Optional[ToolkitConfig] = None,
                   name: Optional[str] = None, require_coxeter: bool = False) -> AnalysisReport:
    """
    Main entry point for analysing a chord system.

    Args:
        system: The chord system to analyse.
        config: Tolerances and caps; defaults to ``ToolkitConfig()``.
        name: Optional label for the report.
        require_coxeter: Raise ``NotCoxeterTypeError`` for non-Coxeter-type input.

    Returns:
        The completed AnalysisReport.
    """
    return CoxeterLinkAnalyzer(config).analyze(system, name=name, require_coxeter=require_coxeter)
