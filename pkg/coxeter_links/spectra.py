"""
Polynomial spectra: reciprocity, roots, Mahler measure, spectral radius,
Coxeter-system classification and the Lehmer gate.

Unit-circle questions are settled exactly by peeling cyclotomic factors off
with integer polynomial division; only the remaining cofactor is handed to
the numerical root finder.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sympy import Poly, cyclotomic_poly, totient

from .chord_core import SimpleGraph
from .errors import RootFindingError
from .exact_forms import adjacency, char_poly, coxeter_element
from .matrices import IntMatrix
from .polynomials import IntPolynomial, T

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_ITERATIONS = 200
DEFAULT_GATE_TOLERANCE = 1e-6

# x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1, constant term first
LEHMER_COEFFICIENTS: Tuple[int, ...] = (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)


class CoxeterClass(str, Enum):
    SPHERICAL = "spherical"
    AFFINE = "affine"
    HIGHER = "higher"


class GateVerdict(str, Enum):
    TRIVIAL = "trivial"
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class ComplexRootSet:
    """Distinct root approximations with multiplicities.

    ``residual`` is max |p(z)| / sum |a_k| |z|^k over the returned roots
    (cluster centres for multiple roots), i.e. |p(z)| scaled by the size of
    the terms it cancels. It never exceeds the tolerance the set was built with.
    """

    roots: Tuple[Tuple[complex, int], ...]
    residual: float
    iterations: int

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def all_roots(self) -> List[complex]:
        return [z for z, m in self.roots for _ in range(m)]

    def max_modulus(self) -> float:
        return max((abs(z) for z, _ in self.roots), default=0.0)

    def reconstruct(self) -> np.ndarray:
        """Coefficients (leading first) of the monic product of (t - root)."""
        return np.poly(np.array(self.all_roots(), dtype=complex))


@dataclass(frozen=True)
class CyclotomicFactorization:
    """p = cofactor * prod Phi_d^m, with no cyclotomic factor left in the cofactor."""

    factors: Tuple[Tuple[int, int], ...]
    cofactor: IntPolynomial

    @property
    def is_cyclotomic(self) -> bool:
        """All roots are roots of unity (up to a unit)."""
        return self.cofactor.degree < 1 and abs(self.cofactor.leading) == 1

    def multiplicity(self, d: int) -> int:
        return dict(self.factors).get(d, 0)

    def format(self) -> str:
        parts = []
        sign = ""
        if self.cofactor.degree < 1:
            if self.cofactor.leading == -1:
                sign = "-"
            elif self.cofactor.leading != 1:
                parts.append(str(self.cofactor.leading))
        else:
            parts.append(f"({self.cofactor})")
        for d, m in self.factors:
            body = f"({cyclotomic(d)})"
            parts.append(body if m == 1 else f"{body}^{m}")
        return sign + ("".join(parts) if parts else "1")


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    return IntPolynomial.from_sympy(cyclotomic_poly(d, T, polys=True))


def is_reciprocal(p: IntPolynomial) -> bool:
    """t^d p(1/t) = ±p(t)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no reciprocal")
    r = p.reciprocal()
    return r == p or r == -p


def cyclotomic_factorization(p: IntPolynomial) -> CyclotomicFactorization:
    """Divide out every cyclotomic factor exactly.

    Only Phi_d with phi(d) <= deg p can divide p, and phi(d) >= sqrt(d/2)
    bounds the search to d <= 2 deg^2.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    remaining: Poly = p.to_sympy()
    factors: Dict[int, int] = {}
    bound = 2 * max(p.degree, 1) ** 2
    for d in range(1, bound + 1):
        if remaining.degree() < 1:
            break
        if int(totient(d)) > remaining.degree():
            continue
        phi = cyclotomic(d).to_sympy()
        while remaining.degree() >= phi.degree():
            quotient, rest = remaining.div(phi)
            if not rest.is_zero:
                break
            remaining = quotient
            factors[d] = factors.get(d, 0) + 1
    return CyclotomicFactorization(tuple(sorted(factors.items())), IntPolynomial.from_sympy(remaining))


def _backward_errors(monic: np.ndarray, z: np.ndarray) -> np.ndarray:
    scale = np.polyval(np.abs(monic), np.abs(z))
    return np.abs(np.polyval(monic, z)) / np.maximum(scale, np.finfo(float).tiny)


def _aberth(monic: np.ndarray, tol: float, max_iterations: int) -> Tuple[np.ndarray, int]:
    """Aberth-Ehrlich simultaneous iteration on a monic polynomial (leading first)."""
    degree = len(monic) - 1
    derivative = np.polyder(monic)
    magnitudes = np.abs(monic[1:])
    radius = max(magnitudes[k - 1] ** (1.0 / k) for k in range(1, degree + 1))
    if radius == 0:
        radius = 1.0
    angles = 2 * np.pi * np.arange(degree) / degree + 0.4
    z = radius * np.exp(1j * angles)
    iteration = 0
    for iteration in range(1, max_iterations + 1):
        pz = np.polyval(monic, z)
        dpz = np.polyval(derivative, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dpz != 0, pz / dpz, pz)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inverse = 1.0 / diff
            np.fill_diagonal(inverse, 0.0)
            denominator = 1.0 - ratio * inverse.sum(axis=1)
            step = np.where(denominator != 0, ratio / denominator, ratio)
        z = z - step
        small_steps = np.all(np.abs(step) <= tol * np.maximum(1.0, np.abs(z)))
        if small_steps or np.all(_backward_errors(monic, z) <= tol):
            break
    return z, iteration


def _newton_polish(monic: np.ndarray, z: np.ndarray, steps: int = 3) -> np.ndarray:
    derivative = np.polyder(monic)
    polished = z.copy()
    for _ in range(steps):
        pz = np.polyval(monic, polished)
        dpz = np.polyval(derivative, polished)
        with np.errstate(divide="ignore", invalid="ignore"):
            candidate = np.where(dpz != 0, polished - pz / dpz, polished)
        better = np.abs(np.polyval(monic, candidate)) < np.abs(pz)
        polished = np.where(better, candidate, polished)
    return polished


def _cluster(monic: np.ndarray, z: Sequence[complex], radius: float, tol: float) -> List[Tuple[complex, int]]:
    """Group approximations of one multiple root.

    A group is kept only when p is small at its centre; otherwise its members
    are distinct roots that happen to lie close together and stay separate.
    """
    clusters: List[List[complex]] = []
    for root in sorted(z, key=lambda w: (round(w.real, 8), round(w.imag, 8))):
        for members in clusters:
            centre = sum(members) / len(members)
            if abs(root - centre) <= radius * max(1.0, abs(centre)):
                members.append(root)
                break
        else:
            clusters.append([root])
    found: List[Tuple[complex, int]] = []
    for members in clusters:
        centre = complex(sum(members) / len(members))
        if len(members) == 1 or _backward_errors(monic, np.array([centre]))[0] <= tol:
            found.append((centre, len(members)))
        else:
            found.extend((complex(root), 1) for root in members)
    return found


def roots(p: IntPolynomial, tol: float = DEFAULT_TOLERANCE,
          max_iterations: int = DEFAULT_MAX_ITERATIONS) -> ComplexRootSet:
    """All complex roots of p with multiplicities.

    Zero roots are split off exactly; the rest come from Aberth-Ehrlich
    iteration started on a circle sized from the coefficients, followed by
    Newton polishing. Approximations closer than min(1e-3, tol**0.25)
    (relative) are reported as one root of higher multiplicity, provided p is
    within tolerance at their centre; otherwise they stay distinct.
    """
    if p.degree < 1:
        raise ValueError("root finding needs a polynomial of degree at least 1")
    coeffs = list(p.coeffs)
    zero_multiplicity = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zero_multiplicity += 1
    found: List[Tuple[complex, int]] = []
    residual = 0.0
    iterations = 0
    if len(coeffs) > 1:
        high = np.array(coeffs[::-1], dtype=complex)
        monic = high / high[0]
        if len(monic) == 2:
            approximations = np.array([-monic[1]])
        else:
            approximations, iterations = _aberth(monic, tol, max_iterations)
            approximations = _newton_polish(monic, approximations)
        best = float(np.max(_backward_errors(monic, approximations)))
        if best <= tol:
            found = _cluster(monic, list(approximations), min(1e-3, tol ** 0.25), tol)
            centres = np.array([z for z, _ in found], dtype=complex)
            residual = float(np.max(_backward_errors(monic, centres)))
        else:
            residual = best
        if residual > tol:
            logger.warning(
                "root finder did not converge",
                extra={"degree": p.degree, "iterations": iterations, "residual": residual},
            )
            raise RootFindingError(
                f"no convergence within {max_iterations} iterations for {p}", best_residual=residual
            )
    if zero_multiplicity:
        found.append((0j, zero_multiplicity))
    logger.debug("roots found", extra={"degree": p.degree, "iterations": iterations, "residual": residual})
    return ComplexRootSet(tuple(found), residual, iterations)


def mahler_measure(p: IntPolynomial, tol: float = DEFAULT_TOLERANCE,
                   max_iterations: int = DEFAULT_MAX_ITERATIONS) -> float:
    """|leading coefficient| times the product of max(1, |root|)."""
    if p.degree < 1:
        raise ValueError("Mahler measure is taken of polynomials of degree at least 1")
    cofactor = cyclotomic_factorization(p).cofactor
    if cofactor.degree < 1:
        return float(abs(cofactor.leading))
    root_set = roots(cofactor, tol, max_iterations)
    return float(abs(cofactor.leading) * math.prod(max(1.0, abs(z)) ** m for z, m in root_set.roots))


def spectral_radius(x: IntMatrix, tol: float = DEFAULT_TOLERANCE,
                    max_iterations: int = DEFAULT_MAX_ITERATIONS) -> float:
    """Largest eigenvalue modulus of an integer matrix."""
    factorization = cyclotomic_factorization(char_poly(x))
    radius = 1.0 if factorization.factors else 0.0
    if factorization.cofactor.degree >= 1:
        radius = max(radius, roots(factorization.cofactor, tol, max_iterations).max_modulus())
    return radius


def classify(q_c: IntPolynomial) -> CoxeterClass:
    """Classify a Coxeter system from the characteristic polynomial of its Coxeter element.

    Spherical: every root a root of unity other than 1. Affine: every root on
    the unit circle and 1 among them. Decided by exact cyclotomic division,
    which by Kronecker's theorem is the same as all roots having modulus one.
    """
    factorization = cyclotomic_factorization(q_c)
    if not factorization.is_cyclotomic:
        return CoxeterClass.HIGHER
    return CoxeterClass.AFFINE if factorization.multiplicity(1) else CoxeterClass.SPHERICAL


def lehmer_polynomial() -> IntPolynomial:
    return IntPolynomial(LEHMER_COEFFICIENTS)


@lru_cache(maxsize=None)
def lehmer_measure(tol: float = DEFAULT_TOLERANCE, max_iterations: int = DEFAULT_MAX_ITERATIONS) -> float:
    """Mahler measure of Lehmer's polynomial, computed once per tolerance."""
    return mahler_measure(lehmer_polynomial(), tol, max_iterations)


def lehmer_gate(p: IntPolynomial, tol: float = DEFAULT_GATE_TOLERANCE,
                root_tolerance: float = DEFAULT_TOLERANCE,
                max_iterations: int = DEFAULT_MAX_ITERATIONS) -> GateVerdict:
    """trivial: all roots are roots of unity; pass: mu(p) >= mu(p_L) - tol; fail otherwise."""
    if cyclotomic_factorization(p).is_cyclotomic:
        return GateVerdict.TRIVIAL
    measure = mahler_measure(p, root_tolerance, max_iterations)
    threshold = lehmer_measure(root_tolerance, max_iterations) - tol
    return GateVerdict.PASS if measure >= threshold else GateVerdict.FAIL


def coxeter_polynomial_of_graph(g: SimpleGraph) -> IntPolynomial:
    """Characteristic polynomial of the Coxeter element of the simply-laced system on g.

    Generators are multiplied in the graph's vertex order.
    """
    a = adjacency(g)
    b = IntMatrix.identity(g.n) + IntMatrix.identity(g.n) - a
    return char_poly(coxeter_element(b))
