"""
Exact linear algebra for chord systems and simply-laced Coxeter systems.

Seifert matrix, symmetrisation, monodromy, Coxeter generators and element,
characteristic and Alexander polynomials, and definiteness of the bilinear
form. Everything here is integer or rational; floating point lives in
``spectra``.
"""

import logging
from enum import Enum
from typing import List

from sympy import Matrix, Poly

from .chord_core import ChordSystem, SimpleGraph, linking_number
from .errors import MalformedMatrixError, TheoremViolationError
from .matrices import IntMatrix, RationalMatrix
from .polynomials import IntPolynomial, T

logger = logging.getLogger(__name__)

__all__ = [
    "Definiteness",
    "IntMatrix",
    "RationalMatrix",
    "adjacency",
    "alexander_polynomial",
    "char_poly",
    "coxeter_element",
    "coxeter_generator",
    "definiteness",
    "coxeter_element_closed_form",
    "monodromy",
    "seifert_matrix",
    "strict_upper",
    "symmetrize",
]


class Definiteness(str, Enum):
    POSITIVE_DEFINITE = "positive_definite"
    POSITIVE_SEMIDEFINITE = "positive_semidefinite"
    INDEFINITE = "indefinite"


def adjacency(g: SimpleGraph) -> IntMatrix:
    """0/1 adjacency matrix with rows and columns in the graph's vertex order."""
    order = g.vertex_order
    return IntMatrix.from_rows(
        [[1 if u != v and g.has_edge(u, v) else 0 for v in order] for u in order]
    )


def strict_upper(x: IntMatrix) -> IntMatrix:
    return IntMatrix.from_rows(
        [[x[i, j] if i < j else 0 for j in range(x.n)] for i in range(x.n)]
    )


def seifert_matrix(s: ChordSystem) -> IntMatrix:
    """Upper unitriangular matrix with the linking numbers l_i, l_j (i < j) above the diagonal."""
    n = s.n
    return IntMatrix.from_rows(
        [[1 if i == j else (linking_number(s, i, j) if i < j else 0) for j in range(n)] for i in range(n)]
    )


def symmetrize(m: IntMatrix) -> IntMatrix:
    return m + m.T


def _unitriangular_solve(m: IntMatrix, rhs: IntMatrix) -> IntMatrix:
    """Solve m X = rhs by back-substitution for upper unitriangular m."""
    n = m.n
    columns: List[List[int]] = []
    for c in range(n):
        x = [0] * n
        for i in range(n - 1, -1, -1):
            x[i] = rhs[i, c] - sum(m[i, j] * x[j] for j in range(i + 1, n))
        columns.append(x)
    return IntMatrix.from_rows([[columns[c][r] for c in range(n)] for r in range(n)])


def monodromy(m: IntMatrix) -> IntMatrix:
    """Homological monodromy M^-1 M^t of a unitriangular Seifert matrix."""
    if not m.is_upper_unitriangular():
        raise MalformedMatrixError("monodromy expects an upper unitriangular Seifert matrix")
    return _unitriangular_solve(m, m.T)


def _check_bilinear_form(b: IntMatrix) -> None:
    if not b.is_symmetric():
        raise MalformedMatrixError("bilinear form must be symmetric")
    if any(b[i, i] != 2 for i in range(b.n)):
        raise MalformedMatrixError("bilinear form must have 2 on the diagonal")


def coxeter_generator(b: IntMatrix, i: int) -> IntMatrix:
    """Reflection s_i(e_j) = e_j - <e_i, e_j> e_i as a matrix acting on columns."""
    _check_bilinear_form(b)
    if not 0 <= i < b.n:
        raise MalformedMatrixError(f"generator index {i} out of range for rank {b.n}")
    return IntMatrix.from_rows(
        [[(1 if r == c else 0) - (b[i, c] if r == i else 0) for c in range(b.n)] for r in range(b.n)]
    )


def coxeter_element_closed_form(b: IntMatrix) -> IntMatrix:
    """-U^-1 U^t with U = I + B^+."""
    _check_bilinear_form(b)
    u = IntMatrix.identity(b.n) + strict_upper(b)
    return -_unitriangular_solve(u, u.T)


def coxeter_element(b: IntMatrix) -> IntMatrix:
    """c = s_1 ... s_n, cross-checked against -U^-1 U^t."""
    _check_bilinear_form(b)
    product = IntMatrix.identity(b.n)
    for i in range(b.n):
        product = product @ coxeter_generator(b, i)
    closed_form = coxeter_element_closed_form(b)
    if product != closed_form:
        logger.error(
            "Coxeter element mismatch",
            extra={"generator_product": product.tolist(), "closed_form": closed_form.tolist()},
        )
        raise TheoremViolationError(
            "product of generators disagrees with -U^-1 U^t",
            {"generator_product": product.tolist(), "closed_form": closed_form.tolist()},
        )
    return product


def char_poly(x: IntMatrix) -> IntPolynomial:
    """Monic det(tI - X), computed division-free (Berkowitz) over the integers."""
    coefficients = x.to_domain_matrix().charpoly()
    return IntPolynomial.from_high_first(int(c) for c in coefficients)


def alexander_polynomial(m: IntMatrix) -> IntPolynomial:
    """det(tM - M^t) straight from the Seifert matrix."""
    tm = Matrix(m.tolist()) * T - Matrix(m.T.tolist())
    return IntPolynomial.from_sympy(Poly(tm.det(method="berkowitz"), T))


def definiteness(b: IntMatrix) -> Definiteness:
    """Exact definiteness of a symmetric form by rational symmetric elimination.

    A zero pivot is allowed only when its entire remaining row vanishes; any
    negative pivot, or a zero pivot with a nonzero row, means indefinite.
    """
    if not b.is_symmetric():
        raise MalformedMatrixError("definiteness expects a symmetric matrix")
    work = [list(row) for row in b.to_rational().rows]
    n = b.n
    singular = False
    for k in range(n):
        pivot = work[k][k]
        if pivot < 0:
            return Definiteness.INDEFINITE
        if pivot == 0:
            if any(work[k][j] != 0 for j in range(k + 1, n)):
                return Definiteness.INDEFINITE
            singular = True
            continue
        for i in range(k + 1, n):
            factor = work[i][k] / pivot
            if factor == 0:
                continue
            for j in range(k, n):
                work[i][j] -= factor * work[k][j]
    return Definiteness.POSITIVE_SEMIDEFINITE if singular else Definiteness.POSITIVE_DEFINITE
