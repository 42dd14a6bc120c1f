"""
Integer polynomials in one variable ``t``.

Coefficients are stored constant term first. Characteristic polynomials from
different sources differ by the substitutions p(t) -> ±p(±t); ``canonical``
picks one representative of that class so comparisons are exact.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

from sympy import Poly, ZZ, Symbol

T = Symbol("t")

Number = Union[int, float, complex]


def _strip(coeffs: Sequence[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        """Build from coefficients listed constant term first."""
        return cls(_strip(list(coeffs)))

    @classmethod
    def from_high_first(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        """Build from coefficients listed leading term first."""
        return cls(_strip(list(coeffs)[::-1]))

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPolynomial":
        return cls.from_high_first(int(c) for c in poly.all_coeffs())

    def to_sympy(self) -> Poly:
        if self.is_zero():
            return Poly(0, T, domain=ZZ)
        return Poly(list(self.coeffs[::-1]), T, domain=ZZ)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def evaluate(self, x: Number) -> Number:
        result: Number = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_sympy(self.to_sympy() * other.to_sympy())

    def reciprocal(self) -> "IntPolynomial":
        """t^d p(1/t)."""
        return IntPolynomial.from_coefficients(self.coeffs[::-1])

    def substitute_negative(self) -> "IntPolynomial":
        """p(-t)."""
        return IntPolynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def canonical(self) -> "IntPolynomial":
        """Least member (by coefficients) of the sign-normalised class {±p(t), ±p(-t)}."""
        if self.is_zero():
            return self
        candidates = []
        for q in (self, self.substitute_negative()):
            candidates.append(q if q.leading > 0 else -q)
        return min(candidates, key=lambda q: q.coeffs)

    def equivalent(self, other: "IntPolynomial") -> bool:
        return self.canonical() == other.canonical()

    def format(self, ascending: bool = False, var: str = "t") -> str:
        """Human-readable form, e.g. ``t^3 + t^2 - t - 1``."""
        if self.is_zero():
            return "0"
        powers = range(len(self.coeffs)) if ascending else range(len(self.coeffs) - 1, -1, -1)
        parts = []
        for k in powers:
            c = self.coeffs[k]
            if c == 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                monomial = var if k == 1 else f"{var}^{k}"
                body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()
