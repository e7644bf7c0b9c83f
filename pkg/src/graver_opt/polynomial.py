"""Univariate polynomials with exact integer coefficients."""

from __future__ import annotations

from fractions import Fraction


class UnivariatePolynomial:
    """``h(μ) = Σ h_i μ^i`` with integer ``h_i``; coefficients stored low to high."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __call__(self, mu):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * mu + c
        return acc

    def derivative(self) -> UnivariatePolynomial:
        return UnivariatePolynomial(i * c for i, c in enumerate(self.coefficients) if i)

    def as_fractions(self) -> list:
        return [Fraction(c) for c in self.coefficients]

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        return UnivariatePolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __repr__(self):
        return f"UnivariatePolynomial({list(self.coefficients)})"

    def __str__(self):
        if not self.coefficients:
            return "0"
        out = ""
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if not c:
                continue
            power = "" if i == 0 else "μ" if i == 1 else f"μ^{i}"
            mag = str(abs(c)) if abs(c) != 1 or i == 0 else ""
            sign = ("-" if c < 0 else "") if not out else (" - " if c < 0 else " + ")
            out += sign + mag + power
        return out
