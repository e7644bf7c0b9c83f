"""Exact minimization of an objective along a ray ``z + μg``, ``μ ∈ {0, …, s}``.

Quadratics use the closed-form vertex; forms of higher degree isolate the real
critical points with Sturm sequences and bisection over exact rationals. Ties
between minimizers go to the smallest ``μ``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, DomainError, PreconditionError
from .lattice import POS_INF, ExtendedBounds, as_matrix, as_vector, dot
from .polynomial import UnivariatePolynomial

DEFAULT_MAX_FORM_DEGREE = 12


@dataclass(frozen=True)
class StepResult:
    """Outcome of a ray minimization: ``mu``/``value`` are ``None`` on an infinite ray."""

    mu: int | None
    value: int | None

    @classmethod
    def bounded(cls, mu: int, value: int) -> StepResult:
        return cls(mu, value)

    @classmethod
    def infinite_ray(cls) -> StepResult:
        return cls(None, None)

    @property
    def is_infinite(self) -> bool:
        return self.mu is None


def max_step(z, g, bounds: ExtendedBounds):
    """Largest ``μ ∈ Z₊ ∪ {∞}`` with ``l <= z + μg <= u``."""
    z, g = as_vector(z), as_vector(g)
    if not (len(z) == len(g) == bounds.n):
        raise DimensionError("point, direction and bounds differ in length")
    if not bounds.contains(z):
        raise PreconditionError(f"point {z} violates the bounds")
    if not any(g):
        raise PreconditionError("direction must be nonzero")
    s = POS_INF
    for zi, gi, lo, hi in zip(z, g, bounds.lower, bounds.upper):
        if gi > 0 and hi != POS_INF:
            s = min(s, (hi - zi) // gi)
        elif gi < 0 and lo != -POS_INF:
            s = min(s, (zi - lo) // -gi)
    return s


def restrict_quadratic(V, w, a, z, g) -> UnivariatePolynomial:
    """``h(μ) = f(z + μg)`` for ``f(x) = x⊤Vx + w⊤x + a``."""
    V = as_matrix(V)
    z, g, w = as_vector(z), as_vector(g), as_vector(w)
    n = V.ncols
    if V.nrows != n or not (len(z) == len(g) == len(w) == n):
        raise DimensionError("quadratic data and vectors disagree in dimension")
    Vg, Vz = V.matvec(g), V.matvec(z)
    h2 = dot(g, Vg)
    h1 = dot(z, Vg) + dot(g, Vz) + dot(w, g)
    h0 = dot(z, Vz) + dot(w, z) + int(a)
    return UnivariatePolynomial((h0, h1, h2))


def _best(h: UnivariatePolynomial, candidates) -> StepResult:
    best = None
    for mu in sorted(set(candidates)):
        v = h(mu)
        if best is None or v < best[1]:
            best = (mu, v)
    return StepResult.bounded(*best)


def minimize_quadratic_polynomial(h: UnivariatePolynomial, s: int) -> StepResult:
    """Minimize a polynomial of degree <= 2 over ``{0, …, s}`` via its vertex."""
    h2, h1 = h.coefficient(2), h.coefficient(1)
    candidates = {0, s}
    if h2 > 0:
        vertex = Fraction(-h1, 2 * h2)
        for mu in (math.floor(vertex), math.ceil(vertex)):
            if 0 <= mu <= s:
                candidates.add(mu)
    return _best(h, candidates)


def minimize_quadratic_on_ray(V, w, a, z, g, bounds: ExtendedBounds) -> StepResult:
    s = max_step(z, g, bounds)
    if s == POS_INF:
        return StepResult.infinite_ray()
    return minimize_quadratic_polynomial(restrict_quadratic(V, w, a, z, g), s)


# --- exact polynomial arithmetic over Q (coefficient lists, low to high) ---


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num, den):
    num, den = _trim(num), _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    rem = [Fraction(c) for c in num]
    lead = Fraction(den[-1])
    while len(rem) >= len(den) and rem:
        shift = len(rem) - len(den)
        c = rem[-1] / lead
        quo[shift] = c
        for i, dc in enumerate(den):
            rem[shift + i] -= c * dc
        rem = _trim(rem)
    return quo, rem


def _poly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    return [c / a[-1] for c in a] if a else a


def _derivative(p):
    return [i * c for i, c in enumerate(p) if i]


def _eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def square_free_part(p):
    p = [Fraction(c) for c in _trim(p)]
    dp = _derivative(p)
    if not _trim(dp):
        return p
    return _trim(_poly_divmod(p, _poly_gcd(p, dp))[0])


def sturm_sequence(p):
    """Sturm chain of the square-free part of ``p``."""
    p0 = square_free_part(p)
    seq = [p0]
    p1 = _trim(_derivative(p0))
    while p1:
        seq.append(p1)
        r = _poly_divmod(seq[-2], seq[-1])[1]
        p1 = [-c for c in r]
    return seq


def _sign_variations(seq, x) -> int:
    signs = [v > 0 for v in (_eval(q, x) for q in seq) if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _coefficients(p):
    if isinstance(p, UnivariatePolynomial):
        return p.as_fractions()
    return [Fraction(c) for c in p]


def sturm_root_count(p, a, b) -> int:
    """Number of distinct real roots of ``p`` in ``(a, b]``."""
    coeffs = _trim(_coefficients(p))
    if not coeffs:
        raise DomainError("the zero polynomial has infinitely many roots")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise DomainError(f"need a < b, got ({a}, {b}]")
    seq = sturm_sequence(coeffs)
    return _sign_variations(seq, a) - _sign_variations(seq, b)


def cauchy_bound(p) -> Fraction:
    """Every real root ``r`` of ``p`` satisfies ``|r| <= bound``."""
    coeffs = _trim(_coefficients(p))
    lead = abs(coeffs[-1])
    return 1 + max((abs(c) / lead for c in coeffs[:-1]), default=Fraction(0))


def isolate_roots(p, lo, hi, max_width=Fraction(1)):
    """Disjoint intervals ``(a, b]`` with ``b - a < max_width`` covering the roots in ``(lo, hi]``.

    Intervals are halved until narrow enough; an interval may hold more than
    one root.
    """
    coeffs = _trim(_coefficients(p))
    if not coeffs:
        raise DomainError("the zero polynomial has infinitely many roots")
    seq = sturm_sequence(coeffs)
    out = []
    stack = [(Fraction(lo), Fraction(hi))]
    while stack:
        a, b = stack.pop()
        if _sign_variations(seq, a) - _sign_variations(seq, b) == 0:
            continue
        if b - a < max_width:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    return sorted(out)


def minimize_polynomial_on_range(h: UnivariatePolynomial, s: int) -> StepResult:
    """Exact integer minimizer of ``h`` over ``{0, …, s}``.

    Between consecutive real critical points ``h`` is monotone, so the
    minimizer is ``0``, ``s``, or an integer neighbour of a critical point.
    Critical points are isolated in intervals narrower than 1, and the floors
    and ceilings of both interval ends cover those neighbours.
    """
    candidates = {0, s}
    dh = h.derivative()
    if dh.degree >= 1:
        hi = min(Fraction(s), cauchy_bound(dh))
        lo = Fraction(-1)
        if hi > lo:
            for a, b in isolate_roots(dh, lo, hi):
                for mu in (math.floor(a), math.ceil(a), math.floor(b), math.ceil(b)):
                    if 0 <= mu <= s:
                        candidates.add(mu)
    return _best(h, candidates)


def minimize_form_on_ray(F, z, g, bounds: ExtendedBounds, max_degree: int = DEFAULT_MAX_FORM_DEGREE) -> StepResult:
    if F.degree > max_degree:
        raise DomainError(f"form degree {F.degree} exceeds the cap {max_degree}")
    s = max_step(z, g, bounds)
    if s == POS_INF:
        return StepResult.infinite_ray()
    return minimize_polynomial_on_range(F.restrict_to_ray(z, g), s)

