"""Objective functions accepted by the solver."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError
from .forms import FormTensor
from .lattice import POS_INF, IntegerMatrix, as_matrix, as_vector, dot
from .linesearch import (
    StepResult,
    max_step,
    minimize_form_on_ray,
    minimize_quadratic_polynomial,
    restrict_quadratic,
)


@dataclass(frozen=True)
class QuadraticObjective:
    """``f(x) = x⊤Vx + w⊤x + a``; ``V`` need not be symmetric."""

    V: IntegerMatrix
    w: tuple
    a: int = 0

    def __post_init__(self):
        V = as_matrix(self.V)
        w = as_vector(self.w)
        if not V.is_square() or len(w) != V.ncols:
            raise DimensionError(f"V is {V.shape}, w has length {len(w)}")
        object.__setattr__(self, "V", V)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "a", int(self.a))

    kind = "quadratic"

    @property
    def n(self) -> int:
        return self.V.ncols

    def evaluate(self, x) -> int:
        x = as_vector(x)
        return self.V.bilinear(x, x) + dot(self.w, x) + self.a

    def restrict(self, z, g):
        return restrict_quadratic(self.V, self.w, self.a, z, g)

    def minimize_on_ray(self, z, g, bounds) -> StepResult:
        s = max_step(z, g, bounds)
        if s == POS_INF:
            return StepResult.infinite_ray()
        return minimize_quadratic_polynomial(self.restrict(z, g), s)

    def as_quadratic(self) -> QuadraticObjective:
        return self


@dataclass(frozen=True)
class SeparableObjective:
    """``f(x) = Σ (v_i x_i² + w_i x_i + a_i)``."""

    v: tuple
    w: tuple
    a: tuple

    def __post_init__(self):
        v, w, a = as_vector(self.v), as_vector(self.w), as_vector(self.a)
        if not len(v) == len(w) == len(a):
            raise DimensionError("v, w and a must have equal length")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "a", a)

    kind = "separable"

    @property
    def n(self) -> int:
        return len(self.v)

    def evaluate(self, x) -> int:
        x = as_vector(x)
        if len(x) != self.n:
            raise DimensionError(f"point of length {len(x)} for {self.n} variables")
        return sum(vi * xi * xi + wi * xi + ai for vi, wi, ai, xi in zip(self.v, self.w, self.a, x))

    def as_quadratic(self) -> QuadraticObjective:
        return QuadraticObjective(IntegerMatrix.diag(self.v), self.w, sum(self.a))

    def restrict(self, z, g):
        return self.as_quadratic().restrict(z, g)

    def minimize_on_ray(self, z, g, bounds) -> StepResult:
        return self.as_quadratic().minimize_on_ray(z, g, bounds)


@dataclass(frozen=True)
class FormObjective:
    """``f(x) = ⟨F, x⊗…⊗x⟩`` for a homogeneous form of degree ``F.degree``."""

    F: FormTensor

    kind = "form"

    @property
    def n(self) -> int:
        return self.F.n

    @property
    def degree(self) -> int:
        return self.F.degree

    def evaluate(self, x) -> int:
        return self.F.evaluate(x)

    def restrict(self, z, g):
        return self.F.restrict_to_ray(z, g)

    def minimize_on_ray(self, z, g, bounds) -> StepResult:
        return minimize_form_on_ray(self.F, z, g, bounds)
