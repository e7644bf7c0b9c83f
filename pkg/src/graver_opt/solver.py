"""Two-phase Graver augmentation solver.

Phase one finds a feasible point: an integer solution of ``Ax = b`` from the
Hermite normal form, then one auxiliary linear program per violated bound,
each solved by augmentation. Phase two repeatedly takes the best improving
step ``x + μg`` over all Graver elements ``g`` until none improves.

The second phase always stops at a point no Graver step can improve. The point
is a global optimum when the objective passes the matching dual-cone test:
``in_dual_quadratic_cone`` for quadratics, ``in_dual_diagonal_cone`` for
separable objectives and ``in_K_d`` for forms. ``solve`` runs that test and
reports its verdict.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .cones import MembershipCertificate, in_dual_diagonal_cone, in_dual_quadratic_cone, in_K_d
from .errors import DimensionError, DomainError, PreconditionError
from .graver import GraverBasis, compute_graver_basis
from .hermite import hermite_solve
from .lattice import (
    NEG_INF,
    POS_INF,
    ExtendedBounds,
    IntegerMatrix,
    as_matrix,
    as_vector,
    conformal,
    same_orthant,
)
from .objectives import FormObjective, QuadraticObjective, SeparableObjective

OPTIMAL = "optimal"
FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
INFINITE = "infinite"


@dataclass(frozen=True)
class ProblemInstance:
    """``min f(x)`` subject to ``Ax = b``, ``l <= x <= u``, ``x`` integer."""

    A: IntegerMatrix
    b: tuple
    bounds: ExtendedBounds
    objective: QuadraticObjective | SeparableObjective | FormObjective
    graver: GraverBasis | None = None

    def __post_init__(self):
        A = as_matrix(self.A)
        b = as_vector(self.b)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        if len(b) != A.nrows:
            raise DimensionError(f"b has length {len(b)}, A has {A.nrows} rows")
        if self.bounds.n != A.ncols:
            raise DimensionError(f"bounds have length {self.bounds.n}, A has {A.ncols} columns")
        if self.objective.n != A.ncols:
            raise DimensionError(f"objective is over {self.objective.n} variables, A has {A.ncols} columns")
        if self.graver is not None:
            _spot_check_graver(self.graver, A)

    @property
    def n(self) -> int:
        return self.A.ncols


def _spot_check_graver(G: GraverBasis, A: IntegerMatrix, sample: int = 200):
    if G.matrix != A:
        raise DomainError("supplied Graver basis belongs to a different matrix")
    for g in G:
        if not any(g) or any(A.matvec(g)):
            raise DomainError(f"supplied Graver element {g} is not a nonzero kernel vector")
    # minimality on an evenly spaced sample; the full check is quadratic
    elems = G.elements
    stride = max(1, len(elems) // sample)
    for h in elems[::stride]:
        for g in elems:
            if g != h and conformal(g, h):
                raise DomainError(f"supplied basis element {h} is not ⊑-minimal")


@dataclass(frozen=True)
class Finiteness:
    """``finite`` is False when ``witness`` is a Graver element along which every fiber is unbounded."""

    finite: bool
    witness: tuple | None = None


def check_finiteness(G: GraverBasis, bounds: ExtendedBounds) -> Finiteness:
    for g in G:
        if all(
            (gi <= 0 or hi == POS_INF) and (gi >= 0 or lo == NEG_INF)
            for gi, lo, hi in zip(g, bounds.lower, bounds.upper)
        ):
            return Finiteness(False, g)
    return Finiteness(True)


@dataclass(frozen=True)
class TraceStep:
    step: int
    direction: tuple
    mu: int
    value: int


@dataclass
class Augmentation:
    x: tuple
    value: int
    steps: int
    trace: list = field(default_factory=list)
    infinite: bool = False


def augment_to_optimum(G: GraverBasis, objective, x0, bounds: ExtendedBounds, record_trace: bool = False) -> Augmentation:
    """Greedy Graver augmentation from a feasible ``x0``.

    Each round takes the strictly improving ``(g, μ)`` with the smallest new
    value; ties go to the earlier element in canonical order, then to smaller
    ``μ``. Stops when no step improves. Hitting an unbounded ray returns
    ``infinite=True``.
    """
    x = as_vector(x0)
    if not bounds.contains(x):
        raise PreconditionError(f"starting point {x} violates the bounds")
    value = objective.evaluate(x)
    steps = 0
    trace = []
    while True:
        best = None
        for g in G:
            r = objective.minimize_on_ray(x, g, bounds)
            if r.is_infinite:
                return Augmentation(x, value, steps, trace, infinite=True)
            if r.value < value and (best is None or r.value < best[0]):
                best = (r.value, g, r.mu)
        if best is None:
            return Augmentation(x, value, steps, trace)
        value, g, mu = best
        x = tuple(a + mu * c for a, c in zip(x, g))
        steps += 1
        if record_trace:
            trace.append(TraceStep(steps, g, mu, value))


@dataclass(frozen=True)
class Feasibility:
    status: str  # FEASIBLE, INFEASIBLE or INFINITE
    x: tuple | None = None
    rounds: int = 0
    evidence: dict | None = None


def find_feasible(A, G: GraverBasis, b, bounds: ExtendedBounds) -> Feasibility:
    """A point of ``{x ∈ Zⁿ : Ax = b, l <= x <= u}``, or a proof there is none.

    ``INFINITE`` means the set is empty or infinite: some Graver element
    recedes inside the bounds, so no finite fiber exists. Otherwise each round
    fixes the lowest-indexed violated coordinate by optimizing it over relaxed
    bounds, and at most ``n`` rounds run.
    """
    A = as_matrix(A)
    b = as_vector(b)
    lower, upper = bounds.lower, bounds.upper
    for j, (lo, hi) in enumerate(zip(lower, upper)):
        if lo > hi or lo == POS_INF or hi == NEG_INF:
            return Feasibility(INFEASIBLE, evidence={"reason": "empty bounds", "index": j})
    x = hermite_solve(A, b)
    if x is None:
        return Feasibility(INFEASIBLE, evidence={"reason": "no integer solution of Ax=b"})
    fin = check_finiteness(G, bounds)
    if not fin.finite:
        return Feasibility(INFINITE, evidence={"reason": "recession direction", "witness": list(fin.witness)})
    rounds = 0
    while True:
        violated = [j for j, (lo, v, hi) in enumerate(zip(lower, x, upper)) if not lo <= v <= hi]
        if not violated:
            return Feasibility(FEASIBLE, x, rounds)
        i = violated[0]
        rounds += 1
        relaxed_lo = [min(lo, v) for lo, v in zip(lower, x)]
        relaxed_hi = [max(hi, v) for hi, v in zip(upper, x)]
        n = len(x)
        unit = tuple(int(j == i) for j in range(n))
        if x[i] < lower[i]:
            # maximize z_i subject to z_i <= u_i
            relaxed_hi[i] = upper[i]
            w = tuple(-c for c in unit)
        else:
            # minimize z_i subject to z_i >= l_i
            relaxed_lo[i] = lower[i]
            w = unit
        aux = QuadraticObjective(IntegerMatrix.zeros(n, n), w, 0)
        z = augment_to_optimum(G, aux, x, ExtendedBounds(tuple(relaxed_lo), tuple(relaxed_hi))).x
        if not lower[i] <= z[i] <= upper[i]:
            return Feasibility(
                INFEASIBLE,
                rounds=rounds,
                evidence={"reason": "auxiliary optimum violates bound", "index": i, "optimum": z[i]},
            )
        x = z


def certify(objective, G: GraverBasis) -> MembershipCertificate:
    """Run the dual-cone test that guarantees global optimality for ``objective``."""
    if isinstance(objective, SeparableObjective):
        return in_dual_diagonal_cone(objective.v, G)
    if isinstance(objective, QuadraticObjective):
        return in_dual_quadratic_cone(objective.V, G)
    if isinstance(objective, FormObjective):
        return in_K_d(objective.F, G)
    raise TypeError(f"unsupported objective {type(objective).__name__}")


def step_bound(n: int, gap: int) -> int:
    """Upper bound on augmentation steps for a certified objective with ``f(x0) - f* = gap``."""
    if gap <= 0:
        return 0
    if n <= 1:
        return 1
    ratio = math.log((2 * n - 2) / (2 * n - 3))
    return math.ceil(math.log(gap) / ratio) + 1


@dataclass
class SolveOutcome:
    status: str
    x: tuple | None = None
    value: int | None = None
    steps: int = 0
    certified: bool | None = None
    certificate: MembershipCertificate | None = None
    trace: list | None = None
    initial_point: tuple | None = None
    initial_value: int | None = None
    feasibility_rounds: int = 0
    evidence: dict | None = None

    @property
    def step_bound(self) -> int | None:
        if self.status != OPTIMAL or self.initial_value is None:
            return None
        return step_bound(len(self.x), self.initial_value - self.value)

    @property
    def local(self) -> bool:
        """Optimal but not certified: the point is only augmentation-stuck."""
        return self.status == OPTIMAL and not self.certified


def solve(instance: ProblemInstance, certify_objective: bool = True, record_trace: bool = False) -> SolveOutcome:
    A, objective, bounds = instance.A, instance.objective, instance.bounds
    if isinstance(objective, FormObjective) and not bounds.is_nonnegative_orthant():
        raise DomainError("form objectives are supported only with bounds l = 0, u = +inf")
    G = instance.graver if instance.graver is not None else compute_graver_basis(A)
    feas = find_feasible(A, G, instance.b, bounds)
    if feas.status != FEASIBLE:
        return SolveOutcome(feas.status, feasibility_rounds=feas.rounds, evidence=feas.evidence)
    cert = certify(objective, G) if certify_objective else None
    aug = augment_to_optimum(G, objective, feas.x, bounds, record_trace=record_trace)
    if aug.infinite:
        return SolveOutcome(INFINITE, feasibility_rounds=feas.rounds, evidence={"reason": "unbounded ray"})
    return SolveOutcome(
        OPTIMAL,
        x=aug.x,
        value=aug.value,
        steps=aug.steps,
        certified=None if cert is None else cert.verdict,
        certificate=cert,
        trace=aug.trace if record_trace else None,
        initial_point=feas.x,
        initial_value=objective.evaluate(feas.x),
        feasibility_rounds=feas.rounds,
    )


def supermodularity_delta(objective, x, terms) -> int:
    """``(f(x + Σ μ_i g_i) - f(x)) - Σ (f(x + μ_i g_i) - f(x))`` for ``terms = [(μ_i, g_i), …]``."""
    x = as_vector(x)
    terms = [(int(mu), as_vector(g)) for mu, g in terms]
    if any(mu < 0 for mu, _ in terms):
        raise PreconditionError("step multipliers must be nonnegative")
    gs = [g for _, g in terms]
    if len(set(gs)) != len(gs):
        raise PreconditionError("directions must be distinct")
    if not all(same_orthant(g, h) for g, h in itertools.combinations(gs, 2)):
        raise PreconditionError("directions must lie in a common orthant")
    if isinstance(objective, FormObjective) and any(v < 0 for v in x):
        raise PreconditionError("form supermodularity needs x >= 0")
    f = objective.evaluate
    fx = f(x)
    total = x
    single = 0
    for mu, g in terms:
        total = tuple(a + mu * c for a, c in zip(total, g))
        single += f(tuple(a + mu * c for a, c in zip(x, g))) - fx
    return (f(total) - fx) - single
