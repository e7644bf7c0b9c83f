"""Exact integer minimization with Graver bases.

Quadratic, separable-quadratic and homogeneous polynomial objectives are
minimized over ``{x ∈ Zⁿ : Ax = b, l <= x <= u}`` by greedy Graver
augmentation; dual-cone tests decide when the result is provably optimal.
"""

from .cones import (
    ConeGeneratorSet,
    MembershipCertificate,
    characterize_diagonal_strictness,
    degree_generators,
    diagonal_generators,
    in_dual_diagonal_cone,
    in_dual_quadratic_cone,
    in_K_d,
    quadratic_generators,
)
from .errors import (
    BasisTooLargeError,
    BudgetExceededError,
    DimensionError,
    DomainError,
    GraverOptError,
    InstanceError,
    PreconditionError,
)
from .forms import FormTensor
from .graver import (
    CircuitSet,
    GraverBasis,
    Matroid,
    brute_force_graver,
    compute_circuits,
    compute_graver_basis,
    compute_matroid,
    conformal_decompose,
)
from .hermite import hermite_solve, integer_kernel_basis
from .instance import parse_instance, serialize_instance, serialize_outcome
from .lattice import NEG_INF, POS_INF, ExtendedBounds, IntegerMatrix
from .linesearch import StepResult, max_step, minimize_form_on_ray, minimize_quadratic_on_ray, sturm_root_count
from .objectives import FormObjective, QuadraticObjective, SeparableObjective
from .polynomial import UnivariatePolynomial
from .solver import (
    FEASIBLE,
    INFEASIBLE,
    INFINITE,
    OPTIMAL,
    ProblemInstance,
    SolveOutcome,
    augment_to_optimum,
    certify,
    check_finiteness,
    find_feasible,
    solve,
    step_bound,
    supermodularity_delta,
)

__version__ = "0.1.0"
