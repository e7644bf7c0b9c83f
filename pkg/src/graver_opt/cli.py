"""Command-line interface: ``graver-opt <command> ...``.

Commands read one JSON document (``-`` for stdin) and write JSON to stdout.

* ``solve PATH``: solve an instance; the exit code reports the status
  (0 certified optimum, 10 uncertified local optimum, 20 infeasible,
  21 infinite, 1 error).
* ``graver PATH``: Graver basis of the matrix ``A``.
* ``cone PATH``: dual-cone membership of ``V`` (quadratic), ``v`` (diagonal)
  or ``form`` (degree-d) with respect to ``A``.
* ``characterize PATH``: index witnessing strict containment of the
  nonnegative orthant in the dual diagonal cone, from the circuits of ``A``.
* ``fixture-subset-sum V... --v0 N``: the quadratic instance
  ``min (v⊤x − v0)²`` over ``x ∈ {0,1}ⁿ``.
"""

from __future__ import annotations

import argparse
import sys

from . import instance as io
from .cones import characterize_diagonal_strictness, in_dual_diagonal_cone, in_dual_quadratic_cone, in_K_d
from .errors import GraverOptError, InstanceError
from .graver import brute_force_graver, compute_graver_basis, compute_matroid
from .lattice import IntegerMatrix
from .solver import ProblemInstance, solve


def _basis_for(doc, A):
    if "graver" in doc:
        return io.parse_graver(doc["graver"], A)
    return compute_graver_basis(A)


def cmd_solve(args) -> int:
    doc = io.load_json(args.path)
    inst = io.parse_instance(doc)
    if args.graver is not None:
        G = io.parse_graver(io.load_json(args.graver), inst.A, path=args.graver)
        inst = ProblemInstance(inst.A, inst.b, inst.bounds, inst.objective, G)
    outcome = solve(inst, certify_objective=not args.no_certify, record_trace=args.trace)
    print(io.dumps(io.serialize_outcome(outcome)))
    return io.exit_code(outcome)


def cmd_graver(args) -> int:
    A = io.parse_matrix_document(io.load_json(args.path))
    if args.oracle == "brute":
        G = brute_force_graver(A, args.radius)
    else:
        G = compute_graver_basis(A)
    print(io.dumps({"A": A.tolist(), "graver": G.tolist()}))
    return 0


_CHECK_KEYS = {"quadratic": "V", "diagonal": "v", "kd": "form"}


def cmd_cone(args) -> int:
    doc = io.load_json(args.path)
    A = io.parse_matrix_document(doc)
    n = A.ncols
    check = args.check
    if check is None:
        present = [c for c, key in _CHECK_KEYS.items() if isinstance(doc, dict) and key in doc]
        if len(present) != 1:
            raise InstanceError("", 'need exactly one of "V", "v", "form" (or pass --check)')
        check = present[0]
    key = _CHECK_KEYS[check]
    if key not in doc:
        raise InstanceError(key, "missing key")
    G = _basis_for(doc, A)
    if check == "quadratic":
        cert = in_dual_quadratic_cone(io.parse_square(doc[key], key, n), G)
    elif check == "diagonal":
        cert = in_dual_diagonal_cone(io.parse_vector(doc[key], key, n), G)
    else:
        cert = in_K_d(io.parse_form(doc[key], n, key), G)
    print(io.dumps({"check": check, **cert.to_dict()}))
    return 0


def cmd_characterize(args) -> int:
    A = io.parse_matrix_document(io.load_json(args.path))
    M = compute_matroid(A)
    k = characterize_diagonal_strictness(M)
    print(io.dumps({"strict": k is not None, "witness": k, "circuits": M.sorted_circuits()}))
    return 0


def subset_sum_fixture(v, v0) -> dict:
    """Instance document for ``min (v⊤x − v0)²`` over ``x ∈ {0,1}ⁿ`` with ``A = 0``."""
    v = [int(c) for c in v]
    if any(c < 0 for c in v):
        raise ValueError("subset-sum weights must be nonnegative")
    n = len(v)
    return {
        "A": IntegerMatrix([[0] * n], ncols=n).tolist(),
        "b": [0],
        "l": [0] * n,
        "u": [1] * n,
        "objective": {
            "type": "quadratic",
            "V": [[vi * vj for vj in v] for vi in v],
            "w": [-2 * v0 * vi for vi in v],
            "a": v0 * v0,
        },
    }


def cmd_fixture_subset_sum(args) -> int:
    print(io.dumps(subset_sum_fixture(args.v, args.v0)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graver-opt", description="Graver-basis integer minimization.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("path", help="instance JSON file, or - for stdin")
    p.add_argument("--graver", metavar="FILE", help="precomputed Graver basis (output of the graver command)")
    p.add_argument("--trace", action="store_true", help="include every augmentation step")
    p.add_argument("--no-certify", action="store_true", help="skip the dual-cone optimality test")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("graver", help="Graver basis of a matrix")
    p.add_argument("path")
    p.add_argument("--oracle", choices=("completion", "brute"), default="completion")
    p.add_argument("--radius", type=int, default=3, help="box radius for --oracle brute")
    p.set_defaults(func=cmd_graver)

    p = sub.add_parser("cone", help="dual-cone membership test")
    p.add_argument("path")
    p.add_argument("--check", choices=tuple(_CHECK_KEYS))
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("characterize", help="strictness witness for the dual diagonal cone")
    p.add_argument("path")
    p.set_defaults(func=cmd_characterize)

    p = sub.add_parser("fixture-subset-sum", help="emit a subset-sum hardness instance")
    p.add_argument("v", nargs="*", type=int)
    p.add_argument("--v0", type=int, required=True)
    p.set_defaults(func=cmd_fixture_subset_sum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraverOptError, ValueError, OSError) as exc:
        print(f"graver-opt {args.command}: {exc}", file=sys.stderr)
        return io.EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
