"""JSON instance and result documents.

Instance document::

    {
      "A": [[1, 1, 1]],
      "b": [3],
      "l": [0, 0, 0],               # integers, or the strings "-inf" / "inf"
      "u": ["inf", "inf", "inf"],
      "objective": {"type": "quadratic", "V": [[...]], "w": [...], "a": 0}
                 | {"type": "separable", "v": [...], "w": [...], "a": [...]}
                 | {"type": "form", "degree": 3, "terms": [{"index": [0, 0, 0], "coef": 1}]},
      "graver": [[1, -1, 0], ...]   # optional
    }

Integers may be JSON numbers or exact decimal strings such as ``"-12"``;
they are written back as JSON integers. Form indices are 0-based.
"""

from __future__ import annotations

import json
import re
import sys

from .errors import DimensionError, DomainError, InstanceError
from .forms import FormTensor
from .graver import GraverBasis
from .lattice import NEG_INF, POS_INF, ExtendedBounds, IntegerMatrix
from .objectives import FormObjective, QuadraticObjective, SeparableObjective
from .solver import INFEASIBLE, INFINITE, OPTIMAL, ProblemInstance, SolveOutcome

_DECIMAL = re.compile(r"-?[0-9]+")

EXIT_CERTIFIED = 0
EXIT_ERROR = 1
EXIT_LOCAL = 10
EXIT_INFEASIBLE = 20
EXIT_INFINITE = 21


def _int(value, path):
    if isinstance(value, bool):
        raise InstanceError(path, f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _DECIMAL.fullmatch(value):
        return int(value)
    raise InstanceError(path, f"expected an integer, got {value!r}")


def _extended(value, path):
    if value == "inf":
        return POS_INF
    if value == "-inf":
        return NEG_INF
    try:
        return _int(value, path)
    except InstanceError:
        raise InstanceError(path, f"expected an integer, \"inf\" or \"-inf\", got {value!r}") from None


def _list(value, path):
    if not isinstance(value, list):
        raise InstanceError(path, f"expected a list, got {type(value).__name__}")
    return value


def _vector(value, path, length=None):
    out = tuple(_int(v, f"{path}[{i}]") for i, v in enumerate(_list(value, path)))
    if length is not None and len(out) != length:
        raise InstanceError(path, f"expected {length} entries, got {len(out)}")
    return out


def _matrix(value, path, ncols=None):
    rows = [_vector(r, f"{path}[{i}]") for i, r in enumerate(_list(value, path))]
    width = ncols if ncols is not None else (len(rows[0]) if rows else None)
    if width is None:
        raise InstanceError(path, "matrix has no rows")
    for i, r in enumerate(rows):
        if len(r) != width:
            raise InstanceError(f"{path}[{i}]", f"expected {width} entries, got {len(r)}")
    return IntegerMatrix(rows, ncols=width)


def _bounds(value, path, n, default):
    if value is None:
        return (default,) * n
    if not isinstance(value, list):
        return (_extended(value, path),) * n
    out = tuple(_extended(v, f"{path}[{i}]") for i, v in enumerate(value))
    if len(out) != n:
        raise InstanceError(path, f"expected {n} entries, got {len(out)}")
    return out


def _require(doc, key, path):
    if not isinstance(doc, dict):
        raise InstanceError(path, "expected an object")
    if key not in doc:
        raise InstanceError(f"{path}.{key}" if path else key, "missing key")
    return doc[key]


def parse_matrix_document(doc) -> IntegerMatrix:
    """The ``A`` entry of a document (any document carrying a matrix)."""
    return _matrix(_require(doc, "A", ""), "A")


def parse_square(value, path, n) -> IntegerMatrix:
    M = _matrix(value, path, ncols=n)
    if M.nrows != n:
        raise InstanceError(path, f"expected {n} rows, got {M.nrows}")
    return M


def parse_vector(value, path, n=None) -> tuple:
    return _vector(value, path, n)


def parse_objective(doc, n: int, path: str = "objective"):
    kind = _require(doc, "type", path)
    if kind == "quadratic":
        V = parse_square(_require(doc, "V", path), f"{path}.V", n)
        w = _vector(doc.get("w", [0] * n), f"{path}.w", n)
        a = _int(doc.get("a", 0), f"{path}.a")
        return QuadraticObjective(V, w, a)
    if kind == "separable":
        v = _vector(_require(doc, "v", path), f"{path}.v", n)
        w = _vector(doc.get("w", [0] * n), f"{path}.w", n)
        a = _vector(doc.get("a", [0] * n), f"{path}.a", n)
        return SeparableObjective(v, w, a)
    if kind == "form":
        return FormObjective(parse_form(doc, n, path))
    raise InstanceError(f"{path}.type", f"unknown objective type {kind!r}")


def parse_form(doc, n: int, path: str) -> FormTensor:
    """A ``{"degree": d, "terms": [{"index": [...], "coef": c}, ...]}`` tensor; repeated indices add up."""
    d = _int(_require(doc, "degree", path), f"{path}.degree")
    if d < 1:
        raise InstanceError(f"{path}.degree", "degree must be at least 1")
    terms = []
    for i, term in enumerate(_list(_require(doc, "terms", path), f"{path}.terms")):
        tp = f"{path}.terms[{i}]"
        index = _vector(_require(term, "index", tp), f"{tp}.index", d)
        if any(not 0 <= j < n for j in index):
            raise InstanceError(f"{tp}.index", f"indices must lie in 0..{n - 1}")
        terms.append((index, _int(_require(term, "coef", tp), f"{tp}.coef")))
    try:
        return FormTensor.from_terms(n, d, terms)
    except (DimensionError, DomainError) as exc:
        raise InstanceError(path, str(exc)) from None


def serialize_form(F: FormTensor) -> dict:
    return {
        "degree": F.degree,
        "terms": [{"index": list(idx), "coef": c} for idx, c in sorted(F.terms().items())],
    }


def parse_graver(value, A: IntegerMatrix, path: str = "graver") -> GraverBasis:
    if isinstance(value, dict):
        value = _require(value, "graver", path)
        path = f"{path}.graver"
    rows = [_vector(r, f"{path}[{i}]", A.ncols) for i, r in enumerate(_list(value, path))]
    return GraverBasis(A, rows)


def parse_instance(doc) -> ProblemInstance:
    """Build a ``ProblemInstance``; malformed input raises ``InstanceError`` naming the key."""
    if not isinstance(doc, dict):
        raise InstanceError("", "instance document must be a JSON object")
    A = parse_matrix_document(doc)
    n = A.ncols
    b = _vector(_require(doc, "b", ""), "b", A.nrows)
    bounds = ExtendedBounds(_bounds(doc.get("l"), "l", n, NEG_INF), _bounds(doc.get("u"), "u", n, POS_INF))
    objective = parse_objective(_require(doc, "objective", ""), n)
    graver = parse_graver(doc["graver"], A) if "graver" in doc else None
    try:
        return ProblemInstance(A, b, bounds, objective, graver)
    except (DimensionError, DomainError) as exc:
        raise InstanceError("", str(exc)) from None


def _ext_out(v):
    if v == POS_INF:
        return "inf"
    if v == NEG_INF:
        return "-inf"
    return v


def serialize_objective(obj) -> dict:
    if isinstance(obj, QuadraticObjective):
        return {"type": "quadratic", "V": obj.V.tolist(), "w": list(obj.w), "a": obj.a}
    if isinstance(obj, SeparableObjective):
        return {"type": "separable", "v": list(obj.v), "w": list(obj.w), "a": list(obj.a)}
    if isinstance(obj, FormObjective):
        return {"type": "form", **serialize_form(obj.F)}
    raise TypeError(f"unsupported objective {type(obj).__name__}")


def serialize_instance(inst: ProblemInstance) -> dict:
    doc = {
        "A": inst.A.tolist(),
        "b": list(inst.b),
        "l": [_ext_out(v) for v in inst.bounds.lower],
        "u": [_ext_out(v) for v in inst.bounds.upper],
        "objective": serialize_objective(inst.objective),
    }
    if inst.graver is not None:
        doc["graver"] = inst.graver.tolist()
    return doc


def exit_code(outcome: SolveOutcome) -> int:
    if outcome.status == INFEASIBLE:
        return EXIT_INFEASIBLE
    if outcome.status == INFINITE:
        return EXIT_INFINITE
    if outcome.status == OPTIMAL:
        return EXIT_CERTIFIED if outcome.certified else EXIT_LOCAL
    raise ValueError(f"unknown status {outcome.status!r}")


def serialize_outcome(outcome: SolveOutcome) -> dict:
    doc = {
        "status": outcome.status,
        "certified": bool(outcome.certified),
        "x": None if outcome.x is None else list(outcome.x),
        "value": outcome.value,
        "steps": outcome.steps,
    }
    if outcome.status == OPTIMAL and outcome.certified is None:
        doc["certification"] = "skipped"
    if outcome.certified:
        doc["step_bound"] = outcome.step_bound
    if outcome.trace is not None:
        doc["trace"] = [
            {"step": t.step, "direction": list(t.direction), "mu": t.mu, "value": t.value}
            for t in outcome.trace
        ]
    if outcome.certificate is not None and not outcome.certificate.verdict:
        doc["certificate"] = outcome.certificate.to_dict()
    if outcome.evidence is not None:
        doc["evidence"] = outcome.evidence
    return doc


def load_json(path):
    """Read a JSON document from ``path`` (``-`` for stdin)."""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InstanceError("", f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def dumps(doc) -> str:
    return json.dumps(doc)
