"""Column-style Hermite normal form over the integers.

``column_hermite(A)`` returns ``H = A U`` with ``U`` unimodular and ``H`` in
lower echelon form; the trailing ``n - rank`` columns of ``U`` span the integer
kernel of ``A``. Everything is exact Python-int arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError
from .lattice import as_matrix, as_vector


def xgcd(a: int, b: int) -> tuple:
    """Return ``(g, p, q)`` with ``p*a + q*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_p, p = 1, 0
    old_q, q = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_p, p = p, old_p - quo * p
        old_q, q = q, old_q - quo * q
    if old_r < 0:
        old_r, old_p, old_q = -old_r, -old_p, -old_q
    return old_r, old_p, old_q


@dataclass(frozen=True)
class HermiteForm:
    H: tuple  # rows of A U
    U: tuple  # rows of the unimodular transform
    pivot_rows: tuple  # pivot_rows[k] is the row holding the pivot of column k

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def kernel_basis(self) -> list:
        n = len(self.U)
        return [tuple(self.U[i][j] for i in range(n)) for j in range(self.rank, n)]


def column_hermite(A) -> HermiteForm:
    A = as_matrix(A)
    m, n = A.shape
    M = [list(r) for r in A.entries]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(c, d, p, q, r, s):
        # (col_c, col_d) <- (p col_c + q col_d, r col_c + s col_d)
        for rows in (M, U):
            for row in rows:
                x, y = row[c], row[d]
                row[c], row[d] = p * x + q * y, r * x + s * y

    pivots = []
    col = 0
    for i in range(m):
        if col == n:
            break
        for j in range(col + 1, n):
            b = M[i][j]
            if b == 0:
                continue
            a = M[i][col]
            g, p, q = xgcd(a, b)
            colop(col, j, p, q, -b // g, a // g)
        piv = M[i][col]
        if piv == 0:
            continue
        if piv < 0:
            for rows in (M, U):
                for row in rows:
                    row[col] = -row[col]
            piv = -piv
        for j in range(col):
            f = M[i][j] // piv
            if f:
                colop(j, col, 1, -f, 0, 1)
        pivots.append(i)
        col += 1
    return HermiteForm(
        H=tuple(tuple(r) for r in M),
        U=tuple(tuple(r) for r in U),
        pivot_rows=tuple(pivots),
    )


def integer_kernel_basis(A) -> list:
    """A lattice basis of ``{x ∈ Zⁿ : Ax = 0}``."""
    return column_hermite(A).kernel_basis()


def matrix_rank(A) -> int:
    return column_hermite(A).rank


def hermite_solve(A, b):
    """Some ``x ∈ Zⁿ`` with ``Ax = b``, or ``None`` when no integer solution exists.

    Bounds are ignored. Solves ``H y = b`` by forward substitution on the
    echelon form and maps back with ``x = U y``.
    """
    A = as_matrix(A)
    b = as_vector(b)
    m, n = A.shape
    if len(b) != m:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {m}")
    hf = column_hermite(A)
    H, U = hf.H, hf.U
    y = [0] * n
    for k, i in enumerate(hf.pivot_rows):
        residual = b[i] - sum(H[i][j] * y[j] for j in range(k))
        if residual % H[i][k]:
            return None
        y[k] = residual // H[i][k]
    for i in range(m):
        if sum(H[i][j] * y[j] for j in range(n)) != b[i]:
            return None
    x = tuple(sum(U[i][j] * y[j] for j in range(n)) for i in range(n))
    assert A.matvec(x) == b
    return x


__all__ = [
    "HermiteForm",
    "column_hermite",
    "hermite_solve",
    "integer_kernel_basis",
    "matrix_rank",
    "xgcd",
]
