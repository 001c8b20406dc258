"""
Integer and field linear algebra used by the relation lattices and the
invariant-hypersurface search.
"""

from typing import Any, List, Sequence, Tuple


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _combine(u: List[int], v: List[int], x: int, y: int, z: int, w: int) -> Tuple[List[int], List[int]]:
    return (
        [x * a + y * b for a, b in zip(u, v)],
        [z * a + w * b for a, b in zip(u, v)],
    )


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> List[List[int]]:
    """
    Basis of {l in Z^n : rows * l = 0}.

    Column operations with determinant 1 bring the matrix to column
    echelon form while tracking the transform; the transform columns past
    the last pivot span the kernel and form a saturated basis.
    """
    cm = [[row[j] for row in rows] for j in range(n)]
    cu = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    pivot = 0
    for r in range(len(rows)):
        if pivot == n:
            break
        for j in range(pivot + 1, n):
            b = cm[j][r]
            if b == 0:
                continue
            a = cm[pivot][r]
            g, x, y = xgcd(a, b)
            z, w = -b // g, a // g
            cm[pivot], cm[j] = _combine(cm[pivot], cm[j], x, y, z, w)
            cu[pivot], cu[j] = _combine(cu[pivot], cu[j], x, y, z, w)
        if cm[pivot][r] != 0:
            pivot += 1
    return [cu[j] for j in range(pivot, n)]


def hermite_normal_form(vectors: Sequence[Sequence[int]]) -> List[List[int]]:
    """
    Row Hermite normal form of the lattice spanned by `vectors`.

    Pivots are positive and entries above each pivot lie in [0, pivot).
    Zero rows are dropped.
    """
    A = [list(v) for v in vectors if any(v)]
    if not A:
        return []
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            g, x, y = xgcd(a, b)
            A[r], A[i] = _combine(A[r], A[i], x, y, -b // g, a // g)
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-u for u in A[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [u - q * v for u, v in zip(A[i], A[r])]
        r += 1
    return A[:r]


def pivot_columns(rows: Sequence[Sequence[int]]) -> List[int]:
    """Leading nonzero column of each echelon row."""
    return [next(i for i, c in enumerate(row) if c != 0) for row in rows]


# ============ Linear algebra over a field ============

def row_reduce(rows: Sequence[Sequence[Any]], ncols: int) -> Tuple[List[List[Any]], List[int]]:
    """
    Reduced row echelon form over an exact field.

    Entries may be Fractions or FieldElements; they only need +, -, *, /
    and truthiness.
    """
    A = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(A)) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def nullspace(rows: Sequence[Sequence[Any]], ncols: int, zero: Any, one: Any) -> List[List[Any]]:
    """Basis of the right kernel, one vector per free column."""
    reduced, pivots = row_reduce(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis: List[List[Any]] = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def rank(rows: Sequence[Sequence[Any]], ncols: int) -> int:
    return len(row_reduce(rows, ncols)[1])
