"""Small dense linear algebra over an exact field domain.

Everything here is fraction-free-agnostic Gaussian elimination; matrices are
lists of lists of domain elements.  Sizes stay small (the Macaulay matrix is
15x15, Riemann-Roch systems under 50 rows), so no pivoting strategy beyond
"first nonzero" is needed.
"""

from ..errors import DomainError


def mat_mul(dom, A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = [[dom.zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for j in range(m):
            acc = dom.zero
            for t in range(k):
                acc = acc + A[i][t] * B[t][j]
            out[i][j] = acc
    return out


def mat_vec(dom, A, v):
    return [sum_dom(dom, (A[i][t] * v[t] for t in range(len(v)))) for i in range(len(A))]


def sum_dom(dom, items):
    acc = dom.zero
    for x in items:
        acc = acc + x
    return acc


def mat_det(dom, A):
    """Determinant by elimination with exact division-free row swaps."""
    n = len(A)
    M = [row[:] for row in A]
    det = dom.one
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not dom.is_zero(M[r][col]):
                pivot = r
                break
        if pivot is None:
            return dom.zero
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            det = -det
        det = det * M[col][col]
        inv = dom.one / M[col][col]
        for r in range(col + 1, n):
            if dom.is_zero(M[r][col]):
                continue
            factor = M[r][col] * inv
            for c in range(col, n):
                M[r][c] = M[r][c] - factor * M[col][c]
    return det


def mat_inverse(dom, A):
    n = len(A)
    M = [row[:] + [dom.one if i == j else dom.zero for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not dom.is_zero(M[r][col]):
                pivot = r
                break
        if pivot is None:
            raise DomainError("singular matrix")
        M[col], M[pivot] = M[pivot], M[col]
        inv = dom.one / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r == col or dom.is_zero(M[r][col]):
                continue
            f = M[r][col]
            M[r] = [M[r][c] - f * M[col][c] for c in range(2 * n)]
    return [row[n:] for row in M]


def nullspace(dom, A):
    """Basis of the right kernel of A (rows may outnumber columns)."""
    if not A:
        return []
    rows = [row[:] for row in A]
    ncols = len(rows[0])
    pivots = {}
    r = 0
    for col in range(ncols):
        pivot = None
        for rr in range(r, len(rows)):
            if not dom.is_zero(rows[rr][col]):
                pivot = rr
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = dom.one / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for rr in range(len(rows)):
            if rr == r or dom.is_zero(rows[rr][col]):
                continue
            f = rows[rr][col]
            rows[rr] = [rows[rr][c] - f * rows[r][c] for c in range(ncols)]
        pivots[col] = r
        r += 1
        if r == len(rows):
            break
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        vec = [dom.zero] * ncols
        vec[fc] = dom.one
        for pc, pr in pivots.items():
            vec[pc] = -rows[pr][fc]
        basis.append(vec)
    return basis


def solve(dom, A, b):
    """One solution of A x = b, or raise on inconsistency."""
    n = len(A)
    ncols = len(A[0])
    M = [A[i][:] + [b[i]] for i in range(n)]
    pivots = {}
    r = 0
    for col in range(ncols):
        pivot = None
        for rr in range(r, n):
            if not dom.is_zero(M[rr][col]):
                pivot = rr
                break
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = dom.one / M[r][col]
        M[r] = [x * inv for x in M[r]]
        for rr in range(n):
            if rr == r or dom.is_zero(M[rr][col]):
                continue
            f = M[rr][col]
            M[rr] = [M[rr][c] - f * M[r][c] for c in range(ncols + 1)]
        pivots[col] = r
        r += 1
    for rr in range(r, n):
        if not dom.is_zero(M[rr][ncols]):
            raise DomainError("inconsistent linear system")
    x = [dom.zero] * ncols
    for pc, pr in pivots.items():
        x[pc] = M[pr][ncols]
    return x


def sylvester_matrix(dom, f, g):
    """Sylvester matrix of two polynomials (test oracle for resultants)."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        raise DomainError("sylvester matrix needs nonzero polynomials")
    size = m + n
    fc = f.to_dense(m + 1)
    gc = g.to_dense(n + 1)
    rows = []
    for i in range(n):
        row = [dom.zero] * size
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [dom.zero] * size
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        rows.append(row)
    return rows
