"""Small exact linear algebra over Q and Z (matrices are lists of rows)."""
from __future__ import annotations

from fractions import Fraction


def inverse_rational(mat):
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_rational(mat, rhs):
    """Solve mat @ x = rhs over Q (any shape). Returns one solution or None."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in aug):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    return x


def leading_minors(mat):
    return [determinant([row[:k] for row in mat[:k]]) for k in range(1, len(mat) + 1)]


def determinant(mat):
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def integer_kernel(mat, ncols: int) -> list[tuple[int, ...]]:
    """Basis of {v in Z^ncols : mat @ v = 0}.

    Column operations reduce mat to lower-echelon form while the same
    operations are applied to an identity matrix; the columns of that
    unimodular transform sitting over zero columns span the kernel.
    """
    a = [list(map(int, row)) for row in mat]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(j, k, q):
        # column k -= q * column j
        for row in a:
            row[k] -= q * row[j]
        for row in u:
            row[k] -= q * row[j]

    def swap(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    lead = 0
    for row in a:
        if lead == ncols:
            break
        # euclid across columns lead.. on this row
        while True:
            nz = [k for k in range(lead, ncols) if row[k] != 0]
            if not nz:
                break
            j = min(nz, key=lambda k: abs(row[k]))
            if j != lead:
                swap(j, lead)
            done = True
            for k in range(lead + 1, ncols):
                if row[k] != 0:
                    colop(lead, k, row[k] // row[lead])
                    if row[k] != 0:
                        done = False
            if done:
                break
        if any(row[k] != 0 for k in range(lead, ncols)):
            lead += 1
    basis = [tuple(u[i][k] for i in range(ncols)) for k in range(lead, ncols)]
    return basis
