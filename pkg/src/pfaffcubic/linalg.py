"""Exact dense linear algebra over a NumberField.

Matrices are lists of rows of AlgebraicNumber.  Everything is fraction-free
in the sense that no rounding ever happens; pivots are the first nonzero
entry in column order, which makes every result reproducible.
"""
from .errors import SingularMatrix


def _copy(rows):
    return [list(r) for r in rows]


def det(rows, field):
    """Determinant by Gaussian elimination."""
    a = _copy(rows)
    n = len(a)
    result = field.one
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        p = a[col][col]
        result = result * p
        inv = p.inverse()
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f = f * inv
                row_r, row_c = a[r], a[col]
                for c in range(col + 1, n):
                    if row_c[c]:
                        row_r[c] = row_r[c] - f * row_c[c]
    return result


def rref(rows, field):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    a = _copy(rows)
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    return a, pivots


def rank(rows, field):
    return len(rref(rows, field)[1])


def kernel(rows, field, ncols=None):
    """Basis of the right kernel in the reduced convention.

    One vector per free column, in column order, with a 1 in the free
    position and zeros in the other free positions.
    """
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs, field):
    """Particular solution of rows * x = rhs with free variables set to zero.

    Returns None when the system is inconsistent.
    """
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for i, p in enumerate(pivots):
        x[p] = R[i][ncols]
    return x


def inverse(rows, field):
    n = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(rows)]
    R, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in R]


def matmul(a, b, field):
    nb = len(b[0])
    out = []
    for row in a:
        out_row = []
        for j in range(nb):
            acc = field.zero
            for k, x in enumerate(row):
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(a, v, field):
    out = []
    for row in a:
        acc = field.zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def identity(n, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
