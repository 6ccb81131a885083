"""Exact dense linear algebra on raw field values (row-major lists of lists)."""

from __future__ import annotations

from .errors import DimensionMismatchError, SingularMatrixError


def identity(n, field):
    zero, one = field.zero, field.one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b, field):
    if a and len(a[0]) != len(b):
        raise DimensionMismatchError("inner dimensions differ")
    zero = field.zero
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(a, v, field):
    zero = field.zero
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def _size(x) -> int:
    # rational functions: total degree; rationals: bit length
    num = getattr(x, "num", None)
    if num is not None:
        return num.degree() + x.den.degree()
    return x.numerator.bit_length() + x.denominator.bit_length()


def _pivot_row(m, col, start):
    """Row of the smallest nonzero entry in ``col``, to limit coefficient growth."""
    best, row = None, None
    for r in range(start, len(m)):
        x = m[r][col]
        if x:
            size = _size(x)
            if best is None or size < best:
                best, row = size, r
    return row


def det(a, field):
    """Determinant by Gaussian elimination over the field."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatchError("determinant of a non-square matrix")
    m = [list(row) for row in a]
    d = field.one
    for c in range(n):
        p = _pivot_row(m, c, c)
        if p is None:
            return field.zero
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        piv = m[c][c]
        d = d * piv
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / piv
                row_c = m[c]
                m[r] = [x - f * y if y else x for x, y in zip(m[r], row_c)]
    return d


def solve(a, b, field):
    """Solve ``a x = b`` for square invertible ``a``; ``b`` is a matrix (list of rows)."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise DimensionMismatchError("solve needs a square system")
    k = len(b[0]) if b else 0
    m = [list(a[i]) + list(b[i]) for i in range(n)]
    for c in range(n):
        p = _pivot_row(m, c, c)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        if p != c:
            m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        inv = field.one / piv
        m[c] = [x * inv if x else x for x in m[c]]
        row_c = m[c]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y if y else x for x, y in zip(m[r], row_c)]
    return [row[n:n + k] for row in m]


def inverse(a, field):
    return solve(a, identity(len(a), field), field)


def rank(a, field) -> int:
    if not a:
        return 0
    m = [list(row) for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        p = _pivot_row(m, c, r)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, rows):
            if m[i][c]:
                f = m[i][c] / piv
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def nullspace(a, field):
    """Basis (list of column vectors) of ``{x : a x = 0}`` via reduced row echelon form."""
    if not a:
        return []
    m = [list(row) for row in a]
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        p = _pivot_row(m, c, r)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [field.zero] * cols
        vec[fcol] = field.one
        for i, pc in enumerate(pivots):
            if m[i][fcol]:
                vec[pc] = -m[i][fcol]
        basis.append(vec)
    return basis


def is_identity(a, field) -> bool:
    one, zero = field.one, field.zero
    return all(
        (x == one) if i == j else (x == zero) for i, row in enumerate(a) for j, x in enumerate(row)
    )
