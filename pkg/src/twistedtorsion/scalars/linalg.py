"""Exact linear algebra: fraction-free determinants, Smith normal form, lattices,
and Gaussian elimination over an arbitrary exact field."""
from .laurent import LaurentPoly

__all__ = [
    "det_fraction_free",
    "smith_normal_form",
    "int_matmul",
    "int_det",
    "lattice_contains",
    "lattice_index",
    "field_rank",
    "field_det",
    "pivot_columns",
    "identity_matrix",
]


def identity_matrix(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def det_fraction_free(m, field=None, nvars=None):
    """Determinant of a square matrix of :class:`LaurentPoly` by Bareiss elimination.

    A monomial is factored out of every row first so all entries are ordinary
    polynomials; the product of those monomials is multiplied back at the end.
    ``field``/``nvars`` are needed only for the empty matrix.
    """
    n = len(m)
    if n == 0:
        return LaurentPoly.constant(field, nvars, 1)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    proto = m[0][0]
    nv = proto.nvars
    total_shift = [0] * nv
    rows = []
    for row in m:
        nonzero = [e for e in row if e.terms]
        if not nonzero:
            return proto.zero()
        lo = [min(min(x[i] for x in e.terms) for e in nonzero) for i in range(nv)]
        for i in range(nv):
            total_shift[i] += lo[i]
        neg = tuple(-x for x in lo)
        rows.append([e.shift(neg) for e in row])

    sign = 1
    prev = proto.one()
    for k in range(n - 1):
        # pivot on the sparsest nonzero candidate to limit intermediate growth
        best = None
        for i in range(k, n):
            e = rows[i][k]
            if e.terms and (best is None or len(e.terms) < len(rows[best][k].terms)):
                best = i
        if best is None:
            return proto.zero()
        if best != k:
            rows[k], rows[best] = rows[best], rows[k]
            sign = -sign
        piv = rows[k][k]
        pivot_row = rows[k]
        for i in range(k + 1, n):
            row = rows[i]
            lead = row[k]
            for j in range(k + 1, n):
                if lead.terms and pivot_row[j].terms:
                    v = piv * row[j] - lead * pivot_row[j]
                else:
                    v = piv * row[j]
                row[j] = v.divexact(prev) if v.terms else v
            row[k] = proto.zero()
        prev = piv
    det = rows[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shift(tuple(total_shift))


# -- integer matrices ---------------------------------------------------------------

def int_matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def int_det(a):
    """Integer determinant via Bareiss (exact integer division)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(m):
    """Smith normal form of an integer matrix.

    Returns ``(U, D, V)`` with ``U * m * V == D``, ``U`` and ``V`` unimodular,
    ``D`` diagonal with nonnegative entries and ``D[i][i]`` dividing
    ``D[i+1][i+1]``.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    D = [list(map(int, r)) for r in m]
    U = identity_matrix(rows)
    V = identity_matrix(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row dst += k * row src
        if k:
            D[dst] = [x + k * y for x, y in zip(D[dst], D[src])]
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        if k:
            for r in D:
                r[dst] += k * r[src]
            for r in V:
                r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        # pick the smallest nonzero entry in the remaining block as pivot
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if D[i][j] and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # enforce divisibility against the rest of the block
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if D[i][j] % D[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


def lattice_index(generators, n):
    """Index of the lattice spanned by integer vectors in Z^n; 0 if not full rank."""
    if not generators:
        return 1 if n == 0 else 0
    # columns are generators
    mat = [[g[i] for g in generators] for i in range(n)]
    _, D, _ = smith_normal_form(mat)
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    if len([d for d in diag if d]) < n:
        return 0
    out = 1
    for d in diag[:n]:
        out *= d
    return out


def lattice_contains(generators, vector):
    """Whether ``vector`` lies in the Z-span of ``generators`` (vectors in Z^n)."""
    n = len(vector)
    if not any(vector):
        return True
    if not generators:
        return False
    mat = [[g[i] for g in generators] for i in range(n)]
    U, D, _ = smith_normal_form(mat)
    y = [sum(U[i][k] * vector[k] for k in range(n)) for i in range(n)]
    for i in range(n):
        d = D[i][i] if i < len(D[0]) else 0
        if d == 0:
            if y[i]:
                return False
        elif y[i] % d:
            return False
    return True


# -- dense matrices over an exact field (Fraction, CycloNum, RatFunc, ...) --------------

def _is_zero(x):
    return x == 0 if isinstance(x, int) else not x


def _echelon(m):
    """Row-reduce a copy of ``m``; returns (reduced rows, pivot columns, swap parity)."""
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    parity = 1
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if not _is_zero(a[i][c])), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            parity = -parity
        inv = 1 / a[r][c]
        for i in range(r + 1, rows):
            if not _is_zero(a[i][c]):
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots, parity


def field_rank(m):
    if not m or not m[0]:
        return 0
    return len(_echelon(m)[1])


def pivot_columns(m):
    """Indices of the first maximal set of linearly independent columns."""
    if not m or not m[0]:
        return []
    return _echelon(m)[1]


def field_det(m, one=1):
    """Determinant by Gaussian elimination over a field."""
    n = len(m)
    if n == 0:
        return one
    a, pivots, parity = _echelon(m)
    if len(pivots) < n:
        return a[0][0] * 0
    det = a[0][0] if parity > 0 else -a[0][0]
    for i in range(1, n):
        det = det * a[i][i]
    return det
