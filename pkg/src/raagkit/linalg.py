"""Exact linear algebra over the rationals and the integers.

Rational routines use `fractions.Fraction` throughout; integer routines do
Hermite-style row reduction with a unimodular transform, which is all the
lattice arithmetic in this package needs.
"""

from fractions import Fraction

from .errors import DomainError


# -- rational elimination ----------------------------------------------------


def rational_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rank(rows):
    m = rational_matrix(rows)
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def kernel_basis(rows, ncols):
    """Basis of {x : rows @ x = 0}, echelon-normalized for determinism."""
    m = rational_matrix(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def invertible(rows):
    n = len(rows)
    return all(len(r) == n for r in rows) and rank(rows) == n


def mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def mat_vec(a, v):
    return [sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a))]


def mat_inverse(rows):
    n = len(rows)
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rational_matrix(rows))]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if m[i][c] != 0), None)
        if piv is None:
            raise DomainError("matrix is singular")
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return [row[n:] for row in m]


# -- integer row reduction ---------------------------------------------------


def hermite_form(rows, ncols):
    """Row-style Hermite reduction: returns (H, U) with U @ rows = H.

    H is in row echelon form with positive pivots, entries above each pivot
    reduced; U is unimodular.  Zero rows of H sit at the bottom.
    """
    m = [list(map(int, r)) for r in rows]
    nrows = len(m)
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if m[i][c] != 0]
            if not nz:
                break
            if len(nz) == 1:
                i = nz[0]
                m[r], m[i] = m[i], m[r]
                u[r], u[i] = u[i], u[r]
                break
            nz.sort(key=lambda i: abs(m[i][c]))
            i, j = nz[0], nz[1]
            q = m[j][c] // m[i][c]
            m[j] = [a - q * b for a, b in zip(m[j], m[i])]
            u[j] = [a - q * b for a, b in zip(u[j], u[i])]
        if r < nrows and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[r])]
            r += 1
        if r == nrows:
            break
    return m, u


def integer_row_space_basis(rows, ncols):
    """Canonical (Hermite) basis of the lattice spanned by the rows."""
    h, _ = hermite_form(rows, ncols)
    return [row for row in h if any(row)]


def integer_left_kernel(rows, ncols):
    """Basis of {x in Z^k : x @ rows = 0}."""
    h, u = hermite_form(rows, ncols)
    return [u[i] for i in range(len(h)) if not any(h[i])]


def solve_integer_combination(basis, target):
    """Coefficients x with x @ basis = target, or None.

    `basis` must be in row echelon (Hermite) form.
    """
    t = list(map(int, target))
    coeffs = [0] * len(basis)
    for i, row in enumerate(basis):
        piv = next((c for c, x in enumerate(row) if x), None)
        if piv is None:
            continue
        if t[piv] % row[piv] != 0:
            return None
        q = t[piv] // row[piv]
        coeffs[i] = q
        if q:
            t = [a - q * b for a, b in zip(t, row)]
    if any(t):
        return None
    return coeffs
