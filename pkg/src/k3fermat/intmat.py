"""Exact linear algebra over ZZ and QQ on plain list-of-lists matrices.

Small, dependency-free routines used by the lattice and covering-map code:
Bareiss determinants, Smith normal form with transform tracking, integer
kernels, rational inverses and signatures of symmetric matrices. Matrix
sizes here are tiny (rank <= 22), so clarity wins over asymptotics.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def transpose(a):
    return [list(col) for col in zip(*a)]


def det(mat):
    """Determinant of an integer matrix by the Bareiss fraction-free scheme."""
    n = len(mat)
    if n == 0:
        return 1
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(mat):
    """Return (d, u, v) with u*mat*v diagonal.

    u and v are unimodular; d is the list of diagonal entries, nonnegative,
    each dividing the next. mat is not modified.
    """
    a = [row[:] for row in mat]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    u = identity(nr)
    v = identity(nc)

    def row_op(i, j, c):  # row i += c * row j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, c):  # col i += c * col j
        for r in range(nr):
            a[r][i] += c * a[r][j]
        for r in range(nc):
            v[r][i] += c * v[r][j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in range(nr):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(nc):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def smallest_nonzero(t):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(nr, nc):
        pos = smallest_nonzero(t)
        if pos is None:
            break
        if pos[0] != t:
            row_swap(t, pos[0])
        if pos[1] != t:
            col_swap(t, pos[1])
        # clear row and column t by division; pivot may need refreshing
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, -q)
                    if a[i][t] != 0:  # remainder smaller than pivot: swap up
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, -q)
                    if a[t][j] != 0:
                        col_swap(t, j)
                        dirty = True
        # divisibility: pivot must divide every remaining entry
        fixed = True
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % a[t][t] != 0:
                    row_op(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1

    d = [a[i][i] for i in range(min(nr, nc))]
    for i, di in enumerate(d):
        if di < 0:
            d[i] = -di
            for r in range(nr):
                a[r][i] = -a[r][i]
            for r in range(nc):
                v[r][i] = -v[r][i]
    return d, u, v


def integer_kernel(mat):
    """Basis (list of length-nc vectors) for {x in ZZ^nc : mat @ x = 0}.

    The basis is saturated (spans the full kernel sublattice), a property of
    reading off the Smith-form V columns with zero elementary divisor.
    """
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    if nr == 0:
        return [[1 if i == j else 0 for i in range(nc)] for j in range(nc)]
    d, _u, v = smith_normal_form(mat)
    cols = []
    for j in range(nc):
        if j >= len(d) or d[j] == 0:
            cols.append([v[r][j] for r in range(nc)])
    return cols


def kernel_mod(mat, m):
    """Solve mat @ x = 0 over ZZ/m.

    Returns (generators, orders): generators[i] is a vector mod m of order
    orders[i], and the solution group is the direct sum of the cyclic groups
    they generate. orders follows the Smith chain, so the nontrivial entries
    are the invariant factors of the kernel group.
    """
    nc = len(mat[0])
    d, _u, v = smith_normal_form(mat)
    gens = []
    orders = []
    for j in range(nc):
        dj = d[j] if j < len(d) else 0
        g = gcd_int(dj, m)
        # x = V w with d_j w_j = 0 mod m: w_j multiple of m/g, order g
        if g > 1:
            step = m // g
            gens.append([(v[r][j] * step) % m for r in range(nc)])
            orders.append(g)
    return gens, orders


def gcd_int(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def fraction_inverse(mat):
    """Inverse of a square integer/rational matrix, as Fractions.

    Raises ValueError if singular.
    """
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def signature(gram):
    """Signature (n_plus, n_minus) of a symmetric rational matrix.

    Computed by exact symmetric (Schur-complement) reduction. Raises
    ValueError on a degenerate form.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                for j in range(n):
                    a[k][j], a[swap][j] = a[swap][j], a[k][j]
                for i in range(n):
                    a[i][k], a[i][swap] = a[i][swap], a[i][k]
            else:
                off = next((i for i in range(k + 1, n) if a[k][i] != 0), None)
                if off is None:
                    raise ValueError("degenerate symmetric form")
                # fold row/col `off` into k: new diagonal entry 2*a[k][off]
                for j in range(n):
                    a[k][j] += a[off][j]
                for i in range(n):
                    a[i][k] += a[i][off]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / p
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return pos, neg
