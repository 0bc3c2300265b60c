"""Even lattices and the finite quadratic forms on their discriminant groups.

Gram matrices are plain integer matrices; signatures, determinants and
Smith forms come from the exact routines in intmat. Discriminant forms are
compared by brute-force isomorphism search, which certifies genus-level
equality (signature plus discriminant form) without normal-form theory;
the groups involved here are tiny. Heights of Mordell-Weil generators and
the hyperbolic splittings behind mirror partners live here too.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .intmat import (
    det,
    fraction_inverse,
    integer_kernel,
    mat_mul,
    signature,
    smith_normal_form,
    transpose,
)

FQF_ORDER_CAP = 10 ** 4


class GramLattice:
    """Non-degenerate symmetric integer bilinear form on Z^rank."""

    __slots__ = ("gram", "rank", "signature", "determinant")

    def __init__(self, gram):
        rows = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
        d = det([list(row) for row in rows])
        if n and d == 0:
            raise ValueError("Gram matrix is degenerate")
        object.__setattr__(self, "gram", rows)
        object.__setattr__(self, "rank", n)
        object.__setattr__(self, "signature", signature(rows) if n else (0, 0))
        object.__setattr__(self, "determinant", d)

    def __setattr__(self, *a):
        raise AttributeError("GramLattice is immutable")

    def rows(self):
        return [list(row) for row in self.gram]

    def is_even(self):
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def twisted(self, sign):
        if sign not in (1, -1):
            raise ValueError("twist must be +1 or -1")
        if sign == 1:
            return self
        return GramLattice([[-x for x in row] for row in self.gram])

    def __eq__(self, other):
        return isinstance(other, GramLattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"GramLattice(rank={self.rank}, det={self.determinant}, sig={self.signature})"


def _dynkin_chain_with_branch(n):
    # A-chain on nodes 0..n-2 plus node n-1 attached to node 2; arm lengths
    # 2, 1, n-4 off the branch node give E6, E7, E8 for n = 6, 7, 8
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    for i in range(n - 2):
        g[i][i + 1] = g[i + 1][i] = -1
    g[2][n - 1] = g[n - 1][2] = -1
    return g


def standard_lattice(name, n=None, twist=1, entries=None):
    """Named Gram matrices: U2, A (needs n), E6/E7/E8, diag, explicit."""
    if name == "U2":
        g = [[0, 1], [1, 0]]
    elif name == "A":
        if n is None or n < 1:
            raise ValueError("A-series needs a rank n >= 1")
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 1):
            g[i][i + 1] = g[i + 1][i] = -1
    elif name in ("E6", "E7", "E8"):
        g = _dynkin_chain_with_branch(int(name[1]))
    elif name == "diag":
        if entries is None:
            raise ValueError("diag needs entries")
        g = [[entries[i] if i == j else 0 for j in range(len(entries))] for i in range(len(entries))]
    elif name == "explicit":
        if entries is None:
            raise ValueError("explicit needs entries")
        g = entries
    else:
        raise ValueError(f"unknown lattice name {name!r}")
    return GramLattice(g).twisted(twist)


def direct_sum(*lattices):
    total = sum(lat.rank for lat in lattices)
    g = [[0] * total for _ in range(total)]
    offset = 0
    for lat in lattices:
        for i in range(lat.rank):
            for j in range(lat.rank):
                g[offset + i][offset + j] = lat.gram[i][j]
        offset += lat.rank
    return GramLattice(g)


class FiniteQuadraticForm:
    """Quadratic form on a finite abelian group, values in Q/2Z.

    orders: invariant factors (each > 1, ascending divisibility chain).
    matrix[i][j]: generator pairings in Q/Z off the diagonal, generator
    values in Q/2Z on it.
    """

    __slots__ = ("orders", "matrix")

    def __init__(self, orders, matrix):
        orders = tuple(int(d) for d in orders)
        if any(d < 2 for d in orders):
            raise ValueError("orders must all exceed 1")
        r = len(orders)
        m = [[Fraction(matrix[i][j]) for j in range(r)] for i in range(r)]
        for i in range(r):
            for j in range(r):
                if m[i][j] != m[j][i]:
                    raise ValueError("pairing matrix must be symmetric")
                m[i][j] = m[i][j] % (2 if i == j else 1)
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in m))

    def __setattr__(self, *a):
        raise AttributeError("FiniteQuadraticForm is immutable")

    def group_order(self):
        total = 1
        for d in self.orders:
            total *= d
        return total

    def value(self, coeffs):
        """q(sum coeffs[i] * g_i) in Q/2Z."""
        total = Fraction(0)
        r = len(self.orders)
        for i in range(r):
            if coeffs[i] % self.orders[i]:
                total += coeffs[i] * coeffs[i] * self.matrix[i][i]
        for i in range(r):
            for j in range(i + 1, r):
                total += 2 * coeffs[i] * coeffs[j] * self.matrix[i][j]
        return total % 2

    def pairing(self, a, b):
        """b(x, y) in Q/Z."""
        total = Fraction(0)
        r = len(self.orders)
        for i in range(r):
            for j in range(r):
                total += a[i] * b[j] * self.matrix[i][j]
        return total % 1

    def negated(self):
        r = len(self.orders)
        return FiniteQuadraticForm(
            self.orders, [[-self.matrix[i][j] for j in range(r)] for i in range(r)]
        )

    def __eq__(self, other):
        return (
            isinstance(other, FiniteQuadraticForm)
            and self.orders == other.orders
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.orders, self.matrix))

    def __repr__(self):
        vals = ", ".join(str(self.matrix[i][i]) for i in range(len(self.orders)))
        return f"FiniteQuadraticForm(orders={self.orders}, q=({vals}))"


def discriminant_form(lattice):
    """The form x -> x^2 on dual-quotient generators read off the Smith form."""
    if not lattice.is_even():
        raise ValueError("discriminant form needs an even lattice")
    n = lattice.rank
    if n == 0:
        return FiniteQuadraticForm((), ())
    g = lattice.rows()
    d, u, _v = smith_normal_form(g)
    # u*G*v = diag(d), so G Z^n = u^{-1} diag(d) Z^n and the class of
    # u^{-1} e_i generates the i-th cyclic factor; its dual vector is
    # G^{-1} u^{-1} e_i, giving value matrix (u G u^T)^{-1}
    w = mat_mul(mat_mul(u, g), transpose(u))
    q_full = fraction_inverse(w)
    keep = [i for i in range(n) if d[i] > 1]
    orders = [d[i] for i in keep]
    matrix = [[q_full[i][j] for j in keep] for i in keep]
    total = 1
    for o in orders:
        total *= o
    if total != abs(lattice.determinant):
        raise AssertionError("group order does not match the determinant")
    return FiniteQuadraticForm(orders, matrix)


def _element_order(coeffs, orders):
    from math import gcd

    n = 1
    for c, d in zip(coeffs, orders):
        oc = d // gcd(c % d, d) if c % d else 1
        n = n * oc // gcd(n, oc)
    return n


def fqf_equivalent(q1, q2):
    """True iff some group isomorphism carries q1 to q2 (search, pruned)."""
    if q1.orders != q2.orders:
        return False
    r = len(q1.orders)
    if r == 0:
        return True
    if q1.group_order() > FQF_ORDER_CAP:
        raise ValueError(f"group order exceeds the search cap {FQF_ORDER_CAP}")
    elements = list(iter_product(*[range(d) for d in q1.orders]))
    by_value = {}
    for el in elements:
        by_value.setdefault((q2.value(el), _element_order(el, q1.orders)), []).append(el)

    def span_is_everything(images):
        seen = {tuple(0 for _ in q1.orders)}
        frontier = [tuple(0 for _ in q1.orders)]
        while frontier:
            cur = frontier.pop()
            for img in images:
                nxt = tuple((a + b) % d for a, b, d in zip(cur, img, q1.orders))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return len(seen) == q1.group_order()

    def extend(i, chosen):
        if i == r:
            return span_is_everything(chosen)
        want_value = q1.matrix[i][i] % 2
        for cand in by_value.get((want_value, q1.orders[i]), []):
            ok = True
            for j, prev in enumerate(chosen):
                if q2.pairing(prev, cand) != q1.matrix[j][i] % 1:
                    ok = False
                    break
            if ok and extend(i + 1, chosen + [cand]):
                return True
        return False

    return extend(0, [])


@dataclass(frozen=True)
class SectionData:
    """Mordell-Weil generator data: (P.O) and the fiber correction terms.

    Contributions are ("A", n, j) for a fiber with n components in a cycle
    (I_n, III, IV) met in component j, or ("E6",) / ("E7",).
    """

    pai: int
    contributions: tuple

    def __post_init__(self):
        if self.pai < 0:
            raise ValueError("(P.O) must be nonnegative")
        object.__setattr__(self, "contributions", tuple(tuple(c) for c in self.contributions))
        for c in self.contributions:
            _correction(c)


def _correction(term):
    kind = term[0]
    if kind == "E6":
        return Fraction(4, 3)
    if kind == "E7":
        return Fraction(3, 2)
    if kind == "A":
        _, n, j = term
        if n < 2 or not 1 <= j <= n - 1:
            raise ValueError(f"invalid component index in {term}")
        return Fraction(j * (n - j), n)
    raise ValueError(f"unknown correction term {term}")


def height(section):
    """h(P) = 4 + 2 (P.O) - sum of the correction terms."""
    total = Fraction(4 + 2 * section.pai)
    for term in section.contributions:
        total -= _correction(term)
    return total


FIBER_ROOT_DISC = {"II": 1, "III": 2, "IV": 3, "IV*": 3, "III*": 2, "II*": 1}


def _fiber_disc(kind):
    if kind in FIBER_ROOT_DISC:
        return FIBER_ROOT_DISC[kind]
    if kind.startswith("I") and kind.endswith("*"):
        return 4
    if kind.startswith("I"):
        return max(int(kind[1:]), 1)  # A_{n-1} has determinant n
    raise ValueError(f"unknown fiber type {kind}")


def disc_from_height(h, fibers):
    """disc(S_X) = h(P) * prod disc(F_v), reported with the hyperbolic sign."""
    total = Fraction(h)
    for kind in fibers:
        total *= _fiber_disc(kind)
    if total.denominator != 1 or total <= 0:
        raise ValueError(f"height times fiber discriminants is not a positive integer: {total}")
    return -int(total)


def nikulin_complement_check(s_lat, t_lat):
    """Genus-level complementarity inside the K3 lattice.

    Ranks must sum to 22, signatures to (3, 19), and the discriminant
    forms must satisfy q_S = -q_T.
    """
    if s_lat.rank + t_lat.rank != 22:
        return False
    sig_sum = (
        s_lat.signature[0] + t_lat.signature[0],
        s_lat.signature[1] + t_lat.signature[1],
    )
    if sig_sum != (3, 19):
        return False
    return fqf_equivalent(discriminant_form(s_lat), discriminant_form(t_lat).negated())


def _apply(gram, vec):
    return [sum(gram[i][j] * vec[j] for j in range(len(vec))) for i in range(len(gram))]


def _pair(gram, a, b):
    return sum(x * y for x, y in zip(a, _apply(gram, b)))


def _complement_of_hyperbolic(lattice, x, y):
    g = lattice.rows()
    rows = [_apply(g, x), _apply(g, y)]
    basis = integer_kernel(rows)
    n = lattice.rank
    comp = [[_pair(g, basis[i], basis[j]) for j in range(len(basis))] for i in range(len(basis))]
    if len(basis) != n - 2:
        raise AssertionError("hyperbolic complement has wrong rank")
    return GramLattice(comp)


def mirror_split(t_lat):
    """Split T = U2 + complement and return the complement, or "none".

    A definite T admits no isotropic vectors, so no splitting exists. For
    indefinite T, first look for a visible U2 block in the stated basis,
    then for the <2> + (-A2) configuration whose vectors b+a1, b+a1+a2
    span a hyperbolic plane, then (small ranks) for an isotropic pair by
    bounded search. Failure of all three raises.
    """
    g = t_lat.gram
    n = t_lat.rank
    if 0 in t_lat.signature:
        return "none"
    # visible block: rows i, j vanish outside the 2x2 hyperbolic corner
    for i in range(n):
        for j in range(i + 1, n):
            if g[i][i] or g[j][j] or abs(g[i][j]) != 1:
                continue
            if all(g[i][c] == 0 and g[j][c] == 0 for c in range(n) if c not in (i, j)):
                keep = [c for c in range(n) if c not in (i, j)]
                return GramLattice([[g[a][b] for b in keep] for a in keep])
    # b + a1, b + a1 + a2 with b^2 = 2 and <a1, a2> a (-A2) block
    for i in range(n):
        if g[i][i] != 2:
            continue
        for j in range(n):
            if j == i or g[j][j] != -2 or g[i][j] != 0:
                continue
            for k in range(n):
                if k in (i, j) or g[k][k] != -2 or g[i][k] != 0 or abs(g[j][k]) != 1:
                    continue
                s = g[j][k]
                x = [0] * n
                y = [0] * n
                x[i] = 1
                x[j] = 1
                y[i] = 1
                y[j] = 1
                y[k] = s
                if _pair(g, x, x) == 0 and _pair(g, y, y) == 0 and _pair(g, x, y) == 1:
                    return _complement_of_hyperbolic(t_lat, x, y)
    # bounded search over small vectors
    if n <= 8:
        box = list(iter_product(*[(-1, 0, 1)] * n))
        isotropic = [v for v in box if any(v) and _pair(g, v, v) == 0]
        for x in isotropic:
            for y in isotropic:
                if _pair(g, x, y) == 1:
                    return _complement_of_hyperbolic(t_lat, list(x), list(y))
    raise ValueError("no hyperbolic splitting found; lattice may need a larger search")


def embedding_check_hyperbolic():
    """Gram of (b+a1, b+a1+a2) inside <2> + (-A2) equals the hyperbolic plane."""
    g = [[2, 0, 0], [0, -2, 1], [0, 1, -2]]
    x = [1, 1, 0]
    y = [1, 1, 1]
    gram = [[_pair(g, x, x), _pair(g, x, y)], [_pair(g, y, x), _pair(g, y, y)]]
    return gram == [[0, 1], [1, 0]]
