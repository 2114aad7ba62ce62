"""Small exact linear algebra toolkit over the rationals.

Dense matrices are lists of row lists; univariate polynomials are coefficient
lists in ascending order.  Everything is exact; nothing here ever touches a
float.  Sizes are kept small by the callers (graded pieces, diagonal blocks),
so plain Gaussian elimination is the right tool.
"""

from .scalars import QQ, rational_sqrt

__all__ = [
    "identity_matrix",
    "zero_matrix",
    "mat_mul",
    "mat_vec",
    "transpose",
    "rank",
    "nullspace",
    "rref",
    "charpoly",
    "poly_mul",
    "poly_derivative",
    "poly_gcd",
    "poly_divmod",
    "is_squarefree",
    "rational_roots",
    "IrrationalSpectrumError",
]


class IrrationalSpectrumError(ArithmeticError):
    """A characteristic polynomial turned out to have a non-rational root."""


def identity_matrix(k):
    return [[QQ(int(r == c)) for c in range(k)] for r in range(k)]


def zero_matrix(rows, cols):
    return [[QQ(0)] * cols for _ in range(rows)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[QQ(0)] * cols for _ in range(rows)]
    for r in range(rows):
        ar = a[r]
        outr = out[r]
        for m in range(inner):
            v = ar[m]
            if not v:
                continue
            bm = b[m]
            for c in range(cols):
                if bm[c]:
                    outr[c] += v * bm[c]
    return out

def mat_vec(a, v):
    return [sum((row[i] * v[i] for i in range(len(v)) if v[i]), QQ(0)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(matrix):
    """Row-reduce a copy; returns (reduced rows, pivot column list)."""
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = QQ(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(matrix):
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix, ncols=None):
    """Basis of the right kernel, one vector per free column."""
    if not matrix:
        return [
            [QQ(int(i == j)) for i in range(ncols or 0)] for j in range(ncols or 0)
        ]
    ncols = ncols or len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [QQ(0)] * ncols
        vec[f] = QQ(1)
        for r, p in enumerate(pivots):
            vec[p] = -rows[r][f]
        basis.append(vec)
    return basis


def charpoly(a):
    """Characteristic polynomial det(xI - A) by Faddeev-LeVerrier,
    ascending coefficients."""
    k = len(a)
    coeffs = [QQ(0)] * (k + 1)
    coeffs[k] = QQ(1)
    m = identity_matrix(k)
    for i in range(1, k + 1):
        am = mat_mul(a, m)
        c = -sum((am[j][j] for j in range(k)), QQ(0)) / i
        coeffs[k - i] = c
        for j in range(k):
            am[j][j] += c
        m = am
    return coeffs


# -- univariate polynomials over QQ ---------------------------------------


def poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [QQ(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return poly_trim(out)


def poly_derivative(p):
    return poly_trim([p[i] * i for i in range(1, len(p))])


def poly_divmod(p, q):
    """Exact polynomial division with remainder."""
    q = poly_trim(list(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [QQ(0)] * max(0, len(r) - len(q) + 1)
    inv = QQ(1) / q[-1]
    while len(poly_trim(r)) >= len(q):
        shift = len(r) - len(q)
        f = r[-1] * inv
        quot[shift] = f
        for i, b in enumerate(q):
            r[shift + i] -= f * b
        r.pop()
    return poly_trim(quot), poly_trim(r)


def poly_gcd(p, q):
    a, b = poly_trim(list(p)), poly_trim(list(q))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        inv = QQ(1) / a[-1]
        a = [c * inv for c in a]
    return a


def is_squarefree(p):
    g = poly_gcd(p, poly_derivative(p))
    return len(g) <= 1


def eval_poly(p, x):
    acc = QQ(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def rational_roots(p, expect_all=False):
    """All rational roots with multiplicities, found by deflation.

    For degree <= 2 factors the quadratic formula decides exactly; above that
    the rational root theorem is used.  With expect_all=True a leftover factor
    of positive degree raises IrrationalSpectrumError.
    """
    p = poly_trim(list(p))
    if not p:
        raise ValueError("zero polynomial has no well-defined roots")
    roots = []
    while len(p) > 1:
        root = _one_rational_root(p)
        if root is None:
            break
        roots.append(root)
        p, rem = poly_divmod(p, [-root, QQ(1)])
        if rem:
            raise ArithmeticError("deflation by a root left a remainder")
    if expect_all and len(p) > 1:
        raise IrrationalSpectrumError(
            f"characteristic factor of degree {len(p) - 1} has no rational root"
        )
    return roots


def _one_rational_root(p):
    if not p[0]:
        return QQ(0)
    if len(p) == 2:
        return -p[0] / p[1]
    if len(p) == 3:
        c, b, a = p
        disc = b * b - 4 * a * c
        r = rational_sqrt(disc)
        if r is None:
            return None
        return (-b + r) / (2 * a)
    # rational root theorem on the integer-cleared polynomial
    from math import gcd

    mult = 1
    for c in p:
        mult = mult * c.denominator // gcd(mult, int(c.denominator))
    ints = [int(c * mult) for c in p]
    a0, an = abs(ints[0]), abs(ints[-1])
    for num in _divisors(a0):
        for den in _divisors(an):
            if gcd(num, den) != 1:
                continue
            for cand in (QQ(num, den), QQ(-num, den)):
                if not eval_poly(p, cand):
                    return cand
    return None


def _divisors(k):
    out = []
    d = 1
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            if d != k // d:
                out.append(k // d)
        d += 1
    return sorted(out)
