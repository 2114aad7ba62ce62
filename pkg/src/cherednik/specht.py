"""Partitions, standard Young tableaux and Young's seminormal matrix models
of the irreducible symmetric-group modules.

The seminormal form keeps every matrix entry inside the rationals (the
orthogonal form would need square roots).  In this basis the Jucys-Murphy
elements sum_{j<i} s_ji act diagonally with the tableau contents as
eigenvalues, and the invariant bilinear form is diagonal but not the
identity.
"""

from functools import cache

from .scalars import QQ

__all__ = [
    "partitions",
    "conjugate",
    "standard_tableaux",
    "tableau_contents",
    "hook_length_count",
    "SnModule",
    "specht",
]


def check_partition(lam):
    lam = tuple(lam)
    if not all(isinstance(p, int) and p > 0 for p in lam):
        raise ValueError(f"partition parts must be positive integers: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


@cache
def partitions(n):
    """All partitions of n, in reverse-lex order starting from (n,)."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return out


def conjugate(lam):
    """Transpose of the Young diagram: lam'_i = #{a : lam_a >= i}."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def _box_of(tab, value):
    for r, row in enumerate(tab):
        if value in row:
            return r, row.index(value)
    raise ValueError(f"{value} not in tableau")


def standard_tableaux(lam):
    """All standard tableaux of the given shape, as tuples of row tuples,
    in a fixed deterministic order."""
    lam = check_partition(lam)
    n = sum(lam)

    def rec(shape):
        total = sum(shape)
        if total == 0:
            return [()]
        out = []
        for r in range(len(shape)):
            if shape[r] and (r == len(shape) - 1 or shape[r] > shape[r + 1]):
                smaller = list(shape)
                smaller[r] -= 1
                if smaller[-1] == 0:
                    smaller.pop()
                for sub in rec(tuple(smaller)):
                    rows = [list(row) for row in sub]
                    while len(rows) <= r:
                        rows.append([])
                    rows[r].append(total)
                    out.append(tuple(tuple(row) for row in rows))
        return out

    tabs = rec(lam)
    tabs.sort(key=lambda t: tuple(_box_of(t, k)[0] for k in range(n, 0, -1)))
    return tabs


def tableau_contents(tab):
    """Content (column - row) of the box holding each of 1..n."""
    n = sum(len(row) for row in tab)
    out = []
    for k in range(1, n + 1):
        r, c = _box_of(tab, k)
        out.append(c - r)
    return tuple(out)


def hook_length_count(lam):
    """Number of standard tableaux by the hook length formula."""
    lam = check_partition(lam)
    from math import factorial

    conj = conjugate(lam)
    prod = 1
    for r, width in enumerate(lam):
        for c in range(width):
            prod *= (width - c) + (conj[c] - r) - 1
    return factorial(sum(lam)) // prod


class SnModule:
    """Irreducible S_n-module in seminormal form.

    Holds one exact matrix per simple reflection plus the diagonal of the
    invariant symmetric bilinear form (<w v, v'> = <v, w^{-1} v'>).
    """

    def __init__(self, lam, tableaux, simple_matrices, form_diagonal):
        self.lam = lam
        self.n = sum(lam)
        self.tableaux = tableaux
        self.dim = len(tableaux)
        self.simple_matrices = simple_matrices
        self.form_diagonal = form_diagonal

    def simple_matrix(self, i):
        return self.simple_matrices[i - 1]

    def perm_matrix(self, w):
        """Matrix of an arbitrary permutation via a reduced word."""
        mat = [[QQ(int(r == c)) for c in range(self.dim)] for r in range(self.dim)]
        for i in w.reduced_word():
            mat = _mat_mul(mat, self.simple_matrices[i - 1])
        return mat

    def jucys_murphy(self, i):
        """Matrix of sum_{j<i} s_ji (the zero matrix for i = 1)."""
        from .weyl import Perm

        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range [1,{self.n}]")
        total = [[QQ(0)] * self.dim for _ in range(self.dim)]
        for j in range(1, i):
            mat = self.perm_matrix(Perm.transposition(self.n, j, i))
            for r in range(self.dim):
                for c in range(self.dim):
                    total[r][c] += mat[r][c]
        return total

    def contents(self, t_index):
        return tableau_contents(self.tableaux[t_index])

    def __repr__(self):
        return f"SnModule(lam={self.lam}, dim={self.dim})"


def _mat_mul(a, b):
    k = len(a)
    return [
        [sum((a[r][m] * b[m][c] for m in range(k)), QQ(0)) for c in range(k)]
        for r in range(k)
    ]


def _swap_entries(tab, i):
    rows = [list(row) for row in tab]
    for row in rows:
        for idx, v in enumerate(row):
            if v == i:
                row[idx] = i + 1
            elif v == i + 1:
                row[idx] = i
    return tuple(tuple(row) for row in rows)


def specht(lam):
    """Build the seminormal model E_lam with exact rational matrices."""
    return _specht_cached(check_partition(lam))


@cache
def _specht_cached(lam):
    n = sum(lam)
    tabs = standard_tableaux(lam)
    index = {t: k for k, t in enumerate(tabs)}
    dim = len(tabs)

    matrices = []
    for i in range(1, n):
        mat = [[QQ(0)] * dim for _ in range(dim)]
        for col, tab in enumerate(tabs):
            ri, ci = _box_of(tab, i)
            rj, cj = _box_of(tab, i + 1)
            if ri == rj:
                mat[col][col] += QQ(1)
                continue
            if ci == cj:
                mat[col][col] += QQ(-1)
                continue
            d = (cj - rj) - (ci - ri)
            mat[col][col] += QQ(1, d)
            other = index[_swap_entries(tab, i)]
            # within a swap pair the tableau with d > 0 carries 1 - 1/d^2,
            # the partner carries 1; this keeps everything rational
            mat[other][col] += QQ(d * d - 1, d * d) if d > 0 else QQ(1)
        matrices.append(tuple(tuple(row) for row in mat))

    form = _invariant_form(tabs, index, n)
    return SnModule(lam, tabs, matrices, form)


def _invariant_form(tabs, index, n):
    """Diagonal of the invariant form, normalised to 1 on the first tableau.

    Propagates along admissible swaps using self-adjointness of the s_i:
    if s_i v_T has coefficient b on v_T' and s_i v_T' has coefficient c on
    v_T, then b <T',T'> = c <T,T>.
    """
    dim = len(tabs)
    form = [None] * dim
    form[0] = QQ(1)
    frontier = [0]
    while frontier:
        col = frontier.pop()
        tab = tabs[col]
        for i in range(1, n):
            ri, ci = _box_of(tab, i)
            rj, cj = _box_of(tab, i + 1)
            if ri == rj or ci == cj:
                continue
            other = index[_swap_entries(tab, i)]
            d = (cj - rj) - (ci - ri)
            b = QQ(d * d - 1, d * d) if d > 0 else QQ(1)
            c = QQ(1) if d > 0 else QQ(d * d - 1, d * d)
            value = form[col] * c / b
            if form[other] is None:
                form[other] = value
                frontier.append(other)
            elif form[other] != value:
                raise ArithmeticError("inconsistent invariant form propagation")
    if any(v is None for v in form):
        raise ArithmeticError("tableau swap graph not connected")
    return tuple(form)
