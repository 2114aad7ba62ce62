"""The symmetric group S_n and the extended affine Weyl group.

An affine element is a pair (translation vector, permutation) representing
t_eta * w; the product rule is the semidirect one, with the fixed convention
"apply the rightmost factor first" shared by the whole package.

The distinguished element pi = t_{e_1} s_1 s_2 ... s_{n-1} generates, together
with s_1..s_{n-1}, the subsemigroup of elements with nonnegative translation
part; every affine element factors as pi^k * wbar with wbar in that
subsemigroup (the factorisation is not unique; see `pi_decompose` for the
canonical choice made here).
"""

from functools import total_ordering

from .polynomials import permute_exponents

__all__ = [
    "Perm",
    "AffineElem",
    "pi_element",
    "pi_decompose",
    "parse_affine",
]


@total_ordering
class Perm:
    """A permutation of [1, n] in one-line (window) notation."""

    __slots__ = ("window",)

    def __init__(self, window):
        w = tuple(window)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation window: {window}")
        self.window = w

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, n, i):
        """The simple reflection s_i swapping i and i+1."""
        return cls.transposition(n, i, i + 1)

    @classmethod
    def transposition(cls, n, i, j):
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError(f"bad transposition ({i},{j}) for n={n}")
        w = list(range(1, n + 1))
        w[i - 1], w[j - 1] = j, i
        return cls(w)

    @property
    def n(self):
        return len(self.window)

    def __call__(self, i):
        return self.window[i - 1]

    def __mul__(self, other):
        """Composition v*w with w applied first: (v*w)(i) = v(w(i))."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Perm(self.window[j - 1] for j in other.window)

    def inverse(self):
        inv = [0] * self.n
        for i, wi in enumerate(self.window):
            inv[wi - 1] = i + 1
        return Perm(inv)

    def length(self):
        """Coxeter length = number of inversions."""
        w = self.window
        return sum(
            1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
        )

    def is_identity(self):
        return all(w == i + 1 for i, w in enumerate(self.window))

    def reduced_word(self):
        """A reduced expression as a list of simple-reflection indices."""
        word = []
        w = list(self.window)
        changed = True
        while changed:
            changed = False
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    word.append(i + 1)
                    changed = True
        word.reverse()
        return word

    def left_descents(self):
        inv = self.inverse().window
        return [i + 1 for i in range(self.n - 1) if inv[i] > inv[i + 1]]

    def cycle_pair(self):
        """If the permutation is a transposition, its (i, j) with i < j."""
        moved = [i + 1 for i in range(self.n) if self.window[i] != i + 1]
        if len(moved) == 2:
            return moved[0], moved[1]
        return None

    def act(self, exps):
        return permute_exponents(self.window, exps)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.window == other.window

    def __lt__(self, other):
        return self.window < other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return f"Perm{self.window}"


class AffineElem:
    """Element t_eta * w of the extended affine Weyl group."""

    __slots__ = ("translation", "perm")

    def __init__(self, translation, perm):
        self.translation = tuple(translation)
        self.perm = perm
        if len(self.translation) != perm.n:
            raise ValueError("translation length must equal permutation rank")

    @classmethod
    def identity(cls, n):
        return cls((0,) * n, Perm.identity(n))

    @classmethod
    def from_translation(cls, eta):
        return cls(eta, Perm.identity(len(tuple(eta))))

    @classmethod
    def from_perm(cls, perm):
        return cls((0,) * perm.n, perm)

    @property
    def n(self):
        return self.perm.n

    def __mul__(self, other):
        """(t_eta v)(t_mu w) = t_{eta + v.mu} (v w)."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        moved = self.perm.act(other.translation)
        eta = tuple(a + b for a, b in zip(self.translation, moved))
        return AffineElem(eta, self.perm * other.perm)

    def inverse(self):
        pinv = self.perm.inverse()
        eta = tuple(-e for e in pinv.act(self.translation))
        return AffineElem(eta, pinv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = AffineElem.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_nonnegative(self):
        """Whether the element lies in the subsemigroup P_o x S_n."""
        return all(e >= 0 for e in self.translation)

    def __eq__(self, other):
        return (
            isinstance(other, AffineElem)
            and self.translation == other.translation
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash((self.translation, self.perm))

    def __str__(self):
        parts = []
        if any(self.translation):
            parts.append("t[" + ",".join(str(e) for e in self.translation) + "]")
        parts.extend(f"s{i}" for i in self.perm.reduced_word())
        return " ".join(parts) if parts else "e"

    def __repr__(self):
        return f"AffineElem({self})"


def pi_element(n):
    """pi = t_{e_1} s_1 s_2 ... s_{n-1}; its permutation part is i -> i+1 mod n."""
    if n < 2:
        raise ValueError("need n >= 2")
    window = list(range(2, n + 1)) + [1]
    eta = (1,) + (0,) * (n - 1)
    return AffineElem(eta, Perm(window))


def s0_element(n):
    """The affine reflection s_0 = t_{e_1 - e_n} s_{1n}."""
    eta = (1,) + (0,) * (n - 2) + (-1,)
    return AffineElem(eta, Perm.transposition(n, 1, n))


def pi_decompose(w):
    """Factor w = pi^k * wbar with wbar having nonnegative translations.

    The factorisation is not unique (pi itself has nonnegative translation);
    the canonical choice is k = n * min(0, min_i eta_i), which makes k a
    multiple of n and keeps wbar's permutation part equal to w's.
    """
    n = w.n
    m = min(0, min(w.translation))
    k = n * m
    wbar = (pi_element(n) ** (-k)) * w
    if not wbar.is_nonnegative():
        raise ArithmeticError(f"decomposition failed for {w!r}")
    return k, wbar


def parse_affine(text, n):
    """Parse products of atoms `s<i>`, `t[a,b,...]`, `pi`, `pi^k`, `e`."""
    elem = AffineElem.identity(n)
    for atom in text.split():
        if atom == "e":
            continue
        elif atom.startswith("t[") and atom.endswith("]"):
            eta = tuple(int(v) for v in atom[2:-1].split(","))
            if len(eta) != n:
                raise ValueError(f"translation {atom} has wrong length, want {n}")
            elem = elem * AffineElem.from_translation(eta)
        elif atom.startswith("pi"):
            k = 1
            if atom.startswith("pi^"):
                k = int(atom[3:])
            elif atom != "pi":
                raise ValueError(f"bad atom {atom!r}")
            elem = elem * (pi_element(n) ** k)
        elif atom.startswith("s"):
            i = int(atom[1:])
            if not 1 <= i <= n - 1:
                raise ValueError(f"simple reflection s{i} out of range for n={n}")
            elem = elem * AffineElem.from_perm(Perm.simple(n, i))
        else:
            raise ValueError(f"bad atom {atom!r}")
    return elem
