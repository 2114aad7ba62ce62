"""Sparse multivariate polynomials and Laurent polynomials with exact
rational coefficients.

A polynomial in ``x_1 .. x_n`` is stored as a dict mapping exponent tuples to
nonzero scalars.  Two contexts exist: ordinary polynomials (all exponents
>= 0) and Laurent polynomials (any sign); they never mix silently.

Besides ring arithmetic this module provides the two operations everything
else is built on: the natural symmetric-group action ``x_i -> x_{w(i)}`` and
the divided difference ``(f - s_ij f) / (x_i - x_j)``, both exact.
"""

from .scalars import QQ, format_rational, parse_rational

__all__ = [
    "Poly",
    "ContextMismatchError",
    "permute_exponents",
    "divided_difference",
    "monomials_of_degree",
    "grlex_key",
    "triangular_key",
]


class ContextMismatchError(ValueError):
    """Raised when mixing polynomials of different rank or context."""


def permute_exponents(window, exps):
    """Apply ``x_i -> x_{w(i)}`` on an exponent vector.

    ``window`` is the one-line notation (w(1), ..., w(n)).  The exponent of
    x_i moves to slot w(i), i.e. the result beta satisfies beta[w(i)-1] =
    exps[i-1]; this makes (vw).f = v.(w.f) with "apply rightmost first".
    """
    out = [0] * len(exps)
    for i, wi in enumerate(window):
        out[wi - 1] = exps[i]
    return tuple(out)


def grlex_key(exps):
    """Graded lexicographic sort key (total degree, then lex)."""
    return (sum(exps), exps)


def triangular_key(exps):
    """Total order refining dominance, used for spectral triangularity.

    Sort key: degree, then the decreasing rearrangement compared
    lexicographically (so dominance-lower orbits come first), then within an
    orbit the composition with the larger value at the leftmost difference
    comes first.
    """
    return (
        sum(exps),
        tuple(sorted(exps, reverse=True)),
        tuple(-e for e in exps),
    )


def monomials_of_degree(n, d):
    """All exponent tuples of length n with entries >= 0 summing to d,
    in the triangular order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, n)
    out.sort(key=triangular_key)
    return out


class Poly:
    """Sparse exact polynomial or Laurent polynomial in n variables."""

    __slots__ = ("nvars", "laurent", "terms")

    def __init__(self, nvars, terms=None, laurent=False):
        self.nvars = nvars
        self.laurent = laurent
        clean = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} has wrong length, want {nvars}")
            if not laurent and any(e < 0 for e in exps):
                raise ContextMismatchError(
                    f"negative exponent {exps} in polynomial context"
                )
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars, laurent=False):
        return cls(nvars, {}, laurent)

    @classmethod
    def constant(cls, nvars, value, laurent=False):
        return cls(nvars, {(0,) * nvars: QQ(value)}, laurent)

    @classmethod
    def one(cls, nvars, laurent=False):
        return cls.constant(nvars, 1, laurent)

    @classmethod
    def variable(cls, nvars, i, power=1, laurent=False):
        """The monomial x_i^power (i is 1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range [1,{nvars}]")
        exps = [0] * nvars
        exps[i - 1] = power
        return cls(nvars, {tuple(exps): QQ(1)}, laurent)

    @classmethod
    def monomial(cls, exps, coeff=1, laurent=False):
        return cls(len(exps), {tuple(exps): QQ(coeff)}, laurent)

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other):
        if self.nvars != other.nvars:
            raise ContextMismatchError(
                f"rank mismatch: {self.nvars} vs {other.nvars}"
            )
        if self.laurent != other.laurent:
            raise ContextMismatchError("cannot mix polynomial and Laurent contexts")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other, self.laurent)
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Poly(self.nvars, terms, self.laurent)

    __radd__ = __add__

    def __neg__(self):
        return Poly(
            self.nvars, {e: -c for e, c in self.terms.items()}, self.laurent
        )

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other, self.laurent)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scaled(other)
        self._check_compatible(other)
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                s = terms.get(key, 0) + ca * cb
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
        return Poly(self.nvars, terms, self.laurent)

    __rmul__ = __mul__

    def scaled(self, scalar):
        c = QQ(scalar)
        if not c:
            return Poly.zero(self.nvars, self.laurent)
        return Poly(
            self.nvars, {e: c * v for e, v in self.terms.items()}, self.laurent
        )

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = Poly.one(self.nvars, self.laurent)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if self.is_zero() and other == 0:
                return True
            return self.terms == {(0,) * self.nvars: other}
        return (
            self.nvars == other.nvars
            and self.laurent == other.laurent
            and self.terms == other.terms
        )

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), QQ(0))

    def degree(self):
        """Maximal total degree of a term; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if d is None:
            return len(degs) == 1
        return degs == {d}

    def graded_piece(self, d):
        return Poly(
            self.nvars,
            {e: c for e, c in self.terms.items() if sum(e) == d},
            self.laurent,
        )

    # -- operators ---------------------------------------------------------

    def permuted(self, w):
        """The action of a permutation w (Perm or one-line tuple)."""
        window = getattr(w, "window", w)
        return Poly(
            self.nvars,
            {permute_exponents(window, e): c for e, c in self.terms.items()},
            self.laurent,
        )

    def derivative(self, i):
        """Partial derivative with respect to x_i (1-based)."""
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i - 1]
            if e == 0:
                continue
            key = exps[: i - 1] + (e - 1,) + exps[i:]
            terms[key] = terms.get(key, 0) + c * e
        return Poly(self.nvars, terms, self.laurent)

    # -- text form ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=grlex_key, reverse=True):
            parts.append((exps, self.terms[exps]))
        return format_terms(parts)

    def __repr__(self):
        return f"Poly({self})"


def format_terms(pairs):
    """Render (exponents, coefficient) pairs in the order given."""
    chunks = []
    for exps, coeff in pairs:
        factors = [
            f"x{i + 1}" + (f"^{e}" if e != 1 else "")
            for i, e in enumerate(exps)
            if e != 0
        ]
        mag = coeff if coeff > 0 else -coeff
        body = "*".join(factors)
        if not factors:
            body = format_rational(mag)
        elif mag != 1:
            body = format_rational(mag) + "*" + body
        chunks.append(("- " if coeff < 0 else "+ ") + body)
    text = " ".join(chunks)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def parse_poly(text, nvars, laurent=False):
    """Parse the term grammar ``3/2*x1^2*x2^-1 + x1 - 2``."""
    s = text.replace("-", "+-").replace("^+-", "^-")
    total = Poly.zero(nvars, laurent)
    for raw in s.split("+"):
        term = raw.strip()
        if not term:
            continue
        total = total + _parse_term(term, nvars, laurent)
    return total


def _parse_term(term, nvars, laurent):
    neg = False
    while term.startswith("-"):
        neg = not neg
        term = term[1:].strip()
    coeff = QQ(1)
    exps = [0] * nvars
    for factor in term.split("*"):
        f = factor.strip()
        if not f:
            raise ValueError(f"empty factor in term {term!r}")
        if f[0] in "xX":
            var, _, power = f[1:].partition("^")
            i = int(var)
            if not 1 <= i <= nvars:
                raise ValueError(f"variable x{i} out of range [1,{nvars}]")
            exps[i - 1] += int(power) if power else 1
        else:
            coeff = coeff * parse_rational(f)
    if neg:
        coeff = -coeff
    return Poly(nvars, {tuple(exps): coeff}, laurent)


def divided_difference(f, i, j):
    """Exact divided difference (f - s_ij f) / (x_i - x_j).

    Defined for polynomial context only; the division is always exact because
    f - s_ij f is antisymmetric in x_i, x_j.
    """
    if i == j:
        raise ValueError("divided difference needs i != j")
    if f.laurent:
        raise ContextMismatchError("divided difference needs polynomial context")
    a, b = i - 1, j - 1
    terms = {}
    for exps, c in f.terms.items():
        ei, ej = exps[a], exps[b]
        if ei == ej:
            continue
        # (x_i^p x_j^q - x_i^q x_j^p)/(x_i - x_j) = sum of the geometric
        # ladder between the two monomials; sign tracks which of p, q leads.
        if ei > ej:
            lo, hi, sign = ej, ei, c
        else:
            lo, hi, sign = ei, ej, -c
        base = list(exps)
        for t in range(lo, hi):
            base[a], base[b] = t, lo + hi - 1 - t
            key = tuple(base)
            s = terms.get(key, 0) + sign
            if s:
                terms[key] = s
            else:
                del terms[key]
    return Poly(f.nvars, terms, False)
