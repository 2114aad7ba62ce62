"""Maps between the three algebras: the embedding of the rational algebra
into the trigonometric one, its inverse on the localization, the
two-parameter family of embeddings of the degenerate affine Hecke
subalgebra, and the sign twist onto the opposite-parameter algebra.

On generators:

* iota:   w -> w,  x_i -> x_i,  y_i -> x_i^{-1} (u_i - sum_{j<i} s_ji)
* jmath:  w -> w,  x_i -> x_i,  u_i -> x_i y_i + sum_{j<i} s_ji
* iota_ab: w -> w, u_i -> a x_i + b y_i + x_i y_i + sum_{j<i} s_ji
* sigma:  s_i -> -s_i, x_i -> (-1)^{n-1} x_i, u_i -> -u_i   (kappa -> -kappa)

sigma is applied word-by-word through the sign rule
(-1)^{(n-1)|alpha| + l(w) + |beta|}; agreement with the generator values is a
test, not an assumption.
"""

from dataclasses import dataclass, field

from .scalars import QQ
from .weyl import Perm
from .pbw import (
    LocalizedCherednik,
    RationalCherednik,
    TrigCherednik,
)

__all__ = [
    "iota",
    "jmath",
    "iota_ab",
    "sigma",
    "homomorphism_check",
    "rat_to_localized",
    "MorphismReport",
]


def _iota_y_image(trig, i):
    img = trig.u(i)
    for j in range(1, i):
        img = img - trig.sij(j, i)
    return trig.x(i, -1) * img


def _jmath_u_image(loc, i):
    img = loc.x(i) * loc.y(i)
    for j in range(1, i):
        img = img + loc.sij(j, i)
    return img


def iota(elem):
    """Embed a rational-algebra element into the trigonometric algebra."""
    src = elem.algebra
    if src.flavor not in ("rat", "locrat"):
        raise ValueError("iota expects a rational (or localized) element")
    trig = TrigCherednik(src.n, src.kappa)
    images = [_iota_y_image(trig, i) for i in range(1, src.n + 1)]
    out = trig.zero()
    for (alpha, window, beta), coeff in elem.terms.items():
        word = trig.xmono(alpha) * trig.perm(Perm(window))
        for i, b in enumerate(beta):
            for _ in range(b):
                word = word * images[i]
        out = out + word.scaled(coeff)
    return out


def jmath(elem):
    """Inverse of iota: trigonometric -> localized rational."""
    src = elem.algebra
    if src.flavor != "trig":
        raise ValueError("jmath expects a trigonometric element")
    loc = LocalizedCherednik(src.n, src.kappa)
    images = [_jmath_u_image(loc, i) for i in range(1, src.n + 1)]
    out = loc.zero()
    for (alpha, window, beta), coeff in elem.terms.items():
        word = loc.xmono(alpha) * loc.perm(Perm(window))
        for i, b in enumerate(beta):
            for _ in range(b):
                word = word * images[i]
        out = out + word.scaled(coeff)
    return out


def iota_ab(a, b, elem):
    """The (a, b) embedding of the degenerate affine Hecke subalgebra
    (elements with no x part) into the rational algebra."""
    src = elem.algebra
    if src.flavor != "trig":
        raise ValueError("iota_ab expects a trigonometric element")
    if any(any(alpha) for alpha, _, _ in elem.terms):
        raise ValueError(
            "iota_ab is defined on the degenerate affine Hecke subalgebra only "
            "(element has a nonzero x part)"
        )
    a, b = QQ(a), QQ(b)
    rat = RationalCherednik(src.n, src.kappa)
    images = []
    for i in range(1, src.n + 1):
        img = rat.x(i).scaled(a) + rat.y(i).scaled(b) + rat.x(i) * rat.y(i)
        for j in range(1, i):
            img = img + rat.sij(j, i)
        images.append(img)
    out = rat.zero()
    for (alpha, window, beta), coeff in elem.terms.items():
        word = rat.perm(Perm(window))
        for i, bb in enumerate(beta):
            for _ in range(bb):
                word = word * images[i]
        out = out + word.scaled(coeff)
    return out


def sigma(elem):
    """Sign twist onto the trigonometric algebra with negated parameter."""
    src = elem.algebra
    if src.flavor != "trig":
        raise ValueError("sigma expects a trigonometric element")
    target = TrigCherednik(src.n, -src.kappa)
    n = src.n
    terms = {}
    for (alpha, window, beta), coeff in elem.terms.items():
        sign = (n - 1) * sum(alpha) + Perm(window).length() + sum(beta)
        terms[(alpha, window, beta)] = -coeff if sign % 2 else coeff
    return target.element(terms)


def rat_to_localized(elem):
    """Tautological inclusion of the rational algebra into its localization."""
    if elem.algebra.flavor != "rat":
        raise ValueError("expected a rational-algebra element")
    loc = LocalizedCherednik(elem.algebra.n, elem.algebra.kappa)
    return loc.element(dict(elem.terms))


@dataclass
class MorphismReport:
    """Per-relation outcome of a homomorphism check."""

    map_name: str
    n: int
    kappa: object
    results: list = field(default_factory=list)
    first_failure: str = None

    @property
    def valid(self):
        return all(ok for _, ok in self.results)

    def record(self, relation_id, ok):
        self.results.append((relation_id, ok))
        if not ok and self.first_failure is None:
            self.first_failure = relation_id

    def summary(self):
        bad = [rid for rid, ok in self.results if not ok]
        status = "valid" if not bad else f"FAILED: {', '.join(bad)}"
        return (
            f"{self.map_name} (n={self.n}, kappa={self.kappa}): "
            f"{len(self.results)} relations, {status}"
        )


def _rational_relations(n, kappa, gen_x, gen_y, gen_s, gen_sij, one):
    """Defining relations of the rational algebra as (id, lhs, rhs) pairs,
    written through supplied generator images."""
    rels = []
    for i in range(1, n):
        for j in range(1, n + 1):
            si = gen_s(i)
            sij_j = i + 1 if j == i else (i if j == i + 1 else j)
            rels.append(
                (f"s{i}*y{j}", si * gen_y(j), gen_y(sij_j) * si)
            )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = gen_y(i) * gen_x(j) - gen_x(j) * gen_y(i)
            if i == j:
                rhs = one.scaled(kappa)
                for k in range(1, n + 1):
                    if k != i:
                        rhs = rhs + gen_sij(min(i, k), max(i, k))
            else:
                rhs = -gen_sij(min(i, j), max(i, j))
            rels.append((f"[y{i},x{j}]", lhs, rhs))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append((f"[y{i},y{j}]", gen_y(i) * gen_y(j), gen_y(j) * gen_y(i)))
    for i in range(1, n):
        for j in range(1, n + 1):
            si = gen_s(i)
            sij_j = i + 1 if j == i else (i if j == i + 1 else j)
            rels.append((f"s{i}*x{j}", si * gen_x(j), gen_x(sij_j) * si))
    return rels


def _trig_relations(n, kappa, gen_x, gen_u, gen_s, gen_sij, one):
    rels = []
    for i in range(1, n):
        si = gen_s(i)
        rels.append((f"s{i}*u{i}", si * gen_u(i), gen_u(i + 1) * si - one))
        rels.append((f"s{i}*u{i + 1}", si * gen_u(i + 1), gen_u(i) * si + one))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append((f"s{i}*u{j}", si * gen_u(j), gen_u(j) * si))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = gen_u(i) * gen_x(j) - gen_x(j) * gen_u(i)
            if i == j:
                rhs = gen_x(i).scaled(kappa)
                for k in range(1, i):
                    rhs = rhs + gen_x(k) * gen_sij(k, i)
                for k in range(i + 1, n + 1):
                    rhs = rhs + gen_x(i) * gen_sij(i, k)
            elif i > j:
                rhs = -(gen_x(j) * gen_sij(j, i))
            else:
                rhs = -(gen_x(i) * gen_sij(i, j))
            rels.append((f"[u{i},x{j}]", lhs, rhs))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append((f"[u{i},u{j}]", gen_u(i) * gen_u(j), gen_u(j) * gen_u(i)))
    return rels


def _affine_hecke_relations(n, gen_u, gen_s, one):
    rels = []
    for i in range(1, n):
        si = gen_s(i)
        rels.append((f"s{i}^2", si * si, one))
        rels.append((f"s{i}*u{i}", si * gen_u(i), gen_u(i + 1) * si - one))
        rels.append((f"s{i}*u{i + 1}", si * gen_u(i + 1), gen_u(i) * si + one))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append((f"s{i}*u{j}", si * gen_u(j), gen_u(j) * si))
    for i in range(1, n - 1):
        a, b = gen_s(i), gen_s(i + 1)
        rels.append((f"braid s{i}s{i + 1}", a * b * a, b * a * b))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append((f"[u{i},u{j}]", gen_u(i) * gen_u(j), gen_u(j) * gen_u(i)))
    return rels


def homomorphism_check(map_id, params, a=None, b=None):
    """Map both sides of every defining relation of the source algebra and
    compare normal forms in the target.

    map_id is one of "iota", "jmath", "sigma", "iota_ab" (the latter takes
    the parameters a, b).
    """
    n, kappa = params.n, params.kappa
    report = MorphismReport(map_id, n, kappa)

    if map_id == "iota":
        trig = TrigCherednik(n, kappa)
        images = [_iota_y_image(trig, i) for i in range(1, n + 1)]
        rels = _rational_relations(
            n,
            kappa,
            gen_x=lambda i: trig.x(i),
            gen_y=lambda i: images[i - 1],
            gen_s=trig.s,
            gen_sij=trig.sij,
            one=trig.one(),
        )
    elif map_id == "jmath":
        loc = LocalizedCherednik(n, kappa)
        images = [_jmath_u_image(loc, i) for i in range(1, n + 1)]
        rels = _trig_relations(
            n,
            kappa,
            gen_x=lambda i: loc.x(i),
            gen_u=lambda i: images[i - 1],
            gen_s=loc.s,
            gen_sij=loc.sij,
            one=loc.one(),
        )
    elif map_id == "sigma":
        target = TrigCherednik(n, -kappa)
        sign_x = QQ(1) if (n - 1) % 2 == 0 else QQ(-1)
        rels = _trig_relations(
            n,
            kappa,
            gen_x=lambda i: target.x(i).scaled(sign_x),
            gen_u=lambda i: -target.u(i),
            gen_s=lambda i: -target.s(i),
            gen_sij=lambda i, j: target.sij(i, j).scaled(
                QQ(-1) if Perm.transposition(n, i, j).length() % 2 else QQ(1)
            ),
            one=target.one(),
        )
    elif map_id == "iota_ab":
        if a is None or b is None:
            raise ValueError("iota_ab needs parameters a and b")
        rat = RationalCherednik(n, kappa)
        a, b = QQ(a), QQ(b)
        images = []
        for i in range(1, n + 1):
            img = rat.x(i).scaled(a) + rat.y(i).scaled(b) + rat.x(i) * rat.y(i)
            for j in range(1, i):
                img = img + rat.sij(j, i)
            images.append(img)
        rels = _affine_hecke_relations(
            n,
            gen_u=lambda i: images[i - 1],
            gen_s=rat.s,
            one=rat.one(),
        )
    else:
        raise ValueError(f"unknown map {map_id!r}")

    for rid, lhs, rhs in rels:
        report.record(rid, lhs == rhs)
    return report
