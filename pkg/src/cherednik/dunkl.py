"""The polynomial representation: Dunkl operators and their trigonometric
analogues acting on F[x_1..x_n].

Y_i = kappa d/dx_i + sum_{j != i} (1 - s_ij)/(x_i - x_j)   lowers degree by 1,
U_i = x_i Y_i + sum_{j < i} s_ji                            preserves degree,

and an arbitrary PBW element acts word by word: the y part via iterated Y,
then the permutation, then multiplication by the x monomial.
"""

from .polynomials import Poly, divided_difference
from .weyl import Perm

__all__ = ["dunkl_y", "dunkl_u", "apply_rat"]


def dunkl_y(params, i, f):
    """Apply the Dunkl operator Y_i; exact, degree drops by one (or to 0)."""
    if f.laurent:
        raise ValueError("Dunkl operators act on the polynomial ring")
    if f.nvars != params.n:
        raise ValueError("rank mismatch")
    out = f.derivative(i).scaled(params.kappa)
    for j in range(1, params.n + 1):
        if j != i:
            out = out + divided_difference(f, i, j)
    return out


def dunkl_u(params, i, f):
    """Apply the trigonometric (Cherednik-Dunkl) operator U_i."""
    out = Poly.variable(params.n, i) * dunkl_y(params, i, f)
    for j in range(1, i):
        out = out + f.permuted(Perm.transposition(params.n, j, i))
    return out


def apply_rat(elem, f):
    """Act by a rational-algebra element on a polynomial.

    Word by word: iterated Y for the y part, then the permutation, then the
    x monomial; linear in both arguments.
    """
    alg = elem.algebra
    if alg.flavor != "rat":
        raise ValueError("apply_rat expects a rational-algebra element")
    if f.nvars != alg.n:
        raise ValueError("rank mismatch")
    total = Poly.zero(alg.n)
    for (alpha, window, beta), coeff in elem.terms.items():
        g = f
        for i, b in enumerate(beta):
            for _ in range(b):
                g = dunkl_y(alg.params, i + 1, g)
                if g.is_zero():
                    break
        if g.is_zero():
            continue
        g = g.permuted(window)
        g = g * Poly.monomial(alpha, coeff)
        total = total + g
    return total
