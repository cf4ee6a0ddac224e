"""Homogeneous bivariate integer polynomials and truncated univariate
products.

A homogeneous polynomial of degree d in x1, x2 is stored as the vector of its
d+1 coefficients indexed by the x2-exponent: index i holds the coefficient of
x1^(d-i) * x2^i.  This convention is fixed once here and used everywhere; the
two ring generators produced elsewhere are symmetric in the variables and
would otherwise be easy to transpose.

Truncated polynomials live in Z[x]/x^(ell+1) and keep exactly ell+1
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .lattice import IntMatrix, LatticeBasis, lattice_from_generators

__all__ = [
    "HomogPoly",
    "TruncPoly",
    "homog_mul",
    "homog_add",
    "homog_scale",
    "linear_product",
    "substitute_linear",
    "trunc_product_identity",
    "ideal_degree_lattice",
]


@dataclass(frozen=True)
class HomogPoly:
    """Homogeneous polynomial in Z[x1, x2].

    The zero polynomial is representable at any degree (all-zero coefficient
    vector); the degree tag is part of the value so that degree-piece
    bookkeeping stays total.
    """

    degree: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient vector must have length degree + 1")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "HomogPoly":
        c = tuple(int(x) for x in coeffs)
        return cls(len(c) - 1, c)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class TruncPoly:
    """Element of Z[x]/x^(ell+1); coeffs[i] is the x^i coefficient."""

    trunc: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("coefficient vector must have length trunc + 1")

    @classmethod
    def one(cls, trunc: int) -> "TruncPoly":
        return cls(trunc, (1,) + (0,) * trunc)

    def mul(self, other: "TruncPoly") -> "TruncPoly":
        if self.trunc != other.trunc:
            raise ValueError("mixed truncation orders")
        ell = self.trunc
        out = [0] * (ell + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(0, ell + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncPoly(ell, tuple(out))

    def mul_linear(self, c: int) -> "TruncPoly":
        """Multiply by (1 + c*x), the only factor shape needed here."""
        ell = self.trunc
        out = list(self.coeffs)
        if c:
            for i in range(ell, 0, -1):
                out[i] += c * out[i - 1]
        return TruncPoly(ell, tuple(out))


def homog_mul(p: HomogPoly, q: HomogPoly) -> HomogPoly:
    """Exact product; degree adds, coefficients convolve."""
    d = p.degree + q.degree
    out = [0] * (d + 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            if b:
                out[i + j] += a * b
    return HomogPoly(d, tuple(out))


def homog_add(p: HomogPoly, q: HomogPoly) -> HomogPoly:
    if p.degree != q.degree:
        raise ValueError("cannot add polynomials of different degrees")
    return HomogPoly(p.degree, tuple(a + b for a, b in zip(p.coeffs, q.coeffs)))


def homog_scale(c: int, p: HomogPoly) -> HomogPoly:
    return HomogPoly(p.degree, tuple(c * a for a in p.coeffs))


def linear_product(lead: Tuple[int, int], factors: Sequence[Tuple[int, int]]) -> HomogPoly:
    """Expand (c*x1 + d*x2) * prod_i (c_i*x1 + d_i*x2).

    Args:
        lead: coefficient pair (c, d) of the leading linear form.
        factors: coefficient pairs of the remaining linear forms.

    Returns:
        HomogPoly of degree 1 + len(factors).
    """
    acc = HomogPoly(1, (int(lead[0]), int(lead[1])))
    for c, d in factors:
        acc = homog_mul(acc, HomogPoly(1, (int(c), int(d))))
    return acc


def substitute_linear(p: HomogPoly, g: IntMatrix) -> HomogPoly:
    """Apply the linear substitution x1 -> g11*y1 + g12*y2, x2 -> g21*y1 + g22*y2.

    The result is homogeneous of the same degree in y1, y2 and is returned in
    the same coefficient convention.
    """
    if g.rows != 2 or g.cols != 2:
        raise ValueError("substitution matrix must be 2x2")
    d = p.degree
    row1 = HomogPoly(1, (g.at(0, 0), g.at(0, 1)))
    row2 = HomogPoly(1, (g.at(1, 0), g.at(1, 1)))
    # powers of the two substituted variables, degree 0..d each
    pow1 = [HomogPoly(0, (1,))]
    pow2 = [HomogPoly(0, (1,))]
    for _ in range(d):
        pow1.append(homog_mul(pow1[-1], row1))
        pow2.append(homog_mul(pow2[-1], row2))
    out = HomogPoly(d, (0,) * (d + 1))
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        term = homog_scale(a, homog_mul(pow1[d - i], pow2[i]))
        out = homog_add(out, term)
    return out


def trunc_product_identity(
    u: Sequence[int], u_prime: Sequence[int], eps: int, w: int, ell: int
) -> bool:
    """Check prod_i (1 + u_i x) = (1 + eps*w*x) * prod_i (1 + eps*(u'_i + w)*x)
    in Z[x]/x^(ell+1).

    Args:
        u, u_prime: integer vectors of one common length k >= 1.
        eps: +1 or -1.
        w: the integer shift.
        ell: truncation order, >= 1.
    """
    if len(u) != len(u_prime) or len(u) < 1:
        raise ValueError("vectors must share a positive length")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if ell < 1:
        raise ValueError("truncation order must be at least 1")
    lhs = TruncPoly.one(ell)
    for ui in u:
        lhs = lhs.mul_linear(int(ui))
    rhs = TruncPoly.one(ell).mul_linear(eps * w)
    for vi in u_prime:
        rhs = rhs.mul_linear(eps * (int(vi) + w))
    return lhs.coeffs == rhs.coeffs


def ideal_degree_lattice(gens: Sequence[HomogPoly], d: int) -> LatticeBasis:
    """Degree-d piece of the homogeneous ideal generated by ``gens``, as a
    sublattice of the coefficient space Z^(d+1).

    The piece is spanned by the monomial shifts x1^alpha x2^beta * g over all
    generators g with alpha + beta + deg(g) = d.  Multiplying by x1^alpha
    x2^beta moves the coefficient of x1^(deg-i) x2^i to index i + beta, so a
    shift is just the generator's vector embedded at offset beta.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    vectors = []
    for g in gens:
        gap = d - g.degree
        if gap < 0:
            continue
        for beta in range(gap + 1):
            vec = [0] * (d + 1)
            vec[beta : beta + g.degree + 1] = g.coeffs
            vectors.append(vec)
    return lattice_from_generators(d + 1, vectors)
