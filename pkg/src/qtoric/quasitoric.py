"""Characteristic data for quasitoric manifolds over a product of two
simplices, with validity checking, normalization, cohomology presentations,
and the kernel lattice of the associated torus embedding.

The model: a manifold over the product of an n-simplex and an m-simplex is
encoded by a pair of integer vectors, ``a`` of length m and ``b`` of length
n.  The facets of the product are the n+1 facets coming from the first factor
and the m+1 facets from the second.  The characteristic matrix assigns a
column to each facet:

* identity-first ordering (used for cohomology): columns are the n standard
  vectors for the first factor's initial facets, then the m standard vectors
  for the second factor's initial facets, then the two extra facets
  (-1, ..., -1, -a_1, ..., -a_m) and (-b_1, ..., -b_n, -1, ..., -1);
* factor-grouped ordering (used for the kernel lattice): all n+1 first-factor
  columns, then all m+1 second-factor columns.

Conversion between the two is a fixed column permutation.

Validity in closed form: a_j * b_i must lie in {0, 2} for every pair, i.e.
1 - a_j*b_i = +-1.  The brute-force route checks, at every vertex of the
product polytope, that the columns of the facets through that vertex extend
to a Z-basis; it exists so the closed form never has to be trusted alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .lattice import (
    IntMatrix,
    LatticeBasis,
    is_basis_extendable,
    kernel_basis,
    smith_normal_form,
)
from .polyring import HomogPoly, ideal_degree_lattice, linear_product

__all__ = [
    "CharPair",
    "NormalForm",
    "Presentation",
    "GradedRanks",
    "validate",
    "validate_bruteforce",
    "normalize",
    "is_generalized_bott",
    "cohomology_presentation",
    "graded_ranks",
    "kernel_lattice",
    "characteristic_matrix",
    "characteristic_matrix_grouped",
    "kernel_span_vectors",
    "h_vector",
]


@dataclass(frozen=True)
class CharPair:
    """Characteristic pair (n, m, a, b); a has length m and b has length n."""

    n: int
    m: int
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError("simplex dimensions must be at least 1")
        if len(self.a) != self.m:
            raise ValueError(f"a must have length m={self.m}")
        if len(self.b) != self.n:
            raise ValueError(f"b must have length n={self.n}")
        if not all(isinstance(x, int) for x in self.a + self.b):
            raise ValueError("entries must be integers")

    @classmethod
    def make(cls, n: int, m: int, a: Sequence[int], b: Sequence[int]) -> "CharPair":
        return cls(n, m, tuple(int(x) for x in a), tuple(int(x) for x in b))

    def to_json_dict(self) -> Dict[str, object]:
        return {"n": self.n, "m": self.m, "a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json_dict(cls, obj: object) -> "CharPair":
        if not isinstance(obj, dict):
            raise ValueError("characteristic pair must be a JSON object")
        missing = {"n", "m", "a", "b"} - set(obj)
        if missing:
            raise ValueError(f"missing keys: {sorted(missing)}")
        n, m, a, b = obj["n"], obj["m"], obj["a"], obj["b"]
        if not isinstance(n, int) or not isinstance(m, int):
            raise ValueError("n and m must be integers")
        if not isinstance(a, list) or not isinstance(b, list):
            raise ValueError("a and b must be arrays")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in a + b):
            raise ValueError("a and b must contain integers")
        return cls.make(n, m, a, b)

    def swapped(self) -> "CharPair":
        """The same data read over the factor-swapped polytope."""
        return CharPair(self.m, self.n, self.b, self.a)

    def sort_key(self) -> Tuple:
        return (self.n, self.m, self.a, self.b)


@dataclass(frozen=True)
class NormalForm:
    """Canonicalized characteristic data.

    Guarantees n >= m, entries sign-normalized, nonzero entries first within
    each vector (descending), and records which side carries the value-2
    entries.  ``orientation`` is "bott" when a or b vanishes, otherwise "a2"
    or "b2".
    """

    n: int
    m: int
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    orientation: str
    swap_applied: bool

    @property
    def char_pair(self) -> CharPair:
        return CharPair(self.n, self.m, self.a, self.b)

    @property
    def count_twos(self) -> int:
        return self.a.count(2) + self.b.count(2)

    @property
    def count_ones(self) -> int:
        return self.a.count(1) + self.b.count(1)


@dataclass(frozen=True)
class Presentation:
    """The graded ring Z[x1, x2] / <gen1, gen2> with deg gen1 = n+1 and
    deg gen2 = m+1."""

    n: int
    m: int
    gen1: HomogPoly
    gen2: HomogPoly

    def __post_init__(self) -> None:
        if self.gen1.degree != self.n + 1:
            raise ValueError("gen1 must have degree n+1")
        if self.gen2.degree != self.m + 1:
            raise ValueError("gen2 must have degree m+1")

    @property
    def gens(self) -> Tuple[HomogPoly, HomogPoly]:
        return (self.gen1, self.gen2)

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "m": self.m,
            "gen1": {"degree": self.gen1.degree, "coeffs": list(self.gen1.coeffs)},
            "gen2": {"degree": self.gen2.degree, "coeffs": list(self.gen2.coeffs)},
        }


@dataclass(frozen=True)
class GradedRanks:
    """Degreewise ranks of the quotient ring plus any torsion found.

    ``torsion[d]`` lists the invariant factors bigger than 1 in degree d; all
    empty means the additive structure is free, which is what every valid
    characteristic pair must produce.
    """

    ranks: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]

    @property
    def torsion_free(self) -> bool:
        return all(not t for t in self.torsion)


def validate(cp: CharPair) -> bool:
    """Closed-form validity: every product a_j * b_i lies in {0, 2}."""
    return all(aj * bi in (0, 2) for aj in cp.a for bi in cp.b)


def characteristic_matrix(cp: CharPair) -> IntMatrix:
    """The (n+m) x (n+m+2) characteristic matrix in identity-first column
    order: the n+m initial facets give an identity block, then come the two
    extra facets (one per simplex factor)."""
    n, m = cp.n, cp.m
    rows: List[List[int]] = []
    for i in range(n + m):
        row = [1 if j == i else 0 for j in range(n + m)]
        row.append(-1 if i < n else -cp.a[i - n])
        row.append(-cp.b[i] if i < n else -1)
        rows.append(row)
    return IntMatrix.from_rows(rows)


def characteristic_matrix_grouped(cp: CharPair) -> IntMatrix:
    """The same matrix with columns grouped by factor: the n+1 first-factor
    facets, then the m+1 second-factor facets."""
    n, m = cp.n, cp.m
    rows: List[List[int]] = []
    for i in range(n + m):
        row = [1 if j == i else 0 for j in range(n)]
        row.append(-1 if i < n else -cp.a[i - n])
        row += [1 if j == i - n else 0 for j in range(m)]
        row.append(-cp.b[i] if i < n else -1)
        rows.append(row)
    return IntMatrix.from_rows(rows)


def validate_bruteforce(cp: CharPair) -> bool:
    """Vertex-by-vertex unimodularity oracle.

    Builds the full characteristic matrix and, for every vertex of the
    product polytope (one omitted facet per factor), requires the remaining
    n+m facet columns to extend to a Z-basis.  Deliberately independent of
    the closed-form product condition.
    """
    n, m = cp.n, cp.m
    mat = characteristic_matrix(cp)
    cols = [tuple(mat.at(i, j) for i in range(n + m)) for j in range(n + m + 2)]
    factor1 = list(range(n)) + [n + m]
    factor2 = list(range(n, n + m)) + [n + m + 1]
    facet_order = factor1 + factor2
    for omit1 in factor1:
        for omit2 in factor2:
            selected = [cols[k] for k in facet_order if k != omit1 and k != omit2]
            if not is_basis_extendable(selected):
                return False
    return True


def _canonical_sort(v: Iterable[int]) -> Tuple[int, ...]:
    # nonzero entries first, each group descending; plain descending order
    # would let zeros jump ahead of negative entries
    return tuple(sorted(v, key=lambda x: (x == 0, -x)))


def _canonical_sign(v: Tuple[int, ...]) -> Tuple[int, ...]:
    plus = _canonical_sort(v)
    minus = _canonical_sort(-x for x in v)
    return max(plus, minus)


def normalize(cp: CharPair) -> NormalForm:
    """Canonical form under facet relabeling, global sign flip, and factor
    swap.

    The nonzero entries of a valid pair with both vectors nonzero all share
    one sign (each nonzero product equals 2), so the global flip is forced
    there; a vector facing a zero partner has no forced sign and the
    lexicographically larger of the two sign choices is kept.

    Raises:
        ValueError: when the pair is not valid.
    """
    if not validate(cp):
        raise ValueError("characteristic pair fails the validity condition")
    a, b = cp.a, cp.b
    nza = [x for x in a if x]
    nzb = [x for x in b if x]
    if nza and nzb:
        if nza[0] < 0:  # all nonzero entries share this sign
            a = tuple(-x for x in a)
            b = tuple(-x for x in b)
        a = _canonical_sort(a)
        b = _canonical_sort(b)
        orientation = "a2" if 2 in a else "b2"
    else:
        a = _canonical_sign(a)
        b = _canonical_sign(b)
        orientation = "bott"
    n, m = cp.n, cp.m
    swap = n < m
    if swap:
        n, m = m, n
        a, b = b, a
        if orientation != "bott":
            orientation = "b2" if orientation == "a2" else "a2"
    return NormalForm(n, m, a, b, orientation, swap)


def is_generalized_bott(nf: NormalForm) -> bool:
    """Whether the manifold is a two-stage generalized Bott tower, i.e. one of
    the two vectors vanishes.  When both are nonzero some product equals 2 and
    the data cannot be conjugated into triangular shape."""
    return nf.orientation == "bott"


def cohomology_presentation(cp: CharPair) -> Presentation:
    """Generators of the degree-2 cohomology relations:
    gen1 = x1 * prod_i (x1 + b_i x2), gen2 = x2 * prod_j (a_j x1 + x2).

    Raises:
        ValueError: when the pair is not valid.
    """
    if not validate(cp):
        raise ValueError("characteristic pair fails the validity condition")
    gen1 = linear_product((1, 0), [(1, bi) for bi in cp.b])
    gen2 = linear_product((0, 1), [(aj, 1) for aj in cp.a])
    return Presentation(cp.n, cp.m, gen1, gen2)


def h_vector(n: int, m: int) -> Tuple[int, ...]:
    """Expected degreewise ranks: the number of pairs (i, j) with i <= n,
    j <= m, i + j = d; this is the h-vector of the product of simplices."""
    return tuple(
        sum(1 for i in range(n + 1) if 0 <= d - i <= m) for d in range(n + m + 1)
    )


def graded_ranks(p: Presentation) -> GradedRanks:
    """Rank and torsion of each graded piece of the quotient ring.

    Degree d contributes (d+1) minus the rank of the ideal's degree-d
    lattice; torsion is read off the Smith diagonal of that lattice's basis.
    """
    ranks: List[int] = []
    torsion: List[Tuple[int, ...]] = []
    for d in range(p.n + p.m + 1):
        lat = ideal_degree_lattice([p.gen1, p.gen2], d)
        ranks.append(d + 1 - lat.rank)
        if lat.rank:
            diag, _, _ = smith_normal_form(
                IntMatrix.from_rows(lat.basis, cols=d + 1)
            )
            torsion.append(tuple(x for x in diag if x > 1))
        else:
            torsion.append(())
    return GradedRanks(tuple(ranks), tuple(torsion))


def kernel_span_vectors(cp: CharPair) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The two explicit kernel generators of the factor-grouped matrix, in
    coordinates (w_1..w_{n+1}, z_1..z_{m+1}):
    (1, ..., 1, a_1, ..., a_m, 0) and (b_1, ..., b_n, 0, 1, ..., 1)."""
    u = (1,) * (cp.n + 1) + cp.a + (0,)
    v = cp.b + (0,) + (1,) * (cp.m + 1)
    return u, v


def kernel_lattice(cp: CharPair) -> LatticeBasis:
    """Kernel of the factor-grouped characteristic matrix, computed by the
    generic integer-kernel routine (not from the closed-form span).

    Raises:
        ValueError: when the pair is not valid.
    """
    if not validate(cp):
        raise ValueError("characteristic pair fails the validity condition")
    return kernel_basis(characteristic_matrix_grouped(cp))


def all_char_pairs(n: int, m: int, bound: int) -> Iterable[CharPair]:
    """Every characteristic pair with entries in [-bound, bound], one
    representative per entry multiset (validity and every classification
    output are invariant under entry permutation)."""
    values = range(-bound, bound + 1)
    for a in itertools.combinations_with_replacement(sorted(values, reverse=True), m):
        for b in itertools.combinations_with_replacement(sorted(values, reverse=True), n):
            yield CharPair(n, m, tuple(a), tuple(b))
