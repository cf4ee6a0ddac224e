"""Exact integer linear algebra: Hermite and Smith normal forms, kernels,
lattice comparison, and unimodular-extendability tests.

Everything here runs on arbitrary-precision Python integers; intermediate
entries in a normal-form computation can grow far beyond the input magnitude,
so no fixed-width arithmetic is ever used.

Conventions
-----------
* Matrices are dense and row-major (:class:`IntMatrix`).
* Hermite normal form (HNF) is row-style: ``U @ m = H`` with ``U`` unimodular,
  pivot entries positive, pivots moving strictly right as you go down, zero
  rows at the bottom, and every entry above a pivot reduced into
  ``[0, pivot)``.  This makes the nonzero rows of ``H`` a canonical basis of
  the row lattice, so two sublattices of Z^d are equal exactly when their
  canonical bases are identical tuples.
* Smith normal form diagonal entries are nonnegative and each divides the
  next (zeros, which every integer divides, sit at the end).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

__all__ = [
    "IntMatrix",
    "LatticeBasis",
    "hermite_normal_form",
    "smith_normal_form",
    "kernel_basis",
    "lattice_equal",
    "is_basis_extendable",
    "lattice_from_generators",
    "determinant",
]


@dataclass(frozen=True)
class IntMatrix:
    """A dense integer matrix with row-major entry storage.

    Attributes:
        rows: number of rows (>= 0).
        cols: number of columns (>= 0).
        entries: flat tuple of length rows*cols, row-major.
    """

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if not all(isinstance(e, int) for e in self.entries):
            raise ValueError("entries must be integers")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Build a matrix from an iterable of equal-length rows.

        Args:
            rows: row vectors.
            cols: required column count when ``rows`` is empty (a 0 x cols
                matrix is a legitimate value, e.g. an empty generating set).
        """
        row_list = [tuple(int(x) for x in r) for r in rows]
        if row_list:
            width = len(row_list[0])
            if any(len(r) != width for r in row_list):
                raise ValueError("rows have unequal lengths")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row length")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            width = cols
        flat = tuple(x for r in row_list for x in r)
        return cls(len(row_list), width, flat)

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        return cls(k, k, tuple(1 if i == j else 0 for i in range(k) for j in range(k)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.row(i) for i in range(self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        """Exact matrix product self @ other."""
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        a = self.to_rows()
        bt = other.transpose().to_rows()
        flat = tuple(
            sum(x * y for x, y in zip(ar, bc)) for ar in a for bc in bt
        )
        return IntMatrix(self.rows, other.cols, flat)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return self.mul(other)


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of Z^d held in canonical form.

    ``basis`` is the tuple of nonzero rows of the Hermite normal form of any
    generating set, so equal lattices always have identical representations.
    An empty tuple is the zero lattice.
    """

    ambient_dim: int
    basis: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.ambient_dim < 0:
            raise ValueError("ambient dimension must be nonnegative")
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector length differs from ambient dimension")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, vec: Sequence[int]) -> bool:
        """Exact membership test against the canonical basis.

        Reduces ``vec`` greedily by the HNF rows (whose pivot columns strictly
        increase); membership holds iff the reduction reaches zero.
        """
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length differs from ambient dimension")
        v = [int(x) for x in vec]
        for row in self.basis:
            p = _pivot_index(row)
            q, rem = divmod(v[p], row[p])
            if rem != 0:
                # a pivot position can only be cleared by a multiple of its row
                return False
            if q != 0:
                for j in range(p, self.ambient_dim):
                    v[j] -= q * row[j]
        return all(x == 0 for x in v)


def _pivot_index(row: Sequence[int]) -> int:
    for j, x in enumerate(row):
        if x != 0:
            return j
    raise ValueError("zero row has no pivot")


def _hnf_rows(rows: List[List[int]], track: List[List[int]] | None = None) -> None:
    """In-place row Hermite reduction of ``rows``; mirrors every operation on
    ``track`` when given (used to accumulate the unimodular transform).

    Termination: within each column the minimum nonzero absolute value over
    the working rows strictly decreases under the remainder step, so each
    column stabilizes after finitely many sweeps.
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    top = 0
    for col in range(nc):
        if top == nr:
            break
        # Euclidean sweep: shrink all entries in this column below `top`
        # against the current minimal one until a single nonzero survives.
        while True:
            piv = -1
            for i in range(top, nr):
                if rows[i][col] != 0 and (piv == -1 or abs(rows[i][col]) < abs(rows[piv][col])):
                    piv = i
            if piv == -1:
                break
            others = [i for i in range(top, nr) if i != piv and rows[i][col] != 0]
            if not others:
                if piv != top:
                    rows[top], rows[piv] = rows[piv], rows[top]
                    if track is not None:
                        track[top], track[piv] = track[piv], track[top]
                break
            p = rows[piv][col]
            for i in others:
                q = rows[i][col] // p  # floor division keeps remainders small
                if q:
                    ri, rp = rows[i], rows[piv]
                    for j in range(nc):
                        ri[j] -= q * rp[j]
                    if track is not None:
                        ti, tp = track[i], track[piv]
                        for j in range(len(ti)):
                            ti[j] -= q * tp[j]
        if top < nr and rows[top][col] != 0:
            if rows[top][col] < 0:
                rows[top] = [-x for x in rows[top]]
                if track is not None:
                    track[top] = [-x for x in track[top]]
            # reduce entries above the pivot into [0, pivot)
            p = rows[top][col]
            for i in range(top):
                q = rows[i][col] // p
                if q:
                    ri, rp = rows[i], rows[top]
                    for j in range(nc):
                        ri[j] -= q * rp[j]
                    if track is not None:
                        ti, tp = track[i], track[top]
                        for j in range(len(ti)):
                            ti[j] -= q * tp[j]
            top += 1


def hermite_normal_form(m: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Args:
        m: any integer matrix.

    Returns:
        (H, U) with U unimodular, U @ m = H, pivots positive and strictly
        right-moving, entries above each pivot reduced into [0, pivot), zero
        rows collected at the bottom.
    """
    rows = [list(r) for r in m.to_rows()]
    track = [[1 if i == j else 0 for j in range(m.rows)] for i in range(m.rows)]
    if rows:
        _hnf_rows(rows, track)
    h = IntMatrix.from_rows(rows, cols=m.cols)
    u = IntMatrix.from_rows(track, cols=m.rows)
    return h, u


def determinant(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.to_rows()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), -1)
            if swap == -1:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai = a[i]
            ak = a[k]
            for j in range(k + 1, n):
                ai[j] = (akk * ai[j] - aik * ak[j]) // prev
            ai[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def _snf_inplace(a: List[List[int]], left: List[List[int]], right: List[List[int]]) -> None:
    """Diagonalize ``a`` by unimodular row/column operations, mirrored on
    ``left`` (rows) and ``right`` (columns), enforcing the divisibility chain.
    """
    nr = len(a)
    nc = len(a[0]) if nr else 0

    def row_op(i: int, k: int, q: int) -> None:  # row i -= q * row k
        ai, ak = a[i], a[k]
        for j in range(nc):
            ai[j] -= q * ak[j]
        li, lk = left[i], left[k]
        for j in range(nr):
            li[j] -= q * lk[j]

    def col_op(j: int, k: int, q: int) -> None:  # col j -= q * col k
        for i in range(nr):
            a[i][j] -= q * a[i][k]
        for i in range(nc):
            right[i][j] -= q * right[i][k]

    def row_swap(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        left[i], left[k] = left[k], left[i]

    def col_swap(j: int, k: int) -> None:
        for i in range(nr):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(nc):
            right[i][j], right[i][k] = right[i][k], right[i][j]

    t = 0
    while t < min(nr, nc):
        # locate a pivot of minimal absolute value in the trailing block
        piv = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t] != 0:  # remainder became the smaller pivot
                        row_swap(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j] != 0:
                        col_swap(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility: the pivot must divide every trailing entry
            offender = None
            p = a[t][t]
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # fold the offending row into row t
        if a[t][t] < 0:
            for j in range(nc):
                a[t][j] = -a[t][j]
            for j in range(nr):
                left[t][j] = -left[t][j]
        t += 1


def smith_normal_form(m: IntMatrix) -> Tuple[Tuple[int, ...], IntMatrix, IntMatrix]:
    """Smith normal form.

    Args:
        m: any integer matrix.

    Returns:
        (diag, left, right) with left @ m @ right diagonal, ``diag`` of length
        min(rows, cols) with nonnegative entries each dividing the next, and
        left/right unimodular.
    """
    a = [list(r) for r in m.to_rows()]
    left = [[1 if i == j else 0 for j in range(m.rows)] for i in range(m.rows)]
    right = [[1 if i == j else 0 for j in range(m.cols)] for i in range(m.cols)]
    if a:
        _snf_inplace(a, left, right)
    k = min(m.rows, m.cols)
    diag = tuple(a[i][i] if a else 0 for i in range(k))
    return diag, IntMatrix.from_rows(left, cols=m.rows), IntMatrix.from_rows(right, cols=m.cols)


def lattice_from_generators(ambient_dim: int, vectors: Iterable[Sequence[int]]) -> LatticeBasis:
    """Canonicalize a generating set into a :class:`LatticeBasis`."""
    gens = [list(v) for v in vectors]
    for v in gens:
        if len(v) != ambient_dim:
            raise ValueError("generator length differs from ambient dimension")
    if not gens:
        return LatticeBasis(ambient_dim, ())
    h, _ = hermite_normal_form(IntMatrix.from_rows(gens, cols=ambient_dim))
    rows = [r for r in h.to_rows() if any(x != 0 for x in r)]
    return LatticeBasis(ambient_dim, tuple(rows))


def kernel_basis(m: IntMatrix) -> LatticeBasis:
    """Basis of the full integer kernel {v in Z^cols : m @ v = 0}.

    The kernel of an integer matrix is automatically saturated (if k*v maps
    to zero for k != 0 then so does v), and the construction below preserves
    that: row-reduce the block matrix [m^T | I]; the rows whose left block
    vanishes carry, in the right block, a basis of the left kernel of m^T,
    which is the kernel of m.  Those rows sit inside a unimodular transform,
    so they span the kernel primitively, and a final HNF canonicalizes them.
    """
    mt = m.transpose()
    aug = [list(mt.row(i)) + [1 if j == i else 0 for j in range(m.cols)] for i in range(m.cols)]
    if aug:
        _hnf_rows(aug)
    gens = [row[m.rows :] for row in aug if all(x == 0 for x in row[: m.rows])]
    return lattice_from_generators(m.cols, gens)


def lattice_equal(a: LatticeBasis, b: LatticeBasis) -> bool:
    """Whether two canonically stored sublattices coincide."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return a.basis == b.basis


def is_basis_extendable(vectors: Sequence[Sequence[int]]) -> bool:
    """Whether the given vectors extend to a Z-basis of the ambient Z^d.

    True exactly when the vectors are independent and the Smith diagonal of
    the matrix they form is all ones.  The square case short-circuits through
    a Bareiss determinant, which the brute-force validity oracle leans on.
    """
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if not vecs:
        return True
    d = len(vecs[0])
    if any(len(v) != d for v in vecs):
        raise ValueError("vectors have unequal lengths")
    k = len(vecs)
    if k > d:
        return False
    m = IntMatrix.from_rows(vecs, cols=d)
    if k == d:
        return determinant(m) in (1, -1)
    diag, _, _ = smith_normal_form(m)
    return all(x == 1 for x in diag)
