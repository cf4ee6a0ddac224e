"""Independent verification machinery for the classifier.

Two oracles, both exact:

* ``ring_iso_search``: brute-force search for a graded ring isomorphism
  between two cohomology presentations.  It enumerates 2x2 integer matrices g
  with determinant +-1 and bounded entries, substitutes the generators, and
  compares the two ideals degree by degree through their coefficient
  lattices.  A homogeneous ideal generated in degrees at most D is determined
  by its pieces up to D, so checking degrees 1..max(n+1, m+1) is a complete
  equality test for a given g.  A negative answer is only "within bound":
  the closed-form classifier stays authoritative and the search acts as a
  falsifier.
* ``witness_check``: verifies equivariance certificates.  A homeomorphism
  candidate given by a signed permutation of the moment-angle coordinates
  intertwines the two free torus actions exactly when S * U = U' * T, where
  U and U' hold the weight columns of the two subtorus inclusions and T
  reparametrizes the acting torus on exponents.  ``builtin_witness``
  reconstructs the three families of certificates behind the classifier's
  equivalences (repeat-fill, fold-r, fold-s) so the identity can be rechecked
  by plain matrix multiplication.

The witness formalism covers monomial maps only.  Homeomorphisms that mix
coordinates instead of permuting them cannot be expressed as a
MonomialWitness; their classification consequences are carried by the
classify module, and no verification is faked for them here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .lattice import IntMatrix, determinant, lattice_equal
from .polyring import ideal_degree_lattice, substitute_linear
from .quasitoric import CharPair, Presentation, kernel_span_vectors

__all__ = [
    "IsoVerdict",
    "MonomialWitness",
    "ring_iso_search",
    "weight_matrix",
    "witness_check",
    "builtin_witness",
    "WITNESS_FAMILIES",
]

WITNESS_FAMILIES = ("repeat-fill", "fold-r", "fold-s")


@dataclass(frozen=True)
class IsoVerdict:
    """Outcome of the bounded isomorphism search.

    Either a witness matrix was found, or no candidate within the entry
    bound worked.  The negative case is explicitly bound-qualified.
    """

    found: bool
    matrix: Optional[IntMatrix] = None
    bound: Optional[int] = None

    @classmethod
    def found_matrix(cls, g: IntMatrix) -> "IsoVerdict":
        return cls(found=True, matrix=g)

    @classmethod
    def none_within(cls, bound: int) -> "IsoVerdict":
        return cls(found=False, bound=bound)

    def to_json_dict(self) -> Dict[str, object]:
        if self.found:
            return {
                "found": True,
                "matrix": [list(row) for row in self.matrix.to_rows()],
            }
        return {"found": False, "bound": self.bound}


@dataclass(frozen=True)
class MonomialWitness:
    """An equivariance certificate: a signed permutation s of the
    moment-angle coordinates together with a 2x2 unimodular exponent matrix
    t reparametrizing the acting torus.

    Raises:
        ValueError: when s is not a signed permutation or |det t| != 1.
    """

    s: IntMatrix
    t: IntMatrix

    def __post_init__(self):
        s = self.s
        if s.rows != s.cols:
            raise ValueError("signed permutation must be square")
        for i in range(s.rows):
            nonzero = [x for x in s.row(i) if x]
            if len(nonzero) != 1 or nonzero[0] not in (1, -1):
                raise ValueError("each row needs exactly one entry of +-1")
        for j in range(s.cols):
            count = sum(1 for i in range(s.rows) if s.at(i, j))
            if count != 1:
                raise ValueError("each column needs exactly one nonzero entry")
        if self.t.rows != 2 or self.t.cols != 2:
            raise ValueError("torus reparametrization must be 2x2")
        if determinant(self.t) not in (1, -1):
            raise ValueError("torus reparametrization must be unimodular")

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "s": [list(row) for row in self.s.to_rows()],
            "t": [list(row) for row in self.t.to_rows()],
        }


def _candidate_matrices(bound: int) -> List[IntMatrix]:
    """All 2x2 matrices with |entries| <= bound and det +-1, identity first,
    then ascending by (max |entry|, flattened entries); g and -g are the same
    substitution up to sign, so only the copy whose first nonzero entry is
    positive is kept."""
    seen = set()
    rest = []
    values = range(-bound, bound + 1)
    for g11 in values:
        for g12 in values:
            for g21 in values:
                for g22 in values:
                    flat = (g11, g12, g21, g22)
                    if g11 * g22 - g12 * g21 not in (1, -1):
                        continue
                    first = next(x for x in flat if x)
                    if first < 0:
                        flat = tuple(-x for x in flat)
                    if flat in seen:
                        continue
                    seen.add(flat)
                    rest.append(flat)
    if bound < 1:
        return []
    identity = (1, 0, 0, 1)
    rest.sort(key=lambda f: (max(abs(x) for x in f), f))
    ordered = [identity] + [f for f in rest if f != identity]
    return [IntMatrix.from_rows([[f[0], f[1]], [f[2], f[3]]]) for f in ordered]


def ring_iso_search(p: Presentation, q: Presentation, bound: int = 3) -> IsoVerdict:
    """Search for a degree-preserving ring isomorphism between two
    presentations, over substitutions with entries bounded by ``bound``.

    The first working candidate in the fixed total order is returned, so the
    result is deterministic regardless of any internal parallel split.

    Raises:
        ValueError: when the generator degree multisets disagree (no graded
            isomorphism can exist, and degreewise comparison would be
            meaningless).
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    p_degrees = sorted((p.gen1.degree, p.gen2.degree))
    q_degrees = sorted((q.gen1.degree, q.gen2.degree))
    if p_degrees != q_degrees:
        raise ValueError("generator degree multisets differ")
    dmax = p_degrees[-1]
    target = {d: ideal_degree_lattice(q.gens, d) for d in range(1, dmax + 1)}
    for g in _candidate_matrices(bound):
        image = [substitute_linear(gen, g) for gen in p.gens]
        # cheap necessary condition before the degreewise lattice runs:
        # each substituted generator must at least lie in the target ideal
        if not all(
            target[gen.degree].contains(gen.coeffs) for gen in image
        ):
            continue
        ok = True
        for d in range(1, dmax + 1):
            if not lattice_equal(ideal_degree_lattice(image, d), target[d]):
                ok = False
                break
        if ok:
            return IsoVerdict.found_matrix(g)
    return IsoVerdict.none_within(bound)


def weight_matrix(cp: CharPair) -> IntMatrix:
    """The (n+m+2) x 2 exponent matrix of the free subtorus action: row i
    holds the weights of the two acting circle factors on moment-angle
    coordinate i."""
    u, v = kernel_span_vectors(cp)
    return IntMatrix.from_rows([[u[i], v[i]] for i in range(len(u))])


def witness_check(u: IntMatrix, u_prime: IntMatrix, witness: MonomialWitness) -> bool:
    """True iff s*u = u'*t: the signed permutation intertwines the two
    subtorus actions through the reparametrization t.

    Raises:
        ValueError: on dimension mismatch.
    """
    if u.cols != 2 or u_prime.cols != 2:
        raise ValueError("weight matrices must have two columns")
    if u.rows != u_prime.rows:
        raise ValueError("weight matrices must have equal height")
    if witness.s.rows != u.rows:
        raise ValueError("signed permutation size must match coordinate count")
    return witness.s.mul(u) == u_prime.mul(witness.t)


def _signed_permutation(size: int, mapping: Dict[int, Tuple[int, int]]) -> IntMatrix:
    """Build a signed permutation from {output index: (source index, sign)},
    identity on unmapped indices."""
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        j, sign = mapping.get(i, (i, 1))
        rows[i][j] = sign
    return IntMatrix.from_rows(rows)


def builtin_witness(
    family: str,
    n: int,
    m: Optional[int] = None,
    s: Optional[int] = None,
    r: Optional[int] = None,
    a: Optional[int] = None,
    b: Optional[int] = None,
) -> Tuple[IntMatrix, IntMatrix, MonomialWitness]:
    """Reconstruct one of the three certificate families as
    (source weights, target weights, witness).

    repeat-fill (m = 1): the segment-factor bundle with a single twist entry
        b maps onto the one with every entry equal to b.  Needs n, a, b with
        a*b = 2; swaps the first and last coordinates of the first block and
        conjugates the final coordinate.
    fold-r: the normalized class (s, r) maps onto (s, n+1-r).  Needs
        n, m >= 1, 1 <= s <= m, 1 <= r <= n; cycles the first block by r and
        conjugates the z-coordinates after position s.
    fold-s: the normalized class (s, r) maps onto (m+1-s, r).  Same parameter
        range; cycles the second block by s and conjugates the w-coordinates
        after position r.

    Every triple returned here passes ``witness_check``; the test suite
    reverifies that by direct matrix multiplication.

    Raises:
        ValueError: unknown family or parameters outside the stated range.
    """
    if family == "repeat-fill":
        if a is None or b is None or n < 1:
            raise ValueError("repeat-fill needs n >= 1 and entries a, b")
        if a * b != 2:
            raise ValueError("repeat-fill requires a*b = 2")
        source = CharPair(n, 1, (a,), (b,) + (0,) * (n - 1))
        target = CharPair(n, 1, (a,), (b,) * n)
        size = n + 3
        mapping = {0: (n, 1), n: (0, 1), n + 2: (n + 2, -1)}
        s_mat = _signed_permutation(size, mapping)
        t_mat = IntMatrix.from_rows([[1, b], [0, -1]])
        return (
            weight_matrix(source),
            weight_matrix(target),
            MonomialWitness(s_mat, t_mat),
        )
    if family not in ("fold-r", "fold-s"):
        raise ValueError("unknown witness family: %r" % (family,))
    if m is None or s is None or r is None:
        raise ValueError("fold witnesses need n, m, s, r")
    if not (1 <= s <= m and 1 <= r <= n):
        raise ValueError("fold parameters outside range")
    source = CharPair(n, m, (2,) * s + (0,) * (m - s), (1,) * r + (0,) * (n - r))
    size = n + m + 2
    if family == "fold-r":
        r2 = n + 1 - r
        target = CharPair(n, m, source.a, (1,) * r2 + (0,) * (n - r2))
        mapping = {}
        for i in range(n + 1):
            mapping[i] = ((i + r) % (n + 1), 1)
        for j in range(s, m + 1):
            mapping[n + 1 + j] = (n + 1 + j, -1)
        t_mat = IntMatrix.from_rows([[1, 1], [0, -1]])
    else:
        s2 = m + 1 - s
        target = CharPair(n, m, (2,) * s2 + (0,) * (m - s2), source.b)
        mapping = {}
        for i in range(r, n + 1):
            mapping[i] = (i, -1)
        for j in range(m + 1):
            mapping[n + 1 + j] = (n + 1 + (j + s) % (m + 1), 1)
        t_mat = IntMatrix.from_rows([[-1, 0], [2, 1]])
    s_mat = _signed_permutation(size, mapping)
    return (
        weight_matrix(source),
        weight_matrix(target),
        MonomialWitness(s_mat, t_mat),
    )
