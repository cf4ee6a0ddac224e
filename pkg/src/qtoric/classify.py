"""Homeomorphism classification over a product of two simplices.

The decision layer sits on three mechanisms:

* ``tilde_equiv``: the truncated-product equivalence on integer vectors that
  decides when two projective-bundle (generalized Bott) classes coincide.
  The degree-1 coefficient of the defining identity forces the shift w, so
  the decision is a two-branch check, complete and terminating.
* the (s, r) fold: a non-Bott normalized pair is determined by the count s of
  value-2 entries and the count r of value-1 entries; a class and its fold
  (s -> len+1-s, r -> len+1-r) are homeomorphic, everything else with the
  same orientation is not, and for distinct simplex dimensions the mirrored
  orientation is a genuinely different class.
* parity collapse over a segment factor (m = 1): only the parity of the
  number of nonzero entries of b survives, and for even n everything
  collapses onto the corresponding projective bundle; the two odd-parity
  families are a connected sum of two copies of complex projective space and
  the class of a = (2), b = (1, 0, ..., 0).

Class labels compare semantically: ``HomeoClass`` equality is "the manifolds
are homeomorphic", with Bott labels compared lazily through ``tilde_equiv``
rather than through a canonical orbit representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .polyring import trunc_product_identity
from .quasitoric import CharPair, all_char_pairs, normalize, validate

__all__ = [
    "HomeoClass",
    "tilde_equiv",
    "canonical_class",
    "same_class",
    "homeomorphic",
    "enumerate_classes",
    "count_nonbott",
    "is_nonbott_class",
]

_FAMILY_ORDER = {
    "product": 0,
    "bott-base-n": 1,
    "bott-base-m": 2,
    "nonbott": 3,
    "connsum-plus": 4,
    "connsum-minus": 5,
    "special-m21": 6,
}

# families whose members are not generalized Bott manifolds
_NONBOTT_FAMILIES = frozenset({"nonbott", "connsum-plus", "special-m21"})


def tilde_equiv(u: Tuple[int, ...], u_prime: Tuple[int, ...], ell: int) -> bool:
    """Decide the truncated-product equivalence of two integer vectors.

    True iff there exist eps in {+1, -1} and an integer w with
    prod(1 + u_i x) = (1 + eps*w*x) * prod(1 + eps*(u'_i + w)*x) modulo
    x^(ell+1).  Comparing degree-1 coefficients forces
    (k+1)*w = eps*sum(u) - sum(u'), so each sign branch either fails the
    divisibility or pins w; no search is involved.
    """
    k = len(u)
    if k < 1 or len(u_prime) != k:
        raise ValueError("vectors must share a positive length")
    if ell < 1:
        raise ValueError("truncation order must be at least 1")
    su = sum(u)
    sv = sum(u_prime)
    for eps in (1, -1):
        numerator = eps * su - sv
        if numerator % (k + 1) == 0:
            w = numerator // (k + 1)
            if trunc_product_identity(u, u_prime, eps, w, ell):
                return True
    return False


@dataclass(frozen=True, eq=False)
class HomeoClass:
    """A homeomorphism-class label.

    family is one of:
      product        trivial bundle, both vectors equivalent to zero
      bott-base-n    projective bundle with the twisting vector on the a side
      bott-base-m    projective bundle with the twisting vector on the b side
      nonbott        normalized (s, r) class, both dimensions at least 2
      connsum-plus   connected sum of two standard projective spaces
      connsum-minus  connected sum with reversed orientation on one summand
                     (the same manifold as the a=(1) bundle; kept as its own
                     label and bridged through equality)
      special-m21    the odd-n class of a=(2), b=(1, 0, ..., 0)

    Labels are equal exactly when the classes are homeomorphic; see
    ``same_class``.  Instances are not hashable because equality is coarser
    than the field tuple.
    """

    family: str
    n: int
    m: int
    s: Optional[int] = None
    r: Optional[int] = None
    orientation: Optional[str] = None
    vec: Optional[Tuple[int, ...]] = None
    representative: Optional[CharPair] = None

    def __eq__(self, other: object):
        if not isinstance(other, HomeoClass):
            return NotImplemented
        return same_class(self, other)[0]

    def __ne__(self, other: object):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None  # semantic equality is coarser than structural equality

    def sort_key(self) -> Tuple:
        return (
            self.n,
            self.m,
            _FAMILY_ORDER[self.family],
            self.s if self.s is not None else -1,
            self.r if self.r is not None else -1,
            self.orientation or "",
            self.vec if self.vec is not None else (),
            self.representative.sort_key() if self.representative else (),
        )

    def params_dict(self) -> Dict[str, object]:
        if self.family == "nonbott":
            return {"s": self.s, "r": self.r, "orientation": self.orientation}
        if self.family == "bott-base-n":
            return {"a": list(self.vec)}
        if self.family == "bott-base-m":
            return {"b": list(self.vec)}
        return {}

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "params": self.params_dict(),
            "representative": self.representative.to_json_dict()
            if self.representative
            else None,
        }


def is_nonbott_class(c: HomeoClass) -> bool:
    return c.family in _NONBOTT_FAMILIES


def _n_side_vector(c: HomeoClass) -> Optional[Tuple[int, ...]]:
    """The class as a bundle twisted by an a-side vector, when readable that
    way: returns the length-m vector or None."""
    if c.family == "product":
        return (0,) * c.m
    if c.family == "bott-base-n":
        return c.vec
    if c.family == "connsum-minus":
        return (1,)
    if c.family == "bott-base-m" and c.n == c.m:
        # over a square base the mirror is the same manifold
        return c.vec
    return None


def _m_side_vector(c: HomeoClass) -> Optional[Tuple[int, ...]]:
    if c.family == "product":
        return (0,) * c.n
    if c.family == "bott-base-m":
        return c.vec
    if c.family == "bott-base-n" and c.n == c.m:
        return c.vec
    if c.family == "connsum-minus" and c.n == c.m:
        return (1,)
    return None


def same_class(c1: HomeoClass, c2: HomeoClass) -> Tuple[bool, str]:
    """Semantic comparison of two labels.

    Returns (equal, rule) where rule names the deciding principle:
      base-polytope-mismatch   distinct (n, m): distinct rings over distinct
                               products of simplices
      bott-vector-equivalence  same-side bundle comparison via tilde_equiv
      bott-cross-base          opposite-side bundles; equal only if both are
                               the trivial product
      bott-vs-nonbott-ring     a Bott class never matches a non-Bott class
      sr-fold                  (s, r) equality after folding
      orientation-swap         mirrored orientation with n != m
      connected-sum-family     the m=1 special families compare by identity
    """
    if (c1.n, c1.m) != (c2.n, c2.m):
        return False, "base-polytope-mismatch"
    nb1 = is_nonbott_class(c1)
    nb2 = is_nonbott_class(c2)
    if nb1 != nb2:
        return False, "bott-vs-nonbott-ring"
    if nb1:
        if c1.family != c2.family:
            return False, "connected-sum-family"
        if c1.family == "nonbott":
            if c1.orientation != c2.orientation:
                return False, "orientation-swap"
            return (c1.s, c1.r) == (c2.s, c2.r), "sr-fold"
        return True, "connected-sum-family"
    # both generalized Bott classes
    a1 = _n_side_vector(c1)
    a2 = _n_side_vector(c2)
    if a1 is not None and a2 is not None:
        return tilde_equiv(a1, a2, c1.n), "bott-vector-equivalence"
    b1 = _m_side_vector(c1)
    b2 = _m_side_vector(c2)
    if b1 is not None and b2 is not None:
        return tilde_equiv(b1, b2, c1.m), "bott-vector-equivalence"
    # opposite sides with n != m: both must be the trivial product
    vn = a1 if a1 is not None else a2
    vm = b1 if b1 is not None else b2
    equal = tilde_equiv(vn, (0,) * c1.m, c1.n) and tilde_equiv(
        vm, (0,) * c1.n, c1.m
    )
    return equal, "bott-cross-base"


def _fold(count: int, slots: int) -> int:
    half = (slots + 1) // 2
    return slots + 1 - count if count > half else count


def canonical_class(cp: CharPair) -> HomeoClass:
    """Map a valid characteristic pair to its homeomorphism-class label.

    Raises:
        ValueError: when the pair is not valid.
    """
    nf = normalize(cp)
    n, m = nf.n, nf.m
    if nf.orientation == "bott":
        a_nonzero = any(nf.a)
        b_nonzero = any(nf.b)
        if not a_nonzero and not b_nonzero:
            return HomeoClass("product", n, m, representative=nf.char_pair)
        if b_nonzero and n == m:
            # square base: put the twisting vector on the a side
            vec = nf.b
            rep = CharPair(n, m, vec, (0,) * n)
            return HomeoClass("bott-base-n", n, m, vec=vec, representative=rep)
        if a_nonzero:
            return HomeoClass(
                "bott-base-n", n, m, vec=nf.a, representative=nf.char_pair
            )
        return HomeoClass(
            "bott-base-m", n, m, vec=nf.b, representative=nf.char_pair
        )
    if m == 1:
        if n == 1:
            # over the square the two odd families meet in the single
            # connected-sum class
            return HomeoClass(
                "connsum-plus", 1, 1, representative=CharPair(1, 1, (2,), (1,))
            )
        # non-Bott with m = 1: the single a-entry is 1 or 2 and only the
        # parity of the nonzero b-entries matters
        aval = nf.a[0]
        k = sum(1 for x in nf.b if x)
        if n % 2 == 0 or k % 2 == 0:
            # collapses onto the a-twisted bundle
            if aval == 1:
                return HomeoClass(
                    "connsum-minus",
                    n,
                    1,
                    representative=CharPair(n, 1, (1,), (0,) * n),
                )
            return HomeoClass(
                "bott-base-n",
                n,
                1,
                vec=(2,),
                representative=CharPair(n, 1, (2,), (0,) * n),
            )
        if aval == 1:
            rep = CharPair(n, 1, (1,), (2,) + (0,) * (n - 1))
            return HomeoClass("connsum-plus", n, 1, representative=rep)
        rep = CharPair(n, 1, (2,), (1,) + (0,) * (n - 1))
        return HomeoClass("special-m21", n, 1, representative=rep)
    # both dimensions at least 2
    orientation = nf.orientation
    a, b = nf.a, nf.b
    if n == m and orientation == "b2":
        a, b = b, a
        orientation = "a2"
    if orientation == "a2":
        s = a.count(2)
        r = b.count(1)
        s_slots, r_slots = m, n
    else:
        s = b.count(2)
        r = a.count(1)
        s_slots, r_slots = n, m
    s = _fold(s, s_slots)
    r = _fold(r, r_slots)
    if orientation == "a2":
        rep = CharPair(n, m, (2,) * s + (0,) * (m - s), (1,) * r + (0,) * (n - r))
    else:
        rep = CharPair(n, m, (1,) * r + (0,) * (m - r), (2,) * s + (0,) * (n - s))
    return HomeoClass(
        "nonbott", n, m, s=s, r=r, orientation=orientation, representative=rep
    )


def homeomorphic(cp1: CharPair, cp2: CharPair) -> Tuple[bool, str]:
    """Decide homeomorphism of the manifolds behind two valid pairs.

    Returns (verdict, rule); the rule names the deciding principle (see
    ``same_class``), or "reflexive" for identical inputs.

    Raises:
        ValueError: when either pair is not valid.
    """
    if not validate(cp1) or not validate(cp2):
        raise ValueError("characteristic pair fails the validity condition")
    if cp1 == cp2:
        return True, "reflexive"
    return same_class(canonical_class(cp1), canonical_class(cp2))


def _dedup_key(c: HomeoClass) -> Tuple:
    """A conservative bucket key: labels with distinct keys are never equal.

    Non-Bott labels are exact, so their fields form the key.  Bott labels
    bucket by bundle side and by the residue of the vector sum up to sign,
    which is preserved by the truncated-product equivalence at any order;
    vectors equivalent to zero all land in the product bucket.
    """
    if c.family == "nonbott":
        return ("nb", c.s, c.r, c.orientation)
    if c.family in ("connsum-plus", "special-m21"):
        return ("fam", c.family)
    if c.family == "product":
        return ("bott-product",)
    if c.family == "connsum-minus":
        vec, side, ell = (1,), "n", c.n
    elif c.family == "bott-base-n":
        vec, side, ell = c.vec, "n", c.n
    else:
        vec, side, ell = c.vec, "m", c.m
    if tilde_equiv(vec, (0,) * len(vec), ell):
        return ("bott-product",)
    k1 = len(vec) + 1
    su = sum(vec) % k1
    return ("bott", side, min(su, (k1 - su) % k1))


def enumerate_classes(n: int, m: int, bound: int) -> List[HomeoClass]:
    """All homeomorphism classes realized by pairs with entries in
    [-bound, bound].

    The non-Bott portion is complete and bound-independent once bound >= 2
    (normalized entries are 0, 1, 2); the Bott portion is exhaustive only
    within the bound, since projective bundles form infinite families.
    Output order and chosen labels are deterministic and independent of
    generation order: within each class the label with the smallest sort key
    wins.
    """
    if m < 1 or n < m:
        raise ValueError("need n >= m >= 1")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    kept: List[HomeoClass] = []
    buckets: Dict[Tuple, List[int]] = {}
    for cp in all_char_pairs(n, m, bound):
        if not validate(cp):
            continue
        c = canonical_class(cp)
        key = _dedup_key(c)
        indices = buckets.setdefault(key, [])
        for i in indices:
            if same_class(kept[i], c)[0]:
                if c.sort_key() < kept[i].sort_key():
                    kept[i] = c
                break
        else:
            indices.append(len(kept))
            kept.append(c)
    kept.sort(key=HomeoClass.sort_key)
    return kept


def count_nonbott(n: int, m: int) -> int:
    """Closed-form count of non-Bott classes.

    Square base of segments: 1.  Segment second factor: 0 for even n, 2 for
    odd n >= 3.  Equal dimensions above 1: floor((n+1)/2)^2.  Distinct
    dimensions above 1: twice the product of the two floors (the mirrored
    orientations are distinct).
    """
    if m < 1 or n < m:
        raise ValueError("need n >= m >= 1")
    if m == 1:
        if n == 1:
            return 1
        return 0 if n % 2 == 0 else 2
    half_n = (n + 1) // 2
    half_m = (m + 1) // 2
    if n == m:
        return half_n * half_n
    return 2 * half_n * half_m
