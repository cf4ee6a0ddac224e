import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from qtoric.lattice import (
    IntMatrix,
    LatticeBasis,
    determinant,
    hermite_normal_form,
    is_basis_extendable,
    kernel_basis,
    lattice_equal,
    lattice_from_generators,
    smith_normal_form,
)


def mat(rows, cols=None):
    return IntMatrix.from_rows(rows, cols=cols)


small_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-5, 5), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


class TestHermite:
    def test_canonical_form_of_small_matrix(self):
        # [[2,4],[1,3]] row-reduces to pivots 1 and 2; the entry above the
        # second pivot is reduced into [0, 2), giving (1,1) not (1,3).
        h, u = hermite_normal_form(mat([[2, 4], [1, 3]]))
        assert h.to_rows() == ((1, 1), (0, 2))
        assert u.mul(mat([[2, 4], [1, 3]])).to_rows() == h.to_rows()
        assert determinant(u) in (1, -1)

    def test_identity_fixed(self):
        h, _ = hermite_normal_form(IntMatrix.identity(3))
        assert h.to_rows() == IntMatrix.identity(3).to_rows()

    def test_zero_matrix(self):
        h, _ = hermite_normal_form(mat([[0, 0], [0, 0]]))
        assert h.to_rows() == ((0, 0), (0, 0))

    @given(small_matrices)
    def test_transform_is_unimodular_and_exact(self, rows):
        m = mat(rows)
        h, u = hermite_normal_form(m)
        assert determinant(u) in (1, -1)
        assert u.mul(m).to_rows() == h.to_rows()

    @given(small_matrices)
    def test_idempotent(self, rows):
        h, _ = hermite_normal_form(mat(rows))
        h2, _ = hermite_normal_form(h)
        assert h2.to_rows() == h.to_rows()

    @given(small_matrices)
    def test_row_lattice_preserved(self, rows):
        m = mat(rows)
        h, _ = hermite_normal_form(m)
        cols = m.cols
        assert lattice_equal(
            lattice_from_generators(cols, rows),
            lattice_from_generators(cols, [r for r in h.to_rows() if any(r)]),
        )


class TestSmith:
    @pytest.mark.parametrize(
        "rows,diag",
        [
            ([[2, 0], [0, 3]], (1, 6)),
            ([[1, 0], [0, 1]], (1, 1)),
            ([[2, 4], [4, 8]], (2, 0)),
        ],
    )
    def test_frozen_diagonals(self, rows, diag):
        d, _, _ = smith_normal_form(mat(rows))
        assert d == diag

    @given(small_matrices)
    @settings(max_examples=60)
    def test_exact_diagonalization(self, rows):
        m = mat(rows)
        d, left, right = smith_normal_form(m)
        assert determinant(left) in (1, -1)
        assert determinant(right) in (1, -1)
        prod = left.mul(m).mul(right)
        for i in range(m.rows):
            for j in range(m.cols):
                expect = d[i] if i == j and i < len(d) else 0
                assert prod.at(i, j) == expect

    @given(small_matrices)
    @settings(max_examples=60)
    def test_divisibility_chain_and_oracle(self, rows):
        m = mat(rows)
        d, _, _ = smith_normal_form(m)
        for x, y in zip(d, d[1:]):
            if x == 0:
                assert y == 0
            else:
                assert y % x == 0
        # independent route through sympy
        s = sympy_snf(Matrix(rows))
        assert list(d) == [abs(s[i, i]) for i in range(len(d))]


class TestKernel:
    def test_reordered_characteristic_matrix_kernel(self):
        # the 3x5 matrix with columns e1, e2, (-1,-1,-a), e3, (-b1,-b2,-1)
        # for a=(2), b=(1,0); its kernel is spanned by (1,1,1,2,0) and
        # (1,0,0,1,1), whose canonical form is frozen below.
        m = mat(
            [
                [1, 0, -1, 0, -1],
                [0, 1, -1, 0, 0],
                [0, 0, -2, 1, -1],
            ]
        )
        k = kernel_basis(m)
        assert k.basis == ((1, 0, 0, 1, 1), (0, 1, 1, 1, -1))
        assert lattice_equal(k, lattice_from_generators(5, [(1, 1, 1, 2, 0), (1, 0, 0, 1, 1)]))
        # near miss: agrees with a true kernel vector in four of five slots
        assert not k.contains((1, 0, 0, 0, 1))

    def test_injective_map_has_empty_kernel(self):
        assert kernel_basis(IntMatrix.identity(4)).basis == ()

    def test_rank_one_projection(self):
        assert kernel_basis(mat([[1, 1]])).basis == ((1, -1),)

    @given(small_matrices)
    @settings(max_examples=60)
    def test_kernel_annihilates_and_is_primitive(self, rows):
        m = mat(rows)
        k = kernel_basis(m)
        for v in k.basis:
            image = [sum(m.at(i, j) * v[j] for j in range(m.cols)) for i in range(m.rows)]
            assert all(x == 0 for x in image)
        assert is_basis_extendable(k.basis)
        assert k.rank == m.cols - Matrix(rows).rank()


class TestLatticeEqual:
    def test_distinct_index_sublattices(self):
        a = lattice_from_generators(2, [(2, 0), (0, 2)])
        b = lattice_from_generators(2, [(2, 2), (2, -2)])
        assert not lattice_equal(a, b)

    def test_same_lattice_different_generators(self):
        a = lattice_from_generators(2, [(1, 0), (0, 1)])
        b = lattice_from_generators(2, [(1, 1), (0, 1)])
        assert lattice_equal(a, b)

    def test_reflexive(self):
        a = lattice_from_generators(3, [(1, 2, 3)])
        assert lattice_equal(a, a)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            lattice_equal(lattice_from_generators(2, []), lattice_from_generators(3, []))

    @given(
        st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=3),
        st.integers(-3, 3),
        st.integers(0, 2),
        st.integers(0, 2),
    )
    def test_invariant_under_row_operations(self, gens, c, i, j):
        base = lattice_from_generators(3, gens)
        mixed = [list(g) for g in gens]
        i %= len(mixed)
        j %= len(mixed)
        if i != j:
            mixed[i] = [x + c * y for x, y in zip(mixed[i], mixed[j])]
        mixed.append([0, 0, 0])
        assert lattice_equal(base, lattice_from_generators(3, mixed))

    def test_membership(self):
        lat = lattice_from_generators(3, [(2, 0, 1), (0, 3, 0)])
        assert lat.contains((2, 3, 1))
        assert lat.contains((0, 0, 0))
        assert not lat.contains((1, 0, 0))
        assert not lat.contains((2, 1, 1))


class TestExtendable:
    @pytest.mark.parametrize(
        "vectors,expected",
        [
            ([(1, 0, 0), (0, 1, 0)], True),
            ([(2, 0)], False),
            ([(1, 2), (3, 7)], True),
            ([], True),
            ([(0, 0)], False),
            ([(1, 0), (0, 1), (1, 1)], False),  # too many vectors
        ],
    )
    def test_examples(self, vectors, expected):
        assert is_basis_extendable(vectors) is expected

    @given(st.lists(st.integers(-6, 6), min_size=2, max_size=5))
    def test_single_vector_iff_gcd_one(self, v):
        import math

        expected = math.gcd(*v) == 1 if any(v) else False
        assert is_basis_extendable([v]) is expected


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        LatticeBasis(2, ((1, 2, 3),))
