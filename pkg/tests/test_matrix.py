from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hochcat.errors import NotASubspace, NotChainCompatible
from hochcat.matrix import Matrix, Subspace, induced_quotient_map, quotient_dim

from .catalog import FIELDS, GF2, GF3, GF5, QQ


def mk(field, rows, layout=None):
    return Matrix.from_rows(field, rows, layout=layout)


# --- rank -----------------------------------------------------------------

def test_rank_empty_matrix():
    assert Matrix.zeros(QQ, 0, 0).rank() == 0


def test_rank_identity_gf5():
    assert Matrix.identity(GF5, 3).rank() == 3


def test_rank_equal_rows_gf2():
    assert mk(GF2, [[1, 1], [1, 1]]).rank() == 1


def test_rank_rationals_with_fractions():
    m = mk(QQ, [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(2, 1)]])
    assert m.rank() == 2


# --- kernel and image -------------------------------------------------------

def test_kernel_of_ones_row_gf2():
    ker = mk(GF2, [[1, 1]]).kernel_basis()
    assert ker.dim == 1
    assert ker.basis == ((1, 1),)


def test_image_of_zero_matrix():
    assert Matrix.zeros(QQ, 4, 2).image_basis().dim == 0


def test_kernel_of_zero_columns():
    ker = Matrix.zeros(GF3, 3, 2).kernel_basis()
    assert ker.dim == 2
    assert ker.basis == ((1, 0), (0, 1))


def test_rank_nullity():
    m = mk(QQ, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert m.rank() + m.kernel_basis().dim == m.ncols


# --- quotients ------------------------------------------------------------

def test_quotient_equal_spaces_is_zero():
    Z = Subspace.from_vectors(QQ, 2, [[1, 0], [0, 1]])
    assert quotient_dim(Z, Z) == 0


def test_quotient_full_mod_zero():
    Z = Subspace.full(GF3, 2)
    B = Subspace.zero(GF3, 2)
    assert quotient_dim(Z, B) == 2


def test_quotient_rejects_non_subspace():
    Z = Subspace.from_vectors(QQ, 2, [[1, 0]])
    B = Subspace.from_vectors(QQ, 2, [[0, 1]])
    with pytest.raises(NotASubspace):
        quotient_dim(Z, B)


def test_quotient_c2_fad_nerve_degree_one():
    # cocycles mod coboundaries in degree 1 for the adjoint category of the
    # order-two group: two components, each contributing one dimension
    from hochcat import adjoint_category, simplicial_coboundary_matrix

    from .catalog import C2

    fad = adjoint_category(C2)
    d1 = simplicial_coboundary_matrix(fad, GF2, 1)
    d0 = simplicial_coboundary_matrix(fad, GF2, 0)
    assert quotient_dim(d1.kernel_basis(), d0.image_basis()) == 2


# --- induced maps on quotients ---------------------------------------------

def test_induced_identity_map():
    Z = Subspace.from_vectors(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    B = Subspace.from_vectors(QQ, 3, [[0, 1, 0]])
    Q, invertible = induced_quotient_map(Matrix.identity(QQ, 3), Z, B, Z, B)
    assert invertible
    assert Q == Matrix.identity(QQ, 1)


def test_induced_zero_map_not_invertible():
    Z = Subspace.full(GF2, 2)
    B = Subspace.zero(GF2, 2)
    Q, invertible = induced_quotient_map(Matrix.zeros(GF2, 2, 2), Z, B, Z, B)
    assert Q.is_zero() and not invertible


def test_induced_rejects_incompatible_map():
    Z = Subspace.from_vectors(QQ, 2, [[1, 0]])
    B = Subspace.zero(QQ, 2)
    swap = mk(QQ, [[0, 1], [1, 0]])
    with pytest.raises(NotChainCompatible):
        induced_quotient_map(swap, Z, B, Z, B)


def test_induced_comparison_degree_one_c2_gf2():
    # the degree-1 comparison map induces an invertible 2x2 matrix on
    # cohomology for the order-two group over GF(2)
    from hochcat import (
        adjoint_category,
        hochschild_differential_matrix,
        make_context,
        simplicial_coboundary_matrix,
        t_map_matrix,
    )

    from .catalog import C2

    fad = adjoint_category(C2)
    ctx = make_context(C2, GF2)
    d1 = hochschild_differential_matrix(C2, GF2, 1)
    d0 = hochschild_differential_matrix(C2, GF2, 0)
    e1 = simplicial_coboundary_matrix(fad, GF2, 1)
    e0 = simplicial_coboundary_matrix(fad, GF2, 0)
    Q, invertible = induced_quotient_map(
        t_map_matrix(ctx, 1),
        d1.kernel_basis(), d0.image_basis(),
        e1.kernel_basis(), e0.image_basis(),
    )
    assert (Q.nrows, Q.ncols) == (2, 2) and invertible


# --- layout and backend agreement --------------------------------------------

def layout_pair(field, rows):
    dense = mk(field, rows, layout="dense")
    sparse = mk(field, rows, layout="sparse")
    return dense, sparse


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_layouts_agree_on_fixed_matrix(field):
    rows = [
        [field.scalar(v) for v in row]
        for row in [[1, 2, 0, 1], [0, 1, 1, 0], [1, 0, 2, 1], [2, 2, 2, 2]]
    ]
    dense, sparse = layout_pair(field, rows)
    assert dense.rref() == sparse.rref()
    assert dense.rank() == sparse.rank()
    assert dense.kernel_basis() == sparse.kernel_basis()
    assert dense.image_basis() == sparse.image_basis()


@settings(max_examples=80, deadline=None)
@given(
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.sampled_from([GF2, GF3, GF5, QQ]),
    st.data(),
)
def test_layouts_agree_property(nrows, ncols, field, data):
    cells = {}
    for r in range(nrows):
        for c in range(ncols):
            v = data.draw(st.integers(min_value=-3, max_value=3))
            if v:
                cells[r, c] = field.scalar(v)
    cells = {k: v for k, v in cells.items() if v != 0}
    dense = Matrix(field, nrows, ncols, dict(cells), layout="dense")
    sparse = Matrix(field, nrows, ncols, dict(cells), layout="sparse")
    assert dense.rref() == sparse.rref()


@settings(max_examples=80, deadline=None)
@given(
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=1, max_value=5),
    st.sampled_from([GF2, GF3, GF5, QQ]),
    st.data(),
)
def test_rank_equals_transpose_rank(nrows, ncols, field, data):
    cells = {}
    for r in range(nrows):
        for c in range(ncols):
            v = data.draw(st.integers(min_value=-2, max_value=2))
            if v:
                cells[r, c] = field.scalar(v)
    cells = {k: v for k, v in cells.items() if v != 0}
    m = Matrix(field, nrows, ncols, cells)
    assert m.rank() == m.transpose().rank()
    assert m.kernel_basis().dim + m.rank() == m.ncols


FIELD_OF_PRIME = {2: GF2, 3: GF3, 5: GF5}


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=1, max_value=5),
    st.sampled_from([2, 3, 5]),
    st.data(),
)
def test_rank_over_rationals_reduces_mod_p(nrows, ncols, p, data):
    # computing the rank over the rationals and reducing the pivots mod p
    # agrees with the mod-p rank whenever every pivot reduces to a nonzero
    # residue (denominator and numerator both coprime to p); small matrices only
    ints = [
        [data.draw(st.integers(min_value=-6, max_value=6)) for _ in range(ncols)]
        for _ in range(nrows)
    ]
    rows = [[Fraction(v) for v in row] for row in ints]
    pivot_values = []
    rank_q = 0
    for col in range(ncols):
        piv = next((i for i in range(rank_q, nrows) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank_q], rows[piv] = rows[piv], rows[rank_q]
        pivot_values.append(rows[rank_q][col])
        for i in range(rank_q + 1, nrows):
            if rows[i][col]:
                f = rows[i][col] / rows[rank_q][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank_q])]
        rank_q += 1
    clean = all(
        v.denominator % p != 0 and v.numerator % p != 0 for v in pivot_values
    )
    m_p = Matrix.from_int_entries(
        FIELD_OF_PRIME[p], nrows, ncols,
        {(r, c): v for r, row in enumerate(ints) for c, v in enumerate(row)},
    )
    if clean:
        assert m_p.rank() == rank_q
    else:
        assert m_p.rank() <= rank_q


def test_auto_layout_threshold():
    assert Matrix.zeros(QQ, 10, 10).layout == "dense"
    assert Matrix.zeros(QQ, 1000, 200).layout == "sparse"
    assert Matrix.zeros(QQ, 1, 5000).layout == "sparse"


def test_matmul_and_apply():
    a = mk(GF3, [[1, 2], [0, 1]])
    b = mk(GF3, [[1, 1], [1, 0]])
    assert (a @ b) == mk(GF3, [[0, 1], [1, 0]])
    assert a.apply((1, 1)) == (0, 1)


def test_serialization_triplets():
    m = mk(QQ, [[0, Fraction(1, 2)], [3, 0]])
    assert m.to_json_dict() == {
        "rows": 2,
        "cols": 2,
        "triplets": [[0, 1, "1/2"], [1, 0, "3"]],
    }


def test_subspace_coordinates_roundtrip():
    sub = Subspace.from_vectors(QQ, 3, [[1, 1, 0], [0, 0, 1]])
    vec = sub.vector_from_coordinates((Fraction(2), Fraction(-1)))
    assert sub.coordinates(vec) == (Fraction(2), Fraction(-1))
    assert sub.coordinates((1, 0, 0)) is None
