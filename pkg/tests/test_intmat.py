"""Smith normal form, homology at a degree and induced maps."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lchain.intmat import (
    AbelianGroup,
    IntMatrix,
    NotAChainMapError,
    NotAComplexError,
    homology_at,
    induced_map_on_homology,
    invariant_factors,
    kernel_basis,
    smith_normal_form,
    solve_integer,
)
from lchain.oracles import minors_invariant_factors


@st.composite
def small_matrices(draw, max_size=6, bound=5):
    rows = draw(st.integers(0, max_size))
    cols = draw(st.integers(0, max_size))
    data = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return IntMatrix(data, rows, cols)


def _is_diagonal_chain(d: IntMatrix) -> bool:
    diag = d.diagonal_entries()
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j and d[i, j]:
                return False
    nz = [x for x in diag if x]
    if any(x < 0 for x in diag):
        return False
    # nonzero entries first, each dividing the next
    if diag[: len(nz)] != tuple(nz):
        return False
    return all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_snf_identity():
    u, d, v = smith_normal_form(IntMatrix.identity(2))
    assert d == IntMatrix.identity(2)
    assert u == IntMatrix.identity(2) and v == IntMatrix.identity(2)


def test_snf_zero():
    m = IntMatrix.zeros(3, 2)
    u, d, v = smith_normal_form(m)
    assert d.is_zero()
    assert u == IntMatrix.identity(3) and v == IntMatrix.identity(2)


def test_snf_diag_2_3():
    _, d, _ = smith_normal_form(IntMatrix([[2, 0], [0, 3]]))
    assert d == IntMatrix([[1, 0], [0, 6]])
    assert minors_invariant_factors([[2, 0], [0, 3]], 2, 2) == [1, 6]


def test_snf_is_deterministic():
    m = IntMatrix([[4, 6, 2], [0, 3, -9], [12, 1, 1]])
    assert smith_normal_form(m) == smith_normal_form(m)


@settings(max_examples=200, deadline=None)
@given(small_matrices())
def test_snf_certificate(m):
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    assert _is_diagonal_chain(d)


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_snf_matches_minors_oracle(m):
    ours = [x for x in invariant_factors(m) if x]
    assert ours == minors_invariant_factors(m.tolist(), m.rows, m.cols)


@settings(max_examples=100, deadline=None)
@given(small_matrices())
def test_kernel_and_solve(m):
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert k.cols == m.cols - m.rank()
    b = m @ IntMatrix([[1] for _ in range(m.cols)], m.cols, 1)
    x = solve_integer(m, b)
    assert x is not None and m @ x == b


def test_homology_at_examples():
    assert homology_at(IntMatrix.zeros(0, 1), IntMatrix([[2]])) == AbelianGroup(0, (2,))
    assert homology_at(IntMatrix.zeros(0, 1), IntMatrix.zeros(1, 0)) == AbelianGroup(1, ())
    assert homology_at(IntMatrix([[1]]), IntMatrix.zeros(1, 0)).is_trivial()


def test_homology_at_rejects_non_complex():
    with pytest.raises(NotAComplexError):
        homology_at(IntMatrix([[1]]), IntMatrix([[1]]))


@settings(max_examples=100, deadline=None)
@given(small_matrices(max_size=5, bound=3), st.integers(0, 4))
def test_homology_rank_nullity(d_in, extra_cols):
    # build d_out with d_out d_in = 0 from the cokernel side
    n = d_in.rows
    u, d, _ = smith_normal_form(d_in)
    r = d_in.rank()
    rows = [u.row(i) for i in range(r, n)][: extra_cols or None]
    d_out = IntMatrix(rows, len(rows), n)
    assert (d_out @ d_in).is_zero()
    g = homology_at(d_out, d_in)
    assert g.free_rank == n - d_out.rank() - d_in.rank()


def test_abelian_group_rejects_bad_factors():
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 2))
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    assert str(AbelianGroup(2, (2,))) == "Z^2 + Z/2"
    assert str(AbelianGroup.from_factors(0, [2, 3])) == "Z/6"


def _point_data():
    return (IntMatrix.zeros(0, 1), IntMatrix.zeros(1, 0))


def test_induced_identity_and_times_two():
    ident = induced_map_on_homology(IntMatrix.identity(1), _point_data(), _point_data())
    assert ident.is_iso and ident.matrix == IntMatrix([[1]])
    double = induced_map_on_homology(IntMatrix([[2]]), _point_data(), _point_data())
    assert not double.is_iso and double.matrix == IntMatrix([[2]])


def test_induced_zero_into_acyclic():
    acyclic = (IntMatrix([[1]]), IntMatrix.zeros(1, 0))
    assert induced_map_on_homology(IntMatrix.zeros(1, 1), _point_data(), acyclic).is_iso is False
    assert induced_map_on_homology(IntMatrix.zeros(1, 1), acyclic, acyclic).is_iso


def test_induced_rejects_non_chain_map():
    # the identity does not send the cycle of H = Z into cycles of an injective d
    with pytest.raises(NotAChainMapError):
        induced_map_on_homology(IntMatrix.identity(1), _point_data(), (IntMatrix([[1]]), IntMatrix.zeros(1, 0)))


def test_matrix_json_round_trip():
    m = IntMatrix([[10**30, -1], [0, 7]])
    assert IntMatrix.from_json(m.to_json()) == m
    assert m.to_json_obj()[0][0] == str(10**30)
