"""Exact linear algebra over prime fields and the linear instance."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acgw import (
    CompositionError,
    FactorizationError,
    LinearInstance,
    SquareClass,
)
from acgw.linear import colbasis, mat_of, mat_rank, nullspace, rref, solve, tuple_of

PRIMES = (2, 3, 5)


@st.composite
def matrix_and_prime(draw, max_dim=5):
    p = draw(st.sampled_from(PRIMES))
    rows = draw(st.integers(0, max_dim))
    cols = draw(st.integers(0, max_dim))
    entries = draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return np.array(entries, dtype=np.int64).reshape(rows, cols), p


# ---------------------------------------------------------------------------
# Row reduction.
# ---------------------------------------------------------------------------


def test_rref_known_example():
    R, pivots = rref(np.array([[1, 2], [2, 4], [0, 1]]), 5)
    assert R.tolist() == [[1, 0], [0, 1], [0, 0]]
    assert pivots == [0, 1]


def test_rref_mod_two_wraps():
    R, pivots = rref(np.array([[2, 1], [1, 1]]), 2)
    assert R.tolist() == [[1, 0], [0, 1]]
    assert pivots == [0, 1]


@settings(deadline=None, max_examples=150)
@given(matrix_and_prime())
def test_rref_properties(mp):
    a, p = mp
    R, pivots = rref(a, p)
    assert R.shape == a.shape
    assert pivots == sorted(pivots)
    # Idempotent, and each pivot column is a standard basis vector.
    R2, pivots2 = rref(R, p)
    assert np.array_equal(R2, R) and pivots2 == pivots
    for k, c in enumerate(pivots):
        col = R[:, c]
        assert col[k] == 1 and np.count_nonzero(col) == 1


@settings(deadline=None, max_examples=150)
@given(matrix_and_prime())
def test_rank_properties(mp):
    a, p = mp
    r = mat_rank(a, p)
    assert 0 <= r <= min(a.shape)
    assert mat_rank(a.T, p) == r
    doubled = np.concatenate([a, a], axis=1) if a.size or a.shape[0] else a
    if a.shape[0] > 0:
        assert mat_rank(doubled, p) == r


# ---------------------------------------------------------------------------
# Solving, kernels, column bases.
# ---------------------------------------------------------------------------


def test_solve_exact_and_unsolvable():
    A = np.array([[1, 2], [2, 4], [0, 1]])
    b = np.array([[1], [2], [0]])
    X = solve(A, b, 5)
    assert X is not None and np.array_equal(np.mod(A @ X, 5), np.mod(b, 5))
    assert solve(np.array([[1], [1]]), np.array([[1], [0]]), 2) is None


@settings(deadline=None, max_examples=150)
@given(matrix_and_prime(), st.data())
def test_solve_recovers_consistent_systems(mp, data):
    a, p = mp
    k = data.draw(st.integers(0, 3))
    x = np.array(
        data.draw(
            st.lists(
                st.lists(st.integers(0, p - 1), min_size=k, max_size=k),
                min_size=a.shape[1],
                max_size=a.shape[1],
            )
        ),
        dtype=np.int64,
    ).reshape(a.shape[1], k)
    b = np.mod(a @ x, p)
    sol = solve(a, b, p)
    assert sol is not None
    assert np.array_equal(np.mod(a @ sol, p), b)


@settings(deadline=None, max_examples=150)
@given(matrix_and_prime())
def test_nullspace_and_colbasis(mp):
    a, p = mp
    N = nullspace(a, p)
    assert N.shape[0] == a.shape[1]
    assert not np.mod(a @ N, p).any()
    assert mat_rank(a, p) + N.shape[1] == a.shape[1]
    C = colbasis(a, p)
    assert mat_rank(C, p) == C.shape[1] == mat_rank(a, p)


def test_mat_of_tuple_of_round_trip():
    data = ((1, 2), (0, 1))
    arr = mat_of(data, 2, 2)
    assert tuple_of(arr, 3) == data
    assert tuple_of(np.array([[1, 7]]), 5) == ((1, 2),)
    assert mat_of((), 0, 3).shape == (0, 3)


# ---------------------------------------------------------------------------
# The prime-field instance.
# ---------------------------------------------------------------------------


def test_objects_and_labels():
    L = LinearInstance(p=2)
    V = L.obj(3)
    assert V.dim == 3 and V.p == 2
    assert L.obj_size(V) == 3
    assert L.obj_label(V) == "F2^3"
    assert L.is_initial(L.obj(0)) and L.initial() == L.obj(0)


def test_hor_ver_matrix_shapes():
    L = LinearInstance(p=2)
    m = L.hor(L.obj(1), L.obj(3), [[1], [0], [1]])
    assert L.hor_matrix(m).shape == (3, 1)
    e = L.ver(L.obj(1), L.obj(3), [[1, 0, 1]])
    assert L.ver_matrix(e).shape == (1, 3)
    assert not L.validate_hor(m) and not L.validate_ver(e)


def test_validate_rejects_rank_deficiency():
    L = LinearInstance(p=2)
    not_mono = L.hor(L.obj(2), L.obj(2), [[1, 1], [1, 1]])
    assert L.validate_hor(not_mono)
    not_epi = L.ver(L.obj(2), L.obj(2), [[1, 1], [1, 1]])
    assert L.validate_ver(not_epi)


def test_complement_round_trip_linear():
    L = LinearInstance(p=3)
    m = L.hor(L.obj(1), L.obj(3), [[1], [2], [0]])
    c_obj, cleg = L.coker(m)
    assert c_obj.dim == 2
    assert L.is_complement_pair(m, cleg)
    k_obj, kleg = L.ker(cleg)
    assert k_obj.dim == 1
    # The recovered kernel spans the same line as the original mono.
    a = L.hor_matrix(m)
    b = L.hor_matrix(kleg)
    assert mat_rank(np.concatenate([a, b], axis=1), 3) == 1


def test_compose_and_errors():
    L = LinearInstance(p=2)
    f = L.hor(L.obj(1), L.obj(2), [[1], [1]])
    g = L.hor(L.obj(2), L.obj(3), [[1, 0], [0, 1], [1, 1]])
    gf = L.compose_hor(f, g)
    assert L.hor_matrix(gf).tolist() == [[1], [1], [0]]
    with pytest.raises(CompositionError):
        L.compose_hor(g, f)
    through = L.hor(L.obj(1), L.obj(2), [[0], [1]])
    with pytest.raises(FactorizationError):
        L.factor_hor(f, through)


def test_factor_hor_linear():
    L = LinearInstance(p=2)
    amb = L.obj(3)
    f = L.hor(L.obj(1), amb, [[1], [1], [0]])
    through = L.hor(L.obj(2), amb, [[1, 0], [0, 1], [0, 0]])
    lifted = L.factor_hor(f, through)
    assert np.array_equal(
        np.mod(L.hor_matrix(through) @ L.hor_matrix(lifted), 2), L.hor_matrix(f)
    )


def test_classify_mixed_linear():
    L = LinearInstance(p=2)
    amb = L.obj(2)
    m = L.hor(L.obj(1), amb, [[1], [0]])
    _, e = L.coker(m)
    sq = L.mixed_pullback(m, e)
    assert sq.corner.dim == 0
    cls = L.classify_mixed(sq.to_epi_source, sq.to_mono_source, sq.epi, sq.mono)
    assert cls is SquareClass.CARTESIAN
    # Zero corner over a complement pair is exactly the canonical pullback.
    zero_top = L.zero_hor(e.source)
    zero_left = L.zero_ver(m.source)
    assert L.classify_mixed(zero_top, zero_left, e, m) is SquareClass.CARTESIAN
    # A commuting square whose legs are genuinely mono / epi always carries
    # the image factorization of the composite, hence is cartesian.
    skew = L.ver(L.obj(1), amb, [[1, 1]])
    assert L.mixed_pullback(m, skew).corner.dim == 1
    one = L.obj(1)
    cls2 = L.classify_mixed(
        L.hor(one, one, [[1]]), L.ver(one, one, [[1]]), skew, m
    )
    assert cls2 is SquareClass.CARTESIAN
    # And a non-commuting one is rejected outright.
    cls3 = L.classify_mixed(zero_top, zero_left, skew, m)
    assert cls3 is SquareClass.NOT_SQUARE


def test_mixed_pullback_dimension_formula():
    # Two transverse planes in F2^3 meet in a line.
    L = LinearInstance(p=2)
    amb = L.obj(3)
    m = L.hor(L.obj(2), amb, [[1, 0], [0, 1], [0, 0]])
    e = L.ver(L.obj(2), amb, [[0, 1, 0], [0, 0, 1]])
    sq = L.mixed_pullback(m, e)
    # dim corner = dim m-source + dim of e-section image meet, here 1.
    assert sq.corner.dim == 1
    assert not L.validate_hor(sq.to_epi_source)
    assert not L.validate_ver(sq.to_mono_source)
