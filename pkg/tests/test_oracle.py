"""Exact-sequence oracle: hand-walked goldens and equivalence with the table."""

import pytest
from hypothesis import given, settings

from conftest import variety_exprs
from lyubeznik import (
    AdmissibilityError,
    BettiVector,
    ConeLocalDims,
    betti,
    cone_local_derham_dims,
    disjoint_union_betti,
    lyubeznik_table,
)


def test_hand_walked_goldens():
    # 0 -> k -> H^0 -> H^1 -> 0 gives 1; 0 -> H^1(V) -> H^2 -> 0 gives beta_1
    assert cone_local_derham_dims(BettiVector(2, (1, 2, 2, 2, 1))).dims == (0, 0, 2)
    assert cone_local_derham_dims(BettiVector(2, (1, 0, 1, 0, 1))).dims == (0, 0, 0)
    assert cone_local_derham_dims(BettiVector(1, (1, 4, 1))).dims == (0, 0)
    assert cone_local_derham_dims(BettiVector(1, (3, 0, 3))).dims == (0, 2)


def test_length_is_dimension_plus_one():
    dims = cone_local_derham_dims(BettiVector(3, (1, 0, 1, 0, 1, 0, 1)))
    assert len(dims) == 4


@settings(max_examples=150)
@given(variety_exprs())
def test_degree_zero_always_vanishes(expr):
    assert cone_local_derham_dims(betti(expr))[0] == 0


@settings(max_examples=150)
@given(variety_exprs())
def test_oracle_matches_table_first_row(expr):
    vec = betti(expr)
    table = lyubeznik_table(vec)
    dims = cone_local_derham_dims(vec)
    assert tuple(dims) == tuple(table[0, j] for j in range(vec.dim + 1))


@settings(max_examples=80)
@given(variety_exprs(max_dim=6), variety_exprs(max_dim=6))
def test_adding_a_component_raises_degree_one_by_its_beta_zero(a, b):
    va = betti(a)
    vb = betti(b) if betti(b).dim == va.dim else va
    union = disjoint_union_betti(va, vb)
    before = cone_local_derham_dims(va)
    after = cone_local_derham_dims(union)
    assert after[1] == before[1] + vb[0]


def test_rank_overflow_raises():
    # beta_0 = 2 exceeds beta_2 = 1, so the degree-3 injection cannot exist
    vec = BettiVector(3, (2, 0, 1, 0, 1, 0, 2))
    with pytest.raises(AdmissibilityError):
        cone_local_derham_dims(vec)


def test_empty_variety_vector_raises():
    with pytest.raises(AdmissibilityError):
        cone_local_derham_dims(BettiVector(1, (0, 0, 0)))


def test_dimension_zero_rejected():
    with pytest.raises(ValueError):
        cone_local_derham_dims(BettiVector(0, (1,)))


def test_cone_local_dims_validation():
    with pytest.raises(ValueError):
        ConeLocalDims((1, 0))   # degree 0 must vanish
    with pytest.raises(ValueError):
        ConeLocalDims(())
    with pytest.raises(ValueError):
        ConeLocalDims((0, -1))
    dims = ConeLocalDims((0, 1, 2))
    assert list(dims) == [0, 1, 2]
    assert dims[2] == 2
