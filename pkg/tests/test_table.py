"""Table construction: golden cases, structural invariants, rejection."""

import pytest
from hypothesis import given, settings

from conftest import variety_exprs
from lyubeznik import (
    AdmissibilityError,
    BettiVector,
    ComponentGraph,
    LyubeznikTable,
    betti,
    betti_projective_space,
    corner_from_graph,
    lyubeznik_table,
)


def test_projective_plane_golden():
    table = lyubeznik_table(BettiVector(2, (1, 0, 1, 0, 1)))
    assert table.dim_a == 3
    assert table.nonzero() == ((3, 3, 1),)


def test_elliptic_curve_times_line_golden():
    table = lyubeznik_table(BettiVector(2, (1, 2, 2, 2, 1)))
    assert table.nonzero() == ((0, 2, 2), (2, 3, 2), (3, 3, 1))


def test_genus_two_curve_golden():
    table = lyubeznik_table(BettiVector(1, (1, 4, 1)))
    assert table.nonzero() == ((2, 2, 1),)


def test_projective_spaces_have_one_nonzero_entry():
    for n in range(1, 9):
        table = lyubeznik_table(betti_projective_space(n))
        assert table.nonzero() == ((n + 1, n + 1, 1),)


def test_corner_counts_components():
    vec = BettiVector(2, (3, 0, 3, 0, 3))  # three disjoint planes
    table = lyubeznik_table(vec)
    assert table[3, 3] == 3
    assert table[0, 1] == 2


@settings(max_examples=150)
@given(variety_exprs())
def test_first_entries_vanish(expr):
    table = lyubeznik_table(betti(expr))
    d = table.dim_a
    assert table[0, 0] == 0
    assert table[0, d] == 0
    assert table[1, d] == 0


@settings(max_examples=150)
@given(variety_exprs())
def test_zero_region(expr):
    table = lyubeznik_table(betti(expr))
    d = table.dim_a
    for i in range(1, d + 1):
        for j in range(d):
            assert table[i, j] == 0


@settings(max_examples=150)
@given(variety_exprs())
def test_column_mirrors_first_row(expr):
    table = lyubeznik_table(betti(expr))
    d = table.dim_a
    for ell in range(2, d):
        assert table[ell, d] == table[0, d + 1 - ell]


@settings(max_examples=150)
@given(variety_exprs())
def test_telescoping_sums(expr):
    vec = betti(expr)
    table = lyubeznik_table(vec)
    r = vec.dim
    for k in range(1, r // 2 + 1):  # even column indices 2t <= r
        total = sum(table[0, 2 * t] for t in range(1, k + 1))
        assert total == vec[2 * k - 1]
    for k in range((r + 1) // 2):  # odd column indices 2t+1 <= r
        total = sum(table[0, 2 * t + 1] for t in range(k + 1))
        assert total == vec[2 * k] - 1


@settings(max_examples=150)
@given(variety_exprs())
def test_corner_equals_component_count(expr):
    vec = betti(expr)
    table = lyubeznik_table(vec)
    assert table[vec.dim + 1, vec.dim + 1] == vec[0]
    assert table[vec.dim + 1, vec.dim + 1] == 1 + table[0, 1]


def test_inadmissible_vectors_rejected():
    with pytest.raises(AdmissibilityError):
        lyubeznik_table(BettiVector(2, (1, 0, 0, 0, 1)))
    with pytest.raises(AdmissibilityError):
        lyubeznik_table(BettiVector(2, (1, 0, 2, 0, 2)))
    with pytest.raises(AdmissibilityError):
        lyubeznik_table(BettiVector(1, (0, 0, 0)))


def test_duality_breaking_mutations_rejected():
    base = (1, 0, 1, 0, 1)
    for j in range(5):
        mutated = list(base)
        mutated[j] += 1
        vec = BettiVector(2, tuple(mutated))
        if j == 2:  # the middle entry has no duality partner; (1,0,2,0,1) is fine
            assert lyubeznik_table(vec).nonzero() == ((3, 3, 1),)
        else:
            with pytest.raises(AdmissibilityError):
                lyubeznik_table(vec)


def test_dimension_zero_rejected():
    with pytest.raises(ValueError):
        lyubeznik_table(BettiVector(0, (1,)))


def test_indexing_outside_the_stored_range():
    table = lyubeznik_table(BettiVector(2, (1, 0, 1, 0, 1)))
    assert table[10, 10] == 0
    assert table[0, 99] == 0
    with pytest.raises(IndexError):
        table[-1, 0]


def test_table_shape_validation():
    with pytest.raises(ValueError):
        LyubeznikTable(1, ((0, 0), (0, 1)))  # cone dimension too small
    with pytest.raises(ValueError):
        LyubeznikTable(2, ((0, 0), (0, 0)))  # wrong shape
    good = ((0, 0, 2, 0), (0, 0, 0, 0), (0, 0, 0, 2), (0, 0, 0, 1))
    assert LyubeznikTable(3, good).nonzero() == ((0, 2, 2), (2, 3, 2), (3, 3, 1))
    bad_zero_region = ((0, 0, 2, 0), (0, 1, 0, 0), (0, 0, 0, 2), (0, 0, 0, 1))
    with pytest.raises(ValueError):
        LyubeznikTable(3, bad_zero_region)
    bad_mirror = ((0, 0, 2, 0), (0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 1))
    with pytest.raises(ValueError):
        LyubeznikTable(3, bad_mirror)
    bad_corner = ((0, 0, 2, 0), (0, 0, 0, 0), (0, 0, 0, 2), (0, 0, 0, 0))
    with pytest.raises(ValueError):
        LyubeznikTable(3, bad_corner)


def test_corner_from_graph_examples():
    one = ComponentGraph((("A", 2),))
    assert corner_from_graph(one) == 1
    meeting = ComponentGraph((("A", 2), ("B", 2)), ((0, 1, 1),))
    assert corner_from_graph(meeting) == 1
    disjoint = ComponentGraph((("A", 2), ("B", 2)), ((0, 1, -1),))
    assert corner_from_graph(disjoint) == 2
