import itertools

import pytest
from hypothesis import given, settings, strategies as st

from addext.errors import AmbientMismatch, LengthMismatch
from addext.field_tower import field_of_order
from addext.k_linalg import (
    Subspace,
    canonicalize,
    contains,
    enumerate_subspaces,
    enumerate_vectors,
    full_space,
    gaussian_binomial,
    intersect,
    sum_,
    zero_space,
)

F2 = field_of_order(2)
F3 = field_of_order(3)


def span_set(F, vectors, k):
    """Closure of {0} under adding multiples of the given vectors."""
    out = {(0,) * k}
    for v in vectors:
        out = {tuple(F.add(x, F.mul(a, y)) for x, y in zip(w, v)) for w in out for a in range(F.order)}
    return frozenset(out)


def subspace_count_by_closure(F, k, d):
    """Distinct spans of d-tuples of vectors having exactly q^d elements."""
    vecs = list(itertools.product(range(F.order), repeat=k))
    spans = set()
    for combo in itertools.combinations(vecs, d):
        S = span_set(F, combo, k)
        if len(S) == F.order**d:
            spans.add(S)
    return len(spans)


def test_canonicalize_examples():
    V = canonicalize(F2, 2, [(0, 1), (0, 0)])
    assert V.basis == ((0, 1),) and V.dim == 1
    assert canonicalize(F2, 2, [(1, 0), (0, 1)]) == full_space(2)
    assert canonicalize(F2, 2, []) == zero_space(2)
    with pytest.raises(LengthMismatch):
        canonicalize(F2, 2, [(1, 0, 0)])


def test_sum_intersect_examples():
    a = canonicalize(F2, 2, [(0, 1)])
    b = canonicalize(F2, 2, [(1, 0)])
    assert sum_(F2, a, b) == full_space(2)
    assert intersect(F2, a, b) == zero_space(2)
    assert intersect(F2, a, a) == a
    with pytest.raises(AmbientMismatch):
        sum_(F2, a, full_space(3))


# frozen from the closure oracle above
@pytest.mark.parametrize("F, k, d, expected", [(F2, 2, 1, 3), (F2, 3, 1, 7), (F2, 4, 2, 35), (F3, 2, 1, 4), (F3, 3, 2, 13)])
def test_subspace_counts(F, k, d, expected):
    assert subspace_count_by_closure(F, k, d) == expected
    assert len(list(enumerate_subspaces(F, k, [d]))) == expected == gaussian_binomial(k, d, F.order)


def test_all_subspaces_f2_squared():
    spaces = list(enumerate_subspaces(F2, 2))
    assert len(spaces) == 5
    assert [S.dim for S in spaces] == [0, 1, 1, 1, 2]


@pytest.mark.parametrize("F, k", [(F2, 3), (F2, 4), (F3, 2), (F3, 3)])
def test_enumerated_subspaces_distinct_and_canonical(F, k):
    spaces = list(enumerate_subspaces(F, k))
    assert len(set(spaces)) == len(spaces)
    sets = {span_set(F, S.basis, k) for S in spaces}
    assert len(sets) == len(spaces)
    for S in spaces:
        assert canonicalize(F, k, S.basis) == S


def vectors(F, k):
    return st.lists(st.tuples(*[st.integers(0, F.order - 1)] * k), max_size=4)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(F2, 3), (F2, 4), (F3, 2), (F3, 3)]).flatmap(
    lambda fk: st.tuples(st.just(fk), vectors(*fk), vectors(*fk))))
def test_dimension_identity_and_membership(args):
    (F, k), vs, ws = args
    V, W = canonicalize(F, k, vs), canonicalize(F, k, ws)
    S, I = sum_(F, V, W), intersect(F, V, W)
    assert V.dim + W.dim == S.dim + I.dim
    sV, sW = span_set(F, vs, k), span_set(F, ws, k)
    assert set(enumerate_vectors(F, I)) == sV & sW
    assert set(enumerate_vectors(F, V)) == sV
    for x in itertools.product(range(F.order), repeat=k):
        assert contains(F, V, x) == (x in sV)
    assert canonicalize(F, k, V.basis) == V


def test_modular_law_f2_cubed():
    spaces = list(enumerate_subspaces(F2, 3))
    for A, B, C in itertools.product(spaces, repeat=3):
        if contains_space(A, C):
            lhs = sum_(F2, A, intersect(F2, B, C))
            rhs = intersect(F2, sum_(F2, A, B), C)
            assert lhs == rhs


def contains_space(A: Subspace, C: Subspace) -> bool:
    return all(contains(F2, C, v) for v in A.basis)
