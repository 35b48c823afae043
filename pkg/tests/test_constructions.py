import pytest

from addext.additive_code import column_tuple, is_l_linear, is_mds, min_distance
from addext.constructions import example1, expand_l_linear, rs_code, unextendible_pair
from addext.errors import BadDimensions, DependentRows, DuplicatePoints, NoProperExtension
from addext.field_tower import default_tower
from addext.isometry import brute_force_extension, covering_witness, decide_extendible, is_isometry_direct


def test_example1_shape():
    C, f = example1()
    assert C.n == 3 and C.k == 2
    assert f.images == ((0, 3, 2), (1, 0, 1))


@pytest.mark.parametrize("shape", [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2)])
def test_unextendible_pair_over_other_towers(shape):
    t = default_tower(*shape)
    C, f = unextendible_pair(t)
    assert C.n == t.q + 1
    assert is_isometry_direct(f)
    dec = decide_extendible(f)
    assert not dec.extends
    assert covering_witness(t.K, dec.V, dec.U).t == t.q + 1
    if shape in ((2, 1, 2), (3, 1, 2)):
        assert brute_force_extension(f, budget=2**27) is None


def test_unextendible_pair_needs_proper_extension():
    with pytest.raises(NoProperExtension):
        unextendible_pair(default_tower(2, 1, 1))


@pytest.mark.parametrize("shape, n, k_L", [((2, 1, 2), 4, 1), ((2, 1, 2), 4, 2), ((2, 1, 2), 4, 3),
                                          ((2, 1, 3), 5, 2), ((3, 1, 2), 4, 2), ((2, 2, 2), 3, 2)])
def test_rs_code_is_mds_and_l_linear(shape, n, k_L):
    t = default_tower(*shape)
    C = rs_code(t, n, k_L)
    assert C.k == t.m * k_L
    assert min_distance(C) == n - k_L + 1
    assert is_mds(C).is_mds
    assert is_l_linear(C)


def test_rs_code_arguments(f4):
    with pytest.raises(DuplicatePoints):
        rs_code(f4, 3, 2, eval_points=[0, 1, 1])
    with pytest.raises(BadDimensions):
        rs_code(f4, 5, 2)
    with pytest.raises(BadDimensions):
        rs_code(f4, 3, 4)
    with pytest.raises(BadDimensions):
        rs_code(f4, 3, 2, eval_points=[0, 1])
    C = rs_code(f4, 3, 2, eval_points=[1, 2, 3])
    assert is_mds(C).is_mds


def test_expand_l_linear(f4):
    C = expand_l_linear(f4, [(1, 1, 1)])
    assert C.k == 2 and is_l_linear(C) and min_distance(C) == 3
    assert all(S.dim == 2 for S in column_tuple(C))
    with pytest.raises(DependentRows):
        expand_l_linear(f4, [(1, 1, 1), (2, 2, 2)])
