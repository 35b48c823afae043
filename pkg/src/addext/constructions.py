"""Concrete codes and maps: the two worked F_4 examples, Reed-Solomon
style MDS codes, and K-expansions of L-linear codes."""
from __future__ import annotations

from typing import Sequence

from .additive_code import AdditiveCode, code_from_generators, is_mds
from .errors import BadDimensions, DependentRows, DuplicatePoints, NoProperExtension
from .field_tower import FieldTower, default_tower
from .isometry import AdditiveMap, is_isometry_direct, map_from_images
from .k_linalg import rank


def example1() -> tuple[AdditiveCode, AdditiveMap]:
    """Additive isometry of a non-linear additive code in F_4^3."""
    t = default_tower(2, 1, 2)
    w = t.alpha
    w2 = t.mul(w, w)
    C = code_from_generators(t, 3, [(1, 1, 0), (w, 0, 1)])
    f = map_from_images(C, [(0, w2, w), (1, 0, 1)])
    assert is_isometry_direct(f)
    return C, f


def unextendible_pair(tower: FieldTower | None = None) -> tuple[AdditiveCode, AdditiveMap]:
    """K-linear isometry of a length q+1 code that no K-monomial map extends.

    C_1 = <(0,1,...,1), (1,x_1,...,x_q)> with x_i running over K in
    integer order; f fixes the first row and sends the second to
    (0,w,...,w) where w is the smallest element of L outside K.
    """
    t = tower or default_tower(2, 1, 2)
    if t.m < 2:
        raise NoProperExtension("K = L: every element of L lies in K")
    q = t.q
    w = t.q  # smallest integer encoding outside K
    v1 = (0,) + (1,) * q
    v2 = (1,) + tuple(range(q))
    C = code_from_generators(t, q + 1, [v1, v2])
    f = map_from_images(C, [v1, (0,) + (w,) * q])
    assert is_isometry_direct(f)
    return C, f


def _powers(t: FieldTower, x: int, count: int) -> list[int]:
    out, acc = [], 1
    for _ in range(count):
        out.append(acc)
        acc = t.mul(acc, x)
    return out


def rs_code(tower: FieldTower, n: int, k_L: int, eval_points: Sequence[int] | None = None,
            verify: bool = True) -> AdditiveCode:
    """Rows b_j * (x_1^e, ..., x_n^e) for basis scalars b_j and 0 <= e < k_L.

    Default evaluation points are the first n elements of L.  With
    ``verify`` the MDS property is checked by codeword enumeration.
    """
    t = tower
    if eval_points is None:
        if n > t.order:
            raise BadDimensions(f"n={n} exceeds |L|={t.order}")
        eval_points = range(n)
    pts = [int(x) for x in eval_points]
    if len(pts) != n:
        raise BadDimensions(f"{len(pts)} evaluation points for n={n}")
    if len(set(pts)) != n:
        raise DuplicatePoints("evaluation points must be distinct")
    if any(not 0 <= x < t.order for x in pts):
        raise BadDimensions("evaluation points must lie in L")
    if not 1 <= k_L <= n:
        raise BadDimensions(f"need 1 <= k_L <= n, got k_L={k_L}, n={n}")
    cols = [_powers(t, x, k_L) for x in pts]
    rows = [tuple(t.mul(b, cols[i][e]) for i in range(n)) for b in t.basis for e in range(k_L)]
    C = code_from_generators(t, n, rows)
    if verify:
        prof = is_mds(C)
        assert prof.is_mds and prof.d == n - k_L + 1, prof
    return C


def expand_l_linear(tower: FieldTower, A_L: Sequence[Sequence[int]]) -> AdditiveCode:
    """K-basis {b_i * row}, grouped by basis scalar, of the L-span of ``A_L``."""
    t = tower
    if rank(t.L, A_L) != len(A_L):
        raise DependentRows("rows of A_L are L-linearly dependent")
    n = len(A_L[0])
    rows = [tuple(t.mul(b, x) for x in r) for b in t.basis for r in A_L]
    return code_from_generators(t, n, rows)
