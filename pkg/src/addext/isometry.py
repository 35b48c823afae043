"""K-linear maps on codes: isometry tests, the counting criterion, extendibility.

A K-linear map ``f: C -> L^n`` is stored as the images of the basis rows
of C.  Two independent routes decide whether f extends to a K-monomial
map: comparing the column-space tuples of C and f(C) as multisets, and an
explicit search over permutations and invertible K-linear coordinate maps.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .additive_code import (
    AdditiveCode,
    SpaceTuple,
    Word,
    _int_matrix,
    code_from_json,
    column_spaces,
    column_tuple,
    span_words,
    weight,
)
from .errors import (
    AmbientMismatch,
    BudgetExceeded,
    CriterionFails,
    FieldMismatch,
    LengthMismatch,
    MalformedInput,
    NotAnIsometry,
    ShapeMismatch,
    TooLarge,
)
from .field_tower import FieldTower, FiniteField, KLinearBijection, enumerate_gl
from .k_linalg import Subspace, contains, enumerate_subspaces, enumerate_vectors, intersect

ENUM_GUARD = 2**24
BRUTE_FORCE_BUDGET = 2**26


@dataclass(frozen=True)
class AdditiveMap:
    domain: AdditiveCode
    images: tuple[Word, ...]

    @property
    def tower(self) -> FieldTower:
        return self.domain.tower

    def image_code_rows(self) -> tuple[Word, ...]:
        return self.images

    def image_tuple(self) -> SpaceTuple:
        return column_spaces(self.tower, self.images, self.domain.n)

    def to_json(self) -> dict:
        return {"code": self.domain.to_json(), "images": [list(r) for r in self.images]}


def map_from_images(C: AdditiveCode, images: Sequence[Sequence[int]]) -> AdditiveMap:
    if len(images) != C.k:
        raise ShapeMismatch(f"{len(images)} images for a code of K-dimension {C.k}")
    rows = []
    for i, r in enumerate(images):
        if len(r) != C.n:
            raise ShapeMismatch(f"image {i} has length {len(r)}, expected {C.n}")
        if any(not 0 <= int(x) < C.tower.order for x in r):
            raise FieldMismatch(f"image {i} has entries outside L (order {C.tower.order})")
        rows.append(tuple(int(x) for x in r))
    return AdditiveMap(C, tuple(rows))


def identity_map(C: AdditiveCode) -> AdditiveMap:
    return AdditiveMap(C, C.gens)


def map_from_json(d) -> AdditiveMap:
    if not isinstance(d, dict) or "code" not in d or "images" not in d:
        raise MalformedInput("map: expected an object with keys 'code' and 'images'")
    C = code_from_json(d["code"])
    return map_from_images(C, _int_matrix(d["images"], "map.images"))


def image_words(f: AdditiveMap) -> list[Word]:
    return span_words(f.tower, f.images, f.domain.n)


def is_isometry_direct(f: AdditiveMap) -> bool:
    """Weight preservation on all q^k codewords."""
    n = f.domain.n
    joined = [g + h for g, h in zip(f.domain.gens, f.images)]
    for w in span_words(f.tower, joined, 2 * n):
        if weight(w[:n]) != weight(w[n:]):
            return False
    return True


class WeightProfile(NamedTuple):
    """Integer-scaled indicator sum ``x -> sum_i q^(k - dim V_i) [x in V_i]``.

    ``values`` holds the nonzero entries only; absent vectors have value 0.
    """

    ambient: int
    values: dict

    def __getitem__(self, x) -> int:
        return self.values.get(tuple(x), 0)


def weight_profile(K: FiniteField, spaces: Sequence[Subspace], k: int | None = None) -> WeightProfile:
    if k is None:
        if not spaces:
            raise AmbientMismatch("ambient dimension of an empty tuple must be given")
        k = spaces[0].ambient_dim
    q = K.order
    if q**k > ENUM_GUARD:
        raise TooLarge(f"{q}^{k} vectors")
    values: dict = {}
    for V in spaces:
        if V.ambient_dim != k:
            raise AmbientMismatch(f"space in ambient {V.ambient_dim}, expected {k}")
        scale = q ** (k - V.dim)
        for x in enumerate_vectors(K, V):
            values[x] = values.get(x, 0) + scale
    return WeightProfile(k, values)


_PROFILE_CACHE: dict = {}


def _profile_key(K: FiniteField, spaces: Sequence[Subspace]):
    key = (K.p, K.order, K.modulus, tuple(spaces))
    prof = _PROFILE_CACHE.get(key)
    if prof is None:
        prof = weight_profile(K, key[-1]).values
        if len(_PROFILE_CACHE) > 200_000:
            _PROFILE_CACHE.clear()
        _PROFILE_CACHE[key] = prof
    return prof


def _ambient(spaces: Sequence[Subspace]) -> set[int]:
    return {V.ambient_dim for V in spaces}


def criterion_holds(K: FiniteField, V: Sequence[Subspace], U: Sequence[Subspace]) -> bool:
    """Pointwise equality of the two scaled indicator sums."""
    dims = _ambient(V) | _ambient(U)
    if len(dims) > 1:
        raise AmbientMismatch(f"mixed ambient dimensions {sorted(dims)}")
    if not V and not U:
        return True
    return _profile_key(K, V) == _profile_key(K, U)


def tuples_equivalent(V: Sequence[Subspace], U: Sequence[Subspace]) -> bool:
    """Equal as multisets, i.e. equal up to a permutation of positions."""
    if len(V) != len(U):
        raise LengthMismatch(f"tuples of length {len(V)} and {len(U)}")
    if len(_ambient(V) | _ambient(U)) > 1:
        raise AmbientMismatch("tuples live in different ambient spaces")
    return Counter(V) == Counter(U)


class ExtensionDecision(NamedTuple):
    extends: bool
    V: SpaceTuple
    U: SpaceTuple


def decide_extendible(f: AdditiveMap) -> ExtensionDecision:
    if not is_isometry_direct(f):
        raise NotAnIsometry("the map does not preserve Hamming weight")
    V = column_tuple(f.domain)
    U = f.image_tuple()
    return ExtensionDecision(tuples_equivalent(V, U), V, U)


# -- monomial maps -----------------------------------------------------------

@dataclass(frozen=True)
class MonomialMap:
    """``u -> (g_0(u[pi[0]]), ..., g_{n-1}(u[pi[n-1]]))``, positions 0-based."""

    pi: tuple[int, ...]
    coord_maps: tuple[KLinearBijection, ...]

    def __post_init__(self):
        if sorted(self.pi) != list(range(len(self.pi))):
            raise ValueError(f"{self.pi} is not a permutation")
        if len(self.coord_maps) != len(self.pi):
            raise ShapeMismatch("one coordinate map per position is required")

    @property
    def n(self) -> int:
        return len(self.pi)

    def to_json(self) -> dict:
        return {"pi": list(self.pi), "coord_maps": [list(g.matrix) for g in self.coord_maps]}


def identity_monomial(t: FieldTower, n: int) -> MonomialMap:
    one = KLinearBijection(t.m, tuple(int(r == c) for r in range(t.m) for c in range(t.m)))
    return MonomialMap(tuple(range(n)), (one,) * n)


def monomial_from_json(t: FieldTower, d) -> MonomialMap:
    if not isinstance(d, dict) or "pi" not in d or "coord_maps" not in d:
        raise MalformedInput("monomial map: expected keys 'pi' and 'coord_maps'")
    maps = []
    for i, g in enumerate(d["coord_maps"]):
        if not isinstance(g, list) or len(g) != t.m * t.m:
            raise MalformedInput(f"monomial.coord_maps[{i}]: expected {t.m * t.m} K-integers")
        maps.append(KLinearBijection(t.m, tuple(int(x) for x in g)))
    return MonomialMap(tuple(int(x) for x in d["pi"]), tuple(maps))


def apply_monomial(t: FieldTower, M: MonomialMap, v: Sequence[int]) -> Word:
    if len(v) != M.n:
        raise LengthMismatch(f"vector of length {len(v)} for a map on L^{M.n}")
    return tuple(g.table(t)[v[s]] for g, s in zip(M.coord_maps, M.pi))


def monomial_candidates(t: FieldTower, n: int) -> int:
    return math.factorial(n) * len(enumerate_gl(t)) ** n


def brute_force_extension(f: AdditiveMap, budget: int = BRUTE_FORCE_BUDGET) -> Optional[MonomialMap]:
    """Lexicographically first K-monomial map agreeing with f on the basis, or None.

    Candidates are ordered by permutation, then by each coordinate map in
    ``enumerate_gl`` order.  The agreement condition splits into one
    condition per output position, so for a fixed permutation the first
    matching map at each position gives the first matching candidate and
    a permutation with an unmatched position rules out all its candidates.
    """
    t = f.tower
    n = f.domain.n
    total = monomial_candidates(t, n)
    if total > budget:
        raise BudgetExceeded(f"{total} monomial candidates exceed budget {budget}")
    gl = enumerate_gl(t)
    tables = [g.table(t) for g in gl]
    src_cols = [tuple(r[s] for r in f.domain.gens) for s in range(n)]
    dst_cols = [tuple(r[i] for r in f.images) for i in range(n)]

    def first_match(src, dst):
        for idx, tab in enumerate(tables):
            if all(tab[a] == b for a, b in zip(src, dst)):
                return idx
        return None

    compat = [[first_match(src_cols[s], dst_cols[i]) for s in range(n)] for i in range(n)]
    for pi in itertools.permutations(range(n)):
        choice = [compat[i][pi[i]] for i in range(n)]
        if None not in choice:
            return MonomialMap(pi, tuple(gl[c] for c in choice))
    return None


# -- coverings and nontrivial solutions --------------------------------------

class CoveringWitness(NamedTuple):
    side: str  # "V" or "U": the tuple holding the covered space
    index: int
    parts: tuple[int, ...]  # positions in the opposite tuple
    t: int  # distinct nonzero pieces


def _leftover(V: Sequence[Subspace], U: Sequence[Subspace]) -> tuple[list[int], list[int]]:
    """Positions not absorbed by a multiset matching; earlier positions match first."""
    budget = Counter(V) & Counter(U)
    left = []
    for spaces in (V, U):
        used = Counter()
        rest = []
        for i, S in enumerate(spaces):
            if used[S] < budget[S]:
                used[S] += 1
            else:
                rest.append(i)
        left.append(rest)
    return left[0], left[1]


def covering_witness(K: FiniteField, V: Sequence[Subspace], U: Sequence[Subspace]) -> Optional[CoveringWitness]:
    """A space W, unmatched in one tuple, that is the union of its proper
    nonzero intersections with unmatched spaces of the other tuple.

    Spaces of largest dimension are tried first; such a space always has a
    covering when the criterion holds and the tuples are inequivalent.
    """
    if not criterion_holds(K, V, U):
        raise CriterionFails("the tuples do not satisfy the counting criterion")
    left_v, left_u = _leftover(V, U)
    if not left_v and not left_u:
        return None
    sides = {"V": (V, left_v, U, left_u), "U": (U, left_u, V, left_v)}
    order = sorted(
        [(-V[i].dim, 0, i, "V") for i in left_v] + [(-U[i].dim, 1, i, "U") for i in left_u]
    )
    for _, _, idx, side in order:
        own, _, other, other_left = sides[side]
        W = own[idx]
        if W.is_zero():
            continue
        parts, pieces = [], set()
        for j in other_left:
            X = intersect(K, W, other[j])
            if 0 < X.dim < W.dim:
                parts.append(j)
                pieces.add(X)
        if not pieces:
            continue
        covered = all(
            any(contains(K, X, x) for X in pieces)
            for x in enumerate_vectors(K, W)
            if any(x)
        )
        if covered:
            return CoveringWitness(side, idx, tuple(parts), len(pieces))
    return None


def search_nontrivial_solutions(K: FiniteField, k: int, n: int, dim_bound: int | None = None,
                                budget: int = 2**22) -> list[tuple[SpaceTuple, SpaceTuple]]:
    """Every unordered pair of inequivalent n-multisets of subspaces of K^k
    (dimension <= dim_bound) satisfying the counting criterion.

    Multisets are sorted tuples; pairs come out grouped by profile in
    enumeration order.
    """
    dims = range((k if dim_bound is None else min(dim_bound, k)) + 1)
    alphabet = sorted(enumerate_subspaces(K, k, dims))
    count = math.comb(len(alphabet) + n - 1, n)
    if count > budget:
        raise BudgetExceeded(f"{count} multisets exceed budget {budget}")
    groups: dict = {}
    for combo in itertools.combinations_with_replacement(alphabet, n):
        prof = weight_profile(K, combo, k).values
        groups.setdefault(tuple(sorted(prof.items())), []).append(combo)
    out = []
    for members in groups.values():
        for a, b in itertools.combinations(members, 2):
            out.append((a, b))
    return out
