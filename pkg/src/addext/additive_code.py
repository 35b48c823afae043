"""K-linear codes in L^n and their column-space tuples."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    DependentRows,
    EmptyCode,
    EmptyIndexSet,
    FieldMismatch,
    LengthMismatch,
    MalformedInput,
    TooLarge,
)
from .field_tower import FieldTower, tower_from_json
from .k_linalg import Subspace, canonicalize, rank, sum_

ENUM_GUARD = 2**24

Word = tuple[int, ...]
SpaceTuple = tuple[Subspace, ...]


def weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


def expansion_row(t: FieldTower, row: Sequence[int]) -> list[int]:
    """Concatenated K-coordinates of every entry; length n*m."""
    out = []
    for a in row:
        out.extend(t.expand(a))
    return out


def span_words(t: FieldTower, rows: Sequence[Sequence[int]], width: int | None = None) -> list[Word]:
    """All K-combinations of ``rows``, lexicographic in the coefficient tuple.

    The first coefficient is the most significant, so index 0 is the zero word.
    """
    if width is None:
        width = len(rows[0]) if rows else 0
    if t.q ** len(rows) > ENUM_GUARD:
        raise TooLarge(f"{t.q}^{len(rows)} codewords")
    add, mul = t.L.add_table, t.L.mul_table
    words: list[Word] = [(0,) * width]
    for g in reversed(rows):
        multiples = [tuple(mul[lam][x] for x in g) for lam in range(t.q)]
        words = [tuple(add[a][b] for a, b in zip(mg, w)) for mg in multiples for w in words]
    return words


def column_spaces(t: FieldTower, rows: Sequence[Sequence[int]], n: int) -> SpaceTuple:
    """Column space of every column of the k x n matrix ``rows``, inside K^k."""
    return tuple(_column_space(t, tuple(row[i] for row in rows)) for i in range(n))


_COLUMN_CACHE: dict = {}


def _column_space(t: FieldTower, column: tuple[int, ...]) -> Subspace:
    key = (t, column)
    V = _COLUMN_CACHE.get(key)
    if V is None:
        coords = [t.expand(a) for a in column]
        vecs = [tuple(c[j] for c in coords) for j in range(t.m)]
        V = canonicalize(t.K, len(column), vecs)
        if len(_COLUMN_CACHE) > 1_000_000:
            _COLUMN_CACHE.clear()
        _COLUMN_CACHE[key] = V
    return V


def reduce_generators(t: FieldTower, rows: Iterable[Sequence[int]]) -> list[Word]:
    """Greedy maximal K-independent subfamily of ``rows``, original order kept."""
    kept: list[Word] = []
    expanded: list[list[int]] = []
    for row in rows:
        cand = expanded + [expansion_row(t, row)]
        if rank(t.K, cand) == len(cand):
            kept.append(tuple(row))
            expanded = cand
    return kept


@dataclass(frozen=True)
class AdditiveCode:
    """A K-linear code given by a K-basis ``gens`` of k rows in L^n."""

    tower: FieldTower
    n: int
    gens: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(tuple(int(x) for x in r) for r in self.gens))
        for i, r in enumerate(self.gens):
            if len(r) != self.n:
                raise LengthMismatch(f"generator {i} has length {len(r)}, expected {self.n}")
            if any(not 0 <= x < self.tower.order for x in r):
                raise FieldMismatch(f"generator {i} has entries outside L (order {self.tower.order})")
        if self.gens and rank(self.tower.K, [expansion_row(self.tower, r) for r in self.gens]) != len(self.gens):
            raise DependentRows("generator rows are K-linearly dependent")

    @property
    def k(self) -> int:
        return len(self.gens)

    @property
    def size(self) -> int:
        return self.tower.q**self.k

    @cached_property
    def words(self) -> list[Word]:
        return span_words(self.tower, self.gens, self.n)

    @cached_property
    def word_set(self) -> frozenset[Word]:
        return frozenset(self.words)

    def codewords(self) -> Iterator[Word]:
        return iter(self.words)

    def min_distance(self) -> int:
        return min_distance(self)

    def column_tuple(self) -> SpaceTuple:
        return column_tuple(self)

    def to_json(self) -> dict:
        return {"field": self.tower.to_json(), "n": self.n, "generators": [list(r) for r in self.gens]}


def code_from_generators(tower: FieldTower, n: int, rows: Sequence[Sequence[int]]) -> AdditiveCode:
    if not rows:
        raise EmptyCode("a code needs at least one generator row")
    return AdditiveCode(tower, n, tuple(tuple(r) for r in rows))


def min_distance(C: AdditiveCode) -> int:
    if C.k == 0:
        raise EmptyCode("the zero code has no nonzero codeword")
    return min(weight(w) for w in C.words[1:])


class MdsProfile(NamedTuple):
    d: int
    k_L: int
    is_mds: bool
    note: str = ""


def is_mds(C: AdditiveCode) -> MdsProfile:
    d = min_distance(C)
    k_L = C.n - d + 1
    m = C.tower.m
    if C.k % m:
        return MdsProfile(d, k_L, False, f"k={C.k} is not a multiple of m={m}; Singleton equality impossible")
    return MdsProfile(d, k_L, C.k == m * k_L)


def column_tuple(C: AdditiveCode) -> SpaceTuple:
    V = column_spaces(C.tower, C.gens, C.n)
    total = Subspace(C.k, ())
    for Vi in V:
        total = sum_(C.tower.K, total, Vi)
    assert total.dim == C.k, "dimension formula violated"
    return V


class Punctured(NamedTuple):
    code: AdditiveCode
    rank_drop: int


def puncture(C: AdditiveCode, keep: Iterable[int]) -> Punctured:
    """Restrict to the coordinates in ``keep`` (0-based), reducing the basis if needed."""
    keep = sorted(set(keep))
    if not keep:
        raise EmptyIndexSet("puncturing needs at least one coordinate to keep")
    if keep[0] < 0 or keep[-1] >= C.n:
        raise IndexError(f"coordinates {keep} outside 0..{C.n - 1}")
    rows = [tuple(r[i] for i in keep) for r in C.gens]
    reduced = reduce_generators(C.tower, rows)
    code = AdditiveCode(C.tower, len(keep), tuple(reduced))
    return Punctured(code, C.k - code.k)


def is_l_linear(C: AdditiveCode) -> bool:
    """Exhaustive closure test: lam * c in C for every lam in L and basis row c."""
    t = C.tower
    words = C.word_set
    mul = t.L.mul_table
    return all(tuple(mul[lam][x] for x in c) in words for lam in range(t.order) for c in C.gens)


def code_from_json(d) -> AdditiveCode:
    if not isinstance(d, dict):
        raise MalformedInput("code: expected an object")
    for key in ("field", "n", "generators"):
        if key not in d:
            raise MalformedInput(f"code: missing key {key!r}")
    t = tower_from_json(d["field"])
    n = d["n"]
    if not isinstance(n, int) or n < 1:
        raise MalformedInput("code.n: expected positive integer")
    rows = _int_matrix(d["generators"], "code.generators")
    return AdditiveCode(t, n, tuple(tuple(r) for r in rows))


def _int_matrix(rows, where: str) -> list[list[int]]:
    if not isinstance(rows, list):
        raise MalformedInput(f"{where}: expected list of rows")
    for i, r in enumerate(rows):
        if not isinstance(r, list):
            raise MalformedInput(f"{where}[{i}]: expected list")
        for j, x in enumerate(r):
            if not isinstance(x, int) or isinstance(x, bool):
                raise MalformedInput(f"{where}[{i}][{j}]: expected integer, got {x!r}")
    return rows
