"""Exact linear algebra over a :class:`FiniteField`.

Subspaces of ``F^k`` are stored by their reduced row echelon basis, so
two :class:`Subspace` values compare equal exactly when they are the same
set of vectors.  Vectors are tuples of field ints.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import AmbientMismatch, LengthMismatch, TooLarge
from .field_tower import FiniteField

ENUM_GUARD = 2**24

Vector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Subspace:
    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def encode(self) -> list[list[int]]:
        return [list(r) for r in self.basis]

    def __repr__(self):
        return f"Subspace({self.ambient_dim}, {self.encode()})"


def rref(F: FiniteField, rows: Iterable[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    A = [list(r) for r in rows]
    if not A:
        return [], []
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        s = inv[A[r][c]]
        if s != 1:
            A[r] = [mul[s][x] for x in A[r]]
        pivot_row = A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = neg[A[i][c]]
                row = A[i]
                A[i] = [add[x][mul[f][y]] for x, y in zip(row, pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(F: FiniteField, rows: Iterable[Sequence[int]]) -> int:
    return len(rref(F, rows)[0])


def canonicalize(F: FiniteField, ambient_dim: int, vectors: Iterable[Sequence[int]]) -> Subspace:
    vectors = list(vectors)
    for v in vectors:
        if len(v) != ambient_dim:
            raise LengthMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    rows, _ = rref(F, vectors)
    return Subspace(ambient_dim, tuple(tuple(r) for r in rows))


def zero_space(k: int) -> Subspace:
    return Subspace(k, ())


def full_space(k: int) -> Subspace:
    return Subspace(k, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))


def _check_ambient(V: Subspace, W: Subspace):
    if V.ambient_dim != W.ambient_dim:
        raise AmbientMismatch(f"ambient dimensions {V.ambient_dim} and {W.ambient_dim}")


def sum_(F: FiniteField, V: Subspace, W: Subspace) -> Subspace:
    _check_ambient(V, W)
    return canonicalize(F, V.ambient_dim, V.basis + W.basis)


def left_kernel(F: FiniteField, rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of ``{a : sum_i a_i rows[i] = 0}``, from the RREF of ``[rows | I]``."""
    n = len(rows)
    if n == 0:
        return []
    width = len(rows[0])
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    reduced, _ = rref(F, aug)
    return [r[width:] for r in reduced if not any(r[:width])]


def intersect(F: FiniteField, V: Subspace, W: Subspace) -> Subspace:
    _check_ambient(V, W)
    if V.is_zero() or W.is_zero():
        return zero_space(V.ambient_dim)
    k = V.ambient_dim
    kernel = left_kernel(F, V.basis + W.basis)
    vecs = []
    for a in kernel:
        v = [0] * k
        for coef, row in zip(a, V.basis):
            if coef:
                v = [F.add(x, F.mul(coef, y)) for x, y in zip(v, row)]
        vecs.append(v)
    return canonicalize(F, k, vecs)


def contains(F: FiniteField, V: Subspace, x: Sequence[int]) -> bool:
    if len(x) != V.ambient_dim:
        raise AmbientMismatch(f"vector of length {len(x)} in ambient dimension {V.ambient_dim}")
    x = list(x)
    for row, c in zip(V.basis, V.pivots):
        f = x[c]
        if f:
            nf = F.neg_table[f]
            x = [F.add_table[a][F.mul_table[nf][b]] for a, b in zip(x, row)]
    return not any(x)


def is_subspace_of(F: FiniteField, V: Subspace, W: Subspace) -> bool:
    _check_ambient(V, W)
    return all(contains(F, W, v) for v in V.basis)


def enumerate_vectors(F: FiniteField, V: Subspace) -> Iterator[Vector]:
    """All ``q^dim`` vectors of V, ordered lexicographically by coefficient tuple."""
    if F.order**V.dim > ENUM_GUARD:
        raise TooLarge(f"{F.order}^{V.dim} vectors")
    k = V.ambient_dim
    add, mul = F.add_table, F.mul_table
    for coeffs in itertools.product(range(F.order), repeat=V.dim):
        v = [0] * k
        for a, row in zip(coeffs, V.basis):
            if a:
                v = [add[x][mul[a][y]] for x, y in zip(v, row)]
        yield tuple(v)


def all_vectors(q: int, k: int) -> Iterator[Vector]:
    return itertools.product(range(q), repeat=k)


def gaussian_binomial(n: int, d: int, q: int) -> int:
    if d < 0 or d > n:
        return 0
    num = den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(F: FiniteField, ambient_dim: int,
                        dims: Iterable[int] | None = None) -> Iterator[Subspace]:
    """Every subspace of ``F^ambient_dim`` whose dimension is in ``dims``.

    Order: by dimension, then pivot set (lexicographic), then the free
    entries of the RREF basis (lexicographic).
    """
    n, q = ambient_dim, F.order
    dims = sorted(set(range(n + 1) if dims is None else dims))
    total = sum(gaussian_binomial(n, d, q) for d in dims)
    if total > ENUM_GUARD:
        raise TooLarge(f"{total} subspaces")
    for d in dims:
        if not 0 <= d <= n:
            continue
        for pivots in itertools.combinations(range(n), d):
            pset = set(pivots)
            free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pset]
            for values in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(d)]
                for r, p in enumerate(pivots):
                    rows[r][p] = 1
                for (r, c), v in zip(free, values):
                    rows[r][c] = v
                yield Subspace(n, tuple(tuple(r) for r in rows))
