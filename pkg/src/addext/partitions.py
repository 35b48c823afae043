"""Vector space partitions of K^m and the minimum part count sigma."""
from __future__ import annotations

import math
from typing import Optional, Sequence

from .errors import AmbientMismatch, BudgetExceeded, Degenerate
from .field_tower import FiniteField
from .k_linalg import Subspace, all_vectors, enumerate_subspaces, enumerate_vectors

DEFAULT_BUDGET = 10**7


def is_partition(K: FiniteField, m: int, parts: Sequence[Subspace]) -> bool:
    """Proper nonzero parts covering each nonzero vector of K^m exactly once."""
    for P in parts:
        if P.ambient_dim != m:
            raise AmbientMismatch(f"part in ambient dimension {P.ambient_dim}, expected {m}")
    if any(not 0 < P.dim < m for P in parts):
        return False
    seen = set()
    for P in parts:
        for x in enumerate_vectors(K, P):
            if not any(x):
                continue
            if x in seen:
                return False
            seen.add(x)
    return len(seen) == K.order**m - 1


def beutelspacher_bound(q: int, m: int) -> int:
    if m < 2:
        raise Degenerate("partitions need m >= 2")
    return q ** math.ceil(m / 2) + 1


class _Search:
    """Exact cover of the nonzero vectors of K^m by proper nonzero subspaces.

    Branches only on parts containing the smallest uncovered vector.
    """

    def __init__(self, K: FiniteField, m: int, budget: int):
        if m < 2:
            raise Degenerate("K^1 has no proper nonzero subspace")
        self.budget = budget
        self.nodes = 0
        index = {v: i for i, v in enumerate(x for x in all_vectors(K.order, m) if any(x))}
        self.nvec = len(index)
        self.full = (1 << self.nvec) - 1
        self.spaces = list(enumerate_subspaces(K, m, range(1, m)))
        masks = []
        for S in self.spaces:
            mask = 0
            for x in enumerate_vectors(K, S):
                if any(x):
                    mask |= 1 << index[x]
            masks.append(mask)
        self.masks = masks
        # candidates by vector, largest parts first
        self.by_vector = [
            sorted((j for j, mk in enumerate(masks) if mk >> i & 1), key=lambda j: (-self.spaces[j].dim, j))
            for i in range(self.nvec)
        ]
        self.max_part = max(bin(mk).count("1") for mk in masks)

    def find(self, limit: int) -> Optional[list[int]]:
        """A partition with at most ``limit`` parts, or None."""
        return self._dfs(0, [], limit)

    def _dfs(self, covered: int, chosen: list[int], limit: int):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"partition search exceeded {self.budget} nodes")
        if covered == self.full:
            return list(chosen)
        remaining = self.nvec - bin(covered).count("1")
        if remaining > (limit - len(chosen)) * self.max_part:
            return None
        free = ~covered & self.full
        i = (free & -free).bit_length() - 1
        for j in self.by_vector[i]:
            mk = self.masks[j]
            if mk & covered:
                continue
            chosen.append(j)
            found = self._dfs(covered | mk, chosen, limit)
            chosen.pop()
            if found is not None:
                return found
        return None


def partition_with_at_most(K: FiniteField, m: int, limit: int,
                           budget: int = DEFAULT_BUDGET) -> Optional[list[Subspace]]:
    """Exhaustive search; None certifies that no partition with <= limit parts exists."""
    s = _Search(K, m, budget)
    found = s.find(limit)
    return None if found is None else [s.spaces[j] for j in found]


def min_partition(K: FiniteField, m: int, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    """A partition of K^m with the fewest parts (iterative deepening on the count)."""
    s = _Search(K, m, budget)
    limit = 2
    while True:
        found = s.find(limit)
        if found is not None:
            return [s.spaces[j] for j in found]
        limit += 1


def sigma(K: FiniteField, m: int, budget: int = DEFAULT_BUDGET) -> int:
    return len(min_partition(K, m, budget))
