"""Verification campaigns for the extension results.

Each campaign generates codes and K-linear isometries at small
parameters, checks the claimed conclusion case by case and returns a
:class:`Report`.  Failures carry the map JSON so they can be replayed
through :func:`decide_extendible` and :func:`is_isometry_direct`.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional, Sequence

from .additive_code import AdditiveCode, code_from_generators, column_tuple, is_l_linear, is_mds, weight
from .constructions import expand_l_linear, rs_code
from .errors import BudgetExceeded, HypothesisViolated, TooLarge
from .field_tower import FieldTower, default_tower, field_of_order
from .isometry import (
    AdditiveMap,
    brute_force_extension,
    criterion_holds,
    decide_extendible,
    is_isometry_direct,
    monomial_candidates,
    search_nontrivial_solutions,
    tuples_equivalent,
)
from .k_linalg import Subspace, enumerate_subspaces, intersect, sum_
from .partitions import partition_with_at_most

THEOREMS = ("prop1", "prop2", "prop3", "prop4", "prop5", "lemma_mds", "lemma_linear", "threshold_n")
MODES = ("exhaustive", "pruned", "sampled")
CROSS_CHECK_LIMIT = 2**16
PACKED_LIMIT = 2**16


@dataclass(frozen=True)
class Campaign:
    """What to check and how hard to try.

    ``budget`` bounds the number of candidate evaluations in map
    enumeration.  In ``exhaustive`` mode running out of budget is an error
    unless ``allow_sampling`` is set; ``pruned`` stops at the budget and
    records coverage; ``sampled`` walks the search tree in a seeded random
    order up to the budget.
    """

    theorem: str
    p: int = 2
    s: int = 1
    m: int = 2
    n: Optional[int] = None
    k_L: Optional[int] = None
    k_max: Optional[int] = None
    n_max: Optional[int] = None
    budget: int = 2**24
    mode: str = "exhaustive"
    seed: int = 0
    allow_sampling: bool = False
    maps: bool = True
    cross_check: bool = True
    catalog: bool = False

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem id {self.theorem!r}; choose from {THEOREMS}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.budget <= 0:
            raise ValueError("budget must be positive")

    def params(self) -> dict:
        d = asdict(self)
        d.pop("theorem")
        d.pop("mode")
        return {k: v for k, v in d.items() if v is not None}


@dataclass
class Report:
    theorem: str
    params: dict
    mode: str
    cases_checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def verdict(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "mode": self.mode,
            "cases_checked": self.cases_checked,
            "failures": self.failures,
            "verdict": self.verdict,
            "details": self.details,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


# -- generation ----------------------------------------------------------------

def all_codes(t: FieldTower, n: int, k_max: int, k_min: int = 1) -> Iterator[AdditiveCode]:
    """Every K-linear code in L^n with k_min <= k <= k_max, one RREF basis each."""
    m = t.m
    for S in enumerate_subspaces(t.K, n * m, range(k_min, min(k_max, n * m) + 1)):
        rows = [tuple(t.assemble(r[i * m:(i + 1) * m]) for i in range(n)) for r in S.basis]
        yield code_from_generators(t, n, rows)


def all_maps(C: AdditiveCode) -> Iterator[AdditiveMap]:
    vectors = list(itertools.product(range(C.tower.order), repeat=C.n))
    for images in itertools.product(vectors, repeat=C.k):
        yield AdditiveMap(C, images)


class IsometrySearch:
    """Depth-first assignment of basis images with weight pruning.

    Level j only tries vectors of the same weight as basis row j; a
    candidate is dropped as soon as one new K-combination changes weight.
    ``covered`` counts full candidate maps decided so far, including the
    ones eliminated with a pruned subtree, out of ``total = |L|^(nk)``.

    Vectors of L^n are packed into ints (first coordinate most
    significant), so candidate order is lexicographic.
    """

    def __init__(self, C: AdditiveCode, budget: int, mode: str = "exhaustive",
                 seed: int = 0, allow_sampling: bool = False):
        self.C = C
        t = self.t = C.tower
        self.budget = budget
        self.mode = mode
        self.allow_sampling = allow_sampling
        self.rng = random.Random(seed) if mode == "sampled" else None
        n, Q = C.n, t.order
        self.space = Q**n
        if self.space > PACKED_LIMIT:
            raise TooLarge(f"|L|^n = {self.space} vectors exceeds {PACKED_LIMIT}")
        vectors = list(itertools.product(range(Q), repeat=n))
        self.weight = [weight(v) for v in vectors]
        self.by_weight: dict[int, list[int]] = {}
        for i, w in enumerate(self.weight):
            self.by_weight.setdefault(w, []).append(i)
        self.scale = [[self.pack(tuple(t.mul(lam, x) for x in v)) for v in vectors] for lam in range(t.q)]
        if t.p == 2:
            self.add = None  # packed addition is XOR
        else:
            self.add = [[self.pack(tuple(t.add(a, b) for a, b in zip(u, v))) for v in vectors] for u in vectors]
        self.gens = [self.pack(g) for g in C.gens]
        self.vectors = vectors
        self.total = self.space**C.k
        self.covered = 0
        self.evaluations = 0
        self.complete = False
        self.max_depth = 0

    def pack(self, v) -> int:
        out = 0
        for x in v:
            out = out * self.t.order + x
        return out

    def _subtree(self, level: int) -> int:
        return self.space ** (self.C.k - level - 1)

    def run(self) -> Iterator[tuple]:
        """Yield image tuples of every isometry reached."""
        try:
            for images in self._dfs(0, [(0, 0)], []):
                yield tuple(self.vectors[y] for y in images)
            self.complete = True
        except _Stop:
            pass

    def _dfs(self, level: int, span: list, images: list):
        if level == self.C.k:
            self.covered += 1
            yield images
            return
        self.max_depth = max(self.max_depth, level + 1)
        W, add, scale = self.weight, self.add, self.scale
        g = self.gens[level]
        cands = self.by_weight.get(W[g], [])
        self.covered += (self.space - len(cands)) * self._subtree(level)
        if self.rng is not None:
            cands = list(cands)
            self.rng.shuffle(cands)
        gm = [scale[lam][g] for lam in range(1, self.t.q)]
        for y in cands:
            self.evaluations += 1
            if self.evaluations > self.budget:
                if self.mode == "exhaustive" and not self.allow_sampling:
                    raise BudgetExceeded(f"isometry enumeration exceeded {self.budget} evaluations")
                raise _Stop
            new = []
            ok = True
            for lam, a in enumerate(gm, 1):
                b = scale[lam][y]
                if add is None:
                    for x, fx in span:
                        u, v = x ^ a, fx ^ b
                        if W[u] != W[v]:
                            ok = False
                            break
                        new.append((u, v))
                else:
                    ra, rb = add[a], add[b]
                    for x, fx in span:
                        u, v = ra[x], rb[fx]
                        if W[u] != W[v]:
                            ok = False
                            break
                        new.append((u, v))
                if not ok:
                    break
            if not ok:
                self.covered += self._subtree(level)
                continue
            images.append(y)
            yield from self._dfs(level + 1, span + new, images)
            images.pop()


class _Stop(Exception):
    pass


def _failure(f: AdditiveMap, **trace) -> dict:
    return {"map": f.to_json(), "trace": trace}


def _tower(c: Campaign) -> FieldTower:
    return default_tower(c.p, c.s, c.m)


def _check_isometries(report: Report, C: AdditiveCode, c: Campaign, want=None) -> IsometrySearch:
    """Run the isometry search on C and check that every reached isometry extends.

    ``want`` filters which isometries are in scope (e.g. L-linear image).
    """
    search = IsometrySearch(C, c.budget, c.mode, c.seed, c.allow_sampling)
    V = column_tuple(C)
    small = monomial_candidates(C.tower, C.n) <= CROSS_CHECK_LIMIT
    for images in search.run():
        f = AdditiveMap(C, images)
        if want is not None and not want(f):
            continue
        report.cases_checked += 1
        U = f.image_tuple()
        extends = tuples_equivalent(V, U)
        brute = None
        if c.cross_check and small:
            brute = brute_force_extension(f) is not None
        if not extends or (brute is not None and brute != extends):
            report.failures.append(_failure(f, extends=extends, brute_force=brute,
                                            V=[S.encode() for S in V], U=[S.encode() for S in U]))
    return search


def _record_search(report: Report, search: IsometrySearch, label: str = "search"):
    entry = {
        "candidates_total": search.total,
        "candidates_covered": search.covered,
        "coverage": search.covered / search.total,
        "evaluations": search.evaluations,
        "complete": search.complete,
        "max_depth": search.max_depth,
    }
    report.details.setdefault(label, []).append(entry)
    if not search.complete:
        report.mode = "sampled" if search.mode == "sampled" else "partial"


# -- theorems -------------------------------------------------------------------

def _prop1(c: Campaign, report: Report):
    t = _tower(c)
    n = c.n if c.n is not None else t.q
    if n > t.q:
        raise HypothesisViolated(f"prop1 needs n <= q, got n={n}, q={t.q}")
    k_max = c.k_max if c.k_max is not None else n * t.m
    codes = 0
    for C in all_codes(t, n, k_max):
        codes += 1
        search = _check_isometries(report, C, c)
        if not search.complete:
            _record_search(report, search)
    report.details["codes"] = codes


def _prop2(c: Campaign, report: Report):
    """Unpruned: every map of every small code, both equivalences."""
    t = _tower(c)
    n_max = c.n_max if c.n_max is not None else (c.n or 2)
    k_max = c.k_max if c.k_max is not None else 2
    total = sum(
        sum(1 for _ in all_codes(t, n, k_max)) for n in range(1, n_max + 1)
    )
    report.details["codes"] = total
    isos = 0
    for n in range(1, n_max + 1):
        for C in all_codes(t, n, k_max):
            V = column_tuple(C)
            for f in all_maps(C):
                report.cases_checked += 1
                if report.cases_checked > c.budget:
                    raise BudgetExceeded(f"prop2 sweep exceeded {c.budget} maps")
                direct = is_isometry_direct(f)
                U = f.image_tuple()
                crit = criterion_holds(t.K, V, U)
                if direct != crit:
                    report.failures.append(_failure(f, is_isometry=direct, criterion=crit))
                    continue
                if not direct:
                    continue
                isos += 1
                equiv = tuples_equivalent(V, U)
                brute = brute_force_extension(f) is not None
                if equiv != brute:
                    report.failures.append(_failure(f, extends=equiv, brute_force=brute))
    report.details["isometries"] = isos


def _mds_code(c: Campaign, t: FieldTower) -> AdditiveCode:
    n = c.n if c.n is not None else 3
    k_L = c.k_L if c.k_L is not None else 1
    return rs_code(t, n, k_L)


def _prop3(c: Campaign, report: Report):
    t = _tower(c)
    if c.k_L == 2:
        raise HypothesisViolated("prop3 excludes k_L = 2")
    C = _mds_code(c, t)
    prof = is_mds(C)
    if not prof.is_mds or prof.k_L == 2:
        raise HypothesisViolated(f"code is not an MDS code with k_L != 2: {prof}")
    report.details["code"] = C.to_json()
    report.details["k_L"] = prof.k_L
    if c.maps:
        _record_search(report, _check_isometries(report, C, c))


def _lemma_mds_checks(report: Report, C: AdditiveCode, k_L: int):
    t = C.tower
    V = column_tuple(C)
    for r in range(C.n + 1):
        for I in itertools.combinations(range(C.n), r):
            total = Subspace(C.k, ())
            for i in I:
                total = sum_(t.K, total, V[i])
            report.cases_checked += 1
            want = t.m * min(k_L, len(I))
            if total.dim != want:
                report.failures.append({"code": C.to_json(), "subset": list(I), "dim": total.dim, "expected": want})
    if k_L < 2:
        return  # all columns share one space; the sum formula above already says so
    for i, j in itertools.combinations(range(C.n), 2):
        if intersect(t.K, V[i], V[j]).dim:
            report.failures.append({"code": C.to_json(), "pair": [i, j], "reason": "nonzero intersection"})


def _prop4(c: Campaign, report: Report):
    t = _tower(c)
    k_L = c.k_L if c.k_L is not None else 2
    if k_L != 2:
        raise HypothesisViolated("prop4 is the k_L = 2 case")
    bound = t.q ** math.ceil(t.m / 2)
    n = c.n if c.n is not None else min(bound, t.order)
    if n > bound:
        raise HypothesisViolated(f"prop4 needs n <= q^ceil(m/2) = {bound}, got n={n}")
    C = rs_code(t, n, 2)
    report.details["code"] = C.to_json()
    found = partition_with_at_most(t.K, t.m, n)
    report.details["partition_certificate"] = {
        "max_parts": n,
        "exists": found is not None,
    }
    if found is not None:
        report.failures.append({"reason": "partition with <= n parts exists",
                                "partition": [S.encode() for S in found]})
    _lemma_mds_checks(report, C, 2)
    if c.maps:
        _record_search(report, _check_isometries(report, C, c))


def _prop5(c: Campaign, report: Report):
    t = _tower(c)
    bound = t.q ** math.ceil(t.m / 2)
    n = c.n if c.n is not None else 2
    if n > bound:
        raise HypothesisViolated(f"prop5 needs n <= q^ceil(m/2) = {bound}, got n={n}")
    k_L = c.k_L if c.k_L is not None else 1
    if c.catalog:
        codes = [S.basis for S in enumerate_subspaces(t.L, n, [k_L])]
    else:
        # L-span of the evaluation rows (x_i^e), e < k_L; all-ones row for k_L = 1
        codes = [rs_code(t, n, k_L).gens[:k_L]]
    report.details["codes"] = len(codes)

    def image_l_linear(f: AdditiveMap) -> bool:
        return is_l_linear(code_from_generators(t, n, f.images))

    for A_L in codes:
        C = expand_l_linear(t, A_L)
        _record_search(report, _check_isometries(report, C, c, want=image_l_linear))


def _lemma_mds(c: Campaign, report: Report):
    t = _tower(c)
    C = _mds_code(c, t)
    prof = is_mds(C)
    if not prof.is_mds:
        raise HypothesisViolated("lemma_mds needs an MDS code")
    _lemma_mds_checks(report, C, prof.k_L)


def _lemma_linear(c: Campaign, report: Report):
    t = _tower(c)
    n_max = c.n_max if c.n_max is not None else (c.n or 3)
    kl_max = c.k_L if c.k_L is not None else 2
    codes = 0
    for n in range(1, n_max + 1):
        for S in enumerate_subspaces(t.L, n, range(1, min(kl_max, n) + 1)):
            C = expand_l_linear(t, S.basis)
            V = column_tuple(C)
            codes += 1
            report.cases_checked += 1
            bad = [i for i, Vi in enumerate(V) if Vi.dim not in (0, t.m)]
            pairs = [
                (i, j) for i, j in itertools.combinations(range(n), 2)
                if V[i] != V[j] and intersect(t.K, V[i], V[j]).dim
            ]
            if bad or pairs:
                report.failures.append({"code": C.to_json(), "bad_dims": bad, "bad_pairs": pairs})
    report.details["codes"] = codes


def threshold_n_scan(q: int, k: int, n_max: int, dim_bound: Optional[int] = None,
                     budget: int = 2**22) -> Report:
    """Where nontrivial solutions of the counting criterion first appear.

    Expected: none for n <= q, some from n = q + 1 on, provided k >= 2 and
    spaces of dimension 2 are allowed.
    """
    start = time.perf_counter()
    K = field_of_order(q)
    params = {"q": q, "k": k, "n_max": n_max}
    if dim_bound is not None:
        params["dim_bound"] = dim_bound
    report = Report("threshold_n", params, "exhaustive")
    cap = k if dim_bound is None else min(k, dim_bound)
    rows = []
    for n in range(1, n_max + 1):
        sols = search_nontrivial_solutions(K, k, n, dim_bound, budget)
        report.cases_checked += 1
        expected = k >= 2 and cap >= 2 and n >= q + 1
        rows.append({"n": n, "nontrivial": len(sols), "expected_nonempty": expected,
                     "first": [[S.encode() for S in side] for side in sols[0]] if sols else None})
        if bool(sols) != expected:
            report.failures.append({"n": n, "nontrivial": len(sols), "expected_nonempty": expected})
    report.details["scan"] = rows
    report.elapsed = time.perf_counter() - start
    return report


_RUNNERS = {
    "prop1": _prop1,
    "prop2": _prop2,
    "prop3": _prop3,
    "prop4": _prop4,
    "prop5": _prop5,
    "lemma_mds": _lemma_mds,
    "lemma_linear": _lemma_linear,
}


def verify_theorem(c: Campaign) -> Report:
    if c.theorem == "threshold_n":
        q = c.p**c.s
        return threshold_n_scan(q, c.k_max or 2, c.n_max or c.n or q + 1, budget=c.budget)
    start = time.perf_counter()
    report = Report(c.theorem, c.params(), c.mode)
    _RUNNERS[c.theorem](c, report)
    report.elapsed = time.perf_counter() - start
    return report
