"""Two-level finite field towers GF(p) <= K <= L.

Elements are plain ints.  A K-element is the little-endian base-p digit
integer of its ``s`` coordinates over GF(p); an L-element is the base-q
digit integer of its ``m`` K-coordinates in the power basis
``1, a, ..., a^(m-1)``.  These are also the wire encodings, so a value read
from JSON needs no conversion.  Arithmetic is table driven.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    LengthMismatch,
    MalformedInput,
    NotPrime,
    Reducible,
    TooLarge,
)

MAX_FIELD_ORDER = 1024
GL_GUARD = 2**24


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


class FiniteField:
    """A finite field of order ``p**deg`` given by addition and multiplication tables.

    Elements are ``range(order)``; 0 and 1 are the additive and
    multiplicative identities.
    """

    def __init__(self, p: int, order: int, add_table, mul_table, modulus=()):
        self.p = p
        self.order = order
        self.add_table = add_table
        self.mul_table = mul_table
        self.modulus = tuple(modulus)
        self.neg_table = [row.index(0) for row in add_table]
        self.inv_table = [None] + [row.index(1) for row in mul_table[1:]]

    def __repr__(self):
        return f"FiniteField(order={self.order})"

    @property
    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul_table[r][a]
        return r


def prime_field(p: int) -> FiniteField:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    add = [[(a + b) % p for b in range(p)] for a in range(p)]
    mul = [[(a * b) % p for b in range(p)] for a in range(p)]
    return FiniteField(p, p, add, mul)


# -- polynomials over a FiniteField, coefficient lists ascending ------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mod(F: FiniteField, a: Sequence[int], mod: Sequence[int]) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``mod``."""
    r = _trim(list(a))
    d = len(mod) - 1
    while len(r) - 1 >= d:
        lead = r[-1]
        shift = len(r) - 1 - d
        for i, c in enumerate(mod):
            r[shift + i] = F.sub(r[shift + i], F.mul(lead, c))
        _trim(r)
    return r


def poly_mul(F: FiniteField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def is_irreducible(F: FiniteField, poly: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = list(poly)
    d = len(poly) - 1
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for low in itertools.product(F.elements, repeat=e):
            if not poly_mod(F, poly, list(low) + [1]):
                return False
    return True


def _extension(base: FiniteField, modulus: Sequence[int]) -> FiniteField:
    d = len(modulus) - 1
    r = base.order
    order = r**d
    if order > MAX_FIELD_ORDER:
        raise TooLarge(f"field of order {order} exceeds table limit {MAX_FIELD_ORDER}")
    digits = [tuple((x // r**i) % r for i in range(d)) for x in range(order)]
    weights = [r**i for i in range(d)]

    def encode(c):
        return sum(w * v for w, v in zip(weights, c))

    add = [[encode(base.add(u, v) for u, v in zip(digits[a], digits[b]))
            for b in range(order)] for a in range(order)]
    mul = [[0] * order for _ in range(order)]
    for a in range(order):
        for b in range(a, order):
            c = poly_mod(base, poly_mul(base, digits[a], digits[b]), modulus)
            mul[a][b] = mul[b][a] = encode(c + [0] * (d - len(c)))
    return FiniteField(base.p, order, add, mul, modulus)


# monic irreducible defaults, ascending coefficients; for L the entries are K-ints
DEFAULT_K_POLYS = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
}
DEFAULT_L_POLYS = {
    (2, 1, 1): (0, 1),
    (2, 1, 2): (1, 1, 1),
    (2, 1, 3): (1, 1, 0, 1),
    (2, 1, 4): (1, 1, 0, 0, 1),
    (2, 2, 1): (0, 1),
    (2, 2, 2): (2, 1, 1),
    (2, 2, 3): (2, 0, 0, 1),
    (2, 2, 4): (1, 2, 1, 0, 1),
    (3, 1, 1): (0, 1),
    (3, 1, 2): (1, 0, 1),
    (3, 1, 3): (1, 2, 0, 1),
    (3, 1, 4): (2, 1, 0, 0, 1),
    (3, 2, 1): (0, 1),
    (3, 2, 2): (4, 0, 1),
    (3, 2, 3): (3, 1, 0, 1),
    (3, 2, 4): (4, 0, 0, 0, 1),
}


def first_irreducible(F: FiniteField, degree: int) -> tuple[int, ...]:
    """Monic irreducible of the given degree with the smallest coefficient encoding.

    Degree one returns ``x`` itself.
    """
    if degree == 1:
        return (0, 1)
    for code in range(1, F.order**degree):
        low = [(code // F.order**i) % F.order for i in range(degree)]
        if low[0] and is_irreducible(F, low + [1]):
            return tuple(low + [1])
    raise Reducible(f"no irreducible polynomial of degree {degree}")  # unreachable


@dataclass(frozen=True)
class KLinearBijection:
    """Invertible K-linear map of L, as an m x m matrix over K acting on coordinate columns."""

    m: int
    matrix: tuple[int, ...]  # row-major K-ints

    def apply(self, t: "FieldTower", a: int) -> int:
        x = t.expand(a)
        K = t.K
        y = []
        for r in range(self.m):
            acc = 0
            for c in range(self.m):
                acc = K.add_table[acc][K.mul_table[self.matrix[r * self.m + c]][x[c]]]
            y.append(acc)
        return t.assemble(y)

    def table(self, t: "FieldTower") -> tuple[int, ...]:
        return _bijection_table(t, self)

    def rows(self) -> list[list[int]]:
        return [list(self.matrix[r * self.m:(r + 1) * self.m]) for r in range(self.m)]


@lru_cache(maxsize=None)
def _bijection_table(t: "FieldTower", g: KLinearBijection) -> tuple[int, ...]:
    return tuple(g.apply(t, a) for a in range(t.order))


class FieldTower:
    """GF(p) <= K <= L with K = GF(p)[x]/(k_poly) and L = K[y]/(l_poly)."""

    def __init__(self, p: int, k_poly: Sequence[int], l_poly: Sequence[int]):
        Fp = prime_field(p)
        k_poly = tuple(int(c) for c in k_poly)
        l_poly = tuple(int(c) for c in l_poly)
        if len(k_poly) < 2 or k_poly[-1] != 1:
            raise DegreeMismatch(f"k_poly {list(k_poly)} must be monic of degree >= 1")
        if any(not 0 <= c < p for c in k_poly):
            raise MalformedInput(f"k_poly coefficients must lie in [0, {p})")
        if not is_irreducible(Fp, k_poly):
            raise Reducible(f"k_poly {list(k_poly)} is reducible over GF({p})")
        K = _extension(Fp, k_poly)
        if len(l_poly) < 2 or l_poly[-1] != 1:
            raise DegreeMismatch(f"l_poly {list(l_poly)} must be monic of degree >= 1")
        if any(not 0 <= c < K.order for c in l_poly):
            raise MalformedInput(f"l_poly coefficients must lie in [0, {K.order})")
        if not is_irreducible(K, l_poly):
            raise Reducible(f"l_poly {list(l_poly)} is reducible over K")
        self.p = p
        self.s = len(k_poly) - 1
        self.m = len(l_poly) - 1
        self.q = K.order
        self.k_poly = k_poly
        self.l_poly = l_poly
        self.K = K
        self.L = _extension(K, l_poly)
        self.order = self.L.order
        self._coords = tuple(tuple((a // self.q**j) % self.q for j in range(self.m)) for a in range(self.order))
        self._hash = hash((p, k_poly, l_poly))

    def __repr__(self):
        return f"FieldTower(p={self.p}, k_poly={list(self.k_poly)}, l_poly={list(self.l_poly)})"

    def _key(self):
        return (self.p, self.k_poly, self.l_poly)

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self._key() == other._key()

    def __hash__(self):
        return self._hash

    # L arithmetic
    def add(self, a: int, b: int) -> int:
        return self.L.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.L.sub(a, b)

    def neg(self, a: int) -> int:
        return self.L.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.L.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.L.inv(a)

    @property
    def alpha(self) -> int:
        """Residue of the indeterminate of l_poly."""
        return self.q if self.m > 1 else self.K.neg(self.l_poly[0])

    @property
    def basis(self) -> tuple[int, ...]:
        return tuple(self.q**j for j in range(self.m)) if self.m > 1 else (1,)

    def expand(self, a: int) -> tuple[int, ...]:
        return self._coords[a]

    def assemble(self, coords: Sequence[int]) -> int:
        if len(coords) != self.m:
            raise LengthMismatch(f"expected {self.m} coordinates, got {len(coords)}")
        return sum(c * self.q**j for j, c in enumerate(coords))

    def embed_k(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not a K-element")
        return a

    def in_k(self, a: int) -> bool:
        return 0 <= a < self.q

    def multiplication_map(self, lam: int) -> KLinearBijection:
        """Coordinate matrix of x -> lam * x."""
        if lam == 0:
            raise DivisionByZero("multiplication by zero is not invertible")
        cols = [self.expand(self.mul(lam, b)) for b in self.basis]
        return KLinearBijection(self.m, tuple(cols[c][r] for r in range(self.m) for c in range(self.m)))

    def to_json(self) -> dict:
        return {"p": self.p, "k_poly": list(self.k_poly), "l_poly": list(self.l_poly)}


def make_tower(p: int, k_poly: Sequence[int], l_poly: Sequence[int],
               s: int | None = None, m: int | None = None) -> FieldTower:
    """Build a tower; ``s`` and ``m``, when given, are checked against the polynomial degrees."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if s is not None and len(k_poly) - 1 != s:
        raise DegreeMismatch(f"k_poly has degree {len(k_poly) - 1}, expected {s}")
    if m is not None and len(l_poly) - 1 != m:
        raise DegreeMismatch(f"l_poly has degree {len(l_poly) - 1}, expected {m}")
    return FieldTower(p, k_poly, l_poly)


@lru_cache(maxsize=None)
def default_tower(p: int = 2, s: int = 1, m: int = 2) -> FieldTower:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    k_poly = DEFAULT_K_POLYS.get((p, s))
    if k_poly is None:
        k_poly = first_irreducible(prime_field(p), s)
    l_poly = DEFAULT_L_POLYS.get((p, s, m))
    if l_poly is None:
        l_poly = first_irreducible(_extension(prime_field(p), k_poly), m)
    return FieldTower(p, k_poly, l_poly)


@lru_cache(maxsize=None)
def field_of_order(q: int) -> FiniteField:
    """GF(q) built with the default polynomial (the K of ``default_tower``)."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    s, r = 0, q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1 or not is_prime(p):
        raise NotPrime(f"{q} is not a prime power")
    return default_tower(p, s, 1).K


def _coerce_k(value, p: int, s: int, where: str) -> int:
    if isinstance(value, bool):
        raise MalformedInput(f"{where}: expected integer")
    if isinstance(value, int):
        return value
    if isinstance(value, list) and all(isinstance(d, int) for d in value) and len(value) <= s:
        return sum(d * p**i for i, d in enumerate(value))
    raise MalformedInput(f"{where}: expected integer or list of at most {s} digits, got {value!r}")


def tower_from_json(d) -> FieldTower:
    """Parse ``{"p": .., "k_poly": [..], "l_poly": [..]}``.

    ``l_poly`` entries may be K-integers or little-endian digit lists.
    """
    if not isinstance(d, dict):
        raise MalformedInput("field: expected an object")
    for key in ("p", "k_poly", "l_poly"):
        if key not in d:
            raise MalformedInput(f"field: missing key {key!r}")
    p = d["p"]
    if not isinstance(p, int):
        raise MalformedInput("field.p: expected integer")
    k_poly = d["k_poly"]
    if not isinstance(k_poly, list) or not all(isinstance(c, int) for c in k_poly):
        raise MalformedInput("field.k_poly: expected list of integers")
    s = len(k_poly) - 1
    if not isinstance(d["l_poly"], list):
        raise MalformedInput("field.l_poly: expected list")
    l_poly = [_coerce_k(c, p, s, f"field.l_poly[{i}]") for i, c in enumerate(d["l_poly"])]
    return make_tower(p, k_poly, l_poly)


def _rank(K: FiniteField, rows: list[list[int]]) -> int:
    from .k_linalg import rank

    return rank(K, rows)


@lru_cache(maxsize=None)
def enumerate_gl(t: FieldTower, galois_only: bool = False) -> tuple[KLinearBijection, ...]:
    """All invertible K-linear maps of L in lexicographic order of their row-major matrices.

    With ``galois_only`` the result is restricted to the Frobenius powers
    ``x -> x^(q^i)``, i.e. the field automorphisms of L fixing K.
    """
    m, q = t.m, t.q
    if galois_only:
        maps = []
        for i in range(m):
            cols = [t.expand(t.L.pow(b, q**i)) for b in t.basis]
            maps.append(KLinearBijection(m, tuple(cols[c][r] for r in range(m) for c in range(m))))
        return tuple(sorted(set(maps), key=lambda g: g.matrix))
    if q ** (m * m) > GL_GUARD:
        raise TooLarge(f"{q}^{m * m} candidate matrices exceed {GL_GUARD}")
    out = []
    for entries in itertools.product(range(q), repeat=m * m):
        if _rank(t.K, [list(entries[r * m:(r + 1) * m]) for r in range(m)]) == m:
            out.append(KLinearBijection(m, entries))
    return tuple(out)


def gl_order(q: int, m: int) -> int:
    n = 1
    for i in range(m):
        n *= q**m - q**i
    return n


def elements_not_in_k(t: FieldTower) -> Iterable[int]:
    return (a for a in range(t.order) if a >= t.q)
