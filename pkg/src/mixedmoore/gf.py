"""Arithmetic in GF(p^n) and the shift sets used to build G_{q,t}.

Field elements are plain ints: an element with coefficient vector
``(c_0, ..., c_{n-1})`` (constant term first) is encoded as
``sum(c_i * p**i)``.  All arithmetic goes through precomputed tables, which
is fine for the field sizes this package deals with (a few hundred).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import DivisionByZero, EvenQ, NotPrimePower, TOutOfRange


def _factor_prime_power(q: int) -> tuple[int, int]:
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise NotPrimePower(f"{q!r} is not a prime power")
    q = int(q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, rest = 0, q
    while rest % p == 0:
        rest //= p
        n += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, n


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over Z_p; coefficient lists are constant-first, den monic."""
    num = list(num)
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] % p
        if c:
            for i, d in enumerate(den):
                num[k - dd + i] = (num[k - dd + i] - c * d) % p
    return [c % p for c in num[:dd]]


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Irreducibility of the monic polynomial x^n + sum(modulus[i] x^i) over Z_p.

    Trial division by every monic polynomial of degree 1..n//2.
    """
    n = len(modulus)
    full = list(modulus) + [1]
    for deg in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not any(_poly_mod(full, list(low) + [1], p)):
                return False
    return True


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    for enc in range(p**n):
        coeffs = tuple((enc // p**i) % p for i in range(n))
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # unreachable for n >= 1


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^n).

    ``modulus`` holds the n non-leading coefficients of the monic irreducible
    polynomial, constant term first.  For n = 1 it is ``(0,)``, i.e. the
    polynomial x, and arithmetic is plain mod-p.
    """

    p: int
    n: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.n)
        if len(self.modulus) != self.n or any(not 0 <= c < self.p for c in self.modulus):
            raise ValueError(f"bad modulus {self.modulus} for GF({self.p}^{self.n})")
        if self.n > 1 and not is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over Z_{self.p}")

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={self.modulus})"

    # --- encoding -------------------------------------------------------
    def coeffs(self, a: int) -> tuple[int, ...]:
        self._check(a)
        return tuple((a // self.p**i) % self.p for i in range(self.n))

    def element(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) != self.n or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"{coeffs} is not a coefficient vector of GF({self.q})")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def elements(self) -> range:
        return range(self.q)

    def _check(self, a):
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")

    # --- tables ---------------------------------------------------------
    def _mul_coeffs(self, a, b):
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        if self.n == 1:
            return [prod[0] % self.p]
        return _poly_mod(prod, list(self.modulus) + [1], self.p)

    @cached_property
    def add_table(self) -> np.ndarray:
        vecs = np.array([self.coeffs(a) for a in range(self.q)], dtype=np.int64)
        sums = (vecs[:, None, :] + vecs[None, :, :]) % self.p
        return sums @ (self.p ** np.arange(self.n, dtype=np.int64))

    @cached_property
    def mul_table(self) -> np.ndarray:
        vecs = [self.coeffs(a) for a in range(self.q)]
        table = np.zeros((self.q, self.q), dtype=np.int64)
        for a in range(1, self.q):
            for b in range(a, self.q):
                table[a, b] = table[b, a] = self.element(self._mul_coeffs(vecs[a], vecs[b]))
        return table

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.argmin(self.add_table, axis=1)

    @cached_property
    def inv_table(self) -> np.ndarray:
        inv = np.zeros(self.q, dtype=np.int64)
        rows, cols = np.nonzero(self.mul_table == 1)
        inv[rows] = cols
        return inv

    # --- arithmetic -----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        self._check(a)
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))


@lru_cache(maxsize=None)
def field_new(q: int) -> FieldSpec:
    """Build GF(q) using the irreducible modulus with the smallest encoding.

    Results are cached; FieldSpec is immutable.

    >>> field_new(9).modulus
    (1, 0)
    """
    p, n = _factor_prime_power(q)
    modulus = (0,) if n == 1 else _smallest_irreducible(p, n)
    return FieldSpec(p, n, modulus)


def is_prime_power(q: int) -> bool:
    try:
        _factor_prime_power(q)
    except NotPrimePower:
        return False
    return True


def odd_prime_powers(limit: int) -> list[int]:
    """All odd prime powers 3 <= q <= limit."""
    return [q for q in range(3, limit + 1, 2) if is_prime_power(q)]


# ---------------------------------------------------------------------------
# shift sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftSets:
    """Shift sets (M, T, T1, T2, S, -S) for one choice of field and t.

    Each member is a sorted tuple of element encodings.
    """

    q: int
    t: int
    M: tuple[int, ...]
    T: tuple[int, ...]
    T1: tuple[int, ...]
    T2: tuple[int, ...]
    S: tuple[int, ...]
    negS: tuple[int, ...]


def max_t(q: int) -> int:
    """Largest admissible t: (q-1)/4 when q = 1 mod 4, (q-3)/4 when q = 3 mod 4."""
    if q % 2 == 0:
        raise EvenQ(f"q={q} must be odd")
    return (q - 1) // 4


def _check_t(F: FieldSpec, t: int):
    if F.p == 2:
        raise EvenQ(f"q={F.q} must be odd")
    if not 0 <= t <= max_t(F.q):
        raise TOutOfRange(f"t={t} outside 0..{max_t(F.q)} for q={F.q}")


def _assemble(F: FieldSpec, t: int, M, T) -> ShiftSets:
    # T arrives in split order: its first t elements generate T1
    def pair(x):
        return (x, F.neg(x))

    T1 = sorted(e for x in T[:t] for e in pair(x))
    T2 = sorted(e for x in T[t:] for e in pair(x))
    S = sorted(set(M) - set(T))
    negS = sorted(F.neg(x) for x in S)
    return ShiftSets(F.q, t, tuple(sorted(M)), tuple(sorted(T)), tuple(T1), tuple(T2),
                     tuple(S), tuple(negS))


def shift_sets(F: FieldSpec, t: int) -> ShiftSets:
    """Canonical shift sets: everything is chosen in encoding order.

    M keeps the encoding-smaller member of each pair {a, -a}; T is the first
    2t elements of M; T1 is generated by the first t elements of T and T2 by
    the remaining t.
    """
    _check_t(F, t)
    M = [a for a in range(1, F.q) if a < F.neg(a)]
    return _assemble(F, t, M, M[: 2 * t])


def random_shift_sets(F: FieldSpec, t: int, rng: np.random.Generator) -> ShiftSets:
    """A uniformly random valid choice of M, T and the T1/T2 split."""
    _check_t(F, t)
    M = [a if rng.random() < 0.5 else F.neg(a) for a in range(1, F.q) if a < F.neg(a)]
    T = [M[i] for i in rng.permutation(len(M))[: 2 * t]]
    return _assemble(F, t, M, T)


def shift_set_violations(F: FieldSpec, sets: ShiftSets) -> list[str]:
    """Check every ShiftSets invariant; returns a list of violated ones (empty if valid)."""
    out = []
    M, T, T1, T2, S = map(set, (sets.M, sets.T, sets.T1, sets.T2, sets.S))
    negM = {F.neg(a) for a in M}
    negT = {F.neg(a) for a in T}
    nonzero = set(range(1, F.q))
    t = sets.t
    if len(sets.M) != (F.q - 1) // 2 or len(M) != len(sets.M):
        out.append("|M| != (q-1)/2")
    if any(F.add(u, v) == 0 for u in M for v in M):
        out.append("u + v = 0 for some u, v in M")
    if M | negM != nonzero:
        out.append("M u -M != F_q \\ {0}")
    if M & negM:
        out.append("M and -M intersect")
    if not T <= M or len(T) != 2 * t:
        out.append("T is not a 2t-subset of M")
    if T1 & T2:
        out.append("T1 and T2 intersect")
    if T1 | T2 != T | negT:
        out.append("T1 u T2 != T u -T")
    if len(T1) != 2 * t or len(T2) != 2 * t:
        out.append("|T1| or |T2| != 2t")
    for name, part in (("T1", T1), ("T2", T2)):
        if {F.neg(a) for a in part} != part:
            out.append(f"{name} not closed under negation")
    if S & (T1 | T2):
        out.append("S meets T1 u T2")
    if S != M - T or len(S) != (F.q - 1) // 2 - 2 * t:
        out.append("S != M \\ T")
    if set(sets.negS) != {F.neg(a) for a in S}:
        out.append("negS != -S")
    return out
