"""Moore bounds, Bosak's divisibility condition and the parity argument."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import EvenQ


def mixed_moore_bound(z: int, r: int) -> int:
    """Largest possible order of a diameter-2 mixed graph: (r+z)^2 + z + 1."""
    if z < 0 or r < 0 or z + r < 1:
        raise ValueError(f"need z, r >= 0 and z + r >= 1, got z={z}, r={r}")
    return (r + z) ** 2 + z + 1


def undirected_moore_bound(d: int, k: int) -> int:
    """1 + d + d(d-1) + ... + d(d-1)^(k-1)."""
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    return 1 + sum(d * (d - 1) ** i for i in range(k))


def directed_moore_bound(d: int, k: int) -> int:
    """1 + d + d^2 + ... + d^k."""
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    return sum(d**i for i in range(k + 1))


def bosak_feasible(z: int, r: int) -> Optional[int]:
    """Witness c for Bosak's condition, or None when (z, r) is infeasible.

    A proper mixed Moore graph of diameter 2 needs an odd c > 0 dividing
    (4z - 3)(4z + 5) with r = (c^2 + 3) / 4.
    """
    if z < 1 or r < 1:
        raise ValueError("Bosak's condition applies to proper mixed graphs (z, r >= 1)")
    product = (4 * z - 3) * (4 * z + 5)
    for c in range(1, product + 1, 2):
        if product % c == 0 and c * c == 4 * r - 3:
            return c
    return None


def parity_excludes(r: int, n: int) -> bool:
    """True when no mixed-regular graph with odd undirected degree r can have order n.

    Forgetting arc directions leaves a (2z + r)-regular graph, and an odd
    degree forces even order.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    return r % 2 == 1 and n % 2 == 1


@dataclass
class BoundReport:
    z: int
    r: int
    moore: int
    after_bosak: int
    after_parity: int
    steps: list[str] = field(default_factory=list)

    @property
    def bound(self) -> int:
        return self.after_parity

    def chain(self) -> str:
        parts = [str(self.moore)]
        if self.after_bosak != self.moore:
            parts.append(f"{self.after_bosak} (Bosák)")
        if self.after_parity != self.after_bosak:
            parts.append(f"{self.after_parity} (parity)")
        return " → ".join(parts)


def best_upper_bound(z: int, r: int) -> BoundReport:
    """Chain the Moore bound, Bosak's condition and the parity lemma.

    Bosak's condition only rules out the Moore order itself, so a failure
    costs exactly one vertex.
    """
    moore = mixed_moore_bound(z, r)
    steps = [f"Moore bound (r+z)^2+z+1 = {moore}"]
    c = bosak_feasible(z, r)
    if c is None:
        after_bosak = moore - 1
        steps.append(
            f"Bosák infeasible: no odd c | (4z-3)(4z+5) = {(4*z-3)*(4*z+5)} "
            f"with c^2 = 4r-3 = {4*r-3}; bound {after_bosak}"
        )
    else:
        after_bosak = moore
        steps.append(f"Bosák feasible with c = {c}")
    n = after_bosak
    while parity_excludes(r, n):
        n -= 1
        steps.append(f"parity: r = {r} odd, order {n + 1} odd impossible; bound {n}")
    return BoundReport(z, r, moore, after_bosak, n, steps)


# ---------------------------------------------------------------------------
# feasibility table
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class FeasibilityRow:
    n: int
    d: int
    z: int
    r: int
    status: str
    unique: str


# known existence facts for the rows that are not simply "unknown"
_NON_PROPER = [
    (1, 0, "Z_3", "YES"),
    (0, 2, "C_5", "YES"),
    (0, 3, "Petersen graph", "YES"),
    (0, 7, "Hoffman-Singleton graph", "YES"),
]
_KNOWN = {
    (1, 3): ("Bosák graph", "YES"),
    (7, 3): ("Jorgensen graph", "NO"),
}


def _proper_status(z, r):
    if r == 1:
        return f"Ka({z + 1},2)", "YES"
    return _KNOWN.get((z, r), ("unknown", "unknown"))


def feasibility_table(n_max: int) -> list[FeasibilityRow]:
    """Every parameter set (z, r) whose mixed Moore order is at most n_max and
    not ruled out by Bosak's condition, plus the four classical non-proper
    mixed Moore graphs, sorted by order."""
    rows = []
    for z, r, status, unique in _NON_PROPER:
        n = mixed_moore_bound(z, r)
        if n <= n_max:
            rows.append(FeasibilityRow(n, z + r, z, r, status, unique))
    z = 1
    while mixed_moore_bound(z, 1) <= n_max:
        r = 1
        while mixed_moore_bound(z, r) <= n_max:
            if bosak_feasible(z, r) is not None:
                rows.append(FeasibilityRow(mixed_moore_bound(z, r), z + r, z, r, *_proper_status(z, r)))
            r += 1
        z += 1
    return sorted(rows)


def format_table(rows: list[FeasibilityRow]) -> str:
    header = f"{'n':>4} {'d':>3} {'z':>3} {'r':>3}  {'existence':<24} uniqueness"
    lines = [header]
    for row in rows:
        lines.append(f"{row.n:>4} {row.d:>3} {row.z:>3} {row.r:>3}  {row.status:<24} {row.unique}")
    return "\n".join(lines)


def table_csv(rows: list[FeasibilityRow]) -> str:
    lines = ["n,d,z,r,status"]
    lines += [f"{row.n},{row.d},{row.z},{row.r},{row.status}" for row in rows]
    return "\n".join(lines) + "\n"


def defect_t0(q: int) -> int:
    """Moore bound minus order for G_{q,0}: equals (q^2 - 4q + 3)/4."""
    if q % 2 == 0:
        raise EvenQ(f"q={q} must be odd")
    if q < 3:
        raise ValueError("q must be >= 3")
    bound = mixed_moore_bound((q - 1) // 2, q)
    assert 4 * bound == 9 * q * q - 4 * q + 3
    return bound - 2 * q * q
