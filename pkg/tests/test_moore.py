import math

import pytest

from mixedmoore import errors
from mixedmoore.construction import g_qt
from mixedmoore.gf import field_new, max_t, odd_prime_powers
from mixedmoore.moore import (
    best_upper_bound,
    bosak_feasible,
    defect_t0,
    directed_moore_bound,
    feasibility_table,
    format_table,
    mixed_moore_bound,
    parity_excludes,
    table_csv,
    undirected_moore_bound,
)

from table1 import TABLE_1


def bosak_oracle(z, r):
    """r = (c^2+3)/4 pins c down, so just test that one candidate."""
    c = math.isqrt(4 * r - 3)
    ok = c * c == 4 * r - 3 and c % 2 == 1 and ((4 * z - 3) * (4 * z + 5)) % c == 0
    return c if ok else None


@pytest.mark.parametrize("z,r,n", [(1, 3, 18), (2, 5, 52), (3, 7, 104), (0, 2, 5), (1, 0, 3)])
def test_mixed_moore_bound(z, r, n):
    assert mixed_moore_bound(z, r) == n


def test_mixed_moore_bound_rejects_empty():
    with pytest.raises(ValueError):
        mixed_moore_bound(0, 0)


def test_two_forms_agree():
    for z in range(101):
        for r in range(101):
            if z + r:
                assert mixed_moore_bound(z, r) == 1 + r + z + r * (r - 1 + z) + z * (r + z)


def test_undirected_directed_bounds():
    assert undirected_moore_bound(3, 2) == 10
    assert undirected_moore_bound(7, 2) == 50
    assert undirected_moore_bound(2, 2) == 5
    assert all(directed_moore_bound(1, k) == k + 1 for k in range(1, 20))
    assert directed_moore_bound(2, 3) == 15


def test_specialisations():
    for d in range(1, 101):
        assert mixed_moore_bound(0, d) == undirected_moore_bound(d, 2)
        assert mixed_moore_bound(d, 0) == directed_moore_bound(d, 2)


def test_closed_form_for_g_q():
    for q in range(3, 202, 2):
        assert 4 * mixed_moore_bound((q - 1) // 2, q) == 9 * q * q - 4 * q + 3


def test_bosak_examples():
    assert bosak_feasible(1, 3) == 3
    assert bosak_feasible(2, 5) is None
    assert bosak_feasible(3, 3) == 3
    assert bosak_feasible(3, 7) is None
    assert bosak_feasible(2, 7) == 5


def test_bosak_matches_oracle():
    for z in range(1, 60):
        for r in range(1, 60):
            assert bosak_feasible(z, r) == bosak_oracle(z, r)


def test_bosak_kautz_rows():
    assert all(bosak_feasible(z, 1) == 1 for z in range(1, 200))


def test_parity():
    assert parity_excludes(5, 51)
    assert not parity_excludes(5, 50)
    assert not parity_excludes(4, 51)


def test_best_upper_bound_g5():
    rep = best_upper_bound(2, 5)
    assert (rep.moore, rep.after_bosak, rep.after_parity) == (52, 51, 50)
    assert rep.chain() == "52 → 51 (Bosák) → 50 (parity)"
    assert len(rep.steps) == 3


def test_best_upper_bound_37():
    rep = best_upper_bound(3, 7)
    assert (rep.moore, rep.after_bosak, rep.after_parity) == (104, 103, 102)


def test_best_upper_bound_bosak_graph():
    rep = best_upper_bound(1, 3)
    assert rep.bound == 18 and rep.chain() == "18"


def test_bound_ordering():
    for z in range(1, 30):
        for r in range(1, 30):
            rep = best_upper_bound(z, r)
            assert rep.after_parity <= rep.after_bosak <= rep.moore


@pytest.mark.parametrize("q", odd_prime_powers(13))
def test_bound_never_below_construction(q):
    for t in range(max_t(q) + 1):
        z, r = (q - 1) // 2 - 2 * t, q + 2 * t
        if z >= 1:
            assert best_upper_bound(z, r).bound >= g_qt(field_new(q), t).order
        else:
            assert mixed_moore_bound(z, r) >= 2 * q * q


def test_table_prefix():
    assert [row.n for row in feasibility_table(20)] == [3, 5, 6, 10, 12, 18, 20]
    assert feasibility_table(2) == []


def test_table_contains_every_published_row():
    rows = {(r.n, r.d, r.z, r.r): r.status for r in feasibility_table(200)}
    for n, d, z, r, status in TABLE_1:
        assert rows[(n, d, z, r)] == status


def test_table_extra_rows_are_bosak_feasible():
    # the enumeration also yields n = 154 (z=9, r=3: c = 3 divides 33 * 41),
    # which the published table does not list
    published = {row[:4] for row in TABLE_1}
    extra = [r for r in feasibility_table(200) if (r.n, r.d, r.z, r.r) not in published]
    assert [(r.n, r.d, r.z, r.r, r.status) for r in extra] == [(154, 12, 9, 3, "unknown")]
    assert bosak_oracle(9, 3) == 3


def test_table_rows_consistent():
    for row in feasibility_table(200):
        assert row.n == row.d**2 + row.z + 1 and row.d == row.z + row.r


def test_table_formats():
    rows = feasibility_table(12)
    csv = table_csv(rows).splitlines()
    assert csv[0] == "n,d,z,r,status"
    assert csv[1] == "3,1,1,0,Z_3"
    assert len(csv) == len(rows) + 1
    assert "Ka(3,2)" in format_table(rows)


@pytest.mark.parametrize("q,defect", [(3, 0), (5, 2), (7, 6)])
def test_defect(q, defect):
    assert defect_t0(q) == defect


def test_defect_closed_form():
    for q in range(3, 102, 2):
        assert 4 * defect_t0(q) == q * q - 4 * q + 3
        assert defect_t0(q) == ((q - 2) / 2) ** 2 - 0.25


def test_defect_even():
    with pytest.raises(errors.EvenQ):
        defect_t0(4)
