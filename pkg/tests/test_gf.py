import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mixedmoore import errors
from mixedmoore.gf import (
    field_new,
    is_irreducible,
    max_t,
    odd_prime_powers,
    random_shift_sets,
    shift_set_violations,
    shift_sets,
)

from oracles import brute_irreducible_deg2, brute_orbit_transversal

SMALL = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]


def test_prime_field():
    F = field_new(7)
    assert (F.p, F.n, F.q) == (7, 1, 7)


def test_gf9_modulus_matches_brute_force_scan():
    F = field_new(9)
    assert (F.p, F.n) == (3, 2)
    assert F.modulus == brute_irreducible_deg2(3) == (1, 0)  # x^2 + 1


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_degree2_modulus_is_first_rootless(p):
    assert field_new(p * p).modulus == brute_irreducible_deg2(p)


@pytest.mark.parametrize("q", [1, 6, 12, 100, 0])
def test_not_prime_power(q):
    with pytest.raises(errors.NotPrimePower):
        field_new(q)


def test_determinism():
    build = field_new.__wrapped__  # bypass the cache
    for q in (27, 81, 125, 121):
        assert build(q) == build(q) == field_new(q)


def test_reducible_detected():
    assert not is_irreducible((2, 0), 3)  # x^2 + 2 = (x-1)(x+1)
    assert not is_irreducible((0, 0, 0, 1), 3)  # x^4 + x^3 has root 0
    assert not is_irreducible((1, 0, 2, 0), 3)  # (x^2+1)^2
    assert not is_irreducible((1, 2), 3)  # (x+1)^2
    assert is_irreducible((2, 1), 3)


def test_gf7_examples():
    F = field_new(7)
    assert F.add(3, 5) == 1
    assert F.inv(3) == 5
    assert F.sub(2, 5) == 4
    assert F.neg(3) == 4


def test_gf9_x_squared():
    F = field_new(9)
    x = F.element([0, 1])
    assert x == 3
    assert F.mul(x, x) == 2


def test_gf9_against_gaussian_integers_mod3():
    # with modulus x^2 + 1, GF(9) is Z_3[i]
    F = field_new(9)
    for a, b in itertools.product(range(9), repeat=2):
        a0, a1 = F.coeffs(a)
        b0, b1 = F.coeffs(b)
        prod = ((a0 * b0 - a1 * b1) % 3, (a0 * b1 + a1 * b0) % 3)
        assert F.coeffs(F.mul(a, b)) == prod


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_prime_field_matches_integers(p):
    F = field_new(p)
    for a, b in itertools.product(range(p), repeat=2):
        assert F.add(a, b) == (a + b) % p
        assert F.mul(a, b) == (a * b) % p


def test_inverse_of_zero():
    with pytest.raises(errors.DivisionByZero):
        field_new(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        field_new(9).inv(0)


@pytest.mark.parametrize("q", SMALL)
def test_field_axioms_exhaustive(q):
    F = field_new(q)
    A, M = F.add_table, F.mul_table
    e = np.arange(q)
    assert np.array_equal(A, A.T) and np.array_equal(M, M.T)
    assert np.array_equal(A[A[:, :, None], e[None, None, :]], A[e[:, None, None], A[None, :, :]])
    assert np.array_equal(M[M[:, :, None], e[None, None, :]], M[e[:, None, None], M[None, :, :]])
    # a (b + c) = ab + ac
    assert np.array_equal(M[e[:, None, None], A[None, :, :]], A[M[:, :, None], M[:, None, :]])
    assert np.array_equal(A[:, 0], e) and np.array_equal(M[:, 1], e)
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0


def test_encoding_bijection():
    for q in (9, 27, 25):
        F = field_new(q)
        assert [F.element(F.coeffs(a)) for a in range(q)] == list(range(q))
        assert all(0 <= c < F.p for a in range(q) for c in F.coeffs(a))


@settings(max_examples=200, deadline=None)
@given(
    q=st.sampled_from([49, 81, 121, 125, 169]),
    data=st.data(),
)
def test_field_axioms_sampled(q, data):
    F = field_new(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    if a:
        assert F.mul(F.inv(a), a) == 1
        assert F.div(F.mul(a, b), a) == b


# --- shift sets ------------------------------------------------------------

def test_shift_sets_gf7_t0():
    S = shift_sets(field_new(7), 0)
    assert S.M == (1, 2, 3) and S.T == () and S.S == (1, 2, 3) and S.negS == (4, 5, 6)
    F = field_new(7)
    assert all(F.add(u, v) != 0 for u in S.M for v in S.M)


def test_shift_sets_gf5_t1():
    S = shift_sets(field_new(5), 1)
    assert (S.M, S.T, S.T1, S.T2, S.S) == ((1, 2), (1, 2), (1, 4), (2, 3), ())


def test_shift_sets_range():
    F = field_new(7)
    shift_sets(F, 1)  # (7-3)/4 = 1 is allowed
    with pytest.raises(errors.TOutOfRange):
        shift_sets(F, 2)
    with pytest.raises(errors.TOutOfRange):
        shift_sets(F, -1)
    with pytest.raises(errors.EvenQ):
        shift_sets(field_new(8), 0)


def test_max_t():
    assert [max_t(q) for q in (3, 5, 7, 9, 11, 13)] == [0, 1, 1, 2, 2, 3]


@pytest.mark.parametrize("q", odd_prime_powers(128))
def test_shift_set_invariants_exhaustive(q):
    F = field_new(q)
    for t in range(max_t(q) + 1):
        S = shift_sets(F, t)
        assert shift_set_violations(F, S) == []
        assert brute_orbit_transversal(F, S.M)


def test_violations_are_reported():
    F = field_new(7)
    bad = shift_sets(F, 1)
    broken = type(bad)(bad.q, bad.t, (1, 6, 3), bad.T, bad.T1, bad.T2, bad.S, bad.negS)
    assert "u + v = 0 for some u, v in M" in shift_set_violations(F, broken)


@pytest.mark.parametrize("q", [5, 7, 9, 13, 25])
def test_random_shift_sets_valid(q, rng):
    F = field_new(q)
    for t in range(max_t(q) + 1):
        for _ in range(10):
            assert shift_set_violations(F, random_shift_sets(F, t, rng)) == []
