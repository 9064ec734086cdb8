from __future__ import annotations

from math import prod

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divgraph.errors import ConfigError, VertexRangeError, WidthOverflowError
from divgraph.numtheory import (
    Factorization,
    build_sieve,
    dirichlet_sum,
    divisor_count,
    divisor_count_sum_over_divisors,
    divisor_count_table,
    divisors,
    factorize,
    gcd,
)


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_dirichlet(N):
    return sum(N // n for n in range(1, N + 1))


def is_prime(m):
    return m >= 2 and all(m % d for d in range(2, int(m**0.5) + 1))


def test_sieve_examples():
    s = build_sieve(10)
    assert (s[4], s[9], s[7]) == (2, 3, 7)
    assert build_sieve(2)[2] == 2
    s30 = build_sieve(30)
    assert (s30[30], s30[15]) == (2, 3)
    assert s30[1] == 1


def test_sieve_invariants_exhaustive():
    s = build_sieve(3000)
    for m in range(2, 3001):
        p = s[m]
        assert m % p == 0 and is_prime(p)
        assert all(m % q for q in range(2, p))
        if not is_prime(m):
            assert p * p <= m
        else:
            assert p == m


@pytest.mark.parametrize("limit", [1, 0, -5])
def test_sieve_limit_too_small(limit):
    with pytest.raises(ConfigError, match="sieve limit"):
        build_sieve(limit)


def test_sieve_cap_from_env(monkeypatch):
    monkeypatch.setenv("DIVGRAPH_SIEVE_CAP", "50")
    build_sieve(50)
    with pytest.raises(ConfigError, match=r"\[2, 50\]"):
        build_sieve(51)
    monkeypatch.setenv("DIVGRAPH_SIEVE_CAP", "lots")
    with pytest.raises(ConfigError):
        build_sieve(10)


def test_sieve_is_read_only():
    s = build_sieve(20)
    with pytest.raises(ValueError):
        s.spf[4] = 3


@pytest.mark.parametrize(
    "n, expected",
    [(12, ((2, 2), (3, 1))), (1, ()), (97, ((97, 1),)), (360, ((2, 3), (3, 2), (5, 1)))],
)
def test_factorize_examples(n, expected):
    assert factorize(n, build_sieve(400)).factors == expected


def test_factorize_out_of_range():
    s = build_sieve(10)
    with pytest.raises(VertexRangeError):
        factorize(11, s)
    with pytest.raises(VertexRangeError):
        factorize(0, s)


@given(n=st.integers(1, 10**5))
def test_factorization_invariants(n, sieve_1e5):
    f = factorize(n, sieve_1e5)
    assert f.value() == n
    primes = [p for p, _ in f.factors]
    assert primes == sorted(set(primes))
    assert all(is_prime(p) and j >= 1 for p, j in f.factors)


@pytest.mark.parametrize("n, s", [(12, 6), (1, 1), (2, 2), (97, 2), (36, 9)])
def test_divisor_count_examples(n, s):
    assert divisor_count(factorize(n, build_sieve(100))) == s


def test_divisor_count_matches_divisors_up_to_1e5(sieve_1e5):
    table = divisor_count_table(10**5)
    for n in range(1, 10**5 + 1):
        assert divisor_count(factorize(n, sieve_1e5)) == table[n]
    for n in range(1, 10**5 + 1, 97):
        assert len(divisors(n, sieve_1e5)) == table[n]


@pytest.mark.parametrize("n, expected", [(12, 18), (1, 1), (7, 3)])
def test_divisor_count_sum_examples(n, expected):
    s = build_sieve(20)
    f = factorize(n, s)
    direct = sum(len(naive_divisors(m)) for m in naive_divisors(n))
    assert direct == expected
    assert divisor_count_sum_over_divisors(f) == expected


def test_divisor_count_sum_closed_form_up_to_1e4(sieve_1e4):
    tau = divisor_count_table(10**4)
    for n in range(1, 10**4 + 1):
        direct = sum(int(tau[m]) for m in divisors(n, sieve_1e4))
        assert divisor_count_sum_over_divisors(factorize(n, sieve_1e4)) == direct


def test_divisor_count_sum_overflow_is_reported():
    huge = Factorization(0, tuple((p, 1) for p in range(200)))
    with pytest.raises(WidthOverflowError):
        divisor_count_sum_over_divisors(huge)


@pytest.mark.parametrize("n, expected", [(12, [1, 2, 3, 4, 6, 12]), (1, [1]), (9, [1, 3, 9])])
def test_divisors_examples(n, expected):
    assert divisors(n, build_sieve(20)) == expected


SIEVE_2000 = build_sieve(2000)


@given(st.integers(1, 2000))
def test_divisors_match_trial_division(n):
    assert divisors(n, SIEVE_2000) == naive_divisors(n)


def test_gcd_examples():
    assert gcd(4, 6) == 2
    assert gcd(7, 7) == 7
    assert gcd(1, 123) == 1


@given(st.integers(1, 10**9), st.integers(1, 10**9), st.integers(1, 10**9))
def test_gcd_properties(a, b, c):
    d = gcd(a, b)
    assert d == gcd(b, a)
    assert a % d == 0 and b % d == 0
    assert gcd(a, gcd(b, c)) == gcd(gcd(a, b), c)


@pytest.mark.parametrize("N, expected", [(10, 27), (1, 1), (4, 8)])
def test_dirichlet_examples(N, expected):
    assert naive_dirichlet(N) == expected
    assert dirichlet_sum(N) == expected


def test_dirichlet_matches_naive_up_to_1e5():
    # running naive sum: D(N) - D(N-1) counts the divisors of N
    tau = divisor_count_table(10**5)
    running = np.cumsum(tau)
    for N in range(1, 10**5 + 1):
        assert dirichlet_sum(N) == running[N]


@settings(max_examples=50)
@given(st.integers(1, 10**5))
def test_dirichlet_matches_floor_loop(N):
    assert dirichlet_sum(N) == naive_dirichlet(N)


def test_floor_sum_equals_divisor_count_sum_up_to_1e4(sieve_1e4):
    total = 0
    for N in range(1, 10**4 + 1):
        total += divisor_count(factorize(N, sieve_1e4))
        assert dirichlet_sum(N) == total


def test_dirichlet_rejects_zero():
    with pytest.raises(VertexRangeError):
        dirichlet_sum(0)


def test_factor_product_helper():
    assert prod(p**j for p, j in factorize(5040, build_sieve(6000)).factors) == 5040
