"""Sieve, factorization, divisor counts and the Dirichlet summatory function."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import gcd as _gcd
from math import isqrt, prod

import numpy as np

from divgraph.errors import ConfigError, VertexRangeError, check_width

DEFAULT_SIEVE_CAP = 10**8
SIEVE_CAP_ENV = "DIVGRAPH_SIEVE_CAP"


def sieve_cap() -> int:
    """Largest permitted sieve limit, honouring ``DIVGRAPH_SIEVE_CAP``."""
    raw = os.environ.get(SIEVE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIEVE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ConfigError(f"{SIEVE_CAP_ENV}={raw!r} is not an integer") from None
    if cap < 2:
        raise ConfigError(f"{SIEVE_CAP_ENV} must be at least 2, got {cap}")
    return cap


@dataclass(frozen=True)
class SpfSieve:
    """Smallest-prime-factor table for ``1..limit``.

    ``spf[1] == 1`` and ``spf[0] == 0`` are sentinels. The array is marked
    read-only, so a sieve can be shared freely.
    """

    limit: int
    spf: np.ndarray = field(repr=False)

    def __getitem__(self, m: int) -> int:
        return int(self.spf[m])

    def is_prime(self, m: int) -> bool:
        self._check(m)
        return m >= 2 and int(self.spf[m]) == m

    def primes(self) -> np.ndarray:
        idx = np.arange(self.limit + 1)
        return idx[(idx >= 2) & (self.spf == idx)]

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.limit:
            raise VertexRangeError(f"{n} is outside the sieve range 1..{self.limit}")


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(j for _, j in self.factors)

    def value(self) -> int:
        return prod(p**j for p, j in self.factors)


def build_sieve(limit: int) -> SpfSieve:
    cap = sieve_cap()
    if not 2 <= limit <= cap:
        raise ConfigError(f"sieve limit must lie in [2, {cap}], got {limit}")
    dtype = np.int32 if limit < 2**31 else np.int64
    spf = np.zeros(limit + 1, dtype=dtype)
    spf[1] = 1
    for p in range(2, isqrt(limit) + 1):
        if spf[p]:
            continue
        block = spf[p * p :: p]
        block[block == 0] = p
    # whatever is still unmarked has no factor <= sqrt(limit), hence is prime
    unmarked = np.flatnonzero(spf == 0)
    spf[unmarked[unmarked >= 2]] = unmarked[unmarked >= 2]
    spf[0] = 0
    spf.setflags(write=False)
    return SpfSieve(limit, spf)


def factorize(n: int, sieve: SpfSieve) -> Factorization:
    sieve._check(n)
    factors: list[tuple[int, int]] = []
    m = n
    spf = sieve.spf
    while m > 1:
        p = int(spf[m])
        j = 0
        while m % p == 0:
            m //= p
            j += 1
        factors.append((p, j))
    return Factorization(n, tuple(factors))


def divisor_count(f: Factorization) -> int:
    """s(n): number of divisors of n, counting 1 and n."""
    return prod(j + 1 for _, j in f.factors)


def divisor_count_sum_over_divisors(f: Factorization) -> int:
    """Sum of s(m) over the divisors m of n, via the product over exponents.

    Each factor ``(j+1)(j+2)/2`` is an integer, so the division by ``2**k``
    is done factor by factor.
    """
    total = 1
    for _, j in f.factors:
        total = check_width(total * ((j + 1) * (j + 2) // 2), "divisor-count sum")
    return total


def divisors(n: int, sieve: SpfSieve) -> list[int]:
    f = factorize(n, sieve)
    powers = [[p**e for e in range(j + 1)] for p, j in f.factors]
    return sorted(prod(combo) for combo in product(*powers))


def gcd(a: int, b: int) -> int:
    return _gcd(a, b)


def lcm(a: int, b: int) -> int:
    return a // _gcd(a, b) * b


@lru_cache(maxsize=65536)
def dirichlet_sum(N: int) -> int:
    """D(N) = sum of floor(N/n) for n = 1..N, in O(sqrt N).

    Uses the hyperbola identity D(N) = 2 * sum_{n<=r} floor(N/n) - r^2 with
    r = isqrt(N).
    """
    if N < 1:
        raise VertexRangeError(f"dirichlet_sum needs N >= 1, got {N}")
    r = isqrt(N)
    return check_width(2 * sum(N // n for n in range(1, r + 1)) - r * r, "D(N)")


def divisor_count_table(limit: int) -> np.ndarray:
    """s(n) for every n in 0..limit (entry 0 is 0), by marking multiples."""
    tau = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        tau[d::d] += 1
    return tau
