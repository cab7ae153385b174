"""Arbitrary-precision integer utilities: primality, factorization, valuations.

Everything here is a pure function of its inputs; returned values are
immutable and safe to share between concurrent tasks.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import FactoringBudgetError

# Trial division handles all factors below this bound before Pollard rho
# is consulted.
TRIAL_DIVISION_BOUND = 100_000

# Miller-Rabin with the first 13 prime bases is deterministic below this
# bound (Sorenson & Webster).  Larger inputs additionally get 64 rounds
# with pseudo-random bases, for an error probability below 4**-64 = 2**-128.
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_EXTRA_ROUNDS = 64

# Default cap on Pollard-Brent iterations across one factorize() call.
DEFAULT_FACTOR_BUDGET = 4_000_000


def _sieve(bound: int) -> list[int]:
    flags = bytearray([1]) * bound
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(range(i * i, bound, i))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = _sieve(TRIAL_DIVISION_BOUND)


def primes_below(bound: int) -> list[int]:
    """All primes p < bound, ascending."""
    if bound <= TRIAL_DIVISION_BOUND:
        # bisect would also do; the list is small enough to slice by scan
        out = []
        for p in _SMALL_PRIMES:
            if p >= bound:
                break
            out.append(p)
        return out
    return _sieve(bound)


def _miller_rabin(n: int, base: int) -> bool:
    # n odd, n > 2, 1 < base < n assumed
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(m: int) -> bool:
    """Primality test.

    Deterministic for 0 <= m < 3.3e24 (the 13-base Miller-Rabin bound);
    beyond that the answer is probabilistic with error probability
    below 2**-128.  The extra bases are drawn from an RNG seeded by m,
    so the answer for a given m is reproducible.
    """
    if m < 0:
        raise ValueError("is_prime expects m >= 0")
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if m % p == 0:
            return m == p
    for base in _MR_BASES:
        if not _miller_rabin(m, base):
            return False
    if m < _DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(m)
    for _ in range(_EXTRA_ROUNDS):
        if not _miller_rabin(m, rng.randrange(2, m - 1)):
            return False
    return True


def _pollard_brent(n: int, budget: list[int]) -> int:
    """A nontrivial factor of composite odd n, or raises on empty budget."""
    rng = random.Random(n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget[0] -= min(m, r - k)
                if budget[0] <= 0:
                    raise FactoringBudgetError(
                        f"factoring budget exhausted on composite {n}"
                    )
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # cycle degenerated; retry with a fresh polynomial


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization: value == prod(p**e for p, e in factors).

    Primes are strictly increasing and certified by is_prime; exponents
    are >= 1.  factors is empty exactly when value == 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError("Factorization.value must be positive")
        prod = 1
        last = 1
        for p, e in self.factors:
            if e < 1:
                raise ValueError(f"exponent {e} < 1 for prime {p}")
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError("factors do not multiply back to value")

    def ord(self, p: int) -> int:
        """Exponent of p in value (0 if p does not divide it)."""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    @property
    def is_square(self) -> bool:
        return all(e % 2 == 0 for _, e in self.factors)

    def __iter__(self):
        return iter(self.factors)


def factorize(m: int, budget: int = DEFAULT_FACTOR_BUDGET) -> Factorization:
    """Complete prime factorization of m >= 1.

    Trial division below TRIAL_DIVISION_BOUND, then Pollard-Brent with a
    Miller-Rabin certifier.  `budget` caps the total number of Brent
    iterations; a pathological input raises FactoringBudgetError instead
    of hanging.
    """
    if m < 1:
        raise ValueError("factorize expects m >= 1")
    value = m
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    remaining = [m] if m > 1 else []
    budget_box = [budget]
    while remaining:
        n = remaining.pop()
        if n == 1:
            continue
        if is_prime(n):
            counts[n] = counts.get(n, 0) + 1
            continue
        root = math.isqrt(n)
        if root * root == n:
            remaining.extend((root, root))
            continue
        d = _pollard_brent(n, budget_box)
        remaining.extend((d, n // d))
    return Factorization(value, tuple(sorted(counts.items())))


def ord_p(m: int, p: int) -> int:
    """Largest e with p**e dividing m (p prime, m >= 1)."""
    if m < 1:
        raise ValueError("ord_p expects m >= 1")
    if p < 2 or not is_prime(p):
        raise ValueError(f"ord_p expects a prime, got {p}")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e
