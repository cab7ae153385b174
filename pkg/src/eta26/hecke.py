"""Exact evaluation of the four CM eigenform coefficients t1+/-, t2+/-.

p26(n) is recovered from the coefficient combination at m = 12n + 13:

    p26(n) = (t1p(m) + t1m(m) - t2p(m) - t2m(m)) / 32617728

where each of the four functions is multiplicative and satisfies a
two-term recursion at prime powers.  t1 values live in Z[sqrt(-3)]
(AlgInt3 below), t2 values in Z; every computation is exact integer
arithmetic, no floating point anywhere.

Prime values by residue class of p (mod 12):
  * 11: both t1 and t2 vanish at p (p inert on both sides).
  *  7: t2(p) = 0; t1(p) = h(z, w) * sqrt(-3) for the normalized
        z^2 + 3w^2 = p, with h an odd degree-12 form.
  *  5: t1(p) = 0; t2(p) is an odd degree-12 form in the normalized
        x^2 + y^2 = p.
  *  1: both are (up to one shared sign) even degree-12 forms; the sign
        comes from the representation's sign_plus bit, and the + and -
        branches coincide.

All functions are pure; prime-level values are memoized behind a
thread-safe cache.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TypeVar

from .arith import factorize, is_prime
from .errors import ConsistencyError
from .quadrep import one_three_squares, two_squares

# 2^8 * 3^4 * 11^2 * 13; the combination below is always exactly
# divisible by it.
P26_DENOMINATOR = 32617728


@dataclass(frozen=True)
class AlgInt3:
    """a + b*sqrt(-3) with arbitrary-precision components."""

    a: int
    b: int

    def __add__(self, other: "AlgInt3") -> "AlgInt3":
        return AlgInt3(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "AlgInt3") -> "AlgInt3":
        return AlgInt3(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "AlgInt3":
        return AlgInt3(-self.a, -self.b)

    def __mul__(self, other: "AlgInt3 | int") -> "AlgInt3":
        if isinstance(other, int):
            return AlgInt3(self.a * other, self.b * other)
        return AlgInt3(
            self.a * other.a - 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __rmul__(self, other: int) -> "AlgInt3":
        return AlgInt3(self.a * other, self.b * other)

    def conjugate(self) -> "AlgInt3":
        return AlgInt3(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + 3 * self.b * self.b

    @property
    def is_rational(self) -> bool:
        return self.b == 0


ALG_ZERO = AlgInt3(0, 0)
ALG_ONE = AlgInt3(1, 0)

# Even part of (x+iy)^12 + conj: 2 * sum _GAUSS_EVEN[k] x^(12-2k) y^(2k)
_GAUSS_EVEN = (1, -66, 495, -924, 495, -66, 1)
# Odd form -i(x+iy)^12 + i(x-iy)^12 = 2 * sum _GAUSS_ODD[k] x^(11-2k) y^(2k+1)
_GAUSS_ODD = (12, -220, 792, -792, 220, -12)
# (z+w*sqrt(-3))^12 + conj = sum _EIS_EVEN[k] z^(12-2k) w^(2k)
_EIS_EVEN = (2, -396, 8910, -49896, 80190, -32076, 1458)
# -(z+w*sqrt(-3))^12 + conj = sqrt(-3) * sum _EIS_ODD[k] z^(11-2k) w^(2k+1)
_EIS_ODD = (-24, 1320, -14256, 42768, -35640, 5832)


def _poly_eval(coeffs: tuple[int, ...], u: int, v: int, odd: bool) -> int:
    """sum coeffs[k] * u^(deg-2k) * v^(2k+1 if odd else 2k), deg = 11 or 12."""
    top = len(coeffs) - 1
    acc = 0
    for k, c in enumerate(coeffs):
        acc += c * u ** (2 * (top - k) + (1 if odd else 0)) * v ** (2 * k)
    return acc * v if odd else acc


@lru_cache(maxsize=None)
def t2_prime(p: int) -> int:
    """t2(p) at a prime p >= 5 (the + branch; the - branch is +/- it)."""
    _require_prime(p)
    if p % 4 == 3:
        return 0
    rep = two_squares(p)
    if p % 12 == 5:
        return 2 * _poly_eval(_GAUSS_ODD, rep.x, rep.y, odd=True)
    value = 2 * _poly_eval(_GAUSS_EVEN, rep.x, rep.y, odd=False)
    return value if rep.sign_plus else -value


@lru_cache(maxsize=None)
def t1_prime(p: int) -> AlgInt3:
    """t1(p) at a prime p >= 5, as an element of Z[sqrt(-3)]."""
    _require_prime(p)
    if p % 3 == 2:
        return ALG_ZERO
    rep = one_three_squares(p)
    if p % 12 == 7:
        return AlgInt3(0, _poly_eval(_EIS_ODD, rep.z, rep.w, odd=True))
    value = _poly_eval(_EIS_EVEN, rep.z, rep.w, odd=False)
    return AlgInt3(value if rep.sign_plus else -value, 0)


def _require_prime(p: int) -> None:
    if p in (2, 3) or not is_prime(p):
        raise ValueError(f"expected a prime not dividing 6, got {p}")


T = TypeVar("T", int, AlgInt3)


def t_prime_power(t_p: T, p: int, alpha: int, chi: int) -> T:
    """t(p^alpha) from t(p) by the two-term Hecke recursion.

    chi must be +1 for p = 1 mod 4 and -1 for p = 3 mod 4:

        t(p^r) = t(p) * t(p^(r-1)) - chi * p^12 * t(p^(r-2)),

    anchored at t(p^0) = 1, t(p^1) = t(p).  Works in Z or Z[sqrt(-3)]
    according to the type of t_p.
    """
    if chi != (1 if p % 4 == 1 else -1):
        raise ValueError(f"chi={chi} inconsistent with p={p} mod 4")
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    one: T = ALG_ONE if isinstance(t_p, AlgInt3) else 1
    if alpha == 0:
        return one
    p12 = p**12
    prev, cur = one, t_p
    for _ in range(alpha - 1):
        prev, cur = cur, t_p * cur - (chi * p12) * prev
    return cur


@dataclass(frozen=True)
class CoeffBundle:
    """The four coefficient values at one m = 1 mod 12.

    t1p + t1m is always a rational integer, and the combination
    t1p + t1m - t2p - t2m is exactly divisible by P26_DENOMINATOR;
    coeff_bundle enforces both.
    """

    m: int
    t1p: AlgInt3
    t1m: AlgInt3
    t2p: int
    t2m: int

    def combination(self) -> AlgInt3:
        return self.t1p + self.t1m - AlgInt3(self.t2p + self.t2m, 0)


def coeff_bundle(m: int) -> CoeffBundle:
    """Assemble t1+/-, t2+/- at m = 12n + 13 multiplicatively.

    The minus branches are not recomputed: at each prime p = 7 mod 12
    (resp. 5 mod 12) with odd exponent the two t1 (resp. t2) branches
    differ only in sign, and agree everywhere else, so one sign flip per
    such prime converts the + product into the - product.
    """
    if m % 12 != 1 or m < 13:
        raise ValueError(f"coeff_bundle expects m = 1 mod 12, m >= 13, got {m}")
    t1p = ALG_ONE
    t2p = 1
    odd_7 = 0
    odd_5 = 0
    for p, alpha in factorize(m):
        chi = 1 if p % 4 == 1 else -1
        t1p = t1p * t_prime_power(t1_prime(p), p, alpha, chi)
        t2p = t2p * t_prime_power(t2_prime(p), p, alpha, chi)
        if alpha % 2 == 1:
            if p % 12 == 7:
                odd_7 += 1
            elif p % 12 == 5:
                odd_5 += 1
    t1m = t1p if odd_7 % 2 == 0 else -t1p
    t2m = t2p if odd_5 % 2 == 0 else -t2p
    bundle = CoeffBundle(m, t1p, t1m, t2p, t2m)
    check = bundle.combination()
    if check.b != 0:
        raise ConsistencyError(f"t1p + t1m not rational at m={m}: {t1p} + {t1m}")
    if check.a % P26_DENOMINATOR != 0:
        raise ConsistencyError(
            f"combination {check.a} at m={m} not divisible by {P26_DENOMINATOR}"
        )
    return bundle


def p26_cm(n: int) -> int:
    """p26(n) via the exact coefficient combination at 12n + 13."""
    if n < 0:
        raise ValueError("p26_cm expects n >= 0")
    bundle = coeff_bundle(12 * n + 13)
    return bundle.combination().a // P26_DENOMINATOR
