"""Normalized solutions of p = x^2 + y^2 and p = z^2 + 3w^2.

The degree-12 coefficient formulas downstream are sensitive to the signs
of the representation, so each prime gets one canonical representative.
The congruence conventions are:

p = x^2 + y^2  (x odd, y even; exists iff p = 1 mod 4):
  * p = 5 mod 12 : 3 divides neither coordinate; pin x = 1 (mod 3) and
    y = 2 (mod 3).  Both signs are forced.
  * p = 1 mod 12 : exactly one coordinate is divisible by 3;
    sign_plus is true iff it is y.  The coordinate not divisible by 3
    is pinned to = 1 (mod 3); the other one is even in the downstream
    form, so it is taken nonnegative.

p = z^2 + 3w^2  (exists iff p = 1 mod 3):
  * p = 7 mod 12 : z even, w odd (forced by p = 3 mod 4); pin
    z = 1 (mod 3), then pin w by z + w = 1 (mod 4).
  * p = 1 mod 12 : z odd, w even (forced); pin z = 1 (mod 3); w only
    enters through even powers, so it is taken nonnegative.
    sign_plus is true iff z + w = 1 (mod 4) -- well defined because w
    is even, so z + w = z - w (mod 4).

For p = 1 mod 12 the two sign_plus bits always agree; hecke relies on
that correlation, and the test suite sweeps it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import is_prime


@dataclass(frozen=True)
class GaussRep:
    """Canonical x, y with x^2 + y^2 = p, x odd, y even."""

    p: int
    x: int
    y: int
    sign_plus: bool

    def __post_init__(self) -> None:
        if self.x * self.x + self.y * self.y != self.p:
            raise ValueError("x^2 + y^2 != p")
        if self.x % 2 == 0 or self.y % 2 != 0:
            raise ValueError("need x odd, y even")


@dataclass(frozen=True)
class EisRep:
    """Canonical z, w with z^2 + 3w^2 = p."""

    p: int
    z: int
    w: int
    sign_plus: bool

    def __post_init__(self) -> None:
        if self.z * self.z + 3 * self.w * self.w != self.p:
            raise ValueError("z^2 + 3w^2 != p")


def _search_two_squares(p: int) -> tuple[int, int]:
    # x odd, y even and unique up to signs for prime p; plain enumeration
    # over the even coordinate is exact and fast at desk scale.
    for y in range(0, math.isqrt(p) + 1, 2):
        x2 = p - y * y
        x = math.isqrt(x2)
        if x * x == x2:
            return x, y
    raise ValueError(f"no two-square representation found for {p}")


def two_squares(p: int) -> GaussRep:
    """Normalized representation p = x^2 + y^2 for a prime p = 1 mod 4."""
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"two_squares expects a prime = 1 mod 4, got {p}")
    x, y = _search_two_squares(p)
    if p % 12 == 5:
        if x % 3 != 1:
            x = -x
        if y % 3 != 2:
            y = -y
        return GaussRep(p, x, y, True)
    # p = 1 mod 12: exactly one coordinate is divisible by 3
    if y % 3 == 0:
        if x % 3 != 1:
            x = -x
        return GaussRep(p, x, abs(y), True)
    if y % 3 != 1:
        y = -y
    return GaussRep(p, abs(x), y, False)


def one_three_squares(p: int) -> EisRep:
    """Normalized representation p = z^2 + 3w^2 for a prime p = 1 mod 3."""
    if p % 3 != 1 or not is_prime(p):
        raise ValueError(f"one_three_squares expects a prime = 1 mod 3, got {p}")
    for w in range(0, math.isqrt(p // 3) + 1):
        z2 = p - 3 * w * w
        z = math.isqrt(z2)
        if z * z == z2:
            break
    else:
        raise ValueError(f"no z^2 + 3w^2 representation found for {p}")
    if z % 3 != 1:
        z = -z
    if p % 12 == 7:
        # z even, w odd is forced; orient w against z
        if (z + w) % 4 != 1:
            w = -w
        return EisRep(p, z, w, True)
    w = abs(w)
    return EisRep(p, z, w, (z + w) % 4 == 1)
