"""Representations p = x^2 + d*y^2 and sign conventions.

Only d in {1, 2, 3, 7} are supported: each has class number one, so an odd
prime p with (-d/p) = 1 and p not dividing d has an essentially unique
representation.  Congruence statements fix signs through parity conventions
and through alignment with a chosen square root of -d mod p^e.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import OddPrime, PAdicValue, legendre_symbol, padic_add, padic_mul, reduce, sqrt_mod
from .errors import ConventionUnachievable, NotRepresentable, RamifiedPrime

SUPPORTED_D = (1, 2, 3, 7)

RAW = "raw"
X1MOD4 = "x1mod4"
Y1MOD4 = "y1mod4"
XPLUSY1MOD4 = "xplusy1mod4"
D1_ODDX1MOD4 = "d1_oddx1mod4"

CONVENTIONS = (RAW, X1MOD4, Y1MOD4, XPLUSY1MOD4, D1_ODDX1MOD4)


@dataclass(frozen=True)
class QuadRep:
    """One signed representation p = x^2 + d*y^2 under a named convention.

    The convention field records which sign rule produced the pair; the
    parity constraints it implies are validated, signs are whatever the rule
    left (alignment may later flip y where the convention leaves it free).
    """

    p: OddPrime
    d: int
    x: int
    y: int
    convention: str

    def __post_init__(self) -> None:
        if self.d not in SUPPORTED_D:
            raise ValueError(f"unsupported d={self.d}; expected one of {SUPPORTED_D}")
        if self.x**2 + self.d * self.y**2 != self.p.p:
            raise ValueError(f"{self.x}^2 + {self.d}*{self.y}^2 != {self.p.p}")
        c = self.convention
        if c not in CONVENTIONS:
            raise ValueError(f"unknown convention {c!r}")
        if c == X1MOD4 and self.x % 4 != 1:
            raise ValueError(f"x = {self.x} violates x = 1 (mod 4)")
        if c == Y1MOD4 and self.y % 4 != 1:
            raise ValueError(f"y = {self.y} violates y = 1 (mod 4)")
        if c == XPLUSY1MOD4 and (self.x + self.y) % 4 != 1:
            raise ValueError(f"x+y = {self.x + self.y} violates x+y = 1 (mod 4)")
        if c == D1_ODDX1MOD4 and (
            self.d != 1 or self.x % 2 == 0 or self.y % 2 != 0 or self.x % 4 != 1
        ):
            raise ValueError("d=1 convention needs x odd, y even, x = 1 (mod 4)")


@dataclass(frozen=True)
class AlignedRep:
    """A representation whose y-sign is tied to a square root of -d.

    Alignment means x + y*s = 0 (mod p) for s = sqrt_md: the factor
    x + y*sqrt(-d) lies over the prime ideal that s singles out, so the
    conjugate x - y*sqrt(-d) is a p-adic unit.
    """

    rep: QuadRep
    sqrt_md: PAdicValue

    def __post_init__(self) -> None:
        p = self.rep.p.p
        s = reduce(self.sqrt_md, 1).value
        if (s * s + self.rep.d) % p != 0:
            raise ValueError("sqrt_md is not a square root of -d")
        if (self.rep.x + self.rep.y * s) % p != 0:
            raise ValueError("representation is not aligned with sqrt_md")


def represent(p: OddPrime, d: int) -> QuadRep:
    """Find the representation p = x^2 + d*y^2 with x, y > 0 (Cornacchia).

    For d = 1 the pair is ordered so that x is odd.  Raises RamifiedPrime
    when p | d and NotRepresentable when (-d/p) = -1.
    """
    if d not in SUPPORTED_D:
        raise ValueError(f"unsupported d={d}")
    q = p.p
    if d % q == 0:
        raise RamifiedPrime(f"p={q} divides d={d}")
    if legendre_symbol(-d, q) != 1:
        raise NotRepresentable(f"-{d} is not a quadratic residue mod {q}")
    limit = isqrt(q)
    r0 = sqrt_mod(-d, p, 1)[0].value
    for r in (r0, q - r0):
        a, b = q, r
        while b > limit:
            a, b = b, a % b
        rem = q - b * b
        if rem % d == 0:
            y2 = rem // d
            y = isqrt(y2)
            if y * y == y2 and y > 0:
                x = b
                if d == 1 and x % 2 == 0:
                    x, y = y, x
                assert x * x + d * y * y == q
                return QuadRep(p, d, x, y, RAW)
    raise NotRepresentable(f"no x^2 + {d}y^2 = {q} found")  # pragma: no cover


def normalize(rep: QuadRep, convention: str):
    """Apply a sign convention to a representation.

    Returns a single QuadRep, except for XPLUSY1MOD4 where exactly two of
    the four sign choices qualify and both are returned as a tuple; the
    caller disambiguates via select_aligned.
    """
    x, y = abs(rep.x), abs(rep.y)
    p, d = rep.p, rep.d
    if convention == RAW:
        return QuadRep(p, d, x, y, RAW)
    if convention == X1MOD4:
        if x % 2 == 0:
            raise ConventionUnachievable(f"x = {x} is even; x = 1 (mod 4) impossible")
        return QuadRep(p, d, x if x % 4 == 1 else -x, y, X1MOD4)
    if convention == Y1MOD4:
        if y % 2 == 0:
            raise ConventionUnachievable(f"y = {y} is even; y = 1 (mod 4) impossible")
        return QuadRep(p, d, x, y if y % 4 == 1 else -y, Y1MOD4)
    if convention == D1_ODDX1MOD4:
        if d != 1:
            raise ConventionUnachievable("convention only applies to d = 1")
        if x % 2 == 0:
            x, y = y, x
        if x % 2 == 0 or y % 2 != 0:
            raise ConventionUnachievable(f"no odd/even split for ({x}, {y})")
        return QuadRep(p, d, x if x % 4 == 1 else -x, y, D1_ODDX1MOD4)
    if convention == XPLUSY1MOD4:
        picks = [
            (sx * x, sy * y)
            for sx in (1, -1)
            for sy in (1, -1)
            if (sx * x + sy * y) % 4 == 1
        ]
        if len(picks) != 2:
            raise ConventionUnachievable(
                f"{len(picks)} sign choices qualify for ({x}, {y}); x+y must be odd"
            )
        return tuple(QuadRep(p, d, a, b, XPLUSY1MOD4) for a, b in picks)
    raise ValueError(f"unknown convention {convention!r}")


def align_pi(rep: QuadRep, sqrt_md: PAdicValue) -> AlignedRep:
    """Flip the sign of y, if needed, so that x + y*sqrt_md = 0 (mod p).

    Only used with conventions that leave the sign of y free; a flip that
    would break the recorded convention degrades the label to raw.
    """
    p = rep.p.p
    s = reduce(sqrt_md, 1).value
    if (rep.x + rep.y * s) % p == 0:
        return AlignedRep(rep, sqrt_md)
    label = rep.convention
    if label in (Y1MOD4, XPLUSY1MOD4):
        label = RAW
    flipped = QuadRep(rep.p, rep.d, rep.x, -rep.y, label)
    return AlignedRep(flipped, sqrt_md)


def select_aligned(pair, sqrt_md: PAdicValue) -> AlignedRep:
    """Pick the member of a normalize() pair that is aligned with sqrt_md."""
    p = pair[0].p.p
    s = reduce(sqrt_md, 1).value
    for rep in pair:
        if (rep.x + rep.y * s) % p == 0:
            return AlignedRep(rep, sqrt_md)
    raise ConventionUnachievable("no member of the pair aligns; wrong sqrt?")


def pi_bar(aligned: AlignedRep) -> PAdicValue:
    """The conjugate factor x - y*sqrt(-d) as a p-adic unit.

    (x - y s)(x + y s) = p up to the error in s^2 + d, and alignment puts
    all the p-divisibility in the second factor.
    """
    s = aligned.sqrt_md
    x = PAdicValue.from_int(aligned.rep.x, aligned.rep.p, s.prec)
    minus_ys = padic_mul(PAdicValue.from_int(-aligned.rep.y, aligned.rep.p, s.prec), s)
    out = padic_add(x, minus_ys)
    assert out.v == 0
    return out
