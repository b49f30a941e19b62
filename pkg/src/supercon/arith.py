"""Modular and p-adic integer arithmetic.

All congruence checks ultimately compare ResidueMod values; PAdicValue is the
working carrier that tracks valuation and precision through sums and products
so that a final reduce() either yields a trustworthy residue or raises.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DivisionByZero,
    NegativeValuation,
    NonResidue,
    NotCoprime,
    NotInvertible,
    PrecisionExhausted,
    ZeroInput,
)

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

MAX_EXPONENT = 12
MIN_VALUATION = -2


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 2^64."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, order=True)
class OddPrime:
    """An odd prime below 2^63, validated at construction."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int):
            raise TypeError(f"prime must be int, got {type(self.p).__name__}")
        if self.p < 3 or self.p % 2 == 0 or self.p >= 2**63:
            raise ValueError(f"{self.p} is not an odd prime below 2^63")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def power(self, e: int) -> int:
        return self.p**e

    def __int__(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"OddPrime({self.p})"


def _as_int_prime(p: "OddPrime | int") -> int:
    if isinstance(p, OddPrime):
        return p.p
    OddPrime(p)  # validate
    return p


@dataclass(frozen=True)
class ResidueMod:
    """Integer residue in [0, p^e); the common language of all reports."""

    p: OddPrime
    e: int
    value: int

    def __post_init__(self) -> None:
        if not 1 <= self.e <= MAX_EXPONENT:
            raise ValueError(f"exponent {self.e} outside 1..{MAX_EXPONENT}")
        object.__setattr__(self, "value", self.value % self.p.power(self.e))

    @property
    def modulus(self) -> int:
        return self.p.power(self.e)

    def lift(self, e: int) -> "ResidueMod":
        """Reinterpret mod p^e for smaller e (information-losing only)."""
        if e > self.e:
            raise ValueError(f"cannot lift precision {self.e} to {e}")
        return ResidueMod(self.p, e, self.value)

    def signed(self) -> int:
        """Representative in (-p^e/2, p^e/2]."""
        m = self.modulus
        return self.value - m if self.value > m // 2 else self.value

    def __add__(self, other: "ResidueMod") -> "ResidueMod":
        self._check(other)
        return ResidueMod(self.p, self.e, self.value + other.value)

    def __sub__(self, other: "ResidueMod") -> "ResidueMod":
        self._check(other)
        return ResidueMod(self.p, self.e, self.value - other.value)

    def __mul__(self, other: "ResidueMod") -> "ResidueMod":
        self._check(other)
        return ResidueMod(self.p, self.e, self.value * other.value)

    def _check(self, other: "ResidueMod") -> None:
        if self.p != other.p or self.e != other.e:
            raise ValueError("mixed moduli in ResidueMod arithmetic")

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p.p}^{self.e})"


def mod_inv(a: ResidueMod) -> ResidueMod:
    """Inverse mod p^e; NotInvertible when p | a."""
    if a.value % a.p.p == 0:
        raise NotInvertible(f"{a.value} not invertible mod {a.p.p}^{a.e}")
    return ResidueMod(a.p, a.e, pow(a.value, -1, a.modulus))


def legendre_symbol(a: int, p: "OddPrime | int") -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} by Euler's criterion."""
    q = _as_int_prime(p)
    a %= q
    if a == 0:
        return 0
    t = pow(a, (q - 1) // 2, q)
    return 1 if t == 1 else -1


def fermat_quotient(m: int, p: "OddPrime | int") -> ResidueMod:
    """q_p(m) = (m^(p-1) - 1)/p mod p, for m coprime to p."""
    q = _as_int_prime(p)
    if m % q == 0:
        raise NotCoprime(f"{m} is divisible by {q}")
    t = pow(m, q - 1, q * q)
    prime = p if isinstance(p, OddPrime) else OddPrime(q)
    return ResidueMod(prime, 1, (t - 1) // q)


def _tonelli_shanks(a: int, p: int) -> int:
    """One square root of a mod p; caller guarantees a is a nonzero residue."""
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        t = t * b % p * b % p
        c = b * b % p
        m = i
    assert x * x % p == a % p
    return x


def sqrt_mod(a: int, p: "OddPrime | int", e: int) -> tuple[ResidueMod, ResidueMod]:
    """Both square roots of a mod p^e, smaller representative first.

    Raises ZeroInput when p | a and NonResidue when (a/p) = -1.  Root choice
    beyond the (smaller, larger) ordering carries no meaning; callers that
    need a specific root must select it by an explicit convention.
    """
    q = _as_int_prime(p)
    if a % q == 0:
        raise ZeroInput(f"sqrt_mod needs a unit; {a} = 0 (mod {q})")
    if legendre_symbol(a, q) == -1:
        raise NonResidue(f"{a} is not a square mod {q}")
    r = _tonelli_shanks(a % q, q)
    mod = q
    while mod < q**e:
        # quadratic Newton step for z^2 - a, doubling the known digits
        mod = min(mod * mod, q**e)
        r = (r + a * pow(r, -1, mod)) * pow(2, -1, mod) % mod
    mod = q**e
    r %= mod
    assert r * r % mod == a % mod
    prime = p if isinstance(p, OddPrime) else OddPrime(q)
    lo, hi = sorted((r, mod - r))
    return ResidueMod(prime, e, lo), ResidueMod(prime, e, hi)


class PAdicValue:
    """p-adic number p^v * u with u a unit known modulo p^prec.

    The value is therefore known modulo p^(v+prec).  An exact zero is a
    distinguished state.  A value whose unit happens to be divisible by p is
    renormalized on construction; when every tracked digit is zero the value
    is kept with unit 0, meaning "zero to this precision" without claiming
    exactness.
    """

    __slots__ = ("p", "v", "unit", "prec", "exact_zero")

    def __init__(self, p: OddPrime, v: int, unit: int, prec: int, *, exact_zero: bool = False):
        if prec < 1:
            raise PrecisionExhausted(f"no digits left at p={int(p)} (prec={prec})")
        self.p = p
        self.prec = prec
        if exact_zero:
            self.exact_zero = True
            self.v = 0
            self.unit = 0
            return
        self.exact_zero = False
        q = p.p
        mod = q**prec
        unit %= mod
        if unit == 0:
            self.v, self.unit = v, 0
            return
        while unit % q == 0:
            unit //= q
            v += 1
            prec -= 1
            if prec == 0:
                # all tracked digits were zero after the shift
                self.v, self.unit, self.prec = v, 0, 1
                return
        self.v, self.unit, self.prec = v, unit, prec
        if self.v < MIN_VALUATION:
            raise NegativeValuation(f"valuation {self.v} below {MIN_VALUATION}")

    @staticmethod
    def zero(p: OddPrime, prec: int) -> "PAdicValue":
        return PAdicValue(p, 0, 0, prec, exact_zero=True)

    @staticmethod
    def from_int(n: int, p: OddPrime, prec: int) -> "PAdicValue":
        if n == 0:
            return PAdicValue.zero(p, prec)
        return PAdicValue(p, 0, n, prec)

    @staticmethod
    def from_rational(num: int, den: int, p: OddPrime, prec: int) -> "PAdicValue":
        """num/den as a p-adic value; den may carry p-power (bounded poles)."""
        if den == 0:
            raise DivisionByZero("rational with zero denominator")
        if num == 0:
            return PAdicValue.zero(p, prec)
        q = p.p
        v = 0
        while den % q == 0:
            den //= q
            v -= 1
        mod = q**prec
        return PAdicValue(p, v, num * pow(den, -1, mod), prec)

    @property
    def known_power(self) -> int:
        """The value is pinned down modulo p^known_power."""
        return self.v + self.prec

    def is_zero_to_precision(self) -> bool:
        return self.exact_zero or self.unit == 0

    def __repr__(self) -> str:
        if self.exact_zero:
            return f"PAdicValue(0 exactly, p={self.p.p})"
        return (
            f"PAdicValue({self.p.p}^{self.v} * {self.unit} "
            f"+ O({self.p.p}^{self.known_power}))"
        )


def padic_add(x: PAdicValue, y: PAdicValue) -> PAdicValue:
    if x.p != y.p:
        raise ValueError("mixed primes in p-adic addition")
    if x.exact_zero:
        return y
    if y.exact_zero:
        return x
    v = min(x.v, y.v)
    known = min(x.known_power, y.known_power)
    if known <= v:
        raise PrecisionExhausted("no overlapping digits in p-adic addition")
    q = x.p.p
    total = x.unit * q ** (x.v - v) + y.unit * q ** (y.v - v)
    return PAdicValue(x.p, v, total, known - v)


def padic_mul(x: PAdicValue, y: PAdicValue) -> PAdicValue:
    if x.p != y.p:
        raise ValueError("mixed primes in p-adic multiplication")
    if x.exact_zero or y.exact_zero:
        return PAdicValue.zero(x.p, max(x.prec, y.prec))
    prec = min(x.prec, y.prec)
    return PAdicValue(x.p, x.v + y.v, x.unit * y.unit, prec)


def padic_div(x: PAdicValue, y: PAdicValue) -> PAdicValue:
    if x.p != y.p:
        raise ValueError("mixed primes in p-adic division")
    if y.exact_zero:
        raise DivisionByZero("division by exact p-adic zero")
    if y.unit == 0:
        raise PrecisionExhausted("divisor is zero to tracked precision")
    if x.exact_zero:
        return PAdicValue.zero(x.p, x.prec)
    prec = min(x.prec, y.prec)
    q = x.p.p
    inv = pow(y.unit, -1, q**prec)
    return PAdicValue(x.p, x.v - y.v, x.unit * inv, prec)


def reduce(x: PAdicValue, e: int) -> ResidueMod:
    """Residue of x mod p^e.

    Requires valuation >= 0 (NegativeValuation otherwise) and known_power
    >= e (PrecisionExhausted otherwise).
    """
    if x.exact_zero:
        return ResidueMod(x.p, e, 0)
    if x.v < 0 and x.unit != 0:
        raise NegativeValuation(f"valuation {x.v} < 0; not a p-adic integer")
    if x.known_power < e:
        raise PrecisionExhausted(
            f"value known mod {x.p.p}^{x.known_power}, requested mod {x.p.p}^{e}"
        )
    return ResidueMod(x.p, e, x.unit * x.p.p**max(x.v, 0))


def congruent(x: PAdicValue, y: PAdicValue, e: int) -> bool:
    """Whether x = y (mod p^e)."""
    return reduce(x, e).value == reduce(y, e).value
