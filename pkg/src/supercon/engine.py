"""Summation engine for central binomial congruence sums.

The generic object is sum_k P(k) * binomial(2k,k)^h * w_k / m^k over the
half range k <= (p-1)/2 or the full range k <= p-1, evaluated modulo a
power of p.  All per-prime state (inverse tables, binomial powers, weight
tables, memoized moment sums) lives in a PrimeContext so that the many
checks sharing a prime pay for each table once.

Residue bookkeeping: tables store true residues mod p^digits, including
the p-divisibility of binomial(2k,k) for k > (p-1)/2.  The one negative
valuation in the system, H_{2k} - H_k for k in the upper half, is handled
by storing p*(H_{2k}-H_k), which is p-integral; sums over that table are
p times the true value and the engine undoes the scaling in the returned
PAdicValue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .arith import (
    OddPrime,
    PAdicValue,
    ResidueMod,
    legendre_symbol,
    reduce,
    sqrt_mod,
)
from .errors import (
    DenominatorDivisible,
    DiscriminantNonResidue,
    IndexOutOfRange,
    NegativeValuation,
    PrecisionExhausted,
)
from .seq import (
    COMPANION_PELL,
    CONST1,
    CUBIC_CHAR,
    HARMONIC,
    HARMONIC_GAP,
    LUCAS_U,
    LUCAS_V,
    PELL,
    THREE_INDICATOR,
    WEIGHT_KINDS,
)

HALF = "half"
FULL = "full"

GUARD_DIGITS = 2
MAX_DIGITS = 6


@dataclass(frozen=True)
class WeightSpec:
    """Selector for the weight sequence w_k; a, b are Lucas parameters."""

    kind: str = CONST1
    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        if self.kind not in WEIGHT_KINDS:
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if self.kind in (LUCAS_U, LUCAS_V) and (self.a, self.b) == (0, 0):
            raise ValueError(f"{self.kind} weight needs nonzero Lucas parameters")


CONST_WEIGHT = WeightSpec(CONST1)


@dataclass(frozen=True)
class SumSpec:
    """One binomial sum: h, denominator base m, P(k) coeffs, weight, range, e.

    poly holds integer coefficients, highest degree first; m may be an int,
    a Fraction, or a PAdicValue unit (algebraic denominators); range is HALF
    or FULL; the result is wanted mod p^e.
    """

    h: int
    m: object
    poly: tuple = (1,)
    weight: WeightSpec = CONST_WEIGHT
    range: str = FULL
    e: int = 2

    def __post_init__(self) -> None:
        if self.h not in (1, 2, 3):
            raise ValueError(f"h = {self.h} outside 1..3")
        if self.range not in (HALF, FULL):
            raise ValueError(f"range must be {HALF!r} or {FULL!r}")
        if not 1 <= self.e <= 4:
            raise ValueError(f"e = {self.e} outside 1..4")
        if not self.poly or not all(isinstance(c, int) for c in self.poly):
            raise ValueError("poly must be a nonempty tuple of ints")
        object.__setattr__(self, "poly", tuple(self.poly))


class PrimeContext:
    """Per-prime tables mod p^digits shared by every sum at that prime."""

    __slots__ = ("prime", "p", "digits", "mod", "n", "inv", "_binom", "_bh", "_weights", "_moments")

    def __init__(self, prime: OddPrime, digits: int):
        if not 2 <= digits <= MAX_DIGITS:
            raise ValueError(f"digits {digits} outside 2..{MAX_DIGITS}")
        self.prime = prime
        self.p = prime.p
        self.digits = digits
        self.mod = prime.power(digits)
        self.n = (self.p - 1) // 2
        self.inv = self._build_inverses()
        self._binom = None
        self._bh: dict = {}
        self._weights: dict = {}
        self._moments: dict = {}

    def _build_inverses(self) -> list:
        """inv[j] = j^{-1} mod p^digits for 1 <= j <= 2p-1, j != p (one pow)."""
        q, mod = self.p, self.mod
        pref = [1] * (2 * q)
        r = 1
        for j in range(1, 2 * q):
            if j != q:
                r = r * j % mod
            pref[j] = r
        inv = [0] * (2 * q)
        t = pow(r, -1, mod)
        for j in range(2 * q - 1, 0, -1):
            if j != q:
                inv[j] = t * pref[j - 1] % mod
                t = t * j % mod
        return inv

    def binom_units(self) -> list:
        """Unit parts u_k of binomial(2k,k) = p^{[k>n]} u_k, k = 0..p-1."""
        if self._binom is None:
            q, mod, inv = self.p, self.mod, self.inv
            u = [1] * q
            cur = 1
            for k in range(1, q):
                num = 2 if 2 * k - 1 == q else 2 * (2 * k - 1)
                cur = cur * num % mod * inv[k] % mod
                u[k] = cur
            self._binom = u
        return self._binom

    def bh(self, h: int) -> list:
        """True residues of binomial(2k,k)^h mod p^digits, k = 0..p-1."""
        table = self._bh.get(h)
        if table is None:
            u = self.binom_units()
            mod = self.mod
            ph = self.p**h % mod
            if h == 1:
                table = [x for x in u]
            elif h == 2:
                table = [x * x % mod for x in u]
            else:
                table = [x * x % mod * x % mod for x in u]
            for k in range(self.n + 1, self.p):
                table[k] = table[k] * ph % mod
            self._bh[h] = table
        return table

    def weight_table(self, ws: WeightSpec):
        """(table, scaled): residues w_k for k = 0..p-1, or (None, False).

        scaled means the table holds p*w_k (harmonic gap only); const-1
        weights return None so the hot loop can skip a multiplication.
        """
        if ws.kind == CONST1:
            return None, False
        hit = self._weights.get(ws)
        if hit is not None:
            return hit
        q, mod = self.p, self.mod
        kind = ws.kind
        if kind in (LUCAS_U, LUCAS_V, PELL, COMPANION_PELL):
            a, b = (2, -1) if kind in (PELL, COMPANION_PELL) else (ws.a, ws.b)
            w0, w1 = (0, 1) if kind in (LUCAS_U, PELL) else (2, a)
            table = [0] * q
            w0 %= mod
            w1 %= mod
            for k in range(q):
                table[k] = w0
                w0, w1 = w1, (a * w1 - b * w0) % mod
            out = (table, False)
        elif kind == CUBIC_CHAR:
            pat = (0, 1, mod - 1)
            out = ([pat[k % 3] for k in range(q)], False)
        elif kind == THREE_INDICATOR:
            pat = (2, mod - 1, mod - 1)
            out = ([pat[k % 3] for k in range(q)], False)
        elif kind == HARMONIC:
            table = [0] * q
            acc = 0
            for k in range(1, q):
                acc = (acc + self.inv[k]) % mod
                table[k] = acc
            out = (table, False)
        elif kind == HARMONIC_GAP:
            # p*(H_{2k} - H_k); the j = p term contributes exactly 1
            table = [0] * q
            acc = 0
            inv = self.inv
            for k in range(1, q):
                j = 2 * k - 1
                acc += 1 if j == q else q * inv[j] % mod
                acc = (acc + q * inv[2 * k] - q * inv[k]) % mod
                table[k] = acc
            out = (table, True)
        else:  # pragma: no cover
            raise ValueError(f"unknown weight kind {kind!r}")
        self._weights[ws] = out
        return out

    def moments(self, h: int, minv: int, ws: WeightSpec, rng: str):
        """(S0, S1, S2, scaled) with Sj = sum k^j binom^h w_k m^{-k} mod p^digits."""
        key = (h, minv, ws, rng)
        hit = self._moments.get(key)
        if hit is not None:
            return hit
        wt, scaled = self.weight_table(ws)
        B = self.bh(h)
        kmax = self.p if rng == FULL else self.n + 1
        mod = self.mod
        s0 = s1 = s2 = 0
        mk = 1
        if wt is None:
            for k in range(kmax):
                t = B[k] * mk % mod
                s0 += t
                s1 += k * t
                s2 += k * k * t
                mk = mk * minv % mod
        else:
            for k in range(kmax):
                t = B[k] * wt[k] % mod * mk % mod
                s0 += t
                s1 += k * t
                s2 += k * k * t
                mk = mk * minv % mod
        out = (s0 % mod, s1 % mod, s2 % mod, scaled)
        self._moments[key] = out
        return out

    def poly_weighted_sum(self, h: int, minv: int, ws: WeightSpec, rng: str, poly: tuple):
        """Direct pass for deg > 2 polynomials (no memo)."""
        wt, scaled = self.weight_table(ws)
        B = self.bh(h)
        kmax = self.p if rng == FULL else self.n + 1
        mod = self.mod
        acc = 0
        mk = 1
        for k in range(kmax):
            c = 0
            for ci in poly:
                c = c * k + ci
            t = B[k] * (c % mod) % mod * mk % mod
            if wt is not None:
                t = t * wt[k] % mod
            acc += t
            mk = mk * minv % mod
        return acc % mod, scaled


_CTX_CACHE: dict = {}
_CTX_CACHE_MAX = 8


def get_context(p: OddPrime, digits: int) -> PrimeContext:
    """Fetch or build the shared per-prime context."""
    key = (p.p, digits)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = PrimeContext(p, digits)
        if len(_CTX_CACHE) >= _CTX_CACHE_MAX:
            _CTX_CACHE.pop(next(iter(_CTX_CACHE)))
        _CTX_CACHE[key] = ctx
    return ctx


def m_inverse_residue(ctx: PrimeContext, m) -> int:
    """Residue of m^{-1} mod p^digits.

    DenominatorDivisible when m has positive valuation (each m^{-k} term
    would have a pole); m with negative valuation is allowed, its inverse
    simply carries the p-power.
    """
    q, mod = ctx.p, ctx.mod
    if isinstance(m, PAdicValue):
        if m.exact_zero or m.is_zero_to_precision() or m.v > 0:
            raise DenominatorDivisible(f"m = {m!r} vanishes mod {q}")
        if m.known_power < ctx.digits:
            raise PrecisionExhausted(
                f"m known mod {q}^{m.known_power}, context needs {ctx.digits} digits"
            )
        base = pow(m.unit, -1, mod)
        return base * q ** (-m.v) % mod if m.v < 0 else base
    frac = Fraction(m)
    if frac.numerator % q == 0:
        raise DenominatorDivisible(f"m = {m} vanishes mod {q}")
    return frac.denominator * pow(frac.numerator, -1, mod) % mod


def binomial_sum(spec: SumSpec, p: OddPrime) -> PAdicValue:
    """Evaluate the sum described by spec as a PAdicValue.

    Works with e + 2 guard digits; the result always carries enough
    precision for reduce(result, spec.e).
    """
    digits = min(spec.e + GUARD_DIGITS, MAX_DIGITS)
    ctx = get_context(p, digits)
    minv = m_inverse_residue(ctx, spec.m)
    deg = len(spec.poly) - 1
    if deg <= 2:
        s0, s1, s2, scaled = ctx.moments(spec.h, minv, spec.weight, spec.range)
        c0 = spec.poly[-1]
        c1 = spec.poly[-2] if deg >= 1 else 0
        c2 = spec.poly[-3] if deg >= 2 else 0
        raw = (c0 * s0 + c1 * s1 + c2 * s2) % ctx.mod
    else:
        raw, scaled = ctx.poly_weighted_sum(spec.h, minv, spec.weight, spec.range, spec.poly)
    return PAdicValue(p, -1 if scaled else 0, raw, digits)


@dataclass(frozen=True)
class LegendreEvalSpec:
    """P_n(x) evaluation request; x must be a p-adic integer, n < p."""

    n: int
    x: PAdicValue


def legendre_poly_eval(spec: LegendreEvalSpec, p: OddPrime) -> PAdicValue:
    """P_n(x) = sum_k C(n,k) C(n+k,k) ((x-1)/2)^k via the coefficient ratio.

    The running coefficient picks up (n-k)(n+k+1)/(k+1)^2 per step; only
    (k+1)^2 needs inverting, so any p-divisibility in C(n+k,k) is carried
    by the residue itself.
    """
    n, x = spec.n, spec.x
    if not 0 <= n < p.p:
        raise IndexOutOfRange(f"n = {n} outside 0..{p.p - 1}")
    if x.exact_zero:
        x = PAdicValue.from_int(0, p, 2)
    if not x.exact_zero and x.v < 0 and x.unit:
        raise NegativeValuation(f"P_n argument has valuation {x.v} < 0")
    digits = max(2, min(x.known_power if not x.exact_zero else MAX_DIGITS, MAX_DIGITS))
    ctx = get_context(p, digits)
    mod = ctx.mod
    xres = 0 if x.exact_zero else x.unit * p.p**x.v % mod
    z = (xres - 1) * ctx.inv[2] % mod
    acc = 1
    coeff = 1
    zp = 1
    for k in range(n):
        ik = ctx.inv[k + 1]
        coeff = coeff * ((n - k) * (n + k + 1)) % mod * ik % mod * ik % mod
        zp = zp * z % mod
        acc = (acc + coeff * zp) % mod
    return PAdicValue(p, 0, acc, digits)


def legendre_poly_eval_ext(ctx: PrimeContext, n: int, x0: int, x1: int, disc: int):
    """P_n(x0 + x1*w) in Z[w]/(w^2 - disc) mod p^digits, returned as a pair."""
    mod = ctx.mod
    inv2 = ctx.inv[2]
    z0 = (x0 - 1) * inv2 % mod
    z1 = x1 * inv2 % mod
    acc0, acc1 = 1, 0
    zp0, zp1 = 1, 0
    coeff = 1
    first = True
    for k in range(n):
        ik = ctx.inv[k + 1]
        coeff = coeff * ((n - k) * (n + k + 1)) % mod * ik % mod * ik % mod
        if first:
            zp0, zp1 = z0, z1
            first = False
        else:
            zp0, zp1 = (zp0 * z0 + disc * zp1 * z1) % mod, (zp0 * z1 + zp1 * z0) % mod
        acc0 = (acc0 + coeff * zp0) % mod
        acc1 = (acc1 + coeff * zp1) % mod
    return acc0 % mod, acc1 % mod


def _legendre_poly_exact(n: int, x: Fraction) -> Fraction:
    z = (x - 1) / 2
    return sum(comb(n, k) * comb(n + k, k) * z**k for k in range(n + 1))


def clausen_square_check(n: int, x) -> bool:
    """Exact rational identity P_n(x)^2 = sum C(n,k)C(n+k,k)C(2k,k)((x^2-1)/4)^k."""
    if n > 30:
        raise IndexOutOfRange(f"n = {n} above the exact-check bound 30")
    x = Fraction(x)
    lhs = _legendre_poly_exact(n, x) ** 2
    z = (x * x - 1) / 4
    rhs = sum(comb(n, k) * comb(n + k, k) * comb(2 * k, k) * z**k for k in range(n + 1))
    return lhs == rhs


def lemma_4_1_check(p: OddPrime) -> tuple[bool, int, int]:
    """binom(2n-k,k) = (-1)^k binom(2k,k)(1 - p(H_{2k}-H_k)) mod p^2, k <= n.

    n = (p-1)/2; the left side advances by the exact integer ratio
    (2n-2k)(2n-2k-1)/((2n-k)(k+1)).  Returns (ok, lhs, rhs) where the
    residue pair witnesses the first mismatch, or the k = n instance
    when every index agrees.
    """
    ctx = get_context(p, 4)
    q, n, mod = ctx.p, ctx.n, ctx.mod
    mod2 = q * q
    hg, _ = ctx.weight_table(WeightSpec(HARMONIC_GAP))
    B = ctx.bh(1)
    lhs = 1
    for k in range(n + 1):
        rhs = B[k] * (1 - hg[k]) % mod2
        if k % 2:
            rhs = -rhs % mod2
        if lhs % mod2 != rhs:
            return False, lhs % mod2, rhs
        if k < n:
            lhs = (
                lhs
                * ((2 * n - 2 * k) * (2 * n - 2 * k - 1) % mod)
                % mod
                * ctx.inv[2 * n - k]
                % mod
                * ctx.inv[k + 1]
                % mod
            )
    return True, lhs % mod2, rhs


def _poly_derivative(poly: tuple) -> tuple:
    d = len(poly) - 1
    return tuple(c * (d - i) for i, c in enumerate(poly[:-1]))


def _poly_reflect_half(poly: tuple) -> tuple:
    """2^d * P(-k - 1/2) as integer coefficients in k, highest first."""
    d = len(poly) - 1
    asc = [0] * (d + 1)
    for i, ci in enumerate(poly):
        e = d - i
        sign = -1 if e % 2 else 1
        for j in range(e + 1):
            asc[j] += ci * sign * comb(e, j) * 2**j * 2**i
    return tuple(reversed(asc))


def theorem_4_1_transform(h: int, m, poly: tuple, p: OddPrime) -> tuple[ResidueMod, ResidueMod]:
    """Both sides of the half-range reflection identity, mod p^2.

    LHS: ((-1)^h m / p) * sum_{k<=n} P(k) binom^h / m^k.
    RHS: sum_{k<=n} binom^h / mbar^k [ (mbar^{p-1}+1)/2 * P(-k-1/2)
         + (p/2) P'(-k-1/2) ] - p h sum_{k<=n} binom^h P(-k-1/2) (H_2k-H_k)/mbar^k
    with mbar = 16^h / m.  All three right-hand sums run over the half range.
    """
    poly = tuple(poly)
    q = p.p
    mod2 = q * q
    mfrac = Fraction(m)
    mbar = Fraction(16**h) / mfrac
    sym = legendre_symbol((-1) ** h * mfrac.numerator * mfrac.denominator, q)
    lhs_sum = binomial_sum(SumSpec(h, m, poly, CONST_WEIGHT, HALF, 2), p)
    lhs = sym * reduce(lhs_sum, 2).value % mod2

    d = len(poly) - 1
    qpoly = _poly_reflect_half(poly)
    rpoly = _poly_reflect_half(_poly_derivative(poly)) if d >= 1 else None
    s_q = reduce(binomial_sum(SumSpec(h, mbar, qpoly, CONST_WEIGHT, HALF, 2), p), 2).value
    s_r = (
        reduce(binomial_sum(SumSpec(h, mbar, rpoly, CONST_WEIGHT, HALF, 2), p), 2).value
        if rpoly
        else 0
    )
    gap_sum = binomial_sum(SumSpec(h, mbar, qpoly, WeightSpec(HARMONIC_GAP), HALF, 2), p)
    # p * gap_sum reduced mod p^2 (gap_sum itself is p-integral on the half range)
    p_gap = q * reduce(gap_sum, 1).value % mod2
    if mbar.numerator % q == 0:
        raise DenominatorDivisible(f"mbar = {mbar} vanishes mod {q}")
    mb_res = mbar.numerator * pow(mbar.denominator, -1, mod2)
    fq_factor = (pow(mb_res, q - 1, mod2) + 1) * pow(2, -1, mod2) % mod2
    inv2d = pow(pow(2, d, mod2), -1, mod2) if d else 1
    rhs = inv2d * (fq_factor * s_q + q * s_r - h * p_gap) % mod2
    return ResidueMod(p, 2, lhs), ResidueMod(p, 2, rhs)


def lemma_2_1_check(m: int, branch: int, a, b, p: OddPrime) -> bool:
    """Quadratic-resolvent identity tying a cubic sum at m to squares at m*.

    m* is the branch root of z^2 - m z + 16 m = 0; requires the resolvent
    discriminant m^2 - 64m to be a nonzero square mod p, else
    DiscriminantNonResidue (callers skip).  Checks, mod p^2 over the full
    range: sum binom^3/m^k ((a k/16)(m* - m + 32) + b)
           = 2a S1(m*) S0(m*) + b S0(m*)^2
    with Sj(m*) = sum k^j binom^2 / m*^k.
    """
    digits = 4
    ctx = get_context(p, digits)
    q, mod = ctx.p, ctx.mod
    mod2 = q * q
    disc = m * m - 64 * m
    if disc % q == 0:
        raise DiscriminantNonResidue(f"p = {q} divides m^2 - 64m for m = {m}")
    if legendre_symbol(disc, q) == -1:
        raise DiscriminantNonResidue(f"m^2 - 64m = {disc} is not a square mod {q}")
    root = sqrt_mod(disc, p, digits)[0 if branch >= 0 else 1].value
    mstar = (m + root) * ctx.inv[2] % mod
    if not isinstance(a, PAdicValue):
        a = PAdicValue.from_int(a, p, digits)
    if not isinstance(b, PAdicValue):
        b = PAdicValue.from_int(b, p, digits)
    a_res = reduce(a, 2).value
    b_res = reduce(b, 2).value

    s0_3, s1_3, _, _ = ctx.moments(3, m_inverse_residue(ctx, m), CONST_WEIGHT, FULL)
    inv16 = pow(16, -1, mod2)
    factor = a_res * inv16 % mod2 * ((mstar - m + 32) % mod2) % mod2
    lhs = (factor * s1_3 + b_res * s0_3) % mod2

    s0_2, s1_2, _, _ = ctx.moments(2, pow(mstar, -1, mod), CONST_WEIGHT, FULL)
    rhs = (2 * a_res * s1_2 % mod2 * s0_2 + b_res * s0_2 * s0_2) % mod2
    return lhs == rhs
