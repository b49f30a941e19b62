"""Named congruence checks over prime moduli, plus the suite runner.

Each check bundles its hypotheses on p, the evaluators for both sides,
the modulus power, and pass/fail semantics.  Proved results abort the
suite when they fail (that signals an implementation bug); conjectural
or biconditional statements record counterexamples and continue.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arith import (
    OddPrime,
    PAdicValue,
    fermat_quotient,
    is_prime,
    legendre_symbol,
    reduce,
    sqrt_mod,
)
from .engine import (
    CONST_WEIGHT,
    FULL,
    GUARD_DIGITS,
    HALF,
    MAX_DIGITS,
    LegendreEvalSpec,
    SumSpec,
    WeightSpec,
    binomial_sum,
    get_context,
    lemma_4_1_check,
    legendre_poly_eval,
    legendre_poly_eval_ext,
    theorem_4_1_transform,
)
from .errors import DiscriminantNonResidue, SuperconError, UnknownCheckId
from .quadform import (
    D1_ODDX1MOD4,
    RAW,
    X1MOD4,
    XPLUSY1MOD4,
    Y1MOD4,
    align_pi,
    normalize,
    pi_bar,
    represent,
    select_aligned,
)
from .seq import (
    COMPANION_PELL,
    CUBIC_CHAR,
    HARMONIC,
    HARMONIC_GAP,
    LUCAS_U,
    LUCAS_V,
    PELL,
    THREE_INDICATOR,
    apery_stream,
)

PROVED = "PROVED"
CONJECTURAL = "CONJECTURAL"

ABORT = "abort"
COUNTEREXAMPLE_MODE = "counterexample"

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"
ERROR = "ERROR"
COUNTEREXAMPLE = "COUNTEREXAMPLE"

GAP_WEIGHT = WeightSpec(HARMONIC_GAP)
HARMONIC_WEIGHT = WeightSpec(HARMONIC)

# m values closed under m -> 4096/m; the dual-m relations run over these.
M_GRID = (1, -8, 16, -64, 256, -512, 4096)
AB_GRID = ((0, 1), (1, 0), (4, 1), (21, 8), (2, -3))
THM15_M = M_GRID + (3,)
# (h, m, poly) instances for the half-range reflection transform.
THM41_GRID = (
    (3, 64, (1,)),
    (3, 16, (1, 0)),
    (3, -64, (4, 1)),
    (2, 256, (1, 1)),
    (1, -4, (1, 2)),
    (2, -16, (2, 3)),
)


def _res(value, mod: int) -> int:
    fr = Fraction(value)
    return fr.numerator * pow(fr.denominator, -1, mod) % mod


def _sgn(c: int) -> int:
    return -1 if c % 2 else 1


def _pow_frac(base, exp: int, mod: int) -> int:
    fr = Fraction(base)
    num = pow(fr.numerator, exp, mod)
    den = pow(fr.denominator, exp, mod)
    return num * pow(den, -1, mod) % mod


def _ext_mul(a, b, disc: int, mod: int):
    return (
        (a[0] * b[0] + disc * a[1] * b[1]) % mod,
        (a[0] * b[1] + a[1] * b[0]) % mod,
    )


def _ext_pow(base, k: int, disc: int, mod: int):
    out = (1, 0)
    for _ in range(k % 4):
        out = _ext_mul(out, base, disc, mod)
    return out


class Workspace:
    """Per-prime evaluation bundle shared by every check in a batch."""

    __slots__ = ("prime", "q", "n", "digits", "ctx", "_cache")

    def __init__(self, p: OddPrime, digits: int):
        self.prime = p
        self.q = p.p
        self.n = (p.p - 1) // 2
        self.digits = max(1 + GUARD_DIGITS, min(digits, MAX_DIGITS))
        self.ctx = get_context(p, self.digits)
        self._cache: dict = {}

    def mod(self, e: int) -> int:
        return self.prime.power(e)

    def legendre(self, a) -> int:
        fr = Fraction(a)
        return legendre_symbol(fr.numerator * fr.denominator, self.prime)

    def sum(self, h, m, poly=(1,), weight=CONST_WEIGHT, rng=FULL, e=2) -> int:
        # evaluate once at the workspace precision, then cut down to e
        spec = SumSpec(h, m, tuple(poly), weight, rng, self.digits - GUARD_DIGITS)
        return reduce(binomial_sum(spec, self.prime), e).value

    def gap1(self, m, e: int = 1) -> int:
        """True value of sum_k k binom^3 (H_2k - H_k)/m^k mod p^e."""
        return self.sum(3, m, (1, 0), GAP_WEIGHT, FULL, e)

    def gap0_half(self, m, e: int = 2) -> int:
        return self.sum(3, m, (1,), GAP_WEIGHT, HALF, e)

    def rep(self, d: int, convention: str):
        key = ("rep", d, convention)
        if key not in self._cache:
            raw = self._cache.setdefault(("raw", d), represent(self.prime, d))
            self._cache[key] = raw if convention == RAW else normalize(raw, convention)
        return self._cache[key]

    def sqrt(self, a: int) -> PAdicValue:
        """The smaller square root of a mod p^2, as a p-adic value."""
        key = ("sqrt", a)
        if key not in self._cache:
            lo, _ = sqrt_mod(a, self.prime, 2)
            self._cache[key] = PAdicValue.from_int(lo.value, self.prime, 2)
        return self._cache[key]

    def aligned(self, d: int, convention: str):
        key = ("aligned", d, convention)
        if key not in self._cache:
            root = self.sqrt(-d)
            rep = self.rep(d, convention)
            if convention == XPLUSY1MOD4:
                self._cache[key] = select_aligned(rep, root)
            else:
                self._cache[key] = align_pi(rep, root)
        return self._cache[key]

    def legendre_poly(self, value: int, e: int = 2) -> int:
        """P_n(value) mod p^e for n = (p-1)/2."""
        x = PAdicValue.from_int(value % self.mod(e), self.prime, e)
        out = legendre_poly_eval(LegendreEvalSpec(self.n, x), self.prime)
        return reduce(out, e).value


@dataclass(frozen=True)
class Equivalence:
    """Truth values whose mutual agreement is the claim under test."""

    truths: tuple
    witness: tuple


@dataclass(frozen=True)
class CongruenceCheck:
    id: str
    anchor: str
    hyp_text: str
    status: str
    failure_mode: str
    max_e: "int | Callable[[OddPrime], int]"
    hypothesis: "Callable[[OddPrime], bool]"
    evaluate: "Callable[[Workspace, int], object]"
    specs: tuple = ()

    def modulus_power(self, p: OddPrime) -> int:
        return self.max_e(p) if callable(self.max_e) else self.max_e


@dataclass(frozen=True)
class CheckReport:
    check: str
    p: int
    verdict: str
    lhs: "int | None"
    rhs: "int | None"
    modulus: "int | None"
    detail: str = ""
    elapsed: float = 0.0


def _spec(h, m, poly=(1,), weight=CONST_WEIGHT, rng=FULL, e=2) -> SumSpec:
    return SumSpec(h, m, tuple(poly), weight, rng, e)


# ---------------------------------------------------------------- evaluators


def _ev_gauss(ws: Workspace, e: int):
    x = ws.rep(1, D1_ODDX1MOD4).x
    k = (ws.q - 1) // 4
    return [(ws.ctx.bh(1)[k] % ws.q, 2 * x % ws.q, ws.q)]


def _ev_cde(ws: Workspace, e: int):
    x = ws.rep(1, D1_ODDX1MOD4).x
    mod2 = ws.mod(2)
    k = (ws.q - 1) // 4
    lhs = ws.ctx.bh(1)[k] % mod2
    factor = (pow(2, ws.q - 1, mod2) + 1) * _res(Fraction(1, 2), mod2) % mod2
    rhs = factor * ((2 * x - _res(Fraction(ws.q, 2 * x), mod2)) % mod2) % mod2
    return [(lhs, rhs, mod2)]


def _four_x_sq(ws: Workspace, d: int, mod: int) -> int:
    x = ws.rep(d, RAW).x
    return (4 * x * x - 2 * ws.q) % mod


def _ev_eq1_0(ws: Workspace, e: int):
    mod = ws.mod(2)
    rhs = _four_x_sq(ws, 1, mod) if ws.q % 4 == 1 else 0
    return [(ws.sum(3, 64, e=2), rhs, mod)]


def _ev_eq1_1(ws: Workspace, e: int):
    mod = ws.mod(2)
    rhs = _four_x_sq(ws, 7, mod) if legendre_symbol(ws.q, 7) == 1 else 0
    return [(ws.sum(3, 1, e=2), rhs, mod)]


def _ev_eq1_2(ws: Workspace, e: int):
    mod = ws.mod(e)
    a = ws.sum(3, -8, e=e)
    b = ws.legendre(2) * ws.sum(3, -512, e=e) % mod
    c = ws.sum(3, 64, e=e)
    return [(a, b, mod), (b, c, mod)]


def _ev_eq1_3(ws: Workspace, e: int):
    mod = ws.mod(2)
    rhs = ws.legendre(2) * _four_x_sq(ws, 2, mod) % mod if ws.q % 8 in (1, 3) else 0
    return [(ws.sum(3, -64, e=2), rhs, mod)]


def _ev_eq1_4(ws: Workspace, e: int):
    mod = ws.mod(2)
    rhs = _four_x_sq(ws, 3, mod) if ws.q % 3 == 1 else 0
    return [(ws.sum(3, 16, e=2), rhs, mod)]


def _ev_eq1_5(ws: Workspace, e: int):
    mod = ws.mod(e)
    rhs = ws.legendre(-1) * ws.sum(3, 16, e=e) % mod
    return [(ws.sum(3, 256, e=e), rhs, mod)]


def _ev_eq1_6(ws: Workspace, e: int):
    mod = ws.mod(e)
    rhs = ws.legendre(-1) * ws.sum(3, 1, e=e) % mod
    return [(ws.sum(3, 4096, e=e), rhs, mod)]


def _ev_eq1_8(ws: Workspace, e: int):
    mod = ws.mod(2)
    acc = 0
    for k, a_k in enumerate(apery_stream(ws.prime, 2)):
        acc += _sgn(k) * reduce(a_k, 2).value
    return [(acc % mod, ws.sum(3, 16, e=2), mod)]


def _ev_eq1_9(ws: Workspace, e: int):
    q = ws.q
    out = []
    for m in M_GRID:
        lhs = ws.sum(3, m, (1,), GAP_WEIGHT, FULL, 1)
        rhs = fermat_quotient(m, ws.prime).value * _res(Fraction(1, 6), q) % q
        rhs = rhs * ws.sum(3, m, e=1) % q
        out.append((lhs, rhs, q))
    return out


def _ev_su5_intro(ws: Workspace, e: int):
    mod = ws.mod(2)
    x = ws.rep(1, D1_ODDX1MOD4).x
    target = ws.legendre(2) * x % mod
    s1 = ws.sum(2, 8, (1, 1), CONST_WEIGHT, HALF, 2)
    s2 = ws.sum(2, -16, (2, 1), CONST_WEIGHT, HALF, 2)
    return [(s1, target, mod), (s2, target, mod)]


def _ev_jameson_ono(ws: Workspace, e: int):
    return [(ws.sum(3, 1, (1,), GAP_WEIGHT, HALF, 1), 0, ws.q)]


def _ev_su1_1_11(ws: Workspace, e: int):
    return [(ws.sum(3, 64, (1,), HARMONIC_WEIGHT, HALF, 1), 0, ws.q)]


def _ev_thm1_1_i(ws: Workspace, e: int):
    mod = ws.mod(2)
    x = ws.rep(2, X1MOD4).x
    a = 4 * ws.sum(2, 32, (1, 0), WeightSpec(PELL)) % mod
    b = ws.sum(2, 32, (1, 0), WeightSpec(COMPANION_PELL))
    c = _sgn((ws.q - 1) // 8 + (x - 1) // 4) * (
        (_res(Fraction(ws.q, x), mod) - 2 * x) % mod
    ) % mod
    d = _sgn((x - 1) // 4) * x % mod
    t = ws.sum(2, 32, (1, 1), WeightSpec(COMPANION_PELL))
    ee = _sgn((ws.q - 1) // 8) * _res(Fraction(1, 2), mod) * t % mod
    return [(a, c, mod), (b, c, mod), (d, ee, mod)]


def _ev_thm1_1_ii(ws: Workspace, e: int):
    mod = ws.mod(2)
    y = ws.rep(2, RAW).y
    a = ws.sum(2, 32, (1, 0), WeightSpec(PELL))
    b = _res(Fraction(1, 2), mod) * ws.sum(2, 32, (1, 0), WeightSpec(COMPANION_PELL)) % mod
    c = _sgn((y + 1) // 2) * y % mod
    d = ws.sum(2, 32, (1,), WeightSpec(PELL))
    ee = _sgn((y - 1) // 2) * ((2 * y - _res(Fraction(ws.q, 4 * y), mod)) % mod) % mod
    return [(a, c, mod), (b, c, mod), (d, ee, mod)]


def _ev_thm1_2_i(ws: Workspace, e: int):
    mod = ws.mod(2)
    x = ws.rep(3, X1MOD4).x
    lhs = ws.sum(2, -16, (2, 1), WeightSpec(THREE_INDICATOR))
    return [(lhs, ws.legendre(2) * 2 * x % mod, mod)]


def _ev_thm1_2_ii_a(ws: Workspace, e: int):
    mod = ws.mod(2)
    y = ws.rep(3, Y1MOD4).y
    lhs = ws.sum(2, -16, (1,), WeightSpec(CUBIC_CHAR))
    rhs = _sgn((ws.q - 3) // 4) * ((4 * y - _res(Fraction(ws.q, 3 * y), mod)) % mod) % mod
    return [(lhs, rhs, mod)]


def _thm1_2_ii_b(ws: Workspace, first_h: int):
    mod = ws.mod(2)
    y = ws.rep(3, Y1MOD4).y
    yform = _sgn((ws.q + 1) // 4) * y % mod
    s1 = ws.sum(first_h, -16, (1, 0), WeightSpec(CUBIC_CHAR))
    s3 = ws.sum(2, -16, (1, 0), WeightSpec(THREE_INDICATOR))
    return [(s1, yform, mod), ((-s3) % mod, yform, mod)]


def _ev_thm1_2_ii_b2(ws: Workspace, e: int):
    return _thm1_2_ii_b(ws, 2)


def _ev_thm1_2_ii_b3(ws: Workspace, e: int):
    return _thm1_2_ii_b(ws, 3)


def _ev_thm1_3_i(ws: Workspace, e: int):
    mod = ws.mod(2)
    x = ws.rep(7, X1MOD4).x
    lhs = ws.sum(2, 16, (4, 3), WeightSpec(LUCAS_V, 1, 16))
    return [(lhs, 6 * ws.legendre(2) * x % mod, mod)]


def _ev_thm1_3_ii(ws: Workspace, e: int):
    mod = ws.mod(2)
    y = ws.rep(7, Y1MOD4).y
    su = ws.sum(2, 16, (1, 0), WeightSpec(LUCAS_U, 1, 16))
    sv = ws.sum(2, 16, (1, 0), WeightSpec(LUCAS_V, 1, 16))
    rhs = -ws.legendre(2) * y * _res(Fraction(1, 2), mod) % mod
    return [(su, rhs, mod), (sv, rhs, mod)]


def _ev_thm1_4_i(ws: Workspace, e: int):
    mod = ws.mod(2)
    x = ws.rep(3, X1MOD4).x
    a = ws.sum(2, 64, (1,), WeightSpec(LUCAS_V, 4, 1))
    b = ws.sum(2, 64, (1, -1), WeightSpec(LUCAS_V, 4, 1))
    rhs_a = (4 * x - _res(Fraction(ws.q, x), mod)) % mod
    return [(a, rhs_a, mod), (b, -2 * x % mod, mod)]


def _ev_thm1_4_ii(ws: Workspace, e: int):
    mod = ws.mod(2)
    y = ws.rep(3, Y1MOD4).y
    a = ws.sum(2, 64, (1,), WeightSpec(LUCAS_U, 4, 1))
    rhs_a = (2 * y - _res(Fraction(ws.q, 6 * y), mod)) % mod
    b1 = ws.sum(2, 64, (1, 0), WeightSpec(LUCAS_U, 4, 1))
    b2 = _res(Fraction(1, 4), mod) * ws.sum(2, 64, (1, 0), WeightSpec(LUCAS_V, 4, 1)) % mod
    return [(a, rhs_a, mod), (b1, y % mod, mod), (b2, y % mod, mod)]


def _ev_thm1_5(ws: Workspace, e: int):
    q, mod = ws.q, ws.mod(2)
    inv4 = _res(Fraction(1, 4), mod)
    out = []
    for m in THM15_M:
        if Fraction(m).numerator % q == 0:
            continue
        mb = Fraction(4096, m)
        fq = (_pow_frac(mb, q - 1, mod) + 1) * inv4 % mod
        s1m, s0m = ws.sum(3, m, (1, 0)), ws.sum(3, m)
        s1b, s0b = ws.sum(3, mb, (1, 0)), ws.sum(3, mb)
        g1b, g0b = ws.gap1(mb), ws.sum(3, mb, (1,), GAP_WEIGHT, FULL, 1)
        sym = ws.legendre(-m)
        for a, b in AB_GRID:
            lhs = (sym * (a * s1m + b * s0m) + fq * (2 * a * s1b + (a - 2 * b) * s0b)) % mod
            rhs = (
                a * q * _res(Fraction(s0b, 2), mod)
                + 3 * q * _res(Fraction(2 * a * g1b + (a - 2 * b) * g0b, 2), mod)
            ) % mod
            out.append((lhs, rhs, mod))
    return out


def _ev_cor1_1(ws: Workspace, e: int):
    q, mod = ws.q, ws.mod(2)
    out = []
    for m in THM15_M:
        if Fraction(m).numerator % q == 0:
            continue
        mb = Fraction(4096, m)
        s0m, s0b = ws.sum(3, m), ws.sum(3, mb)
        g0b = ws.sum(3, mb, (1,), GAP_WEIGHT, FULL, 1)
        lhs = (ws.legendre(-m) * s0m - s0b) % mod
        qp_scaled = (_pow_frac(mb, q - 1, mod) - 1) % mod
        rhs = (-3 * q * g0b + qp_scaled * _res(Fraction(s0b, 2), mod)) % mod
        out.append((lhs, rhs, mod))
    return out


def _ev_vhm_4k1(ws: Workspace, e: int):
    mod = ws.mod(3)
    return [(ws.sum(3, -64, (4, 1), e=3), ws.legendre(-1) * ws.q % mod, mod)]


def _ev_gz_3k1_16(ws: Workspace, e: int):
    mod = ws.mod(2)
    return [(ws.sum(3, 16, (3, 1), e=2), ws.q % mod, mod)]


def _ev_gz_3k1_m8(ws: Workspace, e: int):
    mod = ws.mod(3)
    return [(ws.sum(3, -8, (3, 1), e=3), ws.legendre(-1) * ws.q % mod, mod)]


def _ev_su2_21k8(ws: Workspace, e: int):
    mod = ws.mod(e)
    return [(ws.sum(3, 1, (21, 8), e=e), 8 * ws.q % mod, mod)]


def _ev_long_6k1_256(ws: Workspace, e: int):
    mod = ws.mod(4)
    lhs = ws.sum(3, 256, (6, 1), CONST_WEIGHT, HALF, 4)
    return [(lhs, ws.legendre(-1) * ws.q % mod, mod)]


def lemma_2_2_arguments(q: int, count: int) -> list:
    """Deterministic rational sample points with denominators prime to q."""
    rng = random.Random(10007 * q + 17)
    args = []
    while len(args) < count:
        den = rng.randrange(1, 25)
        if den % q == 0:
            continue
        num = rng.randrange(-40, 41)
        args.append(Fraction(num, den))
    return args


def _ev_lemma2_2(ws: Workspace, e: int, count: int = 4):
    mod = ws.mod(2)
    out = []
    for x in lemma_2_2_arguments(ws.q, count):
        z = (x - 1) / 2
        if z == 0:
            rhs = 1
        else:
            rhs = ws.sum(2, Fraction(-16) / z, e=2)
        lhs = ws.legendre_poly(_res(x, mod))
        lhs_neg = ws.legendre_poly(_res(-x, mod))
        out.append((lhs, rhs, mod))
        out.append((lhs_neg, _sgn(ws.n) * rhs % mod, mod))
    return out


def _ev_lemma2_3(ws: Workspace, e: int):
    q, mod = ws.q, ws.mod(2)
    out = []
    for d in (1, 2, 3, 7):
        if q == d or legendre_symbol(-d, ws.prime) != 1:
            continue
        ar = ws.aligned(d, RAW)
        pb = reduce(pi_bar(ar), 2).value
        x, y = ar.rep.x, ar.rep.y
        s = reduce(ar.sqrt_md, 2).value
        f1 = (2 * x - _res(Fraction(q, 2 * x), mod)) % mod
        f2 = -s * _res(Fraction(1, 2), mod) % mod * (
            (4 * y - _res(Fraction(q, d * y), mod)) % mod
        ) % mod
        out.append((pb, f1, mod))
        out.append((pb, f2, mod))
    return out


def _ev_lemma2_4_d2(ws: Workspace, e: int):
    q, mod = ws.q, ws.mod(2)
    ar = ws.aligned(2, X1MOD4)
    pb = reduce(pi_bar(ar), 2).value
    y = ar.rep.y
    s = reduce(ar.sqrt_md, 2).value
    if q % 8 == 1:
        w = sqrt_mod(2, ws.prime, 2)[0].value
        lhs = ws.legendre_poly(w)
        i_val = s * pow(w, -1, mod) % mod
        rhs = pow(i_val, (-y) % 4, mod) * pb % mod
        return [(lhs, rhs, mod)]
    l0, l1 = legendre_poly_eval_ext(ws.ctx, ws.n, 0, 1, 2)
    i_ext = (0, s * _res(Fraction(1, 2), mod) % mod)
    r = _ext_pow(i_ext, (-y) % 4, 2, mod)
    return [
        (l0 % mod, r[0] * pb % mod, mod),
        (l1 % mod, r[1] * pb % mod, mod),
    ]


def _ev_lemma2_4_d3(ws: Workspace, e: int):
    q, mod = ws.q, ws.mod(2)
    ar = ws.aligned(3, XPLUSY1MOD4)
    pb = reduce(pi_bar(ar), 2).value
    y = ar.rep.y
    s = reduce(ar.sqrt_md, 2).value
    out = [(ws.legendre_poly(s), _sgn(y) * pb % mod, mod)]
    if q % 12 == 1:
        w = sqrt_mod(3, ws.prime, 2)[0].value
        arg = w * _res(Fraction(1, 2), mod) % mod
        minus_i = -s * pow(w, -1, mod) % mod
        rhs = pow(minus_i, ws.n % 4, mod) * pb % mod
        out.append((ws.legendre_poly(arg), rhs, mod))
    else:
        l0, l1 = legendre_poly_eval_ext(ws.ctx, ws.n, 0, _res(Fraction(1, 2), ws.ctx.mod), 3)
        minus_i = (0, -s * _res(Fraction(1, 3), mod) % mod)
        r = _ext_pow(minus_i, ws.n % 4, 3, mod)
        out.append((l0 % mod, r[0] * pb % mod, mod))
        out.append((l1 % mod, r[1] * pb % mod, mod))
    return out


def _ev_lemma2_4_d7(ws: Workspace, e: int):
    q, mod = ws.q, ws.mod(2)
    ar = ws.aligned(7, XPLUSY1MOD4)
    pb = reduce(pi_bar(ar), 2).value
    y = ar.rep.y
    s = reduce(ar.sqrt_md, 2).value
    out = [(ws.legendre_poly(3 * s % mod), _sgn(ws.n + y) * pb % mod, mod)]
    if q % 4 == 1:
        w = sqrt_mod(7, ws.prime, 2)[0].value
        arg = 3 * w * _res(Fraction(1, 8), mod) % mod
        i_val = s * pow(w, -1, mod) % mod
        rhs = pow(i_val, ws.n % 4, mod) * pb % mod
        out.append((ws.legendre_poly(arg), rhs, mod))
    else:
        x1 = 3 * _res(Fraction(1, 8), ws.ctx.mod) % ws.ctx.mod
        l0, l1 = legendre_poly_eval_ext(ws.ctx, ws.n, 0, x1, 7)
        i_ext = (0, s * _res(Fraction(1, 7), mod) % mod)
        r = _ext_pow(i_ext, ws.n % 4, 7, mod)
        out.append((l0 % mod, r[0] * pb % mod, mod))
        out.append((l1 % mod, r[1] * pb % mod, mod))
    return out


def _ev_lemma4_1(ws: Workspace, e: int):
    _, lhs, rhs = lemma_4_1_check(ws.prime)
    return [(lhs, rhs, ws.mod(2))]


def _ev_thm4_1(ws: Workspace, e: int):
    out = []
    for h, m, poly in THM41_GRID:
        if m % ws.q == 0:
            continue
        lhs, rhs = theorem_4_1_transform(h, m, poly, ws.prime)
        out.append((lhs.value, rhs.value, ws.mod(2)))
    return out


def _ev_cor4_1(ws: Workspace, e: int):
    q = ws.q
    lhs = (ws.legendre(-1) * ws.gap1(-64) - _res(Fraction(1, 6), q)) % q
    if q % 8 in (1, 3):
        x = ws.rep(2, RAW).x
        qp = fermat_quotient(2, ws.prime).value
        rhs = _res(Fraction(-(3 * qp + 2) * x * x, 3), q)
    else:
        rhs = 0
    return [(lhs, rhs, q)]


def _ev_cor4_1_b(ws: Workspace, e: int):
    q = ws.q
    x = ws.rep(1, RAW).x
    qp = fermat_quotient(2, ws.prime).value
    rhs = _res(Fraction(-(3 * qp + 2) * x * x, 3), q)
    return [(ws.gap1(64), rhs, q)]


def _ev_cor4_2(ws: Workspace, e: int):
    q = ws.q
    inv6 = _res(Fraction(1, 6), q)
    a = (ws.gap1(16) - inv6) % q
    b = (ws.legendre(-1) * ws.gap1(256) - inv6) % q
    if q % 3 == 1:
        x = ws.rep(3, RAW).x
        qp = fermat_quotient(2, ws.prime).value
        rhs = _res(Fraction(-2 * x * x * (4 * qp + 3), 9), q)
    else:
        rhs = 0
    return [(a, rhs, q), (b, rhs, q)]


def _ev_cor4_3(ws: Workspace, e: int):
    q, mod2 = ws.q, ws.mod(2)
    inv6 = _res(Fraction(1, 6), q)
    lhs1 = ws.sum(3, 4096, (42, 5), e=2)
    rhs1 = 5 * q * ws.legendre(-1) % mod2
    t1 = lhs1 == rhs1
    qp = fermat_quotient(2, ws.prime).value
    split = legendre_symbol(q, 7) == 1
    x = ws.rep(7, RAW).x if split else 0
    lhs2 = (ws.gap1(1) - inv6) % q
    rhs2 = _res(Fraction(-2 * x * x, 3), q) if split else 0
    t2 = lhs2 == rhs2
    lhs3 = (ws.legendre(-1) * ws.gap1(4096) - inv6) % q
    rhs3 = _res(Fraction(-2 * (10 * qp + 7) * x * x, 21), q) if split else 0
    t3 = lhs3 == rhs3
    return Equivalence((t1, t2, t3), (lhs1, rhs1, mod2))


def _ev_cor4_4(ws: Workspace, e: int):
    q, mod2 = ws.q, ws.mod(2)
    inv6 = _res(Fraction(1, 6), q)
    lhs1 = ws.sum(3, -512, (6, 1), e=2)
    rhs1 = ws.legendre(-2) * q % mod2
    t1 = lhs1 == rhs1
    qp = fermat_quotient(2, ws.prime).value
    split = q % 4 == 1
    x = ws.rep(1, RAW).x if split else 0
    lhs2 = (ws.gap1(-8) - ws.legendre(-1) * inv6) % q
    rhs2 = _res(Fraction(-2 * (qp + 1) * x * x, 3), q) if split else 0
    t2 = lhs2 == rhs2
    lhs3 = (ws.legendre(-2) * ws.gap1(-512) - inv6) % q
    rhs3 = _res(Fraction(-(3 * qp + 2) * x * x, 3), q) if split else 0
    t3 = lhs3 == rhs3
    return Equivalence((t1, t2, t3), (lhs1, rhs1, mod2))


def _ev_conj4_1_i(ws: Workspace, e: int):
    mod = ws.mod(2)
    a = ws.gap0_half(-8)
    b = ws.gap0_half(64)
    c = ws.gap0_half(-512)
    if ws.q % 4 == 1:
        mid = _res(Fraction(b, 2), mod)
        return [
            (a, mid, mod),
            (mid, ws.legendre(2) * _res(Fraction(c, 3), mod) % mod, mod),
        ]
    return [
        (a, _res(Fraction(-7 * b, 2), mod), mod),
        (b, -ws.legendre(2) * c % mod, mod),
    ]


def _ev_conj4_1_ii(ws: Workspace, e: int):
    mod = ws.mod(2)
    if ws.q % 3 == 1:
        rhs = ws.legendre(-1) * _res(Fraction(ws.gap0_half(256), 2), mod) % mod
        return [(ws.gap0_half(16), rhs, mod)]
    return [(ws.gap0_half(256), 0, mod)]


def _ev_conj4_1_iii(ws: Workspace, e: int):
    mod = ws.mod(2)
    rhs = 8 * ws.legendre(-1) * ws.gap0_half(4096) % mod
    return [(ws.gap0_half(1), rhs, mod)]


# ------------------------------------------------------------------ catalogue


def _h_all(p: OddPrime) -> bool:
    return True


def _h_gt3(p: OddPrime) -> bool:
    return p.p > 3


def _h_mod(m: int, *residues: int):
    def hyp(p: OddPrime) -> bool:
        return p.p % m in residues

    return hyp


def _h_and(*hs):
    def hyp(p: OddPrime) -> bool:
        return all(h(p) for h in hs)

    return hyp


def _h_symbol(a: int, want: int):
    def hyp(p: OddPrime) -> bool:
        return p.p != abs(a) and legendre_symbol(a, p) == want

    return hyp


def _h_lemma2_3(p: OddPrime) -> bool:
    return any(p.p != d and legendre_symbol(-d, p) == 1 for d in (1, 2, 3, 7))


def _e_eq1_2(p: OddPrime) -> int:
    return (5 + legendre_symbol(-1, p)) // 2


def _e_eq1_5(p: OddPrime) -> int:
    return (5 + legendre_symbol(p.p, 3)) // 2


def _e_eq1_6(p: OddPrime) -> int:
    return (5 + legendre_symbol(p.p, 7)) // 2


def _thm15_specs() -> tuple:
    seen = set()
    for m in THM15_M:
        mb = Fraction(4096, m)
        mb = int(mb) if mb.denominator == 1 else mb
        for spec in (
            _spec(3, m), _spec(3, m, (1, 0)), _spec(3, mb), _spec(3, mb, (1, 0)),
            _spec(3, mb, (1,), GAP_WEIGHT, FULL, 1),
            _spec(3, mb, (1, 0), GAP_WEIGHT, FULL, 1),
        ):
            seen.add(spec)
    return tuple(seen)


def _thm41_specs() -> tuple:
    from .engine import _poly_derivative, _poly_reflect_half

    seen = set()
    for h, m, poly in THM41_GRID:
        mb = Fraction(16**h, m)
        mb = int(mb) if mb.denominator == 1 else mb
        qpoly = _poly_reflect_half(poly)
        seen.add(_spec(h, m, poly, CONST_WEIGHT, HALF, 2))
        seen.add(_spec(h, mb, qpoly, CONST_WEIGHT, HALF, 2))
        if len(poly) > 1:
            seen.add(_spec(h, mb, _poly_reflect_half(_poly_derivative(poly)), CONST_WEIGHT, HALF, 2))
        seen.add(_spec(h, mb, qpoly, GAP_WEIGHT, HALF, 2))
    return tuple(seen)


_CHECKS: "dict[str, CongruenceCheck]" = {}


def _register(check: CongruenceCheck) -> None:
    _CHECKS[check.id] = check


def _build_catalogue() -> None:
    reg = _register
    reg(CongruenceCheck(
        "gauss", "Gauss 1828", "p == 1 (mod 4)", PROVED, ABORT, 1,
        _h_mod(4, 1), _ev_gauss))
    reg(CongruenceCheck(
        "cde", "Chowla-Dwork-Evans 1986", "p == 1 (mod 4)", PROVED, ABORT, 2,
        _h_mod(4, 1), _ev_cde))
    reg(CongruenceCheck(
        "eq1.0", "van Hamme 1997", "all odd p", PROVED, ABORT, 2,
        _h_all, _ev_eq1_0, (_spec(3, 64),)))
    reg(CongruenceCheck(
        "eq1.1", "KLMSY 2012", "p != 7", PROVED, ABORT, 2,
        lambda p: p.p != 7, _ev_eq1_1, (_spec(3, 1),)))
    reg(CongruenceCheck(
        "eq1.2", "KLMSY 2012", "all odd p", PROVED, ABORT, _e_eq1_2,
        _h_all, _ev_eq1_2, (_spec(3, -8, e=3), _spec(3, -512, e=3), _spec(3, 64, e=3))))
    reg(CongruenceCheck(
        "eq1.3", "KLMSY 2012", "all odd p", PROVED, ABORT, 2,
        _h_all, _ev_eq1_3, (_spec(3, -64),)))
    reg(CongruenceCheck(
        "eq1.4", "KLMSY 2012", "p != 3", PROVED, ABORT, 2,
        lambda p: p.p != 3, _ev_eq1_4, (_spec(3, 16),)))
    reg(CongruenceCheck(
        "eq1.5", "KLMSY 2012", "p != 3", PROVED, ABORT, _e_eq1_5,
        lambda p: p.p != 3, _ev_eq1_5, (_spec(3, 256, e=3), _spec(3, 16, e=3))))
    reg(CongruenceCheck(
        "eq1.6", "KLMSY 2012", "p != 7", PROVED, ABORT, _e_eq1_6,
        lambda p: p.p != 7, _ev_eq1_6, (_spec(3, 4096, e=3), _spec(3, 1, e=3))))
    reg(CongruenceCheck(
        "eq1.8", "alternating Apery sum vs m=16", "all odd p", PROVED, ABORT, 2,
        _h_all, _ev_eq1_8, (_spec(3, 16),)))
    reg(CongruenceCheck(
        "eq1.9", "KLMSY 2012", "p > 3", PROVED, ABORT, 1,
        _h_gt3, _ev_eq1_9,
        tuple(_spec(3, m, (1,), GAP_WEIGHT, FULL, 1) for m in M_GRID)
        + tuple(_spec(3, m, e=1) for m in M_GRID)))
    reg(CongruenceCheck(
        "su5.intro", "x mod p^2 from half-range binom^2 sums", "p == 1 (mod 4)",
        PROVED, ABORT, 2, _h_mod(4, 1), _ev_su5_intro,
        (_spec(2, 8, (1, 1), CONST_WEIGHT, HALF), _spec(2, -16, (2, 1), CONST_WEIGHT, HALF))))
    reg(CongruenceCheck(
        "jameson.ono", "Jameson-Ono observation", "p > 3", PROVED, ABORT, 1,
        _h_gt3, _ev_jameson_ono, (_spec(3, 1, (1,), GAP_WEIGHT, HALF, 1),)))
    reg(CongruenceCheck(
        "su1.1.11", "half-range harmonic sum at 64 vanishes", "p > 3, p == 3 (mod 4)",
        PROVED, ABORT, 1, _h_and(_h_gt3, _h_mod(4, 3)), _ev_su1_1_11,
        (_spec(3, 64, (1,), HARMONIC_WEIGHT, HALF, 1),)))
    reg(CongruenceCheck(
        "thm1.1.i", "Pell-weighted sums, p = x^2+2y^2", "p == 1 (mod 8)",
        PROVED, ABORT, 2, _h_mod(8, 1), _ev_thm1_1_i,
        (_spec(2, 32, (1, 0), WeightSpec(PELL)), _spec(2, 32, (1, 0), WeightSpec(COMPANION_PELL)),
         _spec(2, 32, (1, 1), WeightSpec(COMPANION_PELL)))))
    reg(CongruenceCheck(
        "thm1.1.ii", "Pell-weighted sums, p = x^2+2y^2", "p == 3 (mod 8)",
        PROVED, ABORT, 2, _h_mod(8, 3), _ev_thm1_1_ii,
        (_spec(2, 32, (1,), WeightSpec(PELL)),)))
    reg(CongruenceCheck(
        "thm1.2.i", "three-indicator weighted sum, p = x^2+3y^2", "p == 1 (mod 12)",
        PROVED, ABORT, 2, _h_mod(12, 1), _ev_thm1_2_i,
        (_spec(2, -16, (2, 1), WeightSpec(THREE_INDICATOR)),)))
    reg(CongruenceCheck(
        "thm1.2.ii.a", "cubic-character weighted sum, p = x^2+3y^2", "p == 7 (mod 12)",
        PROVED, ABORT, 2, _h_mod(12, 7), _ev_thm1_2_ii_a,
        (_spec(2, -16, (1,), WeightSpec(CUBIC_CHAR)),)))
    reg(CongruenceCheck(
        "thm1.2.ii.b2", "y mod p^2, squared-binomial reading", "p == 7 (mod 12)",
        PROVED, ABORT, 2, _h_mod(12, 7), _ev_thm1_2_ii_b2,
        (_spec(2, -16, (1, 0), WeightSpec(CUBIC_CHAR)),
         _spec(2, -16, (1, 0), WeightSpec(THREE_INDICATOR)))))
    reg(CongruenceCheck(
        "thm1.2.ii.b3", "y mod p^2, cubed-binomial reading", "p == 7 (mod 12)",
        CONJECTURAL, COUNTEREXAMPLE_MODE, 2, _h_mod(12, 7), _ev_thm1_2_ii_b3,
        (_spec(3, -16, (1, 0), WeightSpec(CUBIC_CHAR)),)))
    reg(CongruenceCheck(
        "thm1.3.i", "v_k(1,16)-weighted sum, p = x^2+7y^2", "p == 1 (mod 4), (p/7) = 1",
        PROVED, ABORT, 2,
        _h_and(_h_mod(4, 1), lambda p: p.p != 7 and legendre_symbol(p.p, 7) == 1),
        _ev_thm1_3_i, (_spec(2, 16, (4, 3), WeightSpec(LUCAS_V, 1, 16)),)))
    reg(CongruenceCheck(
        "thm1.3.ii", "u_k(1,16)-weighted sums, p = x^2+7y^2", "p == 3 (mod 4), (p/7) = 1",
        PROVED, ABORT, 2,
        _h_and(_h_mod(4, 3), lambda p: p.p != 7 and legendre_symbol(p.p, 7) == 1),
        _ev_thm1_3_ii,
        (_spec(2, 16, (1, 0), WeightSpec(LUCAS_U, 1, 16)),
         _spec(2, 16, (1, 0), WeightSpec(LUCAS_V, 1, 16)))))
    reg(CongruenceCheck(
        "thm1.4.i", "v_k(4,1)-weighted sums at 64^k, p = x^2+3y^2", "p == 1 (mod 12)",
        PROVED, ABORT, 2, _h_mod(12, 1), _ev_thm1_4_i,
        (_spec(2, 64, (1,), WeightSpec(LUCAS_V, 4, 1)),
         _spec(2, 64, (1, -1), WeightSpec(LUCAS_V, 4, 1)))))
    reg(CongruenceCheck(
        "thm1.4.ii", "u_k(4,1)-weighted sums at 64^k, p = x^2+3y^2", "p == 7 (mod 12)",
        PROVED, ABORT, 2, _h_mod(12, 7), _ev_thm1_4_ii,
        (_spec(2, 64, (1,), WeightSpec(LUCAS_U, 4, 1)),
         _spec(2, 64, (1, 0), WeightSpec(LUCAS_U, 4, 1)),
         _spec(2, 64, (1, 0), WeightSpec(LUCAS_V, 4, 1)))))
    reg(CongruenceCheck(
        "thm1.5", "dual-m reflection with harmonic correction", "p > 3",
        PROVED, ABORT, 2, _h_gt3, _ev_thm1_5, _thm15_specs()))
    reg(CongruenceCheck(
        "cor1.1", "symmetric m vs 4096/m relation", "p > 3",
        PROVED, ABORT, 2, _h_gt3, _ev_cor1_1))
    reg(CongruenceCheck(
        "vhm.4k1", "van Hamme-Mortenson 4k+1 at -64", "p > 3", PROVED, ABORT, 3,
        _h_gt3, _ev_vhm_4k1, (_spec(3, -64, (4, 1), e=3),)))
    reg(CongruenceCheck(
        "gz.3k1.16", "Guo-Zeng 3k+1 at 16", "p > 3", PROVED, ABORT, 2,
        _h_gt3, _ev_gz_3k1_16, (_spec(3, 16, (3, 1)),)))
    reg(CongruenceCheck(
        "gz.3k1.m8", "Guo-Zeng 3k+1 at -8", "p > 3", PROVED, ABORT, 3,
        _h_gt3, _ev_gz_3k1_m8, (_spec(3, -8, (3, 1), e=3),)))
    reg(CongruenceCheck(
        "su2.21k8", "21k+8 supercongruence", "p > 3", PROVED, ABORT, 3,
        _h_gt3, _ev_su2_21k8, (_spec(3, 1, (21, 8), e=3),)))
    reg(CongruenceCheck(
        "long.6k1.256", "Long 2011, 6k+1 at 256", "p > 3", PROVED, ABORT, 4,
        _h_gt3, _ev_long_6k1_256, (_spec(3, 256, (6, 1), CONST_WEIGHT, HALF, 4),)))
    reg(CongruenceCheck(
        "lemma2.2", "Legendre polynomial vs binom^2 sum", "all odd p",
        PROVED, ABORT, 2, _h_all, _ev_lemma2_2))
    reg(CongruenceCheck(
        "lemma2.3", "conjugate factor closed forms", "(-d/p) = 1 for some d in {1,2,3,7}",
        PROVED, ABORT, 2, _h_lemma2_3, _ev_lemma2_3))
    reg(CongruenceCheck(
        "lemma2.4.d2", "Coster-van Hamme, corrected: P_n(sqrt 2)", "p == 1, 3 (mod 8)",
        PROVED, ABORT, 2, _h_mod(8, 1, 3), _ev_lemma2_4_d2))
    reg(CongruenceCheck(
        "lemma2.4.d3", "Coster-van Hamme, corrected: P_n(sqrt -3), P_n(sqrt3/2)",
        "p == 1 (mod 3)", PROVED, ABORT, 2,
        _h_and(_h_mod(3, 1), lambda p: p.p != 3), _ev_lemma2_4_d3))
    reg(CongruenceCheck(
        "lemma2.4.d7", "Coster-van Hamme, corrected: P_n(3 sqrt -7), P_n(3 sqrt7/8)",
        "(-7/p) = 1", PROVED, ABORT, 2, _h_symbol(-7, 1), _ev_lemma2_4_d7))
    reg(CongruenceCheck(
        "lemma4.1", "binom(2n-k,k) reflection identity", "all odd p",
        PROVED, ABORT, 2, _h_all, _ev_lemma4_1))
    reg(CongruenceCheck(
        "thm4.1", "half-range reflection transform", "all odd p",
        PROVED, ABORT, 2, _h_all, _ev_thm4_1, _thm41_specs()))
    reg(CongruenceCheck(
        "cor4.1", "harmonic moment at -64", "p > 3", PROVED, ABORT, 1,
        _h_gt3, _ev_cor4_1, (_spec(3, -64, (1, 0), GAP_WEIGHT, FULL, 1),)))
    reg(CongruenceCheck(
        "cor4.1.b", "harmonic moment at 64", "p == 1 (mod 4)", PROVED, ABORT, 1,
        _h_and(_h_gt3, _h_mod(4, 1)), _ev_cor4_1_b,
        (_spec(3, 64, (1, 0), GAP_WEIGHT, FULL, 1),)))
    reg(CongruenceCheck(
        "cor4.2", "harmonic moments at 16 and 256", "p > 3", PROVED, ABORT, 1,
        _h_gt3, _ev_cor4_2,
        (_spec(3, 16, (1, 0), GAP_WEIGHT, FULL, 1), _spec(3, 256, (1, 0), GAP_WEIGHT, FULL, 1))))
    reg(CongruenceCheck(
        "cor4.3", "42k+5 biconditional", "p > 3, p != 7", PROVED, COUNTEREXAMPLE_MODE, 2,
        _h_and(_h_gt3, lambda p: p.p != 7), _ev_cor4_3,
        (_spec(3, 4096, (42, 5)), _spec(3, 1, (1, 0), GAP_WEIGHT, FULL, 1),
         _spec(3, 4096, (1, 0), GAP_WEIGHT, FULL, 1))))
    reg(CongruenceCheck(
        "cor4.4", "6k+1 at -512 biconditional", "p > 3", PROVED, COUNTEREXAMPLE_MODE, 2,
        _h_gt3, _ev_cor4_4,
        (_spec(3, -512, (6, 1)), _spec(3, -8, (1, 0), GAP_WEIGHT, FULL, 1),
         _spec(3, -512, (1, 0), GAP_WEIGHT, FULL, 1))))
    reg(CongruenceCheck(
        "conj4.1.i", "half-range harmonic-gap relations at -8, 64, -512", "p > 3",
        CONJECTURAL, COUNTEREXAMPLE_MODE, 2, _h_gt3, _ev_conj4_1_i,
        (_spec(3, -8, (1,), GAP_WEIGHT, HALF), _spec(3, 64, (1,), GAP_WEIGHT, HALF),
         _spec(3, -512, (1,), GAP_WEIGHT, HALF))))
    reg(CongruenceCheck(
        "conj4.1.ii", "half-range harmonic-gap relation at 16 vs 256", "p != 3",
        CONJECTURAL, COUNTEREXAMPLE_MODE, 2,
        lambda p: p.p != 3, _ev_conj4_1_ii,
        (_spec(3, 16, (1,), GAP_WEIGHT, HALF), _spec(3, 256, (1,), GAP_WEIGHT, HALF))))
    reg(CongruenceCheck(
        "conj4.1.iii", "half-range harmonic-gap relation at 1 vs 4096",
        "p > 3, p == 3, 5, 6 (mod 7)", CONJECTURAL, COUNTEREXAMPLE_MODE, 2,
        _h_and(_h_gt3, _h_mod(7, 3, 5, 6)), _ev_conj4_1_iii,
        (_spec(3, 1, (1,), GAP_WEIGHT, HALF), _spec(3, 4096, (1,), GAP_WEIGHT, HALF))))


_build_catalogue()


def checks() -> tuple:
    return tuple(_CHECKS.values())


def check_ids() -> tuple:
    return tuple(_CHECKS)


def get_check(check_id: str) -> CongruenceCheck:
    try:
        return _CHECKS[check_id]
    except KeyError:
        raise UnknownCheckId(f"no check named {check_id!r}") from None


def registered_sum_specs() -> tuple:
    """Deduplicated sum specs across the catalogue, in a stable order."""
    seen = set()
    for check in _CHECKS.values():
        seen.update(check.specs)
    return tuple(sorted(
        seen,
        key=lambda s: (s.h, Fraction(s.m), s.poly, s.weight.kind, s.weight.a,
                       s.weight.b, s.range, s.e),
    ))


# ------------------------------------------------------------------- running


def run_check(check_id: str, p, e_override: "int | None" = None,
              workspace: "Workspace | None" = None) -> CheckReport:
    check = get_check(check_id)
    prime = p if isinstance(p, OddPrime) else OddPrime(int(p))
    e = e_override if e_override else check.modulus_power(prime)
    started = time.perf_counter()
    if not check.hypothesis(prime):
        return CheckReport(check_id, prime.p, SKIP, None, None, None,
                           f"hypothesis: {check.hyp_text}",
                           time.perf_counter() - started)
    try:
        ws = workspace
        if ws is None or ws.q != prime.p or ws.digits < e + GUARD_DIGITS:
            ws = Workspace(prime, e + GUARD_DIGITS)
        outcome = check.evaluate(ws, e)
    except DiscriminantNonResidue as exc:
        return CheckReport(check_id, prime.p, SKIP, None, None, None,
                           str(exc), time.perf_counter() - started)
    except SuperconError as exc:
        return CheckReport(check_id, prime.p, ERROR, None, None, None,
                           f"{type(exc).__name__}: {exc}",
                           time.perf_counter() - started)
    elapsed = time.perf_counter() - started
    if isinstance(outcome, Equivalence):
        ok = len(set(outcome.truths)) == 1
        detail = " ".join(f"T{i + 1}={'T' if t else 'F'}" for i, t in enumerate(outcome.truths))
        lhs, rhs, modulus = outcome.witness
    else:
        ok = all(lhs == rhs for lhs, rhs, _ in outcome)
        lhs, rhs, modulus = outcome[0]
        detail = ""
        for i, (left, right, mod) in enumerate(outcome):
            if left != right:
                lhs, rhs, modulus = left, right, mod
                detail = f"congruence {i + 1} of {len(outcome)}"
                break
    if ok:
        verdict = PASS
    elif check.failure_mode == ABORT:
        verdict = FAIL
    else:
        verdict = COUNTEREXAMPLE
    return CheckReport(check_id, prime.p, verdict, lhs, rhs, modulus, detail, elapsed)


def _evaluate_prime(args) -> list:
    ids, q, overrides = args
    prime = OddPrime(q)
    live = []
    for cid in ids:
        check = get_check(cid)
        if check.hypothesis(prime):
            live.append(overrides.get(cid) or check.modulus_power(prime))
    ws = Workspace(prime, GUARD_DIGITS + max(live)) if live else None
    return [run_check(cid, prime, overrides.get(cid), ws) for cid in ids]


@dataclass(frozen=True)
class SuiteResult:
    reports: tuple
    summary: dict
    aborted: "CheckReport | None" = None


def _summarize(reports) -> dict:
    summary: dict = {}
    for rep in reports:
        summary.setdefault(rep.check, {})
        summary[rep.check][rep.verdict] = summary[rep.check].get(rep.verdict, 0) + 1
    return summary


def run_suite(ids, primes, workers: int = 1, overrides: "dict | None" = None) -> SuiteResult:
    """Run the named checks over the given primes.

    Results come back sorted by (p, check id) no matter how many workers
    ran them.  The first FAIL on an abort-mode check stops the run.
    """
    ids = sorted(ids)
    for cid in ids:
        get_check(cid)
    # accept any integer iterable (e.g. range(5, 101)) and keep the odd primes
    primes = sorted({int(q) for q in primes
                     if int(q) >= 3 and int(q) % 2 and is_prime(int(q))})
    overrides = dict(overrides or {})
    if not ids or not primes:
        return SuiteResult((), {})
    jobs = [(tuple(ids), q, overrides) for q in primes]
    reports: list = []
    aborted = None
    if workers <= 1:
        for job in jobs:
            batch = _evaluate_prime(job)
            reports.extend(batch)
            aborted = next((r for r in batch if r.verdict in (FAIL, ERROR)
                            and get_check(r.check).failure_mode == ABORT), None)
            if aborted:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pending = {pool.submit(_evaluate_prime, job) for job in jobs}
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    batch = fut.result()
                    reports.extend(batch)
                    if aborted is None:
                        aborted = next(
                            (r for r in batch if r.verdict in (FAIL, ERROR)
                             and get_check(r.check).failure_mode == ABORT), None)
                if aborted:
                    for fut in pending:
                        fut.cancel()
                    break
    reports.sort(key=lambda r: (r.p, r.check))
    return SuiteResult(tuple(reports), _summarize(reports), aborted)
