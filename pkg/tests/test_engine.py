"""Summation engine, Legendre polynomial evaluation, structural identities."""

from fractions import Fraction

import pytest

from supercon.arith import (
    OddPrime,
    PAdicValue,
    legendre_symbol,
    reduce,
    sqrt_mod,
)
from supercon.engine import (
    CONST_WEIGHT,
    FULL,
    HALF,
    LegendreEvalSpec,
    SumSpec,
    WeightSpec,
    binomial_sum,
    clausen_square_check,
    get_context,
    lemma_2_1_check,
    lemma_4_1_check,
    legendre_poly_eval,
    theorem_4_1_transform,
)
from supercon.errors import DenominatorDivisible, DiscriminantNonResidue
from supercon.quadform import represent
from supercon.seq import HARMONIC_GAP

PRIMES_50 = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def _sum_value(h, m, poly, p, e, rng=FULL, weight=CONST_WEIGHT):
    spec = SumSpec(h, m, poly, weight, rng, e)
    return reduce(binomial_sum(spec, OddPrime(p)), e).value


def test_border_case_values():
    # sum binom^3/64^k: 4x^2-2p for p = x^2+y^2 (x odd), 0 for p = 3 (mod 4)
    assert _sum_value(3, 64, (1,), 13, 2) == 10
    assert _sum_value(3, 64, (1,), 7, 2) == 0
    assert _sum_value(3, 64, (1,), 3, 2) == 0


def test_van_hamme_mortenson_form():
    for q in PRIMES_50:
        want = (q * legendre_symbol(-1, q)) % q**2
        assert _sum_value(3, -64, (4, 1), q, 2) == want


def test_denominator_divisible():
    with pytest.raises(DenominatorDivisible):
        _sum_value(3, 26, (1,), 13, 2)


def test_sum_accepts_fraction_and_padic_m():
    p = OddPrime(13)
    frac = _sum_value(3, Fraction(64, 1), (1,), 13, 2)
    assert frac == 10
    podic = SumSpec(3, PAdicValue.from_int(64, p, 4), (1,), CONST_WEIGHT, FULL, 2)
    assert reduce(binomial_sum(podic, p), 2).value == 10


def test_legendre_poly_eval_basics():
    for q in (11, 13, 29):
        p = OddPrime(q)
        n = (q - 1) // 2
        one = PAdicValue.from_int(1, p, 2)
        assert reduce(legendre_poly_eval(LegendreEvalSpec(n, one), p), 2).value == 1
        x = PAdicValue.from_int(9, p, 2)
        assert reduce(legendre_poly_eval(LegendreEvalSpec(1, x), p), 2).value == 9


def test_legendre_poly_sign_symmetry():
    for q in (11, 13, 17, 19):
        p = OddPrime(q)
        n = (q - 1) // 2
        mod = q * q
        for value in (2, 5, 7):
            plus = PAdicValue.from_int(value, p, 2)
            minus = PAdicValue.from_int(-value, p, 2)
            a = reduce(legendre_poly_eval(LegendreEvalSpec(n, plus), p), 2).value
            b = reduce(legendre_poly_eval(LegendreEvalSpec(n, minus), p), 2).value
            assert b == (a if n % 2 == 0 else -a) % mod


def test_lemma_2_2_congruence_random_args():
    # P_n(x) = sum binom^2/(-16)^k ((x-1)/2)^k (mod p^2), h=2 sum at m = -16/z
    import random

    rng = random.Random(99)
    for q in (5, 7, 11, 13, 17, 23, 31, 41, 47):
        p = OddPrime(q)
        n = (q - 1) // 2
        mod = q * q
        for _ in range(20):
            num = rng.randint(-40, 40)
            den = rng.choice([d for d in range(1, 25) if d % q])
            x = Fraction(num, den)
            z = (x - 1) / 2
            xv = PAdicValue.from_rational(x.numerator, x.denominator, p, 4)
            lhs = reduce(legendre_poly_eval(LegendreEvalSpec(n, xv), p), 2).value
            if z == 0:
                assert lhs == 1
                continue
            m = Fraction(-16) / z
            if m.numerator % q == 0:
                continue
            rhs = _sum_value(2, m, (1,), q, 2)
            assert lhs == rhs


def test_clausen_square_identity():
    assert clausen_square_check(0, Fraction(7, 3))
    # n=1, x=3: P_1(3)^2 = 9 = 1 + 2*2*(8/4)
    assert clausen_square_check(1, Fraction(3))
    for n in range(11):
        for x in (
            Fraction(-2), Fraction(-3, 2), Fraction(-1), Fraction(-1, 2),
            Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2),
        ):
            assert clausen_square_check(n, x)


def test_lemma_4_1_hand_case():
    # p=5, k=1: binom(3,1) = 3 and (-1)*2*(1 - 5/2) = 3 (mod 25)
    ok, lhs, rhs = lemma_4_1_check(OddPrime(5))
    assert ok and lhs == rhs
    for q in (7, 11, 13, 17, 19, 23):
        ok, lhs, rhs = lemma_4_1_check(OddPrime(q))
        assert ok and lhs == rhs


def test_theorem_4_1_transform_examples():
    lhs, rhs = theorem_4_1_transform(3, 64, (1,), OddPrime(11))
    assert lhs.value == rhs.value and lhs.modulus == 121
    lhs, rhs = theorem_4_1_transform(3, 16, (1, 0), OddPrime(13))
    assert lhs.value == rhs.value
    for q in PRIMES_50:
        for h, m, poly in ((3, 64, (1,)), (2, 256, (1, 1)), (1, -4, (1, 2))):
            if m % q == 0:
                continue
            lhs, rhs = theorem_4_1_transform(h, m, poly, OddPrime(q))
            assert lhs.value == rhs.value, (h, m, poly, q)


def test_lemma_2_1_instances():
    # the resolvent-root pairings used in the quadratic-form proofs
    cases = [
        (16, 6, 3, -3, 13),    # m=16: a=6, b = 3 + sqrt(-3)
        (-64, 2, 2, 2, 17),    # m=-64: a=2, b = 2 + sqrt(2)
        (1, 28, 21, -7, 29),   # m=1: a=28, b = 21 + sqrt(-7)
        (256, 3, 3, 12, 23),   # m=256: a=3, b = 3 + 2*sqrt(3) = 3 + sqrt(12)
    ]
    for m, a, b0, b1sq, q in cases:
        p = OddPrime(q)
        if legendre_symbol(b1sq, q) != 1:
            continue
        root = sqrt_mod(b1sq, p, 4)[0].value
        for branch, sign in ((1, 1), (-1, -1)):
            b = PAdicValue.from_int(b0 + sign * root, p, 4)
            assert lemma_2_1_check(m, branch, a, b, p)


def test_lemma_2_1_square_specialization():
    # a=0, b=1 reduces to: sum binom^3/m^k = (sum binom^2/m*^k)^2
    for q in (7, 11, 13, 17, 19, 23, 29, 37, 41, 43, 47):
        p = OddPrime(q)
        for m in (1, 16, 64, -8, 256):
            try:
                assert lemma_2_1_check(m, 1, 0, 1, p)
                assert lemma_2_1_check(m, -1, 0, 1, p)
            except DiscriminantNonResidue:
                continue


def test_lemma_2_1_skips_nonresidue_discriminant():
    # disc = m^2 - 64m = 9*16 - 64*... for m=16: 256 - 1024 = -768
    with pytest.raises(DiscriminantNonResidue):
        lemma_2_1_check(16, 1, 0, 1, OddPrime(5))


def test_full_equals_half_h3_e2():
    for q in (5, 7, 13, 29, 61):
        for m in (1, 16, 64, -8, -512, 4096):
            full = _sum_value(3, m, (1,), q, 2)
            half = _sum_value(3, m, (1,), q, 2, rng=HALF)
            assert full == half
        gap_full = _sum_value(3, 64, (1,), q, 2, weight=WeightSpec(HARMONIC_GAP))
        gap_half = _sum_value(
            3, 64, (1,), q, 2, rng=HALF, weight=WeightSpec(HARMONIC_GAP)
        )
        assert gap_full == gap_half


def test_context_cache_reuse():
    p = OddPrime(13)
    assert get_context(p, 4) is get_context(p, 4)
