import random
from fractions import Fraction
from math import factorial

import pytest

from battery_syt.arith import binomial, pochhammer
from battery_syt.hypergeom import (
    AffineParam,
    MultiPFQSpec,
    NonTerminatingSeriesError,
    PFQLevel,
    PFQParams,
    ZeroDenominatorFactorError,
    contiguous_step,
    eval_multi_pfq,
    eval_pfq,
    gauss_2f1_neg,
    pfq_terms,
    reduce_3f2,
    termination_index,
)


def F(*args):
    return Fraction(*args)


def test_eval_pfq_known_values():
    assert eval_pfq(PFQParams((-1, 2), (-2,))) == 2
    assert eval_pfq(PFQParams((0, 3, 7), (2, -5))) == 1
    assert eval_pfq(PFQParams((1, 2, -2), (1, -4))) == F(5, 2)


def test_eval_pfq_honors_z():
    # 1F0(-n; ; z) is the binomial expansion of (1-z)^n
    for n in range(0, 6):
        for z in (F(1, 2), F(-2, 3), F(3)):
            assert eval_pfq(PFQParams((-n,), (), z)) == (1 - z) ** n


def test_eval_pfq_rejects_non_terminating():
    with pytest.raises(NonTerminatingSeriesError):
        eval_pfq(PFQParams((1, 2), (3,)))


def test_eval_pfq_zero_denominator_before_termination():
    # terminates at step 3 but the denominator parameter -2 vanishes at step 2
    with pytest.raises(ZeroDenominatorFactorError):
        eval_pfq(PFQParams((-3, 1), (-2,)))
    # a numerator 0 ends the series before the bad denominator is reached
    assert eval_pfq(PFQParams((0, -3), (-2,))) == 1


def test_termination_index():
    assert termination_index((-4, 2, -1)) == 1
    assert termination_index((0, 5)) == 0
    with pytest.raises(NonTerminatingSeriesError):
        termination_index((1, 2))


def test_term_recurrence_matches_pochhammer_products():
    rng = random.Random(20250810)
    for _ in range(20):
        p = rng.randint(1, 4)
        q = rng.randint(0, 3)
        nums = [rng.randint(-9, 9) for _ in range(p - 1)] + [rng.randint(-9, 0)]
        rng.shuffle(nums)
        cap = termination_index(nums)
        dens = [rng.choice([rng.randint(1, 9), -cap - rng.randint(0, 5)]) for _ in range(q)]
        z = F(rng.randint(-5, 5), rng.randint(1, 5))
        params = PFQParams(tuple(nums), tuple(dens), z)
        terms = pfq_terms(params)
        for j, term in enumerate(terms):
            den = 1
            for b in dens:
                den *= pochhammer(b, j)
            num = 1
            for a in nums:
                num *= pochhammer(a, j)
            assert term == F(num, den * factorial(j)) * z ** j
        assert eval_pfq(params) == sum(terms)


def test_gauss_known_values():
    for b in range(1, 5):
        for c in range(0, 5):
            assert gauss_2f1_neg(0, b, c) == 1
    assert gauss_2f1_neg(1, 2, 3) == F(5, 3)
    assert gauss_2f1_neg(2, 1, 2) == 3
    with pytest.raises(ValueError):
        gauss_2f1_neg(3, 2, 2)
    with pytest.raises(ValueError):
        gauss_2f1_neg(1, 0, 2)


def test_gauss_matches_direct_summation():
    for c in range(0, 9):
        for a in range(0, c + 1):
            for b in range(1, 9):
                direct = eval_pfq(PFQParams((-a, b), (-c,)))
                assert direct == gauss_2f1_neg(a, b, c)


def test_contiguous_step_known_cases():
    step = contiguous_step(2, 1, 1, 1, 2)
    assert step.coefficient1 == -2 and step.coefficient2 == 2
    assert step.evaluate() == eval_pfq(PFQParams((2, 1, -1), (1, -2))) == 2

    # numerator 0 collapses every series to 1, so only the coefficients matter
    for c in range(0, 4):
        for d in range(1, 4):
            for e in range(c, 5):
                step = contiguous_step(0, 2, c, d, e)
                assert step.evaluate() == 1

    # base case b = -1: source is 1 - ac/(de)
    step = contiguous_step(1, -1, 1, 1, 1)
    assert step.evaluate() == eval_pfq(PFQParams((1, -1, -1), (1, -1))) == 0


def test_contiguous_step_rejects_bad_ranges():
    with pytest.raises(ValueError):
        contiguous_step(-1, 1, 1, 1, 2)
    with pytest.raises(ValueError):
        contiguous_step(1, -2, 1, 1, 2)
    with pytest.raises(ValueError):
        contiguous_step(1, 1, 1, 0, 2)
    with pytest.raises(ValueError):
        contiguous_step(1, 1, 3, 1, 2)


def test_contiguous_identity_grid():
    for a in range(0, 4):
        for b in range(-1, 4):
            for d in range(1, 4):
                for e in range(0, 5):
                    for c in range(0, e + 1):
                        source = eval_pfq(PFQParams((a, b, -c), (d, -e)))
                        assert contiguous_step(a, b, c, d, e).evaluate() == source


def test_sum_expansion_identity_grid():
    # F(a,b,-c;d,-e) == 1 + bc/(de) * sum_t F(t,b+1,-c+1;d+1,-e+1)
    for a in range(1, 5):
        for b in range(1, 4):
            for d in range(1, 4):
                for e in range(1, 5):
                    for c in range(1, e + 1):
                        lhs = eval_pfq(PFQParams((a, b, -c), (d, -e)))
                        tail = sum(
                            eval_pfq(PFQParams((t, b + 1, -c + 1), (d + 1, -e + 1)))
                            for t in range(1, a + 1)
                        )
                        assert lhs == 1 + F(b * c, d * e) * tail


def test_reduce_3f2_known_values():
    # one-step case collapses straight to the binomial quotient
    for m in range(1, 5):
        for n in range(0, 5):
            assert reduce_3f2(1, m, n, m * n + 2) == gauss_2f1_neg(n, m, m * n + 2)
    assert reduce_3f2(2, 2, 2, 4) == F(9, 2)
    assert reduce_3f2(3, 3, 2, 6) == eval_pfq(PFQParams((3, 3, -2), (1, -6)))


def test_reduce_3f2_matches_direct_summation():
    for a in range(1, 5):
        for b in range(1, 5):
            for e in range(0, 8):
                for c in range(0, e + 1):
                    assert reduce_3f2(a, b, c, e) == eval_pfq(PFQParams((a, b, -c), (1, -e)))


def test_reduce_3f2_rejects_bad_ranges():
    with pytest.raises(ValueError):
        reduce_3f2(0, 1, 1, 2)
    with pytest.raises(ValueError):
        reduce_3f2(2, 1, 3, 2)


def test_affine_param():
    assert AffineParam(-1, (-1,)).at((3,)) == -4
    assert AffineParam(5).at((2, 7)) == 5
    assert AffineParam(0, (1, 1)).at((2, 7)) == 9


def test_multi_pfq_single_level_equals_pfq():
    cases = [
        ((-3, 2, 5), (1, -7)),
        ((4, -2), (-6,)),
        ((0, 9), (3,)),
    ]
    for nums, dens in cases:
        spec = MultiPFQSpec((
            PFQLevel(
                numerators=tuple(AffineParam(v) for v in nums),
                denominators=tuple(AffineParam(v) for v in dens),
            ),
        ))
        assert eval_multi_pfq(spec) == eval_pfq(PFQParams(nums, dens))


def test_multi_pfq_zero_numerator_gives_one():
    spec = MultiPFQSpec((
        PFQLevel((AffineParam(0), AffineParam(3)), (AffineParam(-5),)),
        PFQLevel((AffineParam(1, (1,)),), (AffineParam(1),)),
    ))
    assert eval_multi_pfq(spec) == 1


def test_multi_pfq_rejects_non_terminating_level_zero():
    spec = MultiPFQSpec((
        PFQLevel((AffineParam(2),), (AffineParam(1),)),
    ))
    with pytest.raises(NonTerminatingSeriesError):
        eval_multi_pfq(spec)


def _two_level_spec(m, n, a):
    # first counting level (index t), second level depends on it (index v)
    return MultiPFQSpec((
        PFQLevel(
            numerators=(AffineParam(a), AffineParam(m), AffineParam(-n)),
            denominators=(AffineParam(-m * n), AffineParam(1)),
        ),
        PFQLevel(
            numerators=(
                AffineParam(a, (1,)), AffineParam(m - 1), AffineParam(-n - 1),
                AffineParam(0, (-1,)), AffineParam(0, (-1,)),
            ),
            denominators=(
                AffineParam(-m * n, (1,)), AffineParam(-1, (-1,)),
                AffineParam(-1, (-1,)), AffineParam(1),
            ),
        ),
    ))


def test_multi_pfq_two_levels_equals_hand_rolled_double_sum():
    # independent route: the same nested sum written with binomial products
    def double_sum(m, n, a):
        total = Fraction(0)
        for t in range(0, n + 1):
            for v in range(0, t + 1):
                total += F(
                    binomial(a + t + v - 1, t + v)
                    * binomial(t + m - 1, t)
                    * binomial(v + m - 2, v)
                    * binomial(n, t)
                    * binomial(n + 1, v)
                    * binomial(t, v)
                    * (t - v + 1),
                    binomial(m * n, t + v) * binomial(t + 1, v) * (t + 1),
                )
        return total

    for m in range(3, 6):
        for n in range(1, 4):
            for a in range(0, 4):
                assert eval_multi_pfq(_two_level_spec(m, n, a)) == double_sum(m, n, a)
