"""Exact evaluation of terminating hypergeometric series and their nested, leveled
generalization, plus the two integer-parameter identities the counters lean on:
a binomial-quotient closed form for 2F1(-a, b; -c; 1) and a contiguous relation
that trades a 3F2 for two 3F2's with shifted parameters.

All series here terminate because some numerator parameter is a non-positive
integer; values are exact ``Fraction``s and z is carried exactly even though
every counting application sets z = 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .arith import binomial

__all__ = [
    "NonTerminatingSeriesError",
    "ZeroDenominatorFactorError",
    "PFQParams",
    "termination_index",
    "pfq_terms",
    "eval_pfq",
    "gauss_2f1_neg",
    "ContiguousDecomposition",
    "contiguous_step",
    "reduce_3f2",
    "AffineParam",
    "PFQLevel",
    "MultiPFQSpec",
    "eval_multi_pfq",
]


class NonTerminatingSeriesError(ValueError):
    """No numerator parameter is a non-positive integer, so the series is infinite."""


class ZeroDenominatorFactorError(ArithmeticError):
    """A denominator factor vanished at a summation step the series actually reaches."""


@dataclass(frozen=True)
class PFQParams:
    """Integer parameters of a terminating series sum_j prod(a_i)_j / prod(b_i)_j * z^j / j!."""

    numerators: tuple[int, ...]
    denominators: tuple[int, ...]
    z: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(int(x) for x in self.numerators))
        object.__setattr__(self, "denominators", tuple(int(x) for x in self.denominators))
        object.__setattr__(self, "z", Fraction(self.z))


def termination_index(numerators) -> int:
    """Last non-vanishing summation index: the smallest |a| over non-positive numerators."""
    cap = min((-a for a in numerators if a <= 0), default=None)
    if cap is None:
        raise NonTerminatingSeriesError(
            f"no non-positive integer among numerators {tuple(numerators)}"
        )
    return cap


def _term_walk(numerators, denominators, z, bound):
    """Yield terms t_0..t_bound with t_{j+1} = t_j * prod(a+j)/prod(b+j) * z/(j+1).

    A zero denominator factor is an error only while terms are still nonzero;
    once the running term vanishes the rest of the sum is identically zero.
    """
    term = Fraction(1)
    for j in range(bound + 1):
        yield term
        if j == bound:
            return
        den = prod(b + j for b in denominators)
        if den == 0:
            if term == 0:
                return
            raise ZeroDenominatorFactorError(
                f"denominator factor vanished at step {j} of {bound} "
                f"(denominators {tuple(denominators)})"
            )
        term = term * prod(a + j for a in numerators) * z / (den * (j + 1))


def pfq_terms(params: PFQParams) -> list[Fraction]:
    """All terms of the terminating series, in order."""
    bound = termination_index(params.numerators)
    return list(_term_walk(params.numerators, params.denominators, params.z, bound))


def eval_pfq(params: PFQParams) -> Fraction:
    """Exact value of a terminating series."""
    return sum(pfq_terms(params), Fraction(0))


def gauss_2f1_neg(a: int, b: int, c: int) -> Fraction:
    """Closed form C(c+b, a) / C(c, a) for 2F1(-a, b; -c; 1) with b >= 1, 0 <= a <= c."""
    if b < 1:
        raise ValueError(f"requires b >= 1, got {b}")
    if not 0 <= a <= c:
        raise ValueError(f"requires 0 <= a <= c, got a={a}, c={c}")
    return Fraction(binomial(c + b, a), binomial(c, a))


@dataclass(frozen=True)
class ContiguousDecomposition:
    """Two-term rewrite of 3F2(a, b, -c; d, -e; 1); see contiguous_step."""

    coefficient1: Fraction
    params1: PFQParams
    coefficient2: Fraction
    params2: PFQParams

    def evaluate(self) -> Fraction:
        """Value of the decomposition; branches with coefficient 0 are never evaluated."""
        total = Fraction(0)
        if self.coefficient1 != 0:
            total += self.coefficient1 * eval_pfq(self.params1)
        if self.coefficient2 != 0:
            total += self.coefficient2 * eval_pfq(self.params2)
        return total


def contiguous_step(a: int, b: int, c: int, d: int, e: int) -> ContiguousDecomposition:
    """Rewrite 3F2(a, b, -c; d, -e; 1) as
    (-c(e+a)/(de)) * 3F2(a, b+1, -c+1; d+1, -e+1; 1) + ((d+c)/d) * 3F2(a, b+1, -c; d+1, -e; 1).

    Valid for integer parameters with a >= 0, b >= -1, d >= 1 and 0 <= c <= e.
    When c == 0 the first branch carries coefficient 0 and its parameters are
    a formal placeholder (the shifted series need not terminate).
    """
    if a < 0 or b < -1 or d < 1 or not 0 <= c <= e:
        raise ValueError(
            f"parameters outside a>=0, b>=-1, d>=1, 0<=c<=e: a={a}, b={b}, c={c}, d={d}, e={e}"
        )
    coeff1 = Fraction(0) if c == 0 else Fraction(-c * (e + a), d * e)
    coeff2 = Fraction(d + c, d)
    return ContiguousDecomposition(
        coefficient1=coeff1,
        params1=PFQParams((a, b + 1, -c + 1), (d + 1, -e + 1)),
        coefficient2=coeff2,
        params2=PFQParams((a, b + 1, -c), (d + 1, -e)),
    )


def reduce_3f2(a: int, b: int, c: int, e: int) -> Fraction:
    """Evaluate 3F2(a, b, -c; 1, -e; 1) by contiguous steps instead of direct summation.

    Applies contiguous_step a-1 times, raising the first denominator parameter
    until it matches a; the matched pair then cancels and each surviving term
    closes through gauss_2f1_neg. Terms with equal shifted parameters are
    merged along the way, so the expansion stays quadratic in a.
    """
    if a < 1:
        raise ValueError(f"requires a >= 1, got {a}")
    if not 0 <= c <= e:
        raise ValueError(f"requires 0 <= c <= e, got c={c}, e={e}")
    terms: dict[tuple[int, int], Fraction] = {(c, e): Fraction(1)}
    for d in range(1, a):
        shifted: dict[tuple[int, int], Fraction] = {}
        for (ci, ei), weight in terms.items():
            step = contiguous_step(a, b + d - 1, ci, d, ei)
            if step.coefficient1 != 0:
                key = (ci - 1, ei - 1)
                shifted[key] = shifted.get(key, Fraction(0)) + weight * step.coefficient1
            key = (ci, ei)
            shifted[key] = shifted.get(key, Fraction(0)) + weight * step.coefficient2
        terms = shifted
    # every term is now 3F2(a, b+a-1, -ci; a, -ei; 1) = 2F1(b+a-1, -ci; -ei; 1)
    total = Fraction(0)
    for (ci, ei), weight in terms.items():
        if weight != 0:
            total += weight * gauss_2f1_neg(ci, b + a - 1, ei)
    return total


@dataclass(frozen=True)
class AffineParam:
    """Integer parameter const + sum(coeffs[i] * outer[i]) over outer summation indices.

    Coefficients beyond len(coeffs) are implicitly zero, so constants need no
    padding.
    """

    const: int
    coeffs: tuple[int, ...] = ()

    def at(self, outer: tuple[int, ...]) -> int:
        return self.const + sum(c * x for c, x in zip(self.coeffs, outer))


@dataclass(frozen=True)
class PFQLevel:
    """One level of a nested hypergeometric sum; parameters may depend on outer indices."""

    numerators: tuple[AffineParam, ...]
    denominators: tuple[AffineParam, ...]
    z: Fraction = Fraction(1)


@dataclass(frozen=True)
class MultiPFQSpec:
    """Leveled sum over indices m_0 >= m_1 >= ... with per-level Pochhammer quotients.

    Each level contributes prod(a)_{m_i} / prod(b)_{m_i} * z_i^{m_i} / m_i!
    where the level's parameters are affine in the outer indices m_0..m_{i-1}.
    Level 0 must terminate through a non-positive numerator.
    """

    levels: tuple[PFQLevel, ...] = ()


def eval_multi_pfq(spec: MultiPFQSpec) -> Fraction:
    """Exact value of the nested sum."""
    if not spec.levels:
        return Fraction(1)

    def level_sum(index: int, outer: tuple[int, ...]) -> Fraction:
        level = spec.levels[index]
        nums = tuple(p.at(outer) for p in level.numerators)
        dens = tuple(p.at(outer) for p in level.denominators)
        if index == 0:
            bound = termination_index(nums)
        else:
            bound = outer[-1]
            cap = min((-a for a in nums if a <= 0), default=bound)
            bound = min(bound, cap)
        total = Fraction(0)
        last = index == len(spec.levels) - 1
        for j, term in enumerate(_term_walk(nums, dens, level.z, bound)):
            if last:
                total += term
            elif term != 0:
                total += term * level_sum(index + 1, outer + (j,))
        return total

    return level_sum(0, ())
