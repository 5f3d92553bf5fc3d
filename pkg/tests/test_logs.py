import math
from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, strategies as st

from primorial_pnt.errors import DomainError
from primorial_pnt.exactnum import ln_natural, ln_ratio
from primorial_pnt.logs import (
    PRIME_NAMES,
    PRIMORIAL_NAMES,
    LogVariant,
    all_variants,
    eval_primorial_family,
    eval_prime_family,
    parametric_bounds,
    primorial_family_argument,
    prime_family_argument,
)
from primorial_pnt.primes import nth_prime
from primorial_pnt.representation import decompose

mpmath.mp.dps = 40
xs = st.integers(3, 10**15)


def mp_ln(q):
    q = Fraction(q)
    return float(mpmath.log(mpmath.mpf(q.numerator) / q.denominator))


def test_eleven_variants():
    assert len(LogVariant) == 11
    assert PRIME_NAMES == ("minus", "plus", "star_center", "star_blend", "parametric")
    assert PRIMORIAL_NAMES == ("minus", "plus", "hash_center", "star_blend", "diamond", "parametric")
    assert str(LogVariant.PRIMORIAL_DIAMOND) == "primorial.diamond"


@pytest.mark.parametrize(
    "name, expected",
    [
        ("minus", 1.6094379124341004),  # ln 5
        ("plus", 2.3978952727983705),  # ln 11
        ("star_blend", 1.8718021769015914),  # ln 6.5
        ("star_center", 1.9459101490553133),  # ln 7
    ],
)
def test_prime_family_at_ten(name, expected):
    assert eval_prime_family(10, name) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("hash_center", 1.791759469228055),  # ln 6
        ("star_blend", 0.98082925301172624),  # ln 8/3
        ("diamond", 1.466337068793427),  # ln 13/3
        ("minus", 0.6931471805599453),  # ln 2
        ("plus", 3.4011973816621555),  # ln 30
    ],
)
def test_primorial_family_at_ten(name, expected):
    assert eval_primorial_family(10, name) == pytest.approx(expected, rel=1e-12)


def test_star_blend_formula_at_ten():
    # ln p_- + ln(1 + (p/p_- - 1) r*), written out by hand: p_- = 5, p = 7, r* = 3/4
    assert prime_family_argument(10, "star_blend") == 5 * (1 + (Fraction(7, 5) - 1) * Fraction(3, 4))
    assert prime_family_argument(10, "star_blend") == Fraction(13, 2)


@pytest.mark.parametrize(
    "x, family, bounds",
    [
        (10, "prime", (1, Fraction(11, 5))),
        (10, "primorial", (1, 15)),
        (7, "prime", (1, Fraction(11, 5))),  # n*(7) = 4: p_5 / p_3 = 11/5
    ],
)
def test_parametric_bounds(x, family, bounds):
    assert parametric_bounds(x, family) == bounds


def test_parametric_evaluation_and_range():
    assert eval_prime_family(10, "parametric", Fraction(11, 5)) == pytest.approx(math.log(11))
    assert eval_primorial_family(10, "parametric", 15) == pytest.approx(math.log(30))
    with pytest.raises(DomainError):
        eval_prime_family(10, "parametric", 3)
    with pytest.raises(DomainError):
        eval_primorial_family(10, "parametric", Fraction(1, 2))
    with pytest.raises(DomainError):
        eval_primorial_family(10, "parametric")


@pytest.mark.parametrize("name", ["minus", "star_blend", "parametric"])
def test_prime_minus_variants_undefined_at_two(name):
    with pytest.raises(DomainError):
        eval_prime_family(2, name, 1)


def test_prime_variants_defined_at_two():
    assert eval_prime_family(2, "star_center") == pytest.approx(math.log(2))
    assert eval_prime_family(2, "plus") == pytest.approx(math.log(3))


@pytest.mark.parametrize("x", [2, 3, 4, 5])
def test_primorial_minus_is_zero_below_six(x):
    assert eval_primorial_family(x, "minus") == 0.0
    assert eval_primorial_family(x, "diamond") == pytest.approx(math.log(1 + Fraction(x - 2, 4)))


def test_unknown_variant():
    with pytest.raises(DomainError):
        eval_prime_family(10, "diamond")


@given(xs)
def test_prime_family_squeeze(x):
    lo, hi = prime_family_argument(x, "minus"), prime_family_argument(x, "plus")
    _, a_hi = parametric_bounds(x, "prime")
    for name in PRIME_NAMES:
        for a in (1, a_hi):
            assert lo <= prime_family_argument(x, name, a) <= hi
    assert lo <= x <= hi
    # float values keep the order up to rounding
    v_lo, v_hi = ln_ratio(lo), ln_ratio(hi)
    for name in PRIME_NAMES:
        v = eval_prime_family(x, name, a_hi)
        assert v_lo - 1e-12 * v_lo <= v <= v_hi + 1e-12 * v_hi


@given(st.integers(2, 10**40))
def test_primorial_family_squeeze(x):
    lo, hi = primorial_family_argument(x, "minus"), primorial_family_argument(x, "plus")
    _, a_hi = parametric_bounds(x, "primorial")
    for name in PRIMORIAL_NAMES:
        for a in (1, a_hi):
            assert lo <= primorial_family_argument(x, name, a) <= hi
    assert lo <= x <= hi


@given(xs)
def test_prime_decomposition_identity(x):
    rep = decompose(x, "prime")
    value = eval_prime_family(x, "star_center") + ln_ratio(rep.s)
    assert abs(value - ln_natural(x)) <= 1e-10


@given(st.integers(2, 10**30))
def test_primorial_decomposition_identity(x):
    rep = decompose(x, "primorial")
    # sum of ln p_i over the primorial, as in the additive form
    total = math.fsum(math.log(nth_prime(i)) for i in range(1, rep.n + 1)) + ln_ratio(rep.s)
    assert abs(total - ln_natural(x)) <= 1e-10
    assert abs(eval_primorial_family(x, "hash_center") + ln_ratio(rep.s) - ln_natural(x)) <= 1e-10


@given(xs)
def test_bertrand_gap(x):
    assert eval_prime_family(x, "plus") - eval_prime_family(x, "minus") < 2


@given(st.integers(2, 10**30))
def test_primorial_gap(x):
    n = decompose(x, "primorial").n
    gap = eval_primorial_family(x, "plus") - eval_primorial_family(x, "minus")
    assert gap == pytest.approx(math.log(nth_prime(n) * nth_prime(n + 1)))
    assert gap < 2 * math.log(nth_prime(n + 1))


@given(st.integers(3, 10**6))
def test_prime_family_against_sympy_neighbors(x):
    p = sympy.prevprime(x + 1)
    q = sympy.nextprime(x)
    pm = sympy.prevprime(p)
    r = Fraction(x - p, q - p)
    blend = pm * (1 + (Fraction(p, pm) - 1) * r)
    assert eval_prime_family(x, "minus") == pytest.approx(mp_ln(pm), rel=1e-12)
    assert eval_prime_family(x, "star_blend") == pytest.approx(mp_ln(blend), rel=1e-12)


def test_all_variants_at_ten():
    values = all_variants(10)
    assert set(values) == set(LogVariant)
    assert values[LogVariant.PRIME_PARAMETRIC] == pytest.approx(math.log(5))
    assert values[LogVariant.PRIMORIAL_PARAMETRIC] == pytest.approx(math.log(2))


def test_large_x_prime_family():
    x = 10**25
    # floats cannot separate these at this magnitude; the exact arguments can
    assert prime_family_argument(x, "minus") < x < prime_family_argument(x, "plus")
    assert eval_prime_family(x, "star_blend") == pytest.approx(ln_natural(x), rel=1e-12)
