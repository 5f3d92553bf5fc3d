import math

import pytest
import sympy

from primorial_pnt.errors import DomainError, ResourceLimitError, ThresholdNotFoundError
from primorial_pnt.theorems import (
    CheckReport,
    check_bertrand,
    check_mertens,
    check_squeeze_brackets,
    check_suzuki,
    mertens_ratio,
    squeeze_violations,
    suzuki_threshold,
)


def brute_suzuki(m, limit):
    holds = [sympy.prime(n + 1) ** m < sympy.primorial(n) for n in range(1, limit + 1)]
    n0 = limit
    while n0 > 1 and holds[n0 - 2]:
        n0 -= 1
    return n0


@pytest.mark.parametrize("max_n", [1, 10, 10**5])
def test_bertrand(max_n):
    report = check_bertrand(max_n)
    assert report.passed and report.range_tested == (1, max_n)


def test_bertrand_boundary_equality():
    # 3 <= 2*2 - 1 holds with equality
    assert check_bertrand(1).violations == 0


def test_bertrand_bad_input():
    with pytest.raises(DomainError):
        check_bertrand(0)


def test_bertrand_capacity(swap_engine):
    swap_engine(table_limit=10**4)
    with pytest.raises(ResourceLimitError):
        check_bertrand(10**5)


@pytest.mark.parametrize("m, expected", [(1, 2), (2, 4)])
def test_suzuki_examples(m, expected):
    assert suzuki_threshold(m, 100) == expected


def test_suzuki_matches_brute_force():
    for m in range(1, 6):
        assert suzuki_threshold(m, 100) == brute_suzuki(m, 100)
    assert suzuki_threshold(3, 100) == 5


def test_suzuki_monotone_in_m():
    values = [suzuki_threshold(m, 100) for m in range(1, 6)]
    assert values == sorted(values)


def test_suzuki_log_form():
    for m in (1, 2, 3):
        report = check_suzuki(m, 100)
        assert report.passed
        assert report.details["empirical_threshold"] == suzuki_threshold(m, 100)


def test_suzuki_not_found():
    # p_(n+1)^20 overtakes #(n) only far beyond n = 10
    with pytest.raises(ThresholdNotFoundError):
        suzuki_threshold(20, 10)


def test_mertens_examples():
    assert abs(mertens_ratio(10**6) - 1) < 0.01
    assert mertens_ratio(2) == pytest.approx(2 / (math.exp(0.5772156649015329) * math.log(2)))
    assert mertens_ratio(2) == pytest.approx(1.620, abs=5e-4)
    assert abs(mertens_ratio(10**4) - 1) < 0.05


def test_mertens_against_direct_product():
    prod = math.prod(p / (p - 1) for p in sympy.primerange(2, 10**4 + 1))
    assert mertens_ratio(10**4) == pytest.approx(prod / (math.exp(0.5772156649015329) * math.log(10**4)), rel=1e-12)


def test_mertens_trend():
    assert abs(mertens_ratio(10**6) - 1) < abs(mertens_ratio(10**2) - 1)


def test_mertens_streaming_path(swap_engine):
    swap_engine(table_limit=10**5, segment_size=1 << 14)
    assert abs(mertens_ratio(10**6) - 1) < 0.01


def test_mertens_capacity(swap_engine):
    swap_engine(table_limit=10**4, sieve_threshold=10**5)
    with pytest.raises(ResourceLimitError):
        mertens_ratio(10**6)


def test_check_mertens_report():
    assert check_mertens(10**6).passed
    assert not check_mertens(10**2, tolerance=0.001).passed


@pytest.mark.parametrize("samples, x_max", [(1, 10), (1000, 10**6), (1000, 10**15)])
def test_squeeze_runs_clean(samples, x_max):
    report = check_squeeze_brackets(samples, x_max)
    assert report.violations == 0
    assert report.details["samples"] == samples


def test_squeeze_spot_check_at_ten():
    assert squeeze_violations(10) == []


def test_squeeze_detects_a_broken_bracket(monkeypatch):
    from primorial_pnt import theorems

    real = theorems.prime_family_argument

    def broken(x, name, a=None):
        value = real(x, name, a)
        return value * 100 if name == "star_blend" else value

    monkeypatch.setattr(theorems, "prime_family_argument", broken)
    report = check_squeeze_brackets(5, 1000)
    assert report.violations == 5 and report.witness == 1000
    assert report.details["failed"] == "prime.star_blend"


def test_squeeze_bad_input():
    with pytest.raises(DomainError):
        check_squeeze_brackets(0, 100)
    with pytest.raises(DomainError):
        check_squeeze_brackets(5, 2)


def test_report_summary():
    r = CheckReport("demo", (1, 5))
    assert r.summary() == "demo range=1..5 violations=0 witness=-"
    r.flag(3)
    r.flag(4)
    assert not r.passed and r.witness == 3 and r.violations == 2
