"""Finite-range instance checks of the classical theorems the estimators lean on.

None of these prove anything; a nonzero violation count means a bug in the
machinery that produced the primes, not a counterexample.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DomainError, ResourceLimitError, ThresholdNotFoundError, UnsupportedRangeError
from .estimator import EXP_GAMMA, mertens_fractions, tot_star
from .exactnum import ln_natural
from .logs import PRIME_NAMES, PRIMORIAL_NAMES, parametric_bounds, primorial_family_argument, prime_family_argument
from .primes import get_engine, iter_prime_segments
from .primorial import primorial


@dataclass
class CheckReport:
    check_name: str
    range_tested: tuple[int, int]
    violations: int = 0
    witness: int | None = None
    elapsed: float = 0.0
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def flag(self, witness: int) -> None:
        self.violations += 1
        if self.witness is None:
            self.witness = witness

    def summary(self) -> str:
        lo, hi = self.range_tested
        parts = [self.check_name, f"range={lo}..{hi}", f"violations={self.violations}"]
        parts.append(f"witness={'-' if self.witness is None else self.witness}")
        parts += [f"{k}={v}" for k, v in self.details.items()]
        return " ".join(parts)


def _first_primes(count: int) -> np.ndarray:
    engine = get_engine()
    try:
        engine.nth_prime(count)
    except UnsupportedRangeError as exc:
        raise ResourceLimitError(str(exc)) from None
    return engine.table.primes[:count]


def check_bertrand(max_n: int) -> CheckReport:
    """p_{n+1} <= 2 p_n - 1 and ln(p_{n+2} / p_n) < 2 for n = 1..max_n."""
    if max_n < 1:
        raise DomainError("max_n must be >= 1")
    t0 = time.perf_counter()
    p = _first_primes(max_n + 2)
    report = CheckReport("bertrand", (1, max_n))
    # index j holds p_{j+1}
    bad_step = np.flatnonzero(p[1 : max_n + 1] > 2 * p[:max_n] - 1)
    bad_gap = np.flatnonzero(np.log(p[2 : max_n + 2] / p[:max_n]) >= 2.0)
    for j in sorted(set(bad_step.tolist()) | set(bad_gap.tolist())):
        report.flag(j + 1)
    report.details["step_violations"] = len(bad_step)
    report.details["log_gap_violations"] = len(bad_gap)
    report.elapsed = time.perf_counter() - t0
    return report


def _suzuki_scan(m: int, scan_limit: int) -> tuple[int, list[int]]:
    """(threshold N, n in [N, limit] where the log form fails)."""
    if m < 1 or scan_limit < 1:
        raise DomainError("m and scan_limit must be >= 1")
    engine = get_engine()
    holds = [engine.nth_prime(n + 1) ** m < primorial(n) for n in range(1, scan_limit + 1)]
    if not holds[-1]:
        raise ThresholdNotFoundError(f"p_(n+1)^{m} < #(n) fails at n = {scan_limit}")
    n0 = scan_limit
    while n0 > 1 and holds[n0 - 2]:
        n0 -= 1
    log_failures = [
        n
        for n in range(n0, scan_limit + 1)
        if not m * ln_natural(engine.nth_prime(n + 1)) < ln_natural(primorial(n))
    ]
    return n0, log_failures


def suzuki_threshold(m: int, scan_limit: int = 100) -> int:
    """Smallest N with p_{n+1}**m < #(n) for every n in [N, scan_limit].

    This is an empirical threshold: the tail beyond ``scan_limit`` is not
    examined.
    """
    return _suzuki_scan(m, scan_limit)[0]


def check_suzuki(m: int, scan_limit: int = 100) -> CheckReport:
    """Threshold scan plus the log form ln p_{n+1} / ln #(n) < 1/m on [N, scan_limit]."""
    t0 = time.perf_counter()
    n0, failures = _suzuki_scan(m, scan_limit)
    report = CheckReport(f"suzuki(m={m})", (n0, scan_limit))
    for n in failures:
        report.flag(n)
    report.details["empirical_threshold"] = n0
    report.elapsed = time.perf_counter() - t0
    return report


def mertens_ratio(x: int) -> float:
    """prod_{p <= x} p / (p - 1) divided by e**gamma * ln x.

    The product is accumulated as an exactly rounded sum of -log1p(-1/p).
    """
    if x < 2:
        raise DomainError("mertens_ratio needs x >= 2")
    engine = get_engine()
    cfg = engine.config
    if x <= cfg.table_limit:
        chunks = [engine.primes_upto(x)]
    elif x <= cfg.sieve_threshold:
        chunks = iter_prime_segments(2, x, cfg.segment_size)
    else:
        raise ResourceLimitError(f"x = {x} exceeds sieve_threshold {cfg.sieve_threshold}")
    partial = [math.fsum(-np.log1p(-1.0 / c.astype(np.float64))) for c in chunks]
    return math.exp(math.fsum(partial)) / (EXP_GAMMA * ln_natural(x))


def check_mertens(x: int, tolerance: float = 0.01) -> CheckReport:
    t0 = time.perf_counter()
    ratio = mertens_ratio(x)
    report = CheckReport("mertens", (2, x))
    if not abs(ratio - 1) < tolerance:
        report.flag(x)
    report.details["ratio"] = f"{ratio:.12g}"
    report.elapsed = time.perf_counter() - t0
    return report


def squeeze_violations(x: int, rng: random.Random | None = None) -> list[str]:
    """Names of the bracket conditions that fail at x, decided exactly.

    Covers both log families (including ln x itself and the parametric
    variant at a = 1, a = upper bound and a random rational between them)
    and f(x) <= x / tot*(x) < g(x).
    """
    rng = rng or random.Random(x)
    bad: list[str] = []

    def between(tag: str, lo: Fraction, value: Fraction, hi: Fraction) -> None:
        if not lo <= value <= hi:
            bad.append(tag)

    for family, names, argument in (
        ("prime", PRIME_NAMES, prime_family_argument),
        ("primorial", PRIMORIAL_NAMES, primorial_family_argument),
    ):
        lo = argument(x, "minus")
        hi = argument(x, "plus")
        between(f"{family}.ln", lo, Fraction(x), hi)
        a_lo, a_hi = parametric_bounds(x, family)
        a_mid = a_lo + (a_hi - a_lo) * Fraction(rng.randrange(1, 1000), 1000)
        for name in names:
            if name == "parametric":
                for a in (a_lo, a_mid, a_hi):
                    between(f"{family}.parametric", lo, argument(x, name, a), hi)
            else:
                between(f"{family}.{name}", lo, argument(x, name), hi)

    f, g = mertens_fractions(x)
    fc = x / tot_star(x)
    if not f <= fc < g:
        bad.append("f<=x/tot*<g")
    return bad


def check_squeeze_brackets(samples: int, x_max: int, seed: int = 0) -> CheckReport:
    """Bracket checks at x_max itself plus ``samples - 1`` uniform draws from [3, x_max]."""
    if samples < 1:
        raise DomainError("samples must be >= 1")
    if x_max < 3:
        raise DomainError("x_max must be >= 3")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    xs = [x_max] + [rng.randint(3, x_max) for _ in range(samples - 1)]
    report = CheckReport("squeeze", (3, x_max))
    failed: dict[str, int] = {}
    for x in xs:
        bad = squeeze_violations(x, rng)
        if bad:
            report.flag(x)
            for tag in bad:
                failed[tag] = failed.get(tag, 0) + 1
    report.details["samples"] = samples
    if failed:
        report.details["failed"] = ",".join(sorted(failed))
    report.elapsed = time.perf_counter() - t0
    return report
