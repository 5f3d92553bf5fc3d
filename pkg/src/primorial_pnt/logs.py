"""Two families of functions asymptotic to ln(x).

Every variant has the form ln(A) where A is an exact rational built from
the prime or primorial representation of x. ``*_argument`` returns A;
``eval_*`` returns ln(A). Comparing arguments gives exact answers to
ordering questions that the float values can only settle to ~1e-16.

Prime family, with p_- < p <= x < q consecutive primes and
r = (x - p) / (q - p):

    minus        ln p_-
    plus         ln q
    star_center  ln p
    star_blend   ln p_- + ln(1 + (p / p_- - 1) r)
    parametric   ln p_- + ln a,   1 <= a <= q / p_-

Primorial family, with #(n) <= x < #(n+1) and r = (x - #(n)) / (#(n+1) - #(n)):

    minus        ln #(n-1)
    plus         ln #(n+1)
    hash_center  ln #(n)
    star_blend   ln #(n-1) + ln(1 + (p_n - 1) r)
    diamond      ln #(n-1) + ln(n + r)
    parametric   ln #(n-1) + ln a,   1 <= a <= p_n p_{n+1}
"""

from __future__ import annotations

import enum
from functools import lru_cache
from fractions import Fraction
from typing import Literal

from .errors import DomainError
from .exactnum import RatioLike, ln_ratio
from .primes import get_engine
from .primorial import primorial
from .representation import decompose

Family = Literal["prime", "primorial"]


class LogVariant(enum.Enum):
    PRIME_MINUS = ("prime", "minus")
    PRIME_PLUS = ("prime", "plus")
    PRIME_STAR_CENTER = ("prime", "star_center")
    PRIME_STAR_BLEND = ("prime", "star_blend")
    PRIME_PARAMETRIC = ("prime", "parametric")
    PRIMORIAL_MINUS = ("primorial", "minus")
    PRIMORIAL_PLUS = ("primorial", "plus")
    PRIMORIAL_HASH_CENTER = ("primorial", "hash_center")
    PRIMORIAL_STAR_BLEND = ("primorial", "star_blend")
    PRIMORIAL_DIAMOND = ("primorial", "diamond")
    PRIMORIAL_PARAMETRIC = ("primorial", "parametric")

    @property
    def family(self) -> Family:
        return self.value[0]

    @property
    def label(self) -> str:
        return self.value[1]

    def __str__(self) -> str:
        return f"{self.value[0]}.{self.value[1]}"

    @classmethod
    def lookup(cls, family: str, name: str) -> LogVariant:
        try:
            return cls((family, name))
        except ValueError:
            raise DomainError(f"no variant {name!r} in the {family} family") from None

    @classmethod
    def of_family(cls, family: str) -> list[LogVariant]:
        return [v for v in cls if v.family == family]


PRIME_NAMES = tuple(v.label for v in LogVariant.of_family("prime"))
PRIMORIAL_NAMES = tuple(v.label for v in LogVariant.of_family("primorial"))


@lru_cache(maxsize=4096)
def _prime_neighbors(x: int) -> tuple[int | None, int, int, Fraction]:
    rep = decompose(x, "prime")
    pm = get_engine().prev_prime_before(rep.a_n) if rep.a_n > 2 else None
    return pm, rep.a_n, rep.a_next, rep.r


def _prime_context(x: int, need_predecessor: bool) -> tuple[int | None, int, int, Fraction]:
    context = _prime_neighbors(x)
    if need_predecessor and context[0] is None:
        raise DomainError(f"x = {x}: no prime precedes p = 2")
    return context


def parametric_bounds(x: int, family: Family) -> tuple[Fraction, Fraction]:
    """Admissible range [1, upper] for a(x) in the parametric variant."""
    if family == "prime":
        pm, _, q, _ = _prime_context(x, need_predecessor=True)
        return Fraction(1), Fraction(q, pm)
    if family == "primorial":
        rep = decompose(x, "primorial")
        engine = get_engine()
        return Fraction(1), Fraction(engine.nth_prime(rep.n) * engine.nth_prime(rep.n + 1))
    raise DomainError(f"unknown family {family!r}")


def _checked_a(a: RatioLike | None, lower: Fraction, upper: Fraction) -> Fraction:
    if a is None:
        raise DomainError("the parametric variant needs a value for a(x)")
    a = Fraction(a)
    if not lower <= a <= upper:
        raise DomainError(f"a(x) = {a} outside [{lower}, {upper}]")
    return a


def prime_family_argument(x: int, name: str, a: RatioLike | None = None) -> Fraction:
    LogVariant.lookup("prime", name)
    needs_pm = name in ("minus", "star_blend", "parametric")
    pm, p, q, r = _prime_context(x, need_predecessor=needs_pm)
    if name == "plus":
        return Fraction(q)
    if name == "star_center":
        return Fraction(p)
    if name == "minus":
        return Fraction(pm)
    if name == "star_blend":
        return pm * (1 + (Fraction(p, pm) - 1) * r)
    return pm * _checked_a(a, Fraction(1), Fraction(q, pm))


def primorial_family_argument(x: int, name: str, a: RatioLike | None = None) -> Fraction:
    LogVariant.lookup("primorial", name)
    rep = decompose(x, "primorial")
    n, r = rep.n, rep.r
    if name == "plus":
        return Fraction(rep.a_next)
    if name == "hash_center":
        return Fraction(rep.a_n)
    below = primorial(n - 1)
    if name == "minus":
        return Fraction(below)
    engine = get_engine()
    p_n = engine.nth_prime(n)
    if name == "star_blend":
        return below * (1 + (p_n - 1) * r)
    if name == "diamond":
        return below * (n + r)
    upper = Fraction(p_n * engine.nth_prime(n + 1))
    return below * _checked_a(a, Fraction(1), upper)


def family_argument(x: int, variant: LogVariant, a: RatioLike | None = None) -> Fraction:
    if variant.family == "prime":
        return prime_family_argument(x, variant.label, a)
    return primorial_family_argument(x, variant.label, a)


def eval_prime_family(x: int, name: str, a: RatioLike | None = None) -> float:
    return ln_ratio(prime_family_argument(x, name, a))


def eval_primorial_family(x: int, name: str, a: RatioLike | None = None) -> float:
    return ln_ratio(primorial_family_argument(x, name, a))


def evaluate(x: int, variant: LogVariant, a: RatioLike | None = None) -> float:
    return ln_ratio(family_argument(x, variant, a))


def all_variants(
    x: int, a_prime: RatioLike | None = 1, a_primorial: RatioLike | None = 1
) -> dict[LogVariant, float]:
    """Values of all eleven variants at x (prime family needs x >= 3)."""
    out = {}
    for v in LogVariant:
        a = a_prime if v.family == "prime" else a_primorial
        out[v] = evaluate(x, v, a)
    return out
