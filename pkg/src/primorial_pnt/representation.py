"""Multiplicative representation of an integer over an increasing succession.

For a succession a_1 < a_2 < ... and x >= a_1, ``decompose`` finds n with
a_n <= x < a_{n+1}, the position r = (x - a_n) / (a_{n+1} - a_n) in [0, 1)
and the factor s = 1 + (a_{n+1} / a_n - 1) * r, so that x == a_n * s exactly.
``compose`` is the inverse map (n, r) -> a_n * s(n, r).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

from .errors import DomainError
from .exactnum import RatioLike, format_ratio
from .primes import get_engine
from .primorial import primorial, primorial_index

Kind = Literal["prime", "primorial"]


@dataclass(frozen=True)
class Representation:
    """x = a_n * s with a_n <= x < a_next.

    ``n`` is None for the prime succession when x lies beyond the prime
    table limit: the neighboring primes are known, their index is not.
    """

    x: int
    kind: Kind
    n: int | None
    a_n: int
    a_next: int
    r: Fraction
    s: Fraction

    def record(self) -> str:
        n = "?" if self.n is None else str(self.n)
        return f"n={n} a_n={self.a_n} a_next={self.a_next} r={format_ratio(self.r)} s={format_ratio(self.s)}"


class Succession:
    kind: Kind
    first: int

    def element(self, n: int) -> int:
        raise NotImplementedError

    def locate(self, x: int) -> tuple[int | None, int, int]:
        """(n, a_n, a_{n+1}) bracketing x."""
        raise NotImplementedError


class PrimeSuccession(Succession):
    kind: Kind = "prime"
    first = 2

    def element(self, n: int) -> int:
        return get_engine().nth_prime(n)

    def locate(self, x: int) -> tuple[int | None, int, int]:
        engine = get_engine()
        p, q = engine.neighbor_primes(x)
        return engine.prime_index(p), p, q


class PrimorialSuccession(Succession):
    kind: Kind = "primorial"
    first = 2

    def element(self, n: int) -> int:
        if n < 1:
            raise DomainError(f"succession index must be >= 1, got {n}")
        return primorial(n)

    def locate(self, x: int) -> tuple[int | None, int, int]:
        n = primorial_index(x)
        return n, primorial(n), primorial(n + 1)


PRIMES = PrimeSuccession()
PRIMORIALS = PrimorialSuccession()


def succession(kind: Kind | Succession) -> Succession:
    if isinstance(kind, Succession):
        return kind
    if kind == "prime":
        return PRIMES
    if kind == "primorial":
        return PRIMORIALS
    raise DomainError(f"unknown succession {kind!r}")


def multiplicative_fraction(a_n: int, a_next: int, r: RatioLike) -> Fraction:
    """s(n, r) = 1 + (a_next / a_n - 1) * r."""
    return 1 + (Fraction(a_next, a_n) - 1) * r


def decompose(x: int, succ: Kind | Succession = "primorial") -> Representation:
    succ = succession(succ)
    if not isinstance(x, int) or isinstance(x, bool):
        raise DomainError(f"only integer inputs are supported, got {x!r}")
    if x < succ.first:
        raise DomainError(f"x = {x} lies below the first element {succ.first}")
    n, a_n, a_next = succ.locate(x)
    r = Fraction(x - a_n, a_next - a_n)
    return Representation(x, succ.kind, n, a_n, a_next, r, multiplicative_fraction(a_n, a_next, r))


def compose(n: int, r: RatioLike, succ: Kind | Succession = "primorial") -> Union[int, Fraction]:
    """y(n, r) = a_n * s(n, r) = a_{n+1} * r + a_n * (1 - r).

    Returns an int when the result is integral.
    """
    succ = succession(succ)
    r = Fraction(r)
    if not 0 <= r < 1:
        raise DomainError(f"r must lie in [0, 1), got {r}")
    if n < 1:
        raise DomainError(f"succession index must be >= 1, got {n}")
    a_n, a_next = succ.element(n), succ.element(n + 1)
    y = a_next * r + a_n * (1 - r)
    return y.numerator if y.denominator == 1 else y
