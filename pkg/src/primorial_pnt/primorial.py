"""Primorials, the totient of a primorial, and n-totatives.

The n-totatives are the members of {2, ..., #(n) + 1} coprime to #(n): the
residues 0 and 1 of Z_#(n) are replaced by #(n) and #(n) + 1.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache

import numpy as np

from .errors import DomainError, ResourceLimitError
from .primes import get_engine


_PRIMORIALS = [1]
_PRIMORIALS_LOCK = threading.Lock()


def primorial(n: int) -> int:
    """#(n) = p_1 * ... * p_n, with #(0) = 1."""
    if n < 0:
        raise DomainError(f"primorial index must be >= 0, got {n}")
    cache = _PRIMORIALS
    if n >= len(cache):
        engine = get_engine()
        with _PRIMORIALS_LOCK:
            value = cache[-1]
            for i in range(len(cache), n + 1):
                value *= engine.nth_prime(i)
                cache.append(value)
    return cache[n]


def primorial_index(x: int) -> int:
    """n'(x): the n >= 1 with #(n) <= x < #(n + 1); galloping then bisection."""
    if x < 2:
        raise DomainError(f"primorial representation needs x >= 2, got {x}")
    hi = 2
    while primorial(hi) <= x:
        hi *= 2
    lo = hi // 2  # #(lo) <= x < #(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if primorial(mid) <= x:
            lo = mid
        else:
            hi = mid
    return lo


@lru_cache(maxsize=None)
def totient_of_primorial(n: int) -> int:
    """phi(#(n)) = prod (p_i - 1), straight from the prime table."""
    if n < 1:
        raise DomainError(f"totient_of_primorial needs n >= 1, got {n}")
    engine = get_engine()
    return math.prod(engine.nth_prime(i) - 1 for i in range(1, n + 1))


def totative_count(n: int) -> int:
    """Number of n-totatives; equals phi(#(n)) because #(n) + 1 is coprime to #(n)."""
    return totient_of_primorial(n)


def enumerate_totatives(n: int, bound: int | None = None) -> list[int]:
    """The n-totatives in ascending order.

    Enumeration costs O(#(n)) memory, so it refuses when #(n) exceeds
    ``bound`` (default: the engine's ``totative_enumeration_bound``).
    """
    if n < 1:
        raise DomainError(f"enumerate_totatives needs n >= 1, got {n}")
    engine = get_engine()
    if bound is None:
        bound = engine.config.totative_enumeration_bound
    modulus = primorial(n)
    if modulus > bound:
        raise ResourceLimitError(f"#({n}) = {modulus} exceeds the enumeration bound {bound}")
    # keep[k] <-> the integer k + 2, k = 0 .. #(n) - 1
    keep = np.ones(modulus, dtype=bool)
    for i in range(1, n + 1):
        p = engine.nth_prime(i)
        keep[(-2) % p :: p] = False
    return (np.flatnonzero(keep) + 2).tolist()


def in_primorial_set(m: int, n: int) -> bool:
    """Whether m lies in {2, ..., #(n) + 1}."""
    return 2 <= m <= primorial(n) + 1
