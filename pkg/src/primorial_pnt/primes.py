"""Prime generation, primality testing, neighbor search and exact pi(x).

Two exact counters are provided: a segmented odd-only sieve (memory bounded
by the segment size) and a Lucy_Hedgehog style prime-sum recursion, which
runs in roughly x**(3/4) vectorised steps. Above the combinatorial threshold
the published values of pi(10**k) are used as checkpoints.
"""

from __future__ import annotations

import bisect
import math
import threading
from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

from .config import Config
from .errors import DomainError, UnsupportedRangeError

CountMethod = Literal["sieve", "combinatorial", "checkpoint", "auto"]

# pi(10**k) for k = 1..25, as tabulated alongside the PNT ratio column.
PI_CHECKPOINTS: dict[int, int] = {
    1: 4,
    2: 25,
    3: 168,
    4: 1229,
    5: 9592,
    6: 78498,
    7: 664579,
    8: 5761455,
    9: 50847534,
    10: 455052511,
    11: 4118054813,
    12: 37607912018,
    13: 346065536839,
    14: 3204941750802,
    15: 29844570422669,
    16: 279238341033925,
    17: 2623557157654233,
    18: 24739954287740860,
    19: 234047667276344607,
    20: 2220819602560918840,
    21: 21127269486018731928,
    22: 201467286689315906290,
    23: 1925320391606803968923,
    24: 18435599767349200867866,
    25: 176846309399143769411680,
}

# Below this, auto counting just sieves in one segment.
_AUTO_SIEVE_CUTOFF = 10**6


def small_primes(limit: int) -> np.ndarray:
    """All primes <= limit with a plain in-memory sieve (limit ~ 10**7 at most)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    is_prime[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_prime[p]:
            is_prime[p * p :: 2 * p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def iter_prime_segments(lo: int, hi: int, segment_size: int = 1 << 23) -> Iterator[np.ndarray]:
    """Yield arrays of the primes in [lo, hi], one array per segment.

    Only odd numbers are stored, so each segment uses ``segment_size // 2``
    bytes regardless of ``hi``.
    """
    lo = max(lo, 2)
    if hi < lo:
        return
    if lo == 2:
        yield np.array([2], dtype=np.int64)
        lo = 3
    base = small_primes(math.isqrt(hi))[1:]  # odd base primes
    span = max(2, segment_size - segment_size % 2)
    start = lo | 1
    while start <= hi:
        stop = min(start + span, hi + 1)  # exclusive
        n_odd = (stop - start + 1) // 2
        mask = np.ones(n_odd, dtype=bool)
        for p in base.tolist():
            pp = p * p
            if pp >= stop:
                break
            first = max(pp, -(-start // p) * p)
            if not first & 1:
                first += p
            if first < stop:
                mask[(first - start) // 2 :: p] = False
        if start == 1:
            mask[0] = False
        # odd base primes themselves are never marked (marking starts at p*p)
        yield start + 2 * np.flatnonzero(mask).astype(np.int64)
        start += span


@dataclass(frozen=True)
class PrimeTable:
    """Every prime <= bound, ascending, as a read-only int64 array."""

    primes: np.ndarray
    bound: int

    def __post_init__(self) -> None:
        self.primes.setflags(write=False)

    def __len__(self) -> int:
        return len(self.primes)

    def as_list(self) -> list[int]:
        return self.primes.tolist()


def sieve(bound: int, segment_size: int = 1 << 23) -> PrimeTable:
    """Primes <= bound via the segmented sieve."""
    if bound < 2:
        raise DomainError(f"no primes below {bound}; bound must be >= 2")
    parts = list(iter_prime_segments(2, bound, segment_size))
    return PrimeTable(np.concatenate(parts), bound)


def count_primes_sieve(x: int, segment_size: int = 1 << 23) -> int:
    return sum(len(seg) for seg in iter_prime_segments(2, x, segment_size))


def count_primes_lucy(x: int) -> int:
    """Exact pi(x) by the Lucy_Hedgehog recursion over the values x // i.

    ``small[v]`` tracks S(v) for v <= sqrt(x) and ``large[i]`` tracks
    S(x // i); S(v, p) counts integers in [2, v] with no prime factor below
    p, plus the primes below p. Each sieving prime updates all affected
    entries in one vectorised step, reading only values from the previous
    prime's round.
    """
    if x < 2:
        return 0
    if x >= 2**62:
        raise UnsupportedRangeError("combinatorial counter limited to x < 2**62")
    r = math.isqrt(x)
    small = np.arange(-1, r, dtype=np.int64)  # small[v] = v - 1
    small[0] = 0
    idx = np.arange(1, r + 1, dtype=np.int64)
    large = np.empty(r + 1, dtype=np.int64)
    large[1:] = x // idx - 1
    large[0] = 0
    for p in range(2, r + 1):
        if small[p] == small[p - 1]:
            continue  # p composite
        sp = small[p - 1]
        pp = p * p
        # large part: indices i with x // i >= p*p
        lim = min(r, x // pp)
        i = idx[:lim]
        ip = i * p
        inner = np.empty(lim, dtype=np.int64)
        direct = ip <= r
        inner[direct] = large[ip[direct]]
        inner[~direct] = small[x // ip[~direct]]
        large[1 : lim + 1] -= inner - sp
        # small part: v in [p*p, r]
        if pp <= r:
            v = np.arange(pp, r + 1, dtype=np.int64)
            small[pp : r + 1] -= small[v // p] - sp
    return int(large[1])


# Miller-Rabin with these bases is exact below 3.3e24 (Sorenson-Webster bound).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_TRIAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _strong_probable_prime(n: int, a: int) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    y = pow(a, d, n)
    if y == 1 or y == n - 1:
        return True
    for _ in range(s - 1):
        y = y * y % n
        if y == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while not a & 1:
            a >>= 1
            if n & 7 in (3, 5):
                result = -result
        a, n = n, a
        if a & 3 == 3 and n & 3 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    """Strong Lucas test with Selfridge's parameter choice (n odd, not a square)."""
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
    p, q = 1, (1 - d) // 4
    k = n + 1
    s = (k & -k).bit_length() - 1
    k >>= s
    # binary Lucas chain for U_k, V_k, Q^k
    u, v, qk = 0, 2, 1
    inv2 = (n + 1) // 2
    for bit in bin(k)[2:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * inv2 % n, (d * u + p * v) * inv2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    """Primality test: exact below 3.3e24, Baillie-PSW above.

    No Baillie-PSW pseudoprime is known, but above the deterministic limit
    the answer is formally probabilistic.
    """
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 97 * 97:
        return True
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    if not _strong_probable_prime(n, 2):
        return False
    if math.isqrt(n) ** 2 == n:
        return False
    return _strong_lucas_probable_prime(n)


def next_prime_after(x: int) -> int:
    """Smallest prime > x (scan with :func:`is_probable_prime`)."""
    if x < 2:
        return 2
    c = x + 1
    if c > 2 and not c & 1:
        c += 1
    while not is_probable_prime(c):
        c += 2
    return c


def prev_prime_at_most(x: int) -> int:
    """Largest prime <= x."""
    if x < 2:
        raise DomainError(f"no prime <= {x}")
    if x == 2:
        return 2
    c = x if x & 1 else x - 1
    while not is_probable_prime(c):
        c -= 2
    return c


def _nth_prime_upper_bound(n: int) -> int:
    if n < 6:
        return 13
    ln = math.log(n)
    return int(n * (ln + math.log(ln))) + 1


class PrimeEngine:
    """A shared prime table that grows on demand, plus counting and search.

    Readers see an immutable :class:`PrimeTable` snapshot; growth is
    serialised by a lock and swaps in a new snapshot.
    """

    def __init__(self, config: Config | None = None, initial_bound: int = 1 << 16):
        self.config = config or Config()
        self._lock = threading.Lock()
        self._table = sieve(initial_bound, self.config.segment_size)

    @property
    def table(self) -> PrimeTable:
        return self._table

    def ensure(self, bound: int) -> PrimeTable:
        """Grow the table to cover ``bound``; raises past ``table_limit``."""
        table = self._table
        if bound <= table.bound:
            return table
        limit = self.config.table_limit
        if bound > limit:
            raise UnsupportedRangeError(f"prime table limited to {limit}; {bound} requested")
        with self._lock:
            table = self._table
            if bound > table.bound:
                new_bound = min(limit, max(bound, 2 * table.bound))
                extra = list(iter_prime_segments(table.bound + 1, new_bound, self.config.segment_size))
                table = PrimeTable(np.concatenate([table.primes, *extra]), new_bound)
                self._table = table
        return table

    def primes_upto(self, bound: int) -> np.ndarray:
        table = self.ensure(bound)
        return table.primes[: np.searchsorted(table.primes, bound, side="right")]

    def nth_prime(self, n: int) -> int:
        """The n-th prime, 1-based (``nth_prime(1) == 2``)."""
        if n < 1:
            raise DomainError(f"prime index must be >= 1, got {n}")
        table = self._table
        if n > len(table):
            table = self.ensure(_nth_prime_upper_bound(n))
        return int(table.primes[n - 1])

    def prime_index(self, p: int) -> int | None:
        """pi(p) if p is within the table limit, else None."""
        if p > self.config.table_limit:
            return None
        table = self.ensure(p)
        return int(np.searchsorted(table.primes, p, side="right"))

    def neighbor_primes(self, x: int) -> tuple[int, int]:
        """(largest prime <= x, smallest prime > x)."""
        if x < 2:
            raise DomainError(f"neighbor primes need x >= 2, got {x}")
        table = self._table
        if x < int(table.primes[-1]):
            i = bisect.bisect_right(table.primes, x)
            return int(table.primes[i - 1]), int(table.primes[i])
        return prev_prime_at_most(x), next_prime_after(x)

    def prev_prime_before(self, p: int) -> int:
        """Largest prime strictly below the prime p."""
        if p == 2:
            raise DomainError("2 has no predecessor prime")
        if p < 2 or not is_probable_prime(p):
            raise DomainError(f"{p} is not prime")
        return self.neighbor_primes(p - 1)[0]

    def count_primes(self, x: int, method: CountMethod = "auto") -> int:
        """Exact pi(x).

        ``auto`` sieves tiny inputs, uses the combinatorial counter up to
        its threshold, then the sieve up to its threshold, then checkpoints.
        """
        if x < 2:
            raise DomainError(f"count_primes needs x >= 2, got {x}")
        cfg = self.config
        if method == "auto":
            if x <= _AUTO_SIEVE_CUTOFF:
                method = "sieve"
            elif x <= cfg.combinatorial_threshold:
                method = "combinatorial"
            elif x <= cfg.sieve_threshold:
                method = "sieve"
            else:
                method = "checkpoint"
        if method == "sieve":
            if x > cfg.sieve_threshold:
                raise UnsupportedRangeError(f"{x} exceeds sieve_threshold {cfg.sieve_threshold}")
            table = self._table
            if x <= table.bound:
                return int(np.searchsorted(table.primes, x, side="right"))
            return count_primes_sieve(x, cfg.segment_size)
        if method == "combinatorial":
            if x > cfg.combinatorial_threshold:
                raise UnsupportedRangeError(
                    f"{x} exceeds combinatorial_threshold {cfg.combinatorial_threshold}"
                )
            return count_primes_lucy(x)
        if method == "checkpoint":
            k = checkpoint_exponent(x)
            if k is None:
                raise UnsupportedRangeError(f"{x} is not 10**k with 1 <= k <= 25")
            return PI_CHECKPOINTS[k]
        raise DomainError(f"unknown counting method {method!r}")


def checkpoint_exponent(x: int) -> int | None:
    """k if x == 10**k for a tabulated k, else None."""
    s = str(x)
    if s[0] == "1" and s.count("0") == len(s) - 1:
        k = len(s) - 1
        if k in PI_CHECKPOINTS:
            return k
    return None


_default_engine: PrimeEngine | None = None
_default_lock = threading.Lock()


def get_engine() -> PrimeEngine:
    """Process-wide engine configured from the environment."""
    global _default_engine
    if _default_engine is None:
        with _default_lock:
            if _default_engine is None:
                _default_engine = PrimeEngine(Config.from_env())
    return _default_engine


def set_engine(engine: PrimeEngine | None) -> None:
    global _default_engine
    _default_engine = engine


def nth_prime(n: int) -> int:
    return get_engine().nth_prime(n)


def count_primes(x: int, method: CountMethod = "auto") -> int:
    return get_engine().count_primes(x, method)


def neighbor_primes(x: int) -> tuple[int, int]:
    return get_engine().neighbor_primes(x)


def prev_prime_before(p: int) -> int:
    return get_engine().prev_prime_before(p)
