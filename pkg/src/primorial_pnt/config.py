"""Runtime configuration with environment-variable fallbacks."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, fields

from .errors import DomainError

ENV_PREFIX = "PNT_"
_NATURAL_RE = re.compile(r"(\d+)(?:e\+?(\d+))?|(\d+)\*\*(\d+)")


@dataclass(frozen=True)
class Config:
    """Tunable thresholds for the prime engine and totative enumeration.

    ``table_limit`` caps how far the shared in-memory prime table may grow.
    Prime indexes (and sieve-backed neighbor lookups) are only available
    up to that value.
    """

    sieve_threshold: int = 10**9
    combinatorial_threshold: int = 10**12
    segment_size: int = 1 << 23
    totative_enumeration_bound: int = 10**8
    table_limit: int = 10**8

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise DomainError(f"{f.name} must be positive")
        if self.sieve_threshold > self.combinatorial_threshold:
            raise DomainError("sieve_threshold must not exceed combinatorial_threshold")

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None, **overrides: int | None) -> Config:
        """Build a config from ``PNT_<KEY>`` variables; non-None overrides win."""
        environ = os.environ if environ is None else environ
        values: dict[str, int] = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                values[f.name] = parse_natural(raw)
        for key, value in overrides.items():
            if value is not None:
                values[key] = value
        return cls(**values)


def parse_natural(text: str) -> int:
    """Parse ``"12345"``, ``"1e9"`` or ``"10**9"`` into an exact int.

    >>> parse_natural("1e6")
    1000000
    """
    m = _NATURAL_RE.fullmatch(text.strip().replace("_", "").lower())
    if m is None:
        raise DomainError(f"not a natural number: {text!r}")
    digits, sci_exp, base, pow_exp = m.groups()
    if base is not None:
        return int(base) ** int(pow_exp)
    return int(digits) * 10 ** int(sci_exp or 0)
