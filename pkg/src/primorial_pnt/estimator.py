"""Totative-count estimator tot*(x) and the Mertens-product chain around it.

With n = n'(x) and r = r'(x) from the primorial representation:

    tot*(x) = tot(n) * (1 + (p_{n+1} - 2) r)
    f(x)    = prod_{i <= n}   p_i / (p_i - 1)
    g(x)    = prod_{i <= n+1} p_i / (p_i - 1)
    y(x)    = p_n + (p_{n+1} - p_n) r
    f°(x)   = x / tot*(x)
    g°(x)   = e**gamma * ln y(x)
    h°(x)   = tot*(x) * e**gamma * ln y(x)

f <= f° < g, f° and g° are asymptotically equal, hence h°(x) ~ x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import ln_ratio
from .primes import get_engine
from .primorial import totative_count
from .representation import decompose

EULER_GAMMA = 0.577215664901533
EXP_GAMMA = math.exp(EULER_GAMMA)


def tot_star(x: int) -> Fraction:
    rep = decompose(x, "primorial")
    p_next = get_engine().nth_prime(rep.n + 1)
    return totative_count(rep.n) * (1 + (p_next - 2) * rep.r)


def mertens_fractions(x: int) -> tuple[Fraction, Fraction]:
    """(f(x), g(x)) as exact rationals."""
    n = decompose(x, "primorial").n
    engine = get_engine()
    f = Fraction(1)
    for i in range(1, n + 1):
        p = engine.nth_prime(i)
        f *= Fraction(p, p - 1)
    p = engine.nth_prime(n + 1)
    return f, f * Fraction(p, p - 1)


def mertens_products(x: int) -> tuple[float, float]:
    f, g = mertens_fractions(x)
    return float(f), float(g)


def y_of_x(x: int) -> Fraction:
    """Primes p_n, p_{n+1} blended with the primorial position r'(x)."""
    rep = decompose(x, "primorial")
    engine = get_engine()
    p, q = engine.nth_prime(rep.n), engine.nth_prime(rep.n + 1)
    return p * (1 + (Fraction(q, p) - 1) * rep.r)


@dataclass(frozen=True)
class EstimatorBundle:
    x: int
    t_star: Fraction
    tot_star: Fraction
    y_val: Fraction
    f_val: float
    g_val: float
    f_circ: float
    g_circ: float
    h_circ: float
    ln_h_circ: float

    def as_dict(self) -> dict[str, object]:
        return {
            "x": self.x,
            "t_star": self.t_star,
            "tot_star": self.tot_star,
            "y": self.y_val,
            "f": self.f_val,
            "g": self.g_val,
            "f_circ": self.f_circ,
            "g_circ": self.g_circ,
            "h_circ": self.h_circ,
            "ln_h_circ": self.ln_h_circ,
        }


def estimator_bundle(x: int) -> EstimatorBundle:
    rep = decompose(x, "primorial")
    engine = get_engine()
    n, r = rep.n, rep.r
    p, q = engine.nth_prime(n), engine.nth_prime(n + 1)
    t = 1 + (q - 2) * r
    tot = totative_count(n) * t
    y = p * (1 + (Fraction(q, p) - 1) * r)
    f, g = mertens_fractions(x)
    ln_y = ln_ratio(y)
    # ln h° summed from its factors rather than taken of the rounded h°
    ln_h = ln_ratio(tot) + EULER_GAMMA + math.log(ln_y)
    return EstimatorBundle(
        x=x,
        t_star=t,
        tot_star=tot,
        y_val=y,
        f_val=float(f),
        g_val=float(g),
        f_circ=float(x / tot),
        g_circ=EXP_GAMMA * ln_y,
        h_circ=float(tot) * EXP_GAMMA * ln_y,
        ln_h_circ=ln_h,
    )
