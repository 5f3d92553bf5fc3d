"""Reproduction of the pi(x) ratio tables at x = 10**k, k = 1..25.

Five ratio columns are available, each pi(x) divided by an approximation
of pi(x):

    x_over_ln             x / ln x
    x_over_log_star       x / log_*(x)      (star_blend of the chosen family)
    x_over_log_diamond    x / log_<>(x)     (primorial diamond; no prime analogue)
    hcirc_over_ln_hcirc   h°(x) / ln h°(x)
    x_over_ln_hcirc       x / ln h°(x)

Published values are embedded for comparison. Only the first column is
expected to match them; the deviation report shows the rest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .estimator import EXP_GAMMA, estimator_bundle
from .exactnum import ln_natural, ln_ratio
from .logs import Family, primorial_family_argument, prime_family_argument
from .primes import CountMethod, get_engine

COLUMNS = (
    "x_over_ln",
    "x_over_log_star",
    "x_over_log_diamond",
    "hcirc_over_ln_hcirc",
    "x_over_ln_hcirc",
)

COLUMN_LABELS = {
    "x_over_ln": "x/log(x)",
    "x_over_log_star": "x/log_*(x)",
    "x_over_log_diamond": "x/log_<>(x)",
    "hcirc_over_ln_hcirc": "h°(x)/log(h°(x))",
    "x_over_ln_hcirc": "x/log(h°(x))",
}

EXPONENTS = range(1, 26)

# Published pi(x) / (x / log x), k = 1..25.
TABLE1_RATIOS = dict(zip(EXPONENTS, (
    0.921, 1.151, 1.161, 1.132, 1.104, 1.084, 1.071, 1.061, 1.054, 1.048,
    1.043, 1.039, 1.036, 1.033, 1.031, 1.029, 1.027, 1.025, 1.024, 1.023,
    1.022, 1.021, 1.020, 1.019, 1.018,
)))

# Published five-column ratios, k = 1..25, in COLUMNS order.
TABLE2_RATIOS = dict(zip(EXPONENTS, (
    (0.921, 0.392, 0.702, 1.101, 0.787),
    (1.151, 0.683, 0.988, 1.327, 1.106),
    (1.161, 0.770, 1.018, 1.305, 1.137),
    (1.132, 0.820, 1.025, 1.236, 1.119),
    (1.104, 0.840, 1.014, 1.227, 1.093),
    (1.084, 0.858, 1.011, 1.180, 1.077),
    (1.071, 0.875, 1.013, 1.186, 1.064),
    (1.061, 0.881, 1.004, 1.145, 1.057),
    (1.054, 0.885, 0.997, 1.137, 1.050),
    (1.048, 0.893, 0.998, 1.103, 1.045),
    (1.043, 0.902, 0.998, 1.089, 1.041),
    (1.039, 0.905, 0.995, 1.102, 1.037),
    (1.036, 0.910, 0.996, 1.081, 1.034),
    (1.033, 0.914, 0.995, 1.069, 1.032),
    (1.031, 0.919, 0.996, 1.072, 1.030),
    (1.029, 0.924, 0.997, 1.061, 1.028),
    (1.027, 0.926, 0.996, 1.077, 1.026),
    (1.025, 0.929, 0.996, 1.076, 1.024),
    (1.024, 0.931, 0.995, 1.065, 1.023),
    (1.023, 0.933, 0.995, 1.061, 1.022),
    (1.022, 0.935, 0.995, 1.046, 1.021),
    (1.021, 0.938, 0.995, 1.049, 1.020),
    (1.020, 0.940, 0.996, 1.042, 1.019),
    (1.019, 0.941, 0.995, 1.054, 1.018),
    (1.018, 0.943, 0.996, 1.048, 1.017),
)))

DEVIATION_TOLERANCE = 0.001


@dataclass
class TableRow:
    exponent: int
    x: int
    pi_x: int
    ratios: dict[str, float] = field(default_factory=dict)


def round3(value: float) -> str:
    """Three decimals, ties away from zero."""
    return str(Decimal(repr(value)).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


def parse_columns(selection: str | Iterable[str]) -> list[str]:
    if isinstance(selection, str):
        if selection.strip() == "all":
            return list(COLUMNS)
        selection = [c for c in selection.split(",") if c.strip()]
    cols = [c.strip() for c in selection]
    unknown = [c for c in cols if c not in COLUMNS]
    if unknown:
        raise DomainError(f"unknown column(s): {', '.join(unknown)}")
    return cols


def parse_rows(selection: str) -> list[int]:
    """``"1..25"``, ``"3"`` or ``"1,3,5"`` -> exponents."""
    out: list[int] = []
    try:
        for part in selection.split(","):
            if ".." in part:
                lo, hi = part.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise DomainError(f"bad row range {selection!r}") from None
    return out


def compute_row(
    k: int,
    columns: Sequence[str] = COLUMNS,
    family: Family = "primorial",
    method: CountMethod = "auto",
) -> TableRow:
    if k not in TABLE1_RATIOS:
        raise DomainError(f"exponent {k} outside 1..25")
    if family not in ("prime", "primorial"):
        raise DomainError(f"unknown family {family!r}")
    x = 10**k
    pi_x = get_engine().count_primes(x, method)
    pi_over_x = float(Fraction(pi_x, x))
    row = TableRow(k, x, pi_x)
    bundle = None
    for col in columns:
        if col == "x_over_ln":
            value = pi_over_x * ln_natural(x)
        elif col == "x_over_log_star":
            argument = prime_family_argument if family == "prime" else primorial_family_argument
            value = pi_over_x * ln_ratio(argument(x, "star_blend"))
        elif col == "x_over_log_diamond":
            value = pi_over_x * ln_ratio(primorial_family_argument(x, "diamond"))
        else:
            bundle = bundle or estimator_bundle(x)
            if col == "hcirc_over_ln_hcirc":
                value = float(pi_x / bundle.tot_star) / (EXP_GAMMA * ln_ratio(bundle.y_val)) * bundle.ln_h_circ
            else:
                value = pi_over_x * bundle.ln_h_circ
        row.ratios[col] = value
    return row


def build_table(
    exponents: Iterable[int] = EXPONENTS,
    columns: Sequence[str] = COLUMNS,
    family: Family = "primorial",
    method: CountMethod = "auto",
) -> list[TableRow]:
    exponents = list(exponents)
    bad = [k for k in exponents if k not in TABLE1_RATIOS]
    if bad:
        raise DomainError(f"exponents outside 1..25: {bad}")
    columns = parse_columns(columns)
    return [compute_row(k, columns, family, method) for k in exponents]


def render(rows: Sequence[TableRow], columns: Sequence[str], fmt: str = "csv") -> str:
    columns = list(columns)
    if fmt == "csv":
        lines = [",".join(["x", "pi", *columns])]
        if columns:
            for row in rows:
                cells = [f"1e{row.exponent}", str(row.pi_x)]
                cells += [round3(row.ratios[c]) for c in columns]
                lines.append(",".join(cells))
        return "\n".join(lines) + "\n"
    if fmt in ("md", "markdown"):
        header = ["x", "pi(x)", *(f"pi(x)/({COLUMN_LABELS[c]})" for c in columns)]
        lines = ["| " + " | ".join(header) + " |", "|" + "---:|" * len(header)]
        if columns:
            for row in rows:
                cells = [f"10^{row.exponent}", str(row.pi_x)]
                cells += [round3(row.ratios[c]) for c in columns]
                lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown format {fmt!r}")


@dataclass(frozen=True)
class Deviation:
    exponent: int
    column: str
    computed: float
    published: float

    @property
    def delta(self) -> float:
        return self.computed - self.published

    @property
    def within_tolerance(self) -> bool:
        return abs(self.delta) <= DEVIATION_TOLERANCE


def deviations(rows: Sequence[TableRow]) -> list[Deviation]:
    out = []
    for row in rows:
        published = TABLE2_RATIOS[row.exponent]
        for col, value in row.ratios.items():
            out.append(Deviation(row.exponent, col, value, published[COLUMNS.index(col)]))
    return out


def deviation_report(
    columns: Sequence[str] = COLUMNS,
    family: Family = "primorial",
    rows: Sequence[TableRow] | None = None,
) -> str:
    """CSV of computed vs published ratios; ``flag`` is ``offset`` beyond 0.001."""
    columns = parse_columns(columns)
    if rows is None:
        rows = build_table(EXPONENTS, columns, family)
    lines = ["k,column,computed,published,delta,flag"]
    for d in deviations(rows):
        if d.column not in columns:
            continue
        flag = "ok" if d.within_tolerance else "offset"
        lines.append(
            f"{d.exponent},{d.column},{d.computed:.6f},{d.published:.3f},{d.delta:+.6f},{flag}"
        )
    return "\n".join(lines) + "\n"


def trend_improves(rows: Sequence[TableRow], column: str, k_early: int = 3, k_late: int = 12) -> bool:
    """|ratio - 1| strictly smaller at 10**k_late than at 10**k_early."""
    by_k = {row.exponent: row.ratios[column] for row in rows}
    return abs(by_k[k_late] - 1) < abs(by_k[k_early] - 1)
