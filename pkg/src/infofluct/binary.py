"""Closed forms for the binary source Ber(p) and its landmark constants.

``binary_fluctuation`` has maxima at ``p* = (1 -+ x*)/2`` where ``x*`` solves
``tanh(1/x) = x``, a jump of ``4/ln 2`` in its derivative at ``p = 1/2``, and
crosses ``binary_entropy`` at two points that delimit the low-variability
range of ``p``.
"""
from __future__ import annotations

import csv
import functools
import io
import math
from dataclasses import dataclass
from typing import List, Optional

from .errors import DomainError, SingularPointError
from .stats import solve_scalar_root

LN2 = math.log(2.0)


def _check_p(p: float) -> float:
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"p={p!r} outside [0, 1]")
    return float(p)


def binary_entropy(p: float) -> float:
    p = _check_p(p)
    q = 1.0 - p
    h = 0.0
    if p > 0.0:
        h -= p * math.log2(p)
    if q > 0.0:
        h -= q * math.log2(q)
    return h


def binary_fluctuation(p: float) -> float:
    """``sqrt(p q) * |log2 p - log2 q|``, zero at p in {0, 1/2, 1}."""
    p = _check_p(p)
    q = 1.0 - p
    if p == 0.0 or q == 0.0:
        return 0.0
    return math.sqrt(p * q) * abs(math.log2(q / p))


def binary_fluctuation_derivative(p: float) -> float:
    """Derivative of :func:`binary_fluctuation` with respect to ``p``.

    For ``p < 1/2`` it is ``(1 - 2p)/(2 sqrt(pq)) log2(q/p) - 1/(ln2 sqrt(pq))``;
    for ``p > 1/2`` it is the negated value at ``1 - p``.  Undefined at 0 and 1
    (unbounded) and at 1/2 (one-sided limits differ, see
    :func:`derivative_one_sided_limits`).
    """
    p = _check_p(p)
    if p in (0.0, 0.5, 1.0):
        raise SingularPointError(f"derivative undefined at p={p!r}")
    if p > 0.5:
        return -binary_fluctuation_derivative(1.0 - p)
    q = 1.0 - p
    r = math.sqrt(p * q)
    return (1.0 - 2.0 * p) / (2.0 * r) * math.log2(q / p) - 1.0 / (LN2 * r)


def derivative_one_sided_limits() -> tuple:
    """(left, right) limits of the derivative at p = 1/2: ``-+2/ln 2``."""
    return -2.0 / LN2, 2.0 / LN2


def binary_cv(p: float) -> Optional[float]:
    h = binary_entropy(p)
    if h == 0.0:
        return None
    return 100.0 * binary_fluctuation(p) / h


@dataclass(frozen=True)
class BinaryConstants:
    x_star: float
    p_star_low: float
    p_star_high: float
    f2_max: float
    saltus: float
    low_var_lo: float
    low_var_hi: float

    def as_dict(self) -> dict:
        return {
            "x_star": self.x_star,
            "p_star_low": self.p_star_low,
            "p_star_high": self.p_star_high,
            "f2_max": self.f2_max,
            "saltus": self.saltus,
            "low_var_lo": self.low_var_lo,
            "low_var_hi": self.low_var_hi,
        }


@functools.lru_cache(maxsize=8)
def compute_constants(tol: float = 1e-14) -> BinaryConstants:
    if not tol >= 1e-14:
        raise DomainError(f"tolerance {tol!r} too small")

    def g(x):
        return math.tanh(1.0 / x) - x

    def gprime(x):
        return -1.0 / (x * x * math.cosh(1.0 / x) ** 2) - 1.0

    x_star = solve_scalar_root(g, 0.5, 0.99, tol=tol, fprime=gprime)
    p_lo = 0.5 * (1.0 - x_star)
    p_hi = 0.5 * (1.0 + x_star)

    # H2 - F2 < 0 near the edges and > 0 near 1/2; one crossing per side
    def gap(p):
        return binary_entropy(p) - binary_fluctuation(p)

    lv_lo = solve_scalar_root(gap, p_lo, 0.5, tol=tol)
    lv_hi = solve_scalar_root(gap, 0.5, p_hi, tol=tol)

    left, right = derivative_one_sided_limits()
    return BinaryConstants(
        x_star=x_star,
        p_star_low=p_lo,
        p_star_high=p_hi,
        f2_max=binary_fluctuation(p_lo),
        saltus=right - left,
        low_var_lo=lv_lo,
        low_var_hi=lv_hi,
    )


@dataclass(frozen=True)
class BinaryCurvePoint:
    p: float
    h2: float
    f2: float
    df2_dp: Optional[float]
    cv: Optional[float]


def curve_table(grid_size: int) -> List[BinaryCurvePoint]:
    """Rows of (p, H2, F2, dF2/dp, CV) on an even grid over [0, 1]."""
    if isinstance(grid_size, bool) or not isinstance(grid_size, int) or grid_size < 2:
        raise DomainError(f"grid_size must be an integer >= 2, got {grid_size!r}")
    rows = []
    n = grid_size - 1
    for i in range(grid_size):
        # i/n keeps 0.5 exact on odd grids
        p = i / n
        try:
            d = binary_fluctuation_derivative(p)
        except SingularPointError:
            d = None
        rows.append(BinaryCurvePoint(p, binary_entropy(p), binary_fluctuation(p), d, binary_cv(p)))
    return rows


CSV_HEADER = ("p", "h2", "f2", "df2dp", "cv")


def _fmt(x: Optional[float]) -> str:
    return "" if x is None else format(x, ".9g")


def curve_csv(rows: List[BinaryCurvePoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([_fmt(r.p), _fmt(r.h2), _fmt(r.f2), _fmt(r.df2_dp), _fmt(r.cv)])
    return buf.getvalue()
