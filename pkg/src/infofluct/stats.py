"""Normal and Student-t distribution functions, plus a bracketed root finder.

Quantiles are computed, never looked up, so results are identical on every
platform with IEEE doubles.
"""
from __future__ import annotations

import math
from typing import Callable, Optional

from .errors import BracketError, ConvergenceError, DomainError

MAX_ITER = 200
BISECT_WIDTH = 1e-6

_SQRT2 = math.sqrt(2.0)
_SQRT2PI = math.sqrt(2.0 * math.pi)


def solve_scalar_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-14,
    fprime: Optional[Callable[[float], float]] = None,
) -> float:
    """Find a zero of ``f`` inside ``[lo, hi]``.

    Bisection shrinks the bracket to 1e-6, then Newton steps polish the
    estimate (secant slopes over the current bracket when ``fprime`` is not
    given).  A Newton step that would leave the bracket is replaced by a
    bisection step, so the bracket is kept throughout.  Stops once the step,
    the bracket width or ``|f(x)|`` drops below ``tol``.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise BracketError(f"invalid bracket [{lo!r}, {hi!r}]")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]")

    x = 0.5 * (lo + hi)
    for _ in range(MAX_ITER):
        fx = f(x)
        if fx == 0.0 or abs(fx) < tol and hi - lo < BISECT_WIDTH:
            return x
        if (fx < 0.0) == (flo < 0.0):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
        if hi - lo < tol:
            return 0.5 * (lo + hi)

        if hi - lo > BISECT_WIDTH:
            x = 0.5 * (lo + hi)
            continue
        slope = fprime(x) if fprime is not None else (fhi - flo) / (hi - lo)
        step = fx / slope if slope != 0.0 and math.isfinite(slope) else math.inf
        xn = x - step
        if not (lo < xn < hi):
            x = 0.5 * (lo + hi)
            continue
        if abs(step) < tol:
            return xn
        x = xn
    raise ConvergenceError(f"root finder did not converge in {MAX_ITER} iterations")


def std_normal_cdf(z: float) -> float:
    """Standard normal CDF through the complementary error function."""
    if not math.isfinite(z):
        raise DomainError(f"normal CDF needs a finite argument, got {z!r}")
    return 0.5 * math.erfc(-z / _SQRT2)


def std_normal_pdf(z: float) -> float:
    return math.exp(-0.5 * z * z) / _SQRT2PI


# Acklam's rational approximation, relative error ~1.15e-9 before refinement.
_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
      1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
      6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
      -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
      3.754408661907416e00)
_P_LOW = 0.02425


def _acklam(p: float) -> float:
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        return ((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
                / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    if p > 1.0 - _P_LOW:
        return -_acklam(1.0 - p)
    q = p - 0.5
    r = q * q
    return ((((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q
            / (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0))


def std_normal_quantile(p: float) -> float:
    """Inverse of :func:`std_normal_cdf`.

    Acklam's approximation followed by Halley steps against the forward CDF.
    In the upper half the residual is taken on the upper tail, which keeps
    full relative accuracy for ``p`` close to 1.
    """
    if not (0.0 < p < 1.0):
        raise DomainError(f"quantile needs 0 < p < 1, got {p!r}")
    if p == 0.5:
        return 0.0
    z = _acklam(p)
    for _ in range(3):
        if p < 0.5:
            e = std_normal_cdf(z) - p
        else:
            e = (1.0 - p) - 0.5 * math.erfc(z / _SQRT2)
        u = e * _SQRT2PI * math.exp(0.5 * z * z)
        z_new = z - u / (1.0 + 0.5 * z * u)
        if z_new == z:
            break
        z = z_new
    return z


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 20000):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h
    raise ConvergenceError(f"incomplete beta continued fraction stalled (a={a}, b={b}, x={x})")


def _stirling_corr(x: float) -> float:
    x2 = x * x
    return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - 1.0 / (1680.0 * x2)) / x2) / x2) / x


def _lgamma_diff(a: float, b: float) -> float:
    """``lgamma(a + b) - lgamma(a)`` without cancellation for large ``a``."""
    if a < 50.0:
        return math.lgamma(a + b) - math.lgamma(a)
    return ((a - 0.5) * math.log1p(b / a) + b * math.log(a + b) - b
            + _stirling_corr(a + b) - _stirling_corr(a))


def _log_beta_inv(a: float, b: float) -> float:
    # -log B(a, b), routing the larger argument through _lgamma_diff
    if a < b:
        a, b = b, a
    return _lgamma_diff(a, b) - math.lgamma(b)


def _ibeta(a: float, b: float, x: float, y: float) -> float:
    # y = 1 - x, passed separately so callers can supply it without cancellation
    if x <= 0.0:
        return 0.0
    if y <= 0.0:
        return 1.0
    log_front = _log_beta_inv(a, b) + a * math.log(x) + b * math.log(y)
    if x < (a + 1.0) / (a + b + 2.0):
        return math.exp(log_front) * _betacf(a, b, x) / a
    return 1.0 - math.exp(log_front) * _betacf(b, a, y) / b


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """``I_x(a, b)``, the regularized incomplete beta function."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"incomplete beta needs a, b > 0, got a={a!r}, b={b!r}")
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"incomplete beta needs 0 <= x <= 1, got {x!r}")
    return _ibeta(a, b, x, 1.0 - x)


def _check_df(df) -> float:
    if isinstance(df, bool) or not isinstance(df, (int, float)) or not df >= 1:
        raise DomainError(f"degrees of freedom must be >= 1, got {df!r}")
    return float(df)


def _t_tail(t: float, nu: float) -> float:
    """P(T > |t|) for Student's t with ``nu`` degrees of freedom."""
    t2 = t * t
    x = nu / (nu + t2)
    y = t2 / (nu + t2)
    return 0.5 * _ibeta(0.5 * nu, 0.5, x, y)


def student_t_cdf(t: float, df) -> float:
    nu = _check_df(df)
    if not math.isfinite(t):
        raise DomainError(f"t CDF needs a finite argument, got {t!r}")
    tail = _t_tail(t, nu)
    return tail if t < 0.0 else 1.0 - tail


def student_t_pdf(t: float, df) -> float:
    nu = _check_df(df)
    log_c = _lgamma_diff(0.5 * nu, 0.5) - 0.5 * math.log(nu * math.pi)
    return math.exp(log_c - 0.5 * (nu + 1.0) * math.log1p(t * t / nu))


def student_t_quantile(p: float, df) -> float:
    """Inverse CDF of Student's t.

    Works on the upper tail ``P(T > t) = min(p, 1 - p)`` so the residual never
    suffers from cancellation, brackets the root by doubling, and solves it
    with :func:`solve_scalar_root` using the density as derivative.
    """
    nu = _check_df(df)
    if not (0.0 < p < 1.0):
        raise DomainError(f"quantile needs 0 < p < 1, got {p!r}")
    if p == 0.5:
        return 0.0
    tail = min(p, 1.0 - p)
    sign = 1.0 if p > 0.5 else -1.0

    hi = 1.0
    while _t_tail(hi, nu) > tail:
        hi *= 2.0
        if hi > 1e300:
            raise ConvergenceError("could not bracket t quantile")
    lo = 0.0

    def g(t):
        return _t_tail(t, nu) - tail

    def gprime(t):
        return -student_t_pdf(t, nu)

    t = solve_scalar_root(g, lo, hi, tol=4e-16 * hi, fprime=gprime)
    return sign * t
