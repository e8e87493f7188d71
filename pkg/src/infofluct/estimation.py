"""Plug-in estimation of entropy and fluctuation from observed sequences.

Besides the point estimates this module turns them into upper confidence
bounds on entropy (normal with known fluctuation, Student-t with estimated
fluctuation), coding efficiencies measured against those bounds, two-sided
typicality intervals, and the probability of an epsilon-atypical sequence
under the normal approximation.

All upper-tail quantiles are taken at ``1 - alpha`` so that the bound is
exceeded with probability ``alpha``.
"""
from __future__ import annotations

import math
import warnings
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from .core import TOL
from .errors import (DataError, DegenerateSourceError, DomainError,
                     InsufficientSampleError, NumericError)
from .stats import std_normal_cdf, std_normal_quantile, student_t_quantile


class BoundExceedsCapacityWarning(UserWarning):
    """An entropy upper bound landed above ``log2 K``."""


@dataclass(frozen=True)
class SequenceCounts:
    counts: tuple
    L: int
    K: int

    def __post_init__(self):
        if len(self.counts) != self.K:
            raise DataError("counts length must equal the alphabet size")
        if any(c < 0 for c in self.counts):
            raise DataError("counts must be nonnegative")
        if sum(self.counts) != self.L:
            raise DataError("counts must add up to the sequence length")
        if self.L < 1:
            raise DataError("empty sequence")

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "SequenceCounts":
        c = tuple(int(m) for m in counts)
        return cls(c, sum(c), len(c))

    @property
    def frequencies(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=float) / self.L


@dataclass(frozen=True)
class EntropyEstimate:
    h_hat: float
    f_hat: float
    L: int
    K: int

    @property
    def max_entropy(self) -> float:
        return math.log2(self.K)


@dataclass(frozen=True)
class ConfidenceInterval:
    lower: float
    upper: float
    alpha: float

    def __contains__(self, h: float) -> bool:
        return self.lower <= h <= self.upper


def _check_alpha(alpha: float) -> float:
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")
    return float(alpha)


def _check_length(L, minimum: int = 1) -> int:
    if isinstance(L, bool) or int(L) != L or L < minimum:
        raise DomainError(f"sequence length must be an integer >= {minimum}, got {L!r}")
    return int(L)


def counts_from_sequence(symbols: Sequence[int], K: int) -> SequenceCounts:
    """Tally symbol indices ``0..K-1``; unseen symbols keep a zero count."""
    if K < 1:
        raise DataError("alphabet size must be positive")
    arr = np.asarray(symbols)
    if arr.size == 0:
        raise DataError("empty sequence")
    if arr.ndim != 1 or not np.issubdtype(arr.dtype, np.integer):
        raise DataError("symbols must be a flat sequence of integer indices")
    if arr.min() < 0 or arr.max() >= K:
        raise DataError(f"symbol outside alphabet of size {K}")
    counts = np.bincount(arr, minlength=K)
    return SequenceCounts(tuple(int(c) for c in counts), int(arr.size), K)


def plug_in_estimates(c: SequenceCounts) -> EntropyEstimate:
    """Entropy and fluctuation of the empirical distribution ``m_k / L``."""
    m = np.asarray(c.counts, dtype=float)
    p = m[m > 0] / c.L
    lg = np.log2(p)
    h = -math.fsum(p * lg)
    f2 = math.fsum(p * lg * lg) - h * h
    if f2 < 0.0:
        if f2 < -TOL:
            raise NumericError(f"negative plug-in fluctuation {f2!r}")
        f2 = 0.0
    h = min(max(h, 0.0), math.log2(c.K))
    return EntropyEstimate(h, math.sqrt(f2), c.L, c.K)


def entropy_upper_bound_known_f(h_hat: float, f_known: float, L: int, alpha: float = 0.05) -> float:
    """One-sided normal bound ``h_hat + z_{1-alpha} F / sqrt(L)`` with F known."""
    alpha = _check_alpha(alpha)
    L = _check_length(L)
    if not f_known >= 0.0:
        raise DomainError(f"fluctuation must be nonnegative, got {f_known!r}")
    return h_hat + std_normal_quantile(1.0 - alpha) * f_known / math.sqrt(L)


def practical_entropy(e: EntropyEstimate, alpha: float = 0.05) -> float:
    """Student-t upper bound ``h_hat + t_{1-alpha, L-1} f_hat / sqrt(L)``.

    A value above ``log2 K`` is returned as is, with a
    :class:`BoundExceedsCapacityWarning`.
    """
    alpha = _check_alpha(alpha)
    if e.L < 2:
        raise InsufficientSampleError("practical entropy needs at least two observations")
    value = e.h_hat + student_t_quantile(1.0 - alpha, e.L - 1) * e.f_hat / math.sqrt(e.L)
    if value > e.max_entropy:
        warnings.warn(
            f"practical entropy {value:.6g} exceeds log2 K = {e.max_entropy:.6g}",
            BoundExceedsCapacityWarning,
            stacklevel=2,
        )
    return value


def exceeds_capacity(value: float, K: int) -> bool:
    return value > math.log2(K)


def coding_efficiency(e: EntropyEstimate, alpha: float, l_bar: float) -> Tuple[float, float]:
    """Return ``(h_hat / l_bar, practical_entropy / l_bar)``."""
    if not l_bar > 0.0:
        raise DomainError(f"average code length must be positive, got {l_bar!r}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundExceedsCapacityWarning)
        hp = practical_entropy(e, alpha)
    return e.h_hat / l_bar, hp / l_bar


def typicality_interval(e: EntropyEstimate, alpha: float = 0.05) -> ConfidenceInterval:
    """Two-sided interval ``h_hat -+ z_{1-alpha/2} f_hat / sqrt(L)``."""
    alpha = _check_alpha(alpha)
    half = std_normal_quantile(1.0 - 0.5 * alpha) * e.f_hat / math.sqrt(e.L)
    return ConfidenceInterval(e.h_hat - half, e.h_hat + half, alpha)


def atypicality_alpha(epsilon: float, f: float, L: int) -> float:
    """Probability that the sample entropy strays more than ``epsilon`` from H.

    Normal approximation: ``2 (1 - Phi(epsilon sqrt(L) / F))``.
    """
    L = _check_length(L)
    if not epsilon > 0.0:
        raise DomainError(f"epsilon must be positive, got {epsilon!r}")
    if f == 0.0:
        raise DegenerateSourceError("zero fluctuation: every sequence has sample entropy H")
    if not f > 0.0:
        raise DomainError(f"fluctuation must be positive, got {f!r}")
    # 2 * Phi(-x) rather than 2 * (1 - Phi(x)) keeps tiny tails
    return 2.0 * std_normal_cdf(-epsilon * math.sqrt(L) / f)


def classify_sequence(c: SequenceCounts, reference_h: float, epsilon: float) -> str:
    """``"atypical"`` if the sample entropy is more than ``epsilon`` from ``reference_h``."""
    if not epsilon > 0.0:
        raise DomainError(f"epsilon must be positive, got {epsilon!r}")
    h = plug_in_estimates(c).h_hat
    return "atypical" if abs(h - reference_h) > epsilon else "typical"


def normalized_fluctuation_statistic(f_hat_sq, f_sq: float, L: int):
    """``(L - 1) F_hat^2 / F^2``; accepts an array of ``f_hat_sq``."""
    L = _check_length(L, 2)
    if f_sq == 0.0:
        raise DegenerateSourceError("statistic undefined for a source with zero fluctuation")
    if not f_sq > 0.0:
        raise DomainError(f"squared fluctuation must be positive, got {f_sq!r}")
    if np.isscalar(f_hat_sq):
        return (L - 1) * f_hat_sq / f_sq
    return (L - 1) * np.asarray(f_hat_sq, dtype=float) / f_sq


def estimate_from_counts_matrix(counts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised plug-in (H_hat, F_hat^2) for each row of a counts matrix."""
    counts = np.asarray(counts, dtype=float)
    L = counts.sum(axis=1, keepdims=True)
    p = counts / L
    with np.errstate(divide="ignore", invalid="ignore"):
        lg = np.where(p > 0, np.log2(np.where(p > 0, p, 1.0)), 0.0)
    h = -(p * lg).sum(axis=1)
    f2 = (p * lg * lg).sum(axis=1) - h * h
    return h, np.maximum(f2, 0.0)


def estimate_to_record(e: EntropyEstimate, alpha: float) -> Mapping:
    """JSON-ready record: estimates, bounds and typicality interval."""
    ci = typicality_interval(e, alpha)
    rec = {"h_hat": e.h_hat, "f_hat": e.f_hat, "L": e.L, "K": e.K, "alpha": alpha}
    bounds = {"typicality_lower": ci.lower, "typicality_upper": ci.upper}
    if e.L >= 2:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BoundExceedsCapacityWarning)
            hp = practical_entropy(e, alpha)
        bounds["practical_entropy"] = hp
        bounds["exceeds_log2K"] = exceeds_capacity(hp, e.K)
    else:
        bounds["practical_entropy"] = None
        bounds["exceeds_log2K"] = None
    rec["bounds"] = bounds
    return rec
