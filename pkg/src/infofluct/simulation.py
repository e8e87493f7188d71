"""Seeded Monte Carlo experiments and exhaustive typical-set enumeration.

Random numbers come from numpy's Philox4x64 counter-based generator.  A run
with seed ``s`` draws replicate ``i`` from the substream keyed ``s ^ i`` and
maps uniforms to symbols by inverse CDF over the cumulative pmf, so a given
(seed, distribution, length) produces the same symbols on every platform
and replicates can be generated in any order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from .coding import EXTENSION_CAP, extend
from .core import DistLike, as_distribution, entropy, fluctuation_squared
from .errors import DegenerateSourceError, DomainError, SizeError
from .estimation import (atypicality_alpha, estimate_from_counts_matrix,
                         normalized_fluctuation_statistic)
from .stats import std_normal_cdf, std_normal_quantile

DEFAULT_SEED = 2021
_MASK64 = (1 << 64) - 1


def substream(seed: int, index: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(int(seed) ^ int(index)) & _MASK64))


def _inverse_cdf(probs: np.ndarray, u: np.ndarray) -> np.ndarray:
    cum = np.cumsum(probs)
    idx = np.searchsorted(cum, u, side="right")
    # u can land above a cumsum that rounds below 1
    last = int(np.flatnonzero(probs > 0)[-1])
    return np.minimum(idx, last)


def sample_sequence(d: DistLike, L: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Draw ``L`` i.i.d. symbol indices from ``d``."""
    d = as_distribution(d)
    if L < 0:
        raise DomainError("length must be nonnegative")
    u = substream(seed).random(int(L))
    return _inverse_cdf(d.array, u)


def replicate_counts(d: DistLike, L: int, reps: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Symbol counts for ``reps`` independent length-``L`` sequences, one row each."""
    d = as_distribution(d)
    if reps < 1:
        raise DomainError("need at least one replicate")
    probs = d.array
    out = np.empty((reps, d.K), dtype=np.int64)
    for i in range(reps):
        u = substream(seed, i).random(int(L))
        out[i] = np.bincount(_inverse_cdf(probs, u), minlength=d.K)
    return out


@dataclass
class ExperimentReport:
    name: str
    parameters: Dict
    observed: float
    theoretical: Optional[float]
    std_error: Optional[float]
    extra: Dict = field(default_factory=dict)

    def as_dict(self) -> Dict:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "observed": self.observed,
            "theoretical": self.theoretical,
            "std_error": self.std_error,
            "extra": self.extra,
        }


def _rate_se(r: float, reps: int) -> float:
    return math.sqrt(r * (1.0 - r) / reps)


def _nondegenerate(d):
    f2 = fluctuation_squared(d)
    if f2 <= 0.0:
        raise DegenerateSourceError("experiment needs a source with nonzero fluctuation")
    return f2


def atypical_rate_experiment(d: DistLike, epsilon: float, Ls: Sequence[int], reps: int,
                             seed: int = DEFAULT_SEED) -> List[ExperimentReport]:
    """Fraction of sequences whose plug-in entropy is more than ``epsilon`` from H.

    Each report pairs the observed rate with the normal-theory value
    ``2 (1 - Phi(epsilon sqrt(L) / F))``.
    """
    d = as_distribution(d)
    f = math.sqrt(_nondegenerate(d))
    if not epsilon > 0.0:
        raise DomainError("epsilon must be positive")
    H = entropy(d)
    reports = []
    for L in Ls:
        h_hat, _ = estimate_from_counts_matrix(replicate_counts(d, L, reps, seed))
        rate = float(np.mean(np.abs(h_hat - H) > epsilon))
        theory = atypicality_alpha(epsilon, f, L)
        reports.append(ExperimentReport(
            name="atypical_rate",
            parameters={"dist": list(d.probs), "L": int(L), "epsilon": epsilon,
                        "reps": reps, "seed": seed},
            observed=rate,
            theoretical=theory,
            std_error=_rate_se(rate, reps),
            extra={"theoretical_std_error": _rate_se(theory, reps)},
        ))
    return reports


def ci_coverage_experiment(d: DistLike, L: int, alpha: float, reps: int,
                           seed: int = DEFAULT_SEED) -> ExperimentReport:
    """How often the two-sided interval around the plug-in estimate contains H."""
    d = as_distribution(d)
    _nondegenerate(d)
    if L < 2:
        raise DomainError("coverage experiment needs L >= 2")
    if not 0.0 < alpha < 1.0:
        raise DomainError("alpha must lie in (0, 1)")
    H = entropy(d)
    h_hat, f2_hat = estimate_from_counts_matrix(replicate_counts(d, L, reps, seed))
    half = std_normal_quantile(1.0 - 0.5 * alpha) * np.sqrt(f2_hat) / math.sqrt(L)
    covered = float(np.mean((h_hat - half <= H) & (H <= h_hat + half)))
    return ExperimentReport(
        name="ci_coverage",
        parameters={"dist": list(d.probs), "L": int(L), "alpha": alpha, "reps": reps, "seed": seed},
        observed=covered,
        theoretical=1.0 - alpha,
        std_error=_rate_se(covered, reps),
    )


def _ks_distance_to_normal(z: np.ndarray) -> float:
    z = np.sort(z)
    n = z.size
    cdf = np.array([std_normal_cdf(float(v)) for v in z])
    upper = np.arange(1, n + 1) / n - cdf
    lower = cdf - np.arange(0, n) / n
    return float(max(upper.max(), lower.max()))


def sampling_distribution_check(d: DistLike, L: int, reps: int,
                                seed: int = DEFAULT_SEED) -> ExperimentReport:
    """Moments of ``(H_hat - H) sqrt(L) / F`` and its distance from N(0, 1).

    ``observed`` is the mean of the standardized values; ``extra`` carries
    their standard deviation, the Kolmogorov-Smirnov distance to Phi, and the
    mean of ``(L - 1) F_hat^2 / F^2`` (expected near ``L - 1``).
    """
    d = as_distribution(d)
    f2 = _nondegenerate(d)
    if L < 2:
        raise DomainError("sampling check needs L >= 2")
    H = entropy(d)
    h_hat, f2_hat = estimate_from_counts_matrix(replicate_counts(d, L, reps, seed))
    z = (h_hat - H) * math.sqrt(L) / math.sqrt(f2)
    mean = float(z.mean())
    sd = float(z.std(ddof=1)) if reps > 1 else 0.0
    chi = normalized_fluctuation_statistic(f2_hat, f2, L)
    return ExperimentReport(
        name="sampling_distribution",
        parameters={"dist": list(d.probs), "L": int(L), "reps": reps, "seed": seed},
        observed=mean,
        theoretical=0.0,
        std_error=sd / math.sqrt(reps),
        extra={
            "sd": sd,
            "ks_distance": _ks_distance_to_normal(z),
            "chi_square_mean": float(chi.mean()),
            "chi_square_mean_expected": float(L - 1),
            "h_hat_mean": float(h_hat.mean()),
        },
    )


def bias_experiment(d: DistLike, Ls: Sequence[int], reps: int,
                    seed: int = DEFAULT_SEED) -> List[ExperimentReport]:
    """Mean plug-in entropy minus H at each length."""
    d = as_distribution(d)
    H = entropy(d)
    out = []
    for L in Ls:
        h_hat, _ = estimate_from_counts_matrix(replicate_counts(d, L, reps, seed))
        out.append(ExperimentReport(
            name="bias",
            parameters={"dist": list(d.probs), "L": int(L), "reps": reps, "seed": seed},
            observed=float(h_hat.mean() - H),
            theoretical=0.0,
            std_error=float(h_hat.std(ddof=1) / math.sqrt(reps)) if reps > 1 else None,
        ))
    return out


@dataclass
class AepReport:
    L: int
    epsilon: float
    entropy: float
    typical_count: int
    typical_mass: float
    atypical_mass: float
    min_typical_prob: Optional[float]
    max_typical_prob: Optional[float]
    bound_low: float
    bound_high: float
    log2_count_per_letter: Optional[float]
    typical_mask: np.ndarray = field(repr=False, default=None)
    probs: np.ndarray = field(repr=False, default=None)

    def as_dict(self) -> Dict:
        return {
            "L": self.L,
            "epsilon": self.epsilon,
            "entropy": self.entropy,
            "typical_count": self.typical_count,
            "typical_mass": self.typical_mass,
            "atypical_mass": self.atypical_mass,
            "min_typical_prob": self.min_typical_prob,
            "max_typical_prob": self.max_typical_prob,
            "bound_low": self.bound_low,
            "bound_high": self.bound_high,
            "log2_count_per_letter": self.log2_count_per_letter,
        }


def aep_enumeration(d: DistLike, L: int, epsilon: float, cap: int = EXTENSION_CAP) -> AepReport:
    """Enumerate every L-gram and collect the epsilon-typical set.

    An L-gram is typical when ``L (H - eps) <= -log2 P <= L (H + eps)``, with
    ``log2 P`` summed letter by letter.  Impossible L-grams are never typical.
    """
    d = as_distribution(d)
    if not epsilon > 0.0:
        raise DomainError("epsilon must be positive")
    if d.K ** L > cap:
        raise SizeError(f"{d.K}**{L} sequences exceed the enumeration cap {cap}")
    ext = extend(d, L, cap)
    info = -ext.log2_probs()
    H = entropy(d)
    mask = (info >= L * (H - epsilon)) & (info <= L * (H + epsilon))
    typical_p = ext.probs[mask]
    count = int(mask.sum())
    mass = math.fsum(typical_p)
    return AepReport(
        L=int(L),
        epsilon=epsilon,
        entropy=H,
        typical_count=count,
        typical_mass=mass,
        atypical_mass=math.fsum(ext.probs[~mask]),
        min_typical_prob=float(typical_p.min()) if count else None,
        max_typical_prob=float(typical_p.max()) if count else None,
        bound_low=2.0 ** (-L * (H + epsilon)),
        bound_high=2.0 ** (-L * (H - epsilon)),
        log2_count_per_letter=math.log2(count) / L if count else None,
        typical_mask=mask,
        probs=ext.probs,
    )
