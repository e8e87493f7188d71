"""Entropy, information fluctuation and degeneracy of discrete memoryless sources.

All logarithms are base 2, so entropies are in shannons (bits) and squared
fluctuations in shannons squared.  Symbols with zero mass are skipped, which
is the usual continuity convention ``0 * log2(0) = 0``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DomainError, NumericError, UndefinedCVError, ValidationError

TOL = 1e-12


@dataclass(frozen=True)
class Distribution:
    """A validated probability mass function over a finite alphabet."""

    probs: tuple

    def __init__(self, probs: Iterable[float]):
        values = tuple(float(p) for p in probs)
        if not values:
            raise ValidationError("distribution needs at least one symbol")
        for p in values:
            if not math.isfinite(p) or p < 0.0:
                raise ValidationError(f"invalid probability {p!r}")
        total = math.fsum(values)
        if abs(total - 1.0) > TOL:
            raise ValidationError(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "probs", values)

    @property
    def K(self) -> int:
        return len(self.probs)

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self):
        return iter(self.probs)

    def __getitem__(self, k):
        return self.probs[k]

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=float)

    @classmethod
    def uniform(cls, K: int) -> "Distribution":
        if K < 1:
            raise ValidationError("alphabet size must be positive")
        return cls([1.0 / K] * K)

    @classmethod
    def bernoulli(cls, p: float) -> "Distribution":
        """Binary source emitting symbol 0 with probability ``p``."""
        if not 0.0 <= p <= 1.0:
            raise ValidationError(f"p={p!r} outside [0, 1]")
        return cls([p, 1.0 - p])


DistLike = Union[Distribution, Sequence[float], np.ndarray]


def as_distribution(d: DistLike) -> Distribution:
    if isinstance(d, Distribution):
        return d
    return Distribution(d)


class SourceKind(enum.Enum):
    DEGENERATE_TYPE_I = "degenerate_type_i"
    DEGENERATE_TYPE_II = "degenerate_type_ii"
    NON_DEGENERATE = "non_degenerate"


@dataclass(frozen=True)
class SourceClass:
    kind: SourceKind
    support_size: int | None = None  # J, only for type II

    @property
    def degenerate(self) -> bool:
        return self.kind is not SourceKind.NON_DEGENERATE


def self_information(p: float) -> float:
    """Information carried by a symbol of probability ``p``, in shannons."""
    if not (0.0 < p <= 1.0):
        raise DomainError(f"self-information needs 0 < p <= 1, got {p!r}")
    return -math.log2(p)


def _nonzero_logs(d: Distribution):
    p = d.array
    p = p[p > 0.0]
    return p, np.log2(p)


def entropy(d: DistLike) -> float:
    """Shannon entropy ``-sum p_k log2 p_k``."""
    d = as_distribution(d)
    p, lg = _nonzero_logs(d)
    h = -math.fsum(p * lg)
    # rounding can push H a hair outside [0, log2 K]
    return min(max(h, 0.0), math.log2(d.K))


def _clamp_square(value: float, what: str) -> float:
    if value >= 0.0:
        return value
    if value >= -TOL:
        return 0.0
    raise NumericError(f"{what} is negative ({value!r}); Jensen's inequality violated")


def fluctuation_squared(d: DistLike) -> float:
    """Second central moment of the self-information: ``E[I^2] - H^2``."""
    d = as_distribution(d)
    p, lg = _nonzero_logs(d)
    h = -math.fsum(p * lg)
    second = math.fsum(p * lg * lg)
    return _clamp_square(second - h * h, "squared fluctuation")


def fluctuation(d: DistLike) -> float:
    return math.sqrt(fluctuation_squared(d))


def fluctuation_expanded(d: DistLike) -> float:
    """Fluctuation from the expanded form with diagonal and cross terms.

    Evaluates ``sqrt(sum (p_k - p_k^2) log2^2 p_k - sum_{i != j} p_i p_j
    log2 p_i log2 p_j)`` directly, without going through the entropy.  It is
    kept as an independent route to :func:`fluctuation`; the cross sum is
    built as a full ``K x K`` matrix, so use it for modest alphabets only.
    """
    d = as_distribution(d)
    p, lg = _nonzero_logs(d)
    diag = math.fsum((p - p * p) * lg * lg)
    w = p * lg
    cross = np.outer(w, w)
    np.fill_diagonal(cross, 0.0)
    radicand = diag - math.fsum(cross.ravel())
    return math.sqrt(_clamp_square(radicand, "expanded fluctuation radicand"))


def classify_source(d: DistLike) -> SourceClass:
    """Return type I, type II (with support size J) or non-degenerate.

    Type I means a single nonzero mass.  Type II means ``J > 1`` nonzero
    masses, each equal to ``1/J`` within 1e-12.  Masses are compared
    structurally, so a distribution carrying a stray mass far below 1e-12
    can be non-degenerate while its squared fluctuation is under 1e-12.
    """
    d = as_distribution(d)
    nonzero = [p for p in d.probs if p > 0.0]
    J = len(nonzero)
    if J == 1:
        return SourceClass(SourceKind.DEGENERATE_TYPE_I)
    if all(abs(p - 1.0 / J) <= TOL for p in nonzero):
        return SourceClass(SourceKind.DEGENERATE_TYPE_II, J)
    return SourceClass(SourceKind.NON_DEGENERATE)


def coefficient_of_variation(d: DistLike) -> float:
    """``100 * F / H`` in percent."""
    d = as_distribution(d)
    h = entropy(d)
    if h <= 0.0:
        raise UndefinedCVError("coefficient of variation undefined for zero entropy")
    return 100.0 * fluctuation(d) / h
