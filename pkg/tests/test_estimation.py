import math
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from infofluct.core import entropy, fluctuation
from infofluct.errors import (DataError, DegenerateSourceError, DomainError,
                              InsufficientSampleError)
from infofluct.estimation import (BoundExceedsCapacityWarning,
                                  EntropyEstimate, SequenceCounts,
                                  atypicality_alpha, classify_sequence,
                                  coding_efficiency, counts_from_sequence,
                                  entropy_upper_bound_known_f,
                                  estimate_from_counts_matrix,
                                  normalized_fluctuation_statistic,
                                  plug_in_estimates, practical_entropy,
                                  typicality_interval)

# frozen from tests/oracles.py
H_025 = 0.8112781244591328
F_025 = 0.6863088948351165
Z_95 = 1.6448536269514723
Z_975 = 1.959963984540054
T_95_DF3 = 2.353363434801823
TWO_TAIL_2 = 0.04550026389635841


def est(counts):
    return plug_in_estimates(SequenceCounts.from_counts(counts))


def test_counts_from_sequence():
    c = counts_from_sequence([0, 0, 0, 1], 2)
    assert c.counts == (3, 1) and c.L == 4
    c = counts_from_sequence([0, 1, 2, 3], 4)
    assert c.counts == (1, 1, 1, 1) and c.L == 4
    c = counts_from_sequence([0, 0], 3)
    assert c.counts == (2, 0, 0) and c.K == 3
    with pytest.raises(DataError):
        counts_from_sequence([0, 3], 3)
    with pytest.raises(DataError):
        counts_from_sequence([], 3)


def test_sequence_counts_invariants():
    with pytest.raises(DataError):
        SequenceCounts((1, 2), 4, 2)
    with pytest.raises(DataError):
        SequenceCounts((1, -1, 2), 2, 3)


def test_plug_in_examples():
    e = est([3, 1])
    assert e.h_hat == pytest.approx(H_025, abs=1e-15)
    assert e.f_hat == pytest.approx(F_025, abs=1e-12)
    e = est([2, 2])
    assert (e.h_hat, e.f_hat) == (1.0, 0.0)
    e = est([4, 0])
    assert (e.h_hat, e.f_hat) == (0.0, 0.0)


@given(st.lists(st.integers(0, 20), min_size=1, max_size=10).filter(lambda m: sum(m) > 0),
       st.integers(1, 50))
def test_plug_in_matches_core_on_rational_pmf(m, scale):
    e = est([k * scale for k in m])
    p = [k / sum(m) for k in m]
    assert e.h_hat == pytest.approx(entropy(p), abs=1e-12)
    assert e.f_hat ** 2 == pytest.approx(fluctuation(p) ** 2, abs=1e-12)
    assert 0.0 <= e.h_hat <= math.log2(len(m)) + 1e-12


def test_vectorised_estimates_match_scalar(rng):
    counts = rng.integers(0, 30, size=(50, 5))
    counts[:, 0] += 1
    h, f2 = estimate_from_counts_matrix(counts)
    for row, hh, ff in zip(counts, h, f2):
        e = est(row)
        assert hh == pytest.approx(e.h_hat, abs=1e-12)
        assert ff == pytest.approx(e.f_hat ** 2, abs=1e-12)


def test_upper_bound_known_f():
    assert entropy_upper_bound_known_f(0.7, 0.0, 10, 0.05) == 0.7
    assert entropy_upper_bound_known_f(0.8, 0.5, 100, 0.05) == pytest.approx(0.8 + Z_95 * 0.05, abs=1e-12)
    assert entropy_upper_bound_known_f(0.8, 0.5, 100, 0.05) == pytest.approx(0.882243, abs=1e-6)
    big = entropy_upper_bound_known_f(0.8, 0.5, 10**12, 0.05)
    assert big - 0.8 < 1e-6
    with pytest.raises(DomainError):
        entropy_upper_bound_known_f(0.8, -1, 10, 0.05)
    with pytest.raises(DomainError):
        entropy_upper_bound_known_f(0.8, 0.5, 10, 1.5)


def test_practical_entropy():
    assert practical_entropy(EntropyEstimate(0.6, 0.0, 10, 2)) == 0.6
    with pytest.warns(BoundExceedsCapacityWarning):
        hp = practical_entropy(est([3, 1]), 0.05)
    assert hp == pytest.approx(H_025 + T_95_DF3 * F_025 / 2, abs=1e-12)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundExceedsCapacityWarning)
        values = [practical_entropy(EntropyEstimate(0.5, 0.4, L, 4)) for L in (2, 3, 5, 10, 100, 1000)]
    assert all(a > b for a, b in zip(values, values[1:]))
    with pytest.raises(InsufficientSampleError):
        practical_entropy(EntropyEstimate(0.0, 0.0, 1, 2))


def test_coding_efficiency():
    e = EntropyEstimate(1.5, 0.0, 20, 3)
    assert coding_efficiency(e, 0.05, 1.5) == (1.0, 1.0)
    eta, eta_a = coding_efficiency(est([3, 1]), 0.05, 1.0)
    assert eta == pytest.approx(H_025, abs=1e-15)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert eta_a == practical_entropy(est([3, 1]), 0.05)
    with pytest.raises(DomainError):
        coding_efficiency(e, 0.05, 0.0)


@given(st.floats(0, 3), st.floats(0, 2), st.integers(2, 10**6), st.floats(1e-4, 0.4999),
       st.floats(0.1, 20))
def test_eta_alpha_dominates(h, f, L, alpha, l_bar):
    eta, eta_a = coding_efficiency(EntropyEstimate(h, f, L, 8), alpha, l_bar)
    assert eta_a >= eta


def test_typicality_interval():
    ci = typicality_interval(EntropyEstimate(0.7, 0.0, 9, 2), 0.05)
    assert ci.lower == ci.upper == 0.7
    ci = typicality_interval(EntropyEstimate(1.0, 0.5, 25, 2), 0.05)
    assert ci.lower == pytest.approx(1 - Z_975 * 0.1, abs=1e-12)
    assert ci.upper == pytest.approx(1 + Z_975 * 0.1, abs=1e-12)
    assert 1.0 in ci
    w = [typicality_interval(EntropyEstimate(1.0, 0.5, L, 2)).upper - 1.0 for L in (25, 100)]
    assert w[0] / w[1] == pytest.approx(2.0, rel=1e-12)


@given(st.floats(0, 5), st.floats(0, 3), st.integers(1, 10**5), st.floats(1e-6, 0.999))
def test_interval_symmetric_and_contains_estimate(h, f, L, alpha):
    ci = typicality_interval(EntropyEstimate(h, f, L, 64), alpha)
    assert ci.lower <= h <= ci.upper
    assert (ci.upper - h) == pytest.approx(h - ci.lower, abs=1e-12)


def test_atypicality_alpha():
    assert atypicality_alpha(0.1, 0.5, 100) == pytest.approx(TWO_TAIL_2, abs=1e-14)
    assert atypicality_alpha(0.1, 0.5, 10**8) < 1e-300
    assert atypicality_alpha(1e-12, 0.5, 1) == pytest.approx(1.0, abs=1e-10)
    vals = [atypicality_alpha(0.05, 0.7, L) for L in (4, 16, 64, 256, 1024)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert atypicality_alpha(0.1, 0.7, 50) < atypicality_alpha(0.05, 0.7, 50)
    with pytest.raises(DegenerateSourceError):
        atypicality_alpha(0.1, 0.0, 10)
    with pytest.raises(DomainError):
        atypicality_alpha(0.0, 0.5, 10)


def test_classify_sequence():
    c = SequenceCounts.from_counts([3, 1])
    assert classify_sequence(c, H_025, 0.01) == "typical"
    assert classify_sequence(SequenceCounts.from_counts([4, 0]), 1.0, 0.5) == "atypical"
    assert classify_sequence(SequenceCounts.from_counts([2, 2]), 1.0, 0.01) == "typical"


def test_normalized_statistic():
    assert normalized_fluctuation_statistic(0.3, 0.3, 11) == pytest.approx(10.0)
    assert normalized_fluctuation_statistic(0.0, 0.3, 11) == 0.0
    np.testing.assert_allclose(normalized_fluctuation_statistic(np.array([0.3, 0.6]), 0.3, 3), [2, 4])
    with pytest.raises(DegenerateSourceError):
        normalized_fluctuation_statistic(0.1, 0.0, 5)
    with pytest.raises(DomainError):
        normalized_fluctuation_statistic(0.1, 0.2, 1)
