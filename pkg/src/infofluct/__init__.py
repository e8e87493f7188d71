"""Entropy and information fluctuation of discrete memoryless sources."""

__version__ = "0.1.0"

from .core import (Distribution, SourceClass, SourceKind, classify_source,
                   coefficient_of_variation, entropy, fluctuation,
                   fluctuation_expanded, fluctuation_squared, self_information)
from .binary import (BinaryConstants, BinaryCurvePoint, binary_entropy,
                     binary_fluctuation, binary_fluctuation_derivative,
                     compute_constants, curve_table)
from .stats import (regularized_incomplete_beta, solve_scalar_root,
                    std_normal_cdf, std_normal_quantile, student_t_cdf,
                    student_t_quantile)
from .estimation import (ConfidenceInterval, EntropyEstimate, SequenceCounts,
                         atypicality_alpha, classify_sequence,
                         coding_efficiency, counts_from_sequence,
                         entropy_upper_bound_known_f,
                         normalized_fluctuation_statistic, plug_in_estimates,
                         practical_entropy, typicality_interval)
from .coding import (CodeBook, ExtensionDistribution, average_length, decode,
                     encode, extend, huffman, pack_bits, unpack_bits)
from .simulation import (AepReport, ExperimentReport, aep_enumeration,
                         atypical_rate_experiment, ci_coverage_experiment,
                         sample_sequence, sampling_distribution_check)
