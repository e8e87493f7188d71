"""
Entropy bounds for short sequences
==================================

A short sample of a source gives a noisy plug-in entropy.  Adding a Student-t
margin built from the plug-in fluctuation gives an upper bound that holds
in about 95% of samples, and a coder can be scored against that bound.
"""

import warnings

from infofluct import (Distribution, average_length, coding_efficiency,
                       counts_from_sequence, huffman, plug_in_estimates,
                       practical_entropy, sample_sequence, typicality_interval)

source = Distribution([0.5, 0.2, 0.2, 0.1])

for L in (8, 32, 128, 1024):
    symbols = sample_sequence(source, L, seed=L)
    est = plug_in_estimates(counts_from_sequence(symbols, source.K))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        hp = practical_entropy(est, alpha=0.05)
    ci = typicality_interval(est, alpha=0.05)
    print(f"L={L:5d}  H_hat={est.h_hat:.4f}  F_hat={est.f_hat:.4f}  "
          f"H_practical={hp:.4f}  95% interval=[{ci.lower:.4f}, {ci.upper:.4f}]")

###############################################################################
# Efficiency of a Huffman code designed for the true source, judged on a
# 32-symbol sample: the classical figure H_hat / L_bar and the bound-based one.
code = huffman(source)
l_bar = average_length(code, source)
est = plug_in_estimates(counts_from_sequence(sample_sequence(source, 32, seed=1), 4))
eta, eta_alpha = coding_efficiency(est, 0.05, l_bar)
print(f"\nL_bar={l_bar}  eta={eta:.4f}  eta_alpha={eta_alpha:.4f}")
