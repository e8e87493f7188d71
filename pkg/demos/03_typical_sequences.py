"""
Typical and atypical sequences
==============================

Under the normal approximation the chance that a length-L sample strays more
than eps from the source entropy is 2 (1 - Phi(eps sqrt(L) / F)).  We compare
that with simulation, then enumerate the typical set exhaustively.
"""

from infofluct import Distribution, aep_enumeration, atypical_rate_experiment

source = Distribution.bernoulli(0.25)
for r in atypical_rate_experiment(source, 0.05, [16, 64, 256, 1024, 4096], reps=4000, seed=2021):
    print(f"L={r.parameters['L']:5d}  simulated={r.observed:.4f} +- {r.std_error:.4f}  "
          f"normal theory={r.theoretical:.4f}")

###############################################################################
# Exhaustive enumeration of the L-th extension of Ber(0.3).  Every typical
# sequence has probability within 2^(-L(H +- eps)) and the typical set grows
# roughly like 2^(L H).  Its share of the mass tends to 1 only for large L;
# at these lengths the lattice of binomial counts makes it wobble.
print()
for L in (4, 8, 12, 16, 20):
    rep = aep_enumeration(Distribution.bernoulli(0.3), L, 0.1)
    print(f"L={L:2d}  |T|={rep.typical_count:7d}  log2|T|/L={rep.log2_count_per_letter:.4f}  "
          f"mass={rep.typical_mass:.4f}  (H={rep.entropy:.4f})")

# a fair coin is degenerate: every sequence is typical
rep = aep_enumeration(Distribution.uniform(2), 12, 0.01)
print(f"\nfair coin, L=12: {rep.typical_count} of {2 ** 12} typical, mass {rep.typical_mass}")
