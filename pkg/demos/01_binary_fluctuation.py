"""
Information fluctuation of a binary source
==========================================

Entropy is the mean self-information of a symbol; the fluctuation F is its
standard deviation.  For Ber(p) both have closed forms.
"""

from infofluct import binary_entropy, binary_fluctuation, compute_constants, curve_table

# F vanishes at p = 0, 1/2 and 1: a fair coin carries exactly one bit per toss
for p in (0.0, 0.1, 0.25, 0.5):
    print(f"p={p:<5} H2={binary_entropy(p):.6f}  F2={binary_fluctuation(p):.6f}")

###############################################################################
# The landmarks: maxima of F2, the jump of its derivative at 1/2, and the
# range where the entropy exceeds its own standard deviation.
c = compute_constants()
print(f"\nx* = {c.x_star:.15f}  (root of tanh(1/x) = x)")
print(f"F2 is maximal ({c.f2_max:.6f}) at p = {c.p_star_low:.7f} and {c.p_star_high:.7f}")
print(f"derivative jump at p = 1/2: {c.saltus:.5f}")
print(f"low variability for {c.low_var_lo:.8f} <= p <= {c.low_var_hi:.8f}")

###############################################################################
# Curve data for plotting: coefficient of variation 100 F/H in percent.
rows = curve_table(21)
for r in rows[1:11]:
    print(f"p={r.p:.2f}  CV={r.cv:7.2f}%")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    rows = curve_table(1001)
    ps = [r.p for r in rows]
    plt.plot(ps, [r.h2 for r in rows], label="H2(p)")
    plt.plot(ps, [r.f2 for r in rows], label="F2(p)")
    plt.xlabel("p")
    plt.ylabel("shannons")
    plt.legend()
    plt.savefig("binary_fluctuation.png", dpi=120)
    print("\nwrote binary_fluctuation.png")
