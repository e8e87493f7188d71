"""
Huffman coding of source extensions
===================================

Coding L-grams instead of single letters pushes the per-letter rate toward
the entropy, within 1/L of it, though not necessarily monotonically.
"""

from infofluct import (Distribution, average_length, decode, encode, extend,
                       huffman, pack_bits, sample_sequence, unpack_bits)
from infofluct.binary import binary_entropy

source = Distribution.bernoulli(0.3)
H = binary_entropy(0.3)
print(f"H = {H:.6f}")
for L in range(1, 9):
    block = extend(source, L).as_distribution()
    rate = average_length(huffman(block), block) / L
    print(f"L={L}  bits/letter={rate:.6f}  gap={rate - H:.6f}  (bound {1 / L:.4f})")

###############################################################################
# Round trip through a packed byte stream.
code = huffman(source)
symbols = sample_sequence(source, 40, seed=3).tolist()
packed = pack_bits(encode(code, symbols))
assert decode(code, unpack_bits(packed)) == symbols
print(f"\n40 symbols -> {len(packed)} bytes: {packed.hex()}")
