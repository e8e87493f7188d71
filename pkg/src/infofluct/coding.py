"""Source extensions, binary Huffman codes and bit packing.

Bit strings are Python ``str`` objects over ``"0"``/``"1"``.  Packed streams
(:func:`pack_bits`) append zero padding and a 3-bit trailer holding the pad
length, so the total is a whole number of bytes::

    payload bits | pad zeros (0..7) | pad length (3 bits, MSB first)
"""
from __future__ import annotations

import heapq
import itertools
import json
import math
from dataclasses import dataclass
from typing import Dict, List, Sequence

import numpy as np

from .core import Distribution, DistLike, as_distribution
from .errors import CorruptionError, DataError, SizeError

EXTENSION_CAP = 2 ** 22


@dataclass(frozen=True)
class ExtensionDistribution:
    """Distribution of L-grams, indexed lexicographically (first letter slowest)."""

    order: int
    base: Distribution
    probs: np.ndarray

    @property
    def size(self) -> int:
        return self.probs.size

    def as_distribution(self) -> Distribution:
        # products can drift from 1 by more than the pmf tolerance at large K**L
        p = self.probs / math.fsum(self.probs)
        return Distribution(p)

    def log2_probs(self) -> np.ndarray:
        """``log2 P(u)`` per L-gram, summed letterwise (``-inf`` for impossible ones)."""
        with np.errstate(divide="ignore"):
            lg = np.log2(self.base.array)
        out = np.zeros(1)
        for _ in range(self.order):
            out = np.add.outer(out, lg).ravel()
        return out

    def ngram(self, index: int) -> tuple:
        K = self.base.K
        letters = []
        for _ in range(self.order):
            index, r = divmod(index, K)
            letters.append(r)
        return tuple(reversed(letters))


def extend(d: DistLike, L: int, cap: int = EXTENSION_CAP) -> ExtensionDistribution:
    d = as_distribution(d)
    if isinstance(L, bool) or int(L) != L or L < 1:
        raise DataError(f"extension order must be a positive integer, got {L!r}")
    if d.K ** L > cap:
        raise SizeError(f"extension has {d.K}**{L} entries, above the cap {cap}")
    base = d.array
    probs = np.ones(1)
    for _ in range(L):
        probs = np.multiply.outer(probs, base).ravel()
    return ExtensionDistribution(int(L), d, probs)


@dataclass(frozen=True)
class CodeBook:
    """Prefix-free binary code, one word per symbol index."""

    words: tuple

    def __post_init__(self):
        if not self.words:
            raise DataError("empty codebook")
        for w in self.words:
            if not w or set(w) - {"0", "1"}:
                raise DataError(f"invalid codeword {w!r}")
        ordered = sorted(self.words)
        for a, b in zip(ordered, ordered[1:]):
            if b.startswith(a):
                raise DataError(f"codeword {a!r} is a prefix of {b!r}")

    @property
    def lengths(self) -> tuple:
        return tuple(len(w) for w in self.words)

    @property
    def K(self) -> int:
        return len(self.words)

    def kraft_sum(self) -> float:
        return math.fsum(2.0 ** -n for n in self.lengths)

    def to_json(self) -> str:
        return json.dumps({str(i): w for i, w in enumerate(self.words)})

    @classmethod
    def from_json(cls, text: str) -> "CodeBook":
        raw = json.loads(text)
        try:
            keys = sorted(int(k) for k in raw)
        except (TypeError, ValueError) as exc:
            raise DataError("codebook keys must be symbol indices") from exc
        if keys != list(range(len(keys))):
            raise DataError("codebook must cover symbols 0..K-1")
        return cls(tuple(raw[str(k)] for k in keys))


def huffman(d: DistLike) -> CodeBook:
    """Optimal binary prefix code.

    The two least probable nodes are merged first; ties go to the node
    created earliest (symbols in index order, then merged nodes in merge
    order).  The first node popped takes the ``0`` branch.  A one-symbol
    alphabet gets the word ``"0"``.
    """
    if isinstance(d, (list, tuple, np.ndarray)) and len(d) == 0:
        raise DataError("empty distribution")
    d = as_distribution(d)
    K = d.K
    if K == 1:
        return CodeBook(("0",))

    heap = [(p, i) for i, p in enumerate(d.probs)]
    heapq.heapify(heap)
    children: Dict[int, tuple] = {}
    next_id = itertools.count(K)
    while len(heap) > 1:
        p0, a = heapq.heappop(heap)
        p1, b = heapq.heappop(heap)
        node = next(next_id)
        children[node] = (a, b)
        heapq.heappush(heap, (p0 + p1, node))

    words = [""] * K
    stack = [(heap[0][1], "")]
    while stack:
        node, prefix = stack.pop()
        if node < K:
            words[node] = prefix
        else:
            a, b = children[node]
            stack.append((b, prefix + "1"))
            stack.append((a, prefix + "0"))
    return CodeBook(tuple(words))


def average_length(code: CodeBook, d: DistLike) -> float:
    """Expected codeword length in bits per (coded) symbol."""
    d = as_distribution(d)
    if code.K != d.K:
        raise DataError(f"codebook has {code.K} words, distribution {d.K} symbols")
    return math.fsum(p * n for p, n in zip(d.probs, code.lengths))


def encode(code: CodeBook, symbols: Sequence[int]) -> str:
    words = code.words
    out = []
    for s in symbols:
        if not 0 <= s < len(words):
            raise DataError(f"symbol {s!r} outside the codebook alphabet")
        out.append(words[s])
    return "".join(out)


def decode(code: CodeBook, bits: str) -> List[int]:
    lookup = {w: i for i, w in enumerate(code.words)}
    longest = max(code.lengths)
    out = []
    start = 0
    n = len(bits)
    while start < n:
        for end in range(start + 1, min(start + longest, n) + 1):
            sym = lookup.get(bits[start:end])
            if sym is not None:
                out.append(sym)
                start = end
                break
        else:
            raise CorruptionError(f"undecodable bits at offset {start}")
    return out


def pack_bits(bits: str) -> bytes:
    if set(bits) - {"0", "1"}:
        raise DataError("bit string may only contain '0' and '1'")
    pad = (-(len(bits) + 3)) % 8
    full = bits + "0" * pad + format(pad, "03b")
    return int(full, 2).to_bytes(len(full) // 8, "big")


def unpack_bits(data: bytes) -> str:
    if not data:
        raise CorruptionError("packed stream is empty")
    full = format(int.from_bytes(data, "big"), f"0{8 * len(data)}b")
    pad = int(full[-3:], 2)
    if pad + 3 > len(full) or "1" in full[len(full) - 3 - pad:len(full) - 3]:
        raise CorruptionError("bad padding trailer")
    return full[: len(full) - 3 - pad]
