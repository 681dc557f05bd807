"""Krawtchouk polynomials, the MacWilliams transform, and OA strength.

All arithmetic is exact: Krawtchouk values are integers and transform
entries are fractions, so no tolerance policy is needed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

import numpy as np

from .words import BinaryCode, DistanceDistribution, is_perfect, min_distance, puncture


def krawtchouk(n: int, j: int, i: int) -> int:
    """Value of the binary Krawtchouk polynomial P_j(i) for length n."""
    if not (0 <= j <= n and 0 <= i <= n):
        raise ValueError("indices out of range")
    return sum((-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


@dataclass(frozen=True)
class TransformVector:
    entries: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)

    def as_ints(self) -> tuple[int, ...]:
        if any(e.denominator != 1 for e in self.entries):
            raise ValueError("transform entries are not integral")
        return tuple(int(e) for e in self.entries)


def macwilliams_transform(dist: DistanceDistribution, code_size: int) -> TransformVector:
    """A'_k = (1/|C|) * sum_i A_i P_k(i), computed over the rationals."""
    counts = dist.counts
    n = len(counts) - 1
    if sum(counts) != code_size:
        raise ValueError("distribution does not sum to the code size")
    entries = []
    for k in range(n + 1):
        acc = Fraction(0)
        for i, a in enumerate(counts):
            if a:
                acc += Fraction(a) * krawtchouk(n, k, i)
        entries.append(acc / code_size)
    return TransformVector(tuple(entries))


def code_distance_distribution(code: BinaryCode):
    """Average distance distribution A_i = #pairs at distance i / |C|."""
    n, m = code.n, len(code)
    arr = code.word_array
    counts = np.zeros(n + 1, dtype=np.int64)
    counts[0] = m
    for i in range(m - 1):
        d = np.bitwise_count(arr[i + 1:] ^ arr[i])
        counts += 2 * np.bincount(d, minlength=n + 1)
    return DistanceDistribution(tuple(Fraction(int(c), m) for c in counts))


def oa_strength(code: BinaryCode, method: str = "transform") -> int:
    """Largest t such that every t-coordinate projection is balanced.

    The default route goes through the MacWilliams transform of the
    average distance distribution; ``method="projection"`` counts the
    projections directly as an independent check.
    """
    if not code.words:
        raise ValueError("empty code")
    if method == "projection":
        return _oa_strength_projection(code)
    if method != "transform":
        raise ValueError(f"unknown method {method!r}")
    dist = code_distance_distribution(code)
    vec = macwilliams_transform(dist, len(code))
    t = 0
    while t + 1 <= code.n and vec[t + 1] == 0:
        t += 1
    return t


def _oa_strength_projection(code: BinaryCode) -> int:
    n = code.n
    for t in range(1, n + 1):
        lam, rem = divmod(len(code), 1 << t)
        if rem or not _projections_balanced(code, t, lam):
            return t - 1
    return n


def _projections_balanced(code: BinaryCode, t: int, lam: int) -> bool:
    for coords in combinations(range(code.n), t):
        counts = {}
        for w in code.words:
            key = tuple(w >> (code.n - 1 - c) & 1 for c in coords)
            counts[key] = counts.get(key, 0) + 1
        if len(counts) != 1 << t or any(v != lam for v in counts.values()):
            return False
    return True


@dataclass(frozen=True)
class OaPerfectVerdict:
    """Both sides of the OA/perfect-code correspondence on one instance."""

    n: int
    extended: bool
    strength_side: bool
    perfect_side: bool

    @property
    def holds(self) -> bool:
        return self.strength_side == self.perfect_side


def is_extended_perfect(code: BinaryCode) -> bool:
    """Whether the code is an overall-parity extension of a perfect code."""
    if len(code) < 2 or code.n < 2:
        return False
    if min_distance(code) != 4:
        return False
    punctured = puncture(code, code.n)
    return len(punctured) == len(code) and is_perfect(punctured)


def oa_perfect_correspondence(code: BinaryCode) -> OaPerfectVerdict:
    """Check strength >= (n-1)/2 against perfectness on this instance."""
    n = code.n
    if (n + 1) & n == 0:  # n = 2^m - 1
        extended = False
        m = n.bit_length()
        t = (n - 1) // 2
    elif n & (n - 1) == 0:  # n = 2^m
        extended = True
        m = n.bit_length() - 1
        t = (n - 2) // 2
    else:
        raise ValueError("length must be 2^m - 1 or 2^m")
    lam = 1 << ((1 << m - 1) - m)
    if len(code) != lam * (1 << t):
        raise ValueError("code size does not match the correspondence parameters")
    strength_side = oa_strength(code) >= t
    perfect_side = is_extended_perfect(code) if extended else is_perfect(code)
    return OaPerfectVerdict(n=n, extended=extended,
                            strength_side=strength_side, perfect_side=perfect_side)


def all_binary_words(t: int):
    return product((0, 1), repeat=t)
