"""Binary words as bitmask integers and codes as sorted word sets.

Coordinates are numbered 1..n with coordinate 1 rendered leftmost, i.e.
coordinate i lives at bit position n - i of the integer.  Codes are kept
in a normal form (strictly ascending, deduplicated) so that set-level
operations and serialization are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_LENGTH = 31


def bit_of(n: int, coord: int) -> int:
    """Bitmask selecting 1-based coordinate ``coord`` of a length-n word."""
    if not 1 <= coord <= n:
        raise ValueError(f"coordinate {coord} out of range 1..{n}")
    return 1 << (n - coord)


def weight(w: int) -> int:
    """Number of nonzero coordinates."""
    return w.bit_count()


def distance(x: int, y: int) -> int:
    """Hamming distance, the weight of the coordinatewise difference."""
    return (x ^ y).bit_count()


def support(w: int, n: int) -> tuple[int, ...]:
    """1-based coordinates where the word is nonzero."""
    return tuple(i for i in range(1, n + 1) if w >> (n - i) & 1)


def word_from_support(coords, n: int) -> int:
    w = 0
    for i in coords:
        w |= bit_of(n, i)
    return w


def word_to_str(w: int, n: int) -> str:
    return format(w, f"0{n}b")


def word_from_str(s: str) -> tuple[int, int]:
    """Parse a 0/1 string, returning (word, length)."""
    if not s or s.strip("01"):
        raise ValueError(f"not a binary word: {s!r}")
    return int(s, 2), len(s)


def permute_word(w: int, perm, n: int) -> int:
    """Apply a coordinate permutation.

    ``perm`` maps 0-based source coordinate j to 0-based image perm[j];
    the bit at coordinate j+1 moves to coordinate perm[j]+1.
    """
    out = 0
    for j in range(n):
        if w >> (n - 1 - j) & 1:
            out |= 1 << (n - 1 - perm[j])
    return out


@dataclass(frozen=True)
class BinaryCode:
    """A set of equal-length binary words in ascending normal form."""

    n: int
    words: tuple[int, ...]

    def __init__(self, n: int, words):
        if not 1 <= n <= MAX_LENGTH:
            raise ValueError(f"length {n} out of range 1..{MAX_LENGTH}")
        ws = sorted(set(words))
        if ws and (ws[0] < 0 or ws[-1] >= (1 << n)):
            raise ValueError("word out of range for length")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "words", tuple(ws))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: int) -> bool:
        return w in self.word_set

    def __iter__(self):
        return iter(self.words)

    @cached_property
    def word_set(self) -> frozenset[int]:
        return frozenset(self.words)

    @cached_property
    def word_array(self) -> np.ndarray:
        return np.asarray(self.words, dtype=np.int64)

    def translate(self, x: int) -> "BinaryCode":
        return BinaryCode(self.n, [w ^ x for w in self.words])

    def permute(self, perm) -> "BinaryCode":
        return BinaryCode(self.n, [permute_word(w, perm, self.n) for w in self.words])

    def __str__(self) -> str:
        return "\n".join(word_to_str(w, self.n) for w in self.words)


@dataclass(frozen=True)
class DistanceDistribution:
    """counts[i] = number of codewords at distance i from a reference word."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError("negative distance count")

    @property
    def total(self) -> int:
        return sum(self.counts)


def min_distance(code: BinaryCode) -> int:
    if len(code) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    arr = code.word_array
    best = code.n
    for i in range(len(arr) - 1):
        d = int(np.bitwise_count(arr[i + 1:] ^ arr[i]).min())
        if d < best:
            best = d
            if best == 1:
                break
    return best


def distance_distribution(code: BinaryCode, x: int) -> DistanceDistribution:
    counts = [0] * (code.n + 1)
    dists = np.bitwise_count(code.word_array ^ x)
    for d, c in zip(*np.unique(dists, return_counts=True)):
        counts[int(d)] = int(c)
    return DistanceDistribution(tuple(counts))


def is_perfect(code: BinaryCode) -> bool:
    """Whether the radius-1 balls around the codewords tile the full space.

    Sphere packing: if the ball count matches the space size exactly, the
    packing condition (pairwise distance >= 3) already forces a cover.
    """
    if len(code) * (code.n + 1) != 1 << code.n:
        return False
    if len(code) == 1:
        return True
    return min_distance(code) >= 3


def is_self_complementary(code: BinaryCode) -> bool:
    ones = (1 << code.n) - 1
    return all(w ^ ones in code.word_set for w in code.words)


def extend(code: BinaryCode) -> BinaryCode:
    """Append an overall parity coordinate making every word even-weight."""
    return BinaryCode(code.n + 1, [w << 1 | (w.bit_count() & 1) for w in code.words])


def puncture(code: BinaryCode, coord: int) -> BinaryCode:
    """Delete one coordinate, deduplicating the result."""
    if not 1 <= coord <= code.n:
        raise ValueError(f"coordinate {coord} out of range 1..{code.n}")
    p = code.n - coord
    low = (1 << p) - 1
    return BinaryCode(code.n - 1, [(w >> p + 1) << p | (w & low) for w in code.words])


def shorten(code: BinaryCode, coord: int, value: int) -> BinaryCode:
    """Keep the words with the given value at the coordinate, then delete it."""
    if value not in (0, 1):
        raise ValueError("shortening value must be 0 or 1")
    mask = bit_of(code.n, coord)
    kept = BinaryCode(code.n, [w for w in code.words if bool(w & mask) == bool(value)])
    return puncture(kept, coord)
