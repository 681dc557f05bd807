"""Steiner systems extracted from codes, and the distance-3 hypergraph.

Blocks are sorted tuples of 1-based points.  Designs canonicalize via
the point-block incidence graph, reusing the graph labeler.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .canon import CanonicalForm, graph_certificate
from .graphenc import encode_design
from .words import BinaryCode, is_perfect, support


@dataclass(frozen=True)
class TripleSystem:
    """Every pair of points lies in exactly one block."""

    v: int
    blocks: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        _check_cover(self.v, self.blocks, 2)


@dataclass(frozen=True)
class QuadSystem:
    """Every triple of points lies in exactly one block."""

    v: int
    blocks: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        _check_cover(self.v, self.blocks, 3)


@dataclass(frozen=True)
class Hypergraph3:
    """A set of 3-subsets of 1..v, no cover condition imposed."""

    v: int
    triples: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.triples)


def _check_cover(v: int, blocks, t: int) -> None:
    seen = set()
    for blk in blocks:
        if len(set(blk)) != len(blk) or min(blk) < 1 or max(blk) > v:
            raise ValueError(f"bad block {blk}")
        for sub in combinations(sorted(blk), t):
            if sub in seen:
                raise ValueError(f"{t}-subset {sub} covered twice")
            seen.add(sub)
    expected = len(list(combinations(range(v), t)))
    if len(seen) != expected:
        raise ValueError(f"only {len(seen)} of {expected} {t}-subsets covered")


def _weight_words(code: BinaryCode, x: int, w: int) -> list[int]:
    arr = code.word_array
    hits = np.nonzero(np.bitwise_count(arr ^ x) == w)[0]
    return [int(arr[i]) ^ x for i in hits]


def sts_of(code: BinaryCode, x: int) -> TripleSystem:
    """Steiner triple system formed by the weight-3 words of C + x."""
    if x not in code:
        raise ValueError("reference word is not a codeword")
    if not is_perfect(code):
        raise ValueError("code is not perfect")
    blocks = sorted(support(w, code.n) for w in _weight_words(code, x, 3))
    return TripleSystem(code.n, tuple(blocks))


def sqs_of(code: BinaryCode, x: int) -> QuadSystem:
    """Steiner quadruple system from the weight-4 words of an extension."""
    from .transforms import is_extended_perfect

    if x not in code:
        raise ValueError("reference word is not a codeword")
    if not is_extended_perfect(code):
        raise ValueError("code is not an extended perfect code")
    blocks = sorted(support(w, code.n) for w in _weight_words(code, x, 4))
    return QuadSystem(code.n, tuple(blocks))


def st_set(code: BinaryCode) -> Hypergraph3:
    """Difference supports over all codeword pairs at distance 3."""
    arr = code.word_array
    n = code.n
    supports = set()
    for i in range(len(arr) - 1):
        diffs = arr[i + 1:] ^ arr[i]
        for j in np.nonzero(np.bitwise_count(diffs) == 3)[0]:
            supports.add(support(int(diffs[j]), n))
    return Hypergraph3(n, tuple(sorted(supports)))


def independence_number(h: Hypergraph3) -> int:
    """Largest point subset containing no triple, by branch and bound."""
    v = h.v
    masks = [sum(1 << (p - 1) for p in t) for t in h.triples]
    if not masks:
        return v
    degree = [0] * (v + 1)
    for t in h.triples:
        for p in t:
            degree[p] += 1
    points = sorted(range(1, v + 1), key=lambda p: -degree[p])
    best = 0

    def grow(idx: int, chosen_mask: int, chosen_count: int) -> None:
        nonlocal best
        if chosen_count + (v - idx) <= best:
            return
        if idx == v:
            best = max(best, chosen_count)
            return
        p = points[idx]
        cand = chosen_mask | (1 << (p - 1))
        if all((m & cand) != m for m in masks):
            grow(idx + 1, cand, chosen_count + 1)
        grow(idx + 1, chosen_mask, chosen_count)

    grow(0, 0, 0)
    return best


def is_systematic(code: BinaryCode) -> bool:
    """Whether some k coordinates carry all 2^k projections, |C| = 2^k."""
    m = len(code)
    if m & (m - 1):
        raise ValueError("code size is not a power of two")
    k = m.bit_length() - 1
    n = code.n
    if k > n:
        return False
    if k == n:
        return m == 1 << n
    for complement in combinations(range(n), n - k):
        drop = 0
        for c in complement:
            drop |= 1 << (n - 1 - c)
        keep = ((1 << n) - 1) ^ drop
        seen = set()
        ok = True
        for w in code.words:
            key = w & keep
            if key in seen:
                ok = False
                break
            seen.add(key)
        if ok:
            return True
    return False


def design_certificate(v: int, blocks) -> CanonicalForm:
    return graph_certificate(encode_design(v, blocks))


def design_isomorphism_classes(designs) -> list[list[int]]:
    """Partition indices of equal-type designs by canonical form."""
    designs = list(designs)
    if not designs:
        return []
    kinds = {(d.v, len(d.blocks[0]) if d.blocks else 0) for d in designs}
    if len(kinds) > 1:
        raise ValueError("designs of mixed type or order")
    by_blocks: dict[tuple, list[int]] = {}
    for i, d in enumerate(designs):
        by_blocks.setdefault(tuple(d.blocks), []).append(i)
    classes: dict[bytes, list[int]] = {}
    for blocks, idxs in by_blocks.items():
        cert = design_certificate(designs[idxs[0]].v, blocks)
        classes.setdefault(cert.payload, []).extend(idxs)
    return [sorted(ix) for ix in sorted(classes.values(), key=min)]
