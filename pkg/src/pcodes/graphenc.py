"""Colored-graph encodings whose automorphisms mirror code maps.

Each coordinate becomes a gadget: one hub vertex joined to one value
vertex per alphabet symbol; every codeword vertex is joined to the value
vertex it selects in each coordinate.  With the value vertices of a
coordinate sharing a color, graph automorphisms are exactly the pairs
(coordinate permutation, per-coordinate value permutation); splitting the
binary value colors restricts them to plain coordinate permutations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MODE_EQUIVALENCE = "equivalence"
MODE_ISOMORPHISM = "isomorphism"


@dataclass
class ColoredGraph:
    """Undirected graph in CSR form with integer vertex colors."""

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    colors: np.ndarray
    kind: str = "graph"
    meta: dict = field(default_factory=dict)

    @property
    def n_edges(self) -> int:
        return len(self.indices) // 2

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]


def graph_from_edges(n: int, edges, colors=None, kind: str = "graph", meta=None) -> ColoredGraph:
    deg = np.zeros(n, dtype=np.int32)
    es = [(int(u), int(v)) for u, v in edges]
    for u, v in es:
        if u == v:
            raise ValueError("self-loops not supported")
        deg[u] += 1
        deg[v] += 1
    indptr = np.zeros(n + 1, dtype=np.int32)
    np.cumsum(deg, out=indptr[1:])
    indices = np.zeros(len(es) * 2, dtype=np.int32)
    fill = indptr[:-1].copy()
    for u, v in es:
        indices[fill[u]] = v
        fill[u] += 1
        indices[fill[v]] = u
        fill[v] += 1
    if colors is None:
        cols = np.zeros(n, dtype=np.int32)
    else:
        cols = np.asarray(colors, dtype=np.int32)
    return ColoredGraph(n, indptr, indices, cols, kind, dict(meta or {}))


def encode_code(code, mode: str = MODE_EQUIVALENCE) -> ColoredGraph:
    """Encode a binary code; see module docstring for the gadget layout.

    Vertex layout: codewords, then value vertices (two per coordinate,
    value 0 first), then hubs.  Colors: codewords 0; values 1 (or 1/2
    split by value in isomorphism mode); hubs last.

    Codeword vertices at Hamming distance exactly 3 are also joined
    directly.  The relation is preserved by every coordinate permutation
    and translation, so the automorphism group is unchanged, but the
    extra layer lets color refinement separate codeword vertices by
    their distance-3 structure, which shrinks search trees enormously
    for one-error-correcting codes.
    """
    import numpy as np

    from .words import BinaryCode

    assert isinstance(code, BinaryCode)
    if not code.words:
        raise ValueError("cannot encode an empty code")
    if mode not in (MODE_EQUIVALENCE, MODE_ISOMORPHISM):
        raise ValueError(f"unknown mode {mode!r}")
    m, n = len(code), code.n
    value_base = m
    hub_base = m + 2 * n
    total = hub_base + n
    edges = []
    for ci, w in enumerate(code.words):
        for coord in range(n):
            bit = w >> (n - 1 - coord) & 1
            edges.append((ci, value_base + 2 * coord + bit))
    for coord in range(n):
        hub = hub_base + coord
        edges.append((hub, value_base + 2 * coord))
        edges.append((hub, value_base + 2 * coord + 1))
    arr = code.word_array
    for i in range(m - 1):
        for j in np.nonzero(np.bitwise_count(arr[i + 1:] ^ arr[i]) == 3)[0]:
            edges.append((i, i + 1 + int(j)))
    colors = np.zeros(total, dtype=np.int32)
    if mode == MODE_EQUIVALENCE:
        colors[value_base:hub_base] = 1
        colors[hub_base:] = 2
    else:
        for coord in range(n):
            colors[value_base + 2 * coord] = 1
            colors[value_base + 2 * coord + 1] = 2
        colors[hub_base:] = 3
    meta = {
        "n": n,
        "m": m,
        "mode": mode,
        "value_base": value_base,
        "hub_base": hub_base,
        "alphabets": (2,) * n,
    }
    return graph_from_edges(total, edges, colors, kind="code", meta=meta)


def encode_mixed_code(code) -> ColoredGraph:
    """Encode a mixed-alphabet code; coordinate colors depend on q only."""
    sizes = code.alphabet
    m, k = len(code.words), len(sizes)
    value_base = m
    offsets = []
    off = value_base
    for q in sizes:
        offsets.append(off)
        off += q
    hub_base = off
    total = hub_base + k
    edges = []
    for ci, digits in enumerate(code.words):
        for coord, d in enumerate(digits):
            edges.append((ci, offsets[coord] + d))
    for coord, q in enumerate(sizes):
        hub = hub_base + coord
        for d in range(q):
            edges.append((hub, offsets[coord] + d))
    # Color classes: codewords, then one value color and one hub color per
    # distinct alphabet size, so only same-size coordinates can swap.
    distinct = sorted(set(sizes))
    value_color = {q: 1 + i for i, q in enumerate(distinct)}
    hub_color = {q: 1 + len(distinct) + i for i, q in enumerate(distinct)}
    colors = np.zeros(total, dtype=np.int32)
    for coord, q in enumerate(sizes):
        colors[offsets[coord]:offsets[coord] + q] = value_color[q]
        colors[hub_base + coord] = hub_color[q]
    meta = {
        "m": m,
        "mode": MODE_EQUIVALENCE,
        "value_base": value_base,
        "hub_base": hub_base,
        "offsets": tuple(offsets),
        "alphabets": tuple(sizes),
    }
    return graph_from_edges(total, edges, colors, kind="mixed", meta=meta)


def encode_design(v: int, blocks) -> ColoredGraph:
    """Point-block incidence graph of a set system on points 1..v."""
    blocks = [tuple(sorted(b)) for b in blocks]
    edges = []
    for bi, blk in enumerate(blocks):
        for p in blk:
            if not 1 <= p <= v:
                raise ValueError(f"point {p} out of range 1..{v}")
            edges.append((p - 1, v + bi))
    colors = np.zeros(v + len(blocks), dtype=np.int32)
    colors[v:] = 1
    meta = {"v": v, "n_blocks": len(blocks), "block_sizes": tuple(sorted(len(b) for b in blocks))}
    return graph_from_edges(v + len(blocks), edges, colors, kind="design", meta=meta)
