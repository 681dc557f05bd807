"""Code equivalence, isomorphism, and automorphism groups.

Codes are encoded as colored gadget graphs (see :mod:`pcodes.graphenc`);
graph automorphisms correspond exactly to code automorphisms, and the
canonical labeling yields a canonical representative code, serialized as
the certificate.  Certificates therefore compare equal precisely for
equivalent (resp. isomorphic) codes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .canon import CanonicalForm, LabelingResult, canonical_labeling
from .graphenc import (
    MODE_EQUIVALENCE,
    MODE_ISOMORPHISM,
    ColoredGraph,
    encode_code,
    graph_from_edges,
)
from .words import BinaryCode, min_distance, permute_word

_HEADERS = {MODE_EQUIVALENCE: b"PCE1", MODE_ISOMORPHISM: b"PCI1"}


def _extract_canonical_code(graph: ColoredGraph, result: LabelingResult) -> BinaryCode:
    """Read the canonical representative code off the winning labeling.

    Canonical coordinate order is the hub position order; within a
    coordinate the value vertex at the smaller position denotes 0.  The
    output depends only on the relabeled graph, so equal certificates
    mean equivalent codes and vice versa.
    """
    meta = graph.meta
    n, m = meta["n"], meta["m"]
    value_base, hub_base = meta["value_base"], meta["hub_base"]
    pos = result.position
    hubs = sorted(range(n), key=lambda c: pos[hub_base + c])
    words = []
    for ci in range(m):
        w = 0
        for rank, coord in enumerate(hubs):
            v0 = pos[value_base + 2 * coord]
            v1 = pos[value_base + 2 * coord + 1]
            bit = 1 if v1 < v0 else 0
            # bit value seen by this codeword at the canonical coordinate
            orig = graph.meta["words"][ci] >> (n - 1 - coord) & 1
            w |= (orig ^ bit) << (n - 1 - rank)
        words.append(w)
    return BinaryCode(n, words)


def encode(code: BinaryCode, mode: str = MODE_EQUIVALENCE) -> ColoredGraph:
    g = encode_code(code, mode)
    g.meta["words"] = code.words
    return g


def canonical_form(graph: ColoredGraph, result: LabelingResult | None = None) -> CanonicalForm:
    """Certificate of a code graph: header plus canonical representative."""
    if graph.kind != "code":
        raise ValueError("canonical_form expects a code graph; see graph_certificate")
    if result is None:
        result = canonical_labeling(graph)
    rep = _extract_canonical_code(graph, result)
    head = _HEADERS[graph.meta["mode"]]
    head += graph.meta["n"].to_bytes(1, "big") + graph.meta["m"].to_bytes(4, "big")
    body = b"".join(w.to_bytes(4, "big") for w in rep.words)
    return CanonicalForm(head + body)


def code_canonical_form(code: BinaryCode, mode: str = MODE_EQUIVALENCE) -> CanonicalForm:
    return canonical_form(encode(code, mode))


def are_equivalent(c1: BinaryCode, c2: BinaryCode) -> bool:
    """Whether some coordinate permutation plus translation maps c2 to c1."""
    if c1.n != c2.n:
        raise ValueError("length mismatch")
    if len(c1) != len(c2):
        return False
    return code_canonical_form(c1, MODE_EQUIVALENCE) == code_canonical_form(c2, MODE_EQUIVALENCE)


def are_isomorphic(c1: BinaryCode, c2: BinaryCode) -> bool:
    """Whether some coordinate permutation alone maps c2 to c1."""
    if c1.n != c2.n:
        raise ValueError("length mismatch")
    if len(c1) != len(c2):
        return False
    return code_canonical_form(c1, MODE_ISOMORPHISM) == code_canonical_form(c2, MODE_ISOMORPHISM)


@dataclass(frozen=True)
class AutGroupReport:
    """Automorphism group of a code under permutation plus translation."""

    order: int
    generators: tuple[tuple[tuple[int, ...], int], ...]  # (coordinate perm, translation)
    codeword_orbit_sizes: tuple[int, ...]
    coordinate_fixed_count: int
    symmetry_order: int

    @property
    def orbit_multiset(self) -> dict[int, int]:
        return dict(Counter(self.codeword_orbit_sizes))


def _generator_to_code_map(graph: ColoredGraph, gamma) -> tuple[tuple[int, ...], int]:
    """Convert a graph automorphism into a (coordinate perm, translation)."""
    meta = graph.meta
    n = meta["n"]
    value_base, hub_base = meta["value_base"], meta["hub_base"]
    perm = [0] * n
    x = 0
    for coord in range(n):
        img_hub = int(gamma[hub_base + coord])
        perm[coord] = img_hub - hub_base
        img_v0 = int(gamma[value_base + 2 * coord])
        bit = (img_v0 - value_base) & 1
        if bit:
            x |= 1 << (n - 1 - coord)
    return tuple(perm), x


def apply_code_map(perm, x: int, code: BinaryCode) -> BinaryCode:
    return code.translate(x).permute(perm)


def apply_code_map_to_word(perm, x: int, w: int, n: int) -> int:
    return permute_word(w ^ x, perm, n)


def automorphism_group(code: BinaryCode) -> AutGroupReport:
    """Exact order, generators, codeword orbits, and symmetry data."""
    from .groups import fixed_points, group_order, orbits

    g_eq = encode(code, MODE_EQUIVALENCE)
    res_eq = canonical_labeling(g_eq)
    order = group_order(g_eq.n, res_eq.generators)
    code_gens = tuple(_generator_to_code_map(g_eq, gamma) for gamma in res_eq.generators)
    orbit_sizes = tuple(sorted(
        len(o) for o in orbits(len(code), res_eq.generators)
        if o and o[0] < len(code)
    ))

    g_iso = encode(code, MODE_ISOMORPHISM)
    res_iso = canonical_labeling(g_iso)
    sym_order = group_order(g_iso.n, res_iso.generators)
    hub_base = g_iso.meta["hub_base"]
    fixed = fixed_points(g_iso.n, res_iso.generators)
    fixed_coords = sum(1 for v in fixed if v >= hub_base)

    return AutGroupReport(
        order=order,
        generators=code_gens,
        codeword_orbit_sizes=orbit_sizes,
        coordinate_fixed_count=fixed_coords,
        symmetry_order=sym_order,
    )


def symmetry_generators(code: BinaryCode) -> list[tuple[int, ...]]:
    """Generators of the permutation-only automorphism group."""
    g_iso = encode(code, MODE_ISOMORPHISM)
    res = canonical_labeling(g_iso)
    hub_base = g_iso.meta["hub_base"]
    out = []
    for gamma in res.generators:
        out.append(tuple(int(gamma[hub_base + c]) - hub_base for c in range(code.n)))
    return out


def isomorphism_classes_in_equivalence_class(code: BinaryCode) -> int:
    """Number of orbits of the automorphism group on the whole space.

    By the orbit characterization of isomorphic translates, this equals
    the number of isomorphism classes among all permuted translates.
    """
    g_eq = encode(code, MODE_EQUIVALENCE)
    res = canonical_labeling(g_eq)
    maps = [_generator_to_code_map(g_eq, gamma) for gamma in res.generators]
    n = code.n
    size = 1 << n
    parent = list(range(size))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for perm, x in maps:
        for w in range(size):
            a, b = find(w), find(apply_code_map_to_word(perm, x, w, n))
            if a != b:
                parent[a] = b
    return sum(1 for w in range(size) if find(w) == w)


def embedded_code_from_symmetries(code: BinaryCode, perms) -> BinaryCode:
    """Restrict to the coordinates fixed by every given symmetry.

    Each permutation must map the code onto itself; the words supported
    on the common fixed coordinates, with all moved coordinates deleted,
    again tile their smaller space.
    """
    n = code.n
    for p in perms:
        if code.permute(p) != code:
            raise ValueError("permutation does not fix the code")
    fixed = [c for c in range(n) if all(p[c] == c for p in perms)]
    if not fixed:
        raise ValueError("no coordinate is fixed by the whole group")
    moved_mask = 0
    for c in range(n):
        if c not in fixed:
            moved_mask |= 1 << (n - 1 - c)
    words = []
    for w in code.words:
        if w & moved_mask:
            continue
        out = 0
        for rank, c in enumerate(fixed):
            out |= (w >> (n - 1 - c) & 1) << (len(fixed) - 1 - rank)
        words.append(out)
    return BinaryCode(len(fixed), words)


def min_distance_graph(code: BinaryCode) -> ColoredGraph:
    """One vertex per codeword, one edge per pair at the minimum distance."""
    if len(code) < 2:
        raise ValueError("need at least two codewords")
    d = min_distance(code)
    arr = code.word_array
    edges = []
    for i in range(len(arr) - 1):
        hits = np.nonzero(np.bitwise_count(arr[i + 1:] ^ arr[i]) == d)[0]
        edges.extend((i, i + 1 + int(j)) for j in hits)
    g = graph_from_edges(len(arr), edges, kind="mindist",
                         meta={"min_distance": d, "n": code.n})
    return g
