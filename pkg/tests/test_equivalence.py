from __future__ import annotations

import random

import numpy as np
import pytest

from pcodes.equivalence import (
    apply_code_map,
    automorphism_group,
    embedded_code_from_symmetries,
    isomorphism_classes_in_equivalence_class,
    min_distance_graph,
    symmetry_generators,
)
from pcodes.words import BinaryCode, is_perfect


def test_generators_map_code_to_itself(hamming7):
    rep = automorphism_group(hamming7)
    for perm, x in rep.generators:
        assert apply_code_map(perm, x, hamming7) == hamming7


def test_small_code_group():
    c = BinaryCode(3, [0b000, 0b111])
    rep = automorphism_group(c)
    assert rep.order == 12
    assert rep.symmetry_order == 6
    assert rep.codeword_orbit_sizes == (2,)
    assert isomorphism_classes_in_equivalence_class(c) == 2


def test_translate_only_equivalence():
    from pcodes.equivalence import are_equivalent, are_isomorphic

    zero = BinaryCode(7, [0])
    ones = BinaryCode(7, [127])
    assert are_equivalent(zero, ones)
    assert not are_isomorphic(zero, ones)


def test_h7_group(hamming7):
    rep = automorphism_group(hamming7)
    assert rep.order == 2688  # 16 kernel translations x 168 symmetries
    assert rep.symmetry_order == 168
    assert rep.codeword_orbit_sizes == (16,)
    assert rep.coordinate_fixed_count == 0


def test_translate_isomorphism_iff_same_orbit_small(hamming7):
    # orbit characterization of isomorphic translates, small-scale
    from pcodes.equivalence import are_isomorphic, encode, _generator_to_code_map
    from pcodes.equivalence import canonical_labeling, apply_code_map_to_word

    g = encode(hamming7, "equivalence")
    res = canonical_labeling(g)
    maps = [_generator_to_code_map(g, gen) for gen in res.generators]
    parent = list(range(128))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for perm, x in maps:
        for w in range(128):
            a, b = find(w), find(apply_code_map_to_word(perm, x, w, 7))
            if a != b:
                parent[a] = b
    rng = random.Random(17)
    for _ in range(40):
        x, y = rng.randrange(128), rng.randrange(128)
        same_orbit = find(x) == find(y)
        iso = are_isomorphic(hamming7.translate(x), hamming7.translate(y))
        assert iso == same_orbit


def test_embedded_code_identity(hamming15):
    ident = [tuple(range(15))]
    assert embedded_code_from_symmetries(hamming15, ident) == hamming15


def test_embedded_code_from_symmetry_subgroups(hamming7):
    syms = symmetry_generators(hamming7)
    assert syms
    for p in syms:
        fixed = [c for c in range(7) if p[c] == c]
        if not fixed:
            continue
        sub = embedded_code_from_symmetries(hamming7, [p])
        assert is_perfect(sub)
        assert sub.n == len(fixed)
        assert sub.n in (1, 3, 7)


def test_embedded_code_rejects_non_symmetry(hamming7):
    bad = list(range(7))
    bad[0], bad[1] = 1, 0
    bad = tuple(bad)
    if hamming7.permute(bad) != hamming7:
        with pytest.raises(ValueError):
            embedded_code_from_symmetries(hamming7, [bad])


def test_min_distance_graph(hamming7, hamming15):
    g7 = min_distance_graph(hamming7)
    degs = np.diff(g7.indptr)
    assert g7.n == 16 and set(map(int, degs)) == {7}
    g = min_distance_graph(BinaryCode(4, [0b0000, 0b1111]))
    assert g.n == 2 and g.n_edges == 1
    g15 = min_distance_graph(hamming15)
    assert g15.n == 2048
    assert set(map(int, np.diff(g15.indptr))) == {35}


@pytest.mark.slow
def test_min_distance_graph_aut_matches_code_aut(hamming15, aut_h15):
    # the code group and its minimum distance graph group coincide here
    from pcodes.canon import canonical_labeling
    from pcodes.groups import group_order

    g = min_distance_graph(hamming15)
    res = canonical_labeling(g)
    assert group_order(g.n, res.generators) == aut_h15.order
