"""Labeler validation: exhaustive oracles on small codes, invariance
under relabeling, and backend agreement."""

from __future__ import annotations

import itertools
import random

import pytest

from pcodes.canon import canonical_labeling, graph_certificate
from pcodes.equivalence import are_equivalent, are_isomorphic, automorphism_group, code_canonical_form
from pcodes.graphenc import encode_design, graph_from_edges
from pcodes.words import BinaryCode, permute_word


def brute_equivalent(c1: BinaryCode, c2: BinaryCode) -> bool:
    n = c1.n
    for perm in itertools.permutations(range(n)):
        pc = {permute_word(w, perm, n) for w in c2.words}
        for x in range(1 << n):
            if {w ^ x for w in pc} == c1.word_set:
                return True
    return False


def brute_isomorphic(c1: BinaryCode, c2: BinaryCode) -> bool:
    n = c1.n
    return any({permute_word(w, perm, n) for w in c2.words} == c1.word_set
               for perm in itertools.permutations(range(n)))


def brute_aut_order(c: BinaryCode) -> int:
    n = c.n
    return sum(1 for perm in itertools.permutations(range(n))
               for x in range(1 << n)
               if {permute_word(w ^ x, perm, n) for w in c.words} == c.word_set)


def all_small_codes(n: int, max_size: int):
    words = range(1 << n)
    for size in range(1, max_size + 1):
        yield from (BinaryCode(n, c) for c in itertools.combinations(words, size))


def test_equivalence_exhaustive_n2():
    codes = list(all_small_codes(2, 3))
    for c1 in codes:
        for c2 in codes:
            assert are_equivalent(c1, c2) == brute_equivalent(c1, c2)


def test_equivalence_exhaustive_n3_pairs():
    codes = [c for c in all_small_codes(3, 3)]
    rng = random.Random(11)
    pairs = [(rng.choice(codes), rng.choice(codes)) for _ in range(400)]
    # include same-class pairs so both verdicts occur
    for c in codes[::17]:
        perm = list(range(3))
        rng.shuffle(perm)
        pairs.append((c, c.translate(rng.randrange(8)).permute(perm)))
    for c1, c2 in pairs:
        assert are_equivalent(c1, c2) == brute_equivalent(c1, c2)
        assert are_isomorphic(c1, c2) == brute_isomorphic(c1, c2)


@pytest.mark.parametrize("n", [4, 5])
def test_equivalence_sampled(n):
    rng = random.Random(100 + n)
    for _ in range(60):
        size = rng.randrange(1, 5)
        c1 = BinaryCode(n, rng.sample(range(1 << n), size))
        c2 = BinaryCode(n, rng.sample(range(1 << n), size))
        assert are_equivalent(c1, c2) == brute_equivalent(c1, c2)
        perm = list(range(n))
        rng.shuffle(perm)
        image = c1.translate(rng.randrange(1 << n)).permute(perm)
        assert are_equivalent(c1, image)


def test_aut_order_matches_brute_force():
    rng = random.Random(5)
    cases = [BinaryCode(3, [0, 7]), BinaryCode(4, [0b0000, 0b0111, 0b1011, 0b1100])]
    for _ in range(25):
        n = rng.randrange(2, 5)
        cases.append(BinaryCode(n, rng.sample(range(1 << n), rng.randrange(1, 5))))
    for c in cases:
        assert automorphism_group(c).order == brute_aut_order(c)


def test_relabeling_invariance_small_graphs():
    rng = random.Random(42)
    for _ in range(120):
        n = rng.randrange(3, 9)
        edges = {tuple(sorted(rng.sample(range(n), 2)))
                 for _ in range(rng.randrange(1, n * 2))}
        colors = [rng.randrange(2) for _ in range(n)]
        g = graph_from_edges(n, edges, colors)
        ref = graph_certificate(g)
        for _ in range(8):
            relab = list(range(n))
            rng.shuffle(relab)
            redges = [(relab[u], relab[v]) for u, v in edges]
            rcolors = [0] * n
            for v in range(n):
                rcolors[relab[v]] = colors[v]
            g2 = graph_from_edges(n, redges, rcolors)
            assert graph_certificate(g2) == ref


def test_certificate_distinguishes_nonisomorphic():
    path = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert graph_certificate(path) != graph_certificate(star)


def test_encode_layout():
    from pcodes.equivalence import encode

    g = encode(BinaryCode(3, [0b000, 0b111]), "equivalence")
    # 2 codeword + 6 value + 3 hub vertices
    assert g.n == 11
    assert list(g.colors) == [0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2]
    # 6 codeword-value incidences + 6 hub-value + 1 distance-3 pair
    assert g.n_edges == 13
    # each codeword vertex: 3 value neighbors plus its distance-3 partner
    assert g.degree(0) == 4 and g.degree(1) == 4
    assert 1 in set(map(int, g.neighbors(0)))


def test_code_form_header_separates_modes(hamming7):
    eq = code_canonical_form(hamming7, "equivalence")
    iso = code_canonical_form(hamming7, "isomorphism")
    assert eq.payload != iso.payload
    assert len(eq.hexdigest) == 64 and eq.hexdigest == eq.hexdigest.lower()


def test_design_certificates():
    fano = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]
    g = encode_design(7, fano)
    res = canonical_labeling(g)
    from pcodes.groups import group_order

    assert group_order(g.n, res.generators) == 168


def test_labeling_returns_valid_automorphisms(hamming7):
    from pcodes.equivalence import encode

    g = encode(hamming7, "equivalence")
    res = canonical_labeling(g)
    adj = {v: set(map(int, g.neighbors(v))) for v in range(g.n)}
    for gamma in res.generators:
        assert sorted(map(int, gamma)) == list(range(g.n))
        for v in range(g.n):
            assert {int(gamma[u]) for u in adj[v]} == adj[int(gamma[v])]
        assert all(g.colors[int(gamma[v])] == g.colors[v] for v in range(g.n))
