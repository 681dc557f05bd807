"""Perfect codes over mixed power-of-two alphabets.

Quaternary coordinates arise by folding codeword pairs that differ by a
weight-3 kernel word: the three binary coordinates collapse to one
4-ary digit via the fixed pair table {000,111} -> 0, {001,110} -> 1,
{010,101} -> 2, {100,011} -> 3.  8-ary codes of the shape studied here
are assembled from partitions of the length-7 space into perfect codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import CanonicalForm, canonical_labeling
from .graphenc import encode_mixed_code
from .words import BinaryCode, support, weight

_PAIR_TO_DIGIT = {(0, 0, 0): 0, (1, 1, 1): 0,
                  (0, 0, 1): 1, (1, 1, 0): 1,
                  (0, 1, 0): 2, (1, 0, 1): 2,
                  (1, 0, 0): 3, (0, 1, 1): 3}
_DIGIT_TO_PAIR = {0: (0, 0, 0), 1: (0, 0, 1), 2: (0, 1, 0), 3: (1, 0, 0)}


def check_alphabet(sizes) -> tuple[int, ...]:
    sizes = tuple(int(q) for q in sizes)
    if not sizes:
        raise ValueError("empty alphabet")
    for q in sizes:
        if q not in (2, 4, 8, 16):
            raise ValueError(f"alphabet size {q} not a supported power of two")
    return sizes


def perfect_alphabet_compatible(sizes) -> bool:
    """Pairwise constraint on large alphabets for radius-1 perfect codes."""
    logs = [q.bit_length() - 1 for q in sizes if q > 2]
    return all(a + b <= 4 for a, b in combinations(logs, 2))


@dataclass(frozen=True)
class MixedCode:
    """Sorted words over a per-coordinate alphabet vector."""

    alphabet: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]

    def __init__(self, alphabet, words):
        alphabet = check_alphabet(alphabet)
        ws = sorted(set(tuple(int(d) for d in w) for w in words))
        for w in ws:
            if len(w) != len(alphabet):
                raise ValueError("word length does not match alphabet")
            if any(d < 0 or d >= q for d, q in zip(w, alphabet)):
                raise ValueError(f"digit out of range in {w}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "words", tuple(ws))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)


def mixed_distance(a, b) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def mixed_min_distance(code: MixedCode) -> int:
    best = len(code.alphabet)
    ws = code.words
    for i in range(len(ws) - 1):
        for j in range(i + 1, len(ws)):
            d = mixed_distance(ws[i], ws[j])
            if d < best:
                best = d
                if best == 1:
                    return best
    return best


def mixed_is_perfect(code: MixedCode) -> bool:
    """Sphere-packing count plus minimum distance 3 over the mixed metric."""
    # radius-1 perfect codes cannot pair two large alphabets; reject early
    if not perfect_alphabet_compatible(code.alphabet):
        return False
    space = 1
    for q in code.alphabet:
        space *= q
    ball = 1 + sum(q - 1 for q in code.alphabet)
    if len(code) * ball != space:
        return False
    if len(code) < 2:
        return True
    return mixed_min_distance(code) >= 3


def disjoint_kernel_triples(code: BinaryCode, t: int) -> list[tuple[int, ...]]:
    """All t-sets of weight-3 kernel words with pairwise disjoint supports."""
    from .gf2 import kernel

    if t < 1:
        raise ValueError("t must be positive")
    triples = [w for w in kernel(code).elements.words if weight(w) == 3]
    out: list[tuple[int, ...]] = []

    def grow(start: int, chosen: list[int], used_mask: int) -> None:
        if len(chosen) == t:
            out.append(tuple(chosen))
            return
        for idx in range(start, len(triples)):
            w = triples[idx]
            if w & used_mask:
                continue
            chosen.append(w)
            grow(idx + 1, chosen, used_mask | w)
            chosen.pop()

    grow(0, [], 0)
    return out


def quaternary_compress(code: BinaryCode, triples) -> MixedCode:
    """Fold each kernel triple into one 4-ary digit; binary block follows."""
    from .gf2 import kernel

    n = code.n
    triples = tuple(triples)
    ker = kernel(code).elements.word_set
    used = 0
    for w in triples:
        if weight(w) != 3:
            raise ValueError("triple word must have weight 3")
        if w not in ker:
            raise ValueError("triple word is not in the kernel")
        if w & used:
            raise ValueError("triple supports are not disjoint")
        used |= w
    # quaternary digits ordered by leading coordinate of their support
    ordered = sorted(triples, key=lambda w: support(w, n))
    supports = [support(w, n) for w in ordered]
    binary_coords = [c for c in range(1, n + 1) if not used >> (n - c) & 1]
    alphabet = (4,) * len(ordered) + (2,) * len(binary_coords)
    words = set()
    for w in code.words:
        digits = []
        for sup in supports:
            bits = tuple(w >> (n - c) & 1 for c in sup)
            digits.append(_PAIR_TO_DIGIT[bits])
        for c in binary_coords:
            digits.append(w >> (n - c) & 1)
        words.add(tuple(digits))
    out = MixedCode(alphabet, words)
    if len(out) * (1 << len(ordered)) != len(code):
        raise ValueError("folding did not pair up the codewords")
    return out


def quaternary_decompress(mixed: MixedCode, triples, n: int) -> BinaryCode:
    """Exact inverse of the compression for the same triple layout."""
    triples = tuple(triples)
    ordered = sorted(triples, key=lambda w: support(w, n))
    supports = [support(w, n) for w in ordered]
    used = 0
    for w in ordered:
        used |= w
    binary_coords = [c for c in range(1, n + 1) if not used >> (n - c) & 1]
    t = len(ordered)
    if mixed.alphabet != (4,) * t + (2,) * len(binary_coords):
        raise ValueError("alphabet does not match the triple layout")
    # a folded digit stands for the value pair {pattern, complement}, so a
    # mixed word expands to all 2^t combinations across its digits
    words = []
    for digits in mixed.words:
        combos = [0]
        for sup, d in zip(supports, digits[:t]):
            bits = _DIGIT_TO_PAIR[d]
            alts = []
            for base in combos:
                v0 = base
                v1 = base
                for c, b in zip(sup, bits):
                    v0 |= b << (n - c)
                    v1 |= (1 - b) << (n - c)
                alts.extend((v0, v1))
            combos = alts
        tail = 0
        for c, b in zip(binary_coords, digits[t:]):
            tail |= b << (n - c)
        words.extend(v | tail for v in combos)
    return BinaryCode(n, words)


def mixed_canonical_form(code: MixedCode) -> CanonicalForm:
    """Certificate equal iff the mixed codes are equivalent.

    Equivalence permutes coordinates of equal alphabet size and relabels
    values within each coordinate; both are exactly the color-preserving
    automorphisms of the gadget encoding.
    """
    graph = encode_mixed_code(code)
    result = canonical_labeling(graph)
    meta = graph.meta
    pos = result.position
    k = len(code.alphabet)
    hub_base = meta["hub_base"]
    offsets = meta["offsets"]
    order = sorted(range(k), key=lambda c: pos[hub_base + c])
    digit_rank = []
    for c in range(k):
        q = code.alphabet[c]
        ranks = sorted(range(q), key=lambda d: pos[offsets[c] + d])
        digit_rank.append({d: r for r, d in enumerate(ranks)})
    words = sorted(tuple(digit_rank[c][w[c]] for c in order) for w in code.words)
    alpha = tuple(code.alphabet[c] for c in order)
    head = b"MCF1" + bytes([len(alpha)]) + bytes(alpha) + len(words).to_bytes(4, "big")
    body = b"".join(bytes(w) for w in words)
    return CanonicalForm(head + body)


def mixed_automorphism_order(code: MixedCode) -> int:
    from .groups import group_order

    graph = encode_mixed_code(code)
    result = canonical_labeling(graph)
    return group_order(graph.n, result.generators)


def f8_codes_from_partitions() -> list[MixedCode]:
    """Codes with one 8-ary digit and eight binary digits, one per
    partition-orbit of the length-7 space into eight perfect codes.

    Every mixed perfect code of this shape arises from such a partition
    (its shortenings by digit value extend one), and partitions in the
    same permutation/translation orbit give equivalent mixed codes, so
    orbit representatives suffice for classification by canonical form.
    """
    return [_mixed_from_partition(parts) for parts in f8_partition_representatives()]


def classify_mixed(codes) -> dict[bytes, list[int]]:
    """Group indices by mixed canonical form."""
    classes: dict[bytes, list[int]] = {}
    for i, code in enumerate(codes):
        cert = mixed_canonical_form(code)
        classes.setdefault(cert.payload, []).append(i)
    return classes


def _partition_signature(parts) -> tuple:
    return tuple(sorted(tuple(sorted(p)) for p in parts))


def _length7_group_generators():
    """Generator maps on words of the length-7 space: a coordinate swap,
    a full cycle, and translations by the unit vectors."""
    n = 7
    gens = []

    def perm_map(perm):
        from .words import permute_word

        return [permute_word(w, perm, n) for w in range(128)]

    swap = list(range(n))
    swap[0], swap[1] = swap[1], swap[0]
    gens.append(perm_map(swap))
    cycle = [(i + 1) % n for i in range(n)]
    gens.append(perm_map(cycle))
    for b in range(n):
        x = 1 << b
        gens.append([w ^ x for w in range(128)])
    return gens


def f8_partition_representatives() -> list[tuple[tuple[int, ...], ...]]:
    """Orbit representatives of partitions of the length-7 space into
    eight perfect codes, under coordinate permutations and translations.

    Orbit closure over partition signatures is cheap, so the expensive
    mixed canonical forms only run on the handful of representatives.
    """
    from .exactcover import exact_covers
    from .profiles import enumerate_perfect_codes

    codes7 = enumerate_perfect_codes(7)
    masks = []
    for c in codes7:
        m = 0
        for w in c.words:
            m |= 1 << w
        masks.append(m)
    gens = _length7_group_generators()
    seen: set[tuple] = set()
    reps = []
    for sol in exact_covers(128, masks):
        parts = tuple(codes7[i].words for i in sol)
        sig = _partition_signature(parts)
        if sig in seen:
            continue
        reps.append(parts)
        frontier = [sig]
        seen.add(sig)
        while frontier:
            cur = frontier.pop()
            for g in gens:
                img = _partition_signature(tuple(g[w] for w in part) for part in cur)
                if img not in seen:
                    seen.add(img)
                    frontier.append(img)
    return reps


def _mixed_from_partition(parts) -> MixedCode:
    from .words import extend

    words = []
    for digit, part in enumerate(parts):
        ext = extend(BinaryCode(7, part))
        for w in ext.words:
            words.append((digit,) + tuple(w >> (7 - j) & 1 for j in range(8)))
    return MixedCode((8,) + (2,) * 8, words)
