"""Weight-slice defining sets, exhaustive small-length enumeration,
embedding search, and cardinality-length profiles.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .exactcover import exact_covers
from .gf2 import block_parity_check, kernel
from .words import BinaryCode, bit_of, min_distance, weight


@dataclass(frozen=True)
class WeightSlice:
    n: int
    w: int
    words: tuple[int, ...]


@dataclass(frozen=True)
class CLProfile:
    """Non-logarithmic profile: entry i-1 is the largest subcode constant
    on some n-i coordinates."""

    kappa_prime: tuple[int, ...]


def enumerate_perfect_codes(n: int) -> list[BinaryCode]:
    """All perfect codes of length 3 or 7, via exact ball cover."""
    if n not in (3, 7):
        raise ValueError("exhaustive enumeration supported for n in {3, 7}")
    size = 1 << n
    balls = []
    for c in range(size):
        m = 1 << c
        for p in range(n):
            m |= 1 << (c ^ (1 << p))
        balls.append(m)
    return [BinaryCode(n, sol) for sol in exact_covers(size, balls)]


def weight_slice(code: BinaryCode, w: int) -> WeightSlice:
    return WeightSlice(code.n, w, tuple(x for x in code.words if weight(x) == w))


def is_defining_slice(slc: WeightSlice, universe, subset_semantics: bool = False) -> bool:
    """Whether exactly one code in the universe carries this weight slice.

    With ``subset_semantics`` the slice only needs to be contained in the
    code's words of that weight, the reading under which completeness of
    the slice is not assumed.
    """
    if not universe:
        raise ValueError("empty universe")
    want = set(slc.words)
    hits = 0
    for code in universe:
        have = {x for x in code.words if weight(x) == slc.w}
        if (want <= have) if subset_semantics else (want == have):
            hits += 1
            if hits > 1:
                return False
    return hits == 1


def lighter_words_determined(slc: WeightSlice, universe) -> bool:
    """All universe codes sharing the slice agree on all lighter words."""
    want = set(slc.words)
    lighter = None
    for code in universe:
        have = {x for x in code.words if weight(x) == slc.w}
        if have != want:
            continue
        mine = frozenset(x for x in code.words if weight(x) < slc.w)
        if lighter is None:
            lighter = mine
        elif lighter != mine:
            return False
    return True


def block_switch_set(m: int, variant: str = "complement") -> tuple[BinaryCode, tuple[int, ...], int]:
    """A last-coordinate switch set inside the two-block code.

    ``complement`` pairs each half-length word x with its complement in
    the first block, ``repeat`` repeats x; the final coordinate carries
    the weight parity of x.  Both families range over all half-length
    words and validate as components for the last coordinate.  Returns
    (code, switch set, coordinate).
    """
    if variant not in ("complement", "repeat"):
        raise ValueError(f"unknown variant {variant!r}")
    matrix = block_parity_check(m)
    code = matrix.null_space()
    n = matrix.n
    half = (n - 1) // 2
    ones = (1 << half) - 1
    s = []
    for x in range(1 << half):
        first = (x ^ ones) if variant == "complement" else x
        s.append((first << half + 1) | (x << 1) | (weight(x) & 1))
    return code, tuple(sorted(s)), n


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class EmbedResult:
    status: str                      # "found" | "absent" | "budget"
    coord_map: tuple[int, ...] | None = None   # 0-based guest -> host coordinate
    translation: int | None = None             # host word xored onto lifted guest
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def _lift(word: int, k: int, coord_map, n: int) -> int:
    out = 0
    for j in range(k):
        if word >> (k - 1 - j) & 1:
            out |= 1 << (n - 1 - coord_map[j])
    return out


def apply_embedding(guest: BinaryCode, host_n: int, result: EmbedResult) -> list[int]:
    """Host words realized by an embedding."""
    if not result.found:
        raise ValueError("no embedding to apply")
    return [result.translation ^ _lift(w, guest.n, result.coord_map, host_n)
            for w in guest.words]


def _difference_supports(arr: np.ndarray, t: int, n: int, weights) -> dict[int, set]:
    out: dict[int, set] = {w: set() for w in weights}
    dvec = arr ^ t
    wts = np.bitwise_count(dvec)
    for w in weights:
        for j in np.nonzero(wts == w)[0]:
            d = int(dvec[j])
            out[w].add(tuple(c for c in range(n) if d >> (n - 1 - c) & 1))
    return out


def embed_search(guest: BinaryCode, host: BinaryCode,
                 node_budget: int = 5_000_000) -> EmbedResult:
    """Find an injective coordinate map plus translation taking the guest
    into the host with all unused host coordinates constant.

    Anchored on translates: some guest word maps to a host word t and
    every other guest word must land at a prescribed difference support
    from t, so membership reduces to support lookups.  Translation
    anchors reduce to kernel-coset representatives, since kernel
    translations act on embeddings.  Exhausting the backtracking proves
    absence; running out of node budget does not.
    """
    k, n = guest.n, host.n
    if k > n:
        raise ValueError("guest longer than host")
    if not guest.words:
        raise ValueError("empty guest code")
    if len(guest) >= 2 and min_distance(guest) < 3:
        raise ValueError("guest must be one-error-correcting (or a single word)")
    base = guest.words[0]
    deltas = [w ^ base for w in guest.words[1:]]
    supports = [tuple(j for j in range(k) if d >> (k - 1 - j) & 1) for d in deltas]
    need_weights = sorted({len(s) for s in supports})
    arr = host.word_array

    # greedy order: each next guest coordinate completes as many
    # difference supports as possible, so membership checks bite early
    usage = Counter(c for s in supports for c in s)
    coord_order: list[int] = []
    chosen: set[int] = set()
    while len(coord_order) < k:
        def gain(c):
            done = sum(1 for s in supports if c in s and set(s) <= chosen | {c})
            return (done, usage[c], -c)
        nxt = max((c for c in range(k) if c not in chosen), key=gain)
        coord_order.append(nxt)
        chosen.add(nxt)
    rank_of = {c: r for r, c in enumerate(coord_order)}
    by_level: list[list[tuple[int, ...]]] = [[] for _ in range(k)]
    for s in supports:
        ranked = tuple(sorted(rank_of[c] for c in s))
        by_level[max(ranked)].append(ranked)

    ker = kernel(host)
    ker_arr = ker.elements.word_array
    reps = []
    seen = set()
    for t in host.words:
        key = int((ker_arr ^ t).min())
        if key not in seen:
            seen.add(key)
            reps.append(t)

    nodes = 0
    assignment = [-1] * k

    def backtrack(depth: int, used: int, t_diff) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExceeded
        if depth == k:
            return True
        for c in range(n):
            if used >> c & 1:
                continue
            assignment[depth] = c
            ok = True
            for ranked in by_level[depth]:
                mapped = tuple(sorted(assignment[r] for r in ranked))
                if mapped not in t_diff[len(ranked)]:
                    ok = False
                    break
            if ok and backtrack(depth + 1, used | (1 << c), t_diff):
                return True
        assignment[depth] = -1
        return False

    for t in reps:
        t_diff = _difference_supports(arr, t, n, need_weights)
        if any(len(t_diff[w]) == 0 for w in need_weights):
            continue
        try:
            if backtrack(0, 0, t_diff):
                coord_map = [0] * k
                for rank, c in enumerate(assignment):
                    coord_map[coord_order[rank]] = c
                lifted = _lift(base, k, coord_map, n)
                return EmbedResult("found", tuple(coord_map), t ^ lifted, nodes)
        except _BudgetExceeded:
            return EmbedResult("budget", nodes=nodes)
    return EmbedResult("absent", nodes=nodes)


def clp(code: BinaryCode) -> CLProfile:
    """Largest subcode sizes constant on n-i coordinates, for i = 1..n."""
    n = code.n
    arr = code.word_array
    out = []
    for i in range(1, n + 1):
        keep = n - i
        cap = min(len(arr), 1 << i)
        best = 0
        for coords in combinations(range(n), keep):
            mask = 0
            for c in coords:
                mask |= bit_of(n, c + 1)
            _, counts = np.unique(arr & mask, return_counts=True)
            m = int(counts.max())
            if m > best:
                best = m
                if best == cap:
                    break
        out.append(best)
    return CLProfile(tuple(out))
