"""Minimal i-components, switching, and isomorph-rejected class search.

A subcode is an i-component when complementing coordinate i inside it
leaves a one-error-correcting code.  Minimal ones are the connected
components of the minimum distance graph restricted to edges whose
endpoints differ in coordinate i; every i-component is a union of them.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations

from .equivalence import code_canonical_form
from .words import BinaryCode, bit_of, is_perfect, min_distance


@dataclass(frozen=True)
class ComponentPartition:
    coord: int
    components: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.components))

    @property
    def size_multiset(self) -> dict[int, int]:
        return dict(Counter(len(c) for c in self.components))


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def minimal_i_components(code: BinaryCode, coord: int) -> ComponentPartition:
    """Partition of the code into its minimal i-components."""
    if not is_perfect(code):
        raise ValueError("code is not perfect")
    n = code.n
    bit = bit_of(n, coord)
    d = min_distance(code)
    uf = _UnionFind(code.words)
    members = code.word_set
    other_bits = [1 << p for p in range(n) if (1 << p) != bit]
    masks = [bit | a | b for a, b in combinations(other_bits, d - 1)]
    for w in code.words:
        for m in masks:
            u = w ^ m
            if u > w and u in members:
                uf.union(w, u)
    groups: dict[int, list[int]] = {}
    for w in code.words:
        groups.setdefault(uf.find(w), []).append(w)
    comps = tuple(sorted((tuple(sorted(g)) for g in groups.values()),
                         key=lambda c: (len(c), c)))
    return ComponentPartition(coord, comps)


def switch(code: BinaryCode, coord: int, subset) -> BinaryCode:
    """Complement the coordinate inside the subset; reject non-components.

    Only distances across the flipped boundary can change, so validation
    checks a radius-2 neighborhood of each flipped word against the
    unflipped remainder.
    """
    n = code.n
    bit = bit_of(n, coord)
    d_set = set(subset)
    if not d_set:
        return code
    if not d_set <= code.word_set:
        raise ValueError("subset is not contained in the code")
    rest = code.word_set - d_set
    flipped = {w ^ bit for w in d_set}
    if flipped & rest:
        raise ValueError("subset is not an i-component (distance-1 collision)")
    near = [0] + [1 << p for p in range(n)]
    near += [a | b for a, b in combinations([1 << p for p in range(n)], 2)]
    for v in flipped:
        for m in near:
            if v ^ m in rest:
                raise ValueError("subset is not an i-component (distance <= 2)")
    return BinaryCode(n, list(rest) + list(flipped))


def switch_unchecked(code: BinaryCode, coord: int, subset) -> BinaryCode:
    bit = bit_of(code.n, coord)
    d_set = set(subset)
    return BinaryCode(code.n, [w ^ bit if w in d_set else w for w in code.words])


def is_i_component(code: BinaryCode, coord: int, subset) -> bool:
    """Definition check: does flipping the subset keep min distance >= 3?"""
    try:
        out = switch(code, coord, subset)
    except ValueError:
        return False
    return len(out) == len(code) and (len(out) < 2 or min_distance(out) >= 3)


def alpha_components(code: BinaryCode) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Maximal-coordinate-set components that switch in several coordinates.

    Returns (alpha, component words) pairs with |alpha| >= 2, component a
    proper subcode; the components listed are the atoms of the joined
    per-coordinate partitions, and every other simultaneous component is
    a union of atoms.
    """
    if not is_perfect(code):
        raise ValueError("code is not perfect")
    n = code.n
    parts = {i: minimal_i_components(code, i).components for i in range(1, n + 1)}
    part_of = {}
    for i, comps in parts.items():
        idx = {}
        for k, comp in enumerate(comps):
            for w in comp:
                idx[w] = k
        part_of[i] = idx
    found: dict[tuple[int, ...], set[int]] = {}
    for i, j in combinations(range(1, n + 1), 2):
        uf = _UnionFind(code.words)
        for comps in (parts[i], parts[j]):
            for comp in comps:
                for w in comp[1:]:
                    uf.union(comp[0], w)
        groups: dict[int, list[int]] = {}
        for w in code.words:
            groups.setdefault(uf.find(w), []).append(w)
        if len(groups) < 2:
            continue
        for g in groups.values():
            comp = tuple(sorted(g))
            if len(comp) == len(code):
                continue
            if comp not in found:
                alpha = set()
                comp_set = set(comp)
                for k in range(1, n + 1):
                    touched = {part_of[k][w] for w in comp}
                    if all(set(parts[k][t]) <= comp_set for t in touched):
                        alpha.add(k)
                found[comp] = alpha
    out = [(tuple(sorted(a)), comp) for comp, a in found.items() if len(a) >= 2]
    out.sort(key=lambda item: (item[1], item[0]))
    return out


@dataclass
class SwitchingClassRun:
    seed_digest: str
    discovered: dict[str, BinaryCode | None] = field(default_factory=dict)
    expanded: int = 0
    max_frontier: int = 0
    budget_exhausted: bool = False
    union_moves_added: int = 0

    @property
    def n_classes(self) -> int:
        return len(self.discovered)


def switching_class_bfs(seed: BinaryCode,
                        max_codes: int | None = None,
                        max_expansions: int | None = None,
                        use_unions: bool = True,
                        union_component_limit: int = 16,
                        store_codes: bool = True,
                        known_digests=None,
                        on_new=None) -> SwitchingClassRun:
    """Breadth-first closure of single-coordinate switches, deduplicated
    by equivalence canonical form.

    Every minimal component of every coordinate is switched; pairwise
    unions are also tried when a coordinate has at most
    ``union_component_limit`` components.  ``known_digests`` warm-starts
    the dedup set (resumed runs re-expand every known code, which is
    idempotent).  ``on_new(code, digest)`` fires once per new class.
    """
    if not is_perfect(seed):
        raise ValueError("seed is not perfect")
    run = SwitchingClassRun(seed_digest=code_canonical_form(seed).hexdigest)
    if known_digests:
        for d in known_digests:
            run.discovered[d] = None
    queue: deque[BinaryCode] = deque()
    seen_exact: set[tuple[int, ...]] = set()

    def admit(code: BinaryCode) -> bool:
        """False once the discovery budget is spent."""
        if code.words in seen_exact:
            return True
        seen_exact.add(code.words)
        if max_codes is not None and len(run.discovered) >= max_codes:
            run.budget_exhausted = True
            return False
        digest = code_canonical_form(code).hexdigest
        if digest in run.discovered:
            return True
        run.discovered[digest] = code if store_codes else None
        queue.append(code)
        if on_new is not None:
            on_new(code, digest)
        return True

    admit(seed)
    if run.seed_digest not in run.discovered:
        run.discovered[run.seed_digest] = seed if store_codes else None
    while queue and not run.budget_exhausted:
        if max_expansions is not None and run.expanded >= max_expansions:
            run.budget_exhausted = True
            break
        run.max_frontier = max(run.max_frontier, len(queue))
        code = queue.popleft()
        run.expanded += 1
        for coord in range(1, code.n + 1):
            partition = minimal_i_components(code, coord)
            comps = partition.components
            for comp in comps:
                if not admit(switch_unchecked(code, coord, comp)):
                    return run
            if use_unions and 2 < len(comps) <= union_component_limit:
                for a, b in combinations(range(len(comps)), 2):
                    merged = comps[a] + comps[b]
                    prev = len(run.discovered)
                    if not admit(switch_unchecked(code, coord, merged)):
                        return run
                    run.union_moves_added += len(run.discovered) - prev
    return run


def intersection_number(c1: BinaryCode, c2: BinaryCode) -> int:
    if c1.n != c2.n:
        raise ValueError("length mismatch")
    return len(c1.word_set & c2.word_set)
