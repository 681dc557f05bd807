"""Exact cover over small universes via bitmask backtracking.

Universes here are at most 2^15 cells, so a Python big-int mask per
candidate is faster and simpler than dancing links.
"""

from __future__ import annotations

from collections.abc import Iterator


def exact_covers(universe_size: int, candidate_masks: list[int]) -> Iterator[tuple[int, ...]]:
    """Yield every subset of candidates whose masks partition the universe.

    Candidates are referenced by index; each solution is emitted exactly
    once, driven by the lowest uncovered cell.
    """
    full = (1 << universe_size) - 1
    by_cell: list[list[int]] = [[] for _ in range(universe_size)]
    for idx, m in enumerate(candidate_masks):
        if m == 0:
            continue
        low = (m & -m).bit_length() - 1
        by_cell[low].append(idx)
    # Indexing by the lowest bit of each mask keeps the branch lists short:
    # cell c can only be the lowest uncovered cell for masks whose bits
    # below c are all covered, and we re-filter against the cover mask.
    chosen: list[int] = []

    def walk(covered: int) -> Iterator[tuple[int, ...]]:
        if covered == full:
            yield tuple(chosen)
            return
        low = (~covered & full)
        cell = (low & -low).bit_length() - 1
        for idx in by_cell[cell]:
            m = candidate_masks[idx]
            if m & covered:
                continue
            chosen.append(idx)
            yield from walk(covered | m)
            chosen.pop()

    yield from walk(0)
