"""Permutation-group helpers: orbits and order from generator sets.

Group orders are computed with sympy's base-and-strong-generating-set
machinery (an orbit-stabilizer chain); orbits are simple breadth-first
closures done here.
"""

from __future__ import annotations

import numpy as np


def orbits(n_points: int, gens) -> list[list[int]]:
    """Orbit partition of 0..n_points-1 under the generator images."""
    seen = np.zeros(n_points, dtype=bool)
    out = []
    for start in range(n_points):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        frontier = [start]
        while frontier:
            p = frontier.pop()
            for g in gens:
                q = int(g[p])
                if not seen[q]:
                    seen[q] = True
                    orbit.append(q)
                    frontier.append(q)
        out.append(sorted(orbit))
    return out


def group_order(degree: int, gens) -> int:
    """Order of the group generated by the given permutations."""
    if not gens:
        return 1
    from sympy.combinatorics import Permutation, PermutationGroup

    perms = [Permutation(list(map(int, g)), size=degree) for g in gens]
    perms = [p for p in perms if not p.is_Identity]
    if not perms:
        return 1
    return int(PermutationGroup(perms).order())


def fixed_points(degree: int, gens) -> list[int]:
    """Points fixed by every generator (hence by the whole group)."""
    fixed = np.ones(degree, dtype=bool)
    for g in gens:
        fixed &= np.asarray(g) == np.arange(degree)
    return [int(i) for i in np.nonzero(fixed)[0]]
