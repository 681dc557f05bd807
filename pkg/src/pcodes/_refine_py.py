"""Pure-Python equitable partition refinement (fallback backend).

The compiled backend in ``_refine_c`` implements the same contract with
the same splitting rules, queue discipline, and invariant mixing, so
certificates never depend on which backend is active.

Partition state (shared with the search in :mod:`pcodes.canon`):
  lab     -- int32 array, vertices listed cell by cell
  ptn     -- int32 array, ptn[i] = 1 when positions i, i+1 share a cell
  cell_of -- int32 array, vertex -> start position of its cell

``refine`` splits cells by neighbor counts against a worklist of
splitter cells until the partition is equitable (or discrete), mutating
the arrays in place.  The returned invariant mixes only data that
corresponds across isomorphic inputs: cell positions, count values,
fragment sizes.
"""

from __future__ import annotations

from collections import deque

_MASK = (1 << 64) - 1
_PRIME = 0x100000001B3
_SEED = 0x9E3779B97F4A7C15


def _mix(h: int, v: int) -> int:
    return ((h ^ (v & _MASK)) * _PRIME) & _MASK


class Refiner:
    def __init__(self, indptr, indices):
        self.indptr = [int(x) for x in indptr]
        self.indices = [int(x) for x in indices]
        self.n = len(self.indptr) - 1

    def refine(self, lab_arr, ptn_arr, cell_of_arr, active, n_cells: int) -> tuple[int, int]:
        n = self.n
        indptr, indices = self.indptr, self.indices
        lab = [int(x) for x in lab_arr]
        ptn = [int(x) for x in ptn_arr]
        cell_of = [int(x) for x in cell_of_arr]
        inv = _SEED
        queue: deque[int] = deque()
        queued = bytearray(n)
        for s in active:
            if not queued[s]:
                queue.append(s)
                queued[s] = 1
        cnt = [0] * n
        while queue and n_cells < n:
            s = queue.popleft()
            queued[s] = 0
            e = s
            while ptn[e]:
                e += 1
            touched: list[int] = []
            touched_cells = set()
            for p in range(s, e + 1):
                v = lab[p]
                for k in range(indptr[v], indptr[v + 1]):
                    u = indices[k]
                    if cnt[u] == 0:
                        touched.append(u)
                        touched_cells.add(cell_of[u])
                    cnt[u] += 1
            for cs in sorted(touched_cells):
                ce = cs
                while ptn[ce]:
                    ce += 1
                if ce == cs:
                    inv = _mix(inv, cs)
                    inv = _mix(inv, cnt[lab[cs]])
                    continue
                members = lab[cs:ce + 1]
                first = cnt[members[0]]
                if all(cnt[v] == first for v in members):
                    inv = _mix(inv, cs)
                    inv = _mix(inv, first)
                    continue
                members.sort(key=lambda v: cnt[v])
                inv = _mix(inv, cs)
                fragments: list[int] = []  # start positions
                frag_start = cs
                sz = ce - cs + 1
                for idx, v in enumerate(members):
                    lab[cs + idx] = v
                for idx in range(sz):
                    v = members[idx]
                    if idx + 1 < sz and cnt[members[idx + 1]] != cnt[v]:
                        inv = _mix(inv, cnt[v])
                        inv = _mix(inv, cs + idx - frag_start + 1)
                        for j in range(frag_start, cs + idx + 1):
                            cell_of[lab[j]] = frag_start
                            ptn[j] = 1 if j < cs + idx else 0
                        fragments.append(frag_start)
                        frag_start = cs + idx + 1
                inv = _mix(inv, cnt[members[-1]])
                inv = _mix(inv, ce - frag_start + 1)
                for j in range(frag_start, ce + 1):
                    cell_of[lab[j]] = frag_start
                    ptn[j] = 1 if j < ce else 0
                fragments.append(frag_start)
                n_cells += len(fragments) - 1
                if queued[cs]:
                    for fs in fragments[1:]:
                        if not queued[fs]:
                            queue.append(fs)
                            queued[fs] = 1
                else:
                    sizes = []
                    for i, fs in enumerate(fragments):
                        fe = fragments[i + 1] - 1 if i + 1 < len(fragments) else ce
                        sizes.append(fe - fs + 1)
                    big = max(range(len(fragments)), key=lambda i: sizes[i])
                    for i, fs in enumerate(fragments):
                        if i != big and not queued[fs]:
                            queue.append(fs)
                            queued[fs] = 1
            for u in touched:
                cnt[u] = 0
        lab_arr[:] = lab
        ptn_arr[:] = ptn
        cell_of_arr[:] = cell_of
        return inv, n_cells
