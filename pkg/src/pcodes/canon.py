"""Canonical labeling of colored graphs by partition refinement.

The search individualizes vertices of the first smallest non-singleton
cell, refines, and keeps the lexicographically smallest leaf certificate.
Two prunings are applied, both standard: subtrees whose invariant path
exceeds the first leaf's and the best leaf's are cut, and vertices lying
in the orbit of an already-explored sibling under the automorphisms
discovered so far are skipped.  Discovered automorphisms are returned as
vertex permutations; they generate the full color-preserving
automorphism group of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from hashlib import sha256

import numpy as np

from .graphenc import ColoredGraph
from .refinement import Refiner


@dataclass(frozen=True)
class CanonicalForm:
    """Deterministic certificate; equal bytes iff same canonical object."""

    payload: bytes

    @property
    def hexdigest(self) -> str:
        return sha256(self.payload).hexdigest()

    def __eq__(self, other):
        return isinstance(other, CanonicalForm) and self.payload == other.payload

    def __hash__(self):
        return hash(self.payload)


@dataclass
class LabelingResult:
    labeling: np.ndarray          # position -> vertex
    position: np.ndarray          # vertex -> position
    generators: list[np.ndarray]  # vertex permutations v -> image
    inv_seq: tuple[int, ...]
    nodes: int = 0
    leaves: int = 0


class _Leaf:
    __slots__ = ("inv_seq", "lab", "pos", "rows", "path")

    def __init__(self, inv_seq, lab, pos, rows, path):
        self.inv_seq = inv_seq
        self.lab = lab
        self.pos = pos
        self.rows = rows
        self.path = path


def _common_prefix(a, b) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def _leaf_rows(graph: ColoredGraph, lab, pos) -> list[bytes]:
    indptr, indices = graph.indptr, graph.indices
    rows = []
    for p in range(graph.n):
        v = lab[p]
        nb = np.sort(pos[indices[indptr[v]:indptr[v + 1]]]).astype(">i4")
        rows.append(len(nb).to_bytes(4, "big") + nb.tobytes())
    return rows


def _compare_rows(graph: ColoredGraph, stored: _Leaf, pos) -> int:
    """Lexicographic comparison of the candidate labeling against a leaf."""
    indptr, indices = graph.indptr, graph.indices
    inv_pos = np.empty(graph.n, dtype=np.int32)
    inv_pos[pos] = np.arange(graph.n, dtype=np.int32)
    for p in range(graph.n):
        v = inv_pos[p]
        nb = np.sort(pos[indices[indptr[v]:indptr[v + 1]]]).astype(">i4")
        row = len(nb).to_bytes(4, "big") + nb.tobytes()
        ref = stored.rows[p]
        if row != ref:
            return -1 if row < ref else 1
    return 0


class _Search:
    def __init__(self, graph: ColoredGraph):
        self.graph = graph
        self.n = graph.n
        self.refiner = Refiner(graph.indptr, graph.indices)
        self.first: _Leaf | None = None
        self.best: _Leaf | None = None
        self.gens: list[np.ndarray] = []
        self.nodes = 0
        self.leaves = 0
        self.path: list[int] = []

    def run(self) -> LabelingResult:
        n = self.n
        lab = np.argsort(self.graph.colors, kind="stable").astype(np.int32)
        ptn = np.zeros(n, dtype=np.int32)
        cell_of = np.zeros(n, dtype=np.int32)
        colors = self.graph.colors
        n_cells = 0
        start = 0
        for p in range(n):
            if p + 1 < n and colors[lab[p + 1]] == colors[lab[p]]:
                ptn[p] = 1
        for p in range(n):
            cell_of[lab[p]] = start
            if ptn[p] == 0:
                n_cells += 1
                start = p + 1
        active = [p for p in range(n) if p == 0 or ptn[p - 1] == 0]
        inv, n_cells = self.refiner.refine(lab, ptn, cell_of, active, n_cells)
        self._descend(lab, ptn, cell_of, n_cells, ((n_cells, inv),), 0, 0)
        assert self.best is not None
        lab_arr = np.asarray(self.best.lab, dtype=np.int32)
        return LabelingResult(
            labeling=lab_arr,
            position=self.best.pos,
            generators=self.gens,
            inv_seq=tuple(x for pair in self.best.inv_seq for x in pair),
            nodes=self.nodes,
            leaves=self.leaves,
        )

    # -- tree walk ---------------------------------------------------------

    def _descend(self, lab, ptn, cell_of, n_cells, inv_seq, c_first, c_best) -> int | None:
        """Explore one node; a returned integer unwinds the recursion to
        that depth (deepest common ancestor with a matched leaf), since
        the rest of the current subtree is an automorphic copy of
        already-explored ground."""
        self.nodes += 1
        n = self.n
        if n_cells == n:
            return self._handle_leaf(lab, inv_seq, c_first, c_best)
        s, e = self._target_cell(ptn)
        children = [int(lab[p]) for p in range(s, e + 1)]
        pos_in_cell = {v: s + i for i, v in enumerate(children)}
        done: list[int] = []
        closure: set[int] = set()
        gens_version = -1
        depth = len(self.path)
        self.path.append(-1)
        for v in children:
            if done:
                if gens_version != len(self.gens):
                    gens_version = len(self.gens)
                    closure = self._orbit_closure(done)
                if v in closure:
                    continue
            self.path[depth] = v
            clab = lab.copy()
            cptn = ptn.copy()
            ccell = cell_of.copy()
            pv = pos_in_cell[v]
            clab[s], clab[pv] = clab[pv], clab[s]
            cptn[s] = 0
            ccell[clab[s + 1:e + 1]] = s + 1
            inv, cn = self.refiner.refine(clab, cptn, ccell, [s], n_cells + 1)
            node_key = (cn, inv)
            nc_first = c_first or self._cmp_level(node_key, self.first, len(inv_seq))
            nc_best = c_best or self._cmp_level(node_key, self.best, len(inv_seq))
            done.append(v)
            closure.add(v)
            if nc_first != 0 and nc_best > 0:
                continue
            jump = self._descend(clab, cptn, ccell, cn, inv_seq + (node_key,),
                                 nc_first, nc_best)
            if jump is not None and jump < depth:
                self.path.pop()
                return jump
            gens_version = -1  # subtree may have added generators
        self.path.pop()
        return None

    @staticmethod
    def _cmp_level(node_key, leaf: _Leaf | None, depth: int) -> int:
        if leaf is None:
            return 0
        if depth >= len(leaf.inv_seq):
            return 1
        ref = leaf.inv_seq[depth]
        if node_key == ref:
            return 0
        return -1 if node_key < ref else 1

    def _target_cell(self, ptn) -> tuple[int, int]:
        """First largest non-singleton cell, as (start, end) inclusive.

        Branching on the largest cell individualizes the richest vertex
        first, which makes the following refinement split aggressively;
        on the highly symmetric graphs here that beats smallest-cell
        branching by orders of magnitude.
        """
        ends = np.flatnonzero(ptn == 0)
        starts = np.empty_like(ends)
        starts[0] = 0
        starts[1:] = ends[:-1] + 1
        sizes = ends - starts + 1
        k = int(np.argmax(sizes))
        return int(starts[k]), int(ends[k])

    def _orbit_closure(self, seeds: list[int]) -> set[int]:
        """Closure of the seeds under generators fixing the current path."""
        path = self.path[:-1]
        gens = [g for g in self.gens if all(g[w] == w for w in path)]
        closure = set(seeds)
        if not gens:
            return closure
        frontier = list(seeds)
        while frontier:
            arr = np.fromiter(frontier, dtype=np.int64, count=len(frontier))
            frontier = []
            for g in gens:
                for x in g[arr]:
                    xi = int(x)
                    if xi not in closure:
                        closure.add(xi)
                        frontier.append(xi)
        return closure

    # -- leaves ------------------------------------------------------------

    def _handle_leaf(self, lab, inv_seq, c_first, c_best) -> int | None:
        # c_best may be stale (the best leaf can change mid-subtree), so the
        # ordering decision recompares inv_seq exactly; c_first is reliable.
        self.leaves += 1
        n = self.n
        pos = np.empty(n, dtype=np.int32)
        pos[lab] = np.arange(n, dtype=np.int32)
        path = tuple(self.path)
        if self.first is None:
            leaf = _Leaf(inv_seq, lab.copy(), pos,
                         _leaf_rows(self.graph, lab, pos), path)
            self.first = leaf
            self.best = leaf
            return None
        best = self.best
        jump: int | None = None
        compared_best = False
        if inv_seq < best.inv_seq:
            self.best = _Leaf(inv_seq, lab.copy(), pos,
                              _leaf_rows(self.graph, lab, pos), path)
        elif inv_seq == best.inv_seq:
            compared_best = True
            r = _compare_rows(self.graph, best, pos)
            if r < 0:
                self.best = _Leaf(inv_seq, lab.copy(), pos,
                                  _leaf_rows(self.graph, lab, pos), path)
            elif r == 0:
                self._record_automorphism(best, pos)
                jump = _common_prefix(best.path, path)
        if c_first == 0 and not (compared_best and best is self.first):
            if _compare_rows(self.graph, self.first, pos) == 0:
                self._record_automorphism(self.first, pos)
                jz = _common_prefix(self.first.path, path)
                jump = jz if jump is None else min(jump, jz)
        return jump

    def _record_automorphism(self, leaf: _Leaf, pos) -> None:
        gamma = np.asarray(leaf.lab, dtype=np.int32)[pos]
        if np.array_equal(gamma, np.arange(self.n, dtype=np.int32)):
            return
        for g in self.gens:
            if np.array_equal(g, gamma):
                return
        self.gens.append(gamma)


def canonical_labeling(graph: ColoredGraph) -> LabelingResult:
    """Canonical labeling plus automorphism generators of a colored graph."""
    if graph.n == 0:
        raise ValueError("empty graph")
    return _Search(graph).run()


def relabeled_edges(graph: ColoredGraph, position) -> list[tuple[int, int]]:
    """Edges under a labeling, each as (min, max), sorted."""
    out = []
    for v in range(graph.n):
        pv = int(position[v])
        for u in graph.neighbors(v):
            pu = int(position[u])
            if pv < pu:
                out.append((pv, pu))
    out.sort()
    return out


def graph_certificate(graph: ColoredGraph, result: LabelingResult | None = None) -> CanonicalForm:
    """Generic certificate: header, canonical color classes, canonical edges."""
    if result is None:
        result = canonical_labeling(graph)
    colors_in_order = graph.colors[result.labeling]
    head = b"GCF1" + graph.n.to_bytes(4, "big") + graph.n_edges.to_bytes(4, "big")
    body = colors_in_order.astype(">i4").tobytes()
    edges = relabeled_edges(graph, result.position)
    body += b"".join(a.to_bytes(4, "big") + b.to_bytes(4, "big") for a, b in edges)
    return CanonicalForm(head + body)
