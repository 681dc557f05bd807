#!/usr/bin/env python3
"""Benchmark the compiled refinement kernel against the pure-Python twin.

Two views: raw refinement on recorded search states (same inputs hit
both kernels) and end-to-end canonical forms in subprocesses with the
backend forced via PCODES_PURE_PYTHON.

Usage: python benchmarks/bench_refine.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

FORM_SCRIPT = r"""
import json, time
from pcodes.gf2 import hamming_code
from pcodes.switching import minimal_i_components, switch_unchecked
from pcodes.equivalence import code_canonical_form, automorphism_group
from pcodes.refinement import BACKEND

h15 = hamming_code(4)
t0 = time.perf_counter()
form = code_canonical_form(h15)
t_form = time.perf_counter() - t0

comp = minimal_i_components(h15, 15).components[0]
c2 = switch_unchecked(h15, 15, comp)
t0 = time.perf_counter()
form2 = code_canonical_form(c2)
t_switched = time.perf_counter() - t0

h7 = hamming_code(3)
t0 = time.perf_counter()
rep = automorphism_group(h7)
t_aut7 = time.perf_counter() - t0
assert rep.order == 2688

print(json.dumps({
    "backend": BACKEND,
    "h15_form_s": t_form,
    "switched_form_s": t_switched,
    "h7_aut_s": t_aut7,
    "h15_digest": form.hexdigest,
    "switched_digest": form2.hexdigest,
}))
"""


def record_states(code, n_states: int):
    """Capture (lab, ptn, cell_of, active, n_cells) inputs from a search."""
    from pcodes.canon import _Search
    from pcodes.equivalence import encode

    graph = encode(code, "equivalence")
    search = _Search(graph)
    states = []

    class Recorder:
        def __init__(self, inner):
            self.inner = inner

        def refine(self, lab, ptn, cell_of, active, n_cells):
            if len(states) < n_states:
                states.append((lab.copy(), ptn.copy(), cell_of.copy(),
                               list(active), n_cells))
            return self.inner.refine(lab, ptn, cell_of, active, n_cells)

    search.refiner = Recorder(search.refiner)
    search.run()
    return graph, states


def bench_kernel(refiner_cls, graph, states, repeat: int) -> float:
    refiner = refiner_cls(graph.indptr, graph.indices)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for lab, ptn, cell_of, active, n_cells in states:
            refiner.refine(lab.copy(), ptn.copy(), cell_of.copy(),
                           list(active), n_cells)
        best = min(best, time.perf_counter() - t0)
    return best


def run_forms(pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("PCODES_PURE_PYTHON", None)
    if pure:
        env["PCODES_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", FORM_SCRIPT], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    from pcodes import _refine_py
    from pcodes.gf2 import hamming_code
    from pcodes.refinement import BACKEND

    print(f"active backend: {BACKEND}")
    print()
    print("== raw refinement on recorded search states ==")
    for name, code, n_states in (("hamming7", hamming_code(3), 40),
                                 ("hamming15", hamming_code(4), 20)):
        graph, states = record_states(code, n_states)
        t_py = bench_kernel(_refine_py.Refiner, graph, states, args.repeat)
        row = (f"{name}: graph {graph.n}v/{graph.n_edges}e, "
               f"{len(states)} refines: python {1000 * t_py:.1f}ms")
        try:
            from pcodes import _refine_c

            t_c = bench_kernel(_refine_c.Refiner, graph, states, args.repeat)
            row += f", compiled {1000 * t_c:.1f}ms, speedup {t_py / t_c:.1f}x"
        except ImportError:
            row += ", compiled kernel unavailable"
        print(row)

    print()
    print("== end-to-end canonical forms (subprocess per backend) ==")
    compiled = None
    try:
        compiled = run_forms(pure=False)
    except subprocess.CalledProcessError as exc:
        print("compiled run failed:", exc.stderr)
    pure = run_forms(pure=True)
    for label, result in (("compiled", compiled), ("pure", pure)):
        if result is None:
            continue
        print(f"{label:>9} ({result['backend']}): "
              f"h15 form {result['h15_form_s']:.2f}s, "
              f"switched form {result['switched_form_s']:.2f}s, "
              f"h7 aut {result['h7_aut_s']:.2f}s")
    if compiled is not None:
        same = (compiled["h15_digest"] == pure["h15_digest"]
                and compiled["switched_digest"] == pure["switched_digest"])
        print(f"certificates identical across backends: {same}")
        if not same:
            raise SystemExit("backend mismatch!")


if __name__ == "__main__":
    main()
