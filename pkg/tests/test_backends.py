"""The compiled and pure-Python refinement kernels must agree bit for bit:
persisted digests (switching run state) may be produced under either."""

from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from pcodes.refinement import BACKEND

SCRIPT = r"""
import json
from pcodes.gf2 import hamming_code
from pcodes.equivalence import code_canonical_form
from pcodes.words import BinaryCode
from pcodes.refinement import BACKEND
from pcodes.designs import sts_of, design_certificate

out = {"backend": BACKEND}
h7 = hamming_code(3)
out["h7_eq"] = code_canonical_form(h7).hexdigest
out["h7_iso"] = code_canonical_form(h7, "isomorphism").hexdigest
out["tiny"] = code_canonical_form(BinaryCode(4, [1, 2, 4, 8, 15])).hexdigest
sts = sts_of(h7, 0)
out["sts"] = design_certificate(sts.v, sts.blocks).hexdigest
print(json.dumps(out))
"""


def _run(pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["PCODES_PURE_PYTHON"] = "1"
    else:
        env.pop("PCODES_PURE_PYTHON", None)
    proc = subprocess.run([sys.executable, "-c", SCRIPT], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


@pytest.mark.skipif(BACKEND != "c", reason="compiled backend unavailable")
def test_backends_agree():
    compiled = _run(pure=False)
    pure = _run(pure=True)
    assert compiled["backend"] == "c"
    assert pure["backend"] == "python"
    for key in ("h7_eq", "h7_iso", "tiny", "sts"):
        assert compiled[key] == pure[key], key
