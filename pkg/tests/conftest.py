from __future__ import annotations

import pytest

from pcodes.gf2 import hamming_code
from pcodes.words import BinaryCode, extend


@pytest.fixture(scope="session")
def hamming7() -> BinaryCode:
    return hamming_code(3)


@pytest.fixture(scope="session")
def hamming15() -> BinaryCode:
    return hamming_code(4)


@pytest.fixture(scope="session")
def ext_hamming15(hamming15) -> BinaryCode:
    return extend(hamming15)


@pytest.fixture(scope="session")
def aut_h15(hamming15):
    """Automorphism report of the length-15 Hamming code (slow; shared)."""
    from pcodes.equivalence import automorphism_group

    return automorphism_group(hamming15)


@pytest.fixture(scope="session")
def size10_code() -> BinaryCode:
    """A known size-10 length-7 one-error-correcting code that does
    not embed into any perfect code of length 15."""
    rows = ["0000000", "0001111", "0101100", "0110110", "0111011",
            "1001001", "1010111", "1011100", "1101010", "1110001"]
    return BinaryCode(7, [int(r, 2) for r in rows])
