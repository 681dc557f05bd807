"""GF(2) linear algebra on words stored as int bitmasks.

Gaussian elimination uses the lowest-index coordinate (most significant
bit) as pivot, so reduced bases are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import BinaryCode, bit_of, weight


@dataclass(frozen=True)
class BitMatrix:
    """Rows of equal-length words over GF(2)."""

    n: int
    rows: tuple[int, ...]

    def __init__(self, n: int, rows):
        rows = tuple(rows)
        if any(r < 0 or r >> n for r in rows):
            raise ValueError("row out of range for length")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def null_space(self) -> BinaryCode:
        """All words orthogonal to every row (n <= ~20 advisable)."""
        basis = null_space_basis(self.rows, self.n)
        return BinaryCode(self.n, span(basis))


def row_reduce(rows, n: int) -> list[int]:
    """Reduced row-echelon basis, pivots at the most significant set bits."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    reduced = []
    for i, b in enumerate(basis):
        for other in basis[i + 1:]:
            if b & (1 << other.bit_length() - 1):
                b ^= other
        reduced.append(b)
    return reduced


def rank_of_words(rows, n: int) -> int:
    return len(row_reduce(rows, n))


def span(basis) -> list[int]:
    out = [0]
    for b in basis:
        out += [w ^ b for w in out]
    return out


def null_space_basis(rows, n: int) -> list[int]:
    """Basis of the right null space of the matrix with the given rows."""
    reduced = row_reduce(rows, n)
    pivots = {r.bit_length() - 1 for r in reduced}
    free = [p for p in range(n) if p not in pivots]
    basis = []
    for f in free:
        v = 1 << f
        for r in reduced:
            p = r.bit_length() - 1
            if r >> f & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def rank(code: BinaryCode) -> int:
    """Dimension of the GF(2) span of the code translated to contain 0."""
    if not code.words:
        raise ValueError("rank of an empty code")
    c0 = code.words[0]
    return rank_of_words([w ^ c0 for w in code.words], code.n)


@dataclass(frozen=True)
class KernelReport:
    elements: BinaryCode
    basis: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.elements)


def kernel(code: BinaryCode) -> KernelReport:
    """All translations x with C + x = C, as a subspace with a basis."""
    if not code.words:
        raise ValueError("kernel of an empty code")
    members = code.word_set
    w0 = code.words[0]
    elems = []
    for c in code.words:
        x = w0 ^ c
        if all(w ^ x in members for w in code.words):
            elems.append(x)
    basis = tuple(row_reduce(elems, code.n))
    assert len(elems) == 1 << len(basis)
    return KernelReport(BinaryCode(code.n, elems), basis)


def hamming_parity_check(m: int) -> BitMatrix:
    """Parity-check rows whose columns are the binary numbers 1..2^m - 1."""
    n = (1 << m) - 1
    rows = []
    for j in range(m - 1, -1, -1):
        r = 0
        for i in range(1, n + 1):
            if i >> j & 1:
                r |= bit_of(n, i)
        rows.append(r)
    return BitMatrix(n, rows)


def hamming_code(m: int) -> BinaryCode:
    """The linear one-error-correcting code of length 2^m - 1."""
    if not 2 <= m <= 4:
        raise ValueError("m must be in 2..4")
    return hamming_parity_check(m).null_space()


def block_parity_check(m: int) -> BitMatrix:
    """Parity-check matrix built from two half-length blocks.

    Layout: top row is zeros over the first half, ones over the second
    half and the last coordinate; below it, each parity-check row of the
    half-length code appears twice side by side with a trailing zero.
    The null space is a length 2^m - 1 code equivalent to hamming_code(m).
    """
    if m < 3:
        raise ValueError("m must be at least 3")
    n = (1 << m) - 1
    half = (n - 1) // 2
    a = hamming_parity_check(m - 1)
    top = (1 << half + 1) - 1
    rows = [top]
    for r in a.rows:
        rows.append((r << half + 1) | (r << 1))
    return BitMatrix(n, rows)


def verify_tiling(v: BinaryCode, a: BinaryCode) -> bool:
    """Whether every word of the space splits uniquely as v + a."""
    if v.n != a.n:
        raise ValueError("length mismatch")
    if len(v) * len(a) != 1 << v.n:
        return False
    seen = set()
    for x in v.words:
        for y in a.words:
            s = x ^ y
            if s in seen:
                return False
            seen.add(s)
    return True


def syndrome(matrix: BitMatrix, w: int) -> int:
    s = 0
    for r in matrix.rows:
        s = s << 1 | ((r & w).bit_count() & 1)
    return s


def weight_parity_word(x: int) -> int:
    return weight(x) & 1
