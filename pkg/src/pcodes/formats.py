"""Text formats: PCC1 code catalogs, MPC1 mixed codes, SCRUN1 run state,
and design block lists.

PCC1 is bit-exact: ``PCC1 n=<n>`` then one word per line as an
n-character 0/1 string, coordinate 1 leftmost, lines ascending as binary
numbers.  ``#`` starts a comment line; a blank line separates codes in a
catalog.  The parser rejects unsorted or duplicate lines so that files
are confirmed to be in normal form.
"""

from __future__ import annotations

from .mixedcodes import MixedCode
from .words import BinaryCode, word_to_str


class FormatError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


def parse_pcc(stream) -> list[BinaryCode]:
    """Parse a PCC1 catalog from a file-like object or a string."""
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream.read().splitlines()
    codes: list[BinaryCode] = []
    n: int | None = None
    words: list[int] = []
    prev: int | None = None
    in_block = False

    def flush(line_no: int) -> None:
        nonlocal n, words, prev, in_block
        if not in_block:
            return
        if not words:
            raise FormatError("code block with no words", line_no)
        codes.append(BinaryCode(n, words))
        n, words, prev, in_block = None, [], None, False

    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush(i)
            continue
        if line.startswith("PCC1"):
            flush(i)
            parts = line.split()
            if len(parts) != 2 or not parts[1].startswith("n="):
                raise FormatError(f"malformed header {line!r}", i)
            try:
                n = int(parts[1][2:])
            except ValueError:
                raise FormatError(f"bad length in header {line!r}", i) from None
            if not 1 <= n <= 31:
                raise FormatError(f"length {n} out of range", i)
            in_block = True
            continue
        if not in_block:
            raise FormatError("word before PCC1 header", i)
        if len(line) != n:
            raise FormatError(f"word length {len(line)} != n={n}", i)
        if line.strip("01"):
            raise FormatError(f"bad characters in {line!r}", i)
        w = int(line, 2)
        if prev is not None and w <= prev:
            raise FormatError("words not in strictly ascending order", i)
        prev = w
        words.append(w)
    flush(len(lines) + 1)
    if not codes:
        raise FormatError("no code blocks found")
    return codes


def write_pcc(codes, stream) -> None:
    first = True
    for code in codes:
        if not first:
            stream.write("\n")
        first = False
        stream.write(f"PCC1 n={code.n}\n")
        for w in code.words:
            stream.write(word_to_str(w, code.n) + "\n")


def pcc_to_string(codes) -> str:
    import io

    buf = io.StringIO()
    write_pcc(codes, buf)
    return buf.getvalue()


def parse_mpc(stream) -> list[MixedCode]:
    """Parse an MPC1 mixed-code catalog."""
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream.read().splitlines()
    codes: list[MixedCode] = []
    alphabet: tuple[int, ...] | None = None
    words: list[tuple[int, ...]] = []
    in_block = False

    def flush(line_no: int) -> None:
        nonlocal alphabet, words, in_block
        if not in_block:
            return
        if not words:
            raise FormatError("code block with no words", line_no)
        codes.append(MixedCode(alphabet, words))
        alphabet, words, in_block = None, [], False

    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush(i)
            continue
        if line.startswith("MPC1"):
            flush(i)
            parts = line.split()
            if len(parts) != 2 or not parts[1].startswith("alphabets="):
                raise FormatError(f"malformed header {line!r}", i)
            try:
                alphabet = tuple(int(q) for q in parts[1][len("alphabets="):].split(","))
            except ValueError:
                raise FormatError("bad alphabet list", i) from None
            in_block = True
            continue
        if not in_block:
            raise FormatError("word before MPC1 header", i)
        try:
            digits = tuple(int(d) for d in line.split(","))
        except ValueError:
            raise FormatError(f"bad digits in {line!r}", i) from None
        if len(digits) != len(alphabet):
            raise FormatError("digit count does not match alphabet", i)
        words.append(digits)
    flush(len(lines) + 1)
    if not codes:
        raise FormatError("no code blocks found")
    return codes


def write_mpc(codes, stream) -> None:
    first = True
    for code in codes:
        if not first:
            stream.write("\n")
        first = False
        stream.write("MPC1 alphabets=" + ",".join(str(q) for q in code.alphabet) + "\n")
        for w in code.words:
            stream.write(",".join(str(d) for d in w) + "\n")


def parse_scrun(stream) -> list[str]:
    """Digest list of a switching-class run state file."""
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream.read().splitlines()
    if not lines or lines[0].strip() != "SCRUN1":
        raise FormatError("missing SCRUN1 header", 1)
    digests = []
    for i, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if len(line) != 64 or line.strip("0123456789abcdef"):
            raise FormatError(f"bad digest {line!r}", i)
        digests.append(line)
    return digests


def write_scrun(digests, stream) -> None:
    stream.write("SCRUN1\n")
    for d in digests:
        stream.write(d + "\n")


def write_design(v: int, blocks, kind: str, stream) -> None:
    if kind not in ("STS", "SQS"):
        raise ValueError("kind must be STS or SQS")
    stream.write(f"{kind} v={v}\n")
    for blk in sorted(tuple(sorted(b)) for b in blocks):
        stream.write(" ".join(str(p) for p in blk) + "\n")


def parse_design(stream) -> tuple[str, int, list[tuple[int, ...]]]:
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream.read().splitlines()
    if not lines:
        raise FormatError("empty design file")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("STS", "SQS") or not head[1].startswith("v="):
        raise FormatError(f"malformed header {lines[0]!r}", 1)
    v = int(head[1][2:])
    blocks = []
    for i, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        blocks.append(tuple(int(p) for p in line.split()))
    return head[0], v, blocks
