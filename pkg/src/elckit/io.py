"""Graph parsing and serialization: adjacency text and graph6.

adjtext is a line-oriented format: the first non-blank line holds the
vertex count n, followed by n rows of n characters '0'/'1'.  Serialization
always ends with a newline; parsing tolerates surrounding whitespace.

graph6 is the common compact ASCII encoding of the upper triangle, six
bits per character offset by 63.  Only single-byte sizes (n <= 62) are
handled here.
"""

from __future__ import annotations

from .gf2 import BitMatrix
from .graph import Graph

__all__ = [
    "ParseError",
    "SymmetryViolation",
    "DiagonalViolation",
    "parse_adjtext",
    "serialize_adjtext",
    "parse_graph6",
    "serialize_graph6",
    "parse",
    "serialize",
    "detect_format",
    "load_graph",
]

FORMATS = ("adjtext", "graph6")


class ParseError(ValueError):
    """Input text does not encode a graph; carries a line or byte position."""

    def __init__(self, message: str, *, line: int | None = None, byte: int | None = None):
        self.line = line
        self.byte = byte
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif byte is not None:
            where = f" (byte {byte})"
        super().__init__(message + where)


class SymmetryViolation(ParseError):
    """Adjacency rows disagree across the diagonal."""


class DiagonalViolation(ParseError):
    """Adjacency row marks a vertex adjacent to itself."""


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not ASCII: {exc}") from None
    return data


def parse_adjtext(data: str | bytes) -> Graph:
    """Parse the n-then-n-rows adjacency text format."""
    text = _as_text(data)
    lines = [(idx + 1, line.strip()) for idx, line in enumerate(text.splitlines())]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise ParseError("empty input", line=1)
    header_no, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise ParseError(f"expected vertex count, got {header!r}", line=header_no) from None
    if n < 0:
        raise ParseError(f"negative vertex count {n}", line=header_no)
    body = lines[1:]
    if len(body) < n:
        raise ParseError(f"expected {n} adjacency rows, found {len(body)}", line=lines[-1][0])
    if len(body) > n:
        raise ParseError("trailing content after adjacency rows", line=body[n][0])
    rows = []
    for k, (no, line) in enumerate(body):
        if len(line) != n:
            raise ParseError(
                f"row {k + 1} has {len(line)} entries, expected {n}", line=no
            )
        bits = 0
        for j, ch in enumerate(line):
            if ch == "1":
                bits |= 1 << j
            elif ch != "0":
                raise ParseError(f"invalid character {ch!r} in row {k + 1}", line=no)
        if (bits >> k) & 1:
            raise DiagonalViolation(f"vertex {k + 1} adjacent to itself", line=no)
        rows.append(bits)
    for k, (no, _) in enumerate(body):
        for j in range(k):
            if ((rows[k] >> j) ^ (rows[j] >> k)) & 1:
                raise SymmetryViolation(
                    f"entry ({k + 1},{j + 1}) disagrees with ({j + 1},{k + 1})", line=no
                )
    return Graph(BitMatrix(n, n, tuple(rows)))


def serialize_adjtext(g: Graph) -> str:
    out = [str(g.n)]
    for i in range(g.n):
        out.append(str(g.adj.row(i)))
    return "\n".join(out) + "\n"


_G6_HEADER = ">>graph6<<"


def parse_graph6(data: str | bytes) -> Graph:
    """Parse a single graph6 line (optionally prefixed with its header)."""
    text = _as_text(data).strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise ParseError("empty graph6 input", byte=0)
    first = ord(text[0]) - 63
    if first == 63:
        raise ParseError("multi-byte graph6 sizes (n > 62) not supported", byte=0)
    if not 0 <= first <= 62:
        raise ParseError(f"invalid graph6 size byte {text[0]!r}", byte=0)
    n = first
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = text[1:]
    if len(payload) != need:
        raise ParseError(
            f"graph6 payload has {len(payload)} bytes, expected {need}", byte=1 + min(len(payload), need)
        )
    bits = []
    for k, ch in enumerate(payload):
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise ParseError(f"invalid graph6 byte {ch!r}", byte=k + 1)
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(BitMatrix(n, n, tuple(rows)))


def serialize_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 output limited to n <= 62")
    bits = []
    rows = g.adj.rows
    for j in range(1, g.n):
        for i in range(j):
            bits.append((rows[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(chars) + "\n"


def parse(data: str | bytes, fmt: str) -> Graph:
    if fmt == "adjtext":
        return parse_adjtext(data)
    if fmt == "graph6":
        return parse_graph6(data)
    raise ValueError(f"unknown format {fmt!r}")


def serialize(g: Graph, fmt: str) -> str:
    if fmt == "adjtext":
        return serialize_adjtext(g)
    if fmt == "graph6":
        return serialize_graph6(g)
    raise ValueError(f"unknown format {fmt!r}")


def detect_format(path: str) -> str:
    return "graph6" if str(path).endswith(".g6") else "adjtext"


def load_graph(path: str, fmt: str | None = None) -> Graph:
    if fmt is None:
        fmt = detect_format(path)
    with open(path, "r", encoding="ascii") as fh:
        return parse(fh.read(), fmt)
