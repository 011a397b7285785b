"""graph6 and edge-list codecs.

graph6 (single-byte header only, so ``n <= 62``): the first byte is ``n + 63``;
the upper triangle of the adjacency matrix is read column by column
(``x(0,1), x(0,2), x(1,2), x(0,3), ...``), packed six bits per byte with the
most significant bit first, zero-padded, and each 6-bit group offset by 63.

Edge lists: a header line ``n m`` followed by ``m`` lines ``u v`` with
0-based vertex ids.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import CapacityError, ParseError
from .graph import Graph

GRAPH6_MAX_N = 62
GRAPH6_HEADER = ">>graph6<<"


def _as_text(line: bytes | str) -> str:
    if isinstance(line, bytes):
        try:
            return line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("graph6 data must be ASCII", offset=exc.start) from None
    return line


def decode_graph6(line: bytes | str) -> Graph:
    text = _as_text(line).rstrip("\r\n")
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise ParseError("empty graph6 record", offset=0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} outside the printable range 63..126", offset=i)
    n = ord(text[0]) - 63
    if n == 63:
        raise ParseError(f"multi-byte size header not supported (n > {GRAPH6_MAX_N})", offset=0)
    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    payload = text[1:]
    if len(payload) != n_bytes:
        raise ParseError(
            f"expected {n_bytes} payload byte(s) for n={n}, found {len(payload)}",
            offset=min(len(text), 1 + n_bytes),
        )
    if n_bytes:
        pad = n_bytes * 6 - n_bits
        if (ord(payload[-1]) - 63) & ((1 << pad) - 1):
            raise ParseError("nonzero padding bits", offset=len(text) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(payload[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise CapacityError(f"graph6 encoding supports n <= {GRAPH6_MAX_N}, got {n}")
    adj = g.adjacency
    bits = [1 if i in adj[j] else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Decode one record per non-blank line."""
    for lineno, raw in enumerate(lines, 1):
        text = _as_text(raw).strip()
        if not text:
            continue
        try:
            yield decode_graph6(text)
        except ParseError as exc:
            raise ParseError(str(exc), offset=exc.offset, line=lineno) from None


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if len(parts) != 2:
                raise ValueError
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"expected two integers, got {raw.strip()!r}", line=lineno) from None
    if not rows:
        raise ParseError("missing 'n m' header line", line=1)
    hdr_line, n, m = rows[0]
    if n < 1 or m < 0:
        raise ParseError(f"invalid header n={n} m={m}", line=hdr_line)
    if len(rows) - 1 != m:
        raise ParseError(f"header declares {m} edge(s) but {len(rows) - 1} were given", line=hdr_line)
    seen = set()
    edges = []
    for lineno, u, v in rows[1:]:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1} in edge ({u}, {v})", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", line=lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def looks_like_edge_list(text: str) -> bool:
    """Heuristic used by the CLI: the first meaningful line is two integers."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False
