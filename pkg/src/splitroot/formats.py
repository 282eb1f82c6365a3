"""Graph serialisation: a plain edge-list format and graph6.

Edge list
    First significant line is "n m", followed by exactly m lines "u v"
    with 0-based endpoints.  Blank lines and lines starting with '#' are
    skipped.  Parsing is strict: out-of-range labels, self-loops,
    repeated edges and a wrong edge count are all rejected.

graph6
    The usual ASCII encoding of the upper triangle, column by column,
    six bits per printable byte (offset 63).  Both the one-byte and the
    four-byte vertex-count headers are handled.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graphs import Graph

_G6_MAX_SHORT = 62
_G6_MAX_LONG = 258047


def parse_edge_list(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(body)} lines")
    seen = set()
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoints in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if u > v:
            raise GraphFormatError(f"edge endpoints must be ascending, got {line!r}")
        if (u, v) in seen:
            raise GraphFormatError(f"repeated edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if not line:
        raise GraphFormatError("empty graph6 input")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError:
        raise GraphFormatError("non-ASCII byte in graph6 input") from None
    for b in data:
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} outside graph6 alphabet")
    vals = [b - 63 for b in data]
    if vals[0] < 63:
        n = vals[0]
        pos = 1
    else:
        if len(vals) < 2:
            raise GraphFormatError("truncated graph6 header")
        if vals[1] < 63:
            if len(vals) < 4:
                raise GraphFormatError("truncated graph6 header")
            n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
            pos = 4
        else:
            if len(vals) < 8:
                raise GraphFormatError("truncated graph6 header")
            n = 0
            for v in vals[2:8]:
                n = (n << 6) | v
            pos = 8
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(vals) - pos != nbytes:
        raise GraphFormatError(
            f"graph6 body has {len(vals) - pos} bytes, expected {nbytes} for n={n}"
        )
    bitstream = 0
    for v in vals[pos:]:
        bitstream = (bitstream << 6) | v
    pad = nbytes * 6 - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 body")
    bitstream >>= pad
    edges = []
    # Bits run column by column: (0,1), (0,2), (1,2), (0,3), ...
    idx = nbits
    for v in range(1, n):
        for u in range(v):
            idx -= 1
            if bitstream >> idx & 1:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_graph6(g: Graph) -> str:
    n = g.n
    if n > _G6_MAX_LONG:
        raise GraphFormatError(f"graph6 writer supports n <= {_G6_MAX_LONG}")
    if n <= _G6_MAX_SHORT:
        head = [n]
    else:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    bitstream = 0
    nbits = n * (n - 1) // 2
    for v in range(1, n):
        for u in range(v):
            bitstream = (bitstream << 1) | (g.adj[u] >> v & 1)
    pad = (-nbits) % 6
    bitstream <<= pad
    body = []
    for shift in range(nbits + pad - 6, -1, -6):
        body.append((bitstream >> shift) & 63)
    return "".join(chr(63 + x) for x in head + body)


def sniff_format(filename: str) -> str:
    lowered = filename.lower()
    if lowered.endswith(".g6") or lowered.endswith(".graph6"):
        return "graph6"
    return "edgelist"


def parse(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise GraphFormatError(f"unknown format {fmt!r}")


def serialise(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return format_graph6(g) + "\n"
    if fmt == "edgelist":
        return format_edge_list(g)
    raise GraphFormatError(f"unknown format {fmt!r}")
