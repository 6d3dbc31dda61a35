# ----------------------------------------------------------
# Domination Lab
# File: domlab/graph6.py
# ----------------------------------------------------------
# Description:
# graph6 reading and writing for simple undirected graphs. The
# bit packing is networkx's (`to_graph6_bytes` / `from_graph6_bytes`);
# this module adds the checks networkx skips (characters below 63,
# non-zero padding) and reports every error with its byte offset.
# ----------------------------------------------------------

import logging
from pathlib import Path
from typing import Iterator, List, NamedTuple, Optional, Union

import networkx as nx
from networkx.readwrite.graph6 import data_to_n

from domlab.exceptions import Graph6ParseError, GraphError
from domlab.graph_core import Graph, to_networkx

HEADER = ">>graph6<<"
MAX_N = 68719476735  # 2^36 - 1, the largest size the 8-byte prefix can hold


def _prefix_width(data: List[int]) -> int:
    """Bytes taken by the size prefix (1, 4 or 8); data is already offset by -63."""
    if data[0] != 63:
        return 1
    return 8 if len(data) >= 2 and data[1] == 63 else 4


# ----------------------------------------------------------
# Decoder
# ----------------------------------------------------------
def parse_graph6(text: Union[str, bytes]) -> Graph:
    """
    Decode one graph6 line into a simple Graph.

    An optional ">>graph6<<" header and a trailing newline are accepted.
    Errors report the byte offset within the original input.
    """
    if isinstance(text, str):
        for index, char in enumerate(text):
            if ord(char) > 126:
                raise Graph6ParseError(
                    f"character {char!r} outside the graph6 range 63..126", index, text
                )
        raw = text.encode("ascii")
    else:
        raw = bytes(text)
    line = raw.decode("ascii", errors="replace")
    offset = 0
    if raw.startswith(HEADER.encode()):
        offset = len(HEADER)
    body = raw[offset:]
    if body.endswith(b"\r\n"):
        body = body[:-2]
    elif body.endswith(b"\n"):
        body = body[:-1]

    for index, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(
                f"character {chr(byte)!r} outside the graph6 range 63..126",
                offset + index, line,
            )
    if not body:
        raise Graph6ParseError("empty graph6 string", offset, line)

    data = [byte - 63 for byte in body]
    prefix = _prefix_width(data)
    if len(data) < prefix:
        raise Graph6ParseError("truncated size prefix", offset + len(body), line)
    n, payload = data_to_n(data)

    bit_count = n * (n - 1) // 2
    needed = (bit_count + 5) // 6
    if len(payload) < needed:
        raise Graph6ParseError(
            f"expected {needed} adjacency bytes for n={n}, found {len(payload)}",
            offset + len(body), line,
        )
    if len(payload) > needed:
        raise Graph6ParseError("trailing garbage after adjacency data",
                               offset + prefix + needed, line)
    # padding bits of the final group must be zero in canonical data
    if bit_count % 6 and payload[-1] & ((1 << (6 - bit_count % 6)) - 1):
        raise Graph6ParseError("non-zero padding bits", offset + prefix + needed - 1, line)

    try:
        decoded = nx.from_graph6_bytes(body)
    except (nx.NetworkXError, ValueError) as error:
        raise Graph6ParseError(str(error), offset, line) from error
    return Graph(n, tuple(sorted((min(u, v), max(u, v)) for u, v in decoded.edges())))


# ----------------------------------------------------------
# Encoder
# ----------------------------------------------------------
def write_graph6(g: Graph) -> str:
    """Encode a simple graph as its canonical graph6 line (no newline)."""
    if not g.is_simple():
        raise GraphError("graph6 requires a simple graph")
    if g.n > MAX_N:
        raise GraphError(f"graph6 cannot encode {g.n} vertices")
    encoded = nx.to_graph6_bytes(to_networkx(g, simple=True), header=False)
    return encoded.decode("ascii").rstrip("\n")


# ----------------------------------------------------------
# Files
# ----------------------------------------------------------
class Graph6Line(NamedTuple):
    """One line of a graph6 file: either a graph or the reason it failed."""
    line_number: int
    text: str
    graph: Optional[Graph]
    error: Optional[Graph6ParseError]


def read_graph6_file(path: Union[str, Path], encoding: str = "ascii") -> Iterator[Graph6Line]:
    """
    Stream a graph6 file one line at a time.

    Blank lines are skipped. Parse failures are yielded, not raised, so
    a corpus scan can continue past a bad line.
    """
    with open(path, "r", encoding=encoding, errors="replace") as handle:
        for number, raw in enumerate(handle, start=1):
            text = raw.strip()
            if not text or text == HEADER:
                continue
            try:
                yield Graph6Line(number, text, parse_graph6(text), None)
            except Graph6ParseError as error:
                logging.warning(f"graph6 line {number} skipped: {error}")
                yield Graph6Line(number, text, None, error)


def write_graph6_file(graphs: List[Graph], path: Union[str, Path]) -> Path:
    """Write one graph6 line per graph."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text("".join(write_graph6(g) + "\n" for g in graphs), encoding="ascii")
    return target
