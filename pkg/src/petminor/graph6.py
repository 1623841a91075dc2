"""graph6 encoding, one graph per line.

Header: ``chr(63 + n)`` for n <= 62, otherwise ``~`` followed by three
6-bit groups.  Body: the upper triangle in column-major order (for j = 1..n-1,
for i = 0..j-1) packed six bits per byte, most significant first, offset 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_VERTICES, CapacityError, Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x < 64 for x in data):
        raise Graph6Error(f"invalid graph6 character in {text!r}")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        raise Graph6Error("graph6 sizes above 258047 are not supported")
    if n > MAX_VERTICES:
        raise CapacityError(f"graph on {n} vertices exceeds capacity {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_file(path: str | Path) -> list[Graph]:
    lines = Path(path).read_text(encoding="ascii").splitlines()
    return [decode(line) for line in lines if line.strip()]


def write_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    Path(path).write_text("".join(encode(g) + "\n" for g in graphs), encoding="ascii")


def iter_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield decode(line)
