"""Bit-exact sparse6 encoding and decoding (with graph6 decoding as an
input convenience), compatible with files produced by nauty tooling.

A sparse6 record is one line: ``:`` + N(n) + a bitstream of (b, x) groups,
six bits per printable character in the 63..126 range.  Decoding follows
the published format semantics: ``b = 1`` advances the current vertex,
``x > v`` jumps to vertex x, otherwise {x, v} is an edge; trailing groups
that run past n are padding.
"""

from __future__ import annotations

from .errors import MalformedSparse6
from .tree import Tree

_HEADER_S6 = ">>sparse6<<"
_HEADER_G6 = ">>graph6<<"


def _n_to_data(n: int) -> list[int]:
    if n < 0:
        raise MalformedSparse6(f"vertex count {n} out of range")
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63, (n >> 30) & 63, (n >> 24) & 63, (n >> 18) & 63,
                (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise MalformedSparse6(f"vertex count {n} exceeds the 2^36 format limit")


def _data_to_n(data: list[int]) -> tuple[int, list[int]]:
    if not data:
        raise MalformedSparse6("truncated vertex count")
    if data[0] <= 62:
        return data[0], data[1:]
    if len(data) < 4:
        raise MalformedSparse6("truncated vertex count")
    if data[1] <= 62:
        return (data[1] << 12) + (data[2] << 6) + data[3], data[4:]
    if len(data) < 8:
        raise MalformedSparse6("truncated vertex count")
    n = 0
    for d in data[2:8]:
        n = (n << 6) + d
    return n, data[8:]


def _edge_width(n: int) -> int:
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def _payload(line) -> str:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    return line.strip()


def _six_bit_values(text: str) -> list[int]:
    vals = []
    for ch in text:
        code = ord(ch)
        if not (63 <= code <= 126):
            raise MalformedSparse6(f"character {ch!r} outside the printable 63..126 range")
        vals.append(code - 63)
    return vals


def encode_sparse6(t: Tree) -> str:
    """One sparse6 line (without trailing newline) for the tree."""
    n = t.n
    k = _edge_width(n)
    bits: list[int] = []

    def put(x: int, width: int) -> None:
        for i in range(width - 1, -1, -1):
            bits.append((x >> i) & 1)

    v = 0
    for hi, lo in sorted((max(e), min(e)) for e in t.edges):
        if hi == v:
            bits.append(0)
            put(lo, k)
        elif hi == v + 1:
            v += 1
            bits.append(1)
            put(lo, k)
        else:
            v = hi
            bits.append(1)
            put(hi, k)
            bits.append(0)
            put(lo, k)

    pad = (-len(bits)) % 6
    if k < 6 and n == (1 << k) and pad >= k and v < n - 1:
        # an all-ones pad group would decode as a loop at n-1; lead with 0
        bits.append(0)
        pad = (-len(bits)) % 6
    bits.extend([1] * pad)

    data = _n_to_data(n)
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i:i + 6]:
            word = (word << 1) | b
        data.append(word)
    return ":" + "".join(chr(63 + d) for d in data)


def decode_sparse6(line) -> Tree:
    """Decode one sparse6 line to a tree; the optional ``>>sparse6<<``
    header is accepted.  Raises NotATree if the graph is not a tree."""
    text = _payload(line)
    if text.startswith(_HEADER_S6):
        text = text[len(_HEADER_S6):]
    if not text.startswith(":"):
        raise MalformedSparse6("sparse6 line must start with ':'")
    data = _six_bit_values(text[1:])
    n, rest = _data_to_n(data)
    if n < 1:
        raise MalformedSparse6(f"vertex count {n} out of range")
    k = _edge_width(n)

    nbits = len(rest) * 6
    pos = 0
    v = 0
    edges = []
    while pos + 1 + k <= nbits:
        b = (rest[pos // 6] >> (5 - pos % 6)) & 1
        pos += 1
        x = 0
        for _ in range(k):
            x = (x << 1) | ((rest[pos // 6] >> (5 - pos % 6)) & 1)
            pos += 1
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x, v))
    return Tree(n, edges)


def decode_graph6(line) -> Tree:
    """Decode one graph6 line (upper-triangle bitmap) to a tree."""
    text = _payload(line)
    if text.startswith(_HEADER_G6):
        text = text[len(_HEADER_G6):]
    if text.startswith(":"):
        raise MalformedSparse6("got a sparse6 line, expected graph6")
    data = _six_bit_values(text)
    n, rest = _data_to_n(data)
    if n < 1:
        raise MalformedSparse6(f"vertex count {n} out of range")
    need = n * (n - 1) // 2
    if len(rest) * 6 < need:
        raise MalformedSparse6(f"graph6 body too short: {len(rest) * 6} bits < {need}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[pos // 6] >> (5 - pos % 6)) & 1:
                edges.append((i, j))
            pos += 1
    return Tree(n, edges)


def decode_line(line) -> Tree:
    """Decode either format, keyed on the ':' prefix."""
    text = _payload(line)
    if text.startswith(_HEADER_S6) or text.startswith(":"):
        return decode_sparse6(text)
    return decode_graph6(text)
