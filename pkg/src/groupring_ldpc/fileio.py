"""Flat-file formats: alist parity-check matrices and packed bit streams."""
from __future__ import annotations

import numpy as np

from . import gf2


def write_alist(H, path=None):
    """alist text for H.  Adjacency lists are 1-based and zero-padded to the max degree."""
    H = gf2.as_bits(H)
    m, n = H.shape
    cols = [np.flatnonzero(H[:, j]) + 1 for j in range(n)]
    rows = [np.flatnonzero(H[i]) + 1 for i in range(m)]
    dv = max((len(c) for c in cols), default=0)
    dc = max((len(r) for r in rows), default=0)

    def padded(lists, width):
        return [" ".join(str(int(v)) for v in np.pad(x, (0, width - len(x)))) for x in lists]

    lines = [f"{n} {m}", f"{dv} {dc}",
             " ".join(str(len(c)) for c in cols),
             " ".join(str(len(r)) for r in rows)]
    lines += padded(cols, dv) + padded(rows, dc)
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w") as f:
            f.write(text)
    return text


def read_alist(source):
    """Parse alist from a path or from the text itself (anything containing a newline)."""
    if "\n" not in source:
        with open(source) as f:
            source = f.read()
    tok = [int(t) for t in source.split()]
    n, m = tok[0], tok[1]
    dv, dc = tok[2], tok[3]
    pos = 4
    col_deg = tok[pos:pos + n]
    pos += n
    row_deg = tok[pos:pos + m]
    pos += m
    H = np.zeros((m, n), dtype=np.uint8)
    for j in range(n):
        for v in tok[pos:pos + dv]:
            if v:
                H[v - 1, j] = 1
        pos += dv
    for i in range(m):
        idx = [v - 1 for v in tok[pos:pos + dc] if v]
        pos += dc
        if not (H[i, idx] == 1).all() or len(idx) != row_deg[i]:
            raise ValueError(f"alist row {i + 1} disagrees with the column lists")
    if list(H.sum(0)) != col_deg or list(H.sum(1)) != row_deg:
        raise ValueError("alist degree lists disagree with adjacency")
    return H


def pack_bits(bits):
    """Flat bit vector -> bytes, LSB first within each byte, last byte zero padded."""
    return np.packbits(gf2.as_bits(bits).ravel(), bitorder="little").tobytes()


def unpack_bits(data, count=None):
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")
    return bits if count is None else bits[:count]


def read_words(path, k):
    """Bit stream from a file cut into k-bit words; a short tail is zero padded
    on the right.  A tail of fewer than 8 zero bits is byte padding and dropped."""
    with open(path, "rb") as f:
        bits = unpack_bits(f.read())
    if k == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    tail = len(bits) % k
    if tail and tail < 8 and not bits[len(bits) - tail:].any():
        bits = bits[: len(bits) - tail]
    count = -(-len(bits) // k)
    bits = np.pad(bits, (0, count * k - len(bits)))
    return bits.reshape(count, k)


def write_words(path, words):
    with open(path, "wb") as f:
        f.write(pack_bits(words))
