"""Dense GF(2) matrices as numpy uint8 arrays of 0/1.

Elimination packs rows into 64-bit words and XORs whole rows at a time.
"""
from __future__ import annotations

from collections import deque

import numpy as np
import scipy.sparse as sp

BinaryMatrix = np.ndarray  # 2-D uint8 with entries in {0, 1}


def as_bits(M):
    return (np.asarray(M) % 2).astype(np.uint8)


def pack_rows(M):
    M = as_bits(np.atleast_2d(M))
    rows, cols = M.shape
    nwords = max(1, -(-cols // 64))
    packed = np.packbits(M, axis=1, bitorder="little")
    buf = np.zeros((rows, nwords * 8), dtype=np.uint8)
    buf[:, : packed.shape[1]] = packed
    return buf.view(np.uint64).copy()


def unpack_rows(W, cols):
    bits = np.unpackbits(np.ascontiguousarray(W).view(np.uint8), axis=1, bitorder="little")
    return bits[:, :cols].astype(np.uint8)


def _echelon(W, ncols, reduce=False):
    """In-place row echelon form on packed rows; returns pivot columns."""
    nrows = W.shape[0]
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        w, bit = divmod(c, 64)
        bit = np.uint64(bit)
        hits = np.flatnonzero((W[r:, w] >> bit) & np.uint64(1))
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            W[[r, p]] = W[[p, r]]
        if reduce:
            rows = np.flatnonzero((W[:, w] >> bit) & np.uint64(1))
            rows = rows[rows != r]
        else:
            rows = r + 1 + np.flatnonzero((W[r + 1:, w] >> bit) & np.uint64(1))
        if rows.size:
            W[rows, w:] ^= W[r, w:]
        pivots.append(c)
        r += 1
    return pivots


def rank(M):
    M = np.atleast_2d(M)
    if M.size == 0:
        return 0
    return len(_echelon(pack_rows(M), M.shape[1]))


def rref(M):
    """Reduced row echelon form and pivot columns."""
    M = np.atleast_2d(M)
    W = pack_rows(M)
    piv = _echelon(W, M.shape[1], reduce=True)
    return unpack_rows(W, M.shape[1]), piv


def nullspace(M):
    """Basis of {x : M x = 0} as the rows of a (cols - rank) x cols matrix."""
    M = np.atleast_2d(M)
    cols = M.shape[1]
    R, piv = rref(M)
    free = [c for c in range(cols) if c not in set(piv)]
    N = np.zeros((len(free), cols), dtype=np.uint8)
    for k, f in enumerate(free):
        N[k, f] = 1
        for i, p in enumerate(piv):
            N[k, p] = R[i, f]
    return N


def solve(A, b):
    """One solution x of A x = b, or None if inconsistent."""
    A = np.atleast_2d(A)
    aug = np.concatenate([as_bits(A), as_bits(b).reshape(-1, 1)], axis=1)
    R, piv = rref(aug)
    n = A.shape[1]
    if n in piv:
        return None
    x = np.zeros(n, dtype=np.uint8)
    for i, p in enumerate(piv):
        x[p] = R[i, n]
    return x


def right_inverse(A):
    """C with A C = I for a full-row-rank A."""
    A = as_bits(np.atleast_2d(A))
    r, n = A.shape
    R, piv = rref(np.concatenate([A, np.eye(r, dtype=np.uint8)], axis=1))
    if len(piv) < r or piv[-1] >= n:
        raise ValueError("matrix does not have full row rank")
    C = np.zeros((n, r), dtype=np.uint8)
    for i, p in enumerate(piv):
        C[p] = R[i, n:]
    return C


def inverse(A):
    A = as_bits(A)
    if A.shape[0] != A.shape[1]:
        raise ValueError("square matrix required")
    return right_inverse(A)


def independent_rows(M):
    """Greedy row selection in index order: row i is kept if it is not in the
    span of the rows kept before it."""
    M = np.atleast_2d(M)
    return _echelon(pack_rows(M.T), M.shape[0])


def matmul(A, B):
    A, B = np.asarray(A), np.asarray(B)
    if A.ndim == 1:
        return matmul(A[None, :], B)[0]
    if A.shape[1] >= 1 << 24:
        raise ValueError("inner dimension too large for exact float accumulation")
    P = A.astype(np.float32) @ B.astype(np.float32)
    return (P.astype(np.int64) & 1).astype(np.uint8)


def identity(k):
    return np.eye(k, dtype=np.uint8)


def has_4cycle(H):
    """True iff two rows share two or more columns."""
    S = sp.csr_matrix(as_bits(H).astype(np.int32))
    P = (S @ S.T).tolil()
    P.setdiag(0)
    P = P.tocsr()
    return P.nnz > 0 and P.max() > 1


def girth(H, cap=12, block_size=None):
    """Length of the shortest Tanner-graph cycle, or None if it exceeds cap.

    With block_size set, H is assumed quasi-cyclic with every block commuting
    with the same regular shift action, so one variable node per column block
    is enough as a BFS root."""
    H = as_bits(H)
    m, n = H.shape
    S = sp.csr_matrix(H)
    St = sp.csr_matrix(H.T)
    adj = [St.indices[St.indptr[v]:St.indptr[v + 1]] + n for v in range(n)]
    adj += [S.indices[S.indptr[c]:S.indptr[c + 1]] for c in range(m)]
    roots = range(0, n, block_size) if block_size else range(n)
    best = cap + 1
    for root in roots:
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                y = int(y)
                if y == parent[x]:
                    continue
                if y in dist:
                    best = min(best, dist[x] + dist[y] + 1)
                else:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
    return best if best <= cap else None
