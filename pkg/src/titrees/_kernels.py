"""Compiled kernels for the hot paths: all-sources BFS on large trees and
the free-tree level-sequence scan used by the exhaustive search.

The level-sequence successor is the Wright-Richmond-Odlyzko-McKay scheme:
free trees are represented by canonical preorder level sequences (root at
level 0, first root subtree no higher than the rest, with size and
lexicographic tie-breaks), advanced by the Beyer-Hedetniemi rooted-tree
successor plus a validity jump.  ``titrees.search`` carries a pure-Python
mirror of the same stepping logic; the two are cross-checked in tests.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def all_sources_bfs(n, indptr, nbrs):
    """Per-vertex distance sums and the direct unordered pair sum."""
    tr = np.zeros(n, np.int64)
    dist = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    pair_sum = 0
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        total = 0
        below = 0
        while head < tail:
            v = queue[head]
            head += 1
            d = dist[v]
            total += d
            if v < s:
                below += d
            for e in range(indptr[v], indptr[v + 1]):
                w = nbrs[e]
                if dist[w] < 0:
                    dist[w] = d + 1
                    queue[tail] = w
                    tail += 1
        tr[s] = total
        pair_sum += below
    return tr, pair_sum


@njit(cache=True, nogil=True)
def _bh_advance(levels, n, p):
    """Beyer-Hedetniemi successor in place; chop at p (or scan when p < 0).
    Returns False when the sequence was the last one (the star)."""
    if p < 0:
        p = n - 1
        while p > 0 and levels[p] == 1:
            p -= 1
    if p == 0:
        return False
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    for i in range(p, n):
        levels[i] = levels[i - p + q]
    return True


@njit(cache=True, nogil=True)
def _second_one(levels, n):
    """Index of the second level-1 vertex (start of the rest), or n."""
    seen = False
    for i in range(1, n):
        if levels[i] == 1:
            if seen:
                return i
            seen = True
    return n


@njit(cache=True, nogil=True)
def _is_free_canonical(levels, n):
    m = _second_one(levels, n)
    left_height = 0
    for i in range(1, m):
        if levels[i] - 1 > left_height:
            left_height = levels[i] - 1
    rest_height = 0
    for i in range(m, n):
        if levels[i] > rest_height:
            rest_height = levels[i]
    if rest_height > left_height:
        return True
    if rest_height < left_height:
        return False
    left_len = m - 1
    rest_len = n - m + 1
    if left_len > rest_len:
        return False
    if left_len < rest_len:
        return True
    # equal heights and sizes: left must not exceed rest lexicographically
    for j in range(1, left_len):
        a = levels[1 + j] - 1
        b = levels[m + j - 1]
        if a != b:
            return a < b
    return True


@njit(cache=True, nogil=True)
def _advance_to_valid(levels, n):
    """Jump forward until the sequence is a canonical free tree.
    Returns False when the enumeration is exhausted."""
    while not _is_free_canonical(levels, n):
        m = _second_one(levels, n)
        p = m - 1
        chopped_level = levels[p]
        if not _bh_advance(levels, n, p):
            return False
        if chopped_level > 2:
            m2 = _second_one(levels, n)
            new_left_height = 0
            for i in range(1, m2):
                if levels[i] - 1 > new_left_height:
                    new_left_height = levels[i] - 1
            length = new_left_height + 1
            for i in range(length):
                levels[n - length + i] = i + 1
    return True


@njit(cache=True, nogil=True)
def scan_shard(n, shard_id, shard_count, seq_buf, w_buf, idx_buf):
    """Walk every free tree of order n; analyze the trees whose stream
    index is in this shard's residue class.

    Stores the level sequence, Wiener index, and stream index of every TI
    tree found, up to the buffer capacity.  Returns (trees_in_shard,
    ti_in_shard, rows_stored); rows_stored < ti_in_shard means the caller
    must retry with a larger buffer.
    """
    levels = np.empty(n, np.int64)
    half = n // 2
    for i in range(half + 1):
        levels[i] = i
    for i in range(1, n - half):
        levels[half + i] = i

    parent = np.empty(n, np.int64)
    lastat = np.empty(n, np.int64)
    size = np.empty(n, np.int64)
    tr = np.empty(n, np.int64)
    srt = np.empty(n, np.int64)

    cap = seq_buf.shape[0]
    total = 0
    ti_count = 0
    stored = 0
    idx = 0
    alive = n >= 2
    while alive:
        if not _advance_to_valid(levels, n):
            break
        if idx % shard_count == shard_id:
            total += 1
            lastat[0] = 0
            for i in range(1, n):
                parent[i] = lastat[levels[i] - 1]
                lastat[levels[i]] = i
            for i in range(n):
                size[i] = 1
            for i in range(n - 1, 0, -1):
                size[parent[i]] += size[i]
            t0 = 0
            for i in range(n):
                t0 += levels[i]
            tr[0] = t0
            for i in range(1, n):
                tr[i] = tr[parent[i]] + n - 2 * size[i]
            is_ti = True
            for i in range(n):
                v = tr[i]
                j = i - 1
                while j >= 0 and srt[j] > v:
                    srt[j + 1] = srt[j]
                    j -= 1
                if j >= 0 and srt[j] == v:
                    is_ti = False
                    break
                srt[j + 1] = v
            if is_ti:
                ti_count += 1
                if stored < cap:
                    w = 0
                    for i in range(1, n):
                        w += size[i] * (n - size[i])
                    for i in range(n):
                        seq_buf[stored, i] = levels[i]
                    w_buf[stored] = w
                    idx_buf[stored] = idx
                    stored += 1
        idx += 1
        alive = _bh_advance(levels, n, -1)
    return total, ti_count, stored
