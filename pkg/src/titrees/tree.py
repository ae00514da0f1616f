"""Immutable labeled trees and their distance invariants.

A tree on ``n`` vertices is stored as a validated edge set over labels
``0..n-1``.  All derived quantities (per-vertex transmissions, Wiener
index, split counts, vertex-deletion decompositions, canonical codes)
are pure functions of the tree, so values can be shared freely between
threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BadLabel, NotAnEdge, NotATree, TitreesError

# Trees at or above this order route the all-sources BFS through the
# compiled kernel; below it plain Python is faster than JIT dispatch.
_KERNEL_MIN_N = 128


class Tree:
    """Immutable tree on vertices 0..n-1 given by its edge set."""

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges):
        if not isinstance(n, int) or n < 1:
            raise NotATree(f"order must be a positive integer, got {n!r}")
        norm = []
        for pair in edges:
            u, v = pair
            if not isinstance(u, int) or not isinstance(v, int):
                raise BadLabel(f"vertex labels must be integers, got {pair!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise BadLabel(f"edge {pair!r} outside labels 0..{n - 1}")
            if u == v:
                raise NotATree(f"self-loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise NotATree(f"duplicate edge {a!r}")
        if len(norm) != n - 1:
            raise NotATree(f"tree on {n} vertices needs {n - 1} edges, got {len(norm)}")
        adj = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        reached = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = 1
                    reached += 1
                    stack.append(y)
        if reached != n:
            raise NotATree(f"graph is disconnected ({reached} of {n} vertices reachable)")
        self._n = n
        self._edges = tuple(norm)
        self._adj = tuple(tuple(a) for a in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_label(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_label(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_label(u)
        self._check_label(v)
        return v in self._adj[u]

    def _check_label(self, v) -> None:
        if not isinstance(v, int) or not (0 <= v < self._n):
            raise BadLabel(f"vertex {v!r} outside labels 0..{self._n - 1}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tree) and self._n == other._n and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Tree(n={self._n}, edges={list(self._edges)!r})"


def new_tree(n: int, edges) -> Tree:
    """Validate and build a tree; alias for the ``Tree`` constructor."""
    return Tree(n, edges)


@dataclass(frozen=True)
class TransmissionProfile:
    """Per-vertex transmissions with the derived aggregates."""

    tr: tuple[int, ...]
    wiener: int
    is_ti: bool
    min_vertex: int


def distances_from(t: Tree, v: int) -> list[int]:
    """Breadth-first distances from ``v`` to every vertex."""
    t._check_label(v)
    dist = [-1] * t.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in t.neighbors(x):
            if dist[y] < 0:
                dist[y] = d
                queue.append(y)
    return dist


def _all_sources_bfs_python(t: Tree) -> tuple[list[int], int]:
    n = t.n
    adj = t._adj
    tr = [0] * n
    pair_sum = 0
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        total = 0
        below = 0
        while queue:
            x = queue.popleft()
            d = dist[x]
            total += d
            if x < s:
                below += d
            dn = d + 1
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dn
                    queue.append(y)
        tr[s] = total
        pair_sum += below
    return tr, pair_sum


def _all_sources_bfs(t: Tree) -> tuple[list[int], int]:
    if t.n < _KERNEL_MIN_N:
        return _all_sources_bfs_python(t)
    try:
        from . import _kernels
    except ImportError:
        return _all_sources_bfs_python(t)
    import numpy as np

    n = t.n
    indptr = np.zeros(n + 1, dtype=np.int32)
    for u, v in t.edges:
        indptr[u + 1] += 1
        indptr[v + 1] += 1
    np.cumsum(indptr, out=indptr)
    nbrs = np.empty(2 * (n - 1), dtype=np.int32)
    fill = indptr[:-1].copy()
    for u, v in t.edges:
        nbrs[fill[u]] = v
        fill[u] += 1
        nbrs[fill[v]] = u
        fill[v] += 1
    tr, pair_sum = _kernels.all_sources_bfs(n, indptr, nbrs)
    return [int(x) for x in tr], int(pair_sum)


def transmission_profile(t: Tree) -> TransmissionProfile:
    """Transmissions via one BFS per source, with the Wiener index computed
    twice (direct pair sum and half the transmission sum) and cross-checked."""
    tr, pair_sum = _all_sources_bfs(t)
    total = sum(tr)
    if total != 2 * pair_sum:
        raise TitreesError(
            f"internal: transmission sum {total} != twice the pair sum {2 * pair_sum}"
        )
    is_ti = t.n > 1 and len(set(tr)) == t.n
    min_vertex = min(range(t.n), key=tr.__getitem__)
    return TransmissionProfile(tuple(tr), pair_sum, is_ti, min_vertex)


def transmissions_linear(t: Tree) -> list[int]:
    """Exact transmissions in O(n) by rerooting along a BFS order.

    Same values as :func:`transmission_profile`, computed without the
    n-fold BFS; this is the workhorse for order-10^4 certification sweeps.
    """
    n = t.n
    if n == 1:
        return [0]
    parent = [-1] * n
    parent[0] = 0
    depth = [0] * n
    order = [0]
    for x in order:
        for y in t.neighbors(x):
            if parent[y] < 0:
                parent[y] = x
                depth[y] = depth[x] + 1
                order.append(y)
    size = [1] * n
    for x in reversed(order):
        if x:
            size[parent[x]] += size[x]
    tr = [0] * n
    tr[0] = sum(depth)
    for x in order:
        if x:
            tr[x] = tr[parent[x]] + n - 2 * size[x]
    return tr


def wiener_index(t: Tree) -> int:
    """Sum of distances over unordered vertex pairs (via the linear pass)."""
    total = sum(transmissions_linear(t))
    if total % 2:
        raise TitreesError("internal: odd transmission sum")
    return total // 2


def split_count(t: Tree, u: int, v: int) -> int:
    """Number of vertices closer to ``u`` than to ``v`` across the edge uv."""
    t._check_label(u)
    t._check_label(v)
    if not t.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    seen = bytearray(t.n)
    seen[u] = 1
    seen[v] = 1
    stack = [u]
    count = 1
    while stack:
        x = stack.pop()
        for y in t.neighbors(x):
            if not seen[y]:
                seen[y] = 1
                count += 1
                stack.append(y)
    return count


def degree(t: Tree, v: int) -> int:
    return t.degree(v)


def leaves(t: Tree) -> set[int]:
    if t.n == 1:
        return {0}
    return {v for v in range(t.n) if t.degree(v) == 1}


def branching_vertices(t: Tree) -> set[int]:
    """Vertices of degree at least three."""
    return {v for v in range(t.n) if t.degree(v) >= 3}


def decompose_at(t: Tree, v: int) -> list[int]:
    """Component sizes of t - v, in descending order."""
    t._check_label(v)
    seen = bytearray(t.n)
    seen[v] = 1
    sizes = []
    for start in t.neighbors(v):
        if seen[start]:
            continue
        seen[start] = 1
        stack = [start]
        count = 1
        while stack:
            x = stack.pop()
            for y in t.neighbors(x):
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    stack.append(y)
        sizes.append(count)
    sizes.sort(reverse=True)
    return sizes


def tree_center(t: Tree) -> tuple[int, ...]:
    """The one or two middle vertices (eccentricity minimizers), by leaf peeling."""
    n = t.n
    if n <= 2:
        return tuple(range(n))
    deg = [t.degree(v) for v in range(n)]
    layer = [v for v in range(n) if deg[v] == 1]
    alive = n
    while alive > 2:
        alive -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in t.neighbors(v):
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_code(t: Tree, root: int) -> bytes:
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    for x in order:
        for y in t.neighbors(x):
            if parent[y] < 0:
                parent[y] = x
                order.append(y)
    code: list[bytes] = [b""] * t.n
    for x in reversed(order):
        kids = sorted(code[y] for y in t.neighbors(x) if y != root and parent[y] == x)
        code[x] = b"(" + b"".join(kids) + b")"
    return code[root]


def canonical_code(t: Tree) -> bytes:
    """Label-invariant encoding: equal codes iff the trees are isomorphic.

    Rooted canonical (AHU) encoding at the tree center; bicentral trees
    take the lexicographically smaller of the two rooted encodings.
    """
    return min(_rooted_code(t, c) for c in tree_center(t))
