"""Wiener-increasing tree rewrites: vertex fusion, straightening a
non-path branch into a pendent path, and moving a leaf between two
pendent paths (majorization).

The rewrites preserve order; straightening and majorization strictly
increase the Wiener index.  Comparisons are made on values, never on
labels: ``arm_straighten`` relabels the replaced branch.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .errors import (
    BranchIsAlreadyPath,
    LengthOrderViolated,
    NotABranchingVertex,
    NotAnEdge,
    NotPendentPaths,
)
from .tree import Tree


def fuse(t1: Tree, v1: int, t2: Tree, v2: int) -> Tree:
    """Identify vertex ``v1`` of ``t1`` with vertex ``v2`` of ``t2``.

    Vertices of ``t1`` keep their labels; the remaining vertices of ``t2``
    are appended in label order.  The result has order |t1| + |t2| - 1.
    """
    t1._check_label(v1)
    t2._check_label(v2)
    offset = {}
    nxt = t1.n
    for w in range(t2.n):
        if w == v2:
            offset[w] = v1
        else:
            offset[w] = nxt
            nxt += 1
    edges = list(t1.edges)
    edges.extend((offset[a], offset[b]) for a, b in t2.edges)
    return Tree(t1.n + t2.n - 1, edges)


def branch_vertices(t: Tree, v: int, branch_root: int) -> list[int]:
    """Vertices of the component of t - v that contains ``branch_root``."""
    t._check_label(v)
    t._check_label(branch_root)
    if not t.has_edge(v, branch_root):
        raise NotAnEdge(f"({v}, {branch_root}) is not an edge")
    seen = bytearray(t.n)
    seen[v] = 1
    seen[branch_root] = 1
    out = [branch_root]
    stack = [branch_root]
    while stack:
        x = stack.pop()
        for y in t.neighbors(x):
            if not seen[y]:
                seen[y] = 1
                out.append(y)
                stack.append(y)
    return out


def pendent_path(t: Tree, v: int, branch_root: int) -> Optional[list[int]]:
    """The branch at ``v`` through ``branch_root`` as an outward vertex list,
    or None when the branch is not a path hanging at ``v``."""
    t._check_label(v)
    t._check_label(branch_root)
    if not t.has_edge(v, branch_root):
        raise NotAnEdge(f"({v}, {branch_root}) is not an edge")
    chain = []
    prev, cur = v, branch_root
    while True:
        chain.append(cur)
        nxt = [w for w in t.neighbors(cur) if w != prev]
        if not nxt:
            return chain
        if len(nxt) > 1:
            return None
        prev, cur = cur, nxt[0]


class Straightened(NamedTuple):
    tree: Tree
    arm: tuple[int, ...]  # labels of the replacement path, outward from v


def arm_straighten(t: Tree, v: int, branch_root: int) -> Straightened:
    """Replace the branch at ``v`` through ``branch_root`` by a pendent path
    of the same order.  The Wiener index strictly increases.

    The replacement reuses the replaced branch's labels in ascending order,
    placed outward from ``v``; all other vertices keep their labels.
    """
    if pendent_path(t, v, branch_root) is not None:
        raise BranchIsAlreadyPath(
            f"branch at {v} through {branch_root} is already a pendent path"
        )
    branch = set(branch_vertices(t, v, branch_root))
    arm = tuple(sorted(branch))
    edges = [(a, b) for a, b in t.edges if a not in branch and b not in branch]
    prev = v
    for w in arm:
        edges.append((prev, w))
        prev = w
    return Straightened(Tree(t.n, edges), arm)


def majorize(t: Tree, v: int, long_arm: int, short_arm: int) -> Tree:
    """Move the leaf of the short pendent path at ``v`` to the tip of the
    long one.  Requires degree(v) >= 3 and distinct pendent paths of
    lengths a1 >= a2; strictly increases the Wiener index.

    When the short path has length one, ``v`` loses a pendent path and its
    degree drops by one (the result may even be a path).
    """
    t._check_label(v)
    if t.degree(v) < 3:
        raise NotABranchingVertex(f"vertex {v} has degree {t.degree(v)} < 3")
    if long_arm == short_arm:
        raise NotPendentPaths("long and short arms must be distinct branches")
    p_long = pendent_path(t, v, long_arm)
    p_short = pendent_path(t, v, short_arm)
    if p_long is None or p_short is None:
        raise NotPendentPaths(
            f"branches at {v} through {long_arm} and {short_arm} must both be pendent paths"
        )
    if len(p_long) < len(p_short):
        raise LengthOrderViolated(
            f"long arm has length {len(p_long)} < short arm length {len(p_short)}"
        )
    moved = p_short[-1]
    anchor = p_short[-2] if len(p_short) > 1 else v
    edges = [(a, b) for a, b in t.edges if (a, b) != tuple(sorted((moved, anchor)))]
    edges.append((moved, p_long[-1]))
    return Tree(t.n, edges)
