#!/usr/bin/env python3
"""Regenerate the golden interchange fixtures under tests/data/.

* nauty_trees_10.s6 - all 106 free trees of order 10, written by networkx's
  nauty-compatible sparse6 writer (an external encoder relative to this
  package); the first record carries the optional >>sparse6<< header.
* ti_trees_{7,9,11,13,14}.s6 - every TI tree of those orders as produced by
  the package's own search + encoder, in enumeration-stream order.
"""

from pathlib import Path

import networkx as nx

from titrees.search import ti_trees
from titrees.sparse6 import encode_sparse6

DATA = Path(__file__).resolve().parents[1] / "tests" / "data"


def write_nauty_corpus() -> None:
    lines = []
    for i, g in enumerate(nx.nonisomorphic_trees(10)):
        raw = nx.to_sparse6_bytes(g, nodes=sorted(g.nodes()), header=(i == 0))
        lines.append(raw.decode("ascii"))
    (DATA / "nauty_trees_10.s6").write_text("".join(lines))
    print(f"nauty_trees_10.s6: {len(lines)} records")


def write_ti_files() -> None:
    for n in (7, 9, 11, 13, 14):
        rows = [encode_sparse6(t) + "\n" for t in ti_trees(n)]
        (DATA / f"ti_trees_{n}.s6").write_text("".join(rows))
        print(f"ti_trees_{n}.s6: {len(rows)} records")


if __name__ == "__main__":
    DATA.mkdir(parents=True, exist_ok=True)
    write_nauty_corpus()
    write_ti_files()
