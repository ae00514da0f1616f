import networkx as nx
import pytest

from titrees.errors import MalformedSparse6, NotATree
from titrees.families import build_tree, parse_spec
from titrees.search import enumerate_trees, ti_trees
from titrees.sparse6 import decode_graph6, decode_line, decode_sparse6, encode_sparse6
from titrees.tree import canonical_code

from oracles import random_tree


def to_nx(t):
    g = nx.Graph()
    g.add_nodes_from(range(t.n))
    g.add_edges_from(t.edges)
    return g


class TestRoundTrip:
    def test_p3(self):
        t = build_tree(parse_spec("P(3)"))
        assert decode_sparse6(encode_sparse6(t)).edges == ((0, 1), (1, 2))

    def test_caterpillar(self):
        t = build_tree(parse_spec("CV(13; 7:2,9:1)"))
        back = decode_sparse6(encode_sparse6(t))
        assert back.edges == t.edges
        assert canonical_code(back) == canonical_code(t)

    def test_single_vertex(self):
        from titrees.tree import Tree

        t = Tree(1, [])
        assert decode_sparse6(encode_sparse6(t)).n == 1

    def test_random_trees(self, rng):
        for _ in range(500):
            t = random_tree(rng, rng.randint(2, 64))
            back = decode_sparse6(encode_sparse6(t))
            assert back.n == t.n and back.edges == t.edges

    def test_large_order_header_form(self, rng):
        # n > 62 exercises the multi-byte vertex-count encoding
        t = random_tree(rng, 100)
        line = encode_sparse6(t)
        assert decode_sparse6(line).edges == t.edges


class TestNautyCompatibility:
    def test_byte_identical_small(self):
        for n in range(2, 10):
            for t in enumerate_trees(n):
                mine = encode_sparse6(t)
                theirs = nx.to_sparse6_bytes(to_nx(t), nodes=range(t.n), header=False)
                assert mine.encode() + b"\n" == theirs

    def test_byte_identical_random(self, rng):
        # includes n = 2^k orders, which hit the special padding rule
        for n in (4, 8, 16, 32, 63, 64, 65, 90):
            for _ in range(25):
                t = random_tree(rng, n)
                mine = encode_sparse6(t)
                theirs = nx.to_sparse6_bytes(to_nx(t), nodes=range(t.n), header=False)
                assert mine.encode() + b"\n" == theirs, (n, mine)

    def test_decode_networkx_output(self, rng):
        for _ in range(200):
            t = random_tree(rng, rng.randint(2, 40))
            raw = nx.to_sparse6_bytes(to_nx(t), nodes=range(t.n), header=False)
            assert decode_sparse6(raw).edges == t.edges

    def test_golden_corpus_order_10(self, data_dir):
        lines = (data_dir / "nauty_trees_10.s6").read_text().splitlines()
        assert len(lines) == 106
        decoded = [decode_line(line) for line in lines]
        assert all(t.n == 10 for t in decoded)
        corpus_codes = {canonical_code(t) for t in decoded}
        internal_codes = {canonical_code(t) for t in enumerate_trees(10)}
        assert corpus_codes == internal_codes
        assert len(corpus_codes) == 106

    @pytest.mark.parametrize("n", [7, 9, 11, 13, 14])
    def test_golden_ti_files(self, data_dir, n):
        want = (data_dir / f"ti_trees_{n}.s6").read_text()
        got = "".join(encode_sparse6(t) + "\n" for t in ti_trees(n))
        assert got == want


class TestMalformed:
    def test_missing_colon(self):
        with pytest.raises(MalformedSparse6):
            decode_sparse6("I`ESyOl^F")

    def test_bad_characters(self):
        with pytest.raises(MalformedSparse6):
            decode_sparse6(":I`ES\x07Ol^F")

    def test_truncated_count(self):
        with pytest.raises(MalformedSparse6):
            decode_sparse6(":~A")

    def test_non_tree_payload(self):
        g = nx.cycle_graph(4)
        line = nx.to_sparse6_bytes(g, nodes=range(4), header=False)
        with pytest.raises(NotATree):
            decode_sparse6(line)

    def test_header_accepted(self):
        t = build_tree(parse_spec("P(4)"))
        line = ">>sparse6<<" + encode_sparse6(t)
        assert decode_line(line).edges == t.edges


class TestGraph6:
    def test_decode(self, rng):
        for _ in range(100):
            t = random_tree(rng, rng.randint(2, 40))
            raw = nx.to_graph6_bytes(to_nx(t), nodes=range(t.n), header=False)
            assert decode_graph6(raw).edges == t.edges
            assert decode_line(raw).edges == t.edges

    def test_too_short(self):
        with pytest.raises(MalformedSparse6):
            decode_graph6("I")

    def test_sparse6_rejected(self):
        with pytest.raises(MalformedSparse6):
            decode_graph6(":I`ESyOl^F")
