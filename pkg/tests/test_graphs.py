"""Graph parsing, cut arithmetic, and the exhaustive solver."""

import itertools

import numpy as np
import pytest

from qaflow import (BudgetError, Graph, GraphFormatError, Partition,
                    brute_force_maxcut, cut_value, cut_values_all,
                    load_graph, parse_graph)

from conftest import FIXTURE_TABLE, make_graph


def naive_maxcut(n, edges):
    """Independent reference: plain loop over all partitions."""
    best, sols = -1, []
    for bits in itertools.product((0, 1), repeat=n):
        c = sum(bits[u] != bits[v] for u, v in edges)
        if c > best:
            best, sols = c, [bits]
        elif c == best:
            sols.append(bits)
    words = sorted("".join(str(b) for b in reversed(bits)) for bits in sols)
    return best, words


class TestGraphConstruction:
    def test_normalises_and_sorts_edges(self):
        g = Graph(4, [(3, 1), (2, 0), (0, 1)])
        assert g.edges == ((0, 1), (0, 2), (1, 3))
        assert g.n_edges == 3

    def test_rejects_self_loop(self):
        with pytest.raises(GraphFormatError, match=r"edges\[1\].*self-loop"):
            Graph(3, [(0, 1), (2, 2)])

    def test_rejects_duplicate_even_reversed(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(GraphFormatError, match="out of range"):
            Graph(3, [(0, 3)])

    def test_rejects_bad_vertex_count(self):
        with pytest.raises(GraphFormatError):
            Graph(0, [])
        with pytest.raises(GraphFormatError):
            Graph(True, [])

    def test_rejects_non_integer_endpoints(self):
        with pytest.raises(GraphFormatError):
            Graph(3, [(0, 1.0)])
        with pytest.raises(GraphFormatError):
            Graph(3, [(0, True)])

    def test_edge_array_empty_graph(self):
        g = Graph(2, [])
        assert g.edge_array().shape == (0, 2)


class TestParseGraph:
    def test_valid_document(self):
        g = parse_graph('{"vertices": 3, "edges": [[2, 1], [0, 1]]}')
        assert g.n_vertices == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_bad_json_reports_position(self):
        with pytest.raises(GraphFormatError, match="line 1 column"):
            parse_graph('{"vertices": 3, ')

    def test_missing_field(self):
        with pytest.raises(GraphFormatError, match="missing.*edges"):
            parse_graph('{"vertices": 3}')

    def test_unknown_field(self):
        with pytest.raises(GraphFormatError, match="unknown.*weights"):
            parse_graph('{"vertices": 2, "edges": [], "weights": []}')

    def test_edges_must_be_list(self):
        with pytest.raises(GraphFormatError, match="'edges' must be a list"):
            parse_graph('{"vertices": 2, "edges": 5}')

    def test_edge_entry_context(self):
        with pytest.raises(GraphFormatError, match=r"edges\[1\]"):
            parse_graph('{"vertices": 2, "edges": [[0, 1], "x"]}')

    def test_edge_arity_context(self):
        with pytest.raises(GraphFormatError, match=r"edges\[0\].*two"):
            parse_graph('{"vertices": 3, "edges": [[0, 1, 2]]}')

    def test_load_graph_missing_file(self, tmp_path):
        with pytest.raises(GraphFormatError, match="cannot read"):
            load_graph(str(tmp_path / "nope.json"))

    def test_load_graph_roundtrip(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text('{"vertices": 2, "edges": [[0, 1]]}')
        assert load_graph(str(path)).edges == ((0, 1),)


class TestPartition:
    def test_index_roundtrip(self):
        for idx in range(16):
            p = Partition.from_index(idx, 4)
            assert p.index == idx

    def test_bitstring_is_msb_first(self):
        # index 10 = binary 01010, vertex 4 leftmost
        p = Partition.from_index(10, 5)
        assert p.bits == (0, 1, 0, 1, 0)
        assert p.bitstring() == "01010"
        assert Partition.from_bitstring("01010") == p

    def test_complement(self):
        p = Partition.from_bitstring("0110")
        assert p.complement().bitstring() == "1001"
        assert p.complement().complement() == p

    def test_rejects_bad_bits(self):
        with pytest.raises(ValueError):
            Partition((0, 2))
        with pytest.raises(ValueError):
            Partition.from_bitstring("01x")
        with pytest.raises(ValueError):
            Partition.from_index(16, 4)


class TestCutValue:
    def test_matches_naive_on_random_graphs(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            n = int(rng.integers(2, 8))
            pairs = list(itertools.combinations(range(n), 2))
            take = rng.random(len(pairs)) < 0.5
            edges = [p for p, t in zip(pairs, take) if t]
            g = Graph(n, edges)
            for _ in range(10):
                idx = int(rng.integers(0, 1 << n))
                p = Partition.from_index(idx, n)
                naive = sum(p.bits[u] != p.bits[v] for u, v in edges)
                assert cut_value(g, p) == naive

    def test_length_mismatch(self):
        g = Graph(3, [(0, 1)])
        with pytest.raises(ValueError, match="bits"):
            cut_value(g, Partition.from_index(0, 4))

    def test_cut_values_all_agrees_elementwise(self):
        g = make_graph("d4")
        cuts = cut_values_all(g)
        for idx in range(1 << g.n_vertices):
            assert cuts[idx] == cut_value(
                g, Partition.from_index(idx, g.n_vertices))

    def test_complement_symmetry(self):
        g = make_graph("a")
        cuts = cut_values_all(g)
        full = (1 << g.n_vertices) - 1
        idx = np.arange(1 << g.n_vertices)
        assert np.array_equal(cuts, cuts[idx ^ full])


class TestBruteForce:
    @pytest.mark.parametrize("name", sorted(FIXTURE_TABLE))
    def test_certified_fixtures(self, name):
        n, edges, want_cut, want_words = FIXTURE_TABLE[name]
        best = brute_force_maxcut(Graph(n, edges))
        assert best.max_cut == want_cut
        assert best.degeneracy == len(want_words)
        assert best.bitstrings() == want_words
        # independent naive re-derivation
        ref_cut, ref_words = naive_maxcut(n, edges)
        assert (want_cut, list(want_words)) == (ref_cut, ref_words)

    def test_solutions_sorted_and_complement_closed(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            n = int(rng.integers(2, 8))
            pairs = list(itertools.combinations(range(n), 2))
            take = rng.random(len(pairs)) < 0.5
            g = Graph(n, [p for p, t in zip(pairs, take) if t])
            best = brute_force_maxcut(g)
            idxs = best.solution_indices()
            assert list(idxs) == sorted(idxs)
            assert best.degeneracy % 2 == 0
            full = (1 << n) - 1
            assert {i ^ full for i in idxs} == set(idxs)
            ref_cut, ref_words = naive_maxcut(n, g.edges)
            assert best.max_cut == ref_cut
            assert list(best.bitstrings()) == ref_words

    def test_single_vertex(self):
        best = brute_force_maxcut(Graph(1, []))
        assert best.max_cut == 0
        assert best.degeneracy == 2
        assert best.bitstrings() == ("0", "1")

    def test_budget(self):
        with pytest.raises(BudgetError):
            brute_force_maxcut(Graph(25, []))
