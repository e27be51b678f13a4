import random

import pytest

from wordrep.core import Graph, complete_graph, cycle_graph, empty_graph, path_graph
from wordrep.graph6 import write_graph6
from wordrep.orient import BudgetExceeded
from wordrep.search import (
    SearchBudget,
    canonical_form,
    census_from_graph6,
    census_non_word_representable,
    chromatic_number,
    enumerate_nonisomorphic,
    find_k11_representant,
    find_uniform_representant,
    graph_from_canonical_bits,
    is_word_representable,
)
from wordrep.verify import graph_of_word, uniformity, verify_k11


def _w5() -> Graph:
    labels = tuple(str(i) for i in range(1, 7))
    edges = [(str(i), str(i % 5 + 1)) for i in range(1, 6)]
    edges += [("6", str(i)) for i in range(1, 6)]
    return Graph.from_edges(labels, edges)


class TestDecision:
    def test_small_positives(self):
        assert is_word_representable(complete_graph(tuple("1234")))
        assert is_word_representable(cycle_graph(tuple("12345")))
        assert is_word_representable(empty_graph(tuple("123")))

    def test_w5_negative(self):
        assert not is_word_representable(_w5())


class TestBudget:
    def test_invalid_budget(self):
        with pytest.raises(ValueError):
            SearchBudget(max_nodes=0)

    def test_word_search_budget_exhaustion(self):
        with pytest.raises(BudgetExceeded):
            find_uniform_representant(cycle_graph(tuple("123456")), SearchBudget(max_nodes=2))


class TestFindUniform:
    def test_k2(self):
        w = find_uniform_representant(complete_graph(("x", "y")))
        assert str(w) == "x y"

    def test_c4(self):
        C4 = cycle_graph(tuple("1234"))
        w = find_uniform_representant(C4)
        assert w is not None
        assert uniformity(w) == 2
        assert verify_k11(w, C4, 0)

    def test_not_representable_returns_none(self):
        assert find_uniform_representant(_w5()) is None

    def test_found_words_always_verify(self):
        rng = random.Random(13)
        for _ in range(10):
            n = rng.randrange(3, 6)
            labels = tuple(str(i) for i in range(n))
            edges = [
                (labels[i], labels[j])
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.5
            ]
            G = Graph.from_edges(labels, edges)
            w = find_uniform_representant(G, SearchBudget(max_uniformity=4))
            assert w is not None  # all graphs on < 6 vertices are representable
            assert verify_k11(w, G, 0)


class TestFindK11:
    def test_k2_at_k1(self):
        w = find_k11_representant(complete_graph(("x", "y")), 1, SearchBudget(max_word_length=4))
        assert str(w) == "x y"

    def test_empty_graph_at_k0(self):
        E3 = empty_graph(tuple("123"))
        w = find_k11_representant(E3, 0, SearchBudget(max_word_length=8))
        assert w is not None
        assert verify_k11(w, E3, 0)

    def test_length_budget_returns_none(self):
        # C4 needs more than 5 letters at k=0
        assert find_k11_representant(cycle_graph(tuple("1234")), 0, SearchBudget(max_word_length=5)) is None

    def test_node_budget_raises(self):
        with pytest.raises(BudgetExceeded):
            find_k11_representant(cycle_graph(tuple("1234")), 0, SearchBudget(max_nodes=3))


class TestEnumeration:
    def test_counts_all(self):
        expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
        for n, count in expected.items():
            assert sum(1 for _ in enumerate_nonisomorphic(n)) == count

    def test_counts_connected(self):
        expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
        for n, count in expected.items():
            assert sum(1 for _ in enumerate_nonisomorphic(n, connected_only=True)) == count

    def test_range_checks(self):
        with pytest.raises(ValueError):
            list(enumerate_nonisomorphic(0))
        with pytest.raises(ValueError):
            list(enumerate_nonisomorphic(9))

    def test_canonical_form_isomorphism_invariant(self):
        rng = random.Random(21)
        for _ in range(30):
            n = rng.randrange(2, 7)
            labels = tuple(str(i) for i in range(n))
            edges = [
                (labels[i], labels[j])
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.5
            ]
            G = Graph.from_edges(labels, edges)
            perm = list(range(n))
            rng.shuffle(perm)
            H = Graph.from_index_edges(labels, [(perm[i], perm[j]) for i, j in G.edges()])
            assert canonical_form(G) == canonical_form(H)

    def test_canonical_form_separates(self):
        assert canonical_form(cycle_graph(tuple("1234"))) != canonical_form(path_graph(tuple("1234")))
        assert canonical_form(complete_graph(tuple("1234"))) != canonical_form(cycle_graph(tuple("1234")))

    def test_bits_roundtrip(self):
        G = cycle_graph(tuple("12345"))
        n, bits = canonical_form(G)
        H = graph_from_canonical_bits(n, bits)
        assert canonical_form(H) == (n, bits)


class TestCensus:
    def test_small_counts(self):
        assert len(census_non_word_representable(4).non_word_representable) == 0
        r5 = census_non_word_representable(5)
        assert r5.examined == 21
        assert len(r5.non_word_representable) == 0

    def test_n6_is_w5(self):
        r = census_non_word_representable(6)
        assert r.examined == 112
        assert len(r.non_word_representable) == 1
        assert canonical_form(r.non_word_representable[0]) == canonical_form(_w5())

    def test_range_check(self):
        with pytest.raises(ValueError):
            census_non_word_representable(8)

    def test_census_from_graph6(self):
        lines = [write_graph6(G) for G in enumerate_nonisomorphic(6, connected_only=True)]
        lines += lines[:10]  # duplicates must be deduplicated
        r = census_from_graph6(lines)
        assert r.examined == 112
        assert len(r.non_word_representable) == 1

    def test_census_from_graph6_rejects_mixed_n(self):
        lines = [write_graph6(complete_graph(tuple("123"))), write_graph6(complete_graph(tuple("1234")))]
        with pytest.raises(ValueError, match="mixes"):
            census_from_graph6(lines)


class TestChromatic:
    def test_known_values(self):
        assert chromatic_number(empty_graph(tuple("123"))) == 1
        assert chromatic_number(path_graph(tuple("1234"))) == 2
        assert chromatic_number(cycle_graph(tuple("12345"))) == 3
        assert chromatic_number(cycle_graph(tuple("123456"))) == 2
        assert chromatic_number(complete_graph(tuple("12345"))) == 5
        assert chromatic_number(_w5()) == 4

    def test_range_check(self):
        with pytest.raises(ValueError):
            chromatic_number(empty_graph(tuple(f"v{i}" for i in range(17))))
