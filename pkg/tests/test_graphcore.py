import itertools
import json

import pytest

from debruijn import DomainError, ResourceCapError
from debruijn.graphcore import (
    Digraph,
    Provenance,
    Walk,
    build_de_bruijn_graph,
    closed_out_neighborhood,
    eulerian_circuit,
    gen_eulerian,
    generated_subdigraph,
    is_closed_dominating_walk,
    is_dominating_set,
    to_dot,
)
from debruijn.seqcore import (
    Alphabet,
    CyclicSequence,
    KString,
    is_de_bruijn_sequence,
    k_tour,
    parse_sequence,
    successors,
)
from debruijn.watchman import induced_walk


def labels_of(g, indices):
    return {g.label(i).text for i in indices}


def custom_graph(texts, arcs, a=2):
    alphabet = Alphabet(a)
    labels = [KString(tuple(alphabet.decode(c) for c in t), alphabet) for t in texts]
    return Digraph(labels, arcs, Provenance("custom"))


SMALL_PAIRS = [(a, k) for a in range(2, 37) for k in range(1, 9) if a**k <= 256]


class TestBuildDeBruijnGraph:
    def test_order_two_binary(self):
        g = build_de_bruijn_graph(2, 2)
        assert g.vertex_count == 4
        assert g.arc_count == 8
        assert (g.index("00"), g.index("00")) in g.arcs  # self-loop
        assert (g.index("10"), g.index("01")) in g.arcs
        assert (g.index("01"), g.index("11")) in g.arcs

    def test_order_two_ternary(self):
        g = build_de_bruijn_graph(3, 2)
        assert g.vertex_count == 9
        assert g.arc_count == 27

    def test_order_three_binary_contains_known_cycle(self):
        g = build_de_bruijn_graph(2, 3)
        assert g.vertex_count == 8
        assert g.arc_count == 16
        cycle = ["100", "001", "011", "110", "100"]
        for u, v in zip(cycle, cycle[1:]):
            assert (g.index(u), g.index(v)) in g.arcs

    def test_vertices_in_lexicographic_order(self):
        g = build_de_bruijn_graph(2, 2)
        assert [l.text for l in g.labels] == ["00", "01", "10", "11"]

    @pytest.mark.parametrize("a,k", SMALL_PAIRS)
    def test_regular_degrees_and_counts(self, a, k):
        g = build_de_bruijn_graph(a, k)
        assert g.vertex_count == a**k
        assert g.arc_count == a ** (k + 1)
        for v in range(g.vertex_count):
            assert g.out_degree(v) == a
            assert g.in_degree(v) == a

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            build_de_bruijn_graph(2, 13)


class TestGeneratedSubdigraph:
    @pytest.mark.parametrize(
        "a,k", [(a, k) for a in range(2, 37) for k in range(1, 7) if a**k <= 81]
    )
    def test_full_sequence_generates_full_graph(self, a, k):
        from debruijn.seqcore import gen_fkm

        full = build_de_bruijn_graph(a, k)
        gen = generated_subdigraph(gen_fkm(a, k), k)
        assert [l.text for l in gen.labels] == [l.text for l in full.labels]
        assert gen.arcs == full.arcs
        assert gen.provenance.kind == "generated"

    def test_repeated_window_fixture(self):
        d = parse_sequence("01210123", 4)
        g = generated_subdigraph(d, 3)
        assert g.vertex_count == 24
        windows = {w.text for w in k_tour(d, 3).windows}
        assert windows <= {l.text for l in g.labels}
        assert g.provenance.sequence == "01210123"

    def test_constant_sequence_keeps_zero_outdegree_successors(self):
        g = generated_subdigraph(parse_sequence("000", 2), 3)
        assert [l.text for l in g.labels] == ["000", "001"]
        assert g.arcs == {(0, 0), (0, 1)}
        assert g.out_degree(g.index("001")) == 0

    def test_too_short(self):
        with pytest.raises(DomainError):
            generated_subdigraph(parse_sequence("10", 2), 3)

    @pytest.mark.parametrize(
        "text,a,k",
        [("1001", 2, 3), ("0121", 3, 2), ("01210123", 4, 3), ("012", 3, 3)],
    )
    def test_always_arc_induced_in_full_graph(self, text, a, k):
        d = parse_sequence(text, a)
        sub = generated_subdigraph(d, k)
        full = build_de_bruijn_graph(a, k)
        kept = {l.symbols for l in sub.labels}
        expected = {
            (u, v)
            for u, v in (
                (sub.index(full.label(fu)), sub.index(full.label(fv)))
                for fu, fv in full.arcs
                if full.label(fu).symbols in kept and full.label(fv).symbols in kept
            )
        }
        assert sub.arcs == expected

    def test_distinct_window_sequences_have_a_times_n_vertices(self):
        for text, a, k in [("0011", 2, 3), ("001", 2, 3), ("012", 3, 2), ("0123", 4, 2)]:
            d = parse_sequence(text, a)
            g = generated_subdigraph(d, k)
            assert g.vertex_count == a * len(d)


class TestDomination:
    def test_closed_out_neighborhood(self):
        g = build_de_bruijn_graph(2, 3)
        assert labels_of(g, closed_out_neighborhood(g, "100")) == {"100", "000", "001"}

    def test_loop_collapses(self):
        g = build_de_bruijn_graph(2, 2)
        assert labels_of(g, closed_out_neighborhood(g, "00")) == {"00", "01"}

    @pytest.mark.parametrize("a,k", [(2, 3), (3, 2), (4, 2)])
    def test_neighborhood_size_bound(self, a, k):
        g = build_de_bruijn_graph(a, k)
        for v in range(g.vertex_count):
            assert len(closed_out_neighborhood(g, v)) <= a + 1

    def test_unknown_vertex(self):
        g = build_de_bruijn_graph(2, 2)
        with pytest.raises(DomainError):
            closed_out_neighborhood(g, "22")
        with pytest.raises(DomainError):
            closed_out_neighborhood(g, 99)

    def test_dominating_sets(self):
        g = build_de_bruijn_graph(2, 3)
        assert is_dominating_set(g, {"100", "001", "011", "110"})
        assert is_dominating_set(g, set(range(8)))
        assert not is_dominating_set(g, {"000"})


class TestWalks:
    def test_length_conventions(self):
        g = build_de_bruijn_graph(2, 2)
        assert Walk(g, (0, 1, 2), closed=True).length == 3
        assert Walk(g, (0, 1, 2), closed=False).length == 2
        assert Walk(g, (0,), closed=True).length == 0

    def test_arc_steps_wraparound(self):
        g = build_de_bruijn_graph(2, 2)
        walk = Walk(g, (0, 1, 2), closed=True)
        assert walk.arc_steps() == [(0, 1), (1, 2), (2, 0)]
        assert Walk(g, (0,), closed=True).arc_steps() == []

    def test_index_validation(self):
        g = build_de_bruijn_graph(2, 2)
        with pytest.raises(DomainError):
            Walk(g, (0, 7), closed=True)
        with pytest.raises(DomainError):
            Walk(g, (), closed=True)

    def test_canonical_rotation(self):
        g = build_de_bruijn_graph(2, 3)
        walk = Walk(g, (4, 1, 3, 6), closed=True)
        assert walk.canonical_rotation() == (1, 3, 6, 4)
        with pytest.raises(DomainError):
            Walk(g, (4, 1), closed=False).canonical_rotation()

    def test_closed_dominating_walk_accepts_known_cycle(self):
        g = build_de_bruijn_graph(2, 3)
        walk = Walk(g, tuple(g.index(t) for t in ("100", "001", "011", "110")))
        assert is_closed_dominating_walk(g, walk)

    def test_rejects_missing_arc(self):
        g = build_de_bruijn_graph(2, 3)
        walk = Walk(g, (g.index("100"), g.index("001")))
        assert not is_closed_dominating_walk(g, walk)  # 001 -> 100 is no arc

    def test_rejects_non_dominating_single_vertex(self):
        g = build_de_bruijn_graph(2, 2)
        assert not is_closed_dominating_walk(g, Walk(g, (g.index("01"),)))

    def test_rejects_open_walk(self):
        g = build_de_bruijn_graph(2, 3)
        walk = Walk(g, (g.index("100"), g.index("001")), closed=False)
        assert not is_closed_dominating_walk(g, walk)

    def test_rejects_foreign_digraph(self):
        g1 = build_de_bruijn_graph(2, 2)
        g2 = build_de_bruijn_graph(2, 2)
        with pytest.raises(DomainError):
            is_closed_dominating_walk(g1, Walk(g2, (0,)))


class TestEulerian:
    def test_order_one_binary(self):
        walk = eulerian_circuit(build_de_bruijn_graph(2, 1))
        assert walk.length == 4
        assert walk.closed

    def test_order_two_uses_each_arc_once(self):
        g = build_de_bruijn_graph(2, 2)
        walk = eulerian_circuit(g)
        assert walk.length == 8
        steps = walk.arc_steps()
        assert len(set(steps)) == 8
        assert set(steps) == set(g.arcs)

    def test_unbalanced_degrees_error(self):
        g = custom_graph(["00", "01"], [(0, 1)])
        with pytest.raises(DomainError, match="in-degree"):
            eulerian_circuit(g)

    def test_disconnected_error(self):
        g = custom_graph(["00", "11"], [(0, 0), (1, 1)])
        with pytest.raises(DomainError, match="not connected"):
            eulerian_circuit(g)

    def test_deterministic(self):
        g = build_de_bruijn_graph(3, 2)
        assert (
            eulerian_circuit(g).vertex_indices
            == eulerian_circuit(g).vertex_indices
        )

    @pytest.mark.parametrize("a,k", [(2, 1), (2, 2), (2, 3), (3, 2), (4, 2), (2, 4)])
    def test_gen_eulerian_validates(self, a, k):
        seq = gen_eulerian(a, k)
        assert len(seq) == a**k
        assert is_de_bruijn_sequence(seq, k)

    def test_gen_eulerian_order_one_reads_each_symbol_once(self):
        assert gen_eulerian(2, 1).text == "01"
        assert gen_eulerian(5, 1).text == "01234"


class TestDot:
    def test_counts(self):
        dot = to_dot(build_de_bruijn_graph(2, 2))
        lines = dot.splitlines()
        assert sum(1 for l in lines if "->" in l) == 8
        assert sum(1 for l in lines if l.endswith('";') and "->" not in l) == 4

    def test_deterministic(self):
        g = build_de_bruijn_graph(2, 2)
        assert to_dot(g) == to_dot(g)

    def test_highlighted_induced_walk_has_eight_bold_arcs(self):
        d = parse_sequence("01210123", 4)
        g = generated_subdigraph(d, 3)
        walk = induced_walk(d, 3, g)
        dot = to_dot(g, walk)
        assert dot.count("style=bold") == 8
        assert dot.count("color=grey") == g.arc_count - 8

    def test_foreign_walk_rejected(self):
        g = build_de_bruijn_graph(2, 2)
        other = build_de_bruijn_graph(2, 2)
        with pytest.raises(DomainError):
            to_dot(g, Walk(other, (0,)))


class TestJson:
    def test_round_trip(self):
        g = generated_subdigraph(parse_sequence("01210123", 4), 3)
        obj = g.to_json()
        again = Digraph.from_json(json.loads(json.dumps(obj)))
        assert again.to_json() == obj

    def test_schema_keys(self):
        obj = build_de_bruijn_graph(2, 2).to_json()
        assert set(obj) == {"alphabet", "order", "vertices", "arcs", "provenance"}
        assert obj["vertices"] == ["00", "01", "10", "11"]
        assert all(len(arc) == 2 for arc in obj["arcs"])
        assert obj["provenance"] == {"kind": "de_bruijn"}

    def test_missing_field(self):
        with pytest.raises(DomainError, match="vertices"):
            Digraph.from_json({"alphabet": 2, "order": 2, "arcs": []})

    def test_bad_vertex_length(self):
        with pytest.raises(DomainError):
            Digraph.from_json(
                {"alphabet": 2, "order": 2, "vertices": ["000"], "arcs": []}
            )

    def test_bad_arc(self):
        with pytest.raises(DomainError):
            Digraph.from_json(
                {"alphabet": 2, "order": 1, "vertices": ["0"], "arcs": [[0, 5]]}
            )

    def test_non_shift_arc_rejected_unless_custom(self):
        base = {"alphabet": 2, "order": 2, "vertices": ["00", "11"], "arcs": [[0, 1]]}
        with pytest.raises(DomainError, match="left shift"):
            Digraph.from_json({**base, "provenance": {"kind": "de_bruijn"}})
        g = Digraph.from_json({**base, "provenance": {"kind": "custom"}})
        assert g.arc_count == 1

    def test_duplicate_labels_rejected(self):
        with pytest.raises(DomainError, match="distinct"):
            Digraph.from_json(
                {"alphabet": 2, "order": 1, "vertices": ["0", "0"], "arcs": []}
            )

    def test_generated_provenance_requires_sequence(self):
        with pytest.raises(DomainError):
            Provenance("generated")
