import json
import random

import pytest

from unigraph import oracle
from unigraph.degseq import compose_seq, normalize, parse_sequence, realize
from unigraph.errors import FormatError, InvalidPartition
from unigraph.graphcore import (
    Graph,
    VertexPartition,
    complement_graph,
    compose_graphs,
    degree_sequence_of,
    inverse_graph,
    parse_edge_list,
    parse_graph_json,
)

# Fig. 1 tree on labels a..e = 0..4: edges ab, cd, ed, bd; A = {b, d}
TREE = Graph.from_edges(5, [(0, 1), (2, 3), (4, 3), (1, 3)])
TREE_PART = VertexPartition(frozenset({1, 3}), frozenset({0, 2, 4}))
C3 = Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
# Fig. 2 threshold graph: v3, v4 adjacent to everything else and each other
THRESHOLD = Graph.from_edges(
    5, [(3, 4), (3, 1), (3, 2), (3, 0), (4, 1), (4, 2), (4, 0)]
)


class TestDegreeSequenceOf:
    def test_fig1_tree(self):
        assert degree_sequence_of(TREE).to_text() == "3,2,1^3"

    def test_edgeless(self):
        assert degree_sequence_of(Graph.from_edges(4, [])).to_text() == "0^4"

    def test_fig2_threshold(self):
        assert degree_sequence_of(THRESHOLD).to_text() == "4^2,2^3"


class TestCompose:
    def test_fig1_composition(self):
        got = compose_graphs(TREE, TREE_PART, C3)
        # the drawn 8-vertex graph: tree + triangle {x,y,z} + b,d joined to it
        want = Graph.from_edges(
            8,
            [(0, 1), (2, 3), (4, 3), (1, 3)]
            + [(5, 6), (6, 7), (5, 7)]
            + [(b, t) for b in (1, 3) for t in (5, 6, 7)],
        )
        assert oracle.canonical_form(got) == oracle.canonical_form(want)
        assert degree_sequence_of(got).to_text() == "6,5,4^3,1^3"

    def test_single_k_vertex_head_adds_dominant(self):
        head = Graph.from_edges(1, [])
        part = VertexPartition(frozenset({0}), frozenset())
        got = compose_graphs(head, part, C3)
        assert degree_sequence_of(got).to_text() == "3^4"

    def test_single_s_vertex_head_adds_isolated(self):
        head = Graph.from_edges(1, [])
        part = VertexPartition(frozenset(), frozenset({0}))
        got = compose_graphs(head, part, C3)
        assert degree_sequence_of(got).to_text() == "2^3,0"

    def test_invalid_partition(self):
        bad = VertexPartition(frozenset({0, 2}), frozenset({1, 3, 4}))
        with pytest.raises(InvalidPartition):
            compose_graphs(TREE, bad, C3)
        with pytest.raises(InvalidPartition):
            compose_graphs(TREE, VertexPartition(frozenset({1}), frozenset()), C3)

    def test_matches_sequence_composition(self):
        rng = random.Random(3)
        for _ in range(60):
            p = rng.randint(0, 3)
            q = rng.randint(0 if p else 1, 3)
            n_tail = rng.randint(0, 4)
            head_edges = [(u, v) for u in range(p) for v in range(u + 1, p)]
            for u in range(p):
                for w in range(q):
                    if rng.random() < 0.5:
                        head_edges.append((u, p + w))
            head = Graph.from_edges(p + q, head_edges)
            part = VertexPartition(
                frozenset(range(p)), frozenset(range(p, p + q))
            )
            tail = Graph.from_edges(
                n_tail,
                [
                    (u, v)
                    for u in range(n_tail)
                    for v in range(u + 1, n_tail)
                    if rng.random() < 0.5
                ],
            )
            got = compose_graphs(head, part, tail)
            from unigraph.degseq import PairedDegreeSequence

            kdeg = normalize_part([head.degree(v) for v in range(p)])
            sdeg = normalize_part([head.degree(v) for v in range(p, p + q)])
            ps = PairedDegreeSequence(kdeg, sdeg)
            assert degree_sequence_of(got) == compose_seq(
                ps, degree_sequence_of(tail)
            )

    def test_associative_up_to_isomorphism(self):
        a = Graph.from_edges(2, [(0, 1)])
        pa = VertexPartition(frozenset({0}), frozenset({1}))
        b = Graph.from_edges(3, [(0, 1), (0, 2)])
        pb = VertexPartition(frozenset({0}), frozenset({1, 2}))
        tail = Graph.from_edges(4, [(0, 1), (2, 3)])
        inner_first = compose_graphs(a, pa, compose_graphs(b, pb, tail))
        ab = compose_graphs(a, pa, b)
        pab = VertexPartition(frozenset({0, 2}), frozenset({1, 3, 4}))
        outer_first = compose_graphs(ab, pab, tail)
        # id layout agrees too, so the graphs are literally equal
        assert inner_first == outer_first
        assert oracle.canonical_form(inner_first) == oracle.canonical_form(
            outer_first
        )

    def test_associativity_randomized(self):
        rng = random.Random(17)
        for _ in range(40):
            heads = []
            total = 0
            for _ in range(2):
                p = rng.randint(1, 2)
                q = rng.randint(0, 2)
                edges = [(u, v) for u in range(p) for v in range(u + 1, p)]
                edges += [
                    (u, p + w)
                    for u in range(p)
                    for w in range(q)
                    if rng.random() < 0.5
                ]
                heads.append(
                    (
                        Graph.from_edges(p + q, edges),
                        VertexPartition(
                            frozenset(range(p)), frozenset(range(p, p + q))
                        ),
                    )
                )
                total += p + q
            nt = rng.randint(1, 9 - total)
            tail = Graph.from_edges(
                nt,
                [
                    (u, v)
                    for u in range(nt)
                    for v in range(u + 1, nt)
                    if rng.random() < 0.5
                ],
            )
            (g1, p1), (g2, p2) = heads
            inner = compose_graphs(g1, p1, compose_graphs(g2, p2, tail))
            g12 = compose_graphs(g1, p1, g2)
            p12 = VertexPartition(
                p1.kset | {v + g1.n for v in p2.kset},
                p1.sset | {v + g1.n for v in p2.sset},
            )
            outer = compose_graphs(g12, p12, tail)
            assert oracle.canonical_form(inner) == oracle.canonical_form(outer)


def normalize_part(degs):
    # part degrees may reach the component order, which normalize() rejects
    from unigraph.degseq import DegreeSequence

    runs = []
    for d in sorted(degs, reverse=True):
        if runs and runs[-1][0] == d:
            runs[-1][1] += 1
        else:
            runs.append([d, 1])
    return DegreeSequence(tuple((d, m) for d, m in runs))


class TestComplementGraph:
    def test_k4(self):
        k4 = realize(parse_sequence("3^4"))
        assert complement_graph(k4).m == 0

    def test_c5_self_complementary(self):
        c5 = realize(parse_sequence("2^5"))
        assert oracle.canonical_form(c5) == oracle.canonical_form(
            complement_graph(c5)
        )

    def test_involution(self):
        assert complement_graph(complement_graph(TREE)) == TREE

    def test_fig4_complement_drawing(self):
        want = Graph.from_edges(
            5, [(0, 2), (0, 4), (2, 4), (1, 2), (1, 4), (0, 3)]
        )
        assert complement_graph(TREE) == want


class TestInverseGraph:
    def test_fig4_inverse_drawing(self):
        got, part = inverse_graph(TREE, TREE_PART)
        want = Graph.from_edges(5, [(0, 1), (2, 3), (4, 3), (0, 2), (0, 4), (2, 4)])
        assert got == want
        assert part == VertexPartition(frozenset({0, 2, 4}), frozenset({1, 3}))

    def test_fig4_inverse_of_complement_drawing(self):
        comp = complement_graph(TREE)
        comp_part = VertexPartition(TREE_PART.sset, TREE_PART.kset)
        got, _ = inverse_graph(comp, comp_part)
        want = Graph.from_edges(5, [(1, 3), (0, 3), (1, 2), (1, 4)])
        assert got == want

    def test_single_k_vertex(self):
        g = Graph.from_edges(1, [])
        gi, part = inverse_graph(g, VertexPartition(frozenset({0}), frozenset()))
        assert gi == g
        assert part == VertexPartition(frozenset(), frozenset({0}))

    def test_involution_with_swap(self):
        gi, part = inverse_graph(TREE, TREE_PART)
        back, part2 = inverse_graph(gi, part)
        assert back == TREE
        assert part2 == TREE_PART

    def test_invalid_partition(self):
        with pytest.raises(InvalidPartition):
            inverse_graph(TREE, VertexPartition(frozenset({0, 1}), frozenset({2, 3, 4})))


class TestIO:
    def test_edge_list_round_trip(self):
        text = TREE.to_edge_list()
        assert parse_edge_list(text) == TREE
        assert text.splitlines()[0] == "5 4"

    def test_json_round_trip(self):
        g = parse_graph_json(THRESHOLD.to_json())
        assert g == THRESHOLD
        assert json.loads(THRESHOLD.to_json())["n"] == 5

    def test_bad_edge_list(self):
        with pytest.raises(FormatError):
            parse_edge_list("2 1\n")
        with pytest.raises(FormatError):
            parse_edge_list("")

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])
