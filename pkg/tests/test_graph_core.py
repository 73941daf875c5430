import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from hypdom.generators import gen_cycle, gen_grid, gen_path, gen_star
from hypdom.graph_core import (Graph, GraphError, ParseError, bfs_distances, biconnected_components,
                               check_symmetric, from_edges, graph_summary, induced_subgraph,
                               largest_biconnected_component, load_edge_list, truncated_bfs,
                               truncated_multi_source_bfs, write_edge_list)

from _corpus import small_graph


def parse(text, fmt="edgelist"):
    return load_edge_list(io.StringIO(text), fmt)


def test_parse_triangle():
    g = parse("0 1\n1 2\n2 0")
    assert (g.n, g.m) == (3, 3)


def test_parse_drops_duplicates_and_loops():
    g = parse("0 1\n0 1\n1 1")
    assert (g.n, g.m) == (2, 1)


def test_parse_skips_comment_headers():
    text = "# Directed graph: example\n# Nodes: 3 Edges: 2\n% other\n10 20\n20 30\n"
    g = parse(text)
    assert (g.n, g.m) == (3, 2)
    assert g.labels == (10, 20, 30)


def test_parse_dimacs():
    g = parse("c comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n", "dimacs")
    assert (g.n, g.m) == (4, 3)
    assert g.labels == (1, 2, 3, 4)


@pytest.mark.parametrize("text", ["0 x\n", "0\n", "-1 2\n", "", "# only comments\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_error_reports_line():
    with pytest.raises(ParseError) as e:
        parse("0 1\n1 2\nbad line\n")
    assert e.value.line == 3


def test_round_trip_original_ids():
    g = parse("5 7\n7 9\n9 5\n")
    out = io.StringIO()
    write_edge_list(g, out, original_ids=True)
    h = parse(out.getvalue())
    assert sorted(map(sorted, ((h.labels[a], h.labels[b]) for a, b in h.edges()))) == [[5, 7], [5, 9], [7, 9]]


def test_from_edges_range_check():
    with pytest.raises(GraphError):
        from_edges(2, [(0, 2)])


def test_bfs_examples():
    assert bfs_distances(gen_path(5), 0) == [0, 1, 2, 3, 4]
    assert bfs_distances(gen_cycle(8), 0) == [0, 1, 2, 3, 4, 3, 2, 1]


def test_bfs_unreachable():
    g = from_edges(4, [(0, 1), (2, 3)])
    assert bfs_distances(g, 0) == [0, 1, -1, -1]
    assert not g.is_connected()


def test_truncated_bfs():
    assert truncated_bfs(gen_cycle(8), 0, 2) == {0: 0, 1: 1, 7: 1, 2: 2, 6: 2}


def test_multi_source_tie_goes_to_smaller_id():
    # vertex 2 is at distance 2 from both 0 and 4
    reach = truncated_multi_source_bfs(gen_cycle(8), [4, 0], 2)
    assert reach[2] == (2, 0)
    assert reach[6] == (2, 0)
    assert reach[3] == (1, 4)


def test_multi_source_c8_sources_0_3():
    reach = truncated_multi_source_bfs(gen_cycle(8), [0, 3], 2)
    assert reach[2] == (1, 3)
    assert reach[1] == (1, 0)
    assert 5 in reach and reach[5] == (2, 3)


def test_multi_source_radius_zero_and_all_sources():
    g = gen_cycle(8)
    assert truncated_multi_source_bfs(g, [1, 5], 0) == {1: (0, 1), 5: (0, 5)}
    reach = truncated_multi_source_bfs(g, range(8), 3)
    assert all(reach[v] == (0, v) for v in range(8))


def test_multi_source_member_filter():
    g = gen_path(5)
    reach = truncated_multi_source_bfs(g, [0], 4, member={0, 1, 3}.__contains__)
    # the search still walks through 2 (distances are in G) but only reports members
    assert set(reach) == {0, 1, 3}
    assert reach[3] == (3, 0)


def test_summary_examples():
    assert graph_summary(gen_cycle(8)) == {"n": 8, "m": 8, "min_degree": 2, "mean_degree": 2.0, "max_degree": 2}
    s = graph_summary(gen_star(4))
    assert (s["min_degree"], s["max_degree"], s["mean_degree"]) == (1, 4, 1.6)
    s = graph_summary(parse("0 1\n1 2\n2 0"))
    assert (s["n"], s["m"], s["min_degree"], s["max_degree"]) == (3, 3, 2, 2)


def test_bcc_examples():
    bowtie = parse("0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n")
    g, old = largest_biconnected_component(bowtie)
    assert (g.n, g.m) == (3, 3)
    assert old == [0, 1, 2]
    c8, old = largest_biconnected_component(gen_cycle(8))
    assert (c8.n, c8.m, old) == (8, 8, list(range(8)))
    p5, _ = largest_biconnected_component(gen_path(5))
    assert (p5.n, p5.m) == (2, 1)


def test_bcc_counts():
    assert len(biconnected_components(gen_path(6))) == 5
    assert len(biconnected_components(gen_grid(3, 4))) == 1
    assert biconnected_components(from_edges(3, [(0, 1)])) == [[0, 1]]


def test_bcc_needs_an_edge():
    with pytest.raises(GraphError):
        largest_biconnected_component(Graph(((),)))


def test_induced_subgraph_composes_labels():
    g = parse("10 11\n11 12\n12 13\n13 10\n")
    sub, old = induced_subgraph(g, [1, 2, 3])
    assert old == [1, 2, 3]
    assert sub.labels == (11, 12, 13)
    assert sub.m == 2


def _articulation_points(g):
    cuts = []
    for v in range(g.n):
        rest = [w for w in range(g.n) if w != v]
        sub, _ = induced_subgraph(g, rest)
        if sub.n and not sub.is_connected():
            cuts.append(v)
    return cuts


@pytest.mark.parametrize("seed", range(15))
def test_bcc_output_has_no_cut_vertex_and_is_idempotent(seed):
    g = small_graph(seed)
    b, _ = largest_biconnected_component(g)
    if b.n > 2:
        assert _articulation_points(b) == []
    again, old = largest_biconnected_component(b)
    assert old == list(range(b.n)) and again.adj == b.adj


def test_bcc_matches_brute_force_blocks():
    # blocks are the maximal vertex sets of edge classes; every edge lies in exactly one block
    for seed in range(20):
        g = small_graph(seed)
        blocks = biconnected_components(g)
        seen = {}
        for i, b in enumerate(blocks):
            bs = set(b)
            for u, v in g.edges():
                if u in bs and v in bs:
                    seen.setdefault((u, v), set()).add(i)
        assert all(len(s) == 1 for s in seen.values())
        assert len(seen) == g.m


edges_st = st.lists(st.tuples(st.integers(0, 14), st.integers(0, 14)), min_size=1, max_size=60)


@given(edges_st)
@settings(max_examples=150, deadline=None)
def test_loaded_graphs_are_symmetric(edges):
    text = "".join(f"{a} {b}\n" for a, b in edges)
    g = parse(text)
    assert check_symmetric(g)
    assert all(v not in g.adj[v] for v in range(g.n))


@given(edges_st, st.integers(0, 1000))
@settings(max_examples=150, deadline=None)
def test_bfs_triangle_inequality(edges, seed):
    g = parse("".join(f"{a} {b}\n" for a, b in edges))
    rng = random.Random(seed)
    rows = [bfs_distances(g, v) for v in range(g.n)]
    for _ in range(50):
        a, b, c = (rng.randrange(g.n) for _ in range(3))
        if rows[a][b] < 0 or rows[b][c] < 0:
            continue
        assert 0 <= rows[a][c] <= rows[a][b] + rows[b][c]
        assert rows[a][b] == rows[b][a]


@given(edges_st)
@settings(max_examples=100, deadline=None)
def test_bcc_idempotent_property(edges):
    g = parse("".join(f"{a} {b}\n" for a, b in edges))
    if g.m == 0:
        return
    b, _ = largest_biconnected_component(g)
    again, _ = largest_biconnected_component(b)
    assert again.adj == b.adj
