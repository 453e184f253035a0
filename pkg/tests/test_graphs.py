"""Graph construction, products, distances, and the edge-list format."""

from itertools import combinations

import pytest

from tokenaut import (
    BipartiteSpec,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    distance_matrix,
    format_edge_list,
    graph_from_edges,
    hypercube,
    parse_edge_list,
    path_graph,
    star_graph,
)
from tokenaut.graphs import mixed_radix_decode, mixed_radix_encode


def test_complete_graph_edge_counts():
    assert complete_graph(1).edge_count() == 0
    assert complete_graph(2).edge_count() == 1
    assert complete_graph(4).edge_count() == 6
    g = complete_graph(5)
    for u in range(5):
        for v in range(5):
            assert g.has_edge(u, v) == (u != v)


def test_graph_from_edges_validation():
    with pytest.raises(ValueError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        graph_from_edges(3, [(1, 1)])
    g = graph_from_edges(3, [(0, 1), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]


def test_complete_bipartite_layout():
    g = complete_bipartite(3, 4)
    assert g.edge_count() == 12
    assert sorted(g.degree_sequence()) == [3, 3, 3, 3, 4, 4, 4]
    for u in range(3):
        for v in range(3):
            assert not g.has_edge(u, v)
    for u in range(3, 7):
        for v in range(3, 7):
            assert not g.has_edge(u, v)
    for u in range(3):
        for v in range(3, 7):
            assert g.has_edge(u, v)


def test_bipartite_spec_sides():
    spec = BipartiteSpec(2, 3)
    assert list(spec.x_vertices) == [0, 1]
    assert list(spec.y_vertices) == [2, 3, 4]
    assert spec.order == 5
    with pytest.raises(ValueError):
        BipartiteSpec(3, 2)
    with pytest.raises(ValueError):
        BipartiteSpec(0, 2)


def test_k22_is_the_four_cycle():
    g = complete_bipartite(2, 2)
    assert g.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert g.degree_sequence() == (2, 2, 2, 2)


def test_path_cycle_star():
    assert path_graph(3).edges() == [(0, 1), (1, 2)]
    assert cycle_graph(4).edge_count() == 4
    with pytest.raises(ValueError):
        cycle_graph(2)
    s = star_graph(3)
    k13 = complete_bipartite(1, 3)
    assert s.adj == k13.adj


def test_mixed_radix_round_trip():
    sizes = [2, 3, 4]
    for code in range(24):
        coords = mixed_radix_decode(code, sizes)
        assert mixed_radix_encode(coords, sizes) == code
    # first factor is most significant
    assert mixed_radix_encode((1, 0, 0), sizes) == 12
    assert mixed_radix_encode((0, 0, 1), sizes) == 1


def test_cartesian_product_small():
    c4 = cartesian_product([complete_graph(2), complete_graph(2)])
    assert (c4.n, c4.edge_count()) == (4, 4)
    ladder = cartesian_product([complete_graph(2), path_graph(3)])
    assert (ladder.n, ladder.edge_count()) == (6, 7)
    q3 = cartesian_product([complete_graph(2)] * 3)
    assert (q3.n, q3.edge_count()) == (8, 12)


def test_cartesian_product_adjacency_definition():
    factors = [path_graph(3), cycle_graph(4)]
    g = cartesian_product(factors)
    sizes = [f.n for f in factors]
    for a in range(g.n):
        for b in range(g.n):
            if a == b:
                continue
            ca, cb = mixed_radix_decode(a, sizes), mixed_radix_decode(b, sizes)
            diff = [i for i in range(2) if ca[i] != cb[i]]
            expect = len(diff) == 1 and factors[diff[0]].has_edge(ca[diff[0]], cb[diff[0]])
            assert g.has_edge(a, b) == expect


def test_cartesian_product_degree_law():
    factors = [complete_graph(3), path_graph(4), complete_graph(2)]
    g = cartesian_product(factors)
    sizes = [f.n for f in factors]
    for v in range(g.n):
        coords = mixed_radix_decode(v, sizes)
        assert g.degree(v) == sum(f.degree(c) for f, c in zip(factors, coords))


def test_hypercube_regularity():
    for r in range(1, 7):
        q = hypercube(r)
        assert q.n == 1 << r
        assert q.edge_count() == r << (r - 1)
        assert all(q.degree(v) == r for v in range(q.n))
    # adjacency is Hamming distance one on codes
    q = hypercube(4)
    for u in range(16):
        for v in range(16):
            assert q.has_edge(u, v) == ((u ^ v).bit_count() == 1)


def test_hypercube_matches_k2_power():
    for r in (1, 2, 3, 4):
        assert hypercube(r).adj == cartesian_product([complete_graph(2)] * r).adj


def test_distance_matrix():
    d = distance_matrix(path_graph(3))
    assert d[0][2] == 2 and d[2][0] == 2 and d[1][1] == 0
    q = hypercube(3)
    dq = distance_matrix(q)
    for u in range(8):
        for v in range(8):
            assert dq[u][v] == (u ^ v).bit_count()
    two = graph_from_edges(2, [])
    assert distance_matrix(two)[0][1] == 2  # sentinel is n for unreachable pairs


def test_connectivity():
    assert hypercube(3).is_connected()
    assert not graph_from_edges(4, [(0, 1), (2, 3)]).is_connected()
    assert complete_graph(1).is_connected()


def test_induced_and_relabel():
    g = complete_bipartite(2, 3)
    sub = g.induced([0, 2, 3])
    assert sub.n == 3 and sub.edges() == [(0, 1), (0, 2)]
    back = g.relabel([4, 3, 2, 1, 0])
    assert back.edge_count() == g.edge_count()
    assert back.has_edge(4, 2) and not back.has_edge(4, 3)


def test_edge_list_round_trip():
    for g in (complete_graph(4), complete_bipartite(2, 3), hypercube(3),
              path_graph(5), graph_from_edges(3, [])):
        text = format_edge_list(g)
        h = parse_edge_list(text)
        assert h.n == g.n and h.adj == g.adj
        assert format_edge_list(h) == text


def test_edge_list_parsing_errors_and_comments():
    g = parse_edge_list("# comment\nn 3\n0 1\n\n# more\n1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        parse_edge_list("0 1\n")  # missing header
    with pytest.raises(ValueError):
        parse_edge_list("n 2\n0 5\n")
    with pytest.raises(ValueError):
        parse_edge_list("n 2\n0 x\n")


def test_edges_are_sorted_unique():
    g = hypercube(3)
    es = g.edges()
    assert es == sorted(es)
    assert len(es) == len(set(es))
    assert all(u < v for u, v in es)
    assert set(es) == {(u, v) for u, v in combinations(range(8), 2) if g.has_edge(u, v)}
