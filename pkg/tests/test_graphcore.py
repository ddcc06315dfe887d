"""Graph representation, graph6 codec, BFS metrics, isomorphism."""

import random

import numpy as np
import pytest

from cdspectra.graphcore import (
    DisconnectedGraph,
    Graph,
    Graph6Error,
    TooLarge,
    adjacency_matrix,
    all_relabelings,
    complement,
    diameter,
    distance_matrix,
    from_edge_mask,
    from_edges,
    from_graph6,
    g6_pairs,
    is_connected,
    is_isomorphic,
    relabel,
    to_graph6,
)
from cdspectra.families import build_B2, build_H, build_path, build_star


def test_graph6_format_defined_examples():
    g = from_graph6("D?{")
    assert g.n == 5
    assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert from_graph6("A_").edges() == [(0, 1)]
    assert to_graph6(from_edges(2, [(0, 1)])) == "A_"
    single = from_graph6("@")
    assert single.n == 1 and single.edge_count() == 0
    assert to_graph6(Graph(1, (0,))) == "@"


def test_graph6_roundtrip_exhaustive_small():
    for n in range(1, 6):
        nbits = n * (n - 1) // 2
        for mask in range(1 << nbits):
            g = from_edge_mask(n, mask)
            assert from_graph6(to_graph6(g)) == g


def test_graph6_roundtrip_random_large():
    rng = random.Random(7)
    for n in (10, 30, 62, 63, 64):
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3]
        g = from_edges(n, edges)
        s = to_graph6(g)
        assert from_graph6(s) == g
        # string re-encode is the identity on the record
        assert to_graph6(from_graph6(s)) == s


def test_graph6_roundtrip_through_path_constructor():
    g = from_graph6(to_graph6(build_path(7)))
    assert is_isomorphic(g, build_path(7))


def test_graph6_malformed():
    with pytest.raises(Graph6Error):
        from_graph6("")
    with pytest.raises(Graph6Error):
        from_graph6("A" + chr(200))
    with pytest.raises(Graph6Error):
        from_graph6("A")          # missing data character
    with pytest.raises(Graph6Error):
        from_graph6("A" + chr(63 + 16))   # nonzero trailing bits for n=2
    with pytest.raises(Graph6Error):
        from_graph6("~~~")        # 8-byte order field unsupported
    with pytest.raises(Graph6Error):
        from_graph6("~still-too-big")


def test_graph6_oversized_order_rejected():
    # n = 65 > cap, long form header
    s = "~" + chr(63) + chr(64) + chr(64)
    with pytest.raises(Graph6Error):
        from_graph6(s)


def test_complement_involution_and_c5():
    for n in range(1, 6):
        for mask in range(0, 1 << (n * (n - 1) // 2), 7):
            g = from_edge_mask(n, mask)
            assert complement(complement(g)) == g
    c5 = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert is_isomorphic(complement(c5), c5)
    k4 = from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert complement(k4).edge_count() == 0


def test_is_connected():
    assert is_connected(build_path(5))
    assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))
    assert not is_connected(from_edges(3, []))


def test_connected_complement_when_diameter_gt3():
    # exhaustive over all labeled graphs on n <= 6
    for n in (5, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = from_edge_mask(n, mask)
            if is_connected(g) and diameter(g) > 3:
                assert is_connected(complement(g))


def test_distance_matrix_path_and_complete():
    d = distance_matrix(build_path(4))
    assert d.tolist() == [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]
    k5 = from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert np.array_equal(distance_matrix(k5), np.ones((5, 5), dtype=int) - np.eye(5, dtype=int))
    with pytest.raises(DisconnectedGraph):
        distance_matrix(from_edges(4, [(0, 1), (2, 3)]))


def test_distance_complement_identity_diam_gt3():
    # D(G^c) = J - I + A(G) whenever diam(G) > 3 (exhaustive n=6)
    n = 6
    j_minus_i = np.ones((n, n), dtype=int) - np.eye(n, dtype=int)
    checked = 0
    for mask in range(1 << (n * (n - 1) // 2)):
        g = from_edge_mask(n, mask)
        if not is_connected(g) or diameter(g) <= 3:
            continue
        checked += 1
        assert np.array_equal(
            distance_matrix(complement(g)), j_minus_i + adjacency_matrix(g))
    assert checked == 3240


def test_complement_diameter_at_most_3_when_diameter_ge_3():
    for n in (5, 6):
        for mask in range(0, 1 << (n * (n - 1) // 2), 3):
            g = from_edge_mask(n, mask)
            if is_connected(g) and diameter(g) >= 3:
                gc = complement(g)
                assert is_connected(gc) and diameter(gc) <= 3


def test_diameter_examples():
    assert diameter(build_path(5)) == 4
    assert diameter(build_H(2, 2)) == 3
    assert diameter(build_B2(4, 2)) == 4


def test_adjacency_matrix():
    assert adjacency_matrix(from_edges(2, [(0, 1)])).tolist() == [[0, 1], [1, 0]]
    assert adjacency_matrix(from_edges(3, [])).tolist() == [[0] * 3] * 3
    g = from_edge_mask(6, 0b101011001)
    n = g.n
    total = adjacency_matrix(g) + adjacency_matrix(complement(g))
    assert np.array_equal(total, np.ones((n, n), dtype=int) - np.eye(n, dtype=int))


def test_isomorphism():
    p4 = build_path(4)
    assert is_isomorphic(p4, relabel(p4, [2, 0, 3, 1]))
    assert not is_isomorphic(p4, build_star(4))
    assert is_isomorphic(build_path(5), build_path(5))
    assert not is_isomorphic(build_path(4), build_path(5))
    with pytest.raises(TooLarge):
        is_isomorphic(build_path(11), build_path(11))


def test_isomorphism_same_degree_sequence_nonisomorphic():
    # C6 vs two triangles: both 2-regular on 6 vertices
    c6 = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    tri2 = from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_isomorphic(c6, tri2)


def test_relabelings_all_isomorphic():
    g = build_star(5)
    seen = set()
    for h in all_relabelings(g):
        seen.add(h.adj)
        assert is_isomorphic(g, h)
    assert len(seen) == 5   # one choice of center


def test_edge_mask_roundtrip():
    for n in (4, 7):
        pairs = g6_pairs(n)
        assert len(pairs) == n * (n - 1) // 2
        mask = 0b1011 if n == 4 else 0b101100111000101
        g = from_edge_mask(n, mask)
        from cdspectra.graphcore import to_edge_mask
        assert to_edge_mask(g) == mask


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(0, ())
    with pytest.raises(ValueError):
        Graph(65, tuple(0 for _ in range(65)))
