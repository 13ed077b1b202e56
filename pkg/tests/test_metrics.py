"""Distances, diameters, diametral pairs vs their closed forms."""

import pytest

from cubepaths import (
    CubeFamily,
    InvalidArgumentError,
    InvalidVertexError,
    Vertex,
    alternate_lucas_pair_forms,
    antipode,
    bfs_distances,
    diameter,
    diametral_pairs,
    distance_matrix,
    expected_diameter,
    expected_diametral_pairs,
    fibonacci_diametral_pair,
    hamming_distance,
    lucas_even_pair,
    lucas_odd_pair,
)
from oracles import brute_diameter_and_pairs

HYP = CubeFamily.HYPERCUBE
FIB = CubeFamily.FIBONACCI
LUC = CubeFamily.LUCAS
ALT = CubeFamily.ALTERNATE_LUCAS


def vx(s: str) -> Vertex:
    return Vertex.from_string(s)


def test_bfs_examples():
    assert bfs_distances(FIB, 3, vx("010"))[vx("101")] == 3
    for n in (2, 5, 8):
        for u in (Vertex(0, n), vx("01" * (n // 2) + "0" * (n % 2))):
            assert bfs_distances(HYP, n, u)[antipode(u)] == n
    assert bfs_distances(LUC, 4, vx("0101"))[vx("1010")] == 4


def test_bfs_rejects_bad_sources():
    with pytest.raises(InvalidVertexError):
        bfs_distances(FIB, 3, vx("011"))
    with pytest.raises(InvalidVertexError):
        bfs_distances(FIB, 4, vx("010"))


def test_bfs_distances_agree_with_mask_oracle():
    from oracles import bfs_mask_distances

    for family in (HYP, FIB, LUC, ALT):
        n = 7
        for src in (Vertex(0, n), vx("0100100")):
            dist = bfs_distances(family, n, src)
            oracle = bfs_mask_distances(family, n, src.bits)
            assert {v.bits: d for v, d in dist.items()} == oracle
            assert dist[src] == 0


def test_diameter_closed_forms():
    for family in (FIB, LUC, ALT):
        for n in range(max(1, family.min_length), 17):
            assert diameter(family, n) == expected_diameter(family, n), (family, n)
    for n in range(1, 13):
        assert diameter(HYP, n) == n


def test_diameter_examples():
    assert diameter(FIB, 8) == 8
    assert diameter(LUC, 5) == 4
    assert diameter(ALT, 6) == 5


def test_partial_cube_property():
    # graph distance equals Hamming distance; pathcount's interval DP
    # is unsound if this ever fails, so it gates everything downstream
    import numpy as np

    for family in (HYP, FIB, LUC, ALT):
        for n in range(max(1, family.min_length), 13):
            verts, dist = distance_matrix(family, n)
            bits = np.array([w.bits for w in verts], dtype=np.uint32)
            ham = np.bitwise_count(np.bitwise_xor.outer(bits, bits)).astype(np.int64)
            assert np.array_equal(dist, ham), (family, n)
    # spot-check the matrix against the scalar helper as well
    verts, dist = distance_matrix(FIB, 6)
    assert dist[0][len(verts) - 1] == hamming_distance(verts[0], verts[-1])


def test_diametral_pairs_match_oracle_search():
    for family in (FIB, LUC, ALT):
        for n in range(max(2, family.min_length), 11):
            diam, mask_pairs = brute_diameter_and_pairs(family, n)
            pairs = diametral_pairs(family, n)
            assert [(p.u.bits, p.v.bits) for p in pairs] == mask_pairs
            assert all(p.distance == diam for p in pairs)


def test_diametral_pairs_examples():
    assert [(str(p.u), str(p.v)) for p in diametral_pairs(FIB, 8)] == [
        ("01010101", "10101010")
    ]
    lucas5 = [(str(p.u), str(p.v)) for p in diametral_pairs(LUC, 5)]
    assert lucas5 == [
        ("00101", "01010"),
        ("00101", "10010"),
        ("01001", "10010"),
        ("01001", "10100"),
        ("01010", "10100"),
    ]
    assert [(str(p.u), str(p.v)) for p in diametral_pairs(ALT, 4)] == [
        ("0001", "1010"),
        ("0010", "1001"),
        ("0100", "1001"),
        ("0100", "1010"),
    ]


def test_closed_forms_equal_search():
    # mechanical verification of the closed-form pair descriptions
    for n in range(1, 15):
        assert expected_diametral_pairs(FIB, n) == diametral_pairs(FIB, n)
    for n in range(2, 15):
        assert expected_diametral_pairs(LUC, n) == diametral_pairs(LUC, n)
    for n in range(4, 15):
        assert expected_diametral_pairs(ALT, n) == diametral_pairs(ALT, n)


def test_expected_pairs_examples():
    u, v = fibonacci_diametral_pair(7)
    assert (str(u), str(v)) == ("0101010", "1010101")
    assert [(str(p.u), str(p.v)) for p in expected_diametral_pairs(LUC, 4)] == [
        ("0101", "1010")
    ]
    forms = alternate_lucas_pair_forms(5)
    assert {(str(a), str(b)) for a, b in forms.values()} == {
        ("10001", "01010"),
        ("10010", "01001"),
        ("10100", "01001"),
        ("10100", "01010"),
    }


def test_lucas_pair_count_even_one_odd_n():
    for n in range(2, 16):
        count = len(diametral_pairs(LUC, n))
        assert count == (1 if n % 2 == 0 else n), n


def test_hypercube_pair_count_is_antipodal():
    for n in range(1, 9):
        pairs = diametral_pairs(HYP, n)
        assert len(pairs) == 1 << (n - 1)
        assert all(p.v == antipode(p.u) for p in pairs)


def test_single_vertex_graphs_have_no_pairs():
    assert diametral_pairs(LUC, 1) == []
    assert diametral_pairs(FIB, 0) == []


def test_alternate_lucas_n3_brute_force_only():
    # below the n >= 4 closed-form range; diameter n-1 still holds
    assert diameter(ALT, 3) == 2
    assert len(diametral_pairs(ALT, 3)) == 3
    with pytest.raises(InvalidArgumentError):
        alternate_lucas_pair_forms(3)


def test_expected_pairs_rejections():
    with pytest.raises(InvalidArgumentError):
        expected_diametral_pairs(HYP, 4)
    with pytest.raises(InvalidArgumentError):
        lucas_even_pair(5)
    with pytest.raises(InvalidArgumentError):
        lucas_odd_pair(6)
    with pytest.raises(InvalidArgumentError):
        lucas_odd_pair(5, 6)
    with pytest.raises(InvalidArgumentError):
        fibonacci_diametral_pair(0)
