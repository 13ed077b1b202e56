"""Distances, diameters and diametrically opposite pairs.

Single-source distances use a plain breadth-first search.  All-pairs work
(diameter, diametral pair search) goes through scipy's csgraph BFS, which
keeps the exhaustive searches fast enough to brute-force every claim up to
n around 16 for the constrained families.

Closed forms implemented next to the searches:

* diameter:  n for hypercube and Fibonacci; n (even) / n-1 (odd) for Lucas;
  n-1 for Alternate Lucas (n >= 3).
* diametral pairs: unique alternating pair for Fibonacci; 1 pair (even n) or
  the n cyclic shifts of (0(01)^m, 0(10)^m) (odd n) for Lucas; exactly four
  closed-form pairs for Alternate Lucas (n >= 4).
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .bitcubes import (
    CubeFamily,
    Vertex,
    cyclic_shift,
    generate_masks,
    is_member,
    mask_predicate,
)
from .errors import InvalidArgumentError, InvalidLengthError, InvalidVertexError


class DiametralPair(NamedTuple):
    u: Vertex
    v: Vertex
    distance: int


def make_pair(u: Vertex, v: Vertex, distance: int) -> DiametralPair:
    """Canonical orientation: smaller bitmask first."""
    if v.bits < u.bits:
        u, v = v, u
    return DiametralPair(u, v, distance)


@lru_cache(maxsize=64)
def _graph(family: CubeFamily, n: int) -> tuple[tuple[int, ...], dict[int, int], tuple[tuple[int, ...], ...]]:
    """Vertex masks, mask->index, and adjacency lists (by index)."""
    masks = tuple(generate_masks(family, n))
    index = {m: i for i, m in enumerate(masks)}
    adj = tuple(
        tuple(index[m ^ (1 << b)] for b in range(n) if m ^ (1 << b) in index)
        for m in masks
    )
    return masks, index, adj


def bfs_distances(family: CubeFamily, n: int, source: Vertex) -> dict[Vertex, int]:
    """Exact edge-count distances from source to every family member."""
    if source.length != n:
        raise InvalidVertexError(f"source has length {source.length}, expected {n}")
    if not is_member(family, source):
        raise InvalidVertexError(f"{source} is not a member of {family.value}")
    masks, index, adj = _graph(family, n)
    dist = [-1] * len(masks)
    start = index[source.bits]
    dist[start] = 0
    queue = deque([start])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if dist[j] < 0:
                dist[j] = dist[i] + 1
                queue.append(j)
    return {Vertex(m, n): d for m, d in zip(masks, dist)}


def distance_matrix(family: CubeFamily, n: int) -> tuple[list[Vertex], np.ndarray]:
    """All-pairs distance matrix (int64), vertices in ascending mask order."""
    masks, index, adj = _graph(family, n)
    size = len(masks)
    if size == 1:
        return [Vertex(masks[0], n)], np.zeros((1, 1), dtype=np.int64)
    indptr = np.cumsum([0] + [len(a) for a in adj])
    indices = np.fromiter((j for a in adj for j in a), dtype=np.int64)
    data = np.ones(len(indices), dtype=np.int8)
    graph = csr_matrix((data, indices, indptr), shape=(size, size))
    dist = shortest_path(graph, method="D", unweighted=True, directed=False)
    if not np.isfinite(dist).all():
        raise InvalidArgumentError(f"{family.value} graph at n={n} is disconnected")
    return [Vertex(m, n) for m in masks], dist.astype(np.int64)


def diameter(family: CubeFamily, n: int) -> int:
    """Maximum distance over all vertex pairs, computed by search."""
    _, dist = distance_matrix(family, n)
    return int(dist.max())


def expected_diameter(family: CubeFamily, n: int) -> int:
    """Closed-form diameter."""
    if n < family.min_length:
        raise InvalidLengthError(f"{family.value} needs n >= {family.min_length}")
    if family is CubeFamily.LUCAS:
        return n if n % 2 == 0 else n - 1
    if family is CubeFamily.ALTERNATE_LUCAS:
        return n - 1
    return n


def diametral_pairs(family: CubeFamily, n: int) -> list[DiametralPair]:
    """All unordered pairs at distance = diameter, canonical and sorted.

    Single-vertex graphs have no pairs and yield the empty list.
    """
    verts, dist = distance_matrix(family, n)
    diam = int(dist.max())
    if diam == 0:
        return []
    rows, cols = np.nonzero(dist == diam)
    return [
        DiametralPair(verts[i], verts[j], diam)
        for i, j in zip(rows.tolist(), cols.tolist())
        if i < j
    ]


def _vx(s: str) -> Vertex:
    return Vertex.from_string(s)


def fibonacci_diametral_pair(n: int) -> tuple[Vertex, Vertex]:
    """The unique Fibonacci pair: (01)^{n/2} / (10)^{n/2}, odd n appends 0/1."""
    if n < 1:
        raise InvalidArgumentError("fibonacci diametral pair needs n >= 1")
    if n % 2 == 0:
        return _vx("01" * (n // 2)), _vx("10" * (n // 2))
    return _vx("01" * ((n - 1) // 2) + "0"), _vx("10" * ((n - 1) // 2) + "1")


def lucas_even_pair(n: int) -> tuple[Vertex, Vertex]:
    if n < 2 or n % 2:
        raise InvalidArgumentError("lucas even pair needs even n >= 2")
    return _vx("01" * (n // 2)), _vx("10" * (n // 2))


def lucas_odd_pair(n: int, i: int = 1) -> tuple[Vertex, Vertex]:
    """Pair (u_i, v_i): the (i-1)-fold right cyclic shift of (0(01)^m, 0(10)^m)."""
    if n < 3 or n % 2 == 0:
        raise InvalidArgumentError("lucas odd pair needs odd n >= 3")
    if not 1 <= i <= n:
        raise InvalidArgumentError(f"shift index {i} not in 1..{n}")
    m = (n - 1) // 2
    u1, v1 = _vx("0" + "01" * m), _vx("0" + "10" * m)
    return cyclic_shift(u1, i - 1), cyclic_shift(v1, i - 1)


ALTERNATE_LUCAS_KINDS = ("i", "ii", "iii", "iv")


def alternate_lucas_pair_forms(n: int) -> dict[str, tuple[Vertex, Vertex]]:
    """The four Alternate Lucas pairs, keyed i..iv, with n = 2k+3+s, s in {0,1}:

    i:   0^s (10)^k 001  /  1^s (01)^k 010
    ii:  0^s (10)^k 010  /  1^s (01)^k 001
    iii: 0^s (10)^k 100  /  1^s (01)^k 001
    iv:  0^s (10)^k 100  /  1^s (01)^k 010
    """
    if n < 4:
        raise InvalidArgumentError("alternate lucas pair forms need n >= 4")
    s = 1 if n % 2 == 0 else 0
    k = (n - 3 - s) // 2
    u0, v0 = "0" * s + "10" * k, "1" * s + "01" * k
    return {
        "i": (_vx(u0 + "001"), _vx(v0 + "010")),
        "ii": (_vx(u0 + "010"), _vx(v0 + "001")),
        "iii": (_vx(u0 + "100"), _vx(v0 + "001")),
        "iv": (_vx(u0 + "100"), _vx(v0 + "010")),
    }


def expected_diametral_pairs(family: CubeFamily, n: int) -> list[DiametralPair]:
    """Diametral pairs from the closed forms, no search; canonical and sorted."""
    if family is CubeFamily.HYPERCUBE:
        raise InvalidArgumentError("no closed form implemented for the hypercube")
    d = expected_diameter(family, n)
    if family is CubeFamily.FIBONACCI:
        pairs = [fibonacci_diametral_pair(n)]
    elif family is CubeFamily.LUCAS:
        if n < 2:
            raise InvalidArgumentError("lucas closed form needs n >= 2")
        if n % 2 == 0:
            pairs = [lucas_even_pair(n)]
        else:
            pairs = [lucas_odd_pair(n, i) for i in range(1, n + 1)]
    else:
        pairs = list(alternate_lucas_pair_forms(n).values())
    return sorted(make_pair(u, v, d) for u, v in pairs)


def classify_alternate_lucas_pair(u: Vertex, v: Vertex) -> str:
    """Which of the four closed forms {u, v} realizes (unordered)."""
    forms = alternate_lucas_pair_forms(u.length)
    for kind, (a, b) in forms.items():
        if {u, v} == {a, b}:
            return kind
    raise InvalidArgumentError(f"({u}, {v}) is not an alternate lucas diametral pair")


def antipode(v: Vertex) -> Vertex:
    """Bitwise complement: the unique hypercube vertex at distance n."""
    return Vertex(v.bits ^ ((1 << v.length) - 1), v.length)
