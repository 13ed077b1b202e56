"""Counting and enumerating shortest paths between cube vertices.

A shortest u-v path in any of these families flips each coordinate where u
and v differ exactly once and touches nothing else (the families are
partial cubes: graph distance equals Hamming distance, asserted by the
metrics test suite).  The counter therefore runs a dynamic program over
the Hamming interval between u and v, layered by the number of coordinates
already flipped; the interval holds at most 2^d candidate vertices instead
of the whole cube.  Counts are exact Python ints throughout.

``count_via_bfs_layers`` recomputes the same number from BFS distances
over the full graph, as an independently-layered cross-check.
"""

from __future__ import annotations

from typing import Iterator

from .bitcubes import CubeFamily, Vertex, is_member, mask_predicate
from .errors import InvalidVertexError
from .metrics import DiametralPair, bfs_distances, diametral_pairs

Path = tuple[Vertex, ...]


def _check_endpoints(family: CubeFamily, u: Vertex, v: Vertex) -> None:
    if u.length != v.length:
        raise InvalidVertexError(f"lengths differ: {u.length} vs {v.length}")
    for w in (u, v):
        if not is_member(family, w):
            raise InvalidVertexError(f"{w} is not a member of {family.value}")


def count_shortest_paths(family: CubeFamily, u: Vertex, v: Vertex) -> int:
    """Exact number of shortest u-v paths in the induced graph."""
    _check_endpoints(family, u, v)
    pred = mask_predicate(family, u.length)
    diff = u.bits ^ v.bits
    layer = {u.bits: 1}
    for _ in range(diff.bit_count()):
        nxt: dict[int, int] = {}
        for m, c in layer.items():
            todo = diff & ~(m ^ u.bits)  # differing coordinates not yet flipped
            while todo:
                b = todo & -todo
                todo ^= b
                m2 = m ^ b
                if pred(m2):
                    nxt[m2] = nxt.get(m2, 0) + c
        layer = nxt
    return layer.get(v.bits, 0)


def count_via_bfs_layers(family: CubeFamily, u: Vertex, v: Vertex) -> int:
    """Same count, layered by BFS distance instead of flipped-bit count."""
    _check_endpoints(family, u, v)
    n = u.length
    du = bfs_distances(family, n, u)
    dv = bfs_distances(family, n, v)
    total = du[v]
    onpath = [w for w in du if du[w] + dv[w] == total]
    onpath.sort(key=lambda w: du[w])
    counts = {u: 1}
    for w in onpath:
        if w == u:
            continue
        acc = 0
        for j in range(1, n + 1):
            prev = w.flip(j)
            if prev in counts and du.get(prev, -2) == du[w] - 1 and dv[prev] == dv[w] + 1:
                acc += counts[prev]
        counts[w] = acc
    return counts.get(v, 0)


def enumerate_shortest_paths(family: CubeFamily, u: Vertex, v: Vertex) -> Iterator[Path]:
    """Yield every shortest u-v path once, ordered lexicographically by the
    sequence of flipped coordinate indices (b_1 before b_2, ...)."""
    _check_endpoints(family, u, v)
    n = u.length
    pred = mask_predicate(family, u.length)
    diff = u.bits ^ v.bits
    depth = diff.bit_count()
    # coordinate j maps to bit n-j, so ascending j is descending bit position
    flip_bits = [1 << (n - j) for j in range(1, n + 1) if diff & (1 << (n - j))]
    stack = [u.bits]

    def walk() -> Iterator[Path]:
        if len(stack) == depth + 1:
            yield tuple(Vertex(m, n) for m in stack)
            return
        m = stack[-1]
        for b in flip_bits:
            if (m & b) == (u.bits & b):  # not yet flipped
                m2 = m ^ b
                if pred(m2):
                    stack.append(m2)
                    yield from walk()
                    stack.pop()

    return walk()


def count_all_diametral(family: CubeFamily, n: int) -> list[tuple[DiametralPair, int]]:
    """Every diametral pair annotated with its exact path count."""
    return [
        (pair, count_shortest_paths(family, pair.u, pair.v))
        for pair in diametral_pairs(family, n)
    ]
