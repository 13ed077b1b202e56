"""Cube families as vertex predicates over fixed-length bitstrings.

A vertex of the n-dimensional hypercube is a bitstring b_1 b_2 ... b_n.
Internally a vertex is a single machine word: coordinate b_1 is the most
significant of the n used bits, so ``str(v)`` reads left to right exactly
like the written bitstring and ``int(s, 2)`` is the parse.

The four supported families are induced subgraphs of the hypercube:

* Hypercube:       all bitstrings.
* Fibonacci:       no two adjacent 1s (b_i * b_{i+1} = 0).
* Lucas:           Fibonacci and additionally b_1 * b_n = 0.
* AlternateLucas:  Fibonacci and additionally b_{n-2} * b_n = 0 (n >= 3).

All values here are immutable; every function is pure and thread-safe.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import InvalidArgumentError, InvalidLengthError, InvalidVertexError

MAX_LENGTH = 32  # one machine word; everything here is exponential in n anyway


class CubeFamily(enum.Enum):
    HYPERCUBE = "hypercube"
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    ALTERNATE_LUCAS = "alternatelucas"

    @property
    def min_length(self) -> int:
        # Hypercube and Fibonacci admit the single zero-length vertex (K_1).
        if self is CubeFamily.LUCAS:
            return 1
        if self is CubeFamily.ALTERNATE_LUCAS:
            return 3
        return 0

    @classmethod
    def parse(cls, name: str) -> "CubeFamily":
        key = name.strip().lower().replace("_", "").replace("-", "")
        for fam in cls:
            if fam.value.replace("_", "") == key:
                return fam
        raise InvalidArgumentError(f"unknown cube family: {name!r}")


@dataclass(frozen=True, order=True, slots=True)
class Vertex:
    """A length-n bitstring packed into an int (b_1 = most significant bit)."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if not 0 <= self.length <= MAX_LENGTH:
            raise InvalidLengthError(f"length {self.length} not in 0..{MAX_LENGTH}")
        if self.bits < 0 or self.bits >> self.length:
            raise InvalidLengthError(
                f"bitmask {self.bits:#x} does not fit in {self.length} bits"
            )

    @classmethod
    def from_string(cls, s: str) -> "Vertex":
        if any(c not in "01" for c in s):
            raise InvalidVertexError(f"vertex string must be over {{0,1}}: {s!r}")
        return cls(int(s, 2) if s else 0, len(s))

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b") if self.length else ""

    def coordinate(self, j: int) -> int:
        """Value of coordinate b_j, 1-based from the left."""
        if not 1 <= j <= self.length:
            raise InvalidArgumentError(f"coordinate {j} not in 1..{self.length}")
        return (self.bits >> (self.length - j)) & 1

    def flip(self, j: int) -> "Vertex":
        """Vertex with coordinate b_j flipped."""
        if not 1 <= j <= self.length:
            raise InvalidArgumentError(f"coordinate {j} not in 1..{self.length}")
        return Vertex(self.bits ^ (1 << (self.length - j)), self.length)


def hamming_distance(u: Vertex, v: Vertex) -> int:
    if u.length != v.length:
        raise InvalidArgumentError("vertices have different lengths")
    return (u.bits ^ v.bits).bit_count()


def cyclic_shift(v: Vertex, k: int) -> Vertex:
    """Right cyclic shift: b_1..b_n -> b_{n-k+1}..b_n b_1..b_{n-k}."""
    n = v.length
    if n == 0:
        return v
    k %= n
    if k == 0:
        return v
    low = v.bits & ((1 << k) - 1)
    return Vertex((low << (n - k)) | (v.bits >> k), n)


def mask_predicate(family: CubeFamily, n: int) -> Callable[[int], bool]:
    """Membership test on raw bitmasks of length n (hot-loop form)."""
    if family is CubeFamily.HYPERCUBE:
        return lambda m: True
    if family is CubeFamily.FIBONACCI:
        return lambda m: m & (m >> 1) == 0
    if family is CubeFamily.LUCAS:
        # b_1 * b_n = 0; at n = 1 this reads b_1 * b_1 = 0 and excludes "1"
        top = 1 << (n - 1)
        return lambda m: m & (m >> 1) == 0 and not (m & top and m & 1)
    # Alternate Lucas: b_{n-2} * b_n = 0, i.e. bits 2 and 0 never both set
    return lambda m: m & (m >> 1) == 0 and (m & 0b101) != 0b101


def _require_length(family: CubeFamily, n: int) -> None:
    if not family.min_length <= n <= MAX_LENGTH:
        raise InvalidLengthError(
            f"{family.value} requires length in {family.min_length}..{MAX_LENGTH}, got {n}"
        )


def is_member(family: CubeFamily, v: Vertex) -> bool:
    """True iff v satisfies the family constraint at its own length."""
    _require_length(family, v.length)
    return mask_predicate(family, v.length)(v.bits)


def generate_vertices(family: CubeFamily, n: int) -> list[Vertex]:
    """All members of the family at length n, ascending bitmask order."""
    _require_length(family, n)
    pred = mask_predicate(family, n)
    return [Vertex(m, n) for m in range(1 << n) if pred(m)]


def generate_masks(family: CubeFamily, n: int) -> list[int]:
    """Raw-bitmask variant of generate_vertices."""
    _require_length(family, n)
    pred = mask_predicate(family, n)
    return [m for m in range(1 << n) if pred(m)]


def neighbors(family: CubeFamily, v: Vertex) -> list[Vertex]:
    """In-family single-coordinate flips of v, ascending bitmask order."""
    if not is_member(family, v):
        raise InvalidVertexError(f"{v} is not a member of {family.value}")
    pred = mask_predicate(family, v.length)
    flips = (v.bits ^ (1 << i) for i in range(v.length))
    return [Vertex(m, v.length) for m in sorted(m for m in flips if pred(m))]


@dataclass(frozen=True)
class Block:
    """One side of a fundamental decomposition: prefix . subfamily(length) . suffix."""

    prefix: str
    family: CubeFamily
    length: int
    suffix: str = ""

    @property
    def label(self) -> str:
        return f"{self.prefix or '·'}{self.family.value}({self.length}){self.suffix}"

    def vertices(self) -> list[Vertex]:
        return [
            Vertex.from_string(self.prefix + str(w) + self.suffix)
            for w in generate_vertices(self.family, self.length)
        ]


@dataclass(frozen=True)
class Decomposition:
    """Partition of a cube by leading bit(s), plus the cross matching.

    ``matching`` pairs every right-block vertex with the left-block vertex
    obtained by clearing its leading 1, so each edge flips coordinate b_1.
    """

    family: CubeFamily
    length: int
    left: Block
    right: Block
    matching: tuple[tuple[Vertex, Vertex], ...] = field(repr=False)

    def check(self) -> None:
        """Validate the partition and perfect-matching invariants (raises)."""
        left = self.left.vertices()
        right = self.right.vertices()
        everyone = set(generate_vertices(self.family, self.length))
        left_set, right_set = set(left), set(right)
        if left_set & right_set:
            raise InvalidArgumentError("decomposition blocks overlap")
        if left_set | right_set != everyone:
            raise InvalidArgumentError("decomposition blocks do not cover the cube")
        if sorted(r for r, _ in self.matching) != sorted(right):
            raise InvalidArgumentError("matching does not cover the right block exactly once")
        seen_left = set()
        for r, l in self.matching:
            if hamming_distance(r, l) != 1:
                raise InvalidArgumentError(f"matching edge {r}-{l} is not a cube edge")
            if l not in left_set or l in seen_left:
                raise InvalidArgumentError(f"matching target {l} invalid or reused")
            seen_left.add(l)


def fundamental_decomposition(family: CubeFamily, n: int) -> Decomposition:
    """Split the family at length n by its leading bit(s).

    Hypercube n>=1:       0Q(n-1)  + 1Q(n-1)
    Fibonacci n>=2:       0F(n-1)  + 10F(n-2)
    Lucas n>=3:           0F(n-1)  + 10F(n-3)0
    AlternateLucas n>=5:  0AL(n-1) + 10AL(n-2)
    """
    fib = CubeFamily.FIBONACCI
    if family is CubeFamily.HYPERCUBE:
        if n < 1:
            raise InvalidLengthError("hypercube decomposition needs n >= 1")
        left = Block("0", family, n - 1)
        right = Block("1", family, n - 1)
    elif family is CubeFamily.FIBONACCI:
        if n < 2:
            raise InvalidLengthError("fibonacci decomposition needs n >= 2")
        left = Block("0", fib, n - 1)
        right = Block("10", fib, n - 2)
    elif family is CubeFamily.LUCAS:
        if n < 3:
            raise InvalidLengthError("lucas decomposition needs n >= 3")
        left = Block("0", fib, n - 1)
        right = Block("10", fib, n - 3, suffix="0")
    else:
        if n < 5:
            raise InvalidLengthError("alternate lucas decomposition needs n >= 5")
        left = Block("0", family, n - 1)
        right = Block("10", family, n - 2)
    _require_length(family, n)
    top = 1 << (n - 1)
    matching = tuple((r, Vertex(r.bits ^ top, n)) for r in right.vertices())
    return Decomposition(family, n, left, right, matching)


def iter_masks(family: CubeFamily, n: int) -> Iterator[int]:
    """Lazily iterate member bitmasks in ascending order."""
    _require_length(family, n)
    pred = mask_predicate(family, n)
    return (m for m in range(1 << n) if pred(m))
