"""Bijections between diametral paths and alternating permutations.

The machinery is one table: write the path bottom-up, one row per step,
one column per coordinate.  Every column that differs between the two
endpoints flips exactly once along a shortest path; the mark of a column
is the step at which it flips, i.e. the first row (scanning upward) where
the column already shows its final value.  Reading the marks off in column
order gives a permutation of the step numbers.

For the Fibonacci cube's unique diametral pair this permutation is exactly
an alternating permutation of [n], and filling columns back in from the
marks inverts the map.  The Lucas cube (even n) uses the same marking and
lands on circular alternating permutations.  The Alternate Lucas cube has
one frozen coordinate per diametral pair; deleting it either reduces to
the Fibonacci bijection one dimension down (pair kinds iii/iv) or leaves
an alternating core on the first n-3 columns plus a free choice of two
step numbers for the last two columns (kinds i/ii).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitcubes import (
    CubeFamily,
    Vertex,
    cyclic_shift,
    hamming_distance,
    is_member,
    mask_predicate,
)
from .errors import InvalidArgumentError, InvalidPathError, InvalidPermutationError
from .euler import is_alternating, is_circular_alternating
from .metrics import (
    alternate_lucas_pair_forms,
    fibonacci_diametral_pair,
    lucas_even_pair,
    lucas_odd_pair,
)

Path = tuple[Vertex, ...]
Permutation = tuple[int, ...]


def check_shortest_path(
    family: CubeFamily,
    path: Path,
    expect_u: Vertex | None = None,
    expect_v: Vertex | None = None,
) -> None:
    """Raise InvalidPathError unless path is a shortest in-family walk.

    Checks: nonempty, membership of every vertex, consecutive Hamming
    distance 1, length equal to the endpoint Hamming distance, and each
    differing coordinate flipped exactly once (no backtracking).
    """
    if not path:
        raise InvalidPathError("empty path")
    u, v = path[0], path[-1]
    if expect_u is not None and u != expect_u:
        raise InvalidPathError(f"path starts at {u}, expected {expect_u}")
    if expect_v is not None and v != expect_v:
        raise InvalidPathError(f"path ends at {v}, expected {expect_v}")
    n = u.length
    pred = mask_predicate(family, n)
    for w in path:
        if w.length != n:
            raise InvalidPathError("path mixes vertex lengths")
        if not pred(w.bits):
            raise InvalidPathError(f"{w} is not a member of {family.value}")
    diff = u.bits ^ v.bits
    if len(path) != diff.bit_count() + 1:
        raise InvalidPathError(
            f"path has {len(path) - 1} steps, endpoints are {diff.bit_count()} apart"
        )
    for a, b in zip(path, path[1:]):
        step = a.bits ^ b.bits
        if step.bit_count() != 1:
            raise InvalidPathError(f"{a} -> {b} is not a cube edge")
        if not step & diff or (a.bits & step) != (u.bits & step):
            raise InvalidPathError(f"{a} -> {b} reflips or leaves the interval")


def _flip_marks(path: Path) -> dict[int, int]:
    """Column j -> step at which column j flips (differing columns only)."""
    u, v = path[0], path[-1]
    n = u.length
    marks: dict[int, int] = {}
    for t in range(1, len(path)):
        j = n - (path[t - 1].bits ^ path[t].bits).bit_length() + 1
        marks[j] = t
    return marks


@dataclass(frozen=True)
class StepTable:
    """A path rendered as the marked step table.

    rows holds s_0..s_d bottom-up; marks maps column index (1-based) to the
    marked row.  On the canonical pairs every odd column's mark is its first
    1 going up and every even column's mark is its first 0.
    """

    rows: Path
    marks: dict[int, int]

    @classmethod
    def from_path(cls, family: CubeFamily, path: Path) -> "StepTable":
        check_shortest_path(family, path)
        return cls(tuple(path), _flip_marks(path))

    def permutation(self) -> Permutation:
        """Marks in column order; a permutation when every column flips."""
        n = self.rows[0].length
        try:
            return tuple(self.marks[j] for j in range(1, n + 1))
        except KeyError as missing:
            raise InvalidPathError(f"column {missing} never flips") from None

    def render(self) -> str:
        """Text table: header, then rows top-down from s_d to s_0."""
        n = self.rows[0].length
        d = len(self.rows) - 1
        width = max(len("step"), len(f"s{d}"))
        header = " ".join([f"{'step':>{width}}"] + [f"{f'b{j}':>3}" for j in range(1, n + 1)])
        lines = [header]
        for t in range(d, -1, -1):
            cells = []
            for j in range(1, n + 1):
                bit = self.rows[t].coordinate(j)
                cells.append(f"[{bit}]" if self.marks.get(j) == t else f" {bit} ")
            lines.append(" ".join([f"{f's{t}':>{width}}"] + cells))
        return "\n".join(lines)


def path_to_permutation(path: Path) -> Permutation:
    """Map a diametral Fibonacci-cube path to its alternating permutation.

    The path must run between the unique diametral pair; the result lists,
    for each column, the step at which that column flipped.
    """
    n = path[0].length if path else 0
    u, v = fibonacci_diametral_pair(n)
    check_shortest_path(CubeFamily.FIBONACCI, path, u, v)
    return StepTable(tuple(path), _flip_marks(path)).permutation()


def _fill_rows(sigma: dict[int, int], start: Vertex, depth: int, frozen: set[int]) -> Path:
    """Rebuild rows from flip steps: column j holds start's bit strictly below
    sigma[j] and the flipped bit from row sigma[j] upward."""
    n = start.length
    rows = []
    for t in range(depth + 1):
        m = 0
        for j in range(1, n + 1):
            bit = start.coordinate(j)
            if j not in frozen and t >= sigma[j]:
                bit ^= 1
            m = (m << 1) | bit
        rows.append(Vertex(m, n))
    return tuple(rows)


def permutation_to_path(perm: Permutation, n: int) -> Path:
    """Inverse of path_to_permutation: column-fill the table from the marks."""
    if len(perm) != n:
        raise InvalidPermutationError(f"expected a permutation of [{n}], got {perm}")
    if not is_alternating(perm):
        raise InvalidPermutationError(f"{perm} is not alternating")
    u, v = fibonacci_diametral_pair(n) if n else (Vertex(0, 0), Vertex(0, 0))
    path = _fill_rows(dict(enumerate(perm, start=1)), u, n, frozen=set())
    check_shortest_path(CubeFamily.FIBONACCI, path, u, v)
    return path


def lucas_path_to_permutation(path: Path) -> Permutation:
    """Same marking, Lucas cube, even n: lands on circular alternating
    permutations (the cyclic constraint b_1 b_n = 0 forces sigma_1 > sigma_n)."""
    n = path[0].length if path else 0
    if n % 2:
        raise InvalidArgumentError("lucas bijection applies to even n")
    u, v = lucas_even_pair(n)
    check_shortest_path(CubeFamily.LUCAS, path, u, v)
    return StepTable(tuple(path), _flip_marks(path)).permutation()


def lucas_permutation_to_path(perm: Permutation) -> Path:
    """Column-fill a circular alternating permutation into a Lucas path."""
    n = len(perm)
    if not is_circular_alternating(perm):
        raise InvalidPermutationError(f"{perm} is not circular alternating")
    u, v = lucas_even_pair(n)
    path = _fill_rows(dict(enumerate(perm, start=1)), u, n, frozen=set())
    check_shortest_path(CubeFamily.LUCAS, path, u, v)
    return path


def lucas_odd_shift_transport(path: Path, i: int) -> Path:
    """Transport a diametral path of the base odd-n Lucas pair (u_1, v_1)
    onto the pair (u_i, v_i) by right-cyclic-shifting every vertex i-1 times.

    Cyclic shifts are automorphisms of the Lucas cube, so the image is again
    a diametral path; shifting back inverts the map.
    """
    n = path[0].length if path else 0
    u1, v1 = lucas_odd_pair(n, 1)
    if not 1 <= i <= n:
        raise InvalidArgumentError(f"shift index {i} not in 1..{n}")
    check_shortest_path(CubeFamily.LUCAS, path, u1, v1)
    if i == 1:
        return tuple(path)
    shifted = tuple(cyclic_shift(w, i - 1) for w in path)
    check_shortest_path(CubeFamily.LUCAS, shifted, *lucas_odd_pair(n, i))
    return shifted


@dataclass(frozen=True)
class AlternateLucasImage:
    """Image of an Alternate Lucas diametral path under the reduction.

    kinds iii/iv: core is an alternating permutation of [n-1], tail is None.
    kinds i/ii:   core is an alternating permutation of [n-3] (the pattern of
    the first n-3 flip steps) and tail = (a, b), a > b, the two step numbers
    assigned to the last two columns.
    """

    kind: str
    core: Permutation
    tail: tuple[int, int] | None = None


def _standardize(values: tuple[int, ...]) -> Permutation:
    order = sorted(values)
    rank = {val: r + 1 for r, val in enumerate(order)}
    return tuple(rank[val] for val in values)


def _frozen_column(u: Vertex, v: Vertex) -> int:
    """The single coordinate agreeing between an Alternate Lucas pair."""
    same = ~(u.bits ^ v.bits) & ((1 << u.length) - 1)
    if same.bit_count() != 1:
        raise InvalidPathError("endpoints do not differ in exactly n-1 coordinates")
    return u.length - same.bit_length() + 1


def _delete_column(v: Vertex, j: int) -> Vertex:
    n = v.length
    hi = v.bits >> (n - j + 1)
    lo = v.bits & ((1 << (n - j)) - 1)
    return Vertex((hi << (n - j)) | lo, n - 1)


def _insert_zero_column(v: Vertex, j: int) -> Vertex:
    n = v.length + 1
    hi = v.bits >> (n - j)
    lo = v.bits & ((1 << (n - j)) - 1)
    return Vertex((hi << (n - j + 1)) | lo, n)


def _oriented(path: Path) -> tuple[Path, bool]:
    # odd n writes the pair forms starting with 1; work on the reversed path
    # so the surviving columns always carry the 0101... start pattern
    if path[0].coordinate(1) == 1:
        return tuple(reversed(path)), True
    return tuple(path), False


def alucas_path_to_permutation(path: Path, kind: str) -> AlternateLucasImage:
    """Reduce a diametral Alternate Lucas path of the given pair kind."""
    n = path[0].length if path else 0
    forms = alternate_lucas_pair_forms(n)
    if kind not in forms:
        raise InvalidArgumentError(f"pair kind must be one of {tuple(forms)}, got {kind!r}")
    u, v = forms[kind]
    check_shortest_path(CubeFamily.ALTERNATE_LUCAS, path, u, v)
    work, _ = _oriented(path)
    frozen = _frozen_column(work[0], work[-1])
    if frozen in (n - 1, n):
        reduced = tuple(_delete_column(w, frozen) for w in work)
        core = StepTable(reduced, _flip_marks(reduced)).permutation()
        return AlternateLucasImage(kind, core)
    marks = _flip_marks(work)
    core = _standardize(tuple(marks[j] for j in range(1, n - 2)))
    a, b = marks[n - 1], marks[n]
    return AlternateLucasImage(kind, core, (max(a, b), min(a, b)))


def alucas_permutation_to_path(image: AlternateLucasImage, n: int) -> Path:
    """Rebuild the unique diametral path that reduces to ``image``."""
    forms = alternate_lucas_pair_forms(n)
    if image.kind not in forms:
        raise InvalidArgumentError(f"pair kind must be one of {tuple(forms)}")
    u, v = forms[image.kind]
    reverse = u.coordinate(1) == 1
    wu, wv = (v, u) if reverse else (u, v)
    frozen = _frozen_column(wu, wv)
    depth = n - 1
    if frozen in (n - 1, n):
        if image.tail is not None:
            raise InvalidPermutationError("pair kinds iii/iv carry no tail")
        if len(image.core) != n - 1 or not is_alternating(image.core):
            raise InvalidPermutationError(f"core must be alternating of length {n - 1}")
        inner = _fill_rows(
            dict(enumerate(image.core, start=1)),
            _delete_column(wu, frozen),
            depth,
            frozen=set(),
        )
        path = tuple(_insert_zero_column(w, frozen) for w in inner)
    else:
        if image.tail is None:
            raise InvalidPermutationError("pair kinds i/ii require a tail pair")
        a, b = image.tail
        if not (1 <= b < a <= depth):
            raise InvalidPermutationError(f"tail {image.tail} must be descending in 1..{depth}")
        if len(image.core) != n - 3 or not is_alternating(image.core):
            raise InvalidPermutationError(f"core must be alternating of length {n - 3}")
        remaining = sorted(set(range(1, depth + 1)) - {a, b})
        if len(remaining) != n - 3:
            raise InvalidPermutationError("tail values collide")
        sigma = {j: remaining[image.core[j - 1] - 1] for j in range(1, n - 2)}
        # the column flipping 0 -> 1 must flip after its 1 -> 0 neighbour
        if wu.coordinate(n - 1) == 0:
            sigma[n - 1], sigma[n] = a, b
        else:
            sigma[n - 1], sigma[n] = b, a
        path = _fill_rows(sigma, wu, depth, frozen={frozen})
    if reverse:
        path = tuple(reversed(path))
    check_shortest_path(CubeFamily.ALTERNATE_LUCAS, path, u, v)
    return path
