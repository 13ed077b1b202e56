"""Euler numbers and the permutation classes they count.

E_n counts the alternating (down-up) permutations of [n]:
1, 1, 1, 2, 5, 16, 61, 272, 1385, ...  (OEIS A000111).

Two independent computations are kept side by side: the boustrophedon
(Seidel-Entringer) triangle, and Andre's convolution recurrence

    2 E_{n+1} = sum_{k=0}^{n} C(n, k) E_k E_{n-k},  E_0 = E_1 = 1.

Plus membership tests and exhaustive generators/counters for alternating,
reverse-alternating and circular-alternating permutations, used as
brute-force oracles against the path-count formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Iterator, Sequence

from .errors import InvalidArgumentError, InvalidPermutationError

#: largest n accepted by the n!-scanning brute-force counters
BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class EulerTable:
    """E_0..E_m together with the boustrophedon triangle that produced them."""

    values: tuple[int, ...]
    entringer: tuple[tuple[int, ...], ...]


def euler_numbers(m: int) -> EulerTable:
    """E_0..E_m via the boustrophedon triangle, O(m^2) big-int additions.

    Row n is T(n, 0..n) with T(0,0) = 1, T(n,0) = 0 and
    T(n,k) = T(n,k-1) + T(n-1,n-k); then E_n = T(n,n).
    """
    if m < 0:
        raise InvalidArgumentError("m must be nonnegative")
    rows: list[tuple[int, ...]] = [(1,)]
    values = [1]
    for n in range(1, m + 1):
        prev = rows[-1]
        row = [0]
        for k in range(1, n + 1):
            row.append(row[k - 1] + prev[n - k])
        rows.append(tuple(row))
        values.append(row[n])
    return EulerTable(tuple(values), tuple(rows))


def euler_via_andre(m: int) -> tuple[int, ...]:
    """E_0..E_m from the convolution recurrence alone."""
    if m < 0:
        raise InvalidArgumentError("m must be nonnegative")
    values = [1, 1]
    for n in range(1, m):
        twice = sum(comb(n, k) * values[k] * values[n - k] for k in range(n + 1))
        if twice % 2:
            raise ArithmeticError(f"recurrence gave an odd sum at n={n}")
        values.append(twice // 2)
    return tuple(values[: m + 1])


def _as_permutation(p: Sequence[int]) -> tuple[int, ...]:
    entries = tuple(p)
    if sorted(entries) != list(range(1, len(entries) + 1)):
        raise InvalidPermutationError(f"not a permutation of 1..{len(entries)}: {entries}")
    return entries


def _alternating(entries: tuple[int, ...], down_first: bool) -> bool:
    for i in range(len(entries) - 1):
        descent = entries[i] > entries[i + 1]
        if descent != (down_first == (i % 2 == 0)):
            return False
    return True


def is_alternating(p: Sequence[int]) -> bool:
    """Down-up: sigma_1 > sigma_2 < sigma_3 > ...; n <= 1 is alternating."""
    return _alternating(_as_permutation(p), down_first=True)


def is_reverse_alternating(p: Sequence[int]) -> bool:
    """Up-down: sigma_1 < sigma_2 > sigma_3 < ..."""
    return _alternating(_as_permutation(p), down_first=False)


def _circular(entries: tuple[int, ...]) -> bool:
    # every odd position beats both neighbours, and sigma_1 > sigma_n
    n = len(entries)
    for i in range(1, n + 1, 2):
        if i < n and entries[i - 1] <= entries[i]:
            return False
        if i > 1 and entries[i - 1] <= entries[i - 2]:
            return False
    return n == 0 or entries[0] > entries[-1]


def is_circular_alternating(p: Sequence[int]) -> bool:
    """Even-length down-up alternation closed cyclically (sigma_1 > sigma_n)."""
    entries = _as_permutation(p)
    if len(entries) % 2:
        raise InvalidArgumentError("circular alternating permutations have even length")
    return _circular(entries)


def enumerate_alternating(n: int) -> Iterator[tuple[int, ...]]:
    """All alternating permutations of [n] in lexicographic order."""
    if n < 0:
        raise InvalidArgumentError("n must be nonnegative")

    def extend(prefix: list[int], free: list[int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(prefix)
            return
        pos = len(prefix)  # next index is pos+1 (1-based)
        for idx, val in enumerate(free):
            if pos >= 1:
                descent = prefix[-1] > val
                if descent != (pos % 2 == 1):  # odd 1-based position descends
                    continue
            prefix.append(val)
            yield from extend(prefix, free[:idx] + free[idx + 1 :])
            prefix.pop()

    return extend([], list(range(1, n + 1)))


def count_class(kind: str, n: int) -> int:
    """Brute-force count by filtering all n! permutations.

    kind is one of 'alternating', 'reverse', 'circular'.  Capped at
    n = 10 (3.6M permutations) to keep scans tractable.
    """
    if n < 0 or n > BRUTE_FORCE_LIMIT:
        raise InvalidArgumentError(f"brute-force count supports 0 <= n <= {BRUTE_FORCE_LIMIT}")
    if kind == "alternating":
        test = lambda q: _alternating(q, True)
    elif kind == "reverse":
        test = lambda q: _alternating(q, False)
    elif kind == "circular":
        if n % 2:
            raise InvalidArgumentError("circular class is defined for even n")
        test = _circular
    else:
        raise InvalidArgumentError(f"unknown permutation class: {kind!r}")
    return sum(1 for q in permutations(range(1, n + 1)) if test(q))
