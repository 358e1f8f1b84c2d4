"""
Permutations of [n] = {1, ..., n} in one-line notation and the statistics
used by the bijections: reduction, reverse/complement, right inversion
vectors, inversions, cycle forms, Carlitz inversions, runs and
right-to-left minima, 321-avoidance.

Values and positions are 1-based everywhere in the public surface.

>>> pi = make_permutation([5, 3, 7, 2, 8, 1, 4, 6])
>>> right_inversion_vector(pi)
(4, 2, 4, 1, 3, 0, 0, 0)
>>> inversion_count(pi)
14
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateValue,
    EmptyInput,
    EntryTooLarge,
    ParseError,
    ValueOutOfRange,
)

__all__ = [
    "Permutation", "InversionVector", "CycleDecomposition", "RunProfile",
    "make_permutation", "identity", "reduce", "reverse", "complement",
    "right_inversion_vector", "permutation_from_riv", "inversion_count",
    "standard_cycle_form", "flatten_cycles", "carlitz_inversions",
    "run_profile", "avoids_321", "parse_permutation", "parse_cycles",
]

# c_1..c_n with 0 <= c_i <= n - i
InversionVector = tuple


class Permutation(tuple):
    """
    A permutation of [n] stored as its one-line word.

    It is a tuple of the values pi_1..pi_n, so ``pi[0]`` is pi_1; use
    ``pi(i)`` for the 1-based reading.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int]):
        values = tuple(values)
        n = len(values)
        if n == 0:
            raise EmptyInput("permutation")
        seen = [False] * (n + 1)
        for pos, v in enumerate(values, start=1):
            if not isinstance(v, int) or not 1 <= v <= n:
                raise ValueOutOfRange(v, pos, n)
            if seen[v]:
                raise DuplicateValue(v, pos)
            seen[v] = True
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        # caller guarantees a rearrangement of 1..n
        return tuple.__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)!r})"


def make_permutation(values: Sequence[int]) -> Permutation:
    return Permutation(values)


def identity(n: int) -> Permutation:
    if n < 1:
        raise EmptyInput("permutation")
    return Permutation._trusted(range(1, n + 1))


def reduce(sequence: Sequence[int]) -> Permutation:
    """Relabel distinct integers by rank, keeping their relative order.

    >>> str(reduce([5, 7, 2, 3, 9, 6]))
    '3 5 1 2 6 4'
    """
    if len(sequence) == 0:
        raise EmptyInput("sequence")
    rank = {}
    for pos, v in enumerate(sequence, start=1):
        if v in rank:
            raise DuplicateValue(v, pos)
        rank[v] = 0
    for r, v in enumerate(sorted(rank), start=1):
        rank[v] = r
    return Permutation._trusted(rank[v] for v in sequence)


def reverse(pi: Permutation) -> Permutation:
    return Permutation._trusted(reversed(pi))


def complement(pi: Permutation) -> Permutation:
    m = len(pi) + 1
    return Permutation._trusted(m - v for v in pi)


def right_inversion_vector(pi: Sequence[int]) -> InversionVector:
    """c_i = number of j > i with pi_j < pi_i."""
    n = len(pi)
    return tuple(
        sum(1 for j in range(i + 1, n) if pi[j] < pi[i]) for i in range(n)
    )


def permutation_from_riv(v: Sequence[int]) -> Permutation:
    """Rebuild the unique permutation whose right inversion vector is ``v``.

    pi_i is the (c_i + 1)-th smallest value not used by pi_1..pi_{i-1}.
    """
    n = len(v)
    if n == 0:
        raise EmptyInput("inversion vector")
    unused = list(range(1, n + 1))
    out = []
    for i, c in enumerate(v, start=1):
        if not 0 <= c <= n - i:
            raise EntryTooLarge(i, c, n - i)
        out.append(unused.pop(c))
    return Permutation._trusted(out)


def inversion_count(pi: Sequence[int]) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles in standard form: minimum first, cycles by increasing minima."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    @property
    def n(self) -> int:
        return sum(self.lengths)

    def to_permutation(self) -> Permutation:
        image = [0] * (self.n + 1)
        for cyc in self.cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                image[a] = b
        return Permutation(image[1:])

    def __str__(self) -> str:
        return "".join(
            "(" + " ".join(map(str, c)) + ")" for c in self.cycles
        )


def standard_cycle_form(pi: Permutation) -> CycleDecomposition:
    n = len(pi)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = pi[x - 1]
        cycles.append(tuple(cyc))
    return CycleDecomposition(tuple(cycles))


def flatten_cycles(cd: CycleDecomposition) -> Permutation:
    return Permutation._trusted(v for c in cd.cycles for v in c)


def carlitz_inversions(pi: Permutation) -> int:
    return inversion_count(flatten_cycles(standard_cycle_form(pi)))


@dataclass(frozen=True)
class RunProfile:
    descents: tuple[int, ...]
    ascents: tuple[int, ...]
    ascending_runs: tuple[tuple[int, ...], ...]
    descending_runs: tuple[tuple[int, ...], ...]
    # positions increase, and so do the values read at them
    rtl_minima_positions: tuple[int, ...]
    rtl_minima_values: tuple[int, ...]


def _split_runs(pi, cuts):
    runs, start = [], 0
    for c in cuts:
        runs.append(tuple(pi[start:c]))
        start = c
    runs.append(tuple(pi[start:]))
    return tuple(runs)


def run_profile(pi: Permutation) -> RunProfile:
    n = len(pi)
    descents = tuple(i for i in range(1, n) if pi[i - 1] > pi[i])
    ascents = tuple(i for i in range(1, n) if pi[i - 1] < pi[i])
    positions = []
    low = n + 1
    for i in range(n, 0, -1):
        if pi[i - 1] < low:
            low = pi[i - 1]
            positions.append(i)
    positions.reverse()
    return RunProfile(
        descents=descents,
        ascents=ascents,
        ascending_runs=_split_runs(pi, descents),
        descending_runs=_split_runs(pi, ascents),
        rtl_minima_positions=tuple(positions),
        rtl_minima_values=tuple(pi[p - 1] for p in positions),
    )


def avoids_321(pi: Sequence[int]) -> bool:
    """True when ``pi`` has no decreasing subsequence of length three.

    Linear scan: the entries that are not left-to-right maxima must
    increase.
    """
    top = 0  # largest entry so far
    mid = 0  # largest entry so far that sits below an earlier larger one
    for x in pi:
        if x > top:
            top = x
        elif x < mid:
            return False
        else:
            mid = x
    return True


_SPACED = re.compile(r"^\s*\d+(?:[\s,]+\d+)*\s*$")


def parse_permutation(text: str) -> Permutation:
    """Parse "6 1 4 2 9 7 3 5 8" or, for n <= 9, the compact "614297358"."""
    s = text.strip()
    if not s:
        raise ParseError(text, "empty permutation")
    if not _SPACED.match(s):
        raise ParseError(text, "expected decimal values separated by spaces")
    tokens = re.split(r"[\s,]+", s)
    if len(tokens) == 1 and len(s) > 1:
        if len(s) > 9:
            raise ParseError(text, "compact form is only accepted for n <= 9")
        tokens = list(s)
    try:
        return Permutation(int(t) for t in tokens)
    except (DuplicateValue, ValueOutOfRange) as exc:
        raise ParseError(text, str(exc)) from exc


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> CycleDecomposition:
    """Parse "(1 3 2 7 4)(5 9 8)(6)" into standard cycle form."""
    s = text.strip()
    if not s or _CYCLE.sub("", s).strip():
        raise ParseError(text, "expected parenthesised cycles")
    cycles = []
    for body in _CYCLE.findall(s):
        parts = body.split()
        if len(parts) == 1 and len(parts[0]) > 1:
            parts = list(parts[0])
        if not parts:
            raise ParseError(text, "empty cycle")
        cycles.append(tuple(int(p) for p in parts))
    try:
        pi = CycleDecomposition(tuple(cycles)).to_permutation()
        if sorted(v for c in cycles for v in c) != list(range(1, len(pi) + 1)):
            raise ParseError(text, "cycles must partition 1..n")
    except (IndexError, DuplicateValue, ValueOutOfRange) as exc:
        raise ParseError(text, "cycles must partition 1..n") from exc
    return standard_cycle_form(pi)
