"""
Deco polyominoes as left-to-right lists of column spans.

A column span ``(bottom, top)`` covers the cells at levels
bottom..top-1; the source cell sits at level 0 of column 1, so the level
of a column is simply its ``top``. A deco polyomino of height n is built
by n steps, recorded by its code a_1..a_n (0 <= a_j <= j-1):

* a_j = 0, elevation: the leftmost column grows one cell downwards;
* a_j = k > 0, column pasting: a k-cell column is prepended, bottom
  aligned with the current leftmost column.

Codes are stored low index first and displayed as (a_n, ..., a_1).

>>> d = build_from_code(DecoCode.from_display([1, 1, 0]))
>>> format_cols(d)
'cols=0:1,0:1,0:1'
>>> str(code_of(d))
'(1,1,0)'
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import EmptyInput, InvalidCode, InvalidPolyomino, ParseError

__all__ = [
    "ColumnSpan", "DecoPolyomino", "DecoCode", "BottomBorder", "StatRecord",
    "Violation", "ValidationReport",
    "build_from_code", "code_of", "validate", "statistics", "bottom_border",
    "is_parallelogram", "enumerate_codes", "random_code", "random_codes", "render_ascii",
    "format_cols", "parse_cols", "parse_code", "single_column",
]


class ColumnSpan(NamedTuple):
    bottom: int
    top: int  # one past the highest cell

    @property
    def length(self) -> int:
        return self.top - self.bottom


@dataclass(frozen=True)
class DecoPolyomino:
    columns: tuple[ColumnSpan, ...]

    def __init__(self, columns: Iterable[Sequence[int]]):
        object.__setattr__(
            self, "columns", tuple(ColumnSpan(int(b), int(t)) for b, t in columns)
        )

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return self.width + self.columns[-1].top - self.columns[0].bottom - 1

    @property
    def level(self) -> int:
        """Level of the last column."""
        return self.columns[-1].top - self.columns[0].bottom

    @property
    def area(self) -> int:
        return sum(c.top - c.bottom for c in self.columns)

    def __str__(self) -> str:
        return format_cols(self)


class DecoCode(tuple):
    """The construction code, entries a_1..a_n in storage order."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(entries)
        if not entries:
            raise EmptyInput("code")
        for j, a in enumerate(entries, start=1):
            if not isinstance(a, int) or not 0 <= a <= j - 1:
                raise InvalidCode(j, a)
        return super().__new__(cls, entries)

    @classmethod
    def from_display(cls, entries: Sequence[int]) -> "DecoCode":
        """Build from the display order (a_n, ..., a_1)."""
        return cls(reversed(tuple(entries)))

    @classmethod
    def _trusted(cls, entries: Iterable[int]) -> "DecoCode":
        return tuple.__new__(cls, entries)

    @property
    def n(self) -> int:
        return len(self)

    def a(self, j: int) -> int:
        return self[j - 1]

    def display(self) -> tuple[int, ...]:
        return tuple(reversed(self))

    def format(self, order: str = "display") -> str:
        seq = self.display() if order == "display" else tuple(self)
        return "(" + ",".join(map(str, seq)) + ")"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"DecoCode.from_display({list(self.display())!r})"


def single_column(n: int) -> DecoPolyomino:
    return DecoPolyomino([(0, n)])


def build_from_code(code: Sequence[int]) -> DecoPolyomino:
    if not isinstance(code, DecoCode):
        code = DecoCode(code)
    # leftmost column last, so pasting is an append
    rev: list[list[int]] = []
    for a in code:
        if a == 0:
            if rev:
                rev[-1][0] -= 1
            else:
                rev.append([0, 1])
        else:
            b = rev[-1][0]
            rev.append([b, b + a])
    shift = -rev[-1][0]
    return DecoPolyomino((b + shift, t + shift) for b, t in reversed(rev))


def code_of(delta: DecoPolyomino) -> DecoCode:
    """Undo the construction step by step, n down to 1."""
    report = validate(delta)
    if not report.valid:
        raise InvalidPolyomino(str(v) for v in report.violations)
    rev = [[b, t] for b, t in reversed(delta.columns)]
    out = []
    while rev:
        first = rev[-1]
        if len(rev) > 1 and first[0] == rev[-2][0]:
            out.append(first[1] - first[0])
            rev.pop()
        else:
            out.append(0)
            first[0] += 1
            if first[0] == first[1]:
                rev.pop()
    out.reverse()
    return DecoCode._trusted(out)


class Violation(NamedTuple):
    name: str
    detail: str

    def __str__(self) -> str:
        return f"{self.name}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.violations)


def validate(delta: DecoPolyomino) -> ValidationReport:
    cols = delta.columns
    found: list[Violation] = []
    if not cols:
        return ValidationReport((Violation("EmptyPolyomino", "no columns"),))
    for i, (b, t) in enumerate(cols, start=1):
        if t <= b:
            found.append(Violation("EmptyColumn", f"column {i} spans {b}:{t}"))
    if found:
        return ValidationReport(tuple(found))
    base = cols[0].bottom
    if base != 0:
        found.append(Violation("SourceLevelViolation", f"first column bottom is {base}, not 0"))
    for i in range(1, len(cols)):
        (b0, t0), (b1, t1) = cols[i - 1], cols[i]
        if b1 < b0:
            found.append(Violation(
                "MonotoneBottomViolation", f"column {i + 1} bottom {b1} < column {i} bottom {b0}"))
        if b1 >= t0 or b0 >= t1:
            found.append(Violation(
                "ConnectivityViolation", f"columns {i} and {i + 1} share no row"))
    w = len(cols)
    last = w + cols[-1].top - base
    for i, (b, t) in enumerate(cols[:-1], start=1):
        if i + t - base >= last:
            found.append(Violation(
                "DecoViolation",
                f"column {i} reaches anti-diagonal {i + t - base}, last column reaches {last}"))
    # directed height measured on the cells themselves
    lo = min(i + b for i, (b, t) in enumerate(cols, start=1))
    hi = max(i + t - 1 for i, (b, t) in enumerate(cols, start=1))
    if hi - lo + 1 != w + cols[-1].top - base - 1:
        found.append(Violation(
            "WidthLevelViolation",
            f"directed height {hi - lo + 1} != width {w} + level {cols[-1].top - base} - 1"))
    return ValidationReport(tuple(found))


@dataclass(frozen=True)
class StatRecord:
    height: int
    width: int
    vertical_height: int
    area: int
    last_column_level: int
    last_column_length: int
    first_column_length: int
    first_row_length: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def statistics(delta: DecoPolyomino) -> StatRecord:
    cols = delta.columns
    return StatRecord(
        height=delta.height,
        width=delta.width,
        vertical_height=max(t for _, t in cols) - min(b for b, _ in cols),
        area=delta.area,
        last_column_level=delta.level,
        last_column_length=cols[-1].length,
        first_column_length=cols[0].length,
        first_row_length=sum(1 for b, t in cols if b <= 0 < t),
    )


@dataclass(frozen=True)
class BottomBorder:
    cells: tuple[tuple[int, int], ...]  # (column, level), column 1-based
    row_lengths: tuple[int, ...]  # lowest row first
    row_starts: tuple[int, ...]  # 1-based border positions

    @property
    def rows(self) -> int:
        return len(self.row_lengths)


def bottom_border(delta: DecoPolyomino) -> BottomBorder:
    cols = delta.columns
    w = len(cols)
    cells = []
    level = cols[0].bottom
    for i, (b, t) in enumerate(cols, start=1):
        stop = cols[i].bottom if i < w else t - 1
        cells.append((i, level))
        while level < stop:
            level += 1
            cells.append((i, level))
    starts = [1]
    for p in range(1, len(cells)):
        if cells[p][1] != cells[p - 1][1]:
            starts.append(p + 1)
    lengths = [b - a for a, b in zip(starts, starts[1:] + [len(cells) + 1])]
    return BottomBorder(tuple(cells), tuple(lengths), tuple(starts))


def is_parallelogram(delta: DecoPolyomino) -> bool:
    tops = [t for _, t in delta.columns]
    return all(x <= y for x, y in zip(tops, tops[1:]))


def enumerate_codes(n: int) -> Iterator[DecoCode]:
    """All n! codes; odometer order with a_n most significant."""
    if n < 1:
        raise EmptyInput("height")
    radices = [range(j) for j in range(n, 0, -1)]
    for display in itertools.product(*radices):
        yield DecoCode._trusted(reversed(display))


def random_codes(n: int, seed: int, count: int) -> Iterator[DecoCode]:
    """``count`` independent uniform codes of height n from one seeded stream.

    Generator: Python's ``random.Random(seed)`` (MT19937). Within a code,
    a_1, ..., a_n are drawn in that order with ``randrange(j)``.
    """
    if n < 1:
        raise EmptyInput("height")
    rng = random.Random(seed)
    for _ in range(count):
        yield DecoCode._trusted(rng.randrange(j) for j in range(1, n + 1))


def random_code(n: int, seed: int) -> DecoCode:
    """Uniform code of height n; the first code of ``random_codes``."""
    return next(random_codes(n, seed, 1))


def render_ascii(delta: DecoPolyomino) -> str:
    cols = delta.columns
    lo = min(b for b, _ in cols)
    hi = max(t for _, t in cols)
    lines = []
    for level in range(hi - 1, lo - 1, -1):
        lines.append("".join("#" if b <= level < t else "." for b, t in cols))
    return "\n".join(lines)


def format_cols(delta: DecoPolyomino) -> str:
    return "cols=" + ",".join(f"{b}:{t}" for b, t in delta.columns)


_SPAN = re.compile(r"^\s*(-?\d+)\s*:\s*(-?\d+)\s*$")


def parse_cols(text: str) -> DecoPolyomino:
    """Parse "cols=0:2,0:2" (the "cols=" prefix is optional)."""
    s = text.strip()
    if s.startswith("cols="):
        s = s[len("cols="):]
    if not s:
        raise ParseError(text, "no columns")
    spans = []
    for tok in s.split(","):
        m = _SPAN.match(tok)
        if not m:
            raise ParseError(tok, "expected bottom:top")
        spans.append((int(m.group(1)), int(m.group(2))))
    return DecoPolyomino(spans)


def parse_code(text: str, order: str = "display") -> DecoCode:
    """Parse "(5,0,2,0,4,2,0,0,0)"; ``order`` is "display" or "low"."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    toks = [t for t in re.split(r"[\s,]+", s) if t]
    if not toks:
        raise ParseError(text, "empty code")
    entries = []
    for t in toks:
        if not t.isdigit():
            raise ParseError(t, "code entries are non-negative integers")
        entries.append(int(t))
    if order == "display":
        return DecoCode.from_display(entries)
    return DecoCode(entries)
