"""
Six bijections between S_n and deco polyominoes of height n.

``phi(k, pi)`` maps a permutation to its polyomino and ``invert(k, delta)``
goes back. Maps 1 to 4 are defined through the construction code:

1. peel pi_1; a_n = 0 when pi_1 = n, else a_n = pi_1; recurse on the
   reduction of the rest;
2. the display code (a_n, ..., a_1) is the right inversion vector;
3. a_j = 0 opens the cycle (j), a_j = k puts j right after k in its cycle;
4. a_j = 0 appends j to the word, a_j = k inserts j with k entries after it.

Maps 5 and 6 fix the bottom border and stack columns on it:

5. the row lengths are the cycle lengths; the border carries the right
   inversion vector of the flattened cycle form;
6. the border carries the right inversion vector of pi; a row start holds
   the number of cells to its right in that row.

In both, a non-initial border cell holding k gets k cells stacked on the
column of its left neighbour.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import InvalidPolyomino, UnknownBijection
from .permutation import (
    CycleDecomposition,
    Permutation,
    flatten_cycles,
    permutation_from_riv,
    right_inversion_vector,
    standard_cycle_form,
)
from .polyomino import (
    DecoCode,
    DecoPolyomino,
    bottom_border,
    build_from_code,
    code_of,
    validate,
)

__all__ = [
    "BIJECTION_IDS", "phi", "invert", "code_for", "permutation_for_code",
    "phi1", "phi2", "phi3", "phi4", "phi5", "phi6",
    "phi1_inverse", "phi2_inverse", "phi3_inverse",
    "phi4_inverse", "phi5_inverse", "phi6_inverse",
]

BIJECTION_IDS = (1, 2, 3, 4, 5, 6)


def _as_perm(pi) -> Permutation:
    return pi if isinstance(pi, Permutation) else Permutation(pi)


# --- code-driven maps ------------------------------------------------------

def _code1(pi: Permutation) -> list[int]:
    sigma = list(pi)
    code = [0] * len(pi)
    for j in range(len(pi), 0, -1):
        head = sigma[0]
        code[j - 1] = 0 if head == j else head
        sigma = [x - 1 if x > head else x for x in sigma[1:]]
    return code


def _perm1(code: Sequence[int]) -> list[int]:
    sigma: list[int] = []
    for j, a in enumerate(code, start=1):
        k = a or j
        sigma = [k] + [x + 1 if x >= k else x for x in sigma]
    return sigma


def _code2(pi: Permutation) -> list[int]:
    return list(reversed(right_inversion_vector(pi)))


def _perm2(code: Sequence[int]) -> list[int]:
    return list(permutation_from_riv(tuple(reversed(code))))


def _code3(pi: Permutation) -> list[int]:
    cycles = [list(c) for c in standard_cycle_form(pi).cycles]
    code = [0] * len(pi)
    for m in range(len(pi), 0, -1):
        for ci, cyc in enumerate(cycles):
            if m in cyc:
                break
        if len(cyc) == 1:
            del cycles[ci]
        else:
            at = cyc.index(m)
            # m is the largest left, so it sits right where it was inserted
            code[m - 1] = cyc[at - 1]
            del cyc[at]
    return code


def _perm3(code: Sequence[int]) -> list[int]:
    cycles: list[list[int]] = []
    home: dict[int, list[int]] = {}
    for j, a in enumerate(code, start=1):
        if a == 0:
            cyc = [j]
            cycles.append(cyc)
        else:
            cyc = home[a]
            cyc.insert(cyc.index(a) + 1, j)
        home[j] = cyc
    return list(CycleDecomposition(tuple(map(tuple, cycles))).to_permutation())


def _code4(pi: Permutation) -> list[int]:
    word = list(pi)
    code = [0] * len(pi)
    for m in range(len(pi), 0, -1):
        at = word.index(m)
        code[m - 1] = len(word) - 1 - at
        del word[at]
    return code


def _perm4(code: Sequence[int]) -> list[int]:
    word: list[int] = []
    for j, a in enumerate(code, start=1):
        word.insert(len(word) - a, j)
    return word


_TO_CODE: dict[int, Callable] = {1: _code1, 2: _code2, 3: _code3, 4: _code4}
_FROM_CODE: dict[int, Callable] = {1: _perm1, 2: _perm2, 3: _perm3, 4: _perm4}


# --- border-driven maps ----------------------------------------------------

def _stack_on_border(row_lengths: Sequence[int], stacks: Sequence[int]) -> DecoPolyomino:
    """Lay out the bottom border and stack ``stacks[p]`` cells on the
    column left of border cell p (0-based) for each non-row-start p."""
    n = sum(row_lengths)
    starts = set()
    p = 0
    for s in row_lengths:
        starts.add(p)
        p += s
    col, level = 0, 0
    bottoms, tops = [0], [1]
    cell_col = [0]
    for p in range(1, n):
        if p in starts:
            level += 1
        else:
            col += 1
            bottoms.append(level)
            tops.append(level)
        tops[col] = level + 1
        cell_col.append(col)
    for p in range(1, n):
        if p not in starts and stacks[p]:
            tops[cell_col[p - 1]] += stacks[p]
    return DecoPolyomino(zip(bottoms, tops))


def _border_stacks(delta: DecoPolyomino):
    """Border rows, row-start positions (0-based), and the stack height above
    the left neighbour of every border cell (None at row starts)."""
    border = bottom_border(delta)
    starts = {s - 1 for s in border.row_starts}
    stacks = []
    for p, (col, level) in enumerate(border.cells):
        if p in starts:
            stacks.append(None)
        else:
            left_col, left_level = border.cells[p - 1]
            stacks.append(delta.columns[left_col - 1].top - (left_level + 1))
    return border, starts, stacks


def _checked(delta: DecoPolyomino) -> DecoPolyomino:
    report = validate(delta)
    if not report.valid:
        raise InvalidPolyomino(str(v) for v in report.violations)
    return delta


def _image5(pi: Permutation) -> DecoPolyomino:
    cd = standard_cycle_form(pi)
    b = right_inversion_vector(flatten_cycles(cd))
    p = 0
    for s in cd.lengths:
        assert b[p] == 0, "row start must carry 0"
        p += s
    return _stack_on_border(cd.lengths, b)


def _preimage5(delta: DecoPolyomino) -> Permutation:
    border, starts, stacks = _border_stacks(delta)
    word = permutation_from_riv([0 if s is None else s for s in stacks])
    cycles, p = [], 0
    for s in border.row_lengths:
        cycles.append(tuple(word[p:p + s]))
        p += s
    return CycleDecomposition(tuple(cycles)).to_permutation()


def _image6(pi: Permutation) -> DecoPolyomino:
    b = right_inversion_vector(pi)
    rows, p = [], 0
    while p < len(b):
        rows.append(b[p] + 1)
        p += b[p] + 1
    return _stack_on_border(rows, b)


def _preimage6(delta: DecoPolyomino) -> Permutation:
    border, starts, stacks = _border_stacks(delta)
    entries = list(stacks)
    for start, length in zip(border.row_starts, border.row_lengths):
        entries[start - 1] = length - 1
    return permutation_from_riv(entries)


# --- public surface --------------------------------------------------------

def _check_id(k: int) -> int:
    if k not in BIJECTION_IDS:
        raise UnknownBijection(k)
    return k


def phi(k: int, pi: Sequence[int]) -> DecoPolyomino:
    """Image of ``pi`` under bijection ``k``."""
    k = _check_id(k)
    pi = _as_perm(pi)
    if k in _TO_CODE:
        return build_from_code(DecoCode._trusted(_TO_CODE[k](pi)))
    delta = _image5(pi) if k == 5 else _image6(pi)
    assert build_from_code(code_of(delta)) == delta
    return delta


def code_for(k: int, pi: Sequence[int]) -> DecoCode:
    """Construction code of ``phi(k, pi)``."""
    k = _check_id(k)
    pi = _as_perm(pi)
    if k in _TO_CODE:
        return DecoCode._trusted(_TO_CODE[k](pi))
    return code_of(phi(k, pi))


def invert(k: int, delta: DecoPolyomino) -> Permutation:
    """The unique permutation that bijection ``k`` sends to ``delta``."""
    k = _check_id(k)
    if k in _FROM_CODE:
        return Permutation._trusted(_FROM_CODE[k](code_of(delta)))
    _checked(delta)
    return _preimage5(delta) if k == 5 else _preimage6(delta)


def permutation_for_code(k: int, code: Sequence[int]) -> Permutation:
    """Preimage under bijection ``k`` of the polyomino with this code."""
    k = _check_id(k)
    if not isinstance(code, DecoCode):
        code = DecoCode(code)
    if k in _FROM_CODE:
        return Permutation._trusted(_FROM_CODE[k](code))
    return invert(k, build_from_code(code))


def phi1(pi): return phi(1, pi)
def phi2(pi): return phi(2, pi)
def phi3(pi): return phi(3, pi)
def phi4(pi): return phi(4, pi)
def phi5(pi): return phi(5, pi)
def phi6(pi): return phi(6, pi)


def phi1_inverse(delta): return invert(1, delta)
def phi2_inverse(delta): return invert(2, delta)
def phi3_inverse(delta): return invert(3, delta)
def phi4_inverse(delta): return invert(4, delta)
def phi5_inverse(delta): return invert(5, delta)
def phi6_inverse(delta): return invert(6, delta)
