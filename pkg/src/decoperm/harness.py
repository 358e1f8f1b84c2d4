"""
Exhaustive checks over S_n and D_n, each returning a :class:`Report`.

The oracles at the top of this module (cubic 321 search, cell counting)
deliberately share no code with the library routines they audit.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass, field
from typing import Callable, Iterator

from scipy.stats import chi2

from . import permutation as P
from .bijections import BIJECTION_IDS, code_for, invert, phi, permutation_for_code
from .errors import CapExceeded, UnknownBijection
from .polyomino import (
    DecoPolyomino,
    bottom_border,
    build_from_code,
    enumerate_codes,
    format_cols,
    is_parallelogram,
    random_codes,
    statistics,
    validate,
)

DEFAULT_CAP = 8
MAX_LISTED_FAILURES = 10
SIGNIFICANCE = 0.001


def exhaustive_cap() -> int:
    """The exhaustive-check ceiling, overridable through DECO_MAX_N."""
    raw = os.environ.get("DECO_MAX_N")
    return int(raw) if raw else DEFAULT_CAP


def _require(n: int, cap: int | None, limit: int | None = None) -> None:
    cap = exhaustive_cap() if cap is None else cap
    if limit is not None:
        cap = min(cap, limit)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > cap:
        raise CapExceeded(n, cap)


@dataclass
class Report:
    check_name: str
    n: int
    total_cases: int = 0
    failures: list[tuple[str, object, object]] = field(default_factory=list)
    failure_count: int = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, case: str, expected, actual) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_LISTED_FAILURES:
            self.failures.append((case, expected, actual))

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.check_name} n={self.n} cases={self.total_cases}"
        if self.details:
            line += " " + " ".join(f"{k}={v}" for k, v in self.details.items())
        if not self.passed:
            line += f" failures={self.failure_count}"
            for case, exp, act in self.failures:
                line += f"\n    {case}: expected {exp!r}, got {act!r}"
        return line

    def to_record(self) -> str:
        return json.dumps({
            "check": self.check_name,
            "n": self.n,
            "cases": self.total_cases,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": [[c, repr(e), repr(a)] for c, e, a in self.failures],
            **self.details,
        }, sort_keys=False)


# --- independent oracles ---------------------------------------------------

def contains_321_bruteforce(word) -> bool:
    n = len(word)
    for i in range(n):
        for j in range(i + 1, n):
            if word[i] <= word[j]:
                continue
            for k in range(j + 1, n):
                if word[j] > word[k]:
                    return True
    return False


def count_cells(delta: DecoPolyomino) -> int:
    cells = set()
    for x, (lo, hi) in enumerate(delta.columns):
        y = lo
        while y < hi:
            cells.add((x, y))
            y += 1
    return len(cells)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _perms(n: int) -> Iterator[P.Permutation]:
    for t in itertools.permutations(range(1, n + 1)):
        yield P.Permutation._trusted(t)


# --- statistic identities --------------------------------------------------

Identity = Callable[[P.Permutation, DecoPolyomino], tuple[object, object]]


def _first_run_of_reverse(pi, d):
    run = P.run_profile(P.reverse(pi)).ascending_runs[0]
    return len(run), d.columns[-1].length


def _rtl_vs_level(pi, d):
    return len(P.run_profile(pi).rtl_minima_positions), d.level


def _last_run_vs_last_column(pi, d):
    return len(P.run_profile(pi).ascending_runs[-1]), d.columns[-1].length


def _area_inv_rtl(pi, d):
    rtl = len(P.run_profile(pi).rtl_minima_positions)
    return P.inversion_count(pi) + rtl, d.area


def _rtl_gaps_vs_rows(pi, d):
    m = P.run_profile(pi).rtl_minima_positions
    gaps = tuple(b - a for a, b in zip((0,) + m, m))
    return gaps, bottom_border(d).row_lengths


def _pasted_cells(pi, d):
    code = code_for(2, pi)
    return P.inversion_count(pi), sum(code)


def _cycles_vs_level(pi, d):
    return len(P.standard_cycle_form(pi).cycles), d.level


def _width_from_cycles(pi, d):
    return len(pi) + 1 - len(P.standard_cycle_form(pi).cycles), d.width


def _inv_area_level(pi, d):
    return P.inversion_count(pi), d.area - d.level


def _inv_area_width(pi, d):
    return P.inversion_count(pi), d.area + d.width - (len(pi) + 1)


def _lemma_first_column(pi, d):
    if not is_parallelogram(d):
        return None, None
    return len(P.run_profile(pi).ascending_runs[-1]), d.columns[0].length


def _area_carlitz(pi, d):
    return len(pi) + P.carlitz_inversions(pi), d.area


def _cycle_lengths_vs_rows(pi, d):
    return P.standard_cycle_form(pi).lengths, bottom_border(d).row_lengths


def _first_row_vs_first_entry(pi, d):
    return pi[0], statistics(d).first_row_length


IDENTITIES: dict[int, dict[str, Identity]] = {
    1: {
        "last column length = first ascending run of reverse": _first_run_of_reverse,
    },
    2: {
        "level = rtl minima": _rtl_vs_level,
        "last column length = last ascending run": _last_run_vs_last_column,
        "area = inv + rtl minima": _area_inv_rtl,
        "border rows = rtl minima gaps": _rtl_gaps_vs_rows,
        "pasted cells = inv": _pasted_cells,
    },
    3: {
        "cycles = level": _cycles_vs_level,
        "width = n + 1 - cycles": _width_from_cycles,
    },
    4: {
        "inv = area - level": _inv_area_level,
        "inv = area + width - (n + 1)": _inv_area_width,
        "parallelogram: first column = last ascending run": _lemma_first_column,
    },
    5: {
        "area = n + inv_c": _area_carlitz,
        "level = cycles": _cycles_vs_level,
        "border rows = cycle lengths": _cycle_lengths_vs_rows,
    },
    6: {
        "first row = pi_1": _first_row_vs_first_entry,
        "area - level = inv": _inv_area_level,
    },
}


# --- checks ----------------------------------------------------------------

def _check_id(k: int) -> None:
    if k not in BIJECTION_IDS:
        raise UnknownBijection(k)


def check_bijection(n: int, k: int, cap: int | None = None) -> Report:
    """Validity, injectivity and round trip of bijection ``k`` on S_n."""
    _check_id(k)
    _require(n, cap)
    report = Report(f"bijection-{k}", n)
    seen: dict[DecoPolyomino, P.Permutation] = {}
    for pi in _perms(n):
        report.total_cases += 1
        d = phi(k, pi)
        bad = validate(d)
        if not bad.valid:
            report.fail(str(pi), "valid", list(bad.names))
            continue
        if d in seen:
            report.fail(str(pi), "distinct image", f"same as {seen[d]}")
        seen[d] = pi
        back = invert(k, d)
        if back != pi:
            report.fail(str(pi), str(pi), str(back))
    report.details["distinct_images"] = len(seen)
    if len(seen) != math.factorial(n):
        report.fail("image count", math.factorial(n), len(seen))
    return report


def check_statistics(n: int, k: int, cap: int | None = None) -> Report:
    _check_id(k)
    _require(n, cap)
    identities = IDENTITIES[k]
    report = Report(f"statistics-{k}", n)
    report.details["identities"] = len(identities)
    for pi in _perms(n):
        report.total_cases += 1
        d = phi(k, pi)
        for name, fn in identities.items():
            expected, actual = fn(pi, d)
            if expected != actual:
                report.fail(f"{pi} [{name}]", expected, actual)
    return report


def check_theorems(n: int, cap: int | None = None) -> Report:
    """321-avoidance versus parallelogram images under maps 2 and 4."""
    _require(n, cap)
    report = Report("theorems", n)
    counts = {"avoiders": 0, "parallelogram_2": 0, "parallelogram_4": 0}
    for pi in _perms(n):
        report.total_cases += 1
        avoids = P.avoids_321(pi)
        counts["avoiders"] += avoids
        for k in (2, 4):
            para = is_parallelogram(phi(k, pi))
            counts[f"parallelogram_{k}"] += para
            if para != avoids:
                report.fail(f"{pi} [map {k}]", avoids, para)
    expected = catalan(n)
    for key, value in counts.items():
        if value != expected:
            report.fail(key, expected, value)
    report.details.update(counts)
    report.details["catalan"] = expected
    return report


def check_enumeration(n: int, cap: int | None = None) -> Report:
    """enumerate_codes yields n! valid, pairwise distinct polyominoes."""
    _require(n, cap)
    report = Report("enumeration", n)
    shapes = set()
    for code in enumerate_codes(n):
        report.total_cases += 1
        d = build_from_code(code)
        bad = validate(d)
        if not bad.valid:
            report.fail(str(code), "valid", list(bad.names))
        shapes.add(d.columns)
    report.details["distinct"] = len(shapes)
    if len(shapes) != math.factorial(n) or report.total_cases != math.factorial(n):
        report.fail("count", math.factorial(n), (report.total_cases, len(shapes)))
    return report


def check_structure(n: int, cap: int | None = None) -> Report:
    """Height, border and level identities on every member of D_n."""
    _require(n, cap)
    report = Report("structure", n)
    for code in enumerate_codes(n):
        report.total_cases += 1
        d = build_from_code(code)
        s = statistics(d)
        border = bottom_border(d)
        case = format_cols(d)
        pairs = [
            ("height", n, s.height),
            ("border cells", n, len(border.cells)),
            ("width + level - 1", n, s.width + s.last_column_level - 1),
            ("sum of border rows", n, sum(border.row_lengths)),
            ("border rows", s.last_column_level, len(border.row_lengths)),
        ]
        for name, expected, actual in pairs:
            if expected != actual:
                report.fail(f"{case} [{name}]", expected, actual)
    return report


def check_oracles(n: int, cap: int | None = None) -> Report:
    """Linear 321 test and area statistic against brute-force oracles."""
    _require(n, cap)
    report = Report("oracles", n)
    for pi in _perms(n):
        report.total_cases += 1
        fast, slow = P.avoids_321(pi), not contains_321_bruteforce(pi)
        if fast != slow:
            report.fail(f"{pi} [avoids_321]", slow, fast)
    for code in enumerate_codes(n):
        report.total_cases += 1
        d = build_from_code(code)
        if statistics(d).area != count_cells(d):
            report.fail(f"{format_cols(d)} [area]", count_cells(d), statistics(d).area)
    return report


def check_uniformity(n: int, samples: int, seed: int, k: int = 2) -> Report:
    """Chi-square test of sampled permutations against uniform on S_n."""
    _require(n, None, limit=6)
    report = Report("uniformity", n)
    bins = math.factorial(n)
    tally: dict[P.Permutation, int] = dict.fromkeys(_perms(n), 0)
    for code in random_codes(n, seed, samples):
        tally[permutation_for_code(k, code)] += 1
        report.total_cases += 1
    expected = samples / bins
    stat = sum((c - expected) ** 2 / expected for c in tally.values()) if samples else 0.0
    threshold = chi2.ppf(1 - SIGNIFICANCE, bins - 1) if bins > 1 else math.inf
    report.details.update(chi2=round(stat, 4), threshold=round(float(threshold), 4), seed=seed)
    if bins > 1 and not stat < threshold:
        report.fail("chi-square", f"< {threshold:.4f}", round(stat, 4))
    return report


def run_all(n: int, bijections=BIJECTION_IDS, theorems: bool = True,
            uniformity: bool = False, samples: int = 100_000, seed: int = 42,
            cap: int | None = None) -> list[Report]:
    reports = [check_enumeration(n, cap), check_structure(n, cap), check_oracles(n, cap)]
    for k in bijections:
        reports.append(check_bijection(n, k, cap))
        reports.append(check_statistics(n, k, cap))
    if theorems:
        reports.append(check_theorems(n, cap))
    if uniformity:
        reports.append(check_uniformity(min(n, 6), samples, seed))
    return reports
