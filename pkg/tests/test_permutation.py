import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from decoperm.errors import (
    DuplicateValue,
    EmptyInput,
    EntryTooLarge,
    ParseError,
    ValueOutOfRange,
)
from decoperm.permutation import (
    CycleDecomposition,
    Permutation,
    avoids_321,
    carlitz_inversions,
    complement,
    flatten_cycles,
    identity,
    inversion_count,
    make_permutation,
    parse_cycles,
    parse_permutation,
    permutation_from_riv,
    reduce,
    reverse,
    right_inversion_vector,
    run_profile,
    standard_cycle_form,
)


def perm(text):
    return parse_permutation(text)


def all_perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


permutations_st = st.integers(1, 9).flatmap(
    lambda n: st.permutations(range(1, n + 1))).map(Permutation)


# make_permutation

def test_make_permutation_paper_example():
    pi = make_permutation([3, 5, 1, 2, 6, 4])
    assert pi.n == 6
    assert pi(1) == 3 and pi(6) == 4


def test_make_permutation_singleton():
    assert make_permutation([1]).n == 1


@pytest.mark.parametrize("values, error", [
    ([2, 2, 1], DuplicateValue),
    ([1, 4, 2], ValueOutOfRange),
    ([0, 1], ValueOutOfRange),
    ([], EmptyInput),
])
def test_make_permutation_errors(values, error):
    with pytest.raises(error):
        make_permutation(values)


def test_duplicate_error_names_position():
    with pytest.raises(DuplicateValue) as info:
        make_permutation([2, 2, 1])
    assert info.value.value == 2 and info.value.position == 2


# reduce

def test_reduce_paper_example():
    assert reduce([5, 7, 2, 3, 9, 6]) == perm("351264")


def test_reduce_trivial():
    assert reduce([1, 2, 3, 4]) == identity(4)
    assert reduce([9, 4]) == (2, 1)
    with pytest.raises(DuplicateValue):
        reduce([3, 3])


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=12, unique=True))
def test_reduce_preserves_relative_order(seq):
    red = reduce(seq)
    assert sorted(red) == list(range(1, len(seq) + 1))
    for i, j in itertools.combinations(range(len(seq)), 2):
        assert (seq[i] < seq[j]) == (red[i] < red[j])


# reverse / complement

def test_reverse_complement_examples():
    assert reverse(perm("123")) == perm("321")
    assert complement(perm("123")) == perm("321")
    assert reverse(perm("351264")) == perm("462153")


@given(permutations_st)
def test_reverse_and_complement_are_involutions(pi):
    assert reverse(reverse(pi)) == pi
    assert complement(complement(pi)) == pi


# right inversion vector

@pytest.mark.parametrize("text, vector", [
    ("53728146", (4, 2, 4, 1, 3, 0, 0, 0)),
    ("273568914", (1, 5, 1, 2, 2, 2, 2, 0, 0)),
    ("614297358", (5, 0, 2, 0, 4, 2, 0, 0, 0)),
])
def test_right_inversion_vector_paper(text, vector):
    assert right_inversion_vector(perm(text)) == vector


def test_right_inversion_vector_identity():
    assert right_inversion_vector(identity(7)) == (0,) * 7


@pytest.mark.parametrize("vector, text", [
    ((4, 2, 4, 1, 3, 0, 0, 0), "53728146"),
    ((0, 0, 0, 0, 0), "12345"),
    ((0, 1, 0, 3, 0, 0, 2, 1, 0), "132745986"),
])
def test_permutation_from_riv(vector, text):
    assert permutation_from_riv(vector) == perm(text)


def test_permutation_from_riv_rejects_large_entry():
    with pytest.raises(EntryTooLarge) as info:
        permutation_from_riv((0, 2, 0))
    assert info.value.index == 2


def test_permutation_from_riv_agrees_with_search():
    # independent route: look the vector up among all of S_5
    table = {}
    for pi in all_perms(5):
        vec = tuple(sum(1 for y in pi[i + 1:] if y < pi[i]) for i in range(5))
        table[vec] = pi
    assert len(table) == 120
    for vec, pi in table.items():
        assert permutation_from_riv(vec) == pi


@pytest.mark.parametrize("n", range(1, 9))
def test_riv_round_trip_and_inversion_sum(n):
    for pi in map(Permutation._trusted, itertools.permutations(range(1, n + 1))):
        v = right_inversion_vector(pi)
        assert permutation_from_riv(v) == pi
        assert sum(v) == inversion_count(pi)


# inversions

def test_inversion_count_examples():
    assert inversion_count(perm("53728146")) == 14
    assert inversion_count(identity(6)) == 0
    assert inversion_count(reverse(identity(6))) == 15


# cycles

@pytest.mark.parametrize("text, cycles", [
    ("2357146", ((1, 2, 3, 5), (4, 7, 6))),
    ("372196458", ((1, 3, 2, 7, 4), (5, 9, 8), (6,))),
    ("1234", ((1,), (2,), (3,), (4,))),
])
def test_standard_cycle_form(text, cycles):
    cd = standard_cycle_form(perm(text))
    assert cd.cycles == cycles
    assert cd.to_permutation() == perm(text)


@given(permutations_st)
def test_cycle_form_invariants(pi):
    cd = standard_cycle_form(pi)
    heads = [c[0] for c in cd.cycles]
    assert all(c[0] == min(c) for c in cd.cycles)
    assert heads == sorted(heads)
    assert sorted(v for c in cd.cycles for v in c) == list(range(1, pi.n + 1))
    assert cd.to_permutation() == pi
    assert flatten_cycles(cd)[0] == 1


def test_flatten_cycles():
    assert flatten_cycles(standard_cycle_form(perm("2357146"))) == perm("1235476")
    assert flatten_cycles(standard_cycle_form(perm("372196458"))) == perm("132745986")
    assert flatten_cycles(standard_cycle_form(identity(5))) == identity(5)


def test_carlitz_inversions():
    assert carlitz_inversions(perm("2357146")) == 2
    assert carlitz_inversions(identity(6)) == 0
    # sum of (0,1,0,3,0,0,2,1,0)
    assert carlitz_inversions(perm("372196458")) == 7


def test_cycle_text_forms():
    cd = parse_cycles("(1 3 2 7 4)(5 9 8)(6)")
    assert str(cd) == "(1 3 2 7 4)(5 9 8)(6)"
    assert cd.to_permutation() == perm("372196458")
    assert parse_cycles("(13274)(598)(6)") == cd
    # non-standard input is normalised
    assert parse_cycles("(6)(8 5 9)(4 1 3 2 7)") == cd
    for bad in ["(1 2)(2 3)", "(1 3)", "1 2 3", "()"]:
        with pytest.raises(ParseError):
            parse_cycles(bad)


def test_cycle_decomposition_lengths():
    assert CycleDecomposition(((1, 3, 2, 7, 4), (5, 9, 8), (6,))).lengths == (5, 3, 1)


# runs and minima

def test_run_profile_paper_example():
    prof = run_profile(perm("2371546"))
    assert prof.descents == (3, 5)
    assert prof.ascents == (1, 2, 4, 6)
    assert prof.ascending_runs == ((2, 3, 7), (1, 5), (4, 6))
    assert prof.descending_runs == ((2,), (3,), (7, 1), (5, 4), (6,))
    assert prof.rtl_minima_values == (1, 4, 6)
    assert prof.rtl_minima_positions == (4, 6, 7)


def test_run_profile_trivial():
    prof = run_profile(identity(5))
    assert prof.descents == ()
    assert len(prof.ascending_runs) == 1
    assert len(prof.descending_runs) == 5
    assert len(prof.rtl_minima_positions) == 5
    prof = run_profile(perm("321"))
    assert prof.descents == (1, 2)
    assert prof.rtl_minima_values == (1,)


@given(permutations_st)
def test_run_profile_invariants(pi):
    prof = run_profile(pi)
    assert len(prof.ascending_runs) == len(prof.descents) + 1
    assert len(prof.descending_runs) == len(prof.ascents) + 1
    assert tuple(v for r in prof.ascending_runs for v in r) == tuple(pi)
    assert tuple(v for r in prof.descending_runs for v in r) == tuple(pi)
    assert list(prof.rtl_minima_values) == sorted(prof.rtl_minima_values)
    assert prof.rtl_minima_positions[-1] == pi.n
    for p in prof.rtl_minima_positions:
        assert all(pi[p - 1] < y for y in pi[p:])


# 321 avoidance

def _contains_321(word):
    return any(word[i] > word[j] > word[k]
               for i, j, k in itertools.combinations(range(len(word)), 3))


def test_avoids_321_examples():
    assert avoids_321(perm("351264"))
    assert not avoids_321(perm("321"))


@pytest.mark.parametrize("n", range(1, 8))
def test_avoids_321_matches_cubic_oracle(n):
    for pi in itertools.permutations(range(1, n + 1)):
        assert avoids_321(pi) == (not _contains_321(pi)), pi


@pytest.mark.parametrize("n", range(1, 9))
def test_avoider_count_is_catalan(n):
    count = sum(avoids_321(p) for p in itertools.permutations(range(1, n + 1)))
    assert count == math.comb(2 * n, n) // (n + 1)


def test_avoider_count_s6():
    assert sum(avoids_321(p) for p in itertools.permutations(range(1, 7))) == 132


# text forms

def test_parse_permutation_forms():
    assert parse_permutation("6 1 4 2 9 7 3 5 8") == parse_permutation("614297358")
    assert str(parse_permutation("614297358")) == "6 1 4 2 9 7 3 5 8"
    assert parse_permutation("10 9 8 7 6 5 4 3 2 1") == reverse(identity(10))
    for bad in ["", "1 1", "12a", "1234567891", "0"]:
        with pytest.raises(ParseError):
            parse_permutation(bad)
