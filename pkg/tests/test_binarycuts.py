import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ulamcodes.binarycuts import (
    CutProfile,
    appendixD_identities,
    check_cminusone,
    check_continuous,
    check_cplusone,
    check_floorrootr,
    cut_lengths,
    duplication_total,
    lower_envelope_L,
    max_sphere_binary,
    min_ad_for_cuts,
    optimal_cut_count,
    psi_qc,
    qc_partition,
    realize_cuts,
    sd_size_binary,
    upper_envelope_U,
)
from ulamcodes.core import Multipermutation, UlamError
from ulamcodes.spheres import (
    alternating_duplication_size,
    psi_tuple,
    sphere_enumerate_size,
    sphere_size_radius1,
    standard_duplication_size,
)


def binary_words(n):
    r = n // 2
    for ones in itertools.combinations(range(n), r):
        w = [2] * n
        for k in ones:
            w[k] = 1
        yield Multipermutation(tuple(w), r)


def test_qc_values():
    assert qc_partition(30, 4).lengths == (8, 8, 7, 7)
    assert qc_partition(34, 3).lengths == (12, 11, 11)
    assert qc_partition(20, 4).lengths == (6, 5, 5, 4)
    with pytest.raises(UlamError):
        qc_partition(10, 10)
    with pytest.raises(UlamError):
        qc_partition(9, 2)


@pytest.mark.parametrize("n", range(2, 41, 2))
def test_qc_shape(n):
    for c in range(1, n):
        q = qc_partition(n, c).lengths
        assert sum(q) == n and len(q) == c
        assert list(q) == sorted(q, reverse=True)
        assert any(x % 2 == 0 for x in q)
        assert max(q) - min(q) <= 2
        assert psi_qc(n, c) == psi_tuple(q) == min_ad_for_cuts(n, c)


def test_realize_values():
    assert realize_cuts(CutProfile(6, (6,))).symbols == (1, 2, 1, 2, 1, 2)
    assert realize_cuts(CutProfile(12, (6, 6))).symbols == (1, 2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1)
    with pytest.raises(UlamError):
        realize_cuts(CutProfile(6, (3, 3)))
    with pytest.raises(UlamError):
        CutProfile(6, (3, 2))


@st.composite
def profiles(draw):
    n = 2 * draw(st.integers(1, 12))
    cuts = sorted(draw(st.sets(st.integers(1, n - 1), max_size=n - 1)))
    bounds = [0] + cuts + [n]
    lengths = tuple(b - a for a, b in zip(bounds, bounds[1:]))
    return CutProfile(n, lengths)


@given(profiles())
def test_realize_round_trip(profile):
    if not profile.realizable:
        with pytest.raises(UlamError):
            realize_cuts(profile)
        return
    m = realize_cuts(profile)
    assert sorted(cut_lengths(m)) == sorted(profile.lengths)
    assert m.symbols.count(1) == m.symbols.count(2)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_all_odd_profiles_never_occur(n):
    for m in binary_words(n):
        assert any(x % 2 == 0 for x in cut_lengths(m))


def test_sd_binary_values():
    assert sd_size_binary(30, 4) == 462
    assert sd_size_binary(34, 3) == 576
    assert sd_size_binary(10, 1) == 9 * 4 + 4


@pytest.mark.parametrize("n", [4, 8, 12])
def test_sd_binary_matches_general_rule(n):
    for m in binary_words(n):
        assert standard_duplication_size(m) == sd_size_binary(n, len(cut_lengths(m)))


def test_min_ad_values():
    assert min_ad_for_cuts(30, 4) == 30
    assert min_ad_for_cuts(30, 5) == 20
    assert min_ad_for_cuts(12, 1) == 25


@pytest.mark.parametrize("n", [8, 12, 16])
def test_min_ad_is_minimal_over_words(n):
    best = {}
    for m in binary_words(n):
        c = len(cut_lengths(m))
        ad = alternating_duplication_size(m)
        best[c] = min(best.get(c, ad), ad)
    for c, ad in best.items():
        assert ad == min_ad_for_cuts(n, c)


def test_example_totals():
    assert duplication_total(34, 3) == 641 and duplication_total(34, 4) == 634
    assert duplication_total(30, 4) == 492 and duplication_total(30, 5) == 496
    for n, c, size in [(34, 3, 449), (34, 4, 456), (30, 4, 350), (30, 5, 346)]:
        m = realize_cuts(qc_partition(n, c))
        assert sphere_size_radius1(m).size == size == sphere_enumerate_size(m, 1)


def test_optimal_cut_count_values():
    assert optimal_cut_count(11) == (3, False)
    for r in (13, 14, 15, 16):
        assert optimal_cut_count(r).c == 4
    assert optimal_cut_count(12) == (3, True)
    assert optimal_cut_count(1) == (1, False)


def test_ties_up_to_2000():
    ties = [r for r in range(1, 2001) if optimal_cut_count(r).tie]
    boundary = [k * k + k for k in range(1, 45) if k * k + k <= 2000]
    # the boundary values r = k^2 + k always tie; r = 5 is the single extra tie
    assert ties == sorted(boundary + [5])
    for r in ties:
        c = optimal_cut_count(r).c
        assert duplication_total(2 * r, c) == duplication_total(2 * r, c + 1)


def test_max_sphere_table_values():
    assert max_sphere_binary(10).size == 148
    assert max_sphere_binary(100).size == 18101
    assert max_sphere_binary(1000).size == 1937753
    assert max_sphere_binary(1).size == 2


@pytest.mark.parametrize("r", range(1, 41))
def test_max_sphere_is_best_over_all_cut_counts(r):
    n = 2 * r
    tn = 1 + (n - 1) ** 2
    assert max_sphere_binary(r).size == max(tn - duplication_total(n, c) for c in range(1, n))


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12, 14, 16])
def test_max_sphere_exhaustive(n):
    best = max(sphere_enumerate_size(m, 1) for m in binary_words(n))
    assert best == max_sphere_binary(n // 2).size
    assert sum(1 for _ in binary_words(n)) == comb(n, n // 2)


def test_envelope_values():
    assert round(upper_envelope_U(10)) == 168
    assert round(upper_envelope_U(100)) == 18423
    assert round(upper_envelope_U(1000)) == 1941489
    assert upper_envelope_U(1) == 2
    with pytest.raises(UlamError):
        lower_envelope_L(1)


def test_envelope_sandwich():
    for r in range(2, 2001):
        size = max_sphere_binary(r).size
        assert lower_envelope_L(r) < size < upper_envelope_U(r), r


def test_ratio_trend():
    ratios = [max_sphere_binary(r).size / upper_envelope_U(r) for r in (10, 100, 1000)]
    assert ratios == sorted(ratios) and ratios[-1] < 1


def test_floor_identities():
    rec = appendixD_identities(8)
    assert rec.floorcalc and rec.floordiff and rec.floordiff2 is None
    eq = appendixD_identities(7, 5)
    assert eq.floordiff2 and eq.floordiff2_equality
    strict = appendixD_identities(9, 3)
    assert strict.floordiff2 and strict.floordiff2_equality
    with pytest.raises(UlamError):
        appendixD_identities(5, 4)


@given(st.integers(-50, 200), st.integers(1, 100), st.integers(2, 60))
def test_floor_identities_hold(a, b, gap):
    assert appendixD_identities(a).floorcalc
    assert appendixD_identities(a).floordiff
    rec = appendixD_identities(b + gap, b)
    assert rec.floordiff2 and rec.floordiff2_equality


def test_cut_lemma_helpers_reject_bad_hypotheses():
    with pytest.raises(UlamError):
        check_cplusone(10, 2)
    with pytest.raises(UlamError):
        check_cminusone(10, 4)
    assert check_cplusone(10, 4) and check_cminusone(10, 3)
    assert check_floorrootr(12) and check_continuous(12, 5)
    assert check_continuous(12, 5) == (psi_qc(24, 5) >= 5 * ((Fraction(12, 5) - 1) ** 2 - Fraction(1, 4)))
