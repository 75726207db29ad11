import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bfs_ball, multiperms
from ulamcodes.core import (
    CapExceeded,
    Multipermutation,
    UlamError,
    act,
    identity_multipermutation,
    omega_multipermutation,
    space_size,
)
from ulamcodes.spheres import (
    SphereReport,
    alternating_duplication_set,
    alternating_duplication_size,
    alternating_star_count,
    maximal_alternating_runs,
    psi,
    psi_tuple,
    sphere_enumerate,
    sphere_enumerate_size,
    sphere_size_identity,
    sphere_size_perm_closed,
    sphere_size_radius1,
    standard_duplication_set,
    standard_duplication_size,
    unique_translocations,
)

WORKED = Multipermutation((1, 1, 1, 2, 3, 2, 3, 2, 4, 4, 3, 4), 3)


@st.composite
def words(draw, max_n=10):
    n = draw(st.integers(2, max_n))
    r = draw(st.sampled_from([d for d in range(1, n + 1) if n % d == 0]))
    base = [s for s in range(1, n // r + 1) for _ in range(r)]
    return Multipermutation(tuple(draw(st.permutations(base))), r)


def test_identity_sphere_values():
    assert sphere_size_identity(5, 1, 1) == 17
    assert sphere_size_identity(8, 2, 0) == 1
    assert sphere_size_identity(6, 2, 4) == 90
    with pytest.raises(UlamError):
        sphere_size_identity(6, 2, 5)


@pytest.mark.parametrize("n,r", [(4, 1), (4, 2), (5, 1), (6, 2), (6, 3), (8, 4)])
def test_identity_sphere_matches_enumeration(n, r):
    e = identity_multipermutation(n, r)
    for t in range(n - r + 1):
        assert sphere_size_identity(n, r, t) == sphere_enumerate_size(e, t)


def test_identity_sphere_n6_r2_profile():
    # BFS, recursive LCS and the tableaux sum all give these; 11 = 1 + 5 * 2 at t = 1
    e = identity_multipermutation(6, 2)
    expected = [1, 11, 48, 85, 90]
    assert [sphere_enumerate_size(e, t) for t in range(5)] == expected
    assert [len(bfs_ball(e.symbols, t)) for t in range(5)] == expected


def test_identity_radius_one_closed_form():
    for n, r in [(6, 2), (12, 3), (20, 4), (30, 5)]:
        assert sphere_size_identity(n, r, 1) == 1 + (n - 1) * (n // r - 1)


def test_permutation_closed_forms():
    assert sphere_size_perm_closed(5, 2) == 78
    assert sphere_size_perm_closed(7, 1) == 37
    assert sphere_size_perm_closed(6, 3) == sphere_size_identity(6, 1, 3)
    for n in range(4, 14):
        assert sphere_size_perm_closed(n, 2) == sphere_size_identity(n, 1, 2)
    for n in range(6, 14):
        assert sphere_size_perm_closed(n, 3) == sphere_size_identity(n, 1, 3)
    with pytest.raises(UlamError):
        sphere_size_perm_closed(3, 2)
    with pytest.raises(UlamError):
        sphere_size_perm_closed(5, 3)


@pytest.mark.parametrize("n,t", [(5, 1), (5, 2), (7, 1), (7, 2), (7, 3)])
def test_closed_forms_against_bfs(n, t):
    assert len(bfs_ball(tuple(range(1, n + 1)), t)) == sphere_size_perm_closed(n, t)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_permutation_spheres_centre_invariant(n):
    sizes = {
        t: {sphere_enumerate_size(Multipermutation(w, 1), t) for w in multiperms(n, 1)}
        for t in range(n)
    }
    for t, found in sizes.items():
        assert len(found) == 1


def test_unique_translocations():
    assert len(unique_translocations(2)) == 2
    assert len(unique_translocations(5)) == 17
    for n in range(1, 9):
        assert len(unique_translocations(n)) == 1 + (n - 1) ** 2


@pytest.mark.parametrize("n", range(2, 8))
def test_unique_translocations_hit_distinct_permutations(n):
    rng = random.Random(n)
    base = list(range(1, n + 1))
    rng.shuffle(base)
    sigma = Multipermutation(tuple(base), 1)
    images = [act(sigma, phi) for phi in unique_translocations(n)]
    assert len(set(images)) == len(images)


def test_sd_worked_example():
    assert standard_duplication_size(WORKED) == 48
    assert len(standard_duplication_set(WORKED)) == 48


def test_sd_values():
    assert standard_duplication_size(identity_multipermutation(6, 2)) == 15
    assert standard_duplication_size(Multipermutation((3, 1, 2), 1)) == 0


@given(words(12))
def test_sd_counting_rule_matches_set(m):
    assert standard_duplication_size(m) == len(standard_duplication_set(m))


def test_psi_values():
    assert psi(12) == 25 and psi(6) == 4 and psi(5) == 2
    assert [psi(k) for k in range(1, 5)] == [0, 0, 0, 1]
    assert psi_tuple((8, 8, 7, 7)) == 30


def test_ad_values():
    assert alternating_duplication_size(WORKED) == 2
    m = (1, 2, 2, 4, 2, 4, 3, 1, 3)
    assert alternating_duplication_size(m) == 1
    assert alternating_duplication_set(m) == {(2, 6)}
    assert alternating_duplication_size(identity_multipermutation(9, 3)) == 0


def test_runs_may_share_a_position():
    assert maximal_alternating_runs((1, 2, 1, 2, 3, 2, 3)) == [(1, 4), (4, 7)]


@given(words(10))
def test_ad_matches_literal_definition(m):
    assert alternating_duplication_size(m) == len(alternating_duplication_set(m))


@given(st.lists(st.integers(1, 3), min_size=1, max_size=14))
def test_ad_star_equals_ad(word):
    s = tuple(word)
    direct = 0
    for a in range(len(s)):
        for b in range(a + 3, len(s), 2):
            sub = s[a:b + 1]
            if sub[0] != sub[1] and all(sub[k] == sub[k % 2] for k in range(len(sub))):
                direct += 1
    assert alternating_star_count(s) == direct == alternating_duplication_size(s)


def test_literal_ad_capped():
    with pytest.raises(CapExceeded):
        alternating_duplication_set(tuple(range(1, 12)))


def test_radius_one_worked_example():
    rep = sphere_size_radius1(WORKED)
    assert rep.components == {"T_n": 122, "SD": 48, "AD": 2}
    assert rep.size == 72 == len(sphere_enumerate(WORKED, 1))
    assert rep.notes and "71" in rep.notes[0]


@pytest.mark.parametrize("n,r", [(6, 2), (12, 3), (20, 4), (24, 2)])
def test_radius_one_identity_and_omega(n, r):
    assert sphere_size_radius1(identity_multipermutation(n, r)).size == 1 + (n - 1) * (n // r - 1)
    if n // r > 2:
        expected = 1 + (n - 1) ** 2 - (r - 1) * n
        assert sphere_size_radius1(omega_multipermutation(n, r)).size == expected


@given(words(14))
def test_radius_one_formula_matches_enumeration(m):
    assert sphere_size_radius1(m).size == sphere_enumerate_size(m, 1)


@given(words(10))
def test_reduced_translocations_biject_onto_sphere(m):
    n = m.n
    sd = standard_duplication_set(m)
    ad = alternating_duplication_set(m)
    kept = [phi for phi in unique_translocations(n)
            if phi.is_identity or (phi.source, phi.target) not in sd | ad]
    images = [act(m, phi).symbols for phi in kept]
    assert len(set(images)) == len(images)
    assert set(images) == {w.symbols for w in sphere_enumerate(m, 1)}


@pytest.mark.parametrize("n,r", [(6, 2), (6, 3), (8, 2)])
def test_identity_centre_smallest(n, r):
    floor = sphere_size_radius1(identity_multipermutation(n, r)).size
    assert all(sphere_size_radius1(Multipermutation(w, r)).size >= floor for w in multiperms(n, r))


@given(words(8), st.integers(0, 3))
def test_enumeration_matches_bfs(m, t):
    t = min(t, m.n - m.r)
    assert sphere_enumerate_size(m, t) == len(bfs_ball(m.symbols, t))


@pytest.mark.parametrize("n,r", [(6, 2), (8, 4), (6, 3)])
def test_sphere_monotone_and_fills_space(n, r):
    sizes = [sphere_size_identity(n, r, t) for t in range(n - r + 1)]
    assert sizes == sorted(sizes)
    assert sizes[-1] == space_size(n, r)


def test_enumeration_caps():
    m = identity_multipermutation(10, 2)
    with pytest.raises(CapExceeded):
        sphere_enumerate(m, 2)
    assert len(sphere_enumerate(m, 2, max_n=10)) == sphere_size_identity(10, 2, 2)
    assert sphere_enumerate(m, 0) == {m}
    with pytest.raises(CapExceeded):
        sphere_enumerate(identity_multipermutation(66, 1), 1)


def test_report_validation():
    with pytest.raises(UlamError):
        SphereReport("identity", 1, 0, "ballcalc")
    with pytest.raises(UlamError):
        SphereReport("identity", 1, 3, "guess")
    assert SphereReport("identity", 1, 3, "tableaux-sum").as_dict()["size"] == "3"
