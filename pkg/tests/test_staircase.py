import itertools
from math import gcd

import pytest

from ksl.exactalg import LaurentPoly
from ksl.staircase import (
    Staircase,
    dd_collision_search,
    enumerate_staircases,
    extremal_bound_check,
    from_alexander,
    hf_odd_dim_large,
    hfk_bigraded,
    hfk_postcondition_failures,
    is_lspace_slope,
    surgery_hf_dim,
    t2_staircase,
    to_alexander,
    torus_staircase,
    validate,
)
from ksl.staircase import delta_dd_half as st_dd
from ksl.torusknot import TorusKnot, alexander

t = LaurentPoly.monomial(1)
ti = LaurentPoly.monomial(-1)
S = Staircase.of


def brute_force(g):
    """Every decreasing list from g to 2-g whose polynomial is symmetric, with a_i <= g - 2i."""
    if g == 1:
        return [(1,)]
    out = []
    for mid in itertools.combinations(range(g - 1, 2 - g, -1), g - 2):
        exps = (g, *mid, 2 - g)
        if any(a > g - 2 * i for i, a in enumerate(exps)):
            continue
        body = LaurentPoly({a: 1 for a in exps})
        f = (1 - ti) * body + LaurentPoly.monomial(-g)
        if f.is_symmetric():
            out.append(exps)
    return sorted(out, reverse=True)


def test_validate_examples():
    assert validate(S([1]))
    assert validate(S([3, 1, -1]))
    assert not validate(S([3, 2, -1]))


def test_enumerate_examples():
    assert enumerate_staircases(1) == [S([1])]
    assert enumerate_staircases(2) == [S([2, 0])]
    assert enumerate_staircases(3) == [S([3, 1, -1]), S([3, 0, -1])]
    with pytest.raises(ValueError):
        enumerate_staircases(0)


@pytest.mark.parametrize("g", range(1, 9))
def test_enumerate_against_brute_force(g):
    got = enumerate_staircases(g)
    assert [s.exps for s in got] == brute_force(g)
    assert len(got) <= max(1, 2 ** (g - 2))


def test_to_alexander_examples():
    assert to_alexander(S([1])) == t - 1 + ti
    assert to_alexander(S([3, 0, -1])) == t**3 - t**2 + 1 - ti**2 + ti**3
    assert to_alexander(S([3, 0, -1])) == alexander(TorusKnot(3, 4))


@pytest.mark.parametrize("g", range(1, 16))
def test_t2_staircase_is_t2_knot(g):
    s = t2_staircase(g)
    assert validate(s)
    assert to_alexander(s) == alexander(TorusKnot(2, 2 * g + 1))
    assert torus_staircase(TorusKnot(2, 2 * g + 1)) == s


@pytest.mark.parametrize("A,B", [(a, b) for a in range(2, 10) for b in range(a + 1, 14) if gcd(a, b) == 1])
def test_torus_staircase_matches_alexander(A, B):
    T = TorusKnot(A, B)
    s = torus_staircase(T)
    assert validate(s)
    assert to_alexander(s) == alexander(T)
    assert from_alexander(alexander(T)) == s


def test_dd_examples():
    assert st_dd(S([1])) == 1
    assert st_dd(S([2, 0])) == 3
    assert st_dd(S([3, 0, -1])) == 5


@pytest.mark.parametrize("g", range(1, 13))
def test_dd_dual_route(g):
    for s in enumerate_staircases(g):
        assert 2 * st_dd(s) == to_alexander(s).second_derivative_at_one()


def test_extremal_examples():
    assert extremal_bound_check(1) == (1, S([1]))
    assert extremal_bound_check(2) == (3, S([2, 0]))
    assert extremal_bound_check(5) == (15, S([5, 3, 1, -1, -3]))


def test_collision_search():
    assert dd_collision_search(1) == []
    assert dd_collision_search(5) == []
    hits = dd_collision_search(7)
    assert hits and all(st_dd(a) == st_dd(b) and a != b and g == a.g == b.g for g, a, b in hits)


def test_hfk_examples():
    assert hfk_bigraded(S([1])) == [(1, 0), (0, -1), (-1, -2)]
    assert hfk_bigraded(S([2, 0])) == [(2, 0), (1, -1), (0, -2), (-1, -3), (-2, -4)]


def test_hfk_non_thin():
    gens = hfk_bigraded(torus_staircase(TorusKnot(3, 4)))
    assert gens == [(3, 0), (2, -1), (0, -2), (-2, -5), (-3, -6)]


@pytest.mark.parametrize("g", range(1, 9))
def test_hfk_postconditions(g):
    for s in enumerate_staircases(g):
        assert hfk_postcondition_failures(s) == []


def test_surgery_dim_examples():
    assert surgery_hf_dim(S([1]), 1) == 1
    for g in range(1, 6):
        assert surgery_hf_dim(t2_staircase(g), 2 * g - 1) == 2 * g - 1
    assert surgery_hf_dim(S([2, 0]), 1, 2) == 11
    with pytest.raises(ValueError):
        surgery_hf_dim(S([1]), 0)
    with pytest.raises(ValueError):
        surgery_hf_dim(S([1]), 2, 4)


def test_lspace_slope_examples():
    assert is_lspace_slope(S([1]), 1)
    assert not is_lspace_slope(S([3, 1, -1]), 4)
    assert is_lspace_slope(S([2, 0]), 7, 2)


def test_odd_dim_examples():
    assert hf_odd_dim_large(S([1]), 7) == 0
    assert hf_odd_dim_large(t2_staircase(4), 7) == 0
    assert hf_odd_dim_large(S([2, 0]), 100) == 0
    with pytest.raises(ValueError):
        hf_odd_dim_large(t2_staircase(4), 6)
