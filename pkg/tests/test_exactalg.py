import pytest
from hypothesis import given
from hypothesis import strategies as st

from ksl.exactalg import (
    IntPoly,
    LaurentPoly,
    NonExactDivision,
    cyclotomic,
    ip_eval,
    ip_exact_div,
    lp_is_symmetric,
    lp_second_derivative_at_one,
)

n = IntPoly.var()
t = LaurentPoly.monomial(1)
ti = LaurentPoly.monomial(-1)

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6).map(LaurentPoly)
intpoly = st.lists(st.integers(-9, 9), max_size=6).map(IntPoly)


def test_second_derivative_examples():
    assert lp_second_derivative_at_one(LaurentPoly({0: 1})) == 0
    assert lp_second_derivative_at_one(t - 1 + ti) == 2
    t25 = t**2 - t + 1 - ti + ti**2
    assert lp_second_derivative_at_one(t25) == 6


def test_symmetry_examples():
    assert lp_is_symmetric(LaurentPoly({0: 1}))
    assert lp_is_symmetric(t - 1 + ti)
    assert not lp_is_symmetric(t**2 + 1)


def test_exact_div_examples():
    assert ip_exact_div(n * n + 2 * n + 1, n + 1) == n + 1
    assert ip_exact_div(n**3 + 3 * n * n + n - 2, n + 2) == n * n + n - 1
    with pytest.raises(NonExactDivision):
        ip_exact_div(n * n + 1, n)


def test_eval_examples():
    assert ip_eval(n + 1, 2) == 3
    f = n**3 + 3 * n * n + n - 1
    assert ip_eval(f, 2) == 21
    assert ip_eval(f, 1) == 4


def test_rendering():
    assert str(n**3 + 3 * n * n + n - 1) == "n^3 + 3n^2 + n - 1"
    assert str(t - 1 + ti) == "t - 1 + t^-1"
    assert str(IntPoly(())) == "0"


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == LaurentPoly()


@given(intpoly, intpoly, intpoly)
def test_intpoly_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) - g == f


@given(intpoly, intpoly.filter(lambda g: not g.is_zero() and abs(g.leading) == 1))
def test_exact_div_inverts_multiplication(f, g):
    assert (f * g).exact_div(g) == f


@given(intpoly, intpoly, st.integers(-20, 20))
def test_eval_is_a_ring_map(f, g, x):
    assert ip_eval(f * g, x) == ip_eval(f, x) * ip_eval(g, x)
    assert ip_eval(f + g, x) == ip_eval(f, x) + ip_eval(g, x)


@given(laurent, laurent)
def test_second_derivative_product_rule(f, g):
    # (fg)'' = f''g + 2f'g' + fg'' at t = 1
    lhs = (f * g).second_derivative_at_one()
    rhs = (
        f.second_derivative_at_one() * g.at_one()
        + 2 * f.derivative_at_one() * g.derivative_at_one()
        + f.at_one() * g.second_derivative_at_one()
    )
    assert lhs == rhs


@given(laurent)
def test_symmetrize_is_symmetric(f):
    assert lp_is_symmetric(f + f.inverted())


@pytest.mark.parametrize("N", range(1, 31))
def test_cyclotomic_product_is_x_n_minus_1(N):
    prod = IntPoly.const(1)
    for d in range(1, N + 1):
        if N % d == 0:
            prod = prod * cyclotomic(d)
    assert prod == IntPoly([-1] + [0] * (N - 1) + [1])
