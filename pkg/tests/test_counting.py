import hypothesis.strategies as st
from hypothesis import given

from polyfun import CountingPoly, formal_derivative

polys = st.lists(
    st.tuples(st.integers(min_value=0, max_value=6),
              st.integers(min_value=0, max_value=5)),
    max_size=6).map(CountingPoly)


@given(polys, polys, st.integers(min_value=0, max_value=5))
def test_add_evaluates_pointwise(a, b, n):
    assert (a + b)(n) == a(n) + b(n)


@given(polys, polys, st.integers(min_value=0, max_value=5))
def test_mul_evaluates_pointwise(a, b, n):
    assert (a * b)(n) == a(n) * b(n)


@given(polys, polys, st.integers(min_value=0, max_value=4))
def test_substitution_evaluates(a, b, n):
    assert a.substitute(b)(n) == a(b(n))


@given(polys)
def test_derivative_of_sum(a):
    assert formal_derivative(a + a) == formal_derivative(a) + formal_derivative(a)


@given(polys, polys)
def test_leibniz(a, b):
    lhs = formal_derivative(a * b)
    rhs = formal_derivative(a) * b + a * formal_derivative(b)
    assert lhs == rhs


@given(polys)
def test_normalization_drops_zeros(a):
    assert all(c > 0 for _, c in a.coeffs)


def test_power_rule():
    p = CountingPoly([(2, 1), (1, 1), (0, 1)])
    assert formal_derivative(p) == CountingPoly([(1, 2), (0, 1)])
    assert str(p) == "X^2 + X + 1"


def test_pairs_ascending():
    p = CountingPoly([(1, 2), (0, 1)])
    assert p.pairs() == [[0, 1], [1, 2]]
