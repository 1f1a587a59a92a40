import pytest
from hypothesis import settings

from polyfun import DiagMap, FinPoset, Polynomial, bang, from_sizes, terminal

settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def pt():
    return FinPoset.point()


@pytest.fixture(scope="session")
def sp():
    return FinPoset.sierpinski()


@pytest.fixture(scope="session")
def model_a(pt):
    """One-point model: p has fibre sizes (2, 1, 0) over (b0, b1, b2)."""
    e = from_sizes(pt, {"*": 3}, {})
    b = from_sizes(pt, {"*": 3}, {})
    p = DiagMap(e, b, {"*": (0, 0, 1)})
    return p


@pytest.fixture(scope="session")
def poly_a(model_a):
    one = terminal(model_a.dom.poset)
    return Polynomial(bang(model_a.dom, one), model_a, bang(model_a.cod, one))


@pytest.fixture(scope="session")
def sierpinski_w(sp):
    """The dense mono (∅→1) ↪ (1→1)."""
    x = from_sizes(sp, {"0": 1, "1": 1}, {("0", "1"): (0,)})
    a = from_sizes(sp, {"0": 0, "1": 1}, {("0", "1"): ()})
    return DiagMap(a, x, {"0": (), "1": (0,)})


@pytest.fixture(scope="session")
def poly_s(sp):
    """Sierpinski polynomial whose fibre diagonal is not decidable."""
    m = from_sizes(sp, {"0": 2, "1": 1}, {("0", "1"): (0, 0)})
    p = bang(m)
    one = terminal(sp)
    return Polynomial(bang(m, one), p, bang(p.cod, one))
