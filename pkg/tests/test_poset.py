import pytest

from polyfun import FinPoset, ShapeError


def test_point_accepted():
    p = FinPoset.point()
    assert p.elements == ("*",)
    assert p.le("*", "*")


def test_sierpinski():
    s = FinPoset.sierpinski()
    assert s.lt("0", "1")
    assert not s.lt("1", "0")
    assert s.covers() == (("0", "1"),)
    assert s.maximal() == ("1",)


def test_chain_topo():
    c = FinPoset.chain(3)
    assert c.topo == ("0", "1", "2")
    assert c.strict_pairs() == (("0", "1"), ("0", "2"), ("1", "2"))
    assert c.up("1") == ("1", "2")


def test_rejects_missing_reflexive():
    with pytest.raises(ShapeError):
        FinPoset(("a",), set())


def test_rejects_nontransitive():
    with pytest.raises(ShapeError):
        FinPoset(("a", "b", "c"),
                 {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")})


def test_rejects_cycle():
    with pytest.raises(ShapeError):
        FinPoset(("a", "b"), {("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")})
