import math
import sys

import pytest

from bistable import ZeroOneMatrix, to_graph
from bistable.errors import NotSquare, PermanentOverflow, TooLarge, Unbalanced
from bistable.generators import fixture, nk2
from bistable.oracle import enumerate_perfect_matchings, permanent_laplace
from bistable.permanent import all_minor_permanents_positive, count_perfect_matchings, permanent

# the package re-exports the function under the module's name
permanent_module = sys.modules["bistable.permanent"]

X5 = fixture("fig5_x")
C6 = ZeroOneMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])


def test_permanent_examples():
    for n in range(1, 6):
        assert permanent(ZeroOneMatrix.identity(n)) == 1
    assert permanent(ZeroOneMatrix.ones(3)) == 6
    assert permanent(X5) == 2 == permanent_laplace(X5)
    assert permanent(ZeroOneMatrix.zeros(4)) == 0


def test_permanent_of_all_ones_is_factorial():
    for n in range(1, 10):
        assert permanent(ZeroOneMatrix.ones(n)) == math.factorial(n)


def test_permanent_guards():
    with pytest.raises(NotSquare):
        permanent(ZeroOneMatrix.ones(2, 3))
    with pytest.raises(TooLarge):
        permanent(ZeroOneMatrix.identity(21))
    # 20! is the largest all-ones permanent below 2^63
    assert permanent(ZeroOneMatrix.ones(20)) == math.factorial(20)


def test_overflow_is_reported(monkeypatch):
    monkeypatch.setattr(permanent_module, "INT64_MAX", 100)
    assert permanent(ZeroOneMatrix.ones(4)) == 24
    with pytest.raises(PermanentOverflow):
        permanent(ZeroOneMatrix.ones(5))


def test_minor_positivity():
    assert all_minor_permanents_positive(C6)
    assert not all_minor_permanents_positive(ZeroOneMatrix.identity(3))
    assert not all_minor_permanents_positive(X5)
    with pytest.raises(ValueError):
        all_minor_permanents_positive(ZeroOneMatrix.ones(1))
    with pytest.raises(NotSquare):
        all_minor_permanents_positive(ZeroOneMatrix.ones(2, 3))


def test_count_perfect_matchings():
    assert count_perfect_matchings(nk2(4)) == 1
    assert count_perfect_matchings(to_graph(ZeroOneMatrix.ones(3))) == 6
    g = to_graph(X5)
    assert count_perfect_matchings(g) == 2 == len(enumerate_perfect_matchings(g))
    with pytest.raises(Unbalanced):
        count_perfect_matchings(fixture("fig1_g2"))
