from fractions import Fraction

import pytest

from sbk.expr import ExprError, evaluate
from sbk.sampling import grid, make_rng, random_rational


def test_exact_evaluation():
    env = {"K": Fraction(3), "L": Fraction(-1, 2)}
    assert evaluate("(-2*K*L)/K", env) == 1
    assert evaluate("1/3 + K**2", env) == Fraction(28, 3)
    assert evaluate(5, env) == 5


@pytest.mark.parametrize("bad", ["__import__('os')", "K.real", "1.5", "K**L", "f(K)", "K["])
def test_rejected_syntax(bad):
    with pytest.raises(ExprError):
        evaluate(bad, {"K": Fraction(1), "L": Fraction(2)})


def test_unbound_name():
    with pytest.raises(ExprError):
        evaluate("K + Q", {"K": Fraction(1)})


def test_division_by_zero_propagates():
    with pytest.raises(ZeroDivisionError):
        evaluate("1/(K-K)", {"K": Fraction(1)})


def test_random_rational_range():
    rng = make_rng(0)
    for _ in range(500):
        q = random_rational(rng)
        assert q != 0
        assert 1 <= abs(q.numerator) <= 97 * 97 and q.denominator <= 97


def test_seeding(monkeypatch):
    a = [random_rational(make_rng(3)) for _ in range(3)]
    b = [random_rational(make_rng(3)) for _ in range(3)]
    assert a == b
    monkeypatch.setenv("SBK_SEED", "3")
    assert random_rational(make_rng()) == random_rational(make_rng(3))


def test_grid():
    pts = list(grid([("x", "continuous"), ("a", "binary")]))
    assert len(pts) == 6
    assert {"x": 2, "a": 1} in pts
