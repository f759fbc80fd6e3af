import random
from fractions import Fraction

import pytest

from sbk.catalog import abelian
from sbk.superkernel import (AlgebraError, SuperAlgebra, bracket, element, format_rational,
                             jacobi_residual, parity_of, perturbed, rational,
                             verify_lie_superalgebra, z_sign)


def test_z_sign_examples(osp22):
    i = osp22.index
    assert z_sign(osp22, i("H"), i("X+")) == 1
    assert z_sign(osp22, i("V+"), i("W-")) == -1
    assert z_sign(osp22, i("H"), i("V+")) == 1


def test_z_sign_symmetric_and_unit(osp22):
    n = osp22.dim
    for a in range(n):
        for b in range(n):
            assert z_sign(osp22, a, b) in (1, -1)
            assert z_sign(osp22, a, b) * z_sign(osp22, b, a) == 1


def test_z_sign_out_of_range(osp22):
    with pytest.raises(AlgebraError):
        z_sign(osp22, 0, 8)


def test_printed_brackets(osp22):
    b = osp22.basis
    assert bracket(osp22, b("H"), b("X+")) == b("X+")
    assert bracket(osp22, b("V+"), b("W-")) == element(osp22, {"H": 1, "B": -1})
    assert bracket(osp22, b("H"), b("B")) == element(osp22, {})
    assert bracket(osp22, b("W+"), b("V-")) == element(osp22, {"H": 1, "B": 1})


def test_bracket_dimension_mismatch(osp22):
    with pytest.raises(AlgebraError):
        bracket(osp22, (1, 0), osp22.basis("H"))


def test_element_level_antisymmetry(osp22):
    for a, ga in enumerate(osp22.generator_names):
        for b, gb in enumerate(osp22.generator_names):
            x, y = osp22.basis(ga), osp22.basis(gb)
            lhs = bracket(osp22, x, y)
            rhs = tuple(-z_sign(osp22, a, b) * v for v in bracket(osp22, y, x))
            assert lhs == rhs


def test_builtin_algebras_pass(osp22, osp12):
    for alg in (osp22, osp12):
        report = verify_lie_superalgebra(alg)
        assert report.ok, report.summary()
        for i in range(alg.dim):
            for j in range(alg.dim):
                for k in range(alg.dim):
                    assert not any(jacobi_residual(alg, i, j, k))


def test_abelian_passes():
    assert verify_lie_superalgebra(abelian(2)).ok


def test_flipped_sign_breaks_jacobi(osp22):
    i = osp22.index
    bad = perturbed(osp22, [(i("H"), i("X+"), i("X+"), -1), (i("X+"), i("H"), i("X+"), 1)])
    report = verify_lie_superalgebra(bad)
    assert report.passed("antisymmetry")
    assert not report.passed("jacobi")
    assert any(t[:3] == (i("H"), i("X+"), i("X-")) for t in report.violations["jacobi"])


def test_random_perturbations_fail(osp22):
    rnd = random.Random(5)
    n = osp22.dim
    failures = 0
    for _ in range(20):
        i, j = rnd.sample(range(n), 2)
        k = rnd.randrange(n)
        old = osp22.c[i][j][k]
        new = old + rnd.choice([1, -1, Fraction(1, 2), 3])
        sign = -osp22.z(i, j)
        alg = perturbed(osp22, [(i, j, k, new), (j, i, k, sign * new)])
        failures += not verify_lie_superalgebra(alg).ok
    assert failures == 20


def test_parity_violation_reported(osp22):
    i = osp22.index
    alg = perturbed(osp22, [(i("H"), i("X+"), i("V+"), 1), (i("X+"), i("H"), i("V+"), -1)])
    assert (i("H"), i("X+"), i("V+")) in verify_lie_superalgebra(alg).violations["parity"]


def test_rational_coercion():
    assert rational("3/6") == Fraction(1, 2)
    assert rational(" -4 ") == -4
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(Fraction(6, 3)) == "2"
    for bad in (0.5, True, "x", "1/0"):
        with pytest.raises(AlgebraError):
            rational(bad)


def test_parity_of(osp22):
    assert parity_of(osp22, osp22.basis("V+")) == 1
    assert parity_of(osp22, element(osp22, {"H": 1, "V+": 1})) is None


def test_constructor_validation():
    with pytest.raises(AlgebraError):
        SuperAlgebra("bad", ("a", "a"), (0, 0), ((( 0,) * 2,) * 2,) * 2)
    with pytest.raises(AlgebraError):
        SuperAlgebra("bad", ("a",), (2,), (((0,),),))
    with pytest.raises(AlgebraError):
        SuperAlgebra.from_brackets("bad", [("a", 0)], {("a", "b"): {"a": 1}})
