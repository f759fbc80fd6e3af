import logging
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sbk.bialgebra import (Cobracket, RMatrix, block_join, block_split, coboundary_delta,
                           cocycle_residual, even_project, hat_antisymmetrize, random_rmatrix,
                           rmatrix_from_entries, verify_cobracket, verify_cocycle, wedge)
from sbk.catalog import r_template
from sbk.superkernel import AlgebraError, bracket, zeros


def ad_on_tensor(alg, i, r):
    """Graded adjoint action of generator i on sum r^ab g_a (x) g_b, from brackets only."""
    n = alg.dim
    out = zeros(n, n)
    gi = alg.basis(alg.generator_names[i])
    for a in range(n):
        for b in range(n):
            v = r[a][b]
            if not v:
                continue
            left = bracket(alg, gi, alg.basis(alg.generator_names[a]))
            right = bracket(alg, gi, alg.basis(alg.generator_names[b]))
            for j in range(n):
                out[j][b] += v * left[j]
                out[a][j] += alg.z(i, a) * v * right[j]
    return out


def oracle_delta(alg, r):
    """delta(x) = [r, x (x) 1 + 1 (x) x] = -ad_x(r)."""
    n = alg.dim
    f = zeros(n, n, n)
    for i in range(n):
        ad = ad_on_tensor(alg, i, r.r)
        for j in range(n):
            for k in range(n):
                f[i][j][k] = -ad[j][k]
    return Cobracket(alg, f)


def test_wedge_convention(osp22):
    b = osp22.basis
    vv = wedge(osp22, b("V+"), b("V+"), Fraction(1, 2))
    i = osp22.index("V+")
    assert vv[i][i] == 1
    assert sum(1 for row in vv for x in row if x) == 1
    hx = wedge(osp22, b("H"), b("X+"))
    assert hx[0][1] == 1 and hx[1][0] == -1


def test_e10_is_vplus_tensor_vplus(osp22):
    r = r_template("e10").evaluate({})
    i = osp22.index("V+")
    assert r.entries == ((i, i, 1),)


def test_rmatrix_rejects_odd_and_symmetric(osp22):
    r = zeros(8, 8)
    r[0][4] = 1
    with pytest.raises(AlgebraError):
        RMatrix(osp22, r)
    r = zeros(8, 8)
    r[0][1] = r[1][0] = 1
    with pytest.raises(AlgebraError):
        RMatrix(osp22, r)
    with pytest.raises(AlgebraError):
        RMatrix(osp22, zeros(7, 7))


def test_projection_helpers(osp22):
    raw = zeros(8, 8)
    raw[0][1] = 2
    raw[0][5] = 7
    raw[4][4] = 3
    assert even_project(osp22, raw)[0][5] == 0
    r = hat_antisymmetrize(osp22, raw)
    assert r.r[0][1] == 1 and r.r[1][0] == -1 and r.r[4][4] == 3


def test_loader_warns_on_projection(osp22, caplog):
    with caplog.at_level(logging.WARNING):
        r = rmatrix_from_entries(osp22, [("H", "X+", "1")])
    assert "projected" in caplog.text
    assert r.r[0][1] == Fraction(1, 2)
    caplog.clear()
    with caplog.at_level(logging.WARNING):
        rmatrix_from_entries(osp22, [("H", "X+", "1"), ("X+", "H", "-1")])
    assert not caplog.text


def test_blocks_round_trip(osp22, rng):
    r = random_rmatrix(osp22, rng)
    blocks = block_split(osp22, r)
    assert block_join(osp22, blocks.r_B, blocks.r_F) == r


@pytest.mark.parametrize("seed", range(5))
def test_delta_matches_adjoint_oracle(osp22, seed):
    from sbk.sampling import make_rng
    r = random_rmatrix(osp22, make_rng(seed))
    assert coboundary_delta(osp22, r) == oracle_delta(osp22, r)


def test_delta_matches_oracle_osp12(osp12, rng):
    r = random_rmatrix(osp12, rng)
    assert coboundary_delta(osp12, r) == oracle_delta(osp12, r)


def test_delta_of_b2_by_hand(osp22):
    # r = H ^ X+, delta(x) = -ad_x(r):
    #   ad_H r  = H (x) X+ - X+ (x) H
    #   ad_X- r = X- (x) X+ + 2 H (x) H - 2 H (x) H - X+ (x) X-
    f = coboundary_delta(osp22, r_template("b2").evaluate({}))
    assert f.image(osp22.index("H")) == {("H", "X+"): -1, ("X+", "H"): 1}
    assert f.image(osp22.index("X-")) == {("X+", "X-"): 1, ("X-", "X+"): -1}
    assert f.image(osp22.index("X+")) == {}


def test_delta_of_vplus_vplus_by_hand(osp22):
    f = coboundary_delta(osp22, r_template("e10").evaluate({}))
    assert f.image(osp22.index("V+")) == {}
    assert f.image(osp22.index("W-")) == {("V+", "H"): 1, ("V+", "B"): -1,
                                          ("H", "V+"): -1, ("B", "V+"): 1}


def test_zero_r_gives_zero_delta(osp22):
    assert coboundary_delta(osp22, RMatrix(osp22, zeros(8, 8))).is_zero()


def test_projections_idempotent_and_commuting(osp22, rng):
    from sbk.sampling import random_rational
    raw = [[random_rational(rng) for _ in range(8)] for _ in range(8)]
    e = even_project(osp22, raw)
    assert even_project(osp22, e) == e
    h = hat_antisymmetrize(osp22, raw)
    assert hat_antisymmetrize(osp22, h.r) == h
    assert even_project(osp22, h.r) == [list(row) for row in h.r]
    assert coboundary_delta(osp22, h) == coboundary_delta(osp22, hat_antisymmetrize(osp22, e))


def test_coboundary_is_cocycle_and_cobracket_axioms(osp22, rng):
    r = random_rmatrix(osp22, rng)
    f = coboundary_delta(osp22, r)
    assert verify_cocycle(osp22, f).ok
    rep = verify_cobracket(osp22, f)
    assert rep.passed("parity") and rep.passed("antisymmetry")


def test_random_cobracket_is_not_cocycle(osp22):
    f = Cobracket.from_entries(osp22, [(0, 1, 2, 1), (0, 2, 1, -1)])
    assert cocycle_residual(osp22, f)
    assert not verify_cocycle(osp22, f).ok


def test_cojacobi_failure_detected(osp22):
    r = r_template("g_printed").evaluate(x=1, alpha=1)
    rep = verify_cobracket(osp22, coboundary_delta(osp22, r))
    assert rep.passed("antisymmetry") and not rep.passed("cojacobi")


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@settings(max_examples=25, deadline=None)
@given(st.lists(rationals, min_size=6, max_size=6))
def test_linearity_of_delta(osp22, coeffs):
    from sbk.sampling import make_rng
    rng = make_rng(1)
    r1, r2 = random_rmatrix(osp22, rng), random_rmatrix(osp22, rng)
    a, b = coeffs[0], coeffs[1]
    combo = r1.scale(a) + r2.scale(b)
    f = coboundary_delta(osp22, combo)
    f1, f2 = coboundary_delta(osp22, r1), coboundary_delta(osp22, r2)
    assert all(f.f[i][j][k] == a * f1.f[i][j][k] + b * f2.f[i][j][k]
               for i in range(8) for j in range(8) for k in range(8))
