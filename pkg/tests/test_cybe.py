from fractions import Fraction

import pytest

from sbk.autos import act_on_r, build_automorphism, AutoParams
from sbk.bialgebra import coboundary_delta, random_rmatrix, verify_cobracket
from sbk.catalog import r_template
from sbk.cybe import Tensor3, ad_invariant, adjoint_action, is_cybe, schouten_square
from sbk.superkernel import AlgebraError, bracket


def outer3(alg, T):
    """Dense n^3 array of a Tensor3."""
    n = alg.dim
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), v in T.t.items():
        out[i][j][k] = v
    return out


def transform3(A, T):
    """Coordinates of T in the basis A g: T~ = (A^-1)^T applied in each slot."""
    from sbk.linsolve import inverse
    inv = inverse(A.A)
    n = len(inv)
    out = {}
    for (a, b, c), v in T.t.items():
        for i in range(n):
            if not inv[a][i]:
                continue
            for j in range(n):
                if not inv[b][j]:
                    continue
                for k in range(n):
                    if inv[c][k]:
                        key = (i, j, k)
                        out[key] = out.get(key, 0) + v * inv[a][i] * inv[b][j] * inv[c][k]
    return Tensor3(T.alg, out)


def test_zero_r(osp22):
    assert is_cybe(osp22, r_template("e10").evaluate({}).scale(0))


def test_b2_and_e10_satisfy_cybe(osp22):
    assert is_cybe(osp22, r_template("b2").evaluate({}))
    assert is_cybe(osp22, r_template("e10").evaluate({}))


def test_standard_family_fails_but_is_invariant(osp22):
    r = r_template("h1").evaluate(x=1, y=0)
    T = schouten_square(osp22, r)
    assert not T.is_zero()
    assert ad_invariant(osp22, T)


def test_quadratic_scaling(osp22, rng):
    r = random_rmatrix(osp22, rng)
    lam = Fraction(-3, 7)
    assert schouten_square(osp22, r.scale(lam)) == schouten_square(osp22, r).scale(lam * lam)


def test_equivariance_under_automorphisms(osp22, rng):
    r = random_rmatrix(osp22, rng)
    A = build_automorphism(AutoParams(2, 1, Fraction(1, 3), 1, 1))
    assert schouten_square(osp22, act_on_r(A, r)) == transform3(A, schouten_square(osp22, r))


@pytest.mark.parametrize("seed", range(4))
def test_cojacobi_iff_ad_invariant(osp22, seed):
    from sbk.sampling import make_rng
    rng = make_rng(seed)
    for r in (random_rmatrix(osp22, rng), r_template("e1").evaluate(x=seed, y=2)):
        cj = verify_cobracket(osp22, coboundary_delta(osp22, r)).passed("cojacobi")
        assert cj == ad_invariant(osp22, schouten_square(osp22, r))


def test_adjoint_action_on_pure_tensor(osp22):
    # H . (X+ (x) X+ (x) V+) = (1 + 1 + 1/2) X+ (x) X+ (x) V+
    i = osp22.index
    T = Tensor3(osp22, {(i("X+"), i("X+"), i("V+")): 1})
    out = adjoint_action(osp22, i("H"), T)
    assert out.t == {(i("X+"), i("X+"), i("V+")): Fraction(5, 2)}


def test_adjoint_action_sign_for_odd_generator(osp22):
    # V+ . (W- (x) V+ (x) H): slot 2 term picks up z(V+, W-) = -1
    i = osp22.index
    T = Tensor3(osp22, {(i("W-"), i("V+"), i("H")): 1})
    out = adjoint_action(osp22, i("V+"), T)
    first = bracket(osp22, osp22.basis("V+"), osp22.basis("W-"))
    expect = {}
    for a, v in enumerate(first):
        if v:
            expect[(a, i("V+"), i("H"))] = v
    # {V+, V+} = 0 in osp(2|2); third slot: z(V+, W- + V+) = 1, [V+, H] = -V+/2
    expect[(i("W-"), i("V+"), i("V+"))] = Fraction(-1, 2)
    assert out.t == expect


def test_tensor3_listing_and_validation(osp22):
    T = Tensor3(osp22, {(0, 1, 2): Fraction(1, 2), (0, 0, 0): 0})
    assert T.listing == [(0, 1, 2, "1/2")]
    assert T.named_listing() == [("H", "X+", "X-", "1/2")]
    with pytest.raises(AlgebraError):
        Tensor3(osp22, {(0, 0, 9): 1})


def test_wrong_algebra(osp22, osp12):
    with pytest.raises(AlgebraError):
        schouten_square(osp12, r_template("b2").evaluate({}))
