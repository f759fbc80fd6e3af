from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from sbk.bialgebra import coboundary_delta, random_rmatrix
from sbk.linsolve import (AlgebraError, coboundary_kernel, coboundary_solve, cobracket_from_vector,
                          cobracket_to_vector, cobracket_unknowns, cocycle_space, inverse, matmul,
                          nullspace, rank, solve_linear)
from sbk.superkernel import zeros

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c))))
def test_rank_and_nullspace_match_sympy(M):
    ours = rank(M)
    assert ours == sympy.Matrix(M).rank()
    ns = nullspace(M, len(M[0]))
    assert len(ns) == len(M[0]) - ours
    for v in ns:
        assert all(x == 0 for x in (sum(a * b for a, b in zip(row, v)) for row in M))


@settings(max_examples=30, deadline=None)
@given(matrices(3, 3))
def test_inverse_matches_sympy(M):
    S = sympy.Matrix(M)
    if S.det() == 0:
        with pytest.raises(AlgebraError):
            inverse(M)
        return
    inv = inverse(M)
    assert inv == [[Fraction(int(x.p), int(x.q)) for x in row] for row in S.inv().tolist()]
    assert matmul(M, inv) == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def test_solve_linear_inconsistent():
    assert solve_linear([[1, 1], [2, 2]], [1, 3]) is None
    x = solve_linear([[1, 1], [1, -1]], [3, 1])
    assert x == [2, 1]


def dense_cocycle_dimension(alg):
    """Dimension of the cocycle space from a dense system over all n^3 components.

    Rows: parity, graded antisymmetry f_i^jk = -z(j,k) f_i^kj, and
    c_il^m f_m^jk = (ad_i f_l)^jk - z(i,l) (ad_l f_i)^jk for all i, l, j, k.
    """
    n = alg.dim
    c, p, z = alg.c, alg.parities, alg.z
    col = lambda i, j, k: (i * n + j) * n + k
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if (p[j] + p[k] - p[i]) % 2:
                    row = [0] * n ** 3
                    row[col(i, j, k)] = 1
                    rows.append(row)
                row = [0] * n ** 3
                row[col(i, j, k)] += 1
                row[col(i, k, j)] += z(j, k)
                if any(row):
                    rows.append(row)
    for i in range(n):
        for l in range(n):
            for j in range(n):
                for k in range(n):
                    row = [Fraction(0)] * n ** 3
                    for m in range(n):
                        row[col(m, j, k)] += c[i][l][m]
                    for a in range(n):
                        # x . (g_a (x) g_k) = [x, g_a] (x) g_k + z(x, a) g_a (x) [x, g_k]
                        row[col(l, a, k)] -= c[i][a][j]
                        row[col(i, a, k)] += z(i, l) * c[l][a][j]
                    for b in range(n):
                        row[col(l, j, b)] -= z(i, j) * c[i][b][k]
                        row[col(i, j, b)] += z(i, l) * z(l, j) * c[l][b][k]
                    if any(row):
                        rows.append(row)
    return n ** 3 - rank(rows)


def test_dense_oracle_osp12_dimension(osp12):
    assert dense_cocycle_dimension(osp12) == 9
    assert cocycle_space(osp12).dimension == 9


def test_dense_oracle_osp22_dimension(osp22):
    assert dense_cocycle_dimension(osp22) == 16


def test_cocycle_space_osp22(osp22):
    space = cocycle_space(osp22)
    assert space.dimension == 16
    assert len(space.basis) == 16


def test_unknown_ordering(osp22):
    keys = cobracket_unknowns(osp22)
    assert keys == sorted(keys)
    v = osp22.index("V+")
    assert (0, v, v) in keys            # odd-odd diagonal allowed
    assert (0, 0, 0) not in keys and (1, 0, 0) not in keys


def test_vector_round_trip(osp22, rng):
    f = coboundary_delta(osp22, random_rmatrix(osp22, rng))
    assert cobracket_from_vector(osp22, cobracket_to_vector(osp22, f)) == f


@pytest.mark.parametrize("name", ["osp22", "osp12_u1"])
def test_every_cocycle_is_coboundary(name):
    from sbk.catalog import algebra
    alg = algebra(name)
    for f in cocycle_space(alg).basis:
        r = coboundary_solve(alg, f)
        assert r is not None
        assert coboundary_delta(alg, r) == f


def test_coboundary_kernel(osp22, osp12):
    # no nonzero ad-invariant even graded-antisymmetric r on either algebra
    assert coboundary_kernel(osp22) == []
    assert coboundary_kernel(osp12) == []


def test_non_cocycle_has_no_coboundary(osp22):
    from sbk.bialgebra import Cobracket
    f = Cobracket.from_entries(osp22, [(0, 1, 2, 1), (0, 2, 1, -1)])
    assert coboundary_solve(osp22, f) is None
