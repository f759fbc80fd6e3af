"""Cobrackets, classical r-matrices and the coboundary construction.

Conventions
-----------
* ``delta(g_i) = sum f[i][j][k] g_j (x) g_k``.
* An r-matrix is ``r = sum r[i][j] g_i (x) g_j``; it is kept even and graded
  antisymmetric, ``r[i][j] = -z(i,j) r[j][i]``.
* Wedge: ``a ^ b = a (x) b - z(a,b) b (x) a``, so ``1/2 V+ ^ V+ = V+ (x) V+``.
* The coboundary cobracket is ``f[i][j][k] = r[j][m] c[m][i][k] - c[i][m][j] r[m][k]``.
* Compatibility is checked in the form
  ``delta([x,y]) = x . delta(y) - z(x,y) y . delta(x)`` with the graded adjoint
  action on ``G (x) G``.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .superkernel import (ZERO, AlgebraError, AxiomReport, SuperAlgebra, rational,
                          zeros)

log = logging.getLogger(__name__)


def _freeze(rows):
    return tuple(tuple(row) for row in rows)


def _check_square(alg: SuperAlgebra, raw) -> None:
    n = alg.dim
    if len(raw) != n or any(len(row) != n for row in raw):
        raise AlgebraError(f"expected a {n}x{n} array for {alg.name}")


@dataclass(frozen=True, eq=False)
class RMatrix:
    """Even, graded-antisymmetric element of ``G (x) G``."""

    alg: SuperAlgebra
    r: tuple

    def __post_init__(self):
        _check_square(self.alg, self.r)
        object.__setattr__(self, "r", _freeze(tuple(rational(x) for x in row) for row in self.r))
        bad = rmatrix_violations(self.alg, self.r)
        if bad:
            raise AlgebraError(f"not an even graded-antisymmetric r-matrix: {bad[:4]}")

    def __eq__(self, other):
        return isinstance(other, RMatrix) and self.alg is other.alg and self.r == other.r

    def __hash__(self):
        return hash(self.r)

    def __add__(self, other: "RMatrix") -> "RMatrix":
        n = self.alg.dim
        return RMatrix(self.alg, [[self.r[i][j] + other.r[i][j] for j in range(n)]
                                  for i in range(n)])

    def scale(self, lam) -> "RMatrix":
        lam = rational(lam)
        return RMatrix(self.alg, [[lam * x for x in row] for row in self.r])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.r)

    @cached_property
    def entries(self) -> tuple[tuple[int, int, Fraction], ...]:
        return tuple((i, j, v) for i, row in enumerate(self.r) for j, v in enumerate(row) if v)

    def describe(self) -> str:
        names = self.alg.generator_names
        return " + ".join(f"({v}) {names[i]}(x){names[j]}" for i, j, v in self.entries) or "0"


@dataclass(frozen=True, eq=False)
class Cobracket:
    alg: SuperAlgebra
    f: tuple  # f[i][j][k]

    def __post_init__(self):
        n = self.alg.dim
        if len(self.f) != n or any(len(a) != n or any(len(b) != n for b in a) for a in self.f):
            raise AlgebraError(f"cobracket must be {n}x{n}x{n}")
        object.__setattr__(self, "f", tuple(_freeze(a) for a in self.f))

    def __eq__(self, other):
        return isinstance(other, Cobracket) and self.alg is other.alg and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    @cached_property
    def entries(self) -> tuple[tuple[int, int, int, Fraction], ...]:
        return tuple((i, j, k, v) for i, a in enumerate(self.f) for j, b in enumerate(a)
                     for k, v in enumerate(b) if v)

    def is_zero(self) -> bool:
        return not self.entries

    def image(self, i: int) -> dict[tuple[str, str], Fraction]:
        """``delta(g_i)`` as ``{(left, right): coefficient}``."""
        names = self.alg.generator_names
        return {(names[j], names[k]): v for a, j, k, v in self.entries if a == i}

    @classmethod
    def from_entries(cls, alg: SuperAlgebra, entries) -> "Cobracket":
        f = zeros(alg.dim, alg.dim, alg.dim)
        for i, j, k, v in entries:
            f[i][j][k] += rational(v)
        return cls(alg, f)


@dataclass(frozen=True)
class BlockPair:
    r_B: tuple
    r_F: tuple


def rmatrix_violations(alg: SuperAlgebra, r) -> list[tuple[str, int, int]]:
    out = []
    n = alg.dim
    for i in range(n):
        for j in range(n):
            if r[i][j] and alg.parities[i] != alg.parities[j]:
                out.append(("even", i, j))
            if r[i][j] != -alg.z(i, j) * r[j][i]:
                out.append(("antisymmetry", i, j))
    return out


def even_project(alg: SuperAlgebra, raw) -> list[list[Fraction]]:
    _check_square(alg, raw)
    p = alg.parities
    return [[rational(raw[i][j]) if p[i] == p[j] else ZERO for j in range(alg.dim)]
            for i in range(alg.dim)]


def hat_antisymmetrize(alg: SuperAlgebra, raw) -> RMatrix:
    """Graded antisymmetric part ``(r_ij - z(i,j) r_ji)/2`` of the even projection."""
    e = even_project(alg, raw)
    n = alg.dim
    half = Fraction(1, 2)
    return RMatrix(alg, [[(e[i][j] - alg.z(i, j) * e[j][i]) * half for j in range(n)]
                         for i in range(n)])


def graded_antisymmetric_part(alg: SuperAlgebra, raw) -> list[list[Fraction]]:
    """Like :func:`hat_antisymmetrize` but without the even projection."""
    _check_square(alg, raw)
    n = alg.dim
    return [[(rational(raw[i][j]) - alg.z(i, j) * rational(raw[j][i])) / 2 for j in range(n)]
            for i in range(n)]


def wedge(alg: SuperAlgebra, x: Sequence, y: Sequence, coeff=1) -> list[list[Fraction]]:
    """Array of ``coeff * x ^ y`` for homogeneous ``x``, ``y``."""
    coeff = rational(coeff)
    n = alg.dim
    r = zeros(n, n)
    for a in range(n):
        if not x[a]:
            continue
        for b in range(n):
            if y[b]:
                v = coeff * x[a] * y[b]
                r[a][b] += v
                r[b][a] -= alg.z(a, b) * v
    return r


def coboundary_delta(alg: SuperAlgebra, r) -> Cobracket:
    """Cobracket ``f[i][j][k] = r[j][m] c[m][i][k] - c[i][m][j] r[m][k]``."""
    rr = r.r if isinstance(r, RMatrix) else r
    _check_square(alg, rr)
    n = alg.dim
    f = zeros(n, n, n)
    by_col = defaultdict(list)  # m -> [(j, r[j][m])]
    by_row = defaultdict(list)  # m -> [(k, r[m][k])]
    for j in range(n):
        for m in range(n):
            v = rr[j][m]
            if v:
                by_col[m].append((j, v))
                by_row[j].append((m, v))
    for m, i, k, v in alg.nonzero:
        for j, rv in by_col[m]:
            f[i][j][k] += rv * v
    for i, m, j, v in alg.nonzero:
        for k, rv in by_row[m]:
            f[i][j][k] -= v * rv
    return Cobracket(alg, f)


def cojacobi_residual(alg: SuperAlgebra, f: Cobracket) -> dict[tuple[int, int, int, int], Fraction]:
    """Nonzero components of the graded co-Jacobi sum, keyed ``(i, k, l, m)``.

    Sum: ``f_i^{kj} f_j^{lm} z(k,m) + f_i^{lj} f_j^{mk} z(l,k) + f_i^{mj} f_j^{kl} z(m,l)``.
    """
    first = defaultdict(list)  # j -> [(l, m, f_j^{lm})]
    for j, l, m, v in f.entries:
        first[j].append((l, m, v))
    res: dict = defaultdict(Fraction)
    z = alg.z
    for i, a, j, v in f.entries:
        for b, c, w in first[j]:
            t = z(a, c) * v * w
            res[(i, a, b, c)] += t
            res[(i, c, a, b)] += t
            res[(i, b, c, a)] += t
    return {key: v for key, v in res.items() if v}


def cocycle_residual(alg: SuperAlgebra, f: Cobracket) -> dict[tuple[int, int, int, int], Fraction]:
    """Nonzero components of the compatibility condition, keyed ``(i, j, l, m)``.

    ``c_ij^k f_k^{lm} - c_ik^l f_j^{km} - z(i,l) c_ik^m f_j^{lk}
    + z(i,j) (c_jk^l f_i^{km} + z(j,l) c_jk^m f_i^{lk})``
    """
    n = alg.dim
    z = alg.z
    by_first = defaultdict(list)   # k -> [(l, m, v)]
    by_12 = defaultdict(list)      # (j, k) -> [(m, v)]    f_j^{k m}
    by_13 = defaultdict(list)      # (j, k) -> [(l, v)]    f_j^{l k}
    for a, b, c, v in f.entries:
        by_first[a].append((b, c, v))
        by_12[(a, b)].append((c, v))
        by_13[(a, c)].append((b, v))
    res: dict = defaultdict(Fraction)
    for i, j, k, cv in alg.nonzero:
        for l, m, fv in by_first[k]:
            res[(i, j, l, m)] += cv * fv
    # terms carrying c_{s k}^{t} with s the acting generator and the cobracket of the other
    for s, k, t, cv in alg.nonzero:
        for o in range(n):
            # acting with g_s on delta(g_o); enters with +1 for (s,o) = (i,j),
            # and with -z(i,j) for (s,o) = (j,i)
            for m, fv in by_12[(o, k)]:
                # c_sk^t f_o^{k m} -> slot (t, m)
                val = cv * fv
                res[(s, o, t, m)] -= val
                res[(o, s, t, m)] += z(o, s) * val
            for l, fv in by_13[(o, k)]:
                # c_sk^t f_o^{l k} -> slot (l, t), sign z(s, l)
                val = z(s, l) * cv * fv
                res[(s, o, l, t)] -= val
                res[(o, s, l, t)] += z(o, s) * val
    return {key: v for key, v in res.items() if v}


def verify_cobracket(alg: SuperAlgebra, f: Cobracket) -> AxiomReport:
    """Parity closure, graded antisymmetry and co-Jacobi of a cobracket."""
    report = AxiomReport("cobracket", {"parity": [], "antisymmetry": [], "cojacobi": []})
    p = alg.parities
    ff = f.f
    for k, i, j, v in f.entries:
        if (p[i] + p[j] - p[k]) % 2:
            report.violations["parity"].append((k, i, j))
    n = alg.dim
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if ff[k][i][j] != -alg.z(i, j) * ff[k][j][i]:
                    report.violations["antisymmetry"].append((k, i, j))
    report.violations["cojacobi"] = sorted(cojacobi_residual(alg, f))
    return report


def verify_cocycle(alg: SuperAlgebra, f: Cobracket) -> AxiomReport:
    return AxiomReport("cocycle", {"cocycle": sorted(cocycle_residual(alg, f))})


def block_split(alg: SuperAlgebra, r: RMatrix) -> BlockPair:
    """Bosonic and fermionic 4x4 blocks of an r-matrix over an 8-dim algebra
    whose generators are ordered four even then four odd."""
    if alg.parities != (0, 0, 0, 0, 1, 1, 1, 1):
        raise AlgebraError(f"{alg.name}: block layout needs parities (0,0,0,0,1,1,1,1)")
    return BlockPair(_freeze(row[:4] for row in r.r[:4]), _freeze(row[4:] for row in r.r[4:]))


def block_join(alg: SuperAlgebra, r_B, r_F) -> RMatrix:
    if alg.parities != (0, 0, 0, 0, 1, 1, 1, 1):
        raise AlgebraError(f"{alg.name}: block layout needs parities (0,0,0,0,1,1,1,1)")
    r = zeros(8, 8)
    for i in range(4):
        for j in range(4):
            r[i][j] = rational(r_B[i][j])
            r[i + 4][j + 4] = rational(r_F[i][j])
    return RMatrix(alg, r)


def rmatrix_from_entries(alg: SuperAlgebra, entries, warn: bool = True) -> RMatrix:
    """Build an r-matrix from ``(row, col, value)`` triples, projecting as needed."""
    raw = zeros(alg.dim, alg.dim)
    for row, col, value in entries:
        i = alg.index(row) if isinstance(row, str) else int(row)
        j = alg.index(col) if isinstance(col, str) else int(col)
        raw[i][j] += rational(value)
    r = hat_antisymmetrize(alg, raw)
    if warn and [list(row) for row in r.r] != raw:
        log.warning("r-matrix entries were projected onto the even graded-antisymmetric part")
    return r


def random_rmatrix(alg: SuperAlgebra, rng, num_range: int = 97) -> RMatrix:
    """Random even graded-antisymmetric r with entries p/q, 1 <= |p|, q <= num_range."""
    from .sampling import random_rational

    n = alg.dim
    r = zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            if alg.parities[i] != alg.parities[j] or (i == j and not alg.parities[i]):
                continue
            v = random_rational(rng, num_range)
            r[i][j] = v
            r[j][i] = -alg.z(i, j) * v
    return RMatrix(alg, r)


def cobracket_as_dict(f: Cobracket) -> Mapping:
    names = f.alg.generator_names
    return {"algebra": f.alg.name,
            "entries": [{"generator": names[i], "left": names[j], "right": names[k],
                         "value": str(v)} for i, j, k, v in f.entries]}
