"""Exact rational linear algebra and the two linear problems of the classification:
the space of cocycles and the coboundary inverse problem.

Matrices are lists of rows of :class:`Fraction`.  Elimination works on sparse
rows (dicts) with the first nonzero column as pivot, so bases are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .superkernel import ZERO, AlgebraError, SuperAlgebra, rational, zeros


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum((rational(a) * rational(b) for a, b in zip(row, col) if a and b), ZERO)
             for col in Bt] for row in A]


def matvec(M, v):
    return [sum((rational(a) * rational(b) for a, b in zip(row, v) if a and b), ZERO)
            for row in M]


class Echelon:
    """Incrementally maintained reduced row echelon form of sparse rows."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = {c: rational(v) for c, v in row.items() if v}
        for col in sorted(c for c in row if c in self.pivots):
            v = row.get(col)
            if not v:
                continue
            for c, pv in self.pivots[col].items():
                nv = row.get(c, ZERO) - v * pv
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row: dict[int, Fraction]) -> bool:
        """Insert a row; returns True when it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for other in self.pivots.values():
            v = other.get(p)
            if v:
                for c, pv in row.items():
                    nv = other.get(c, ZERO) - v * pv
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self.pivots[p] = row
        return True

    def nullspace(self) -> list[list[Fraction]]:
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for fcol in free:
            v = [ZERO] * self.ncols
            v[fcol] = Fraction(1)
            for p, row in self.pivots.items():
                x = row.get(fcol)
                if x:
                    v[p] = -x
            basis.append(v)
        return basis


def _echelon(M) -> Echelon:
    ncols = len(M[0]) if M else 0
    E = Echelon(ncols)
    for row in M:
        if len(row) != ncols:
            raise AlgebraError("ragged matrix")
        E.add({c: v for c, v in enumerate(row) if v})
    return E


def rank(M) -> int:
    return _echelon(M).rank if M else 0


def nullspace(M, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}``; ``ncols`` is needed only for an empty ``M``."""
    if not M:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    basis = _echelon(M).nullspace()
    for v in basis:
        assert not any(matvec(M, v)), "nullspace vector failed substitution"
    return basis


def solve_linear(M, b: Sequence) -> list[Fraction] | None:
    """One exact solution of ``M v = b`` (free variables set to 0), or ``None``."""
    if len(M) != len(b):
        raise AlgebraError(f"shape mismatch: {len(M)} rows but rhs of length {len(b)}")
    if not M:
        return []
    n = len(M[0])
    E = Echelon(n + 1)
    for row, rhs in zip(M, b):
        if len(row) != n:
            raise AlgebraError("ragged matrix")
        d = {c: v for c, v in enumerate(row) if v}
        if rhs:
            d[n] = rational(rhs)
        E.add(d)
    if n in E.pivots:
        return None
    x = [ZERO] * n
    for p, row in E.pivots.items():
        x[p] = row.get(n, ZERO)
    assert matvec(M, x) == [rational(v) for v in b], "solution failed substitution"
    return x


def inverse(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise AlgebraError("inverse needs a square matrix")
    E = Echelon(2 * n)
    for i, row in enumerate(M):
        d = {c: v for c, v in enumerate(row) if v}
        d[n + i] = Fraction(1)
        E.add(d)
    if any(p not in E.pivots for p in range(n)):
        raise AlgebraError("matrix is singular")
    return [[E.pivots[i].get(n + j, ZERO) for j in range(n)] for i in range(n)]


# --- cocycles and coboundaries --------------------------------------------------

def cobracket_unknowns(alg: SuperAlgebra) -> list[tuple[int, int, int]]:
    """Independent components ``f_i^{jk}`` allowed by parity and graded antisymmetry:
    ``j < k``, or ``j <= k`` when both are odd; lexicographic in ``(i, j, k)``."""
    p = alg.parities
    n = alg.dim
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(j, n):
                if (p[j] + p[k] - p[i]) % 2:
                    continue
                if j == k and not p[j]:
                    continue
                out.append((i, j, k))
    return out


def rmatrix_unknowns(alg: SuperAlgebra) -> list[tuple[int, int]]:
    """Independent entries of an even graded-antisymmetric r."""
    p = alg.parities
    return [(i, j) for i in range(alg.dim) for j in range(i, alg.dim)
            if p[i] == p[j] and (i != j or p[i])]


def _unit_cobracket(alg, key):
    from .bialgebra import Cobracket

    i, j, k = key
    f = zeros(alg.dim, alg.dim, alg.dim)
    f[i][j][k] = Fraction(1)
    if j != k:
        f[i][k][j] = Fraction(-alg.z(j, k))
    return Cobracket(alg, f)


def _unit_r(alg, key):
    i, j = key
    r = zeros(alg.dim, alg.dim)
    r[i][j] = Fraction(1)
    if i != j:
        r[j][i] = Fraction(-alg.z(i, j))
    return r


def cobracket_from_vector(alg: SuperAlgebra, v: Sequence):
    from .bialgebra import Cobracket

    f = zeros(alg.dim, alg.dim, alg.dim)
    for (i, j, k), x in zip(cobracket_unknowns(alg), v):
        if x:
            f[i][j][k] += x
            if j != k:
                f[i][k][j] -= alg.z(j, k) * x
    return Cobracket(alg, f)


def cobracket_to_vector(alg: SuperAlgebra, f) -> list[Fraction]:
    return [f.f[i][j][k] for i, j, k in cobracket_unknowns(alg)]


@dataclass
class CocycleSpace:
    dimension: int
    basis: list  # of Cobracket
    equations: int
    unknowns: int


def cocycle_system(alg: SuperAlgebra) -> tuple[list[tuple], list[dict[int, Fraction]]]:
    """Sparse rows of the compatibility condition in the reduced unknowns."""
    from .bialgebra import cocycle_residual

    unknowns = cobracket_unknowns(alg)
    rows: dict[tuple, dict[int, Fraction]] = {}
    for col, key in enumerate(unknowns):
        for eq, v in cocycle_residual(alg, _unit_cobracket(alg, key)).items():
            rows.setdefault(eq, {})[col] = v
    return unknowns, [rows[eq] for eq in sorted(rows)]


def cocycle_space(alg: SuperAlgebra) -> CocycleSpace:
    unknowns, rows = cocycle_system(alg)
    E = Echelon(len(unknowns))
    for row in rows:
        E.add(row)
    basis = [cobracket_from_vector(alg, v) for v in E.nullspace()]
    return CocycleSpace(len(unknowns) - E.rank, basis, len(rows), len(unknowns))


def coboundary_matrix(alg: SuperAlgebra):
    """Matrix of ``r -> delta_r`` from r-unknowns to cobracket unknowns."""
    from .bialgebra import coboundary_delta

    r_keys = rmatrix_unknowns(alg)
    f_keys = cobracket_unknowns(alg)
    cols = [cobracket_to_vector(alg, coboundary_delta(alg, _unit_r(alg, key)))
            for key in r_keys]
    return r_keys, f_keys, transpose(cols) if cols else []


def coboundary_solve(alg: SuperAlgebra, f):
    """An even graded-antisymmetric r with ``delta_r = f``, or ``None`` if there is none."""
    from .bialgebra import RMatrix, coboundary_delta

    r_keys, f_keys, M = coboundary_matrix(alg)
    # components outside the reduced unknowns must match too; require f to be admissible
    rebuilt = cobracket_from_vector(alg, cobracket_to_vector(alg, f))
    if rebuilt.f != f.f:
        return None
    x = solve_linear(M, cobracket_to_vector(alg, f))
    if x is None:
        return None
    r = zeros(alg.dim, alg.dim)
    for (i, j), v in zip(r_keys, x):
        r[i][j] += v
        if i != j:
            r[j][i] -= alg.z(i, j) * v
    out = RMatrix(alg, r)
    assert coboundary_delta(alg, out).f == f.f
    return out


def coboundary_kernel(alg: SuperAlgebra):
    """Basis of r with ``delta_r = 0`` (the ad-invariant even graded-antisymmetric elements)."""
    from .bialgebra import RMatrix

    r_keys, _, M = coboundary_matrix(alg)
    out = []
    for v in nullspace(M, len(r_keys)):
        r = zeros(alg.dim, alg.dim)
        for (i, j), x in zip(r_keys, v):
            r[i][j] += x
            if i != j:
                r[j][i] -= alg.z(i, j) * x
        out.append(RMatrix(alg, r))
    return out
