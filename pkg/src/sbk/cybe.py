"""The graded classical Yang-Baxter obstruction ``[[r, r]]``."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .bialgebra import RMatrix
from .superkernel import AlgebraError, SuperAlgebra, format_rational, rational


@dataclass(frozen=True, eq=False)
class Tensor3:
    """Element of ``G (x) G (x) G`` stored sparsely as ``{(i, j, k): value}``."""

    alg: SuperAlgebra
    t: dict

    def __post_init__(self):
        n = self.alg.dim
        clean = {}
        for key, v in self.t.items():
            if len(key) != 3 or not all(0 <= x < n for x in key):
                raise AlgebraError(f"bad tensor index {key} for dim {n}")
            v = rational(v)
            if v:
                clean[tuple(key)] = v
        object.__setattr__(self, "t", clean)

    def __eq__(self, other):
        return isinstance(other, Tensor3) and self.alg is other.alg and self.t == other.t

    def __hash__(self):
        return hash(frozenset(self.t.items()))

    def is_zero(self) -> bool:
        return not self.t

    def scale(self, lam) -> "Tensor3":
        lam = rational(lam)
        return Tensor3(self.alg, {k: lam * v for k, v in self.t.items()})

    @cached_property
    def listing(self) -> list[tuple[int, int, int, str]]:
        """Sparse ``(i, j, k, "p/q")`` rows sorted by index."""
        return [(i, j, k, format_rational(v)) for (i, j, k), v in sorted(self.t.items())]

    def named_listing(self) -> list[tuple[str, str, str, str]]:
        names = self.alg.generator_names
        return [(names[i], names[j], names[k], v) for i, j, k, v in self.listing]

    @classmethod
    def dense(cls, alg: SuperAlgebra, arr) -> "Tensor3":
        n = alg.dim
        return cls(alg, {(i, j, k): arr[i][j][k] for i in range(n) for j in range(n)
                         for k in range(n) if arr[i][j][k]})


def schouten_square(alg: SuperAlgebra, r: RMatrix) -> Tensor3:
    """``[[r,r]] = [r12, r13] + [r12, r23] + [r13, r23]`` with Koszul signs.

    Components::

        sum_{a,c} z(j,c) r^{aj} r^{ck} c_ac^i
      + sum_{b,c}        r^{ib} r^{ck} c_bc^j
      + sum_{b,d} z(b,j) r^{ib} r^{jd} c_bd^k
    """
    if r.alg is not alg:
        raise AlgebraError("r-matrix belongs to a different algebra")
    rows = defaultdict(list)  # a -> [(j, r^{aj})]
    for a, j, v in r.entries:
        rows[a].append((j, v))
    z = alg.z
    out: dict = defaultdict(Fraction)
    for a, c, x, cv in alg.nonzero:
        ra, rc = rows[a], rows[c]
        if not ra or not rc:
            continue
        # [r12, r13]: generators a, c bracketed into the first slot
        for j, v in ra:
            for k, w in rc:
                out[(x, j, k)] += z(j, c) * v * w * cv
        # [r12, r23]: second slot; r^{ia} r^{ck}
        for i, v in _cols(r, a):
            for k, w in rc:
                out[(i, x, k)] += v * w * cv
        # [r13, r23]: third slot; r^{ia} r^{jc}
        for i, v in _cols(r, a):
            for j, w in _cols(r, c):
                out[(i, j, x)] += z(a, j) * v * w * cv
    return Tensor3(alg, out)


def _cols(r: RMatrix, b: int):
    return [(i, v) for i, j, v in r.entries if j == b]


def is_cybe(alg: SuperAlgebra, r: RMatrix) -> bool:
    return schouten_square(alg, r).is_zero()


def adjoint_action(alg: SuperAlgebra, x: int, T: Tensor3) -> Tensor3:
    """Graded action of generator ``x`` on ``T``: passing ``x`` over earlier slots
    costs ``z(x, combined parity of those slots)``."""
    p = alg.parities
    sp = alg.sparse
    out: dict = defaultdict(Fraction)
    for (i, j, k), v in T.t.items():
        for a, cv in sp[x][i]:
            out[(a, j, k)] += cv * v
        s = alg.z(x, i)
        for a, cv in sp[x][j]:
            out[(i, a, k)] += s * cv * v
        s = -1 if p[x] and (p[i] + p[j]) % 2 else 1
        for a, cv in sp[x][k]:
            out[(i, j, a)] += s * cv * v
    return Tensor3(alg, out)


def ad_invariant(alg: SuperAlgebra, T: Tensor3) -> bool:
    return all(adjoint_action(alg, x, T).is_zero() for x in range(alg.dim))
