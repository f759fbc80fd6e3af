"""Graded algebra substrate: exact rationals, Koszul signs, structure constants.

A Lie superalgebra is stored as a dense ``n x n x n`` table ``c[i][j][k]`` of
:class:`fractions.Fraction` with ``[g_i, g_j] = sum_k c[i][j][k] g_k``.  Brackets
of two odd generators (anticommutators) live in the same table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class AlgebraError(ValueError):
    """Raised for malformed algebra data or out-of-range indices."""


def rational(value) -> Fraction:
    """Coerce ``value`` to an exact :class:`Fraction`.

    Accepts ints, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    Floats are refused: there is no floating-point mode.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise AlgebraError(f"not a rational: {value!r}")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise AlgebraError(f"cannot parse rational {value!r}") from exc
    raise AlgebraError(f"not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def zeros(*shape):
    if len(shape) == 1:
        return [ZERO] * shape[0]
    return [zeros(*shape[1:]) for _ in range(shape[0])]


@dataclass
class AxiomReport:
    """Outcome of an axiom check: violating index tuples per named axiom."""

    subject: str
    violations: dict[str, list[tuple]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def passed(self, axiom: str) -> bool:
        return not self.violations.get(axiom)

    def summary(self) -> dict[str, str]:
        return {name: ("pass" if not v else f"fail ({len(v)} violations)")
                for name, v in self.violations.items()}


@dataclass(frozen=True, eq=False)
class SuperAlgebra:
    name: str
    generator_names: tuple[str, ...]
    parities: tuple[int, ...]
    c: tuple  # c[i][j][k]

    def __post_init__(self):
        n = len(self.generator_names)
        if n == 0:
            raise AlgebraError("algebra must have at least one generator")
        if len(self.parities) != n:
            raise AlgebraError("parities and generator names differ in length")
        if any(p not in (0, 1) for p in self.parities):
            raise AlgebraError("parities must be 0 or 1")
        if len(set(self.generator_names)) != n:
            raise AlgebraError("duplicate generator names")
        if len(self.c) != n or any(len(row) != n or any(len(col) != n for col in row)
                                   for row in self.c):
            raise AlgebraError(f"structure constants must be {n}x{n}x{n}")

    @property
    def dim(self) -> int:
        return len(self.generator_names)

    def index(self, name: str) -> int:
        try:
            return self.generator_names.index(name)
        except ValueError:
            raise AlgebraError(f"{self.name}: no generator named {name!r}") from None

    @cached_property
    def sparse(self) -> tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]:
        """``sparse[i][j]`` lists the nonzero ``(k, c_ij^k)``."""
        n = self.dim
        return tuple(tuple(tuple((k, self.c[i][j][k]) for k in range(n) if self.c[i][j][k])
                           for j in range(n)) for i in range(n))

    @cached_property
    def nonzero(self) -> tuple[tuple[int, int, int, Fraction], ...]:
        return tuple((i, j, k, v) for i in range(self.dim) for j in range(self.dim)
                     for k, v in self.sparse[i][j])

    def z(self, i: int, j: int) -> int:
        return -1 if self.parities[i] and self.parities[j] else 1

    def basis(self, name: str) -> tuple[Fraction, ...]:
        return element(self, {name: 1})

    def __repr__(self):
        return f"SuperAlgebra({self.name!r}, dim={self.dim})"

    @classmethod
    def from_brackets(cls, name: str, generators: Sequence[tuple[str, int]],
                      brackets: Mapping[tuple[str, str], Mapping[str, object]],
                      mirror: bool = True) -> "SuperAlgebra":
        """Build from ``{(left, right): {generator: coefficient}}``.

        With ``mirror`` set, each listed bracket also fixes its graded-antisymmetric
        partner unless that partner is listed explicitly.
        """
        names = tuple(g for g, _ in generators)
        parities = tuple(int(p) for _, p in generators)
        n = len(names)
        pos = {g: i for i, g in enumerate(names)}
        c = zeros(n, n, n)
        given = set()
        for (left, right), result in brackets.items():
            try:
                i, j = pos[left], pos[right]
            except KeyError as exc:
                raise AlgebraError(f"{name}: unknown generator {exc.args[0]!r}") from None
            if (i, j) in given:
                raise AlgebraError(f"{name}: bracket [{left},{right}] listed twice")
            given.add((i, j))
            for target, coeff in result.items():
                if target not in pos:
                    raise AlgebraError(f"{name}: unknown generator {target!r}")
                c[i][j][pos[target]] = rational(coeff)
        if mirror:
            for i, j in list(given):
                if (j, i) not in given:
                    sign = -1 if parities[i] and parities[j] else 1
                    for k in range(n):
                        c[j][i][k] = -sign * c[i][j][k]
        frozen = tuple(tuple(tuple(col) for col in row) for row in c)
        return cls(name, names, parities, frozen)


def z_sign(alg: SuperAlgebra, i: int, j: int) -> int:
    """Koszul sign ``(-1)^(|g_i| |g_j|)``."""
    n = alg.dim
    if not (0 <= i < n and 0 <= j < n):
        raise AlgebraError(f"index out of range for {alg.name} (dim {n}): ({i}, {j})")
    return alg.z(i, j)


def element(alg: SuperAlgebra, coeffs: Mapping[str, object]) -> tuple[Fraction, ...]:
    v = [ZERO] * alg.dim
    for g, x in coeffs.items():
        v[alg.index(g)] += rational(x)
    return tuple(v)


def bracket(alg: SuperAlgebra, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
    n = alg.dim
    if len(x) != n or len(y) != n:
        raise AlgebraError(f"dimension mismatch: expected vectors of length {n}")
    out = [ZERO] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            for k, v in alg.sparse[i][j]:
                out[k] += xi * yj * v
    return tuple(out)


def parity_of(alg: SuperAlgebra, x: Sequence) -> int | None:
    """Parity of a homogeneous element, ``None`` for zero or mixed elements."""
    ps = {alg.parities[i] for i, xi in enumerate(x) if xi}
    return ps.pop() if len(ps) == 1 else None


def jacobi_residual(alg: SuperAlgebra, i: int, j: int, l: int) -> list[Fraction]:
    """Cyclic graded Jacobi sum for the triple ``(i, j, l)`` as a vector over ``m``."""
    out = [ZERO] * alg.dim
    sp = alg.sparse
    for (a, b, d), sign in (((i, j, l), alg.z(i, l)), ((j, l, i), alg.z(j, i)),
                            ((l, i, j), alg.z(l, j))):
        for k, ck in sp[a][b]:
            for m, cm in sp[k][d]:
                out[m] += sign * ck * cm
    return out


def verify_lie_superalgebra(alg: SuperAlgebra) -> AxiomReport:
    """Check parity closure, graded antisymmetry and graded Jacobi exactly."""
    report = AxiomReport(alg.name, {"parity": [], "antisymmetry": [], "jacobi": []})
    n = alg.dim
    c, p = alg.c, alg.parities
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = c[i][j][k]
                if v and (p[i] + p[j] - p[k]) % 2:
                    report.violations["parity"].append((i, j, k))
                if v != -alg.z(i, j) * c[j][i][k]:
                    report.violations["antisymmetry"].append((i, j, k))
    for i in range(n):
        for j in range(n):
            for l in range(n):
                res = jacobi_residual(alg, i, j, l)
                report.violations["jacobi"].extend((i, j, l, m) for m in range(n) if res[m])
    return report


def perturbed(alg: SuperAlgebra, changes: Iterable[tuple[int, int, int, object]],
              name: str | None = None) -> SuperAlgebra:
    """Copy of ``alg`` with ``c[i][j][k]`` overwritten (no mirroring)."""
    c = [[list(col) for col in row] for row in alg.c]
    for i, j, k, v in changes:
        c[i][j][k] = rational(v)
    frozen = tuple(tuple(tuple(col) for col in row) for row in c)
    return SuperAlgebra(name or alg.name + "*", alg.generator_names, alg.parities, frozen)
