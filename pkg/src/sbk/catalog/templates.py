"""Parametrized r-matrix families.

Two flavours share :class:`RMatrixTemplate`:

* ``matrix`` templates hold printed ``r_B`` / ``r_F`` blocks as strings of exact
  rational expressions in the case parameters;
* ``wedge`` templates hold a list of terms ``(coefficient, left, right)`` read as
  ``coefficient * left ^ right``, with ``left`` / ``right`` a generator name or a
  ``{generator: coefficient}`` combination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..bialgebra import RMatrix, block_join, wedge
from ..expr import evaluate
from ..superkernel import AlgebraError, element, rational, zeros
from .algebras import algebra as get_algebra


class TemplateError(AlgebraError):
    pass


class ExcludedPoint(TemplateError):
    """A parameter assignment makes one of the declared denominators vanish."""


@dataclass(frozen=True)
class RMatrixTemplate:
    id: str
    algebra: str
    params: tuple[tuple[str, str], ...]          # (name, "continuous" | "binary")
    kind: str                                    # "matrix" | "wedge"
    body: object
    exclusions: tuple[str, ...] = ()
    derived: Mapping[str, str] = field(default_factory=dict)
    rational_function: bool = False
    source: str = ""
    note: str = ""

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.params)

    @property
    def alg(self):
        return get_algebra(self.algebra)

    def env(self, values: Mapping[str, object]) -> dict[str, Fraction]:
        unknown = set(values) - set(self.param_names)
        if unknown:
            raise TemplateError(f"{self.id}: unknown parameters {sorted(unknown)}")
        missing = set(self.param_names) - set(values)
        if missing:
            raise TemplateError(f"{self.id}: missing parameters {sorted(missing)}")
        env = {k: rational(v) for k, v in values.items()}
        for name, kind in self.params:
            if kind == "binary" and env[name] not in (0, 1):
                raise TemplateError(f"{self.id}: binary parameter {name} must be 0 or 1")
        for name, source in self.derived.items():
            env[name] = evaluate(source, env)
        return env

    def excluded(self, values: Mapping[str, object]) -> list[str]:
        env = self.env(values)
        return [e for e in self.exclusions if not evaluate(e, env)]

    def evaluate(self, values: Mapping[str, object] | None = None, **kw) -> RMatrix:
        values = dict(values or {}, **kw)
        bad = self.excluded(values)
        if bad:
            raise ExcludedPoint(f"{self.id}: excluded point, vanishing {bad}")
        env = self.env(values)
        if self.kind == "matrix":
            r_B, r_F = self.body
            return block_join(self.alg, [[evaluate(x, env) for x in row] for row in r_B],
                              [[evaluate(x, env) for x in row] for row in r_F])
        return RMatrix(self.alg, self._wedge_array(env))

    def _wedge_array(self, env):
        alg = self.alg
        n = alg.dim
        total = zeros(n, n)
        for coeff, left, right in self.body:
            part = wedge(alg, _vector(alg, left, env), _vector(alg, right, env),
                         evaluate(coeff, env))
            for i in range(n):
                for j in range(n):
                    total[i][j] += part[i][j]
        return total

    def polynomial_degree_ok(self) -> bool:
        """True when every entry is at most quadratic per parameter, so the
        {0,1,2} grid decides polynomial identities of the checks."""
        return not self.rational_function

    def to_dict(self) -> dict:
        out = {"id": self.id, "algebra": self.algebra,
               "parameters": [{"name": n, "kind": k} for n, k in self.params],
               "kind": self.kind, "exclusions": list(self.exclusions),
               "derived": dict(self.derived), "source": self.source}
        if self.kind == "matrix":
            out["r_B"], out["r_F"] = [list(map(list, b)) for b in self.body]
        else:
            out["terms"] = [{"coefficient": str(c), "left": _lc_json(l), "right": _lc_json(r)}
                            for c, l, r in self.body]
        return out


def _lc_json(x):
    return x if isinstance(x, str) else {k: str(v) for k, v in x.items()}


def _vector(alg, which, env):
    if isinstance(which, str):
        return alg.basis(which)
    return element(alg, {g: evaluate(c, env) for g, c in which.items()})


def matrix_template(id, params, r_B, r_F, exclusions=(), derived=None, source="",
                    note="") -> RMatrixTemplate:
    """Printed-matrix family; it counts as rational-function valued exactly when it
    declares denominators (or derived square parameters)."""
    rows = [tuple(tuple(str(x) for x in row) for row in blk) for blk in (r_B, r_F)]
    for blk in rows:
        if len(blk) != 4 or any(len(row) != 4 for row in blk):
            raise TemplateError(f"{id}: blocks must be 4x4")
    rational_function = bool(exclusions) or bool(derived)
    return RMatrixTemplate(id, "osp22", _params(params), "matrix", tuple(rows),
                           tuple(exclusions), dict(derived or {}), rational_function,
                           source, note)


def wedge_template(id, params, terms: Sequence, algebra="osp22", source="",
                   note="") -> RMatrixTemplate:
    return RMatrixTemplate(id, algebra, _params(params), "wedge", tuple(terms), (), {},
                           False, source, note)


def _params(params):
    out = []
    for p in params:
        out.append((p, "continuous") if isinstance(p, str) else tuple(p))
    return tuple(out)
