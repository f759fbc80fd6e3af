"""JSON files for algebras, r-matrices, cocycle bases and the catalog.

Rationals are written as ``"p"`` or ``"p/q"`` strings.  Algebra files look like::

    {"name": "sl2",
     "generators": [{"name": "H", "parity": 0}, ...],
     "brackets": [{"left": "H", "right": "X+", "result": {"X+": "1"}}, ...],
     "mirror": false}

Unlisted brackets are zero.  With ``"mirror": true`` each listed bracket also
fixes its graded-antisymmetric partner.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

from .bialgebra import Cobracket, RMatrix, cobracket_as_dict, rmatrix_from_entries
from .cybe import Tensor3
from .superkernel import AlgebraError, SuperAlgebra, format_rational, rational

log = logging.getLogger(__name__)


class FormatError(AlgebraError):
    """Malformed or inconsistent input file."""


def _read(source):
    if isinstance(source, dict):
        return source
    try:
        return json.loads(Path(source).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: invalid JSON ({exc})") from None


def _require(data, key, where):
    if key not in data:
        raise FormatError(f"{where}: missing key {key!r}")
    return data[key]


# --- algebras --------------------------------------------------------------------

def algebra_from_dict(data: dict) -> SuperAlgebra:
    """Build and validate an algebra; parity and graded-antisymmetry violations
    are rejected naming the first offending ``(left, right, result)`` triple."""
    name = _require(data, "name", "algebra")
    gens = _require(data, "generators", name)
    try:
        generators = [(g["name"], int(g["parity"])) for g in gens]
        brackets = {}
        for b in data.get("brackets", []):
            key = (b["left"], b["right"])
            if key in brackets:
                raise FormatError(f"{name}: bracket [{key[0]},{key[1]}] listed twice")
            brackets[key] = {g: rational(v) for g, v in b["result"].items()}
    except (KeyError, TypeError) as exc:
        raise FormatError(f"{name}: malformed generator or bracket entry ({exc})") from None
    alg = SuperAlgebra.from_brackets(name, generators, brackets, mirror=bool(data.get("mirror")))
    _check_structure(alg)
    return alg


def _check_structure(alg: SuperAlgebra) -> None:
    names, p, c = alg.generator_names, alg.parities, alg.c
    n = alg.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if c[i][j][k] and (p[i] + p[j] - p[k]) % 2:
                    raise FormatError(
                        f"{alg.name}: parity violation in [{names[i]},{names[j]}] -> {names[k]}: "
                        f"grades {p[i]} + {p[j]} != {p[k]}")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if c[i][j][k] != -alg.z(i, j) * c[j][i][k]:
                    raise FormatError(
                        f"{alg.name}: graded antisymmetry violation for ({names[i]}, {names[j]}, "
                        f"{names[k]}): c = {format_rational(c[i][j][k])} but partner gives "
                        f"{format_rational(-alg.z(i, j) * c[j][i][k])}")


def load_algebra(source) -> SuperAlgebra:
    return algebra_from_dict(_read(source))


def algebra_to_dict(alg: SuperAlgebra) -> dict:
    names = alg.generator_names
    brackets = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            result = {names[k]: format_rational(v) for k, v in alg.sparse[i][j]}
            if result:
                brackets.append({"left": names[i], "right": names[j], "result": result})
    return {"name": alg.name,
            "generators": [{"name": g, "parity": p} for g, p in zip(names, alg.parities)],
            "brackets": brackets}


# --- r-matrices --------------------------------------------------------------------

def rmatrix_from_dict(data: dict, resolve_algebra=None) -> RMatrix:
    """``{"algebra": name-or-inline-algebra, "entries": [{row, col, value}]}``.

    Entries are projected to the even graded-antisymmetric part; a warning is
    logged if that changes anything.
    """
    ref = _require(data, "algebra", "r-matrix")
    if isinstance(ref, dict):
        alg = algebra_from_dict(ref)
    else:
        if resolve_algebra is None:
            from .catalog import algebra as resolve_algebra
        try:
            alg = resolve_algebra(ref)
        except KeyError as exc:
            raise FormatError(str(exc.args[0])) from None
    try:
        entries = [(e["row"], e["col"], e["value"]) for e in _require(data, "entries", "r-matrix")]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"r-matrix: malformed entry ({exc})") from None
    return rmatrix_from_entries(alg, entries, warn=True)


def load_rmatrix(source, resolve_algebra=None) -> RMatrix:
    return rmatrix_from_dict(_read(source), resolve_algebra)


def rmatrix_to_dict(r: RMatrix) -> dict:
    names = r.alg.generator_names
    return {"algebra": r.alg.name,
            "entries": [{"row": names[i], "col": names[j], "value": format_rational(v)}
                        for i, j, v in r.entries]}


# --- other exports -------------------------------------------------------------------

def cobracket_to_dict(f: Cobracket) -> dict:
    return dict(cobracket_as_dict(f))


def tensor3_to_list(T: Tensor3) -> list[dict]:
    return [{"i": i, "j": j, "k": k, "value": v} for i, j, k, v in T.named_listing()]


def cocycle_basis_to_dict(alg: SuperAlgebra, space) -> dict:
    return {"algebra": alg.name, "dimension": space.dimension,
            "equations": space.equations, "unknowns": space.unknowns,
            "basis": [cobracket_to_dict(f)["entries"] for f in space.basis]}


def catalog_to_dict() -> dict:
    from . import catalog

    return {"algebras": {n: algebra_to_dict(catalog.algebra(n)) for n in sorted(catalog.ALGEBRAS)},
            "templates": [t.to_dict() for t in catalog.TEMPLATES.values()],
            "printed_forms": [{"template": p.template.id, "family": p.family,
                               "param_map": dict(p.param_map), "agrees": p.agrees,
                               "note": p.note} for p in catalog.PRINTED_FORMS],
            "witnesses": [w.to_dict() for w in catalog.witness_list()]}


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
