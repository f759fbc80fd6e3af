"""Builtin algebras: osp(2|2) and osp(1|2) + u(1)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..superkernel import ZERO, AlgebraError, SuperAlgebra, bracket, zeros

OSP22_GENERATORS = (("H", 0), ("X+", 0), ("X-", 0), ("B", 0),
                    ("V+", 1), ("V-", 1), ("W+", 1), ("W-", 1))

_h = Fraction(1, 2)

# one bracket per unordered pair; partners follow from graded antisymmetry
OSP22_BRACKETS = {
    ("H", "X+"): {"X+": 1}, ("H", "X-"): {"X-": -1}, ("X+", "X-"): {"H": -2},
    ("H", "V+"): {"V+": _h}, ("H", "V-"): {"V-": -_h},
    ("H", "W+"): {"W+": _h}, ("H", "W-"): {"W-": -_h},
    ("B", "V+"): {"V+": _h}, ("B", "V-"): {"V-": _h},
    ("B", "W+"): {"W+": -_h}, ("B", "W-"): {"W-": -_h},
    ("X+", "V-"): {"V+": -1}, ("X-", "V+"): {"V-": 1},
    ("X+", "W-"): {"W+": -1}, ("X-", "W+"): {"W-": 1},
    ("V+", "W-"): {"H": 1, "B": -1}, ("W+", "V-"): {"H": 1, "B": 1},
    ("V+", "W+"): {"X+": 1}, ("V-", "W-"): {"X-": 1},
}

OSP12_U1_GENERATORS = (("H", 0), ("X+", 0), ("X-", 0), ("Z", 0), ("Q+", 1), ("Q-", 1))

# images in osp(2|2); Z is central and has no image
OSP12_EMBEDDING = {
    "H": {"H": 1}, "X+": {"X+": 1}, "X-": {"X-": 1},
    "Q+": {"V+": _h, "W+": _h}, "Q-": {"V-": _h, "W-": _h},
}


@lru_cache(maxsize=None)
def osp22() -> SuperAlgebra:
    return SuperAlgebra.from_brackets("osp22", OSP22_GENERATORS, OSP22_BRACKETS)


def embed(vec_names: dict) -> tuple:
    """osp(2|2) image of a combination of osp(1|2) generators."""
    big = osp22()
    out = [ZERO] * big.dim
    for g, x in vec_names.items():
        for h, y in OSP12_EMBEDDING[g].items():
            out[big.index(h)] += Fraction(x) * Fraction(y)
    return tuple(out)


def _express(vec) -> dict[str, Fraction]:
    """Write an osp(2|2) element in terms of the embedded H, X+-, Q+-."""
    big = osp22()
    v = dict(zip(big.generator_names, vec))
    coeffs = {"H": v["H"], "X+": v["X+"], "X-": v["X-"],
              "Q+": 2 * v["V+"], "Q-": 2 * v["V-"]}
    if v["B"] or v["W+"] != v["V+"] or v["W-"] != v["V-"]:
        raise AlgebraError(f"element {vec} is outside the osp(1|2) image")
    return {g: x for g, x in coeffs.items() if x}


@lru_cache(maxsize=None)
def osp12_u1() -> SuperAlgebra:
    names = [g for g, _ in OSP12_U1_GENERATORS]
    n = len(names)
    c = zeros(n, n, n)
    big = osp22()
    for i, gi in enumerate(names):
        for j, gj in enumerate(names):
            if "Z" in (gi, gj):
                continue
            result = _express(bracket(big, embed({gi: 1}), embed({gj: 1})))
            for g, x in result.items():
                c[i][j][names.index(g)] = x
    frozen = tuple(tuple(tuple(col) for col in row) for row in c)
    parities = tuple(p for _, p in OSP12_U1_GENERATORS)
    return SuperAlgebra("osp12_u1", tuple(names), parities, frozen)


def abelian(n: int = 2, parities=None) -> SuperAlgebra:
    parities = tuple(parities) if parities is not None else (0,) * n
    c = tuple(tuple(tuple(ZERO for _ in range(n)) for _ in range(n)) for _ in range(n))
    return SuperAlgebra(f"abelian{n}", tuple(f"e{i + 1}" for i in range(n)), parities, c)


ALGEBRAS = {"osp22": osp22, "osp12_u1": osp12_u1}


def algebra(name: str) -> SuperAlgebra:
    try:
        return ALGEBRAS[name]()
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; known: {sorted(ALGEBRAS)}") from None
