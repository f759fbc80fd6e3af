"""Exact evaluation of small rational expressions such as ``"(-2*K*L)/J"``.

Only names, integer literals, ``+ - * /``, unary minus and integer powers are
allowed.  Integer literals are lifted to :class:`Fraction`, so ``1/2`` stays exact.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Name, ast.Load, ast.Constant,
            ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.USub, ast.UAdd)


class ExprError(ValueError):
    pass


class _Lift(ast.NodeTransformer):
    def visit_Constant(self, node):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ExprError(f"only integer literals are allowed, got {node.value!r}")
        call = ast.Call(func=ast.Name(id="_F", ctx=ast.Load()),
                        args=[ast.Constant(node.value)], keywords=[])
        return ast.copy_location(call, node)


class Expr:
    """A compiled expression; call with a mapping of names to rationals."""

    def __init__(self, source: str):
        self.source = str(source).strip()
        try:
            tree = ast.parse(self.source, mode="eval")
        except SyntaxError as exc:
            raise ExprError(f"cannot parse {self.source!r}") from exc
        for node in ast.walk(tree):
            if not isinstance(node, _ALLOWED):
                raise ExprError(f"unsupported syntax in {self.source!r}: {type(node).__name__}")
            if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ExprError(f"only integer exponents allowed in {self.source!r}")
        self.names = frozenset(n.id for n in ast.walk(tree) if isinstance(n, ast.Name))
        lifted = ast.fix_missing_locations(_Lift().visit(tree))
        self._code = compile(lifted, f"<expr {self.source}>", "eval")

    def __call__(self, env: Mapping[str, Fraction]) -> Fraction:
        missing = self.names - env.keys()
        if missing:
            raise ExprError(f"{self.source!r}: unbound {sorted(missing)}")
        value = eval(self._code, {"__builtins__": {}, "_F": Fraction}, dict(env))
        return Fraction(value)

    def __repr__(self):
        return f"Expr({self.source!r})"


@lru_cache(maxsize=None)
def compile_expr(source: str) -> Expr:
    return Expr(source)


def evaluate(source, env: Mapping[str, Fraction]) -> Fraction:
    if isinstance(source, (int, Fraction)):
        return Fraction(source)
    return compile_expr(str(source))(env)
