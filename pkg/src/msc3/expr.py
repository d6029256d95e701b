"""Tiny arithmetic-expression compiler used by the family templates.

Expressions such as ``"alpha3 - 2*beta8"`` or ``"(1 + 2*alpha2)/2"`` are
compiled once into closures over an environment of Scalars.
"""
from __future__ import annotations

import ast
from functools import lru_cache

_BINOPS = {
    ast.Add: lambda x, y: x + y,
    ast.Sub: lambda x, y: x - y,
    ast.Mult: lambda x, y: x * y,
    ast.Div: lambda x, y: x / y,
}


def _compile(node):
    if isinstance(node, ast.Expression):
        return _compile(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        v = node.value
        return lambda env, ctx: ctx.scalar(v)
    if isinstance(node, ast.Name):
        name = node.id
        return lambda env, ctx: env[name]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        f = _compile(node.operand)
        return lambda env, ctx: -f(env, ctx)
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        op = _BINOPS[type(node.op)]
        f, g = _compile(node.left), _compile(node.right)
        return lambda env, ctx: op(f(env, ctx), g(env, ctx))
    if (isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow)
            and isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
        f, e = _compile(node.left), node.right.value
        return lambda env, ctx: f(env, ctx) ** e
    raise ValueError(f"unsupported expression node {ast.dump(node)}")


@lru_cache(maxsize=None)
def compile_expr(text: str):
    return _compile(ast.parse(text, mode="eval"))


@lru_cache(maxsize=None)
def names_in(text: str) -> frozenset:
    return frozenset(n.id for n in ast.walk(ast.parse(text, mode="eval")) if isinstance(n, ast.Name))


def evaluate(text: str, env: dict, ctx):
    return compile_expr(text)(env, ctx)

