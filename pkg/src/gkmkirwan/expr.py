"""Small expression language for naming classes on the command line.

Grammar is Python's: ``u1*u2 + t(x, 1) - 2*x**2``.  Available names:

``u1 .. ud``
    the module generators (the i-th coordinate at every fixed point);
``x``
    the class whose restrictions are the moment values paired with the
    coordinates, i.e. the equivariant symplectic class;
``t(a, b)``
    on a product space, the external product of ``a`` evaluated on the
    first factor and ``b`` on the second.

Integer literals are scalars; ``/`` is allowed between scalars only.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from typing import Union

from .cohomology import EquivariantClass, kunneth, module_class, symplectic_class, unit
from .space import GKMSpace


class ExpressionError(ValueError):
    pass


Value = Union[Fraction, EquivariantClass]


def _name(space: GKMSpace, ident: str) -> EquivariantClass:
    if ident == "x":
        return symplectic_class(space)
    m = re.fullmatch(r"u(\d+)", ident)
    if m and 1 <= int(m.group(1)) <= space.rank:
        return module_class(space, int(m.group(1)) - 1)
    raise ExpressionError(f"unknown name {ident!r}")


def _as_class(v: Value, space: GKMSpace, like: EquivariantClass) -> EquivariantClass:
    if isinstance(v, EquivariantClass):
        return v
    if like.degree != 0:
        raise ExpressionError("cannot add a scalar to a class of positive degree")
    return v * unit(space)


def _eval(node: ast.AST, space: GKMSpace) -> Value:
    if isinstance(node, ast.Expression):
        return _eval(node.body, space)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        return _name(space, node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, space)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a, b = _eval(node.left, space), _eval(node.right, space)
        if isinstance(node.op, ast.Pow):
            if not isinstance(b, Fraction) or b.denominator != 1 or b < 0:
                raise ExpressionError("exponents must be non-negative integers")
            return a ** int(b)
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            if isinstance(b, Fraction) and b != 0:
                return a * (1 / b)
            raise ExpressionError("division only by nonzero scalars")
        if isinstance(node.op, (ast.Add, ast.Sub)):
            if isinstance(a, Fraction) and isinstance(b, Fraction):
                return a + b if isinstance(node.op, ast.Add) else a - b
            ref = a if isinstance(a, EquivariantClass) else b
            a, b = _as_class(a, space, ref), _as_class(b, space, ref)
            if a.degree != b.degree:
                raise ExpressionError(f"cannot add classes of degrees {a.degree} and {b.degree}")
            return a + b if isinstance(node.op, ast.Add) else a - b
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "t":
        if space.factors is None:
            raise ExpressionError("t(a, b) needs a product space")
        if len(node.args) != 2 or node.keywords:
            raise ExpressionError("t takes exactly two arguments")
        left, right = space.factors.left, space.factors.right
        a = _eval(node.args[0], left)
        b = _eval(node.args[1], right)
        a = a * unit(left) if isinstance(a, Fraction) else a
        b = b * unit(right) if isinstance(b, Fraction) else b
        return kunneth(a, b, space)
    raise ExpressionError(f"unsupported syntax: {ast.dump(node)[:60]}")


def evaluate(text: str, space: GKMSpace) -> EquivariantClass:
    """Evaluate ``text`` to a homogeneous class on ``space``."""
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as err:
        raise ExpressionError(f"cannot parse {text!r}: {err.msg}") from None
    v = _eval(tree, space)
    return v * unit(space) if isinstance(v, Fraction) else v
