"""Expression trees for transformation components.

Expressions are immutable data.  They can be evaluated to plain complex values
or to :class:`~pmt.numjet.Jet` objects, printed to (and parsed from) a
parenthesized prefix text such as ``(mul (pow x (param k)) w)``, and built in
Python with ordinary operators::

    >>> k = Param("k")
    >>> str(X ** k * W)
    '(mul (pow x (param k)) w)'

Exponents are restricted to constants and parameters.  Anything that would
need a computed exponent is expressed through a derived parameter instead.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from . import numjet
from .errors import SingularityError, UnboundParameterError
from .numjet import Jet, cpow

VARIABLES = ("x", "t", "u", "v", "w")


def _coerce(value) -> "Expr":
    if isinstance(value, Expr):
        return value
    return Constant(complex(value))


class Expr:
    __slots__ = ()

    def __add__(self, other):
        return Add(self, _coerce(other))

    def __radd__(self, other):
        return Add(_coerce(other), self)

    def __sub__(self, other):
        return Sub(self, _coerce(other))

    def __rsub__(self, other):
        return Sub(_coerce(other), self)

    def __mul__(self, other):
        return Mul(self, _coerce(other))

    def __rmul__(self, other):
        return Mul(_coerce(other), self)

    def __truediv__(self, other):
        return Div(self, _coerce(other))

    def __rtruediv__(self, other):
        return Div(_coerce(other), self)

    def __neg__(self):
        return Mul(Constant(-1 + 0j), self)

    def __pow__(self, exponent):
        if isinstance(exponent, str):
            exponent = Param(exponent)
        return PowConst(self, _coerce(exponent))

    def __str__(self):
        return to_text(self)

    def children(self) -> tuple["Expr", ...]:
        return ()

    def walk(self) -> Iterator["Expr"]:
        yield self
        for child in self.children():
            yield from child.walk()


@dataclass(frozen=True, eq=True, repr=False)
class Constant(Expr):
    value: complex


@dataclass(frozen=True, eq=True, repr=False)
class Param(Expr):
    name: str


@dataclass(frozen=True, eq=True, repr=False)
class Var(Expr):
    name: str

    def __post_init__(self):
        if self.name not in VARIABLES:
            raise ValueError(f"unknown variable {self.name!r}")


@dataclass(frozen=True, eq=True, repr=False)
class _Binary(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)


class Add(_Binary):
    pass


class Sub(_Binary):
    pass


class Mul(_Binary):
    pass


class Div(_Binary):
    pass


@dataclass(frozen=True, eq=True, repr=False)
class PowConst(Expr):
    base: Expr
    exponent: Expr

    def __post_init__(self):
        if not isinstance(self.exponent, (Constant, Param)):
            raise TypeError("exponents must be constants or parameters")

    def children(self):
        return (self.base,)


@dataclass(frozen=True, eq=True, repr=False)
class _Unary(Expr):
    arg: Expr

    def children(self):
        return (self.arg,)


class Ln(_Unary):
    pass


class Exp(_Unary):
    pass


class Sqrt(_Unary):
    pass


X, T, U, V, W = (Var(n) for n in ("x", "t", "u", "v", "w"))


def ln(e) -> Expr:
    return Ln(_coerce(e))


def exp(e) -> Expr:
    return Exp(_coerce(e))


def sqrt(e) -> Expr:
    return Sqrt(_coerce(e))


for _cls in (Constant, Param, Var, Add, Sub, Mul, Div, PowConst, Ln, Exp, Sqrt):
    _cls.__repr__ = lambda self: f"Expr<{to_text(self)}>"


def free_vars(e: Expr) -> frozenset[str]:
    return frozenset(n.name for n in e.walk() if isinstance(n, Var))


def free_params(e: Expr) -> frozenset[str]:
    names = set()
    for node in e.walk():
        if isinstance(node, Param):
            names.add(node.name)
        elif isinstance(node, PowConst) and isinstance(node.exponent, Param):
            names.add(node.exponent.name)
    return frozenset(names)


def _param(name: str, params: Mapping[str, complex]) -> complex:
    try:
        return params[name]
    except KeyError:
        raise UnboundParameterError(name) from None


def _exponent(e: PowConst, params) -> complex:
    if isinstance(e.exponent, Constant):
        return e.exponent.value
    return complex(_param(e.exponent.name, params))


class BranchLog:
    """Collects branch-cut proximity events during value evaluation."""

    def __init__(self, margin: float = numjet.BRANCH_TOL):
        self.margin = margin
        self.events = 0

    def check(self, z: complex) -> None:
        if z.real < 0 and abs(abs(cmath.phase(z)) - cmath.pi) < self.margin:
            self.events += 1


def eval_value(e: Expr, base: Mapping[str, complex], params: Mapping[str, complex] = {},
               branch: BranchLog | None = None) -> complex:
    """Evaluate ``e`` to a complex number at the point ``base``."""
    if isinstance(e, Constant):
        return e.value
    if isinstance(e, Var):
        return complex(base[e.name])
    if isinstance(e, Param):
        return complex(_param(e.name, params))
    if isinstance(e, _Binary):
        a = eval_value(e.left, base, params, branch)
        b = eval_value(e.right, base, params, branch)
        if isinstance(e, Add):
            return a + b
        if isinstance(e, Sub):
            return a - b
        if isinstance(e, Mul):
            return a * b
        if b == 0:
            raise SingularityError(f"division by zero in {to_text(e)}")
        return a / b
    if isinstance(e, PowConst):
        a = eval_value(e.base, base, params, branch)
        p = _exponent(e, params)
        if branch is not None and not numjet.is_integral(p):
            branch.check(a)
        return cpow(a, p)
    a = eval_value(e.arg, base, params, branch)
    if isinstance(e, Exp):
        return cmath.exp(a)
    if a == 0:
        raise SingularityError(f"{type(e).__name__.lower()} of zero in {to_text(e)}")
    if branch is not None:
        branch.check(a)
    if isinstance(e, Ln):
        return cmath.log(a)
    return cmath.sqrt(a)


DEFAULT_ROLES = {"x": "x", "t": "t", "w": "w"}


def eval_jet(e: Expr, base: Mapping[str, complex], params: Mapping[str, complex] = {},
             roles: Mapping[str, str] = DEFAULT_ROLES) -> Jet:
    """Evaluate ``e`` to a jet.

    ``roles`` says which seed each variable gets (``x``, ``t``, ``w`` or
    ``constant``); variables missing from ``roles`` are constants.  System
    components in four variables are handled by calling this once per
    dependent variable with that variable in the ``w`` role.
    """
    if isinstance(e, Constant):
        return Jet(e.value)
    if isinstance(e, Var):
        return numjet.jet_seed(base[e.name], roles.get(e.name, "constant"))
    if isinstance(e, Param):
        return Jet(complex(_param(e.name, params)))
    if isinstance(e, _Binary):
        a = eval_jet(e.left, base, params, roles)
        b = eval_jet(e.right, base, params, roles)
        if isinstance(e, Add):
            return a + b
        if isinstance(e, Sub):
            return a - b
        if isinstance(e, Mul):
            return a * b
        return a / b
    if isinstance(e, PowConst):
        return numjet.jet_pow(eval_jet(e.base, base, params, roles), _exponent(e, params))
    a = eval_jet(e.arg, base, params, roles)
    if isinstance(e, Ln):
        return a.log()
    if isinstance(e, Exp):
        return a.exp()
    return a.sqrt()


# -- text form ---------------------------------------------------------------

_BINARY_NAMES = {Add: "add", Sub: "sub", Mul: "mul", Div: "div"}
_UNARY_NAMES = {Ln: "ln", Exp: "exp", Sqrt: "sqrt"}


def _number(z: complex) -> str:
    if z.imag == 0:
        return repr(z.real)
    return f"(complex {z.real!r} {z.imag!r})"


def to_text(e: Expr) -> str:
    if isinstance(e, Constant):
        return _number(e.value)
    if isinstance(e, Param):
        return f"(param {e.name})"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, _Binary):
        return f"({_BINARY_NAMES[type(e)]} {to_text(e.left)} {to_text(e.right)})"
    if isinstance(e, PowConst):
        return f"(pow {to_text(e.base)} {to_text(e.exponent)})"
    return f"({_UNARY_NAMES[type(e)]} {to_text(e.arg)})"


_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")


def _tokens(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"cannot tokenize expression at offset {pos}: {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse(text: str) -> Expr:
    """Inverse of :func:`to_text`."""
    tokens = _tokens(text)
    try:
        expr, pos = _parse_at(tokens, 0)
    except IndexError:
        raise ValueError(f"unexpected end of expression: {text!r}") from None
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in expression: {tokens[pos:]}")
    return expr


def _parse_at(tokens: list[str], pos: int) -> tuple[Expr, int]:
    if pos >= len(tokens):
        raise ValueError("unexpected end of expression")
    tok = tokens[pos]
    if tok == ")":
        raise ValueError("unexpected ')'")
    if tok != "(":
        if tok in VARIABLES:
            return Var(tok), pos + 1
        try:
            return Constant(complex(float(tok))), pos + 1
        except ValueError:
            raise ValueError(f"unknown atom {tok!r}") from None
    head = tokens[pos + 1]
    pos += 2
    if head == "param":
        node, pos = Param(tokens[pos]), pos + 1
    elif head == "complex":
        node, pos = Constant(complex(float(tokens[pos]), float(tokens[pos + 1]))), pos + 2
    else:
        args = []
        while tokens[pos] != ")":
            arg, pos = _parse_at(tokens, pos)
            args.append(arg)
        node = _build(head, args)
    if tokens[pos] != ")":
        raise ValueError(f"expected ')' after {head}")
    return node, pos + 1


def _build(head: str, args: list[Expr]) -> Expr:
    for cls, name in _BINARY_NAMES.items():
        if head == name:
            if len(args) != 2:
                raise ValueError(f"{head} takes two arguments")
            return cls(*args)
    for cls, name in _UNARY_NAMES.items():
        if head == name:
            if len(args) != 1:
                raise ValueError(f"{head} takes one argument")
            return cls(args[0])
    if head == "pow":
        if len(args) != 2:
            raise ValueError("pow takes two arguments")
        return PowConst(*args)
    raise ValueError(f"unknown operator {head!r}")


def rename(e: Expr, mapping: Mapping[str, str]) -> Expr:
    """Return ``e`` with variables renamed per ``mapping``."""
    if isinstance(e, Var):
        return Var(mapping.get(e.name, e.name))
    if isinstance(e, _Binary):
        return type(e)(rename(e.left, mapping), rename(e.right, mapping))
    if isinstance(e, PowConst):
        return PowConst(rename(e.base, mapping), e.exponent)
    if isinstance(e, _Unary):
        return type(e)(rename(e.arg, mapping))
    return e
