"""Second-order jets over complex scalars.

A :class:`Jet` carries the value of a quantity together with its raw partial
derivatives with respect to the three independents ``x``, ``t`` and ``w``
(``w`` is the dependent-variable slot, standing for ``u`` or ``v``).  Second
derivatives are tracked only for the pairs ``xx``, ``xw`` and ``ww``; nothing
in the transformation formulas ever needs a second ``t`` derivative, and the
tracked set is closed under the ring operations.

Coefficients are plain partial derivatives, not Taylor coefficients, so the
jet of ``x*x`` has ``dxx == 2``.
"""

from __future__ import annotations

import cmath
import math

from .errors import SingularityError

#: Distance (in radians) from the negative real axis that counts as "on" the cut.
BRANCH_TOL = 1e-9

ROLES = ("x", "t", "w", "constant")

_FIELDS = ("v", "dx", "dt", "dw", "dxx", "dxw", "dww")


def as_complex(value) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise SingularityError(f"non-finite scalar {z!r}")
    return z


def is_integral(e: complex) -> bool:
    return e.imag == 0.0 and float(e.real).is_integer()


def near_branch_cut(z: complex) -> bool:
    """True when ``z`` sits on (or within BRANCH_TOL of) the principal cut."""
    return z.real < 0 and abs(abs(cmath.phase(z)) - math.pi) < BRANCH_TOL


def cpow(base: complex, exponent: complex) -> complex:
    """Principal-branch power; integral exponents avoid the log entirely."""
    exponent = complex(exponent)
    if is_integral(exponent):
        k = int(exponent.real)
        if k < 0 and base == 0:
            raise SingularityError("zero raised to a negative power")
        return complex(base) ** k
    if base == 0:
        if exponent.real > 0:
            return 0j
        raise SingularityError(f"zero raised to the power {exponent}")
    return cmath.exp(exponent * cmath.log(base))


class Jet:
    __slots__ = _FIELDS + ("warn",)

    def __init__(self, v=0j, dx=0j, dt=0j, dw=0j, dxx=0j, dxw=0j, dww=0j, warn=False):
        self.v = v
        self.dx = dx
        self.dt = dt
        self.dw = dw
        self.dxx = dxx
        self.dxw = dxw
        self.dww = dww
        self.warn = warn

    @classmethod
    def const(cls, value) -> "Jet":
        return cls(complex(value))

    def coeffs(self) -> dict[str, complex]:
        return {name: getattr(self, name) for name in _FIELDS}

    def __repr__(self):
        parts = ", ".join(f"{k}={getattr(self, k)!r}" for k in _FIELDS if getattr(self, k) != 0)
        return f"Jet({parts})"

    def _compose(self, f0: complex, f1: complex, f2: complex, warn: bool = False) -> "Jet":
        # chain rule for phi(self) given phi, phi', phi'' at self.v
        if not (cmath.isfinite(f0) and cmath.isfinite(f1) and cmath.isfinite(f2)):
            raise SingularityError(f"non-finite derivative at value {self.v!r}")
        dx, dw = self.dx, self.dw
        return Jet(
            f0,
            f1 * dx,
            f1 * self.dt,
            f1 * dw,
            f2 * dx * dx + f1 * self.dxx,
            f2 * dx * dw + f1 * self.dxw,
            f2 * dw * dw + f1 * self.dww,
            self.warn or warn,
        )

    def __add__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.v + other, self.dx, self.dt, self.dw,
                       self.dxx, self.dxw, self.dww, self.warn)
        return Jet(self.v + other.v, self.dx + other.dx, self.dt + other.dt,
                   self.dw + other.dw, self.dxx + other.dxx, self.dxw + other.dxw,
                   self.dww + other.dww, self.warn or other.warn)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.v, -self.dx, -self.dt, -self.dw,
                   -self.dxx, -self.dxw, -self.dww, self.warn)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            c = complex(other)
            return Jet(self.v * c, self.dx * c, self.dt * c, self.dw * c,
                       self.dxx * c, self.dxw * c, self.dww * c, self.warn)
        f, g = self, other
        return Jet(
            f.v * g.v,
            f.dx * g.v + f.v * g.dx,
            f.dt * g.v + f.v * g.dt,
            f.dw * g.v + f.v * g.dw,
            f.dxx * g.v + 2 * f.dx * g.dx + f.v * g.dxx,
            f.dxw * g.v + f.dx * g.dw + f.dw * g.dx + f.v * g.dxw,
            f.dww * g.v + 2 * f.dw * g.dw + f.v * g.dww,
            f.warn or g.warn,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        b = self.v
        if b == 0:
            raise SingularityError("division by a jet with zero value")
        r = 1 / b
        return self._compose(r, -r * r, 2 * r * r * r)

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            other = Jet.const(other)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return Jet.const(other) * self.reciprocal()

    def __pow__(self, exponent):
        return jet_pow(self, exponent)

    def log(self) -> "Jet":
        a = self.v
        if a == 0:
            raise SingularityError("logarithm of zero")
        r = 1 / a
        return self._compose(cmath.log(a), r, -r * r, near_branch_cut(a))

    def exp(self) -> "Jet":
        try:
            e = cmath.exp(self.v)
        except OverflowError as exc:
            raise SingularityError(f"exp overflow at {self.v!r}") from exc
        return self._compose(e, e, e)

    def sqrt(self) -> "Jet":
        a = self.v
        if a == 0:
            raise SingularityError("square root of zero (derivative unbounded)")
        s = cmath.sqrt(a)
        return self._compose(s, 0.5 / s, -0.25 / (s * a), near_branch_cut(a))


def jet_seed(value, role: str = "constant") -> Jet:
    z = as_complex(value)
    if role == "x":
        return Jet(z, dx=1 + 0j)
    if role == "t":
        return Jet(z, dt=1 + 0j)
    if role == "w":
        return Jet(z, dw=1 + 0j)
    if role == "constant":
        return Jet(z)
    raise ValueError(f"unknown seed role {role!r}; expected one of {ROLES}")


def jet_arith(a: Jet, b: Jet, op: str) -> Jet:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown jet operation {op!r}")


def _int_pow(a: Jet, k: int) -> Jet:
    if k < 0:
        return _int_pow(a, -k).reciprocal()
    result = Jet.const(1)
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def jet_pow(a: Jet, exponent) -> Jet:
    """``a ** exponent`` on the principal branch.

    Integral exponents go through repeated multiplication, so the result is
    branch-free and agrees exactly with the product rule.
    """
    e = as_complex(exponent)
    if is_integral(e):
        k = int(e.real)
        if k < 0 and a.v == 0:
            raise SingularityError("zero raised to a negative power")
        return _int_pow(a, k)
    b = a.v
    if b == 0:
        raise SingularityError(f"zero raised to the non-integer power {e}")
    f0 = cmath.exp(e * cmath.log(b))
    f1 = e * f0 / b
    f2 = (e - 1) * f1 / b
    return a._compose(f0, f1, f2, near_branch_cut(b))


def jet_elementary(a: Jet, fn: str) -> Jet:
    if fn == "ln":
        return a.log()
    if fn == "exp":
        return a.exp()
    if fn == "sqrt":
        return a.sqrt()
    raise ValueError(f"unknown elementary function {fn!r}")
