"""Parametric residual operators for the three equation shapes.

* :class:`ScalarUPde` -- ``u_t = kappa*(u^n u_x)_x + (lam*u^n/x + sigma*x + tau*u^n)*u_x``
* :class:`ScalarVPde` -- ``v_t = A*(v_x/x^p)^m*v_xx + B*(v_x/x^p)^q + C0``
* :class:`PotentialSystem` -- ``v_x = x^p*u``, ``v_t = flux(x, u)*u_x + source(u)``

Each residual is assembled as ``time_derivative - sum(rhs_terms)``.  The same
term list is used by :func:`complete_time_derivative`, so a completed point has
a residual of exactly zero, and by the verifier, which scales residuals by the
sum of the absolute term values.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, replace
from typing import Union

from .errors import ConstraintError, SingularityError
from .numjet import cpow


def _c(value) -> complex:
    return complex(value)


def _fmt(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        r = z.real
        return str(int(r)) if r.is_integer() else f"{r:.6g}"
    return f"{z.real:.6g}{z.imag:+.6g}i"


def _inv(z: complex, what: str) -> complex:
    if z == 0:
        raise SingularityError(f"{what} is zero")
    return 1 / z


# -- jet points ----------------------------------------------------------------

@dataclass(frozen=True)
class ScalarJetPoint:
    x: complex
    t: complex
    w: complex
    w_x: complex
    w_t: complex
    w_xx: complex


@dataclass(frozen=True)
class SystemJetPoint:
    x: complex
    t: complex
    u: complex
    u_x: complex
    u_t: complex
    v: complex
    v_x: complex
    v_t: complex


# -- scalar equation in u ---------------------------------------------------------

@dataclass(frozen=True)
class ScalarUPde:
    n: complex
    kappa: complex = 1
    lam: complex = 0
    sigma: complex = 0
    tau: complex = 0

    kind = "scalar-u"

    def __post_init__(self):
        for name in ("n", "kappa", "lam", "sigma", "tau"):
            object.__setattr__(self, name, _c(getattr(self, name)))

    def rhs_terms(self, pt: ScalarJetPoint) -> list[complex]:
        u, ux = pt.w, pt.w_x
        un = cpow(u, self.n)
        terms = [
            self.kappa * self.n * cpow(u, self.n - 1) * ux * ux if self.n != 0 else 0j,
            self.kappa * un * pt.w_xx,
        ]
        if self.lam != 0:
            terms.append(self.lam * un * _inv(pt.x, "x") * ux)
        if self.sigma != 0:
            terms.append(self.sigma * pt.x * ux)
        if self.tau != 0:
            terms.append(self.tau * un * ux)
        return terms

    def rhs(self, pt: ScalarJetPoint) -> complex:
        return sum(self.rhs_terms(pt), 0j)

    def terms(self, pt: ScalarJetPoint) -> list[complex]:
        return [pt.w_t] + [-z for z in self.rhs_terms(pt)]

    def describe(self) -> str:
        s = f"u_t = {_fmt(self.kappa)}*(u^{_fmt(self.n)} u_x)_x"
        extra = []
        if self.lam != 0:
            extra.append(f"{_fmt(self.lam)}*u^n/x")
        if self.sigma != 0:
            extra.append(f"{_fmt(self.sigma)}*x")
        if self.tau != 0:
            extra.append(f"{_fmt(self.tau)}*u^n")
        if extra:
            s += " + (" + " + ".join(extra) + ")*u_x"
        return s

    def as_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "kappa": self.kappa, "lam": self.lam,
                "sigma": self.sigma, "tau": self.tau}


# -- scalar integrated equation in v -------------------------------------------

@dataclass(frozen=True)
class ScalarVPde:
    A: complex
    m: complex
    B: complex = 0
    q: complex = 0
    C0: complex = 0
    p: int = 1

    kind = "scalar-v"

    def __post_init__(self):
        for name in ("A", "m", "B", "q", "C0"):
            object.__setattr__(self, name, _c(getattr(self, name)))
        if self.p not in (0, 1):
            raise ConstraintError(f"x-weight p must be 0 or 1, got {self.p}")

    def _ratio(self, pt: ScalarJetPoint) -> complex:
        if self.p == 0:
            return pt.w_x
        return pt.w_x * _inv(pt.x, "x")

    def rhs_terms(self, pt: ScalarJetPoint) -> list[complex]:
        r = self._ratio(pt)
        if r == 0 and (self.m.real < 0 or (self.B != 0 and self.q.real < 0)):
            raise SingularityError("v_x = 0 with a negative exponent")
        terms = [self.A * cpow(r, self.m) * pt.w_xx]
        if self.B != 0:
            terms.append(self.B * cpow(r, self.q))
        if self.C0 != 0:
            terms.append(self.C0)
        return terms

    def rhs(self, pt: ScalarJetPoint) -> complex:
        return sum(self.rhs_terms(pt), 0j)

    def terms(self, pt: ScalarJetPoint) -> list[complex]:
        return [pt.w_t] + [-z for z in self.rhs_terms(pt)]

    def describe(self) -> str:
        r = "v_x" if self.p == 0 else "(v_x/x)"
        s = f"v_t = {_fmt(self.A)}*{r}^{_fmt(self.m)}*v_xx"
        if self.B != 0:
            s += f" + {_fmt(self.B)}*{r}^{_fmt(self.q)}"
        if self.C0 != 0:
            s += f" + {_fmt(self.C0)}"
        return s

    def as_dict(self) -> dict:
        return {"kind": self.kind, "A": self.A, "m": self.m, "B": self.B, "q": self.q,
                "C0": self.C0, "p": self.p}


# -- first-order potential systems ----------------------------------------------

@dataclass(frozen=True)
class PowerFlux:
    """``a * x^p * u^m``"""
    a: complex
    m: complex


@dataclass(frozen=True)
class ReciprocalFlux:
    """``c / (u - 1)``"""
    c: complex


@dataclass(frozen=True)
class PowerSource:
    """``b * u^q``"""
    b: complex
    q: complex


@dataclass(frozen=True)
class LogSource:
    """``b * ln(u)``"""
    b: complex


@dataclass(frozen=True)
class ConstSource:
    c0: complex


FluxForm = Union[PowerFlux, ReciprocalFlux]
SourceForm = Union[PowerSource, LogSource, ConstSource, None]


@dataclass(frozen=True)
class PotentialSystem:
    p: int
    flux: FluxForm
    source: SourceForm = None

    kind = "system"

    def __post_init__(self):
        if self.p not in (0, 1):
            raise ConstraintError(f"x-weight p must be 0 or 1, got {self.p}")
        if isinstance(self.flux, ReciprocalFlux) and self.p != 0:
            raise ConstraintError("reciprocal flux is only defined without x-weight (p = 0)")

    def weight(self, x: complex) -> complex:
        return x if self.p == 1 else 1 + 0j

    def flux_value(self, x: complex, u: complex) -> complex:
        f = self.flux
        if isinstance(f, ReciprocalFlux):
            if u == 1:
                raise SingularityError("reciprocal flux at u = 1")
            return _c(f.c) / (u - 1)
        if u == 0 and complex(f.m).real <= 0 and f.m != 0:
            raise SingularityError("u = 0 with a negative flux exponent")
        return _c(f.a) * self.weight(x) * cpow(u, f.m)

    def source_value(self, u: complex) -> complex:
        s = self.source
        if s is None:
            return 0j
        if isinstance(s, ConstSource):
            return _c(s.c0)
        if isinstance(s, LogSource):
            if u == 0:
                raise SingularityError("logarithmic source at u = 0")
            return _c(s.b) * cmath.log(u)
        if u == 0 and complex(s.q).real < 0:
            raise SingularityError("u = 0 with a negative source exponent")
        return _c(s.b) * cpow(u, s.q)

    def first_terms(self, pt: SystemJetPoint) -> list[complex]:
        return [pt.v_x, -self.weight(pt.x) * pt.u]

    def second_rhs_terms(self, pt: SystemJetPoint) -> list[complex]:
        terms = [self.flux_value(pt.x, pt.u) * pt.u_x]
        if self.source is not None:
            terms.append(self.source_value(pt.u))
        return terms

    def second_terms(self, pt: SystemJetPoint) -> list[complex]:
        return [pt.v_t] + [-z for z in self.second_rhs_terms(pt)]

    def describe(self) -> str:
        lhs = "v_x = x*u" if self.p == 1 else "v_x = u"
        f = self.flux
        if isinstance(f, ReciprocalFlux):
            flux = f"{_fmt(f.c)}/(u-1)"
        else:
            flux = f"{_fmt(f.a)}*{'x*' if self.p else ''}u^{_fmt(f.m)}"
        s = self.source
        if s is None:
            src = ""
        elif isinstance(s, ConstSource):
            src = f" + {_fmt(s.c0)}"
        elif isinstance(s, LogSource):
            src = f" + {_fmt(s.b)}*ln(u)"
        else:
            src = f" + {_fmt(s.b)}*u^{_fmt(s.q)}"
        return f"{lhs}, v_t = {flux}*u_x{src}"

    def as_dict(self) -> dict:
        def form(obj):
            if obj is None:
                return None
            d = {"form": type(obj).__name__}
            d.update(vars(obj))
            return d
        return {"kind": self.kind, "p": self.p, "flux": form(self.flux), "source": form(self.source)}


Equation = Union[ScalarUPde, ScalarVPde, PotentialSystem]


# -- residuals -------------------------------------------------------------------

def residual_scalar_u(eq: ScalarUPde, pt: ScalarJetPoint) -> complex:
    return pt.w_t - eq.rhs(pt)


def residual_scalar_v(eq: ScalarVPde, pt: ScalarJetPoint) -> complex:
    return pt.w_t - eq.rhs(pt)


def residual_system(eq: PotentialSystem, pt: SystemJetPoint) -> tuple[complex, complex]:
    r1 = pt.v_x - eq.weight(pt.x) * pt.u
    r2 = pt.v_t - sum(eq.second_rhs_terms(pt), 0j)
    return r1, r2


def residual(eq: Equation, pt) -> tuple[complex, ...]:
    """Residual(s) of any equation shape, always as a tuple."""
    if isinstance(eq, PotentialSystem):
        return residual_system(eq, pt)
    return (pt.w_t - eq.rhs(pt),)


def residual_terms(eq: Equation, pt) -> list[list[complex]]:
    """Individual signed terms of each residual; they sum to the residual."""
    if isinstance(eq, PotentialSystem):
        return [eq.first_terms(pt), eq.second_terms(pt)]
    return [eq.terms(pt)]


def complete_time_derivative(eq: Equation, pt):
    """Fill in time derivatives so ``pt`` lies exactly on ``eq``.

    Scalar points get ``w_t`` from the right-hand side.  System points get
    ``v_x`` and ``v_t`` from the two equations; ``u_t`` is left as supplied.
    """
    if isinstance(eq, PotentialSystem):
        v_x = eq.weight(pt.x) * pt.u
        pt = replace(pt, v_x=v_x)
        return replace(pt, v_t=sum(eq.second_rhs_terms(pt), 0j))
    return replace(pt, w_t=eq.rhs(pt))
