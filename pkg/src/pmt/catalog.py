"""Inventory of transformations, equation pairs and closed-form solutions.

Every :class:`CatalogEntry` is data: a transformation template whose
exponents and coefficients are (derived) parameters, a function that produces
the unprimed/primed equations for a parameter binding, the parameter
constraints, a default sweep and any cyclic orders.

Orientation: solutions of the *unprimed* equation are pushed forward through
the transformation and must satisfy the *primed* equation.
"""

from __future__ import annotations

import difflib
import json
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

from .errors import ConstraintError, DomainError, PmtError
from .expr import Expr, Param, T, U, V, W, X, eval_jet, exp, ln, sqrt, to_text
from .pde import (ConstSource, Equation, LogSource, PotentialSystem, PowerFlux, PowerSource,
                  ReciprocalFlux, ScalarJetPoint, ScalarUPde, ScalarVPde)
from .numjet import cpow
from .transform import ScalarTransform, SystemTransform

Params = Mapping[str, complex]

DEFAULT_RANGES = {
    "x": (0.7, 1.6),
    "t": (0.5, 2.0),
    "u": (0.5, 2.0),
    "v": (0.5, 2.0),
}

#: Magnitude interval for free derivatives; the sign is drawn separately.
DERIVATIVE_RANGE = (0.5, 2.0)


def lambda_of_mu(n, mu) -> complex:
    """Coefficient of the ``u^n u_x / x`` term of the target equation of the power map.

    The map ``mu -> lambda`` is a trace-free Moebius transformation, hence an
    involution.
    """
    n, mu = complex(n), complex(mu)
    den = mu * n + n + 2
    if den == 0:
        raise ConstraintError(
            f"mu*n + n + 2 = 0 (n={n}, mu={mu}); when mu = -(n+2)/n use the logarithmic map T2.20")
    return (3 * n + 4 - (n + 2) * mu) / den


def scaling_parameter_map(c1, c3, c5, eq: ScalarUPde) -> ScalarUPde:
    """Equation satisfied by ``u(x, t)`` when ``c5*u`` solves ``eq`` in ``(c1*x, c3*t)``."""
    c1, c3, c5 = complex(c1), complex(c3), complex(c5)
    if c1 * c3 * c5 == 0:
        raise ConstraintError("scaling requires c1*c3*c5 != 0")
    c5n = cpow(c5, eq.n)
    return ScalarUPde(
        n=eq.n,
        kappa=eq.kappa * c3 / c1 ** 2 * c5n,
        lam=eq.lam * c3 / c1 ** 2 * c5n,
        sigma=eq.sigma * c3,
        tau=eq.tau * c3 / c1 * c5n,
    )


def porous(n, mu) -> ScalarUPde:
    """``u_t = (u^n u_x)_x + (mu/x) u^n u_x``."""
    return ScalarUPde(n, 1, mu)


def potential_system(n, mu) -> PotentialSystem:
    """Potential form of the radial porous medium equation (``n != -1``)."""
    n, mu = complex(n), complex(mu)
    if n == -1:
        raise ConstraintError("the power-source potential system requires n != -1")
    return PotentialSystem(1, PowerFlux(1, n), PowerSource((mu - 1) / (n + 1), n + 1))


def potential_system_log(mu) -> PotentialSystem:
    return PotentialSystem(1, PowerFlux(1, -1), LogSource(complex(mu) - 1))


def integrated_radial(n) -> ScalarVPde:
    n = complex(n)
    return ScalarVPde(1, n, -n / (n + 2), n + 1, 0, 1)


@dataclass(frozen=True)
class Constraint:
    check: Callable[[Params], bool]
    message: str


@dataclass(frozen=True)
class CyclicClaim:
    binding: dict
    order: int


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str
    anchor: str
    free_params: tuple[str, ...]
    transform: ScalarTransform | SystemTransform
    derive: Callable[[Params], dict]
    equations: Callable[[Params], tuple[Equation, Equation]]
    constraints: tuple[Constraint, ...] = ()
    sweep: tuple[dict, ...] = ({},)
    cyclic: tuple[CyclicClaim, ...] = ()
    iterate_formula: Optional[Callable[[Params, Sequence[complex], int], tuple]] = None
    formula_steps: tuple[int, ...] = ()
    derived_doc: Mapping[str, str] = field(default_factory=dict)
    ranges: Mapping[str, tuple[float, float]] = field(default_factory=dict)
    sample_filter: Optional[Callable[..., bool]] = None
    positive_derivatives: bool = False
    note: str = ""

    @property
    def theorem_applicable(self) -> bool:
        return self.kind == "scalar-u" and not self.transform.p_depends_on_w


@dataclass(frozen=True)
class VerificationCase:
    entry: CatalogEntry
    params: dict
    transform: ScalarTransform | SystemTransform
    unprimed: Equation
    primed: Equation
    ranges: dict
    sample_filter: Optional[Callable[..., bool]]

    @property
    def id(self) -> str:
        return self.entry.id

    @property
    def kind(self) -> str:
        return self.entry.kind

    def with_primed(self, primed: Equation) -> "VerificationCase":
        return VerificationCase(self.entry, self.params, self.transform, self.unprimed, primed,
                                self.ranges, self.sample_filter)

    def with_transform(self, transform) -> "VerificationCase":
        return VerificationCase(self.entry, self.params, transform, self.unprimed, self.primed,
                                self.ranges, self.sample_filter)


# -- helpers for entry definitions -------------------------------------------------

def _p(name: str) -> Param:
    return Param(name)


k, n_, eps, c_ = _p("k"), _p("n"), _p("eps"), _p("c")


def _no(values, name: str, message: str) -> Constraint:
    return Constraint(lambda p: all(complex(p[name]) != v for v in values), message)


def _n_sweep(*excluded) -> tuple[dict, ...]:
    return tuple({"n": n} for n in (-3, -2, 1, 2) if n not in excluded)


def _iterate_2_10(params, pt, N):
    x, t, u = pt
    a = complex(params["k"]) + 1
    e = a ** N
    return (_cp(x, e), t, _cp(x, 2 - 2 * e) * u / a ** (2 * N))


def _iterate_3_12(params, pt, steps):
    if steps % 2:
        raise ValueError("the closed form covers an even number of applications")
    N = steps // 2
    x, t, u, v = pt
    en = complex(params["eps"]) ** N
    return (_cp(x, en), t, u * _cp(x, 2 * (1 - en)), en * v + 2 * (en - 1) * t)


def _cp(base, e):
    return cpow(complex(base), complex(e))


def _lam12(n):
    n = complex(n)
    return n * n / (4 * (n + 1) ** 2), -n / (2 * (n + 1) ** 2)


_RADIAL_MU = "(3n+4)/(n+2)"


def _entries() -> list[CatalogEntry]:
    E = []
    add = E.append

    # ---- scalar equations in u -------------------------------------------------------
    add(CatalogEntry(
        id="SCALE", kind="scalar-u",
        anchor="may be filtered out of equations arising",
        free_params=("c1", "c3", "c5", "n", "mu"),
        transform=ScalarTransform(_p("c1") * X, _p("c3") * T, _p("c5") * W),
        derive=lambda p: dict(p),
        equations=lambda p: (scaling_parameter_map(p["c1"], p["c3"], p["c5"], porous(p["n"], p["mu"])),
                             porous(p["n"], p["mu"])),
        constraints=(Constraint(lambda p: complex(p["c1"]) * complex(p["c3"]) * complex(p["c5"]) != 0,
                                "requires c1*c3*c5 != 0"),),
        sweep=({"c1": 2, "c3": 3, "c5": 0.5, "n": 2, "mu": 1},
               {"c1": 0.5, "c3": 2, "c5": 3, "n": -3, "mu": 0.5},
               {"c1": 1.5, "c3": 0.5, "c5": 2, "n": 1, "mu": -1},
               {"c1": 2, "c3": 1, "c5": 1j, "n": 2, "mu": 1}),
        note="linear scalings x'=c1 x, t'=c3 t, u'=c5 u with the shifts c2=c6=0",
    ))
    for gid, P, Q, Wx, doc in (
        ("G1", X, T + eps, W, "t-translation"),
        ("G2", exp(eps) * X, exp(2 * eps) * T, W, "scaling generated by (x, 2t, 0)"),
        ("G3", X, exp(n_ * eps) * T, exp(-1 * eps) * W, "scaling generated by (0, nt, -u)"),
    ):
        add(CatalogEntry(
            id=gid, kind="scalar-u",
            anchor="components of the symmetry generator",
            free_params=("eps", "n", "mu"),
            transform=ScalarTransform(P, Q, Wx),
            derive=lambda p: dict(p),
            equations=lambda p: (porous(p["n"], p["mu"]),) * 2,
            constraints=(_no([0], "n", "requires n != 0"),),
            sweep=tuple({"eps": 0.3, "n": n, "mu": 0.5} for n in (-3, -2, 1, 2)),
            note=f"finite form of the {doc}; self-map of the radial porous medium equation",
        ))

    E29 = porous(-1, 1)
    add(CatalogEntry(
        id="T2.10", kind="scalar-u",
        anchor="is mapped into itself by the transformation",
        free_params=("k",),
        transform=ScalarTransform(X ** _p("a"), T, _p("c") * X ** _p("b") * W),
        derive=lambda p: {"k": p["k"], "a": p["k"] + 1, "b": -2 * p["k"],
                          "c": 1 / (p["k"] + 1) ** 2},
        derived_doc={"a": "k+1", "b": "-2k", "c": "1/(k+1)^2"},
        equations=lambda p: (E29, E29),
        constraints=(_no([-1], "k", "requires k != -1"),),
        sweep=({"k": 1}, {"k": 2}, {"k": -2}, {"k": -1 + 1j}),
        cyclic=(CyclicClaim({"k": -2}, 2), CyclicClaim({"k": -1 + 1j}, 4)),
        iterate_formula=_iterate_2_10, formula_steps=(1, 2, 3, 4),
        note="x'=x^(k+1), u'=x^(-2k) u/(k+1)^2; cyclic when (k+1)^N = 1",
    ))
    add(CatalogEntry(
        id="T2.13", kind="scalar-u",
        anchor="connected with a well known",
        free_params=("k",),
        transform=ScalarTransform(k * ln(X), T, W * X ** 2 / k ** 2),
        derive=lambda p: dict(p),
        equations=lambda p: (E29, ScalarUPde(-1)),
        constraints=(_no([0], "k", "requires k != 0"),),
        sweep=({"k": 1}, {"k": 2}, {"k": -2}),
        note="x'=k ln x, u'=u x^2/k^2 onto u'_t=(u'_x/u')_x",
    ))
    add(CatalogEntry(
        id="T2.14", kind="scalar-u",
        anchor="x' =\\frac{x^{k}}{\\sqrt{t}}, \\quad t' =\\ln t",
        free_params=("k",),
        transform=ScalarTransform(X ** k / sqrt(T), ln(T), W * X ** _p("b") / k ** 2),
        derive=lambda p: {"k": p["k"], "b": 2 * (1 - p["k"])},
        derived_doc={"b": "2(1-k)"},
        equations=lambda p: (E29, ScalarUPde(-1, 1, 1, 0.5)),
        constraints=(_no([0], "k", "requires k != 0"),),
        sweep=({"k": 1}, {"k": 2}, {"k": -2}),
    ))
    add(CatalogEntry(
        id="T2.15", kind="scalar-u",
        anchor="x' =\\frac{k\\ln |x|}{\\sqrt{t}}",
        free_params=("k",),
        transform=ScalarTransform(k * ln(X) / sqrt(T), ln(T), W * X ** 2 / k ** 2),
        derive=lambda p: dict(p),
        equations=lambda p: (E29, ScalarUPde(-1, 1, 0, 0.5)),
        constraints=(_no([0], "k", "requires k != 0"),),
        sweep=({"k": 1}, {"k": 2}, {"k": -2}),
    ))
    add(CatalogEntry(
        id="T2.16", kind="scalar-u",
        anchor="Result (2.16) can also be obtained",
        free_params=(),
        transform=ScalarTransform(exp(X) / sqrt(T), ln(T), W * exp(-2 * X)),
        derive=lambda p: {},
        equations=lambda p: (porous(-1, 0), ScalarUPde(-1, 1, 1, 0.5)),
    ))
    add(CatalogEntry(
        id="T2.17", kind="scalar-u",
        anchor="The continuous symmetry which corresponds",
        free_params=("n", "C"),
        transform=ScalarTransform(
            (X ** _p("a") + _p("C")) ** _p("ia"), T,
            W * X ** _p("b") * (X ** _p("a") + _p("C")) ** _p("d")),
        derive=lambda p: {"n": p["n"], "C": p["C"], "a": (2 * p["n"] + 2) / (p["n"] + 2),
                          "ia": (p["n"] + 2) / (2 * p["n"] + 2), "b": 2 / (p["n"] + 2),
                          "d": -1 / (p["n"] + 1)},
        derived_doc={"a": "(2n+2)/(n+2)", "ia": "(n+2)/(2n+2)", "b": "2/(n+2)", "d": "-1/(n+1)"},
        equations=lambda p: (porous(p["n"], (3 * p["n"] + 4) / (p["n"] + 2)),) * 2,
        constraints=(_no([-2, -1, 0], "n", "requires n != -2,-1,0"),),
        sweep=tuple({"n": n, "C": C} for n in (-3, 1, 2) for C in (0, 1)),
        note=f"self-map when mu = {_RADIAL_MU}",
    ))

    def power_map_params(p):
        n, mu = complex(p["n"]), complex(p["mu"])
        g = mu * n + n + 2
        return {"n": n, "mu": mu, "c": (2 * n + 2) / g, "a": g / (2 * n + 2),
                "b": (mu - 1) / (n + 1)}

    power_doc = {"c": "(2n+2)/(mu n+n+2)", "a": "(mu n+n+2)/(2n+2)", "b": "(mu-1)/(n+1)"}
    power_constraints = (
        Constraint(lambda p: complex(p["mu"]) * complex(p["n"]) + complex(p["n"]) + 2 != 0,
                   "requires mu*n+n+2 != 0 (When mu = -(n+2)/n the logarithmic map applies)"),
        _no([-1], "n", "requires n != -1"),
    )
    power_sweep = tuple({"n": n, "mu": mu} for n in (-3, -2, 1, 2) for mu in (0.5, 2, -1))
    add(CatalogEntry(
        id="T2.18", kind="scalar-u",
        anchor="maps the equation",
        free_params=("n", "mu"),
        transform=ScalarTransform(_p("c") * X ** _p("a"), T, X ** _p("b") * W),
        derive=power_map_params, derived_doc=power_doc,
        equations=lambda p: (porous(p["n"], p["mu"]), porous(p["n"], lambda_of_mu(p["n"], p["mu"]))),
        constraints=power_constraints,
        sweep=power_sweep,
        note="target coefficient lambda = (3n+4-n mu-2 mu)/(mu n+n+2)",
    ))
    add(CatalogEntry(
        id="T2.18s", kind="scalar-u",
        anchor="which forms a cyclic group of order 2, maps Eq.(2.6) into itself",
        free_params=("n",),
        transform=ScalarTransform(1 / X, T, X ** _p("b") * W),
        derive=lambda p: {"n": p["n"], "b": -4 / complex(p["n"])},
        derived_doc={"b": "-4/n"},
        equations=lambda p: (porous(p["n"], -(3 * complex(p["n"]) + 4) / p["n"]),) * 2,
        constraints=(_no([0, -1], "n", "requires n != 0,-1"),),
        sweep=_n_sweep(),
        cyclic=tuple(CyclicClaim({"n": n}, 2) for n in (-3, -2, 1, 2)),
        note="lambda = mu = -(3n+4)/n",
    ))
    add(CatalogEntry(
        id="T2.18d", kind="scalar-u",
        anchor="implies $\\lambda =0$",
        free_params=("n",),
        transform=ScalarTransform(_p("c") * X ** _p("a"), T, X ** _p("b") * W),
        derive=lambda p: {"n": p["n"], "c": (p["n"] + 2) / (2 * complex(p["n"]) + 2),
                          "a": (2 * complex(p["n"]) + 2) / (p["n"] + 2), "b": 2 / (complex(p["n"]) + 2)},
        derived_doc={"c": "(n+2)/(2n+2)", "a": "(2n+2)/(n+2)", "b": "2/(n+2)"},
        equations=lambda p: (porous(p["n"], (3 * complex(p["n"]) + 4) / (p["n"] + 2)), ScalarUPde(p["n"])),
        constraints=(_no([-2, -1], "n", "requires n != -2,-1"),),
        sweep=_n_sweep(-2),
        note=f"mu = {_RADIAL_MU} onto the standard nonlinear diffusion equation",
    ))
    add(CatalogEntry(
        id="T2.20", kind="scalar-u",
        anchor="Boussinesq equation of hydrology",
        free_params=("n",),
        transform=ScalarTransform(ln(X), T, X ** _p("b") * W),
        derive=lambda p: {"n": p["n"], "b": -2 / complex(p["n"])},
        derived_doc={"b": "-2/n"},
        equations=lambda p: (porous(p["n"], -(complex(p["n"]) + 2) / p["n"]),
                             ScalarUPde(p["n"], 1, 0, 0, 2 * (complex(p["n"]) + 1) / p["n"])),
        constraints=(_no([0], "n", "requires n != 0"),),
        sweep=_n_sweep(),
        note="mu = -(n+2)/n",
    ))
    add(CatalogEntry(
        id="T2.22", kind="scalar-u",
        anchor="\\frac{x^{\\frac{\\mu n+n+2}{2n+2}}}{\\sqrt{t}}",
        free_params=("n", "mu"),
        transform=ScalarTransform(_p("c") * X ** _p("a") / sqrt(T), ln(T), X ** _p("b") * W),
        derive=power_map_params, derived_doc=power_doc,
        equations=lambda p: (porous(p["n"], p["mu"]),
                             ScalarUPde(p["n"], 1, lambda_of_mu(p["n"], p["mu"]), 0.5)),
        constraints=power_constraints,
        sweep=power_sweep,
    ))

    # ---- potential systems -----------------------------------------------------------
    sys_22 = potential_system(-2, -0.5)

    def s37_filter(p):
        e = complex(p["eps"])
        return lambda x, t, u, v: abs(1 - e * v) >= 0.1 and abs(2 * e * x * x * u + 1 - e * v) >= 0.1

    one_m = 1 - eps * V
    add(CatalogEntry(
        id="S3.7", kind="system",
        anchor="generates the one-parameter continuous group",
        free_params=("eps",),
        transform=SystemTransform(X / one_m ** 2, T, U * one_m ** 3 / (2 * eps * X ** 2 * U + one_m),
                                  V / one_m),
        derive=lambda p: dict(p),
        equations=lambda p: (sys_22, sys_22),
        sweep=({"eps": 1}, {"eps": -1}, {"eps": 1j}),
        sample_filter=s37_filter,
        note="potential symmetry for n=-2, mu=-1/2",
    ))
    add(CatalogEntry(
        id="T3.12", kind="system",
        anchor="forms a cyclic group of order 2N",
        free_params=("eps",),
        transform=SystemTransform(exp(T + V / 2), T, 4 * eps * exp(-1 * (V + 2 * T)) / (U * X ** 2),
                                  2 * (eps * ln(X) - T)),
        derive=lambda p: dict(p),
        equations=lambda p: (potential_system_log(1),
                             PotentialSystem(1, PowerFlux(p["eps"], -1),
                                             ConstSource(2 * (complex(p["eps"]) - 1)))),
        constraints=(_no([0], "eps", "requires eps != 0"),),
        sweep=({"eps": 1}, {"eps": -1}, {"eps": 1j}),
        cyclic=(CyclicClaim({"eps": 1}, 2), CyclicClaim({"eps": -1}, 4),
                CyclicClaim({"eps": 1j}, 8)),
        iterate_formula=_iterate_3_12, formula_steps=(2, 4, 6, 8),
    ))
    add(CatalogEntry(
        id="T3.15", kind="system",
        anchor="maps the system (3.1) into itself",
        free_params=(),
        transform=SystemTransform(-1 * X / V ** 2, T, U * V ** 3 / (2 * X ** 2 * U - V), 1 / V),
        derive=lambda p: {},
        equations=lambda p: (sys_22, sys_22),
        cyclic=(CyclicClaim({}, 2),),
        sample_filter=lambda p: (lambda x, t, u, v: abs(2 * x * x * u - v) >= 0.1),
    ))

    def t316_params(p):
        n = complex(p["n"])
        return {"n": n, "a": n / (2 * n + 2), "b": -2 / (n + 2), "c": 1 / (n + 1),
                "d": n * (n + 2) / (4 * (n + 1) ** 2), "e": (2 * n + 2) / (n + 2)}

    def t316_eqs(p):
        n = complex(p["n"])
        l1, l2 = _lam12(n)
        return (potential_system(n, (3 * n + 4) / (n + 2)),
                PotentialSystem(1, PowerFlux(l1, -(n + 2)), PowerSource(l2, -(n + 1))))

    t316_doc = {"a": "n/(2n+2)", "b": "-2/(n+2)", "c": "1/(n+1)", "d": "n(n+2)/(4(n+1)^2)",
                "e": "(2n+2)/(n+2)"}
    case3 = (_no([-2, -1, 0], "n", "requires n != -2,-1,0"),)
    add(CatalogEntry(
        id="T3.16", kind="system",
        anchor="to the pdes (3.1)",
        free_params=("n",),
        transform=SystemTransform(V ** _p("a"), T, X ** _p("b") * V ** _p("c") / U,
                                  _p("d") * X ** _p("e")),
        derive=t316_params, derived_doc=t316_doc,
        equations=t316_eqs,
        constraints=case3,
        sweep=_n_sweep(-2),
        note="lambda1 = n^2/(4(n+1)^2), lambda2 = -n/(2(n+1)^2)",
    ))

    # ---- integrated (scalar v) forms ------------------------------------------------
    I312 = ScalarVPde(1, -1, 0, 0, -1, 1)
    add(CatalogEntry(
        id="I3.12v", kind="scalar-v",
        anchor="the integrated form of Eq.(2.9)",
        free_params=(),
        transform=ScalarTransform(exp(T + W / 2), T, 2 * (ln(X) - T)),
        derive=lambda p: {},
        equations=lambda p: (I312, I312),
    ))
    I315 = ScalarVPde(1, -2, 0.5, -1, 0, 1)
    add(CatalogEntry(
        id="I3.15v", kind="scalar-v",
        anchor="remains invariant under the point transformation",
        free_params=(),
        transform=ScalarTransform(-1 * X / W ** 2, T, 1 / W),
        derive=lambda p: {},
        equations=lambda p: (I315, I315),
    ))

    def i316_eqs(p):
        n = complex(p["n"])
        l1, l2 = _lam12(n)
        return integrated_radial(n), ScalarVPde(l1, -(n + 2), l2 - l1, -(n + 1), 0, 1)

    add(CatalogEntry(
        id="I3.16v", kind="scalar-v",
        anchor="If we use the integrated forms of Eq.(2.6) and Eq.(2.2)",
        free_params=("n",),
        transform=ScalarTransform(W ** _p("a"), T, _p("d") * X ** _p("e")),
        derive=t316_params, derived_doc=t316_doc,
        equations=i316_eqs,
        constraints=case3,
        sweep=_n_sweep(-2),
        positive_derivatives=True,
    ))

    # ---- reciprocal flux and hodograph maps ------------------------------------------
    add(CatalogEntry(
        id="T4.3", kind="system",
        anchor="transforms the system (4.2)",
        free_params=("c",),
        transform=SystemTransform(V + 2 * T, T, c_ / (U * X ** 2) + 1, V + 2 * T + c_ * ln(X)),
        derive=lambda p: dict(p),
        equations=lambda p: (potential_system_log(1), PotentialSystem(0, ReciprocalFlux(p["c"]))),
        constraints=(_no([0], "c", "requires c != 0"),),
        sweep=({"c": 1}, {"c": 2}),
    ))

    def t44_params(p):
        n = complex(p["n"])
        return {"n": n, "b": -2 / (n + 2), "d": (n + 2) / (2 * (n + 1)), "e": (2 * n + 2) / (n + 2)}

    t44_doc = {"b": "-2/(n+2)", "d": "(n+2)/(2(n+1))", "e": "(2n+2)/(n+2)"}
    case4 = (_no([-2, -1], "n", "requires n != -2,-1"),)
    add(CatalogEntry(
        id="T4.4", kind="system",
        anchor="maps the system (4.2)",
        free_params=("n",),
        transform=SystemTransform(V, T, X ** _p("b") / U, _p("d") * X ** _p("e")),
        derive=t44_params, derived_doc=t44_doc,
        equations=lambda p: (potential_system(p["n"], (3 * complex(p["n"]) + 4) / (p["n"] + 2)),
                             PotentialSystem(0, PowerFlux(1, -(complex(p["n"]) + 2)))),
        constraints=case4,
        sweep=_n_sweep(-2),
    ))
    add(CatalogEntry(
        id="I4.4v", kind="scalar-v",
        anchor="If we use the integrated forms of Eq.(2.6) and Eq.(4.1)",
        free_params=("n",),
        transform=ScalarTransform(W, T, _p("d") * X ** _p("e")),
        derive=t44_params, derived_doc=t44_doc,
        equations=lambda p: (integrated_radial(p["n"]),
                             ScalarVPde(1, -(complex(p["n"]) + 2), 0, 0, 0, 0)),
        constraints=case4,
        sweep=_n_sweep(-2),
        positive_derivatives=True,
    ))
    add(CatalogEntry(
        id="H4", kind="scalar-v",
        anchor="we obtain the hodograph transformation",
        free_params=(),
        transform=ScalarTransform(W, T, X),
        derive=lambda p: {},
        equations=lambda p: (ScalarVPde(1, 0, p=0), ScalarVPde(1, -2, p=0)),
    ))
    add(CatalogEntry(
        id="HGEN", kind="scalar-v",
        anchor="connects the equations",
        free_params=("m",),
        transform=ScalarTransform(W, T, X),
        derive=lambda p: dict(p),
        equations=lambda p: (ScalarVPde(1, p["m"], p=0), ScalarVPde(1, -2 - complex(p["m"]), p=0)),
        sweep=tuple({"m": m} for m in (-3, -1, 1, 2)),
        note="v_t = v_x^m v_xx and v_t = v_x^(-2-m) v_xx",
    ))
    return E


CATALOG: dict[str, CatalogEntry] = {e.id: e for e in _entries()}


# -- closed-form solutions --------------------------------------------------------------

@dataclass(frozen=True)
class ClosedFormSolution:
    id: str
    expression: Expr
    satisfies: Equation
    domain: Callable[[float, float], bool]
    note: str = ""


SOLUTIONS: dict[str, ClosedFormSolution] = {
    s.id: s for s in (
        ClosedFormSolution("S1", 2 * T / (X ** 2 + 4 * T ** 2), ScalarUPde(-1),
                           lambda x, t: complex(t).real > 0,
                           "solution of u_t = (u_x/u)_x"),
        ClosedFormSolution("S2", 2 * T / (X ** 2 * (ln(X) ** 2 + 4 * T ** 2)), porous(-1, 1),
                           lambda x, t: complex(x).real > 0 and complex(t).real > 0,
                           "image of S1 under T2.13 with k=1"),
        ClosedFormSolution("S3", X ** 2 / 2, ScalarVPde(1, -1, 0, 0, -1, 1),
                           lambda x, t: complex(x) != 0,
                           "stationary solution of the integrated form"),
    )
}


def solution_eval(sol, x, t) -> ScalarJetPoint:
    """Value and jets of a closed-form solution at ``(x, t)``."""
    if isinstance(sol, str):
        try:
            sol = SOLUTIONS[sol]
        except KeyError:
            raise PmtError(f"unknown solution {sol!r}") from None
    if not sol.domain(x, t):
        raise DomainError(f"({x}, {t}) outside the domain of {sol.id}")
    j = eval_jet(sol.expression, {"x": complex(x), "t": complex(t)})
    return ScalarJetPoint(complex(x), complex(t), j.v, j.dx, j.dt, j.dxx)


# -- lookup and instantiation -----------------------------------------------------------

def list_cases() -> list[dict]:
    return [
        {"id": e.id, "kind": e.kind, "anchor": e.anchor, "free_params": list(e.free_params),
         "note": e.note}
        for e in sorted(CATALOG.values(), key=lambda e: e.id)
    ]


def get_entry(case_id: str) -> CatalogEntry:
    try:
        return CATALOG[case_id]
    except KeyError:
        near = difflib.get_close_matches(case_id, CATALOG, n=1)
        hint = f"; did you mean {near[0]!r}?" if near else ""
        raise KeyError(f"unknown case {case_id!r}{hint}") from None


def instantiate_case(case_id: str, params: Mapping[str, complex] | None = None) -> VerificationCase:
    entry = get_entry(case_id)
    params = {k: complex(v) for k, v in (params or {}).items()}
    missing = [p for p in entry.free_params if p not in params]
    if missing:
        raise ConstraintError(f"{case_id}: missing parameter(s) {', '.join(missing)}")
    extra = [p for p in params if p not in entry.free_params]
    if extra:
        raise ConstraintError(f"{case_id}: unknown parameter(s) {', '.join(extra)}")
    for con in entry.constraints:
        if not con.check(params):
            raise ConstraintError(f"{case_id}: {con.message}")
    try:
        bound = entry.derive(params)
        unprimed, primed = entry.equations(params)
    except ZeroDivisionError as exc:
        raise ConstraintError(f"{case_id}: degenerate parameters {params}") from exc
    transform = entry.transform.bind(**bound)
    ranges = {**DEFAULT_RANGES, **entry.ranges}
    filt = entry.sample_filter(params) if entry.sample_filter else None
    return VerificationCase(entry, params, transform, unprimed, primed, ranges, filt)


def default_cases(ids: Sequence[str] | None = None) -> list[VerificationCase]:
    chosen = sorted(ids) if ids else sorted(CATALOG)
    return [instantiate_case(i, p) for i in chosen for p in get_entry(i).sweep]


# -- export -------------------------------------------------------------------------------

def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (int, float)):
        return [float(value), 0.0]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if value is None or isinstance(value, str):
        return value
    return str(value)


def export_catalog() -> dict:
    entries = []
    for e in sorted(CATALOG.values(), key=lambda e: e.id):
        sweep_eqs = []
        for binding in e.sweep:
            case = instantiate_case(e.id, binding)
            sweep_eqs.append({"params": _jsonable(dict(case.params)),
                              "unprimed": case.unprimed.describe(),
                              "primed": case.primed.describe()})
        entries.append({
            "id": e.id,
            "kind": e.kind,
            "anchor": e.anchor,
            "note": e.note,
            "free_params": list(e.free_params),
            "derived_params": dict(e.derived_doc),
            "transform": {k: to_text(v) for k, v in e.transform.components().items()},
            "constraints": [c.message for c in e.constraints],
            "cyclic_orders": [{"params": _jsonable(c.binding), "order": c.order}
                              for c in e.cyclic],
            "closed_form_iterate": e.iterate_formula is not None,
            "sweep": sweep_eqs,
        })
    for entry in entries:
        if not entry["anchor"]:
            raise PmtError(f"catalog entry {entry['id']} has no anchor")
    return {"entries": entries,
            "solutions": [{"id": s.id, "expression": to_text(s.expression),
                           "satisfies": s.satisfies.describe(), "note": s.note}
                          for s in SOLUTIONS.values()]}


def export_catalog_json() -> str:
    return json.dumps(export_catalog(), indent=2, sort_keys=False)
