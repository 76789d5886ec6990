"""Point transformations and the jet pushforward engine.

A :class:`ScalarTransform` is a triple ``x' = P(x,t,w)``, ``t' = Q(t)``,
``w' = W(x,t,w)``; a :class:`SystemTransform` is the quadruple
``x' = P(x,t,v)``, ``t' = Q(t)``, ``u' = R(x,t,u,v)``, ``v' = S(x,t,v)``.
The pushforward functions move a jet of a solution in unprimed variables to
the corresponding jet in primed variables via total derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

from .errors import DegeneracyError, DomainError, SingularityError, UnsupportedError
from .expr import (BranchLog, Expr, X, T, U, V, W, eval_jet, eval_value, free_vars, rename)
from .numjet import Jet
from .pde import ScalarJetPoint, SystemJetPoint

#: Threshold for the non-degeneracy and potentiality witnesses.
TOL_ND = 1e-9

#: Angular distance to the negative real axis that counts as a branch hazard
#: while iterating; intermediate values of cyclic maps wander off the real line.
ITERATE_BRANCH_MARGIN = 0.05

Domain = Callable[..., bool]

_SCALAR_ROLES = {"x": "x", "t": "t", "w": "w"}
_U_ROLES = {"x": "x", "t": "t", "u": "w"}
_V_ROLES = {"x": "x", "t": "t", "v": "w"}


@dataclass(frozen=True)
class ScalarTransform:
    P: Expr
    Q: Expr
    W: Expr
    params: Mapping[str, complex] = field(default_factory=dict)
    domain: Optional[Domain] = None

    variables = ("x", "t", "w")

    def __post_init__(self):
        if not free_vars(self.Q) <= {"t"}:
            raise ValueError("Q must depend on t only")
        for name in ("P", "W"):
            if not free_vars(getattr(self, name)) <= {"x", "t", "w"}:
                raise ValueError(f"{name} may only use x, t, w")

    def components(self) -> dict[str, Expr]:
        return {"P": self.P, "Q": self.Q, "W": self.W}

    def bind(self, **params) -> "ScalarTransform":
        return ScalarTransform(self.P, self.Q, self.W, {**self.params, **params}, self.domain)

    @property
    def p_depends_on_w(self) -> bool:
        return "w" in free_vars(self.P)


@dataclass(frozen=True)
class SystemTransform:
    P: Expr
    Q: Expr
    R: Expr
    S: Expr
    params: Mapping[str, complex] = field(default_factory=dict)
    domain: Optional[Domain] = None

    variables = ("x", "t", "u", "v")

    def __post_init__(self):
        if not free_vars(self.Q) <= {"t"}:
            raise ValueError("Q must depend on t only")
        for name in ("P", "S"):
            if not free_vars(getattr(self, name)) <= {"x", "t", "v"}:
                raise ValueError(f"{name} must not depend on u")
        if not free_vars(self.R) <= {"x", "t", "u", "v"}:
            raise ValueError("R may only use x, t, u, v")

    def components(self) -> dict[str, Expr]:
        return {"P": self.P, "Q": self.Q, "R": self.R, "S": self.S}

    def bind(self, **params) -> "SystemTransform":
        return SystemTransform(self.P, self.Q, self.R, self.S, {**self.params, **params},
                               self.domain)


Transform = ScalarTransform | SystemTransform


def identity_scalar() -> ScalarTransform:
    return ScalarTransform(X, T, W)


def identity_system() -> SystemTransform:
    return SystemTransform(X, T, U, V)


def lift(tr: ScalarTransform) -> SystemTransform:
    """View a scalar point map as a map of the potential system with ``v' = v``."""
    if tr.p_depends_on_w:
        raise UnsupportedError("only transforms with P = P(x, t) lift to systems")
    return SystemTransform(tr.P, tr.Q, rename(tr.W, {"w": "u"}), V, tr.params)


def eval_expr_jet(e: Expr, base: Mapping[str, complex], params: Mapping[str, complex] = {},
                  roles: Mapping[str, str] = _SCALAR_ROLES) -> Jet:
    return eval_jet(e, base, params, roles)


def _nonzero(value: complex, what: str) -> complex:
    if value == 0:
        raise DegeneracyError(f"degenerate transformation: {what} = 0")
    return value


# -- pushforward -----------------------------------------------------------------

def pushforward_scalar(tr: ScalarTransform, pt: ScalarJetPoint) -> ScalarJetPoint:
    base = {"x": pt.x, "t": pt.t, "w": pt.w}
    p = eval_jet(tr.P, base, tr.params, _SCALAR_ROLES)
    q = eval_jet(tr.Q, base, tr.params, _SCALAR_ROLES)
    w = eval_jet(tr.W, base, tr.params, _SCALAR_ROLES)
    wx, wxx, wt = pt.w_x, pt.w_xx, pt.w_t

    dxp = _nonzero(p.dx + p.dw * wx, "D_x P")
    qt = _nonzero(q.dt, "Q_t")
    dxw = w.dx + w.dw * wx
    dx2p = p.dxx + 2 * p.dxw * wx + p.dww * wx * wx + p.dw * wxx
    dx2w = w.dxx + 2 * w.dxw * wx + w.dww * wx * wx + w.dw * wxx

    w_x = dxw / dxp
    w_xx = (dx2w * dxp - dxw * dx2p) / dxp ** 3
    w_t = (w.dt + w.dw * wt - w_x * (p.dt + p.dw * wt)) / qt
    return ScalarJetPoint(p.v, q.v, w.v, w_x, w_t, w_xx)


def _system_partials(tr: SystemTransform, x, t, u, v) -> dict[str, complex]:
    base = {"x": x, "t": t, "u": u, "v": v}
    pv = eval_jet(tr.P, base, tr.params, _V_ROLES)
    sv = eval_jet(tr.S, base, tr.params, _V_ROLES)
    q = eval_jet(tr.Q, base, tr.params, _V_ROLES)
    ru = eval_jet(tr.R, base, tr.params, _U_ROLES)
    r_v = eval_jet(tr.R, base, tr.params, _V_ROLES).dw if "v" in free_vars(tr.R) else 0j
    return {
        "P": pv.v, "P_x": pv.dx, "P_t": pv.dt, "P_v": pv.dw,
        "Q": q.v, "Q_t": q.dt,
        "R": ru.v, "R_x": ru.dx, "R_t": ru.dt, "R_u": ru.dw, "R_v": r_v,
        "S": sv.v, "S_x": sv.dx, "S_t": sv.dt, "S_v": sv.dw,
    }


def pushforward_system(tr: SystemTransform, pt: SystemJetPoint) -> SystemJetPoint:
    d = _system_partials(tr, pt.x, pt.t, pt.u, pt.v)
    dxp = _nonzero(d["P_x"] + d["P_v"] * pt.v_x, "D_x P")
    qt = _nonzero(d["Q_t"], "Q_t")
    dtp = d["P_t"] + d["P_v"] * pt.v_t

    v_x = (d["S_x"] + d["S_v"] * pt.v_x) / dxp
    u_x = (d["R_x"] + d["R_u"] * pt.u_x + d["R_v"] * pt.v_x) / dxp
    v_t = (d["S_t"] + d["S_v"] * pt.v_t - v_x * dtp) / qt
    u_t = (d["R_t"] + d["R_u"] * pt.u_t + d["R_v"] * pt.v_t - u_x * dtp) / qt
    return SystemJetPoint(d["P"], d["Q"], d["R"], u_x, u_t, d["S"], v_x, v_t)


def pushforward(tr: Transform, pt):
    if isinstance(tr, SystemTransform):
        return pushforward_system(tr, pt)
    return pushforward_scalar(tr, pt)


# -- value-level application ----------------------------------------------------

def _coords(tr: Transform, pt: Sequence[complex]) -> dict[str, complex]:
    names = tr.variables
    if len(pt) != len(names):
        raise ValueError(f"expected coordinates {names}, got {len(pt)} values")
    return {n: complex(z) for n, z in zip(names, pt)}


def apply_point(tr: Transform, pt: Sequence[complex], branch: BranchLog | None = None
                ) -> tuple[complex, ...]:
    base = _coords(tr, pt)
    if tr.domain is not None and not tr.domain(**base):
        raise DomainError(f"point {tuple(base.values())} outside the transformation domain")
    try:
        return tuple(eval_value(e, base, tr.params, branch) for e in tr.components().values())
    except SingularityError as exc:
        raise DomainError(f"transformation singular at {tuple(base.values())}: {exc}") from exc


@dataclass
class IterateResult:
    point: tuple[complex, ...]
    branch_warnings: int
    steps: int


def iterate_point(tr: Transform, pt: Sequence[complex], N: int,
                  margin: float = ITERATE_BRANCH_MARGIN) -> IterateResult:
    """Apply ``tr`` ``N`` times, monitoring principal-branch hazards."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    branch = BranchLog(margin)
    cur = tuple(complex(z) for z in pt)
    for step in range(1, N + 1):
        try:
            cur = apply_point(tr, cur, branch)
        except DomainError as exc:
            raise DomainError(f"step {step}: {exc}") from exc
    return IterateResult(cur, branch.events, N)


def compose(*transforms: Transform) -> Callable[[Sequence[complex]], tuple[complex, ...]]:
    """Pointwise composition; the first transform is applied first."""
    def apply(pt):
        for tr in transforms:
            pt = apply_point(tr, pt)
        return pt
    return apply


def invert_dependent(tr: ScalarTransform, x, t, wprime) -> complex:
    """Solve ``W(x, t, w) = wprime`` for ``w`` when ``W`` is affine in ``w``."""
    base = {"x": complex(x), "t": complex(t), "w": 1 + 0j}
    jet = eval_jet(tr.W, base, tr.params, {"w": "w"})
    slope = jet.dw
    if abs(jet.dww) > 1e-12 * max(abs(slope), 1.0):
        raise UnsupportedError("W is not affine in the dependent variable")
    if slope == 0:
        raise DegeneracyError("W has zero slope in the dependent variable")
    offset = jet.v - slope
    return (complex(wprime) - offset) / slope


# -- non-degeneracy ----------------------------------------------------------------

@dataclass(frozen=True)
class NondegeneracyRecord:
    nondegenerate: bool
    potential: bool
    jacobian: complex
    potential_witness: float
    partials: dict


def check_nondegeneracy(tr: SystemTransform, pt: Sequence[complex], tol: float = TOL_ND
                        ) -> NondegeneracyRecord:
    """Jacobian condition ``Q_t R_u (P_x S_v - P_v S_x) != 0`` and ``P_v^2 + R_v^2 != 0``."""
    if isinstance(tr, ScalarTransform):
        tr = lift(tr)
    x, t, u, v = (complex(z) for z in pt)
    d = _system_partials(tr, x, t, u, v)
    jac = d["Q_t"] * d["R_u"] * (d["P_x"] * d["S_v"] - d["P_v"] * d["S_x"])
    witness = abs(d["P_v"]) ** 2 + abs(d["R_v"]) ** 2
    return NondegeneracyRecord(abs(jac) > tol, witness > tol, jac, witness, d)
