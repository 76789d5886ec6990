"""Claim checks and suite aggregation.

Each check returns a :class:`CheckReport`.  Samples are drawn from an RNG
substream keyed by the master seed and the case, so reports are reproducible
and independent of which other cases run or in which order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional, Sequence

from . import catalog
from .catalog import ClosedFormSolution, VerificationCase
from .errors import ConfigError, PmtError, UnsupportedError
from .expr import eval_jet, eval_value
from .pde import (PotentialSystem, ScalarJetPoint, ScalarUPde, SystemJetPoint,
                  complete_time_derivative, residual, residual_terms)
from .transform import (ScalarTransform, SystemTransform, check_nondegeneracy, invert_dependent,
                        iterate_point, lift, pushforward_scalar, pushforward_system)

EPS = sys.float_info.epsilon

TOL_EQUIVALENCE = 1e-8
TOL_CYCLIC = 1e-10
TOL_SOLUTION = 1e-9
DEFAULT_SEED = 1999
MAX_FAILURES = 10


@dataclass(frozen=True)
class SamplingConfig:
    seed: int = DEFAULT_SEED
    count: int = 100
    ranges: Optional[dict] = None
    free_derivative_range: tuple[float, float] = catalog.DERIVATIVE_RANGE
    mode: str = "real"

    def __post_init__(self):
        if self.count < 1:
            raise ConfigError("sample count must be positive")
        if self.mode not in ("real", "complex-perturbed"):
            raise ConfigError(f"unknown sampling mode {self.mode!r}")


@dataclass
class CheckReport:
    case_id: str
    params: dict
    samples: int = 0
    max_abs_residual: float = 0.0
    max_rel_residual: float = 0.0
    tolerance: float = TOL_EQUIVALENCE
    passed: bool = False
    failures: list = field(default_factory=list)
    branch_warnings: int = 0
    errors: int = 0
    elapsed: float = 0.0
    anchor: str = ""

    def record(self, point: dict, abs_res: float, rel_res: float) -> None:
        self.samples += 1
        if not math.isfinite(rel_res):
            self.errors += 1
        else:
            self.max_abs_residual = max(self.max_abs_residual, abs_res)
            self.max_rel_residual = max(self.max_rel_residual, rel_res)
        if (not math.isfinite(rel_res) or rel_res > self.tolerance) and len(self.failures) < MAX_FAILURES:
            self.failures.append({"point": point, "residual": rel_res})

    def finish(self, started: float) -> "CheckReport":
        self.passed = self.errors == 0 and self.samples > 0 and self.max_rel_residual <= self.tolerance
        self.elapsed = time.perf_counter() - started
        return self

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "params": {k: _pair(v) for k, v in sorted(self.params.items())},
            "samples": self.samples,
            "max_abs_residual": self.max_abs_residual,
            "max_rel_residual": self.max_rel_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "branch_warnings": self.branch_warnings,
            "failures": [{"point": {k: _pair(v) for k, v in f["point"].items()},
                          "residual": f["residual"] if math.isfinite(f["residual"]) else None}
                         for f in self.failures],
        }

    def sort_key(self):
        return (self.case_id, json.dumps(self.to_dict()["params"], sort_keys=True))

    def text_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={_fmt(v)}" for k, v in sorted(self.params.items()))
        params = f" {params}" if params else ""
        extra = f" errors={self.errors}" if self.errors else ""
        return (f'{status} {self.case_id}{params} max_rel={self.max_rel_residual:.1e}{extra} '
                f'(anchor: "{self.anchor}")')


@dataclass
class SuiteReport:
    master_seed: int
    cases: list[CheckReport]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_dict(self) -> dict:
        return {"master_seed": self.master_seed,
                "cases": [c.to_dict() for c in self.cases],
                "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        return reports_csv(self.cases)

    def to_text(self) -> str:
        lines = [c.text_line() for c in self.cases]
        n_fail = sum(not c.passed for c in self.cases)
        lines.append(f"{len(self.cases) - n_fail}/{len(self.cases)} checks passed "
                     f"(seed {self.master_seed})")
        return "\n".join(lines)


CSV_COLUMNS = ("case_id", "params", "samples", "max_abs_residual", "max_rel_residual",
               "tolerance", "pass", "branch_warnings")


def reports_csv(reports: Iterable[CheckReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        params = ";".join(f"{k}={_fmt(v)}" for k, v in sorted(r.params.items()))
        writer.writerow([r.case_id, params, r.samples, repr(r.max_abs_residual),
                         repr(r.max_rel_residual), repr(r.tolerance), str(r.passed).lower(),
                         r.branch_warnings])
    return buf.getvalue()


def _pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _fmt(z) -> str:
    z = complex(z)
    if z.imag == 0:
        r = z.real
        return str(int(r)) if r.is_integer() else repr(r)
    re = "" if z.real == 0 else (str(int(z.real)) if z.real.is_integer() else repr(z.real))
    im = str(int(z.imag)) if z.imag.is_integer() else repr(z.imag)
    sign = "+" if z.imag >= 0 and re else ""
    return f"{re}{sign}{im}i"


# -- sampling --------------------------------------------------------------------------

def case_rng(seed: int, key: str) -> random.Random:
    """Independent, reproducible substream for one case."""
    return random.Random(f"{seed}|{key}")


def case_key(case: VerificationCase, check: str) -> str:
    params = ",".join(f"{k}={_fmt(v)}" for k, v in sorted(case.params.items()))
    return f"{case.id}|{check}|{params}"


def _ranges(case: VerificationCase, cfg: SamplingConfig) -> dict:
    return {**case.ranges, **(cfg.ranges or {})}


def _derivative(rng: random.Random, cfg: SamplingConfig, positive: bool) -> float:
    lo, hi = cfg.free_derivative_range
    value = rng.uniform(lo, hi)
    if not positive and rng.random() < 0.5:
        value = -value
    return value


def _draw_base(rng: random.Random, case: VerificationCase, cfg: SamplingConfig) -> dict:
    ranges = _ranges(case, cfg)
    names = ("x", "t", "u", "v") if case.kind == "system" else ("x", "t", "w")
    for _ in range(1000):
        base = {}
        for name in names:
            key = name if name != "w" else ("v" if case.kind == "scalar-v" else "u")
            base[name] = rng.uniform(*ranges[key])
        if case.sample_filter is None or case.sample_filter(**base):
            return base
    raise ConfigError(f"{case.id}: sampling domain does not intersect the transformation domain")


def _perturb(rng: random.Random, cfg: SamplingConfig, value: float) -> complex:
    if cfg.mode == "complex-perturbed":
        return complex(value, 0.1 if rng.random() < 0.5 else -0.1)
    return complex(value)


def draw_jet_point(rng: random.Random, case: VerificationCase, cfg: SamplingConfig):
    """Base point plus free derivatives, before time derivatives are completed."""
    base = _draw_base(rng, case, cfg)
    positive = case.entry.positive_derivatives
    if case.kind == "system":
        u_x = _perturb(rng, cfg, _derivative(rng, cfg, positive))
        u_t = complex(_derivative(rng, cfg, positive))
        return SystemJetPoint(complex(base["x"]), complex(base["t"]), complex(base["u"]), u_x, u_t,
                              complex(base["v"]), 0j, 0j)
    w_x = _perturb(rng, cfg, _derivative(rng, cfg, positive))
    w_xx = complex(_derivative(rng, cfg, positive))
    return ScalarJetPoint(complex(base["x"]), complex(base["t"]), complex(base["w"]), w_x, 0j, w_xx)


def point_dict(pt) -> dict:
    return {k: complex(getattr(pt, k)) for k in pt.__dataclass_fields__}


def relative_residual(eq, pt) -> tuple[float, float]:
    """(max |residual|, max |residual| / (sum of |terms| + eps)) over the equations of ``eq``."""
    res = residual(eq, pt)
    terms = residual_terms(eq, pt)
    abs_r = max(abs(r) for r in res)
    rel_r = max(abs(r) / (math.fsum(abs(z) for z in ts) + EPS) for r, ts in zip(res, terms))
    return abs_r, rel_r


def _pushforward(tr, pt):
    if isinstance(tr, SystemTransform):
        return pushforward_system(tr, pt)
    return pushforward_scalar(tr, pt)


def _branch_flag(tr, pt) -> bool:
    if isinstance(tr, SystemTransform):
        base = {"x": pt.x, "t": pt.t, "u": pt.u, "v": pt.v}
        roles = {"x": "x", "t": "t", "u": "w"}
    else:
        base = {"x": pt.x, "t": pt.t, "w": pt.w}
        roles = {"x": "x", "t": "t", "w": "w"}
    return any(eval_jet(e, base, tr.params, roles).warn for e in tr.components().values())


def _new_report(case: VerificationCase, check: str, tol: float) -> CheckReport:
    return CheckReport(case_id=f"{case.id}:{check}", params=dict(case.params), tolerance=tol,
                       anchor=case.entry.anchor)


# -- checks -----------------------------------------------------------------------------------

def equivalence_sample(case: VerificationCase, pt) -> tuple[float, float, bool]:
    """Complete ``pt`` on the unprimed equation, push it forward, and return the primed residual."""
    pt = complete_time_derivative(case.unprimed, pt)
    if any(r != 0 for r in residual(case.unprimed, pt)):
        raise AssertionError("completed sample is not on the unprimed equation")
    out = _pushforward(case.transform, pt)
    abs_r, rel_r = relative_residual(case.primed, out)
    return abs_r, rel_r, _branch_flag(case.transform, pt)


def check_equivalence(case: VerificationCase, cfg: SamplingConfig = SamplingConfig(),
                      tol: float = TOL_EQUIVALENCE) -> CheckReport:
    started = time.perf_counter()
    report = _new_report(case, "equivalence", tol)
    rng = case_rng(cfg.seed, case_key(case, "equivalence"))
    for _ in range(cfg.count):
        pt = draw_jet_point(rng, case, cfg)
        try:
            abs_r, rel_r, warned = equivalence_sample(case, pt)
        except (PmtError, ZeroDivisionError, OverflowError):
            report.record(point_dict(pt), math.inf, math.inf)
            continue
        report.branch_warnings += warned
        report.record(point_dict(pt), abs_r, rel_r)
    return report.finish(started)


def replay_sample(case: VerificationCase, point: dict) -> dict:
    """Re-run one equivalence sample given its base point (as stored in a failure record)."""
    if case.kind == "system":
        names = ("x", "t", "u", "u_x", "u_t", "v")
        pt = SystemJetPoint(*(complex(point.get(k, 0)) for k in names), 0j, 0j)
    else:
        names = ("x", "t", "w", "w_x", "w_xx")
        vals = {k: complex(point.get(k, 0)) for k in names}
        pt = ScalarJetPoint(vals["x"], vals["t"], vals["w"], vals["w_x"], 0j, vals["w_xx"])
    abs_r, rel_r, warned = equivalence_sample(case, pt)
    return {"max_abs_residual": abs_r, "max_rel_residual": rel_r, "branch_warning": warned}


def _rel_distance(a: Sequence[complex], b: Sequence[complex]) -> float:
    return max(abs(p - q) / (abs(q) + EPS) for p, q in zip(a, b))


def _draw_coords(rng, case, cfg) -> tuple[complex, ...]:
    base = _draw_base(rng, case, cfg)
    return tuple(complex(v) for v in base.values())


def check_cyclic(case: VerificationCase, expected_order: int,
                 cfg: SamplingConfig = SamplingConfig(count=50), tol: float = TOL_CYCLIC
                 ) -> CheckReport:
    """Apply the transformation ``expected_order`` times and compare with the start point."""
    started = time.perf_counter()
    report = _new_report(case, f"cyclic{expected_order}", tol)
    rng = case_rng(cfg.seed, case_key(case, f"cyclic{expected_order}"))
    formula = case.entry.iterate_formula
    for _ in range(cfg.count):
        pt = _draw_coords(rng, case, cfg)
        try:
            result = iterate_point(case.transform, pt, expected_order)
            if result.branch_warnings:
                report.branch_warnings += 1
                if formula is None:
                    report.record(dict(zip(case.transform.variables, pt)), math.inf, math.inf)
                    continue
                end = formula(case.params, pt, expected_order)
            else:
                end = result.point
        except (PmtError, ZeroDivisionError, OverflowError):
            report.record(dict(zip(case.transform.variables, pt)), math.inf, math.inf)
            continue
        dev = _rel_distance(end, pt)
        report.record(dict(zip(case.transform.variables, pt)),
                      max(abs(p - q) for p, q in zip(end, pt)), dev)
    return report.finish(started)


def check_iterate_formula(case: VerificationCase, steps: Sequence[int] | None = None,
                          cfg: SamplingConfig = SamplingConfig(count=50), tol: float = TOL_CYCLIC
                          ) -> CheckReport:
    """Compare pointwise iteration with the closed-form N-fold map."""
    formula = case.entry.iterate_formula
    if formula is None:
        raise UnsupportedError(f"{case.id} has no closed-form iterate")
    steps = tuple(steps or case.entry.formula_steps)
    started = time.perf_counter()
    report = _new_report(case, "iterate-formula", tol)
    rng = case_rng(cfg.seed, case_key(case, "iterate-formula"))
    for _ in range(cfg.count):
        pt = _draw_coords(rng, case, cfg)
        worst_abs = worst_rel = 0.0
        try:
            for N in steps:
                it = iterate_point(case.transform, pt, N)
                report.branch_warnings += bool(it.branch_warnings)
                closed = formula(case.params, pt, N)
                worst_rel = max(worst_rel, _rel_distance(it.point, closed))
                worst_abs = max(worst_abs, max(abs(p - q) for p, q in zip(it.point, closed)))
        except (PmtError, ZeroDivisionError, OverflowError):
            worst_abs = worst_rel = math.inf
        report.record(dict(zip(case.transform.variables, pt)), worst_abs, worst_rel)
    return report.finish(started)


def _solution(sol) -> ClosedFormSolution:
    if isinstance(sol, ClosedFormSolution):
        return sol
    try:
        return catalog.SOLUTIONS[sol]
    except KeyError:
        raise ConfigError(f"unknown solution {sol!r}") from None


def default_grid(n: int = 20) -> tuple[list[float], list[float]]:
    xs = [1.2 + (3.0 - 1.2) * i / (n - 1) for i in range(n)]
    ts = [0.5 + (2.0 - 0.5) * j / (n - 1) for j in range(n)]
    return xs, ts


def check_solution_map(case: VerificationCase, unprimed_solution, primed_solution,
                       grid: tuple[Sequence[float], Sequence[float]] | None = None,
                       tol: float = TOL_SOLUTION) -> CheckReport:
    """Map one closed-form solution onto another.

    Two checks per grid point: the pushed-forward jets of the unprimed
    solution satisfy the primed equation, and inverting the dependent
    component of the transformation on the primed solution reproduces the
    unprimed solution's value.
    """
    if case.kind != "scalar-u" or case.transform.p_depends_on_w:
        raise UnsupportedError("solution mapping needs a scalar transform with P = P(x, t)")
    sol_u, sol_p = _solution(unprimed_solution), _solution(primed_solution)
    xs, ts = grid or default_grid()
    started = time.perf_counter()
    report = _new_report(case, f"solution-map:{sol_u.id}->{sol_p.id}", tol)
    tr = case.transform
    for x in xs:
        for t in ts:
            point = {"x": complex(x), "t": complex(t)}
            try:
                jets = catalog.solution_eval(sol_u, x, t)
                pushed = pushforward_scalar(tr, jets)
                abs_a, rel_a = relative_residual(case.primed, pushed)
                xp = eval_value(tr.P, {"x": x, "t": t}, tr.params)
                tp = eval_value(tr.Q, {"t": t}, tr.params)
                wprime = eval_value(sol_p.expression, {"x": xp, "t": tp})
                recovered = invert_dependent(tr, x, t, wprime)
                abs_b = abs(recovered - jets.w)
                rel_b = abs_b / (abs(jets.w) + EPS)
            except (PmtError, ZeroDivisionError, OverflowError):
                report.record(point, math.inf, math.inf)
                continue
            report.record(point, max(abs_a, abs_b), max(rel_a, rel_b))
    return report.finish(started)


def check_solution(solution, grid: tuple[Sequence[float], Sequence[float]] | None = None,
                   tol: float = 1e-11) -> CheckReport:
    """Residual of a closed-form solution in the equation it is registered against."""
    sol = _solution(solution)
    xs, ts = grid or default_grid()
    started = time.perf_counter()
    report = CheckReport(case_id=f"{sol.id}:solution", params={}, tolerance=tol, anchor=sol.note)
    for x in xs:
        for t in ts:
            point = {"x": complex(x), "t": complex(t)}
            try:
                abs_r, rel_r = relative_residual(sol.satisfies, catalog.solution_eval(sol, x, t))
            except (PmtError, ZeroDivisionError, OverflowError):
                abs_r = rel_r = math.inf
            report.record(point, abs_r, rel_r)
    return report.finish(started)


def theorem_relation_sample(case: VerificationCase, pt: ScalarJetPoint) -> tuple[float, float]:
    """Both sides of ``P_x R_u H = P_x Q_t H' + P_t R_x + P_t R_u u_x - P_x R_t``."""
    tr = case.transform
    base = {"x": pt.x, "t": pt.t, "w": pt.w}
    p = eval_jet(tr.P, base, tr.params)
    q = eval_jet(tr.Q, base, tr.params)
    r = eval_jet(tr.W, base, tr.params)
    h_terms = case.unprimed.rhs_terms(pt)
    pushed = pushforward_scalar(tr, pt)
    hp_terms = case.primed.rhs_terms(pushed)
    H, Hp = sum(h_terms, 0j), sum(hp_terms, 0j)
    lhs = p.dx * r.dw * H
    rhs_parts = [p.dx * q.dt * Hp, p.dt * r.dx, p.dt * r.dw * pt.w_x, -p.dx * r.dt]
    diff = abs(lhs - sum(rhs_parts, 0j))
    scale = (abs(p.dx * r.dw) * math.fsum(abs(z) for z in h_terms)
             + abs(p.dx * q.dt) * math.fsum(abs(z) for z in hp_terms)
             + math.fsum(abs(z) for z in rhs_parts[1:]) + EPS)
    return diff, diff / scale


def check_theorem_relation(case: VerificationCase, cfg: SamplingConfig = SamplingConfig(),
                           tol: float = TOL_EQUIVALENCE) -> CheckReport:
    if not isinstance(case.unprimed, ScalarUPde) or case.transform.p_depends_on_w:
        raise UnsupportedError(f"{case.id}: the relation applies to scalar-u cases with P = P(x, t)")
    started = time.perf_counter()
    report = _new_report(case, "theorem-relation", tol)
    rng = case_rng(cfg.seed, case_key(case, "theorem-relation"))
    for _ in range(cfg.count):
        pt = draw_jet_point(rng, case, cfg)
        # u_t is unconstrained here: the relation is an identity in u_x, u_xx, u_t
        pt = replace(pt, w_t=complex(_derivative(rng, cfg, False)))
        try:
            abs_r, rel_r = theorem_relation_sample(case, pt)
        except (PmtError, ZeroDivisionError, OverflowError):
            report.record(point_dict(pt), math.inf, math.inf)
            continue
        report.record(point_dict(pt), abs_r, rel_r)
    return report.finish(started)


def check_nondegeneracy_case(case: VerificationCase, cfg: SamplingConfig = SamplingConfig(),
                             expect_potential: bool = True) -> CheckReport:
    """Jacobian and potentiality witnesses on sampled points.

    The residual reported is ``TOL_ND / min(|jacobian|, witness)`` when a
    nonzero witness is expected (pass iff <= 1), and ``witness / TOL_ND`` when
    the transformation is expected not to involve the potential.
    """
    from .transform import TOL_ND
    tr = case.transform if isinstance(case.transform, SystemTransform) else lift(case.transform)
    started = time.perf_counter()
    label = "nondegeneracy" if expect_potential else "nondegeneracy-point"
    report = _new_report(case, label, 1.0)
    rng = case_rng(cfg.seed, case_key(case, label))
    for _ in range(cfg.count):
        base = _draw_base(rng, case, cfg)
        x, t = base["x"], base["t"]
        u = base.get("u", base.get("w"))
        v = base.get("v", 1.0)
        pt = {"x": complex(x), "t": complex(t), "u": complex(u), "v": complex(v)}
        try:
            rec = check_nondegeneracy(tr, (x, t, u, v))
        except (PmtError, ZeroDivisionError, OverflowError):
            report.record(pt, math.inf, math.inf)
            continue
        jac = abs(rec.jacobian)
        if expect_potential:
            margin = TOL_ND / max(min(jac, rec.potential_witness), 1e-300)
        else:
            margin = max(TOL_ND / max(jac, 1e-300), rec.potential_witness / TOL_ND)
        report.record(pt, margin, margin)
    return report.finish(started)


NEGATIVE_THRESHOLD = 1e-2


def negative_controls(cfg: SamplingConfig = SamplingConfig(count=20)) -> list[CheckReport]:
    """Deliberately broken cases; each report must fail with max_rel_residual > 1e-2."""
    from .expr import X, T, W
    t213 = catalog.instantiate_case("T2.13", {"k": 1})
    tampered = ScalarTransform(t213.transform.P, t213.transform.Q, W * X ** 3, t213.transform.params)
    t218 = catalog.instantiate_case("T2.18", {"n": 1, "mu": 0.5})
    wrong_lam = catalog.lambda_of_mu(1, 0.5) + 1
    t218_bad = t218.with_primed(replace(t218.primed, lam=wrong_lam))
    wrong_s1 = catalog.ClosedFormSolution("S1*", 3 * T / (X ** 2 + 4 * T ** 2),
                                          catalog.SOLUTIONS["S1"].satisfies,
                                          catalog.SOLUTIONS["S1"].domain)
    return [
        check_equivalence(t213.with_transform(tampered), cfg),
        check_theorem_relation(t218_bad, cfg),
        check_solution_map(t213, "S2", wrong_s1),
    ]


# -- suite ------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class SuiteConfig:
    seed: int = DEFAULT_SEED
    samples: int = 100
    tol: Optional[float] = None
    ids: tuple[str, ...] = ()
    workers: int = 1
    mode: str = "real"

    def sampling(self, count: int | None = None) -> SamplingConfig:
        return SamplingConfig(seed=self.seed, count=count or self.samples, mode=self.mode)


CONFIG_KEYS = {
    "seed": int,
    "samples": int,
    "tol": float,
    "ids": lambda s: tuple(i for i in (p.strip() for p in s.split(",")) if i),
    "workers": int,
    "mode": str,
}


def parse_config(text: str, source: str = "<config>") -> dict:
    """Parse flat ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        try:
            values[key] = CONFIG_KEYS[key](value)
        except ValueError as exc:
            raise ConfigError(f"{source}:{lineno}: bad value for {key}: {exc}") from None
    return values


def load_config(path: str | None = None, **overrides) -> SuiteConfig:
    values = {}
    if path is not None:
        try:
            with open(path) as fh:
                values = parse_config(fh.read(), path)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
    values.update({k: v for k, v in overrides.items() if v is not None})
    cfg = SuiteConfig(**values)
    if cfg.mode not in ("real", "complex-perturbed"):
        raise ConfigError(f"unknown sampling mode {cfg.mode!r}")
    for case_id in cfg.ids:
        catalog.get_entry(case_id)
    return cfg


def dump_config(cfg: SuiteConfig) -> str:
    lines = [f"seed = {cfg.seed}", f"samples = {cfg.samples}"]
    if cfg.tol is not None:
        lines.append(f"tol = {cfg.tol!r}")
    if cfg.ids:
        lines.append(f"ids = {', '.join(cfg.ids)}")
    lines += [f"workers = {cfg.workers}", f"mode = {cfg.mode}"]
    return "\n".join(lines) + "\n"


def _tol(cfg: SuiteConfig, default: float) -> float:
    return default if cfg.tol is None else cfg.tol


def suite_tasks(cfg: SuiteConfig) -> list[Callable[[], CheckReport]]:
    """One zero-argument callable per check of the suite."""
    tasks = []
    smp = cfg.sampling()
    smp50 = cfg.sampling(min(cfg.samples, 50))
    for case in catalog.default_cases(cfg.ids or None):
        entry = case.entry
        tasks.append(lambda c=case: check_equivalence(c, smp, _tol(cfg, TOL_EQUIVALENCE)))
        for claim in entry.cyclic:
            if all(complex(case.params.get(k)) == complex(v) for k, v in claim.binding.items()):
                tasks.append(lambda c=case, o=claim.order:
                             check_cyclic(c, o, smp50, _tol(cfg, TOL_CYCLIC)))
        if entry.iterate_formula is not None:
            tasks.append(lambda c=case: check_iterate_formula(c, None, smp50, _tol(cfg, TOL_CYCLIC)))
        if entry.theorem_applicable:
            tasks.append(lambda c=case: check_theorem_relation(c, smp, _tol(cfg, TOL_EQUIVALENCE)))
            tasks.append(lambda c=case: check_nondegeneracy_case(c, smp, expect_potential=False))
        if entry.id == "T2.13" and complex(case.params["k"]) == 1:
            tasks.append(lambda c=case: check_solution_map(c, "S2", "S1", None,
                                                           _tol(cfg, TOL_SOLUTION)))
        if entry.kind == "system":
            tasks.append(lambda c=case: check_nondegeneracy_case(c, smp))
    return tasks


def run_suite(config: SuiteConfig | str | None = None) -> SuiteReport:
    if config is None or isinstance(config, str):
        config = load_config(config)
    tasks = suite_tasks(config)
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(lambda f: f(), tasks))
    else:
        reports = [f() for f in tasks]
    reports.sort(key=CheckReport.sort_key)
    return SuiteReport(config.seed, reports)
