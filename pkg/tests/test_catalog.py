import json
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmt import catalog
from pmt.catalog import (CATALOG, SOLUTIONS, default_cases, export_catalog, get_entry,
                         instantiate_case, lambda_of_mu, list_cases, scaling_parameter_map,
                         solution_eval)
from pmt.errors import ConstraintError, DomainError
from pmt.expr import eval_value, parse, to_text
from pmt.pde import ConstSource, ScalarUPde, residual
from pmt.transform import apply_point, invert_dependent


def test_listing():
    cases = list_cases()
    ids = [c["id"] for c in cases]
    assert ids == sorted(ids)
    assert "T2.10" in ids
    assert {c["id"]: c["kind"] for c in cases}["H4"] == "scalar-v"
    assert len(cases) >= 24


def test_default_sweep_size():
    assert len(default_cases()) >= 60


@pytest.mark.parametrize("entry", sorted(CATALOG), ids=str)
def test_every_entry_has_anchor_and_binds(entry):
    e = CATALOG[entry]
    assert e.anchor
    assert e.kind in ("scalar-u", "scalar-v", "system")
    for binding in e.sweep:
        case = instantiate_case(entry, binding)
        assert case.unprimed.kind == case.primed.kind == e.kind


def test_unknown_case_suggests_nearest():
    with pytest.raises(KeyError, match="T2.13"):
        get_entry("T2.13x")


@pytest.mark.parametrize("case_id, params, message", [
    ("T2.17", {"n": -1, "C": 1}, "n != -2,-1,0"),
    ("T2.18", {"n": 1, "mu": -3}, "mu\\*n\\+n\\+2"),
    ("T2.13", {"k": 0}, "k != 0"),
    ("T2.13", {}, "missing"),
    ("T2.13", {"k": 1, "q": 2}, "unknown"),
])
def test_constraint_errors(case_id, params, message):
    with pytest.raises(ConstraintError, match=message):
        instantiate_case(case_id, params)


def test_radial_map_target_coefficient():
    case = instantiate_case("T2.18", {"n": 1, "mu": 0})
    assert case.primed.lam == pytest.approx(7 / 3)


def test_cyclic_system_target_has_zero_source():
    case = instantiate_case("T3.12", {"eps": 1})
    assert case.primed.source == ConstSource(0)


def test_declared_cyclic_orders():
    claims = {(e.id, tuple(sorted(c.binding.items())), c.order) for e in CATALOG.values() for c in e.cyclic}
    assert ("T2.10", (("k", -2),), 2) in claims
    assert ("T2.10", (("k", -1 + 1j),), 4) in claims
    assert ("T3.15", (), 2) in claims
    assert {("T3.12", (("eps", e),), o) for e, o in ((1, 2), (-1, 4), (1j, 8))} <= claims
    assert {("T2.18s", (("n", n),), 2) for n in (-3, -2, 1, 2)} <= claims


# -- lambda map ----------------------------------------------------------------------------

@pytest.mark.parametrize("n, mu, expected", [
    (1, 7 / 3, 0),
    (1, 0, 7 / 3),
    (2, -5, -5),
    (-3, 5, 0),
])
def test_lambda_values(n, mu, expected):
    assert lambda_of_mu(n, mu) == pytest.approx(expected, abs=1e-15)


def test_lambda_pole():
    with pytest.raises(ConstraintError, match="mu = -\\(n\\+2\\)/n"):
        lambda_of_mu(2, -2)


reals = st.floats(min_value=-5, max_value=5).filter(lambda f: abs(f) > 0.1)


@settings(max_examples=50, deadline=None)
@given(reals, reals)
def test_lambda_involution(n, mu):
    if abs(mu * n + n + 2) < 1e-3:
        return
    lam = lambda_of_mu(n, mu)
    if abs(lam * n + n + 2) < 1e-3:
        return
    assert lambda_of_mu(n, lam) == pytest.approx(mu, rel=1e-12, abs=1e-12)


# -- scaling ---------------------------------------------------------------------------------

def test_scaling_identity():
    eq = ScalarUPde(1.5, 2, 0.3, 0.1, 0.7)
    assert scaling_parameter_map(1, 1, 1, eq) == eq


@pytest.mark.parametrize("c1, c3, c5, n, kappa", [
    (1, 2, 1, 1, 2),
    (2, 4, 1, 0, 1),
    (1, 1, 2, 3, 8),
])
def test_scaling_diffusivity(c1, c3, c5, n, kappa):
    assert scaling_parameter_map(c1, c3, c5, ScalarUPde(n)).kappa == pytest.approx(kappa)


def test_scaling_inverse_parameters():
    eq = ScalarUPde(-1.5, 1, 0.4, 0.2, 0.3)
    c1, c3, c5 = 2, 0.5, 3
    back = scaling_parameter_map(1 / c1, 1 / c3, 1 / c5, scaling_parameter_map(c1, c3, c5, eq))
    for name in ("kappa", "lam", "sigma", "tau"):
        assert getattr(back, name) == pytest.approx(getattr(eq, name), rel=1e-14)


def test_scaling_rejects_zero():
    with pytest.raises(ConstraintError):
        scaling_parameter_map(0, 1, 1, ScalarUPde(1))


# -- closed-form solutions -----------------------------------------------------------------

@pytest.mark.parametrize("sol, x, t, expected", [
    ("S1", 0, 0.5, 1),
    ("S2", 1, 0.5, 1),
])
def test_solution_values(sol, x, t, expected):
    assert solution_eval(sol, x, t).w == pytest.approx(expected)


def test_solution_domain():
    with pytest.raises(DomainError):
        solution_eval("S2", -1, 0.5)


@pytest.mark.parametrize("sol", sorted(SOLUTIONS))
def test_solutions_satisfy_their_equations(sol):
    s = SOLUTIONS[sol]
    rng = random.Random(sol)
    for _ in range(100):
        x, t = rng.uniform(0.7, 3), rng.uniform(0.5, 2)
        pt = solution_eval(s, x, t)
        terms = s.satisfies.terms(pt)
        scale = sum(abs(z) for z in terms) + 1e-300
        assert abs(residual(s.satisfies, pt)[0]) / scale <= 1e-11


def test_logarithmic_map_relates_the_two_solutions():
    case = instantiate_case("T2.13", {"k": 1})
    tr = case.transform
    worst = 0.0
    for i in range(10):
        for j in range(5):
            x, t = 1.2 + 0.2 * i, 0.5 + 0.3 * j
            xp, tp = eval_value(tr.P, {"x": x}, tr.params), eval_value(tr.Q, {"t": t}, tr.params)
            u = invert_dependent(tr, x, t, solution_eval("S1", xp, tp).w)
            want = solution_eval("S2", x, t).w
            worst = max(worst, abs(u - want) / abs(want))
    assert worst <= 1e-10


def test_apply_point_maps_solution_graph():
    tr = instantiate_case("T2.13", {"k": 1}).transform
    x, t = 1.7, 0.9
    xp, tp, up = apply_point(tr, (x, t, solution_eval("S2", x, t).w))
    assert up == pytest.approx(solution_eval("S1", xp, tp).w, rel=1e-13)


# -- iterate formulas --------------------------------------------------------------------

@pytest.mark.parametrize("case_id, params, steps", [
    ("T2.10", {"k": 1}, 3),
    ("T2.10", {"k": -1 + 1j}, 4),
    ("T3.12", {"eps": -1}, 4),
])
def test_closed_form_iterate_matches_formula_identity(case_id, params, steps):
    case = instantiate_case(case_id, params)
    pt = tuple(complex(z) for z in (1.2, 0.8, 1.1, 0.9)[:len(case.transform.variables)])
    closed = case.entry.iterate_formula(case.params, pt, steps)
    cur = pt
    for _ in range(steps):
        cur = apply_point(case.transform, cur)
    assert all(abs(a - b) <= 1e-12 * max(abs(b), 1) for a, b in zip(cur, closed))


def test_odd_system_iterate_not_covered():
    case = instantiate_case("T3.12", {"eps": 1})
    with pytest.raises(ValueError):
        case.entry.iterate_formula(case.params, (1, 1, 1, 1), 3)


# -- export --------------------------------------------------------------------------------

def test_export_round_trips_expressions():
    doc = json.loads(catalog.export_catalog_json())
    assert len(doc["entries"]) == len(CATALOG)
    for entry in doc["entries"]:
        for name, text in entry["transform"].items():
            assert to_text(parse(text)) == text
        assert entry["anchor"]
    assert [s["id"] for s in doc["solutions"]] == ["S1", "S2", "S3"]


def test_export_fails_without_anchor(monkeypatch):
    entry = CATALOG["H4"]
    broken = dict(CATALOG)
    broken["H4"] = catalog.CatalogEntry(**{**entry.__dict__, "anchor": ""})
    monkeypatch.setattr(catalog, "CATALOG", broken)
    with pytest.raises(Exception, match="anchor"):
        export_catalog()


def test_derived_parameters_documented():
    for e in CATALOG.values():
        for name in e.derived_doc:
            case = instantiate_case(e.id, e.sweep[0])
            assert name in case.transform.params
            assert math.isfinite(abs(case.transform.params[name]))
