import cmath
import random

import pytest

from pmt.catalog import SOLUTIONS, porous, potential_system, solution_eval
from pmt.errors import ConstraintError, SingularityError
from pmt.pde import (ConstSource, LogSource, PotentialSystem, PowerFlux, PowerSource,
                     ReciprocalFlux, ScalarJetPoint, ScalarUPde, ScalarVPde, SystemJetPoint,
                     complete_time_derivative, residual, residual_scalar_u, residual_scalar_v,
                     residual_system, residual_terms)


def spt(x=1.0, t=1.0, w=1.0, w_x=0.0, w_t=0.0, w_xx=0.0):
    return ScalarJetPoint(*(complex(z) for z in (x, t, w, w_x, w_t, w_xx)))


def sysp(x=1.0, t=1.0, u=1.0, u_x=0.0, u_t=0.0, v=1.0, v_x=0.0, v_t=0.0):
    return SystemJetPoint(*(complex(z) for z in (x, t, u, u_x, u_t, v, v_x, v_t)))


HEAT_U = ScalarUPde(0)
HEAT_V = ScalarVPde(1, 0, p=0)


# -- scalar u ------------------------------------------------------------------------------

def test_constant_solves_radial_equation():
    assert residual_scalar_u(porous(-1, 1), spt(w=1)) == 0


def test_heat_residual_of_parabola():
    x = 1.0
    assert residual_scalar_u(HEAT_U, spt(x=x, w=x * x, w_x=2 * x, w_xx=2)) == -2


def test_closed_form_solution_at_e():
    pt = solution_eval("S2", cmath.e, 0.5)
    assert abs(residual_scalar_u(porous(-1, 1), pt)) <= 1e-12


def test_singular_u_points():
    with pytest.raises(SingularityError):
        residual_scalar_u(ScalarUPde(-1), spt(w=0, w_x=1))
    with pytest.raises(SingularityError):
        residual_scalar_u(porous(1, 1), spt(x=0, w=1, w_x=1))


# -- scalar v ------------------------------------------------------------------------------

def test_heat_v_linear_in_time():
    x, t = 0.7, 0.3
    assert residual_scalar_v(HEAT_V, spt(x=x, t=t, w=x * x + 2 * t, w_x=2 * x, w_t=2, w_xx=2)) == 0


def test_integrated_form_stationary_solution():
    x = 1.3
    eq = ScalarVPde(1, -1, 0, 0, -1, 1)
    assert residual_scalar_v(eq, spt(x=x, w=x * x / 2, w_x=x, w_xx=1)) == pytest.approx(0, abs=1e-15)


def test_linear_profile_of_reciprocal_square():
    assert residual_scalar_v(ScalarVPde(1, -2, p=0), spt(x=2, w=2, w_x=1)) == 0


def test_singular_v_points():
    with pytest.raises(SingularityError):
        residual_scalar_v(ScalarVPde(1, -2, p=0), spt(w_x=0, w_xx=1))
    with pytest.raises(SingularityError):
        residual_scalar_v(ScalarVPde(1, 1, p=1), spt(x=0, w_x=1))
    with pytest.raises(ConstraintError):
        ScalarVPde(1, 1, p=2)


# -- systems --------------------------------------------------------------------------------

def test_potential_system_on_point():
    eq = potential_system(-2, -0.5)
    assert residual_system(eq, sysp(x=2, u=1, v_x=2, v_t=1.5)) == (0, 0)


def test_first_equation_offset():
    eq = potential_system(2, 1)
    r1, _ = residual_system(eq, sysp(x=1.5, u=0.8, v_x=1.5 * 0.8 + 1))
    assert r1 == pytest.approx(1)


def test_reciprocal_flux_at_rest():
    eq = PotentialSystem(0, ReciprocalFlux(1))
    assert residual_system(eq, sysp(u=2, v_x=2)) == (0, 0)


def test_system_singularities():
    with pytest.raises(SingularityError):
        residual_system(PotentialSystem(0, ReciprocalFlux(1)), sysp(u=1, v_x=1))
    with pytest.raises(SingularityError):
        residual_system(PotentialSystem(1, PowerFlux(1, -1), LogSource(1)), sysp(u=0))
    with pytest.raises(ConstraintError):
        PotentialSystem(1, ReciprocalFlux(1))
    with pytest.raises(ConstraintError):
        potential_system(-1, 0)


# -- completion ------------------------------------------------------------------------------

def test_complete_scalar():
    assert complete_time_derivative(porous(-1, 1), spt(x=2, w=1)).w_t == 0
    assert complete_time_derivative(HEAT_V, spt(w_x=5, w_xx=3)).w_t == 3


def test_complete_system_leaves_u_t_free():
    pt = complete_time_derivative(potential_system(-2, -0.5), sysp(x=2, u=1, u_t=0.7))
    assert (pt.v_x, pt.v_t, pt.u_t) == (2, 1.5, 0.7)


EQUATIONS = [
    porous(2, 0.5),
    ScalarUPde(-1.5 + 0.5j, 2, 0.3, -0.7, 1.1),
    ScalarVPde(1, -1, 0, 0, -1, 1),
    ScalarVPde(0.5, -2.5, 0.25, -1.5, 0.1, 1),
    potential_system(1, 0.5),
    PotentialSystem(1, PowerFlux(1, -1), LogSource(-2)),
    PotentialSystem(1, PowerFlux(1, -1), ConstSource(3)),
    PotentialSystem(0, ReciprocalFlux(2)),
]


@pytest.mark.parametrize("eq", EQUATIONS, ids=lambda e: e.describe())
def test_completed_points_have_exact_zero_residual(eq):
    rng = random.Random(5)
    for _ in range(20):
        vals = [complex(rng.uniform(0.5, 2), rng.uniform(-0.3, 0.3)) for _ in range(8)]
        if eq.kind == "system":
            pt = SystemJetPoint(*vals[:6], 0j, 0j)
        else:
            pt = ScalarJetPoint(*vals[:4], 0j, vals[4])
        pt = complete_time_derivative(eq, pt)
        assert all(r == 0 for r in residual(eq, pt))


@pytest.mark.parametrize("eq", EQUATIONS, ids=lambda e: e.describe())
def test_terms_sum_to_residual(eq):
    rng = random.Random(9)
    vals = [complex(rng.uniform(0.5, 2)) for _ in range(8)]
    pt = SystemJetPoint(*vals) if eq.kind == "system" else ScalarJetPoint(*vals[:6])
    for r, terms in zip(residual(eq, pt), residual_terms(eq, pt)):
        assert sum(terms) == pytest.approx(r, abs=1e-14)


# -- family closure against hand-written residuals ------------------------------------------

def radial(n, mu):
    def res(x, u, ux, uxx, ut):
        return ut - (n * u ** (n - 1) * ux ** 2 + u ** n * uxx + mu / x * u ** n * ux)
    return res


def boussinesq(n, c):
    def res(x, u, ux, uxx, ut):
        return ut - (n * u ** (n - 1) * ux ** 2 + u ** n * uxx + c * u ** n * ux)
    return res


def integrated_case2(n):
    def res(x, v, vx, vxx, vt):
        r = vx / x
        return vt - (r ** n * vxx - n / (n + 2) * r ** (n + 1))
    return res


@pytest.mark.parametrize("eq, hand", [
    (porous(2, 0.5), radial(2, 0.5)),
    (porous(-3, 2), radial(-3, 2)),
    (ScalarUPde(-2, 1, 0, 0, 1), boussinesq(-2, 1)),
    (ScalarUPde(3, 1, 0, 0, 8 / 3), boussinesq(3, 8 / 3)),
    (ScalarVPde(1, 2, -0.5, 3, 0, 1), integrated_case2(2)),
])
def test_scalar_family_matches_hand_coded(eq, hand):
    rng = random.Random(1)
    for _ in range(5):
        x, u, ux, uxx, ut = (rng.uniform(0.5, 2) for _ in range(5))
        got = residual(eq, spt(x=x, w=u, w_x=ux, w_xx=uxx, w_t=ut))[0]
        assert got == pytest.approx(hand(x, u, ux, uxx, ut), rel=1e-13)


def system_radial(n, mu):
    def res(x, u, ux, vx, vt):
        return vx - x * u, vt - (x * u ** n * ux + (mu - 1) / (n + 1) * u ** (n + 1))
    return res


def system_log(mu):
    def res(x, u, ux, vx, vt):
        return vx - x * u, vt - (x / u * ux + (mu - 1) * cmath.log(u))
    return res


def system_quotient(eps):
    def res(x, u, ux, vx, vt):
        return vx - x * u, vt - (eps * x / u * ux + 2 * (eps - 1))
    return res


def system_case3(n):
    l1, l2 = n * n / (4 * (n + 1) ** 2), -n / (2 * (n + 1) ** 2)

    def res(x, u, ux, vx, vt):
        return vx - x * u, vt - (l1 * x * u ** -(n + 2) * ux + l2 * u ** -(n + 1))
    return res


@pytest.mark.parametrize("eq, hand", [
    (potential_system(-2, -0.5), system_radial(-2, -0.5)),
    (PotentialSystem(1, PowerFlux(1, -1), LogSource(0.5)), system_log(1.5)),
    (PotentialSystem(1, PowerFlux(-1, -1), ConstSource(-4)), system_quotient(-1)),
    (PotentialSystem(1, PowerFlux(4 / 36, -4), PowerSource(-2 / 18, -3)), system_case3(2)),
])
def test_system_family_matches_hand_coded(eq, hand):
    rng = random.Random(2)
    for _ in range(5):
        x, u, ux, vx, vt = (rng.uniform(0.5, 2) for _ in range(5))
        got = residual(eq, sysp(x=x, u=u, u_x=ux, v_x=vx, v_t=vt))
        want = hand(x, u, ux, vx, vt)
        for g, w in zip(got, want):
            assert g == pytest.approx(w, rel=1e-13, abs=1e-15)


def test_heat_consistency_across_shapes():
    rng = random.Random(3)
    for _ in range(10):
        vals = [rng.uniform(-2, 2) for _ in range(6)]
        pt = spt(*vals)
        assert residual_scalar_u(HEAT_U, pt) == pytest.approx(residual_scalar_v(HEAT_V, pt), rel=1e-13)


def test_describe_and_dict():
    assert porous(2, 0.5).describe() == "u_t = 1*(u^2 u_x)_x + (0.5*u^n/x)*u_x"
    assert potential_system(-2, -0.5).describe() == "v_x = x*u, v_t = 1*x*u^-2*u_x + 1.5*u^-1"
    assert ScalarVPde(1, -2, p=0).as_dict()["kind"] == "scalar-v"
    assert SOLUTIONS["S1"].satisfies.as_dict()["n"] == -1
