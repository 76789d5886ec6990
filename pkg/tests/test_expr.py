import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmt.errors import SingularityError, UnboundParameterError
from pmt.expr import (BranchLog, Constant, Param, PowConst, T, U, V, W, X, eval_jet, eval_value,
                      exp, free_params, free_vars, ln, parse, rename, sqrt, to_text)


def test_text_form():
    k = Param("k")
    assert to_text(X ** k * W) == "(mul (pow x (param k)) w)"
    assert to_text(Constant(1 + 2j)) == "(complex 1.0 2.0)"
    assert str(ln(X) / sqrt(T)) == "(div (ln x) (sqrt t))"


@pytest.mark.parametrize("text", [
    "(pow x (param k))",
    "(add (mul 2.0 x) (exp (sub t w)))",
    "(div (complex 0.0 1.0) (sqrt (ln u)))",
    "(pow v -0.5)",
])
def test_parse_round_trip(text):
    assert to_text(parse(text)) == text


@pytest.mark.parametrize("text", [
    "(pow x",
    "(frob x)",
    "(add x)",
    "(ln x y)",
    "y",
    "(pow x (add x 1.0))",
    "x y",
    ")",
])
def test_parse_errors(text):
    with pytest.raises((ValueError, TypeError)):
        parse(text)


leaves = st.one_of(
    st.sampled_from([X, T, U, V, W, Param("k")]),
    st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False).map(Constant),
)


def _extend(children):
    exponents = st.one_of(st.just(Param("a")), st.floats(-3, 3).map(lambda f: Constant(complex(f))))
    return st.one_of(
        st.tuples(children, children).map(lambda p: p[0] + p[1]),
        st.tuples(children, children).map(lambda p: p[0] - p[1]),
        st.tuples(children, children).map(lambda p: p[0] * p[1]),
        st.tuples(children, children).map(lambda p: p[0] / p[1]),
        st.tuples(children, exponents).map(lambda p: PowConst(*p)),
        children.map(ln), children.map(exp), children.map(sqrt),
    )


@settings(max_examples=100, deadline=None)
@given(st.recursive(leaves, _extend, max_leaves=12))
def test_round_trip_property(e):
    assert parse(to_text(e)) == e


def test_exponent_must_be_constant_or_param():
    with pytest.raises(TypeError):
        PowConst(X, X)
    assert X ** "k" == PowConst(X, Param("k"))


def test_free_vars_and_params():
    e = X ** Param("a") * W + Param("c") * ln(T)
    assert free_vars(e) == {"x", "t", "w"}
    assert free_params(e) == {"a", "c"}


def test_rename():
    assert rename(W * X ** 2, {"w": "u"}) == U * X ** 2


def test_eval_value():
    e = X ** Param("k") * W
    assert eval_value(e, {"x": 2, "w": 3}, {"k": 2}) == 12
    assert eval_value(X ** 1j, {"x": 1}) == 1
    assert cmath.isclose(eval_value(exp(T + W / 2), {"t": 0, "w": 2}), math.e)


def test_unbound_parameter():
    with pytest.raises(UnboundParameterError) as info:
        eval_value(X ** Param("k"), {"x": 2})
    assert "k" in str(info.value)
    with pytest.raises(KeyError):
        eval_jet(Param("q"), {})


@pytest.mark.parametrize("e, base", [
    (1 / X, {"x": 0}),
    (ln(X), {"x": 0}),
    (sqrt(W), {"w": 0}),
    (X ** -2.0, {"x": 0}),
])
def test_singular_values(e, base):
    with pytest.raises(SingularityError):
        eval_value(e, base)


def test_branch_log_counts_events():
    log = BranchLog(0.05)
    eval_value(X ** 0.5, {"x": complex(-1, 0.01)}, branch=log)
    eval_value(X ** 0.5, {"x": complex(-1, 1)}, branch=log)
    eval_value(X ** 2.0, {"x": -1}, branch=log)
    assert log.events == 1


@pytest.mark.parametrize("e, base, params, expected", [
    (X ** Param("a"), {"x": 2}, {"a": -1},
     {"v": 0.5, "dx": -0.25, "dxx": 0.25}),
    (W, {"w": 7}, {}, {"v": 7, "dw": 1}),
    (exp(T + W / 2), {"t": 0, "w": 0}, {}, {"v": 1, "dt": 1, "dw": 0.5, "dww": 0.25}),
])
def test_eval_jet(e, base, params, expected):
    jet = eval_jet(e, base, params)
    for name, value in jet.coeffs().items():
        assert value == pytest.approx(expected.get(name, 0), abs=1e-15), name


def test_eval_jet_roles():
    e = X * U * V
    base = {"x": 2, "u": 3, "v": 5}
    ju = eval_jet(e, base, roles={"x": "x", "u": "w"})
    jv = eval_jet(e, base, roles={"x": "x", "v": "w"})
    assert (ju.dw, jv.dw) == (10, 6)
    assert ju.dxw == 5 and jv.dxw == 3
