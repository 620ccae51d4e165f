import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import central_difference
from ricci4.closed_forms import (DerivedConstants, dependent_components, envelope, exact_D,
                                 exact_metric, implicit_A, implicit_residual, solution_form)
from ricci4.flow import asymptotic_profile, integrate, rhs
from ricci4.lie_algebra import GeometrySpec, SpecError
from ricci4.verify import CLOSED_FORM_CASES, case, envelope_violation, log_times

A6 = GeometrySpec("A6")
A7 = GeometrySpec("A7")
A8 = GeometrySpec("A8")


# --------------------------------------------------------------------------
# examples
# --------------------------------------------------------------------------

def test_a6_at_one():
    g = exact_metric(A6, None, (1, 1, 1, 1), 1.0).values
    np.testing.assert_allclose(g, (4 ** (1 / 3), 1.0, 4 ** (-1 / 3), 4 ** (2 / 3)), rtol=1e-15)


def test_a7i_D():
    assert exact_D(A7, "P6.i", (1, 1, 1, 1), 7 / 3) == pytest.approx(0.5, rel=1e-15)


def test_a10iii_initial():
    g = exact_metric(GeometrySpec("A10"), "P9.iii", (1, 1, 1, 1), 0.0).values
    assert tuple(g) == (1.0, 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        exact_metric(GeometrySpec("A10"), "P9.iii", (1, 1, 1, 1), 1.0)


def test_exact_values_simple_classes():
    g = exact_metric(GeometrySpec("A2", k=2.0), None, (1, 2, 3, 4), 0.5).values
    np.testing.assert_allclose(g, (1, 2, 3, 4 + 2 * 7))
    g = exact_metric(GeometrySpec("A3", k=0.5), None, (2, 2, 3, 4), 1.0).values
    np.testing.assert_allclose(g, (2, 2, 3, 7))
    g = exact_metric(GeometrySpec("A4"), None, (1, 1, 1, 1), 10.0).values
    assert g[0] == pytest.approx(31 ** (1 / 3), rel=1e-15)


def test_exact_errors():
    with pytest.raises(SpecError):
        exact_metric(GeometrySpec("A3", k=0.5), None, (1, 2, 3, 4), 1.0)
    with pytest.raises(SpecError):
        exact_metric(GeometrySpec("A5"), None, (1, 2, 3, 4), 1.0)
    with pytest.raises(SpecError):
        exact_metric(GeometrySpec("A9"), "P8.i", (1, 2, 3, 4), 1.0)
    with pytest.raises(ValueError):
        exact_metric(A6, None, (1, 2, 3, 4), -1.0)


def test_implicit_examples():
    c = DerivedConstants.from_initial("P6.i", (1, 2, 2, 1))
    assert c.k3 == 0.0
    assert implicit_A("P6.i", c, 2.5) == 11.0
    c = DerivedConstants.from_initial("P6.i", (1.5, 2, 3, 4))
    assert implicit_A("P6.i", c, 0.0) == 1.5


def test_a8_constants_and_limit():
    c = DerivedConstants.from_initial("P7", (1, 2, 3, 4))
    assert c.k4 ** 2 == pytest.approx(400 / 96, rel=1e-14)
    ts = np.concatenate([[0.0], np.logspace(-3, 3, 60)])
    A = np.array([implicit_A("P7", c, t) for t in ts])
    assert np.all(np.diff(A) >= -4e-16 * A[1:])
    assert A[-1] == pytest.approx(c.k4 / 2, rel=1e-12)
    for t, a in zip(ts, A):
        assert implicit_residual("P7", c, a, t) <= 1e-12


@given(lam=st.tuples(*[st.floats(0.01, 100.0)] * 4))
def test_a8_initial_A_below_limit(lam):
    # k4 >= 2 lambda1 by AM-GM, with equality iff lambda2 = lambda3
    assert lam[0] <= DerivedConstants.from_initial("P7", lam).k4 / 2 * (1 + 1e-15)


def test_a8_equal_BC_is_stationary_in_A():
    c = DerivedConstants.from_initial("P7", (1, 2, 2, 3))
    assert implicit_A("P7", c, 50.0) == pytest.approx(1.0, rel=1e-15)


def test_dependent_components_examples():
    c = DerivedConstants.from_initial("P6.ii", (1, 1, 1, 1), alpha=0.0)
    d = dependent_components("P6.ii", c, None, 1 / 3)
    np.testing.assert_allclose([d["B"], d["C"], d["D"]], [2 ** (1 / 3), 2 ** (1 / 3), 2 ** (-1 / 3)],
                               rtol=1e-15)
    lam = (1.0, 2.0, 2.0, 3.0)
    c = DerivedConstants.from_initial("P6.i", lam)
    for t in (0.1, 1.0, 30.0):
        d = dependent_components("P6.i", c, implicit_A("P6.i", c, t), t)
        assert d["B"] == d["C"]


def test_a7i_reconstruction_reproduces_monitors():
    lam = (1.0, 2.0, 3.0, 4.0)
    c = DerivedConstants.from_initial("P6.i", lam)
    d = dependent_components("P6.i", c, implicit_A("P6.i", c, 10.0), 10.0)
    A, B, C, D = d["A"], d["B"], d["C"], d["D"]
    assert B * C * D * D == pytest.approx(2 * 3 * 16, rel=1e-10)
    assert A * D * (B - C) == pytest.approx(1 * 4 * (2 - 3), rel=1e-10)


def test_p6ii_needs_alpha():
    with pytest.raises(SpecError):
        DerivedConstants.from_initial("P6.ii", (1, 1, 1, 1), alpha=1.0)


def test_envelope_examples():
    assert envelope("A5", (1, 1, 1, 1), 1.0)["D"] == (4.0, 5.0)
    assert envelope("A9ii", (1, 1, 2, 1), 0.0)["A"] == (1.0, 1.0)
    assert envelope("A9ii", (1, 1, 2, 1), 5.0)["C"] == (1.0, 2.0)
    with pytest.raises(SpecError):
        envelope("A6", (1, 1, 1, 1), 1.0)


@given(lam=st.tuples(*[st.floats(0.1, 10.0)] * 4), t=st.floats(0.0, 1e4), k=st.floats(-3, 3))
def test_envelope_ordered(lam, t, k):
    for name in ("A3_unequal", "A5", "A9ii"):
        for lo, hi in envelope(name, lam, t, k=k, a3=0.5).values():
            assert lo <= hi * (1 + 1e-14)


def test_solution_forms():
    assert solution_form(A6, None, (1, 2, 3, 4)).kind == "exact"
    assert solution_form(A8, None, (1, 2, 3, 4)).kind == "implicit"
    assert solution_form(GeometrySpec("A5"), None, (1, 2, 3, 4)).kind == "envelope"
    assert solution_form(GeometrySpec("A3", k=1.0), None, (1, 2, 3, 4)).kind == "envelope"
    assert solution_form(GeometrySpec("A9"), "P8.i", (1, 2, 3, 4)).kind == "numeric_only"
    assert solution_form(GeometrySpec("A10"), "P9.iii", (2, 2, 2, 1)).validity == (0.0, 2.0)
    assert solution_form(GeometrySpec("B9", radii=(1.0,)), None, None).validity[1] == pytest.approx(1 / 6)


# --------------------------------------------------------------------------
# end-to-end: closed forms solve the flow equation
# --------------------------------------------------------------------------

@pytest.mark.parametrize("name", CLOSED_FORM_CASES)
def test_closed_form_satisfies_rhs(name):
    c = case(name)
    p = c.problem(1.0)
    lam = c.lam if c.lam else p.initial.values
    top = 0.9 * (lam[0] if name == "A10 P9.iii" else 1e3)
    if not c.spec.is_lie_group:
        top = min(top, 0.9 * p.constants.validity()[1])
    g = lambda t: exact_metric(c.spec, c.family, lam, t, alpha=c.alpha).values
    for t in log_times(top):
        h = 1e-4 * t
        num = central_difference(g, t, h)
        ref = rhs(p.constants, g(t))
        scale = max(np.max(np.abs(ref)), 1e-300)
        assert np.max(np.abs(num - ref)) <= 1e-6 * scale, (name, t)


@pytest.mark.parametrize("lam", [(1, 2, 3, 4), (0.5, 3, 1, 2), (2, 1, 1, 5)])
def test_a8_reconstruction_satisfies_rhs(lam):
    p = case("A8").problem(1.0)
    g = lambda t: exact_metric(A8, None, lam, t).values
    for t in log_times(1e3):
        num = central_difference(g, t, 1e-4 * t)
        ref = rhs(p.constants, g(t))
        assert np.max(np.abs(num - ref)) <= 1e-6 * np.max(np.abs(ref))


def test_a7i_asymptotics():
    c = case("A7 P6.i")
    tr = integrate(c.problem(1e6))
    t, A = tr.times[-1], tr.metric[-1, 0]
    assert A / (4 * t) == pytest.approx(1.0, abs=0.01)
    e = asymptotic_profile(tr).exponents
    np.testing.assert_allclose([e[1], e[2], -e[3]], [1 / 3] * 3, atol=0.05)


@given(lam=st.tuples(*[st.floats(0.2, 5.0)] * 4), t1=st.floats(0.0, 1e3), t2=st.floats(0.0, 1e3))
def test_p6i_implicit_monotone(lam, t1, t2):
    c = DerivedConstants.from_initial("P6.i", lam)
    lo, hi = sorted((t1, t2))
    a_lo, a_hi = implicit_A("P6.i", c, lo), implicit_A("P6.i", c, hi)
    assert a_lo <= a_hi
    assert a_lo >= lam[0]
    assert implicit_residual("P6.i", c, a_hi, hi) <= 1e-12


@given(lam=st.tuples(*[st.floats(0.2, 5.0)] * 4), t=st.floats(0.0, 1e3))
def test_p7_confined(lam, t):
    c = DerivedConstants.from_initial("P7", lam)
    A = implicit_A("P7", c, t)
    assert lam[0] <= A <= c.k4 / 2
    assert implicit_residual("P7", c, A, t) <= 1e-12


# --------------------------------------------------------------------------
# envelopes bracket the numeric flow
# --------------------------------------------------------------------------

@pytest.mark.parametrize("name,lam,kw", [
    ("A3_unequal", (1, 2, 3, 4), {"k": 0.7}), ("A3_unequal", (3, 1, 2, 1), {"k": -1.2}),
    ("A5", (1, 2, 3, 4), {}), ("A5", (2, 1, 1, 0.5), {}),
    ("A9ii", (1, 1, 2, 1), {"a3": 0.0})])
def test_envelopes_bracket_flow(name, lam, kw):
    worst = envelope_violation(name, lam, **kw)
    assert max(worst.values()) == 0.0, worst


def test_a9ii_printed_D_law_vs_flow():
    # the A, B, C bounds hold; D stays at lambda4 instead of growing linearly
    worst = envelope_violation("A9ii", (1, 1, 2, 1), a3=0.5)
    assert worst["A"] == worst["B"] == worst["C"] == 0.0
    assert worst["D"] > 0.5
    fixed = envelope_violation("A9ii", (1, 1, 2, 1), a3=0.5, printed=False)
    assert max(fixed.values()) == 0.0
