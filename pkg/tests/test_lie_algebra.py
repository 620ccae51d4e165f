import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from ricci4.diagonalization import lambda_template
from ricci4.lie_algebra import (A_CLASSES, B_CLASSES, GeometrySpec, SpecError, StructureConstants,
                                admissible_mn, build_structure_constants, jacobi_residual,
                                solve_sol_mn, transform_basis)


def spec_for(cls, k=0.7):
    return GeometrySpec(cls, k=k) if cls in ("A2", "A3") else GeometrySpec(cls)


@pytest.mark.parametrize("cls", A_CLASSES)
def test_catalog_constants_are_unimodular_lie_algebras(cls):
    C = build_structure_constants(spec_for(cls))
    assert C.antisymmetry_residual() == 0.0
    assert C.unimodularity_residual() <= 1e-15
    assert jacobi_residual(C) <= 1e-12


@pytest.mark.parametrize("k", [-0.5, 0.0, 0.3, 1.0, 2.5])
def test_a2_a3_constants_for_various_k(k):
    for cls in ("A2", "A3"):
        C = build_structure_constants(GeometrySpec(cls, k=k))
        assert jacobi_residual(C) <= 1e-12
        assert C.unimodularity_residual() <= 1e-15


def test_a10_constants():
    c = build_structure_constants(GeometrySpec("A10")).c
    expected = np.zeros((4, 4, 4))
    for k, i, j in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        expected[k, i, j], expected[k, j, i] = 1.0, -1.0
    np.testing.assert_array_equal(c, expected)


def test_a1_is_abelian():
    assert not np.any(build_structure_constants(GeometrySpec("A1")).c)


def test_a2_k0_constants():
    c = build_structure_constants(GeometrySpec("A2", k=0.0)).c
    assert c[0, 0, 3] == 1.0 and c[1, 1, 3] == 0.0 and c[2, 2, 3] == -1.0
    assert np.count_nonzero(c) == 4          # two entries and their antisymmetric partners


def test_bracket_is_bilinear_and_matches_catalog():
    C = build_structure_constants(GeometrySpec("A6"))
    np.testing.assert_array_equal(C.bracket([1, 0, 0, 0], [0, 0, 0, 1]), [0, 1, 0, 0])
    np.testing.assert_array_equal(C.bracket([0, 0, 0, 1], [1, 0, 0, 0]), [0, -1, 0, 0])


def test_spec_validation():
    with pytest.raises(SpecError):
        GeometrySpec("A2")
    with pytest.raises(SpecError):
        GeometrySpec("A2", k=-0.6)
    with pytest.raises(SpecError):
        GeometrySpec("A4", k=1.0)
    with pytest.raises(SpecError):
        GeometrySpec("B4", radii=(1.0,))
    with pytest.raises(SpecError):
        GeometrySpec("B9", radii=(-1.0,))
    with pytest.raises(SpecError):
        GeometrySpec("A9", delta=1)
    with pytest.raises(SpecError):
        GeometrySpec("C3")
    assert GeometrySpec("a10").delta == 1 and GeometrySpec("A9").delta == -1


@pytest.mark.parametrize("cls", B_CLASSES)
def test_b_classes_have_no_lie_chart(cls):
    spec = GeometrySpec(cls, radii=(1.0,) if cls not in ("B4", "B5", "B6") else (1.0, 1.0))
    with pytest.raises(SpecError):
        build_structure_constants(spec)


def test_identity_transform():
    C = build_structure_constants(GeometrySpec("A8"))
    assert transform_basis(C, np.eye(4)) == C


def test_transform_a2_alpha():
    C = build_structure_constants(GeometrySpec("A2", k=2.0))
    out = transform_basis(C, lambda_template("A2", (0.5,)))
    assert out.c[0, 1, 3] == pytest.approx(-0.5, abs=1e-14)


def test_transform_a6_alpha():
    C = build_structure_constants(GeometrySpec("A6"))
    out = transform_basis(C, lambda_template("A6", (1.0, 3.0)))
    assert out.c[2, 0, 3] == pytest.approx(2.0, abs=1e-14)


def test_transform_rejects_singular():
    C = build_structure_constants(GeometrySpec("A4"))
    with pytest.raises(np.linalg.LinAlgError):
        transform_basis(C, np.zeros((4, 4)))


def test_jacobi_residual_detects_non_algebra():
    assert jacobi_residual(np.zeros((4, 4, 4))) == 0.0
    assert jacobi_residual(build_structure_constants(GeometrySpec("A7"))) <= 1e-15
    bad = StructureConstants.from_brackets({(2, 3): {1: 1.0}, (1, 3): {2: 1.0}, (1, 4): {1: 1.0}})
    assert jacobi_residual(bad) > 0.1


def test_sol_mn_roots():
    pairs = admissible_mn(20)
    assert pairs, "expected at least one admissible (m, n) in [2, 20]^2"
    for m, n in pairs[:25]:
        r = solve_sol_mn(m, n)
        assert r.alpha > 0
        assert abs(r.alpha + r.beta + r.gamma) <= 1e-12
        x = r.roots
        assert x.sum() == pytest.approx(m, rel=1e-12)
        assert x[0] * x[1] + x[0] * x[2] + x[1] * x[2] == pytest.approx(n, rel=1e-12)
        assert np.max(np.abs(x ** 3 - m * x ** 2 + n * x - 1)) <= 1e-10
        assert r.k >= -0.5


def test_sol_mn_roots_against_companion_matrix():
    m, n = admissible_mn(20)[0]
    ref = np.sort(np.linalg.eigvals(np.array([[m, -n, 1.0], [1, 0, 0], [0, 1, 0]])).real)[::-1]
    np.testing.assert_allclose(solve_sol_mn(m, n).roots, ref, rtol=1e-10)


def test_sol_mn_rejects_bad_pairs():
    with pytest.raises(SpecError):
        solve_sol_mn(3, 3)
    with pytest.raises(SpecError):
        solve_sol_mn(2, 2 + 1)       # 2,3: cubic x^3-2x^2+3x-1 has a complex pair


def test_spec_from_mn_derives_k():
    m, n = admissible_mn(20)[0]
    spec = GeometrySpec("A2", mn=(m, n))
    assert spec.k == pytest.approx(solve_sol_mn(m, n).k)


def _well_conditioned(m):
    with np.errstate(all="ignore"):
        return abs(np.linalg.det(m)) > 0.05 and np.linalg.cond(m) < 1e3


invertible = arrays(np.float64, (4, 4), elements=st.floats(-2, 2)).filter(_well_conditioned)


@given(cls=st.sampled_from(A_CLASSES), L=invertible)
def test_transform_roundtrip(cls, L):
    C = build_structure_constants(spec_for(cls))
    mid = transform_basis(C, L)
    back = transform_basis(mid, np.linalg.inv(L))
    # forward error of the round trip: eps x cond(L) x size of the intermediate constants
    bound = 64 * np.finfo(float).eps * np.linalg.cond(L) * max(1.0, np.max(np.abs(mid.c)))
    np.testing.assert_allclose(back.c, C.c, atol=bound)


@given(cls=st.sampled_from(A_CLASSES), L=invertible)
def test_transform_preserves_jacobi_and_antisymmetry(cls, L):
    out = transform_basis(build_structure_constants(spec_for(cls)), L)
    assert jacobi_residual(out) <= 1e-10
    assert out.antisymmetry_residual() <= 1e-12
    assert out.unimodularity_residual() <= 1e-10
