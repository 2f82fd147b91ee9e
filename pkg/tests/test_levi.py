"""Finite-difference Wirtinger calculus against the closed-form oracles."""

import math

import numpy as np
import pytest

from bidisc_lab.levi import (
    DefiningFunction,
    closed_complex_hessian,
    closed_wirtinger_gradient,
    complex_hessian,
    complex_tangent,
    levi_report,
    levi_restricted,
    totally_real_check,
    value,
    wirtinger_gradient,
)
from bidisc_lab.rng import RngStream, sample_ball, sample_bidisc

# frozen at first build from the default stencil; a drift means the FD
# pipeline changed, not that the mathematics did
GOLDEN_RHO_LEVEL_LEVI = 0.4079320024581776

ALL_KINDS = [
    DefiningFunction.rho_level(0.7),
    DefiningFunction.minkowski_level(2.5),
    DefiningFunction.sphere(),
    DefiningFunction.ellipsoid(0.45),
    DefiningFunction.flat_control(0.5),
]


def _ambient_point(f, rng):
    if f.kind in ("rho-level", "flat-control"):
        return sample_bidisc(rng, 0.9)
    if f.kind == "minkowski-level":
        return tuple(rng.gen.standard_normal(3) + 1j * rng.gen.standard_normal(3))
    return sample_ball(rng, 0.9)


# ---------------------------------------------------------------------------
# construction and evaluation


@pytest.mark.parametrize(
    "build",
    [
        lambda: DefiningFunction("junk"),
        lambda: DefiningFunction.rho_level(1.5),
        lambda: DefiningFunction.minkowski_level(1.0),
        lambda: DefiningFunction.ellipsoid(0.0),
        lambda: DefiningFunction.flat_control(0.0),
    ],
)
def test_defining_function_validation(build):
    with pytest.raises(ValueError):
        build()


def test_value_spots():
    assert value(DefiningFunction.rho_level(0.8), (0.8, 0.0)) == 0.0
    assert value(DefiningFunction.minkowski_level(2.125), (1.25, 0.75j, 0)) == 0.0
    assert value(DefiningFunction.sphere(), (0.6, 0.8)) == pytest.approx(0.0, abs=1e-15)
    assert value(DefiningFunction.ellipsoid(0.4), (0.4, 0.0)) == 0.0
    assert value(DefiningFunction.flat_control(0.5), (0.5, 0.3)) == 0.0


def test_value_rejects_wrong_dimension_and_nonfinite():
    with pytest.raises(ValueError):
        value(DefiningFunction.sphere(), (0.1, 0.2, 0.3))
    with pytest.raises(ValueError):
        value(DefiningFunction.minkowski_level(2.0), (0.1, 0.2))
    with pytest.raises(ValueError):
        value(DefiningFunction.sphere(), (math.nan, 0.2))


# ---------------------------------------------------------------------------
# FD derivatives against the closed forms


@pytest.mark.parametrize("f", ALL_KINDS, ids=lambda f: f.kind)
def test_fd_gradient_matches_closed_form(f):
    rng = RngStream(51, 0)
    for _ in range(30):
        p = _ambient_point(f, rng)
        np.testing.assert_allclose(
            wirtinger_gradient(f, p), closed_wirtinger_gradient(f, p), atol=1e-7
        )


@pytest.mark.parametrize("f", ALL_KINDS, ids=lambda f: f.kind)
def test_fd_hessian_matches_closed_form(f):
    rng = RngStream(52, 0)
    for _ in range(15):
        p = _ambient_point(f, rng)
        np.testing.assert_allclose(
            complex_hessian(f, p), closed_complex_hessian(f, p), atol=1e-6
        )


def test_richardson_extrapolation_tightens_the_gradient():
    f = DefiningFunction.rho_level(0.7)
    p = (0.31 + 0.22j, -0.45 + 0.11j)
    plain = wirtinger_gradient(f, p)
    refined = wirtinger_gradient(f, p, richardson=True)
    exact = closed_wirtinger_gradient(f, p)
    assert np.max(np.abs(refined - exact)) <= np.max(np.abs(plain - exact)) + 1e-14
    np.testing.assert_allclose(refined, exact, atol=1e-9)
    np.testing.assert_allclose(
        complex_hessian(f, p, richardson=True), closed_complex_hessian(f, p), atol=1e-7
    )


def test_fd_hessian_is_exactly_hermitian():
    f = DefiningFunction.rho_level(0.6)
    H = complex_hessian(f, (0.3 + 0.2j, -0.1 + 0.4j))
    assert np.array_equal(H, H.conj().T)


def test_ellipsoid_hessian_is_the_weighted_identity():
    f = DefiningFunction.ellipsoid(0.3)
    np.testing.assert_allclose(
        closed_complex_hessian(f, (0.1, 0.2)), np.diag([1.0, 0.09]), atol=1e-15
    )


def test_ambient_guard_blocks_stencils_near_the_boundary():
    with pytest.raises(ValueError):
        wirtinger_gradient(DefiningFunction.rho_level(0.7), (0.9995, 0.0))
    with pytest.raises(ValueError):
        complex_hessian(DefiningFunction.sphere(), (1.0, 0.0))


# ---------------------------------------------------------------------------
# tangents and the restricted form


def test_sphere_tangent_and_levi():
    f = DefiningFunction.sphere()
    np.testing.assert_allclose(
        wirtinger_gradient(f, (0.6, 0.8)), [0.6, 0.8], atol=1e-10
    )
    np.testing.assert_allclose(complex_tangent(f, (0.6, 0.8)), [0.8, -0.6], atol=1e-8)
    assert levi_restricted(f, (0.6, 0.8)) == pytest.approx(1.0, abs=1e-6)


def test_minkowski_level_tangent_respects_the_quadric():
    """The holomorphic constraint cuts the kernel down to one direction."""
    f = DefiningFunction.minkowski_level(2.125)
    p = (1.25, 0.75j, 0.0)
    np.testing.assert_allclose(complex_tangent(f, p), [0, 0, 1], atol=1e-8)
    assert levi_restricted(f, p) == pytest.approx(1.0, abs=1e-6)


def test_rho_level_golden_value_and_closed_form():
    f = DefiningFunction.rho_level(0.8)
    p = (0.8, 0.0)
    fd_val = levi_restricted(f, p)
    assert fd_val == pytest.approx(GOLDEN_RHO_LEVEL_LEVI, abs=1e-10)
    # independent route: exact gradient kernel and exact Hessian
    g = closed_wirtinger_gradient(f, p)
    v = np.array([-g[1], g[0]])
    v = v / np.linalg.norm(v)
    closed_val = float((v.conj() @ closed_complex_hessian(f, p) @ v).real)
    assert fd_val == pytest.approx(closed_val, abs=1e-6)


def test_flat_control_levi_vanishes():
    f = DefiningFunction.flat_control(0.5)
    np.testing.assert_allclose(
        wirtinger_gradient(f, (0.5, 0.3j)), [0.5, 0.0], atol=1e-10
    )
    np.testing.assert_allclose(complex_tangent(f, (0.5, 0.0)), [0.0, 1.0], atol=1e-8)
    assert abs(levi_restricted(f, (0.5, 0.3))) < 1e-12


def test_levi_restricted_rejects_off_surface_points():
    with pytest.raises(ValueError):
        levi_restricted(DefiningFunction.sphere(), (0.3, 0.4))


def test_complex_tangent_rejects_degenerate_gradient():
    with pytest.raises(ValueError):
        complex_tangent(DefiningFunction.sphere(), (0.0, 0.0))


def test_levi_report_classifications():
    rep = levi_report(DefiningFunction.rho_level(0.8), (0.8, 0.0))
    assert rep.classification == "strongly-pseudoconvex"
    assert rep.levi_value == pytest.approx(GOLDEN_RHO_LEVEL_LEVI, abs=1e-10)
    assert rep.point == (0.8 + 0j, 0j)

    flat = levi_report(DefiningFunction.flat_control(0.5), (0.5, 0.3))
    assert flat.classification == "levi-flat"

    degen = levi_report(DefiningFunction.rho_level(0.5), (0.0, 0.0))
    assert degen.classification == "degenerate-gradient"
    assert math.isnan(degen.levi_value)


# ---------------------------------------------------------------------------
# totally real subspaces


def test_totally_real_check_cases():
    ok, meet = totally_real_check([(1, 0), (0, 1)])
    assert ok and meet == 0
    ok, meet = totally_real_check([(0, 1), (0, 1j)])
    assert not ok and meet == 2
    ok, meet = totally_real_check([(1, 0), (1j, 0)])
    assert not ok and meet == 2
    ok, meet = totally_real_check([(1, 1j)])
    assert ok and meet == 0


def test_totally_real_check_rejects_bad_bases():
    with pytest.raises(ValueError):
        totally_real_check([])
    with pytest.raises(ValueError):
        totally_real_check([(1, 0), (2, 0)])
    with pytest.raises(ValueError):
        totally_real_check([(1, 0), (1, 0, 0)])
