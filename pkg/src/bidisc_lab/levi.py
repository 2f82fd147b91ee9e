"""Numerical CR analysis: Wirtinger calculus, Levi forms, totally real tests.

A real hypersurface {r = 0} carries, at each regular point, the complex
tangent space {v : sum_j dr/dz_j v_j = 0} and on it the Levi form

    L(v) = sum_{j,k} d^2 r / dz_j dconj(z_k)  conj(v_j) v_k .

Derivatives are taken by central finite differences on the underlying
real coordinates and assembled into Wirtinger form,

    dr/dz_j           = (d/dx_j - i d/dy_j) r / 2,
    d^2 r/dz_j dcz_k  = (R_xx + R_yy + i (R_xy - R_yx))_{jk} / 4,

with the Hessian Hermitian-symmetrized afterwards.  Closed-form
gradients and Hessians are registered for every built-in defining
function and serve as an independent cross-check; the finite-difference
path is always the one exercised by callers.

Steps scale with max(1, |p|_inf): the second-difference rounding floor
is then ~eps/h^2 regardless of how large the point's coordinates are.
The Hessian step default 1e-4 puts that floor near 7e-8; the gradient
step default 1e-5 puts the first-difference floor near 2e-11.  All
registered functions except the rho-level family are quadratic in the
real coordinates, so the larger Hessian step costs no truncation error
there, and on the rho-level family the h^2 truncation (~1e-8) is far
below any classification threshold in use.

Sign convention: defining functions are negative on the side the
hypersurface bounds pseudoconvexly (the side containing the degenerate
complex curve of its family, where one exists).  For the Minkowski
level sets on the quadric that is the *large*-level side, since the
curve sits at level infinity; hence r = level - form there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

GRAD_STEP = 1e-5
HESS_STEP = 1e-4
DEAD_BAND = 1e-4  # |levi| below this is classified flat
ON_SURFACE_TOL = 1e-8
GRADIENT_FLOOR = 1e-8
_AMBIENT_MARGIN = 1e-3  # clearance a bounded ambient must leave the stencil
_TOL_BOUNDARY = 1e-9

_KINDS = frozenset({"rho-level", "minkowski-level", "sphere", "ellipsoid", "flat-control"})


def _abs2(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


@dataclass(frozen=True)
class DefiningFunction:
    """One registered real-valued defining function."""

    kind: str
    param: float = 0.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown defining function kind {self.kind!r}")

    @classmethod
    def rho_level(cls, a: float):
        """r = |z1-z2|^2 - a^2 |1 - conj(z1) z2|^2 on the bidisc; zero set rho = a."""
        if not 0.0 < a < 1.0:
            raise ValueError(f"need 0 < a < 1, got {a}")
        return cls("rho-level", a)

    @classmethod
    def minkowski_level(cls, level: float):
        """r = level - (|z1|^2+|z2|^2-|z3|^2), restricted to the affine quadric slice."""
        if not level > 1.0:
            raise ValueError(f"need level > 1, got {level}")
        return cls("minkowski-level", level)

    @classmethod
    def sphere(cls):
        """r = |u|^2 + |v|^2 - 1."""
        return cls("sphere")

    @classmethod
    def ellipsoid(cls, t: float):
        """r = |u|^2 + t^2 |v|^2 - t^2."""
        if not 0.0 < t < 1.0:
            raise ValueError(f"need 0 < t < 1, got {t}")
        return cls("ellipsoid", t)

    @classmethod
    def flat_control(cls, c: float):
        """r = |z1|^2 - c^2; a Levi-flat circle bundle used to calibrate FD noise."""
        if not c > 0.0:
            raise ValueError(f"need c > 0, got {c}")
        return cls("flat-control", c)

    @property
    def dim(self) -> int:
        return 3 if self.kind == "minkowski-level" else 2


def value(f: DefiningFunction, p) -> float:
    """Evaluate the defining function."""
    p = _point(f, p)
    if f.kind == "rho-level":
        z1, z2 = p
        a = f.param
        return _abs2(z1 - z2) - a * a * _abs2(1.0 - z1.conjugate() * z2)
    if f.kind == "minkowski-level":
        z1, z2, z3 = p
        return f.param - (_abs2(z1) + _abs2(z2) - _abs2(z3))
    if f.kind == "sphere":
        u, v = p
        return _abs2(u) + _abs2(v) - 1.0
    if f.kind == "ellipsoid":
        u, v = p
        t2 = f.param * f.param
        return _abs2(u) + t2 * _abs2(v) - t2
    # flat-control
    z1, _ = p
    return _abs2(z1) - f.param * f.param


def closed_wirtinger_gradient(f: DefiningFunction, p) -> np.ndarray:
    """Exact Wirtinger gradient; the oracle the FD path is checked against."""
    p = _point(f, p)
    if f.kind == "rho-level":
        z1, z2 = p
        a2 = f.param * f.param
        g1 = (z1 - z2).conjugate() + a2 * z2.conjugate() * (1.0 - z1.conjugate() * z2)
        g2 = -(z1 - z2).conjugate() + a2 * z1.conjugate() * (1.0 - z1 * z2.conjugate())
        return np.array([g1, g2])
    if f.kind == "minkowski-level":
        z1, z2, z3 = p
        return np.array([-z1.conjugate(), -z2.conjugate(), z3.conjugate()])
    if f.kind == "sphere":
        u, v = p
        return np.array([u.conjugate(), v.conjugate()])
    if f.kind == "ellipsoid":
        u, v = p
        return np.array([u.conjugate(), f.param * f.param * v.conjugate()])
    z1, _ = p
    return np.array([z1.conjugate(), 0j])


def closed_complex_hessian(f: DefiningFunction, p) -> np.ndarray:
    """Exact complex Hessian (d^2 r / dz_j dconj(z_k))."""
    p = _point(f, p)
    if f.kind == "rho-level":
        z1, z2 = p
        a2 = f.param * f.param
        h11 = 1.0 - a2 * _abs2(z2)
        h12 = -1.0 + a2 * (1.0 - z1.conjugate() * z2)
        h22 = 1.0 - a2 * _abs2(z1)
        return np.array([[h11, h12], [h12.conjugate(), h22]])
    if f.kind == "minkowski-level":
        return np.diag([-1.0, -1.0, 1.0]).astype(complex)
    if f.kind == "sphere":
        return np.eye(2, dtype=complex)
    if f.kind == "ellipsoid":
        return np.diag([1.0, f.param * f.param]).astype(complex)
    return np.diag([1.0, 0.0]).astype(complex)


def _point(f: DefiningFunction, p) -> np.ndarray:
    p = np.asarray(p, dtype=complex)
    if p.shape != (f.dim,):
        raise ValueError(f"{f.kind} expects a point of C^{f.dim}")
    if not np.all(np.isfinite(p.view(float))):
        raise ValueError("point must have finite components")
    return p


def _check_ambient(f: DefiningFunction, p: np.ndarray) -> None:
    # bidisc-like ambients must leave the stencil room; coordinate-bounded
    # ambients reject points whose coordinates already touch the unit circle
    if f.kind in ("rho-level", "flat-control"):
        if np.max(np.abs(p)) >= 1.0 - _AMBIENT_MARGIN:
            raise ValueError("point too close to the ambient boundary for the FD stencil")
    elif f.kind in ("sphere", "ellipsoid"):
        if np.max(np.abs(p)) >= 1.0 - _TOL_BOUNDARY:
            raise ValueError("a coordinate touches the unit circle; ambient check failed")
    # minkowski-level: ambient is all of C^3


def _scaled_step(p: np.ndarray, h: float) -> float:
    return h * max(1.0, float(np.max(np.abs(p))))


def wirtinger_gradient(
    f: DefiningFunction, p, h: float = GRAD_STEP, richardson: bool = False
) -> np.ndarray:
    """FD Wirtinger gradient (central differences, step scaled by the point size)."""
    p = _point(f, p)
    _check_ambient(f, p)
    if richardson:
        d1 = _fd_gradient(f, p, _scaled_step(p, h))
        d2 = _fd_gradient(f, p, 0.5 * _scaled_step(p, h))
        return (4.0 * d2 - d1) / 3.0
    return _fd_gradient(f, p, _scaled_step(p, h))


def _fd_gradient(f: DefiningFunction, p: np.ndarray, s: float) -> np.ndarray:
    n = p.shape[0]
    g = np.empty(n, dtype=complex)
    for j in range(n):
        dx = (value(f, _shift(p, j, s)) - value(f, _shift(p, j, -s))) / (2.0 * s)
        dy = (value(f, _shift(p, j, 1j * s)) - value(f, _shift(p, j, -1j * s))) / (2.0 * s)
        g[j] = 0.5 * (dx - 1j * dy)
    return g


def _shift(p: np.ndarray, j: int, dz: complex) -> np.ndarray:
    q = p.copy()
    q[j] += dz
    return q


def complex_hessian(
    f: DefiningFunction, p, h: float = HESS_STEP, richardson: bool = False
) -> np.ndarray:
    """FD complex Hessian, Hermitian-symmetrized."""
    p = _point(f, p)
    _check_ambient(f, p)
    if richardson:
        H1 = _fd_complex_hessian(f, p, _scaled_step(p, h))
        H2 = _fd_complex_hessian(f, p, 0.5 * _scaled_step(p, h))
        H = (4.0 * H2 - H1) / 3.0
    else:
        H = _fd_complex_hessian(f, p, _scaled_step(p, h))
    return 0.5 * (H + H.conj().T)


def _fd_complex_hessian(f: DefiningFunction, p: np.ndarray, s: float) -> np.ndarray:
    n = p.shape[0]
    # real Hessian on interleaved coordinates (x1, y1, x2, y2, ...)
    m = 2 * n
    R = np.empty((m, m))
    f0 = value(f, p)

    def delta(c: int) -> complex:
        return s if c % 2 == 0 else 1j * s

    for a in range(m):
        da = delta(a)
        ja = a // 2
        R[a, a] = (
            value(f, _shift(p, ja, da)) - 2.0 * f0 + value(f, _shift(p, ja, -da))
        ) / (s * s)
        for b in range(a + 1, m):
            db = delta(b)
            jb = b // 2
            pp = value(f, _shift(_shift(p, ja, da), jb, db))
            pm = value(f, _shift(_shift(p, ja, da), jb, -db))
            mp = value(f, _shift(_shift(p, ja, -da), jb, db))
            mm = value(f, _shift(_shift(p, ja, -da), jb, -db))
            R[a, b] = R[b, a] = (pp - pm - mp + mm) / (4.0 * s * s)
    H = np.empty((n, n), dtype=complex)
    for j in range(n):
        for k in range(n):
            H[j, k] = 0.25 * (
                R[2 * j, 2 * k]
                + R[2 * j + 1, 2 * k + 1]
                + 1j * (R[2 * j, 2 * k + 1] - R[2 * j + 1, 2 * k])
            )
    return H


def _constraint_rows(f: DefiningFunction, p: np.ndarray, h: float, richardson: bool):
    rows = [wirtinger_gradient(f, p, h, richardson)]
    if f.kind == "minkowski-level":
        # stay tangent to the holomorphic quadric z1^2 + z2^2 - z3^2 = 1
        z1, z2, z3 = p
        rows.append(np.array([2.0 * z1, 2.0 * z2, -2.0 * z3]))
    return np.array(rows)


def complex_tangent(
    f: DefiningFunction, p, h: float = GRAD_STEP, richardson: bool = False
) -> np.ndarray:
    """Unit complex tangent vector at a regular point of {r = 0}.

    Computed as the kernel of the stacked constraint rows (the Wirtinger
    gradient, plus the holomorphic quadric gradient for the C^3 family);
    the phase is fixed by making the first nonzero component real and
    positive.
    """
    p = _point(f, p)
    C = _constraint_rows(f, p, h, richardson)
    if np.linalg.norm(C[0]) < GRADIENT_FLOOR:
        raise ValueError("gradient vanishes; the point is not regular")
    _, svals, vh = np.linalg.svd(C)
    if C.shape[0] > 1 and svals[-1] < 1e-8 * svals[0]:
        raise ValueError("constraint rows are degenerate at this point")
    v = np.conj(vh[-1])
    if np.max(np.abs(C @ v)) > 1e-8 * max(1.0, float(np.max(np.abs(C)))):
        raise ValueError("no tangent direction meets the orthogonality tolerance")
    v = v / np.linalg.norm(v)
    for comp in v:
        if abs(comp) > 1e-12:
            v = v * (comp.conjugate() / abs(comp))
            break
    return v


def levi_restricted(
    f: DefiningFunction, p, h: float = HESS_STEP, richardson: bool = False
) -> float:
    """Levi form evaluated on the unit complex tangent at an on-surface point."""
    p = _point(f, p)
    scale2 = max(1.0, float(np.max(np.abs(p))) ** 2)
    if abs(value(f, p)) > ON_SURFACE_TOL * scale2:
        raise ValueError("point does not lie on the hypersurface")
    v = complex_tangent(f, p, richardson=richardson)
    H = complex_hessian(f, p, h, richardson)
    return float((v.conj() @ H @ v).real)


@dataclass(frozen=True)
class LeviReport:
    """Gradient, Hessian, tangent and classified Levi value at one point."""

    point: tuple[complex, ...]
    gradient: np.ndarray
    hessian: np.ndarray
    tangent: np.ndarray
    levi_value: float
    classification: str


def levi_report(
    f: DefiningFunction, p, h: float = HESS_STEP, dead_band: float = DEAD_BAND
) -> LeviReport:
    p = _point(f, p)
    g = wirtinger_gradient(f, p)
    if np.linalg.norm(g) < GRADIENT_FLOOR:
        cls = "degenerate-gradient"
        return LeviReport(tuple(p), g, np.zeros((f.dim, f.dim), complex), np.zeros(f.dim, complex), math.nan, cls)
    val = levi_restricted(f, p, h)
    if abs(val) <= dead_band:
        cls = "levi-flat"
    elif val > dead_band:
        cls = "strongly-pseudoconvex"
    else:
        # negative-definite against the fixed orientation: not convex from
        # the inside, lumped with the mixed-sign case
        cls = "indefinite"
    return LeviReport(
        tuple(p),
        g,
        complex_hessian(f, p, h),
        complex_tangent(f, p),
        val,
        cls,
    )


def totally_real_check(basis, p=None) -> tuple[bool, int]:
    """Decide whether span_R(basis) meets i * span_R(basis) only at 0.

    basis: real-tangent vectors given in complex coordinates.  Returns
    (totally_real, dim_R of the intersection).  The point argument is
    accepted for signature symmetry with the other checks and unused
    for constant bases.
    """
    vecs = [np.asarray(v, dtype=complex) for v in basis]
    if not vecs:
        raise ValueError("basis must be nonempty")
    n = vecs[0].shape[0]
    if any(v.shape != (n,) for v in vecs):
        raise ValueError("basis vectors must share one ambient dimension")
    B = np.column_stack([_realify(v) for v in vecs])
    JB = np.column_stack([_realify(1j * v) for v in vecs])
    k = np.linalg.matrix_rank(B)
    if k != len(vecs):
        raise ValueError("basis vectors are linearly dependent over R")
    dim_sum = np.linalg.matrix_rank(np.hstack([B, JB]))
    dim_meet = 2 * k - int(dim_sum)
    return dim_meet == 0, dim_meet


def _realify(v: np.ndarray) -> np.ndarray:
    out = np.empty(2 * v.shape[0])
    out[0::2] = v.real
    out[1::2] = v.imag
    return out
