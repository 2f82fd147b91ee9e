"""Explicit maps between the bidisc and its quadric models.

Off the diagonal, the bidisc embeds into the affine quadric
{z1^2 + z2^2 - z3^2 = 1} by

    H(z, w) = ( (1 - z w) / (z - w),
                i (1 + z w) / (z - w),
                -i (z + w) / (z - w) ),

and into CP^3, diagonal included, by the homogeneous variant

    J(z, w) = ( z - w : 1 - z w : i (1 + z w) : -i (z + w) ),

so J = (z - w) (1 : H) wherever both are defined.  H odd under the
coordinate swap: H(w, z) = -H(z, w).

The inverse of H is algebraic: with d = 2 / (h1 - i h2) and
s = i h3 d one has z - w = d and z + w = s, hence {z, w} are the roots
(s +- d) / 2 of X^2 - s X + (zw).  The ordering is fixed by a
reproduction test, which doubles as the domain check.

Conjugating a diagonal automorphism (or the coordinate swap) through H
linearizes it: the induced map on C^3 is multiplication by a real
matrix preserving diag(1,1,-1).  conjugate_fit recovers that matrix
numerically by least squares from sampled pairs and reports how well
held-out samples and the group relations are satisfied.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domains import (
    ProjectivePoint,
    im_condition,
    minkowski_form,
    quadric_residual,
)
from .groups import o21_residual
from .mobius import MobiusMap, mobius_apply_pair, _require_disc
from .rng import DEFAULT_RMAX, RngStream, sample_disc

EPS_DIAG = 1e-6
_ROUNDTRIP_TOL = 1e-9

Pair = tuple[complex, complex]
Triple = tuple[complex, complex, complex]


def swap_pair(p: Pair) -> Pair:
    return p[1], p[0]


def sym(z1: complex, z2: complex) -> Pair:
    """Symmetrization (z1 + z2, z1 z2); invariant under the coordinate swap."""
    return z1 + z2, z1 * z2


def map_J(z: complex, w: complex) -> ProjectivePoint:
    """Homogeneous quadric embedding; defined on the whole bidisc."""
    _require_disc(z, "z")
    _require_disc(w, "w")
    zw = z * w
    return ProjectivePoint([z - w, 1.0 - zw, 1j * (1.0 + zw), -1j * (z + w)])


def map_H(z: complex, w: complex) -> Triple:
    """Affine quadric embedding; needs |z - w| >= 1e-6 to stay well conditioned."""
    _require_disc(z, "z")
    _require_disc(w, "w")
    d = z - w
    if abs(d) < EPS_DIAG:
        raise ValueError("point too close to the diagonal for the affine chart")
    zw = z * w
    return ((1.0 - zw) / d, 1j * (1.0 + zw) / d, -1j * (z + w) / d)


def map_H_inv(h1: complex, h2: complex, h3: complex) -> Pair:
    """Invert the affine quadric embedding.

    Raises if the input does not reproduce under the forward map (it
    then lies off the image, e.g. off the quadric or with roots on the
    unit circle).
    """
    den = h1 - 1j * h2
    scale = max(1.0, abs(h1), abs(h2), abs(h3))
    if abs(den) < 1e-12 * scale:
        raise ValueError("h1 - i h2 vanishes; the pair difference is not recoverable")
    d = 2.0 / den  # z - w
    s = 1j * h3 * d  # z + w
    z, w = 0.5 * (s + d), 0.5 * (s - d)
    for cand in ((z, w), (w, z)):
        try:
            back = map_H(*cand)
        except ValueError:
            continue
        err = max(abs(back[0] - h1), abs(back[1] - h2), abs(back[2] - h3))
        if err <= _ROUNDTRIP_TOL * scale:
            return cand
    raise ValueError("input does not lie on the embedded bidisc within tolerance")


def scale_g_t(t: float, p: Pair) -> Pair:
    """(u, v) -> (u/t, v); carries the ellipsoid |u|^2 + t^2 |v|^2 = t^2 onto the sphere."""
    if not 0.0 < t < 1.0:
        raise ValueError(f"need 0 < t < 1, got {t}")
    return p[0] / t, p[1]


@dataclass(frozen=True)
class MapReport:
    """Residuals of one affine quadric image."""

    point: Pair
    image: Triple
    quadric: float
    im_value: float
    level: float


def map_h_report(z: complex, w: complex) -> MapReport:
    img = map_H(z, w)
    return MapReport(
        point=(z, w),
        image=img,
        quadric=abs(quadric_residual(*img)),
        im_value=im_condition(*img),
        level=minkowski_form(*img),
    )


# ---------------------------------------------------------------------------
# conjugation through H

@dataclass(frozen=True)
class ConjugationFit:
    """Real 3x3 matrix intertwining a bidisc automorphism with the quadric picture."""

    phi: MobiusMap | None
    swap: bool
    matrix: np.ndarray
    fit_residual: float  # worst held-out reproduction error
    membership_residual: float  # Frobenius distance from the O(2,1) relations
    det: float
    a33: float


_COND_GUARD = 1e8
_FIT_DIAG_MARGIN = 0.05
_MAX_ATTEMPTS = 32


def _apply_auto(phi: MobiusMap | None, swap: bool, p: Pair) -> Pair:
    if swap:
        p = swap_pair(p)
    if phi is not None:
        p = mobius_apply_pair(phi, p)
    return p


def _offdiag_sample(rng: RngStream, rmax: float) -> Pair:
    while True:
        z, w = sample_disc(rng, rmax), sample_disc(rng, rmax)
        if abs(z - w) >= _FIT_DIAG_MARGIN:
            return z, w


def conjugate_fit(
    phi: MobiusMap | None,
    rng: RngStream,
    *,
    swap: bool = False,
    rmax: float = DEFAULT_RMAX,
    n_fit: int = 6,
    n_holdout: int = 4,
) -> ConjugationFit:
    """Fit the real 3x3 matrix M with M H(p) = H(Phi(p)).

    Phi applies the swap first (when requested), then the diagonal
    automorphism phi.  Fit points are drawn off-diagonal from the
    caller's stream; each gives 3 complex = 6 real equations, solved
    row-wise by normal equations.  Configurations whose design matrix
    has condition number above 1e8 are redrawn; the returned
    fit_residual is the worst reproduction error on n_holdout held-out
    samples.
    """
    if phi is None and not swap:
        raise ValueError("specify an automorphism: a MobiusMap, swap=True, or both")
    if n_fit < 4:
        raise ValueError("need at least 4 fit samples for a determined system")
    for _ in range(_MAX_ATTEMPTS):
        pts = [_offdiag_sample(rng, rmax) for _ in range(n_fit + n_holdout)]
        fit_pts, hold_pts = pts[:n_fit], pts[n_fit:]
        src = np.array([map_H(*p) for p in fit_pts])  # (n_fit, 3) complex
        dst = np.array([map_H(*_apply_auto(phi, swap, p)) for p in fit_pts])
        A = np.vstack([src.real, src.imag])  # (2 n_fit, 3) real
        if np.linalg.cond(A) > _COND_GUARD:
            continue
        B = np.vstack([dst.real, dst.imag])  # (2 n_fit, 3), column j = target row j
        G = A.T @ A
        M = np.linalg.solve(G, A.T @ B).T  # rows of M solve the row-wise systems
        worst = 0.0
        for p in hold_pts:
            lhs = M @ np.asarray(map_H(*p))
            rhs = np.asarray(map_H(*_apply_auto(phi, swap, p)))
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
        return ConjugationFit(
            phi=phi,
            swap=swap,
            matrix=M,
            fit_residual=worst,
            membership_residual=o21_residual(M),
            det=float(np.linalg.det(M)),
            a33=float(M[2, 2]),
        )
    raise RuntimeError("could not draw a well-conditioned sample configuration")
