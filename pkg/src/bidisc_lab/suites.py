"""Seeded property suites and the verification report machinery.

Each suite certifies one computable claim by evaluating a residual on
many independently seeded samples.  Sample i of suite s draws from the
stream id ((ordinal(s) + 1) << 32) | i, so results depend only on
(seed, samples), never on worker count or evaluation order.

Residual conventions: equality claims report the absolute defect;
threshold claims (the Levi certifications) report the shortfall below
the certified floor, so 0 means comfortably certified; boolean claims
report 0 or 1 and run with tolerance 0.5.  A sample that raises is a
hard failure: it is recorded with its inputs and fails the suite
regardless of tolerance.
"""

from __future__ import annotations

import json
import math
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .domains import (
    DomainSpec,
    OrbitSpec,
    a_from_alpha,
    alpha_from_a,
    contains,
    eta_level,
    im_condition,
    minkowski_form,
    on_orbit_residual,
    quadric_residual,
)
from .groups import (
    ball_action,
    o21_point_matrix,
    o21_residual,
    random_su11,
    su11_embed,
    su11_orbit_invariant,
)
from .levi import DefiningFunction, levi_restricted, totally_real_check
from .maps import EPS_DIAG, conjugate_fit, map_H, map_H_inv, map_J, scale_g_t, swap_pair, sym
from .mobius import mobius_apply_pair, pseudo_hyperbolic, random_mobius
from .orbits import (
    ellipsoid_orbit_point,
    minkowski_orbit_point,
    rho_orbit_point,
    sphere_point,
)
from .rng import RngStream, sample_ball, sample_bidisc, sample_disc, sample_real_pair

SCHEMA_VERSION = 1
DEFAULT_SEED = 42
DEFAULT_SAMPLES = 10_000
DEFAULT_RMAX = 0.95
DEFAULT_EPS_DIAG = 1e-6
CHUNK = 256
MAX_FAILURES = 10

LEVI_FLOOR = 1e-3  # certified lower bound for the strongly pseudoconvex families
LEVI_PATCH_RMAX = 0.7  # orbit patch size; larger pushes tangency values toward 0
PREIMAGE_MARGIN = 1e-8  # skip samples this close to a band boundary
MEMBERSHIP_MARGIN = 1e-6
RHO_COND_FLOOR = 0.05  # dual-route level checks need 2/rho^2 to stay O(1e3)


class ConfigError(ValueError):
    """Invalid suite configuration."""


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    rmax: float = DEFAULT_RMAX
    eps_diag: float = DEFAULT_EPS_DIAG
    tolerances: dict[str, float] = field(default_factory=dict)
    suites: tuple[str, ...] = ()
    workers: int = 1


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    claim: str
    passed: bool
    max_residual: float | None
    tolerance: float
    samples: int
    failures: tuple[dict, ...]
    hard_failures: int
    wall_time_s: float

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "claim": self.claim,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "samples": self.samples,
            "failures": list(self.failures),
            "hard_failures": self.hard_failures,
            "wall_time_s": self.wall_time_s,
        }


@dataclass(frozen=True)
class _Suite:
    name: str
    claim: str
    weight: float
    tolerance: float
    fn: Callable[[SuiteConfig, RngStream, int], tuple[float, list[float]]]


def _flat(*vals) -> list[float]:
    out: list[float] = []
    for v in vals:
        if isinstance(v, complex):
            out.extend((v.real, v.imag))
        else:
            out.append(float(v))
    return out


def _offdiag_pair(cfg: SuiteConfig, rng: RngStream) -> tuple[complex, complex]:
    floor = max(cfg.eps_diag, EPS_DIAG)
    while True:
        z, w = sample_bidisc(rng, cfg.rmax)
        if abs(z - w) >= floor:
            return z, w


def _conditioned_pair(cfg: SuiteConfig, rng: RngStream) -> tuple[complex, complex]:
    # comparing two O(2/rho^2) quantities to 1e-10 absolute needs the
    # level itself bounded; rho >= 0.05 keeps it below ~800
    while True:
        z, w = _offdiag_pair(cfg, rng)
        if pseudo_hyperbolic(z, w) >= RHO_COND_FLOOR:
            return z, w


# ---------------------------------------------------------------------------
# sample functions, one per suite


def _s_rho_invariance(cfg, rng, i):
    z, w = sample_bidisc(rng, cfg.rmax)
    phi = random_mobius(rng, cfg.rmax)
    z2, w2 = mobius_apply_pair(phi, (z, w))
    res = abs(pseudo_hyperbolic(z2, w2) - pseudo_hyperbolic(z, w))
    return res, _flat(z, w, phi.theta, phi.a)


def _s_h_quadric(cfg, rng, i):
    z, w = _conditioned_pair(cfg, rng)
    res = abs(quadric_residual(*map_H(z, w)))
    return res, _flat(z, w)


def _s_h_im_condition(cfg, rng, i):
    z, w = _offdiag_pair(cfg, rng)
    val = im_condition(*map_H(z, w))
    return max(0.0, -val), _flat(z, w)


def _s_h_sigma_negation(cfg, rng, i):
    z, w = _offdiag_pair(cfg, rng)
    h = map_H(z, w)
    hs = map_H(w, z)
    res = max(abs(hs[k] + h[k]) for k in range(3))
    return res, _flat(z, w)


def _s_h_roundtrip(cfg, rng, i):
    z, w = _offdiag_pair(cfg, rng)
    z2, w2 = map_H_inv(*map_H(z, w))
    return max(abs(z2 - z), abs(w2 - w)), _flat(z, w)


def _s_orbit_levels(cfg, rng, i):
    z, w = _conditioned_pair(cfg, rng)
    rho = pseudo_hyperbolic(z, w)
    m = minkowski_form(*map_H(z, w))
    res = max(abs(m - (2.0 / (rho * rho) - 1.0)), abs(m - eta_level(alpha_from_a(rho))))
    return res, _flat(z, w)


_PREIMAGE_BANDS = ((1.0, 3.0), (2.0, 5.0), (1.0, math.inf))


def _s_preimage_formula(cfg, rng, i):
    s, t = _PREIMAGE_BANDS[i % 3]
    z, w = _offdiag_pair(cfg, rng)
    rho = pseudo_hyperbolic(z, w)
    hi = math.sqrt(2.0 / (s + 1.0))
    lo = math.sqrt(2.0 / (t + 1.0)) if math.isfinite(t) else 0.0
    if min(abs(rho - hi), abs(rho - lo)) < PREIMAGE_MARGIN:
        return 0.0, _flat(z, w)  # boundary-ambiguous, excluded
    member, _ = contains(DomainSpec.quadric_st(s, t), map_H(z, w))
    predicted = lo < rho < hi
    return (0.0 if member == predicted else 1.0), _flat(z, w, s, t)


def _s_conjugation_so21(cfg, rng, i):
    phi = random_mobius(rng, cfg.rmax)
    fit = conjugate_fit(phi, rng, rmax=cfg.rmax)
    if fit.a33 <= 0.0:
        raise ValueError(f"fitted matrix has nonpositive corner {fit.a33}")
    if abs(fit.det - 1.0) > 1e-9:
        raise ValueError(f"fitted matrix determinant {fit.det!r} is not 1 within 1e-9")
    res = max(fit.membership_residual, fit.fit_residual)
    return res, _flat(phi.theta, phi.a)


def _s_swap_minus_identity(cfg, rng, i):
    fit = conjugate_fit(None, rng, swap=True, rmax=cfg.rmax)
    res = float(np.max(np.abs(fit.matrix + np.eye(3))))
    return res, []


_AUT_DOMAINS = (DomainSpec.bidisc_r(0.7), DomainSpec.bidisc_st(0.3, 0.8))


def _s_aut_preserves_subdomains(cfg, rng, i):
    phi = random_mobius(rng, cfg.rmax)
    use_swap = bool(rng.gen.integers(0, 2))
    p = sample_bidisc(rng, cfg.rmax)
    q = swap_pair(p) if use_swap else p
    q = mobius_apply_pair(phi, q)
    for dom in _AUT_DOMAINS:
        m1, g1 = contains(dom, p)
        m2, g2 = contains(dom, q)
        if min(abs(g1), abs(g2)) < MEMBERSHIP_MARGIN:
            continue  # too close to a boundary to assert
        if m1 != m2:
            return 1.0, _flat(*p, phi.theta, phi.a, float(use_swap))
    return 0.0, _flat(*p, phi.theta, phi.a, float(use_swap))


def _s_su11_orbit_invariant(cfg, rng, i):
    u, v = sample_ball(rng, cfg.rmax)
    g = su11_embed(*random_su11(rng))
    u2, v2 = ball_action(g, (u, v))
    res = abs(su11_orbit_invariant(u2, v2) - su11_orbit_invariant(u, v))
    return res, _flat(u, v)


def _s_su11_orbit_ellipsoid(cfg, rng, i):
    t = 0.1 + 0.8 * float(rng.gen.random())
    p = ellipsoid_orbit_point(rng, t)
    res = on_orbit_residual(OrbitSpec.ball_ellipsoid(t), p)
    return res, _flat(*p, t)


def _s_gt_sphere(cfg, rng, i):
    t = 0.1 + 0.8 * float(rng.gen.random())
    u, v = scale_g_t(t, ellipsoid_orbit_point(rng, t))
    res = abs(u.real * u.real + u.imag * u.imag + v.real * v.real + v.imag * v.imag - 1.0)
    return res, _flat(u, v, t)


def _s_o21_matrix_b(cfg, rng, i):
    z, w = sample_real_pair(rng, cfg.rmax, rmin=0.05)
    B = o21_point_matrix(z, w)
    img = ball_action(B, (0j, 0j))
    res = max(o21_residual(B), abs(img[0] - z), abs(img[1] - w))
    return res, [z, w]


_CURVE_BASIS = ([0j, 1 + 0j], [0j, 1j])
_MIXED_BASIS = ([1 + 0j, 0j], [1j, 0j])


def _s_o21_totally_real(cfg, rng, i):
    k = i % 3
    if k == 0:
        while True:
            M = rng.gen.uniform(-1.0, 1.0, (2, 2))
            if abs(np.linalg.det(M)) >= 0.1:
                break
        basis = [M[0].astype(complex), M[1].astype(complex)]
        expected = (True, 0)
    elif k == 1:
        basis = [np.array(b) for b in _CURVE_BASIS]
        expected = (False, 2)
    else:
        basis = [np.array(b) for b in _MIXED_BASIS]
        expected = (False, 2)
    got = totally_real_check(basis)
    res = 0.0 if got == expected else 1.0
    return res, _flat(*basis[0], *basis[1])


_FA_PARAMS = (0.2, 0.5, 0.8)


def _s_levi_fa(cfg, rng, i):
    a = _FA_PARAMS[i % 3]
    p = rho_orbit_point(rng, a, LEVI_PATCH_RMAX)
    val = levi_restricted(DefiningFunction.rho_level(a), p)
    return max(0.0, LEVI_FLOOR - val), _flat(*p, a)


_ETA_PARAMS = (1.5, 2.125, 4.0)


def _s_levi_eta(cfg, rng, i):
    lvl = _ETA_PARAMS[i % 3]
    p = minkowski_orbit_point(rng, lvl, LEVI_PATCH_RMAX)
    val = levi_restricted(DefiningFunction.minkowski_level(lvl), p)
    return max(0.0, LEVI_FLOOR - val), _flat(*p, lvl)


def _s_levi_flat_control(cfg, rng, i):
    theta = 2.0 * math.pi * float(rng.gen.random())
    z1 = 0.5 * complex(math.cos(theta), math.sin(theta))
    z2 = sample_disc(rng, 0.9)
    val = levi_restricted(DefiningFunction.flat_control(0.5), (z1, z2))
    return abs(val), _flat(z1, z2)


def _s_levi_sphere(cfg, rng, i):
    p = sphere_point(rng)
    val = levi_restricted(DefiningFunction.sphere(), p)
    return abs(val - 1.0), _flat(*p)


def _s_sym_equivariance(cfg, rng, i):
    z, w = sample_bidisc(rng, cfg.rmax)
    s1 = sym(z, w)
    s2 = sym(w, z)
    res = max(abs(s1[0] - s2[0]), abs(s1[1] - s2[1]))
    return res, _flat(z, w)


def _s_j_h_compat(cfg, rng, i):
    z, w = _offdiag_pair(cfg, rng)
    p = map_J(z, w).coords
    q = np.array([1.0 + 0j, *map_H(z, w)])
    scale = float(np.max(np.abs(p))) * float(np.max(np.abs(q)))
    worst = 0.0
    for a in range(4):
        for b in range(a + 1, 4):
            worst = max(worst, abs(p[a] * q[b] - p[b] * q[a]))
    return worst / scale, _flat(z, w)


def _s_alpha_roundtrip(cfg, rng, i):
    a = 0.05 + 0.9 * float(rng.gen.random())
    res = abs(a_from_alpha(alpha_from_a(a)) - a)
    return res, [a]


_REGISTRY: tuple[_Suite, ...] = (
    _Suite(
        "rho-invariance",
        "|phi(z)-phi(w)| / |1-conj(phi(z))phi(w)| equals |z-w| / |1-conj(z)w| "
        "for every disc automorphism phi",
        1.0,
        1e-10,
        _s_rho_invariance,
    ),
    _Suite(
        "H-quadric",
        "the embedded image satisfies h1^2 + h2^2 - h3^2 = 1",
        1.0,
        1e-10,
        _s_h_quadric,
    ),
    _Suite(
        "H-im-condition",
        "Im(h2 (conj(h1) + conj(h3))) > 0 on the embedded image",
        1.0,
        1e-12,
        _s_h_im_condition,
    ),
    _Suite(
        "H-sigma-negation",
        "swapping the arguments negates the embedding exactly: map_H(w, z) = -map_H(z, w)",
        1.0,
        1e-15,
        _s_h_sigma_negation,
    ),
    _Suite(
        "H-roundtrip",
        "map_H_inv recovers the argument pair of map_H",
        1.0,
        1e-9,
        _s_h_roundtrip,
    ),
    _Suite(
        "orbit-levels",
        "minkowski_form(map_H(z, w)) = 2/rho^2 - 1 = eta_level(alpha_from_a(rho))",
        1.0,
        1e-10,
        _s_orbit_levels,
    ),
    _Suite(
        "preimage-formula",
        "map_H lands in the (s, t) level band iff sqrt(2/(t+1)) < rho < sqrt(2/(s+1))",
        1.0,
        0.5,
        _s_preimage_formula,
    ),
    _Suite(
        "conjugation-so21",
        "conjugating a diagonal automorphism by the embedding is linear: a Lorentz "
        "matrix with det 1 and positive corner entry",
        0.01,
        1e-7,
        _s_conjugation_so21,
    ),
    _Suite(
        "swap-is-minus-identity",
        "conjugating the coordinate swap by the embedding gives -I",
        0.01,
        1e-9,
        _s_swap_minus_identity,
    ),
    _Suite(
        "aut-preserves-subdomains",
        "diagonal automorphisms and the swap preserve the rho sublevel and band domains",
        0.1,
        0.5,
        _s_aut_preserves_subdomains,
    ),
    _Suite(
        "su11-orbit-invariant",
        "|u| / sqrt(1 - |v|^2) is constant along embedded SU(1,1) ball actions",
        0.1,
        1e-10,
        _s_su11_orbit_invariant,
    ),
    _Suite(
        "su11-orbit-ellipsoid",
        "SU(1,1) orbit points satisfy |u|^2 + t^2 |v|^2 = t^2",
        0.1,
        1e-10,
        _s_su11_orbit_ellipsoid,
    ),
    _Suite(
        "gt-sphere",
        "(u, v) -> (u/t, v) carries the ellipsoid orbit onto the unit sphere",
        0.1,
        1e-12,
        _s_gt_sphere,
    ),
    _Suite(
        "o21-matrix-B",
        "the explicit Lorentz matrix B(z, w) preserves the form and maps the origin to (z, w)",
        0.1,
        1e-12,
        _s_o21_matrix_b,
    ),
    _Suite(
        "o21-totally-real",
        "the real slice meets its multiplication-by-i image only at 0; complex "
        "directions do not",
        0.1,
        0.5,
        _s_o21_totally_real,
    ),
    _Suite(
        "levi-Fa",
        "the rho level hypersurfaces are strongly pseudoconvex: restricted Levi "
        "value above 1e-3",
        0.06,
        1e-12,
        _s_levi_fa,
    ),
    _Suite(
        "levi-eta",
        "the Minkowski level hypersurfaces on the quadric are strongly "
        "pseudoconvex: restricted Levi value above 1e-3",
        0.06,
        1e-12,
        _s_levi_eta,
    ),
    _Suite(
        "levi-flat-control",
        "the circle-times-disc control surface has vanishing Levi form",
        0.02,
        1e-4,
        _s_levi_flat_control,
    ),
    _Suite(
        "levi-sphere",
        "the unit sphere has restricted Levi value 1",
        0.02,
        1e-6,
        _s_levi_sphere,
    ),
    _Suite(
        "sym-equivariance",
        "sym(z, w) = sym(w, z) exactly",
        1.0,
        1e-15,
        _s_sym_equivariance,
    ),
    _Suite(
        "J-H-compat",
        "map_J agrees projectively with (1 : map_H), both scaled by z - w",
        1.0,
        1e-12,
        _s_j_h_compat,
    ),
    _Suite(
        "alpha-roundtrip",
        "a_from_alpha inverts alpha_from_a",
        1.0,
        1e-12,
        _s_alpha_roundtrip,
    ),
)

_BY_NAME = {s.name: s for s in _REGISTRY}
_ORDINAL = {s.name: k for k, s in enumerate(_REGISTRY)}


def all_suite_names() -> tuple[str, ...]:
    return tuple(s.name for s in _REGISTRY)


def validate_config(cfg: SuiteConfig) -> None:
    if not isinstance(cfg.seed, int) or not 0 <= cfg.seed < 2**64:
        raise ConfigError(f"seed must be a 64-bit unsigned integer, got {cfg.seed!r}")
    if not isinstance(cfg.samples, int) or cfg.samples < 1:
        raise ConfigError(f"samples must be a positive integer, got {cfg.samples!r}")
    if not 0.0 < cfg.rmax < 1.0:
        raise ConfigError(f"rmax must lie in (0, 1), got {cfg.rmax!r}")
    if not cfg.eps_diag > 0.0:
        raise ConfigError(f"eps_diag must be positive, got {cfg.eps_diag!r}")
    if not isinstance(cfg.workers, int) or cfg.workers < 1:
        raise ConfigError(f"workers must be a positive integer, got {cfg.workers!r}")
    unknown = [s for s in cfg.suites if s not in _BY_NAME]
    if unknown:
        raise ConfigError(f"unknown suite ids: {', '.join(sorted(unknown))}")
    for name, tol in cfg.tolerances.items():
        if name not in _BY_NAME:
            raise ConfigError(f"tolerance override for unknown suite {name!r}")
        if not (isinstance(tol, (int, float)) and math.isfinite(tol) and tol > 0):
            raise ConfigError(f"tolerance for {name!r} must be finite and positive, got {tol!r}")


def _sample_count(cfg: SuiteConfig, suite: _Suite) -> int:
    return max(1, int(round(cfg.samples * suite.weight)))


def _eval_one(suite: _Suite, cfg: SuiteConfig, base: int, i: int):
    rng = RngStream(cfg.seed, base | i)
    try:
        res, inputs = suite.fn(cfg, rng, i)
        return i, float(res), inputs, None
    except Exception as exc:  # recorded as a hard failure, never raised
        return i, math.inf, [], f"{type(exc).__name__}: {exc}"


def run_suite(name: str, cfg: SuiteConfig) -> SuiteReport:
    """Run one registered suite; deterministic given (seed, samples)."""
    validate_config(cfg)
    if name not in _BY_NAME:
        raise ConfigError(f"unknown suite id {name!r}")
    return _run_suite_validated(name, cfg)


def _run_suite_validated(name: str, cfg: SuiteConfig) -> SuiteReport:
    suite = _BY_NAME[name]
    tol = cfg.tolerances.get(name, suite.tolerance)
    count = _sample_count(cfg, suite)
    base = (_ORDINAL[name] + 1) << 32
    start = time.perf_counter()

    def eval_chunk(lo: int):
        return [_eval_one(suite, cfg, base, i) for i in range(lo, min(lo + CHUNK, count))]

    starts = range(0, count, CHUNK)
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(eval_chunk, starts))
    else:
        chunks = [eval_chunk(lo) for lo in starts]

    max_res = 0.0
    have_res = False
    failures: list[dict] = []
    hard = 0
    for chunk in chunks:  # ordered reduce by sample index
        for i, res, inputs, err in chunk:
            if err is not None:
                hard += 1
                if len(failures) < MAX_FAILURES:
                    failures.append({"index": i, "error": err, "inputs": inputs})
                continue
            have_res = True
            if res > max_res:
                max_res = res
            if res >= tol and len(failures) < MAX_FAILURES:
                failures.append({"index": i, "residual": res, "inputs": inputs})
    passed = hard == 0 and max_res < tol
    return SuiteReport(
        suite=name,
        claim=suite.claim,
        passed=passed,
        max_residual=max_res if have_res else None,
        tolerance=tol,
        samples=count,
        failures=tuple(failures),
        hard_failures=hard,
        wall_time_s=time.perf_counter() - start,
    )


def run_suites(cfg: SuiteConfig) -> list[SuiteReport]:
    validate_config(cfg)
    return [_run_suite_validated(name, cfg) for name in cfg.suites]


def report_document(cfg: SuiteConfig, reports: list[SuiteReport]) -> dict:
    # workers deliberately left out: it must not affect any reported byte
    return {
        "schema": SCHEMA_VERSION,
        "config": {
            "seed": cfg.seed,
            "samples": cfg.samples,
            "rmax": cfg.rmax,
            "eps_diag": cfg.eps_diag,
            "tolerances": dict(sorted(cfg.tolerances.items())),
            "suites": list(cfg.suites),
        },
        "passed": all(r.passed for r in reports),
        "suites": [r.to_dict() for r in reports],
    }


def verify_all(cfg: SuiteConfig, report_path: str | None = None) -> tuple[int, dict]:
    """Run the configured suites; returns (exit_code, report document).

    Exit code 0 when every suite passes (vacuously for an empty list,
    with a warning), 1 otherwise.  Config errors raise ConfigError.
    """
    validate_config(cfg)
    if not cfg.suites:
        warnings.warn("no suites selected; report is empty and vacuously passing")
    reports = [_run_suite_validated(name, cfg) for name in cfg.suites]
    doc = report_document(cfg, reports)
    if report_path is not None:
        with open(report_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return (0 if doc["passed"] else 1), doc
