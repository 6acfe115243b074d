"""Independent brute-force and sampling oracles.

Everything here deliberately avoids the closed-form machinery it checks:
class members are evaluated by Gauss-Legendre quadrature of the structural
integral, coefficient functionals are swept over the exact Caratheodory
parameter region, and inequalities are reported as margins rather than
raised, so a single grid artifact cannot abort a suite.  All randomness is
seeded; identical seeds give identical reports.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import minimize

from .bounds import (
    ClassParams,
    PhiCoeffs,
    alpha_class_params,
    caratheodory_to_coeffs,
    second_hankel,
    sl_bound_table,
)
from .catalog import in_psi_image, make_spec
from .extremal import t_series
from .radius import bisect_root
from .series import TruncatedSeries

__all__ = [
    "SchwarzSample",
    "CaratheodoryPoint",
    "caratheodory_point",
    "schur_parameters",
    "sample_schwarz",
    "sample_suite",
    "structural_eval",
    "structural_deriv",
    "structural_deriv_convex",
    "maximize_second_hankel_oracle",
    "verify_class_membership_bounds",
    "lemma_p1p2_check",
    "eq_p31_check",
    "bloch_norm_estimate",
    "bloch_class_envelope",
    "bloch_seminorm_bound",
    "vector_space_counterexample",
    "lambda_combination_check",
    "conjecture_check",
]

BOUNDARY_GRID = 512
SCHWARZ_SAFETY = 1.001  # random polynomials are shrunk by this factor


# -- Schwarz samples -------------------------------------------------------------


@dataclass(frozen=True)
class SchwarzSample:
    """A polynomial self-map of the disk with w(0) = 0."""

    series: TruncatedSeries
    kind: str
    params: dict = field(default_factory=dict)

    def __call__(self, z: complex) -> complex:
        return self.series(z)

    def boundary_sup(self, grid: int = BOUNDARY_GRID, radius: float = 0.999) -> float:
        return max(
            abs(self.series(radius * cmath.exp(2j * math.pi * j / grid)))
            for j in range(grid)
        )


def _mobius_series(eta: float, order: int) -> TruncatedSeries:
    # z (z + eta) / (1 + eta z)
    inv = TruncatedSeries([1] + [(-eta) ** k for k in range(1, order + 1)])
    num = TruncatedSeries([0, eta, 1])
    return num.mul(inv, order)


def _blaschke_series(zeros: Sequence[complex], scale: float, order: int) -> TruncatedSeries:
    out = TruncatedSeries([0, scale])
    for a in zeros:
        ac = complex(a)
        if abs(ac) >= 1:
            raise ValueError("Blaschke zeros must lie inside the disk")
        # (a - z)/(1 - conj(a) z)
        inv = TruncatedSeries([ac.conjugate() ** k for k in range(order + 1)])
        factor = TruncatedSeries([ac, -1]).mul(inv, order)
        out = out.mul(factor, order)
    return out


def sample_schwarz(kind: str, params: dict | None = None, seed: int = 0, order: int = 32) -> SchwarzSample:
    """Deterministic Schwarz-function sample of the requested kind."""
    params = dict(params or {})
    if kind == "monomial":
        m = int(params.get("m", 1))
        if m < 1:
            raise ValueError("monomial exponent must be >= 1")
        series = TruncatedSeries([0] * m + [1]).padded(max(order, m))
    elif kind == "mobius_eta":
        eta = float(params.get("eta", 0.5))
        if not 0 <= eta <= 1:
            raise ValueError("eta must lie in [0, 1]")
        series = _mobius_series(eta, order)
    elif kind == "scaled_blaschke":
        rng = np.random.default_rng(seed)
        n_zeros = int(params.get("n_zeros", 2))
        zeros = params.get("zeros")
        if zeros is None:
            # modest zero radii keep the series truncation far below the
            # boundary-sup headroom of the closed disk of radius 0.999
            radii = rng.uniform(0.1, 0.6, n_zeros)
            angles = rng.uniform(0, 2 * math.pi, n_zeros)
            zeros = [r * cmath.exp(1j * t) for r, t in zip(radii, angles)]
        scale = float(params.get("scale", rng.uniform(0.5, 0.95)))
        params = dict(params, zeros=[complex(z) for z in zeros], scale=scale)
        series = _blaschke_series(zeros, scale, order)
    elif kind == "random_poly_normalized":
        rng = np.random.default_rng(seed)
        degree = int(params.get("degree", 8))
        raw = rng.standard_normal(degree) + 1j * rng.standard_normal(degree)
        poly = TruncatedSeries([0] + list(raw))
        sup = max(
            abs(poly(cmath.exp(2j * math.pi * j / BOUNDARY_GRID)))
            for j in range(BOUNDARY_GRID)
        )
        series = (poly * (1.0 / (SCHWARZ_SAFETY * sup))).padded(max(order, degree))
        params = dict(params, degree=degree)
    else:
        raise ValueError(f"unknown Schwarz sample kind {kind!r}")
    return SchwarzSample(series, kind, params)


def sample_suite(count: int, seed: int = 42, order: int = 32) -> list[SchwarzSample]:
    """A deterministic mix of sample kinds, extremal witnesses first."""
    samples: list[SchwarzSample] = []
    for m in (1, 2, 3, 4):
        samples.append(sample_schwarz("monomial", {"m": m}, order=order))
    for eta in (0.0, 0.25, 0.5, 0.75, 1.0):
        samples.append(sample_schwarz("mobius_eta", {"eta": eta}, order=order))
    i = 0
    while len(samples) < count:
        kind = "scaled_blaschke" if i % 3 == 2 else "random_poly_normalized"
        samples.append(sample_schwarz(kind, None, seed=seed + i, order=order))
        i += 1
    return samples[:count]


# -- pointwise structural evaluation ----------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)


def _log_ratio_integral(omega: SchwarzSample, z: complex) -> complex:
    """integral_0^z -log(1 + w(t))/t dt by 64-point Gauss-Legendre quadrature."""
    if z == 0:
        return 0.0
    total = 0.0 + 0.0j
    for node, weight in zip(_GL_NODES, _GL_WEIGHTS):
        s = 0.5 * (node + 1.0)  # t = s z, dt = z ds; integrand dt = -log(1+w(sz))/s ds
        w = omega(s * z)
        total += weight * (-cmath.log(1 + w) / s)
    return 0.5 * total


def structural_eval(omega: SchwarzSample, z: complex) -> complex:
    """f(z) = z exp(integral (q-1)/t dt) with q = 1 - log(1 + omega)."""
    return z * cmath.exp(_log_ratio_integral(omega, z))


def structural_deriv(omega: SchwarzSample, z: complex) -> complex:
    """f'(z) = f(z) q(z) / z, exact in terms of the structural formula."""
    q = 1 - cmath.log(1 + omega(z))
    if z == 0:
        return 1.0 + 0.0j
    return structural_eval(omega, z) * q / z


def structural_deriv_convex(omega: SchwarzSample, z: complex) -> complex:
    """f'(z) = exp(integral (q-1)/t dt): derivative of the convex-side member."""
    return cmath.exp(_log_ratio_integral(omega, z))


# -- Caratheodory parameterization -------------------------------------------------


@dataclass(frozen=True)
class CaratheodoryPoint:
    p1: float
    x: complex
    y: complex
    p2: complex
    p3: complex


def caratheodory_point(p1: float, x: complex, y: complex) -> CaratheodoryPoint:
    """Derived (p2, p3) for admissible parameters p1 in [0,2], |x|,|y| <= 1."""
    if not 0 <= p1 <= 2:
        raise ValueError(f"p1 must lie in [0, 2], got {p1}")
    if abs(x) > 1 + 1e-12 or abs(y) > 1 + 1e-12:
        raise ValueError("x and y must lie in the closed unit disk")
    p2 = (p1**2 + x * (4 - p1**2)) / 2
    p3 = (
        p1**3
        + 2 * p1 * (4 - p1**2) * x
        - p1 * (4 - p1**2) * x**2
        + 2 * (4 - p1**2) * (1 - abs(x) ** 2) * y
    ) / 4
    return CaratheodoryPoint(p1, complex(x), complex(y), complex(p2), complex(p3))


def schur_parameters(p1: complex, p2: complex, p3: complex) -> tuple[complex, complex, complex]:
    """Recover the disk parameters (xi, eta, zeta) from a coefficient prefix.

    The prefix extends to a genuine positive-real-part function iff all three
    recovered parameters lie in the closed unit disk.  Uses the first three
    coefficients c_k of w = (p-1)/(p+1).
    """
    c1 = p1 / 2
    c2 = p2 / 2 - p1**2 / 4
    c3 = p3 / 2 - p1 * p2 / 2 + p1**3 / 8
    xi = c1
    r1 = 1 - abs(xi) ** 2
    if r1 <= 0:
        return xi, 0.0, 0.0  # boundary point: higher parameters are unconstrained
    eta = c2 / r1
    r2 = 1 - abs(eta) ** 2
    if r2 <= 0:
        return xi, eta, 0.0
    zeta = (c3 / r1 + xi.conjugate() * eta**2) / r2
    return xi, eta, zeta


# -- second-Hankel brute force ------------------------------------------------------


def _float_params(params: ClassParams) -> ClassParams:
    return ClassParams(*(float(getattr(params, f)) for f in ("g2", "g3", "g4", "h2", "h3", "h4")))


def _hankel_halves(params: ClassParams, coeffs, p1, x):
    """|a2 a4 - a3^2| split as E0 + E1*y (affine in the free parameter y)."""
    p2 = (p1**2 + x * (4 - p1**2)) / 2
    base = (p1**3 + 2 * p1 * (4 - p1**2) * x - p1 * (4 - p1**2) * x**2) / 4
    bump = 2 * (4 - p1**2) * (1 - np.abs(x) ** 2) / 4
    a2, a3, a4_0 = caratheodory_to_coeffs(params, coeffs, p1, p2, base)
    _, _, a4_1 = caratheodory_to_coeffs(params, coeffs, p1, p2, base + bump)
    e0 = a2 * a4_0 - a3**2
    e1 = a2 * (a4_1 - a4_0)
    return e0, e1


def maximize_second_hankel_oracle(params: ClassParams, b, density: int = 64) -> float:
    """Lower bound for sup |a2 a4 - a3^2| over the class, by grid + polish.

    The grid covers p1 in [0,2] and x in the closed unit disk; the third
    parameter is maximized in closed form (the functional is affine in it).
    ``b`` is a :class:`PhiCoeffs` or a plain coefficient triple.
    """
    if density < 32:
        raise ValueError("density must be at least 32")
    fp = _float_params(params)
    if isinstance(b, PhiCoeffs):
        b = (b.b1, b.b2, b.b3)
    coeffs = tuple(float(c) for c in b)
    p1 = np.linspace(0.0, 2.0, density)[:, None, None]
    rho = np.linspace(0.0, 1.0, density)[None, :, None]
    phi = np.linspace(0.0, 2 * np.pi, density, endpoint=False)[None, None, :]
    x = rho * np.exp(1j * phi)
    e0, e1 = _hankel_halves(fp, coeffs, p1 + 0j, x)
    vals = np.abs(e0) + np.abs(e1)
    flat = int(np.argmax(vals))
    i, j, k = np.unravel_index(flat, vals.shape)
    start = np.array([float(p1[i, 0, 0]), float(rho[0, j, 0]), float(phi[0, 0, k])])
    best = float(vals[i, j, k])

    def neg(v):
        p = min(max(v[0], 0.0), 2.0)
        r = min(max(v[1], 0.0), 1.0)
        e0_, e1_ = _hankel_halves(fp, coeffs, complex(p), r * cmath.exp(1j * v[2]))
        return -(abs(e0_) + abs(e1_))

    res = minimize(neg, start, method="Nelder-Mead",
                   options={"xatol": 1e-10, "fatol": 1e-13, "maxiter": 2000})
    return max(best, -float(res.fun))


# -- class-membership sampling -------------------------------------------------------


def _class_coefficients(q: TruncatedSeries, alpha: float, up_to: int = 5) -> list[complex]:
    """a_1..a_{up_to} of the class member with convolution ratio q.

    Solves the triangular recurrence a_n (n-1) h_n = sum_{m<n} a_m h_m q_{n-m}
    with weights h_m = 1 + (m-1) alpha.
    """
    a = [complex(1)]
    for n in range(2, up_to + 1):
        h_n = 1 + (n - 1) * alpha
        acc = 0j
        for m in range(1, n):
            h_m = 1 + (m - 1) * alpha
            acc += a[m - 1] * h_m * complex(q[n - m])
        a.append(acc / ((n - 1) * h_n))
    return a


@dataclass
class MembershipReport:
    samples: int
    seed: int
    worst_re_lo: float
    worst_re_hi: float
    worst_im: float
    worst_growth_lo: float
    worst_growth_hi: float
    coeff_margins: dict
    violations: list

    def as_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "worstReLoMargin": self.worst_re_lo,
            "worstReHiMargin": self.worst_re_hi,
            "worstImMargin": self.worst_im,
            "worstGrowthLoMargin": self.worst_growth_lo,
            "worstGrowthHiMargin": self.worst_growth_hi,
            "coeffMargins": {k: v for k, v in self.coeff_margins.items()},
            "violations": self.violations,
        }


_MEMBERSHIP_RADII = (0.3, 0.6, 0.9)
_MEMBERSHIP_ANGLES = 64


def verify_class_membership_bounds(
    sample_count: int = 200,
    seed: int = 42,
    alphas: Sequence[float] = (0.0, 0.5, 1.0),
    tol: float = 1e-6,
) -> MembershipReport:
    """Sample Schwarz functions, build class members, and check every bound.

    The Re/Im envelopes of z f'/f are checked pointwise through the generator
    (z f'/f = 1 - log(1 + w(z)) exactly); the growth envelope is checked on
    |f| evaluated by quadrature; the coefficient functionals are checked for
    each alpha against the closed-form table, with the second Hankel
    functional compared against the general three-case bound.
    """
    t_ref = t_series(make_spec("psi"), 1, 200)  # order controls the r=0.9 tail
    growth_lo = {r: abs(t_ref(r)) for r in _MEMBERSHIP_RADII}
    growth_hi = {r: abs(t_ref(-r)) for r in _MEMBERSHIP_RADII}

    samples = sample_suite(sample_count, seed=seed)
    worst = {
        "re_lo": math.inf,
        "re_hi": math.inf,
        "im": math.inf,
        "g_lo": math.inf,
        "g_hi": math.inf,
    }
    tables = {}
    for alpha in alphas:
        frac = Fraction(alpha).limit_denominator(10**6)
        table = sl_bound_table(frac)
        table["h2_general"] = second_hankel(
            alpha_class_params(float(frac)), PhiCoeffs(1.0, 0.5, 1.0 / 3.0)
        ).value
        tables[alpha] = table
    coeff_margins = {
        (alpha, key): math.inf
        for alpha in alphas
        for key in ("a2", "a3", "fekete_t1", "a4", "a2a3_a4", "a5", "h2_general", "h3")
    }
    violations = []

    for idx, omega in enumerate(samples):
        for r in _MEMBERSHIP_RADII:
            for j in range(_MEMBERSHIP_ANGLES):
                z = r * cmath.exp(2j * math.pi * j / _MEMBERSHIP_ANGLES)
                ratio = 1 - cmath.log(1 + omega(z))
                re_lo = ratio.real - (1 - math.log(1 + r))
                re_hi = (1 - math.log(1 - r)) - ratio.real
                im = math.atan(r / math.sqrt(1 - r * r)) - abs(ratio.imag)
                worst["re_lo"] = min(worst["re_lo"], re_lo)
                worst["re_hi"] = min(worst["re_hi"], re_hi)
                worst["im"] = min(worst["im"], im)
                if min(re_lo, re_hi, im) < -tol:
                    violations.append(
                        {"sample": idx, "kind": omega.kind, "where": f"envelope r={r}"}
                    )
            for j in range(0, _MEMBERSHIP_ANGLES, 8):
                z = r * cmath.exp(2j * math.pi * j / _MEMBERSHIP_ANGLES)
                fv = abs(structural_eval(omega, z))
                g_lo = fv - growth_lo[r]
                g_hi = growth_hi[r] - fv
                worst["g_lo"] = min(worst["g_lo"], g_lo)
                worst["g_hi"] = min(worst["g_hi"], g_hi)
                if min(g_lo, g_hi) < -tol:
                    violations.append(
                        {"sample": idx, "kind": omega.kind, "where": f"growth r={r}"}
                    )

        psi_omega = make_spec("psi").series(omega.series.order, exact=False).compose(
            omega.series, max(omega.series.order, 6)
        )
        for alpha in alphas:
            a = _class_coefficients(psi_omega, alpha)
            a2, a3, a4, a5 = a[1], a[2], a[3], a[4]
            table = tables[alpha]
            checks = {
                "a2": float(table["a2"]) - abs(a2),
                "a3": float(table["a3"]) - abs(a3),
                "fekete_t1": float(table["fekete_t1"]) - abs(a3 - a2 * a2),
                "a4": float(table["a4"]) - abs(a4),
                "a2a3_a4": float(table["a2a3_a4"]) - abs(a2 * a3 - a4),
                "a5": float(table["a5"]) - abs(a5),
                "h2_general": float(table["h2_general"]) - abs(a2 * a4 - a3 * a3),
                "h3": float(table["h3"])
                - abs(a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2)),
            }
            for key, margin in checks.items():
                coeff_margins[(alpha, key)] = min(coeff_margins[(alpha, key)], margin)
                if margin < -tol:
                    violations.append(
                        {"sample": idx, "kind": omega.kind, "where": f"{key}@alpha={alpha}"}
                    )

    return MembershipReport(
        samples=sample_count,
        seed=seed,
        worst_re_lo=worst["re_lo"],
        worst_re_hi=worst["re_hi"],
        worst_im=worst["im"],
        worst_growth_lo=worst["g_lo"],
        worst_growth_hi=worst["g_hi"],
        coeff_margins={f"{k[1]}@alpha={k[0]}": v for k, v in coeff_margins.items()},
        violations=violations,
    )


# -- Caratheodory lemma sweeps ---------------------------------------------------------


def _caratheodory_grid(density: int):
    p1 = np.linspace(0.0, 2.0, density)[:, None, None]
    rho = np.linspace(0.0, 1.0, density)[None, :, None]
    phi = np.linspace(0.0, 2 * np.pi, density, endpoint=False)[None, None, :]
    x = rho * np.exp(1j * phi)
    p2 = (p1**2 + x * (4 - p1**2)) / 2
    return p1, x, p2


def lemma_p1p2_check(v: float, grid_density: int = 64) -> dict:
    """Sweep |p2 - v p1^2| against its three-branch bound and the refinements."""
    p1, x, p2 = _caratheodory_grid(grid_density)
    lhs = np.abs(p2 - v * p1**2)
    if v <= 0:
        bound = -4 * v + 2
    elif v <= 1:
        bound = 2.0
    else:
        bound = 4 * v - 2
    report = {
        "v": v,
        "bound": float(bound),
        "max_lhs": float(lhs.max()),
        "max_violation": float((lhs - bound).max()),
    }
    if 0 < v <= 0.5:
        refined = lhs + v * np.abs(p1) ** 2
        report["max_refined1"] = float(refined.max())
        report["max_violation_refined1"] = float((refined - 2).max())
    if 0.5 <= v < 1:
        refined = lhs + (1 - v) * np.abs(p1) ** 2
        report["max_refined2"] = float(refined.max())
        report["max_violation_refined2"] = float((refined - 2).max())
    return report


def eq_p31_check(grid_density: int = 64) -> dict:
    """Sweep the cubic Caratheodory combination |p3 - 2 p1 p2 + p1^3| <= 2.

    The quartic combination involving p4 has no three-parameter formula, so
    it is checked on power-map samples w(z) = lam z^m where all p_k are
    available in closed form (p_k = 2 lam^(k/m) when m | k, else 0).
    """
    density = grid_density
    p1 = np.linspace(0.0, 2.0, density)[:, None, None, None]
    rho = np.linspace(0.0, 1.0, density)[None, :, None, None]
    phi = np.linspace(0.0, 2 * np.pi, density, endpoint=False)[None, None, :, None]
    psi_y = np.linspace(0.0, 2 * np.pi, 16, endpoint=False)[None, None, None, :]
    x = rho * np.exp(1j * phi)
    y = np.exp(1j * psi_y)
    p2 = (p1**2 + x * (4 - p1**2)) / 2
    p3 = (
        p1**3
        + 2 * p1 * (4 - p1**2) * x
        - p1 * (4 - p1**2) * x**2
        + 2 * (4 - p1**2) * (1 - np.abs(x) ** 2) * y
    ) / 4
    cubic = np.abs(p3 - 2 * p1 * p2 + p1**3)
    report = {
        "max_cubic": float(cubic.max()),
        "max_violation_cubic": float((cubic - 2).max()),
    }
    worst_quartic = 0.0
    for m in (1, 2, 3, 4):
        for lam_abs in np.linspace(0.1, 1.0, 10):
            for lam_arg in np.linspace(0, 2 * math.pi, 12, endpoint=False):
                lam = lam_abs * cmath.exp(1j * lam_arg)
                p = [2 * lam ** (k // m) if k % m == 0 else 0.0 for k in range(1, 5)]
                q = p[0] ** 4 - 3 * p[0] ** 2 * p[1] + p[1] ** 2 + 2 * p[0] * p[2] - p[3]
                worst_quartic = max(worst_quartic, abs(q))
    report["max_quartic_on_power_maps"] = worst_quartic
    report["max_violation_quartic"] = worst_quartic - 2
    return report


# -- Bloch norm -----------------------------------------------------------------------


def bloch_norm_estimate(f, grid_size: int = 256, r_max: float = 0.999, radial_count: int = 128) -> float:
    """sup over a polar grid of (1 - |z|^2) |f'(z)|.

    ``f`` is either an object with a ``series`` attribute of order >= 40
    (derivative taken termwise), a bare series, or a :class:`SchwarzSample`,
    in which case the class member it induces is differentiated through the
    structural formula (exact pointwise, no truncation).
    """
    if isinstance(f, SchwarzSample):
        deriv = lambda z: structural_deriv(f, z)
    else:
        series = f.series if hasattr(f, "series") else f
        if series.order < 40:
            raise ValueError("series order must be at least 40 for a stable estimate")
        deriv = series.derivative()
    best = 0.0
    for r in np.linspace(0.0, r_max, radial_count):
        damp = 1 - r * r
        for j in range(grid_size):
            z = r * cmath.exp(2j * math.pi * j / grid_size)
            val = damp * abs(deriv(z))
            if val > best:
                best = val
    return best


def bloch_class_envelope() -> dict:
    """Maximum of (1-r^2)(1 - log(1-r)) over [0,1) and its stationary radius.

    This is the envelope of the damped generator modulus over the class: it
    bounds (1-|z|^2)|q(z)| for the generator values q = z f'/f, but not
    (1-|z|^2)|f'(z)| itself: the structural extremal exceeds it (see
    :func:`bloch_seminorm_bound` for a valid envelope and the test-suite
    witness).  The stationary radius and peak value are well-defined
    constants of the stated envelope either way.
    """
    res = bisect_root(
        lambda r: 1 - r + 2 * r * math.log(1 - r), 0.2, 0.7, "bloch_r0"
    )
    r0 = res.root
    value = (1 - r0 * r0) * (1 - math.log(1 - r0))
    grid = np.linspace(0.0, 0.999, 200001)
    genv = (1 - grid**2) * (1 - np.log1p(-grid))
    grid_argmax = float(grid[int(np.argmax(genv))])
    return {
        "r0": r0,
        "value": value,
        "grid_argmax": grid_argmax,
        "norm_bound": value,  # |f(0)| = 0 for normalized members
        "root_result": res,
    }


def bloch_seminorm_bound() -> dict:
    """Valid class-wide envelope for (1-|z|^2)|f'(z)| and its maximum.

    |f'(z)| = |f(z)/z| |q(z)| with the growth bound |f/z| <= exp(dilog(r))
    and max |q| = 1 - log(1-r) on |z| = r, so the seminorm never exceeds
    max_r (1-r^2)(1 - log(1-r)) exp(dilog(r)).  The structural extremal
    attains the inner product at negative real z, so the bound is sharp.
    """
    from scipy.special import spence

    grid = np.linspace(0.0, 0.9999, 200001)
    dilog = spence(1.0 - grid)  # sum_k r^k / k^2
    env = (1 - grid**2) * (1 - np.log1p(-grid)) * np.exp(dilog)
    idx = int(np.argmax(env))
    return {"r_star": float(grid[idx]), "value": float(env[idx])}


# -- further counterexamples and identities ----------------------------------------------


def _dilog_series(z: complex, terms: int = 800) -> complex:
    return sum((-z) ** k / k**2 for k in range(1, terms))


def _even_dilog_series(z: complex, terms: int = 800) -> complex:
    return sum((-1) ** k * z ** (2 * k) / (2 * k**2) for k in range(1, terms))


def vector_space_counterexample(scan_density: int = 360) -> dict:
    """Failure of additivity: the sum of two class members leaves the class.

    With generators w1 = z and w2 = z^2 the sum z(e^A + e^B) would need the
    Schwarz datum w = exp(-z(A'e^A + B'e^B)/(e^A + e^B)) - 1.  Both that
    normalized transform (which satisfies w(0) = 0) and the flattened
    variant exp(-z(A'e^A + B'e^B))/(e^A + e^B) - 1 (which attains the
    reference witness modulus at z0 = -(1/2 + 2i/3)) are evaluated; the normalized transform exceeds modulus 1 elsewhere in the
    disk, which is what refutes closedness under addition.
    """
    z0 = -(0.5 + 2j / 3)

    def parts(z):
        e_a = cmath.exp(_dilog_series(z))
        e_b = cmath.exp(_even_dilog_series(z))
        num = cmath.log(1 + z) * e_a + cmath.log(1 + z * z) * e_b
        return num, e_a + e_b

    def omega_normalized(z):
        if z == 0:
            return 0.0 + 0.0j
        num, den = parts(z)
        return cmath.exp(num / den) - 1

    def omega_flattened(z):
        num, den = parts(z)
        return cmath.exp(num) / den - 1

    max_abs, argmax = 0.0, 0j
    for r in (0.7, 0.85, 0.95, 0.985):
        for j in range(scan_density):
            z = r * cmath.exp(2j * math.pi * j / scan_density)
            a = abs(omega_normalized(z))
            if a > max_abs:
                max_abs, argmax = a, z
    return {
        "z0": z0,
        "omega_abs_at_z0": abs(omega_flattened(z0)),
        "normalized_abs_at_z0": abs(omega_normalized(z0)),
        "omega_at_0": omega_normalized(0),
        "normalized_max_abs": max_abs,
        "normalized_argmax": argmax,
        "exceeds_unit_disk": max_abs > 1,
    }


def lambda_combination_check(
    lam: float, m: int, n: int, order: int = 48, radius: float = 0.99, angles: int = 256
) -> dict:
    """Blended generator membership: the z exp(...) construction stays in class.

    Builds g = z exp(alpha) with
    alpha = (1-lam)/m * sum_k (-z^m)^k/k^2 + lam/n * sum_k (-z^n)^k/k^2,
    verifies z g'/g = lam (1 - log(1+z^n)) + (1-lam)(1 - log(1+z^m)) as a
    series identity, and checks that the blend stays inside the image region
    on a boundary-adjacent grid.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive integers")
    if not 0 <= lam <= 1:
        raise ValueError("lambda must lie in [0, 1]")
    coeffs = [0.0] * (order + 1)
    k = 1
    while m * k <= order:
        coeffs[m * k] += (1 - lam) / m * (-1) ** k / k**2
        k += 1
    k = 1
    while n * k <= order:
        coeffs[n * k] += lam / n * (-1) ** k / k**2
        k += 1
    alpha_series = TruncatedSeries(coeffs)
    u = alpha_series.exp(order)
    g = u.truncated(order - 1).shifted(1)

    # series identity: z g'/g = (u + z u') / u for g = z u
    ratio = (u + u.derivative().shifted(1).padded(order)).divide(u, order)
    psi = make_spec("psi")
    zn = [0.0] * (order + 1)
    zm = [0.0] * (order + 1)
    if n <= order:
        zn[n] = 1.0
    if m <= order:
        zm[m] = 1.0
    psi_series = psi.series(order)
    blend = lam * psi_series.compose(TruncatedSeries(zn), order) + (1 - lam) * psi_series.compose(
        TruncatedSeries(zm), order
    )
    max_coeff_err = max(
        abs(complex(ratio[k]) - complex(blend[k])) for k in range(order + 1)
    )

    worst_margin = math.inf
    inside = True
    for j in range(angles):
        z = radius * cmath.exp(2j * math.pi * j / angles)
        w = lam * (1 - cmath.log(1 + z**n)) + (1 - lam) * (1 - cmath.log(1 + z**m))
        margin = 1 - abs(cmath.exp(1 - w) - 1)
        worst_margin = min(worst_margin, margin)
        inside = inside and in_psi_image(w)
    return {
        "lambda": lam,
        "m": m,
        "n": n,
        "series_identity_error": max_coeff_err,
        "all_inside": inside,
        "worst_margin": worst_margin,
        "g_series": g,
    }


def conjecture_check(n_max: int = 5, m_max: int = 10) -> dict:
    """Coefficient comparison table for the power-substituted structural family.

    Exact rational coefficients of t_n for n = 1..n_max up to order m_max;
    any |a_{m,n}| > |a_{m,1}| lands in ``violations``.
    """
    if n_max < 2 or m_max < 5:
        raise ValueError("need n_max >= 2 and m_max >= 5")
    psi = make_spec("psi")
    table: dict[int, list[Fraction]] = {}
    for n in range(1, n_max + 1):
        series = t_series(psi, n, m_max, exact=True).series
        table[n] = [Fraction(series[m]) for m in range(2, m_max + 1)]
    violations = []
    for n in range(2, n_max + 1):
        for i, m in enumerate(range(2, m_max + 1)):
            if abs(table[n][i]) > abs(table[1][i]):
                violations.append({"m": m, "n": n, "value": str(table[n][i]), "reference": str(table[1][i])})
    return {
        "n_max": n_max,
        "m_max": m_max,
        "table": {n: [str(c) for c in cs] for n, cs in table.items()},
        "violations": violations,
    }
