"""Closed-form discord for X states with a maximally mixed b marginal.

An X state (nonzero entries only on the diagonal and anti-diagonal) yields
a channel whose affine form is block structured: a 2x2 block in the xy
plane, a lone zz element and a z shift.  When the b marginal is maximally
mixed the conditional purities reduce to

    s'(theta)^2 = a + 2 b cos(theta) + c cos(theta)^2   (at the best azimuth)

with a, b, c built from the block data, and a single shape parameter
k = c / (b^2 - c a) decides whether the polar and equatorial settings are
the only stationary points.  Inside that parameter range the discord is a
comparison of two closed-form candidates; outside it (and for any state
with a non-maximally-mixed marginal) callers must fall back to the general
solver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bloch, choi
from .correlations import (
    ASYMMETRIC,
    SYMMETRIC,
    DiscordReport,
    StationaryPoint,
    _scaled_grad_norm,
    mutual_information,
    output_marginal_entropy,
)
from .qmat import binary_entropy, check_density_matrix, partial_trace_a

#: Absolute magnitude below which an off-pattern entry still counts as zero.
X_PATTERN_TOL = 1e-10
#: Tolerance on the affine block structure of an extracted channel.
BLOCK_TOL = 1e-8
#: b^2 - c a below this is treated as degenerate (k undefined).
DEGENERATE_TOL = 1e-12

# row/column pairs (0-based) that must vanish for the X pattern
_OFF_PATTERN = ((0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2))


class NotApplicableError(ValueError):
    """The analytic X-state path does not cover this input."""


def is_x_state(rho, tol=X_PATTERN_TOL):
    """True when all eight off-pattern entries vanish to within ``tol``."""
    rho = np.asarray(rho, dtype=complex)
    return all(abs(rho[i, j]) < tol for i, j in _OFF_PATTERN)


def _require_block_form(ch):
    eta, c = ch.eta, ch.c
    off = [eta[0, 2], eta[1, 2], eta[2, 0], eta[2, 1], c[0], c[1]]
    if max(abs(v) for v in off) >= BLOCK_TOL:
        raise NotApplicableError("channel is not in X block form")


def f_phi(ch, phi):
    """Squared xy-plane stretch of the channel along azimuth ``phi``."""
    _require_block_form(ch)
    u = np.array([np.cos(phi), np.sin(phi)])
    return float(np.sum((ch.eta[:2, :2] @ u) ** 2))


def maximize_f(ch):
    """Exact maximum of :func:`f_phi` over the azimuth.

    f is a quadratic form in (cos phi, sin phi), so the maximum is the top
    eigenvalue of the 2x2 Gram matrix M^T M of the upper-left block, with
    the maximizing azimuth read off the eigenvector.  The isotropic case
    reports azimuth 0.

    Returns
    -------
    (eta_perp_sq, phi_star)
    """
    _require_block_form(ch)
    m = ch.eta[:2, :2]
    gram = m.T @ m
    vals, vecs = np.linalg.eigh(gram)
    if vals[1] - vals[0] < 1e-14:
        return float(vals[1]), 0.0
    u = vecs[:, 1]
    phi_star = float(np.arctan2(u[1], u[0])) % np.pi
    return float(vals[1]), phi_star


@dataclass
class XStateParams:
    """Reduced parameters of an X-block channel at maximal reference mixing."""

    eta_perp: float
    c_z: float
    eta_zz: float
    a: float
    b: float
    c: float
    k: float | None
    phi_star: float


def x_params(ch):
    """Extract :class:`XStateParams` from an X-block affine channel."""
    eta_perp_sq, phi_star = maximize_f(ch)
    eta_perp = np.sqrt(max(eta_perp_sq, 0.0))
    c_z = float(ch.c[2])
    eta_zz = float(ch.eta[2, 2])
    a = eta_perp_sq + c_z**2
    b = eta_zz * c_z
    c = eta_zz**2 - eta_perp_sq
    denom = b * b - c * a
    k = None if abs(denom) < DEGENERATE_TOL else c / denom
    return XStateParams(eta_perp, c_z, eta_zz, a, b, c, k, phi_star)


def universal_sufficient(p):
    """True when k lies outside the gap (-1, -2/3), so the polar and
    equatorial candidates exhaust the stationary points.

    The degenerate case (k undefined because b^2 = c a) is accepted: there
    the optimum is a direct comparison of the same two candidates.
    """
    if p.k is None:
        return True
    return p.k >= -2.0 / 3.0 - 1e-12 or p.k <= -1.0 + 1e-12


def H_func(x, k):
    """(sqrt(1 + k x^2) / x) ln((1+x)/(1-x)) on 0 < x < 1.

    Strictly monotone exactly when k >= -2/3 or k <= -1; inside the gap it
    loses monotonicity, which is what permits extra stationary points.
    """
    x = float(x)
    if not 0.0 < x < 1.0:
        raise ValueError(f"x = {x!r} outside (0, 1)")
    radicand = 1.0 + k * x * x
    if radicand < 0.0:
        raise ValueError(f"1 + k x^2 = {radicand:.3e} is negative")
    return float(np.sqrt(radicand) / x * np.log((1.0 + x) / (1.0 - x)))


def G_func(x, k):
    """sqrt(1 + k x^2) / x on 0 < x < 1."""
    x = float(x)
    if not 0.0 < x < 1.0:
        raise ValueError(f"x = {x!r} outside (0, 1)")
    radicand = 1.0 + k * x * x
    if radicand < 0.0:
        raise ValueError(f"1 + k x^2 = {radicand:.3e} is negative")
    return float(np.sqrt(radicand) / x)


def closed_form_purities(p, theta):
    """(s', t') from the reduced parameters, at the optimal azimuth."""
    ct = np.cos(theta)
    s = np.sqrt(max(p.a + 2 * p.b * ct + p.c * ct * ct, 0.0))
    t = np.sqrt(max(p.a - 2 * p.b * ct + p.c * ct * ct, 0.0))
    return float(s), float(t)


def analytic_discord_x(rho):
    """Closed-form discord for qualifying X states.

    Requires the X entry pattern, a maximally mixed b marginal and
    :func:`universal_sufficient`; otherwise raises
    :class:`NotApplicableError` and the caller should use the stationary
    solver.  The classical correlation is the better of the two candidates:

    * equatorial: s' = t' = sqrt(a) at theta = pi/2, the best azimuth;
    * polar: s' = |c_z + eta_zz|, t' = |c_z - eta_zz| at theta = 0.
    """
    rho = check_density_matrix(rho)
    if not is_x_state(rho):
        raise NotApplicableError("state does not have the X entry pattern")
    bvals = np.linalg.eigvalsh(partial_trace_a(rho))
    if abs(bvals[1] - bvals[0]) >= 1e-10:
        raise NotApplicableError("b marginal is not maximally mixed")

    d = choi.decompose(rho)
    ch = bloch.affine_from_kraus(d.kraus)
    params = x_params(ch)
    if not universal_sufficient(params):
        raise NotApplicableError(
            f"shape parameter k = {params.k:.6f} lies in the gap (-1, -2/3)"
        )

    info = mutual_information(rho)
    sa = output_marginal_entropy(ch, d.gamma)

    s_eq = np.sqrt(max(params.a, 0.0))
    obj_eq = sa - binary_entropy(min(1.0, (1.0 + s_eq) / 2.0))
    s_pol = abs(params.c_z + params.eta_zz)
    t_pol = abs(params.c_z - params.eta_zz)
    obj_pol = sa - 0.5 * (
        binary_entropy(min(1.0, (1.0 + s_pol) / 2.0))
        + binary_entropy(min(1.0, (1.0 + t_pol) / 2.0))
    )

    eta, c = ch.eta, ch.c
    # the conditional direction rotates against the measurement azimuth, so
    # the objective peaks at the reflection of the f-maximizing azimuth
    phi_eq = (-params.phi_star) % np.pi
    candidates = [
        StationaryPoint(
            np.pi / 2,
            phi_eq,
            obj_eq,
            _scaled_grad_norm(eta, c, d.gamma, np.pi / 2, phi_eq),
            SYMMETRIC,
        ),
        StationaryPoint(
            0.0,
            0.0,
            obj_pol,
            _scaled_grad_norm(eta, c, d.gamma, 0.0, 0.0),
            ASYMMETRIC,
        ),
    ]
    candidates.sort(key=lambda q: (-q.objective, q.theta, q.phi))
    best = candidates[0]
    theta, phi = bloch.fold_angles(d.basis_rotation, best.theta, best.phi)
    return DiscordReport(
        mutual_info=info,
        classical_corr=best.objective,
        discord=info - best.objective,
        theta=theta,
        phi=phi,
        method="xstate_analytic",
        stationary_points=candidates,
    )
