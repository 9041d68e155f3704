"""Classical correlation and quantum discord of a two-qubit state.

The measured mutual information

    J(theta, phi) = S(rho_a) - sum_j p_j S(rho_j)

is maximized over projective measurements on qubit b.  Two independent
evaluation paths are kept deliberately separate:

* the *channel* path evaluates J from the affine Bloch form of the channel
  extracted by :mod:`qdiscord.choi` (angles live in the decomposition frame);
* the *direct* path projects the state itself with explicit measurement
  operators and never touches the decomposition (angles live in the original
  frame).

The maximization itself also runs twice: a damped-Newton search for the
stationary points of J on the channel path, and a brute-force grid oracle
with golden-section refinement on the direct path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bloch, choi
from .qmat import (
    binary_entropy_arr,
    check_density_matrix,
    partial_trace_a,
    partial_trace_b,
    von_neumann_entropy,
)

LN2 = np.log(2.0)
#: Purities this close to 1 are clamped inside logarithms.
SATURATION_CLAMP = 1e-12
#: Zero-probability guard for outcome contributions.
PROB_TOL = 1e-14
#: Scaled gradient norm required of a reported stationary point.
STATIONARY_TOL = 1e-7
#: Newton convergence threshold on the raw gradient norm.
NEWTON_TOL = 1e-10
#: Stationary points closer than this (measurement angle) are merged.
MERGE_TOL = 1e-5
#: Angular slack when classifying a root as polar/equatorial.
CLASSIFY_TOL = 1e-6

SYMMETRIC = "symmetric"
ASYMMETRIC = "asymmetric"
STATE_DEPENDENT = "state_dependent"


@dataclass
class StationaryPoint:
    """A measurement setting where both partial derivatives of J vanish."""

    theta: float
    phi: float
    objective: float
    grad_norm: float
    kind: str

    def as_row(self):
        return (self.kind, self.theta, self.phi, self.objective, self.grad_norm)


@dataclass
class DiscordReport:
    """Mutual information split into classical and quantum parts.

    ``theta``/``phi`` are the optimal measurement angles in the original
    basis of qubit b; ``stationary_points`` (when the stationary method ran)
    are expressed in the decomposition frame.
    """

    mutual_info: float
    classical_corr: float
    discord: float
    theta: float
    phi: float
    method: str
    stationary_points: list = field(default_factory=list)


def mutual_information(rho):
    """S(rho_a) + S(rho_b) - S(rho_ab), in bits."""
    rho = check_density_matrix(rho)
    return float(
        von_neumann_entropy(partial_trace_b(rho))
        + von_neumann_entropy(partial_trace_a(rho))
        - von_neumann_entropy(rho)
    )


# ---------------------------------------------------------------------------
# channel path
# ---------------------------------------------------------------------------

def output_marginal_entropy(ch, gamma):
    """S(rho_a) computed from the channel alone (image of the b marginal)."""
    r = ch(np.array([0.0, 0.0, np.cos(gamma)]))
    return float(binary_entropy_arr((1.0 + np.linalg.norm(r)) / 2.0))


def conditional_entropy_channel(ch, gamma, theta, phi):
    """sum_j p_j S(rho_j) evaluated through the affine channel form."""
    return float(_ce_channel_arrays(ch.eta, ch.c, gamma, np.asarray(theta, float), np.asarray(phi, float)))


def objective_channel(ch, gamma, theta, phi):
    """J(theta, phi) on the channel path."""
    return output_marginal_entropy(ch, gamma) - conditional_entropy_channel(ch, gamma, theta, phi)


def _ce_channel_arrays(eta, c, gamma, th, ph):
    sp, tp, p1, p2 = bloch._purities_arrays(eta, c, gamma, th, ph)
    hs = binary_entropy_arr((1.0 + sp) / 2.0)
    ht = binary_entropy_arr((1.0 + tp) / 2.0)
    return np.where(p1 > PROB_TOL, p1 * hs, 0.0) + np.where(p2 > PROB_TOL, p2 * ht, 0.0)


def _half_log_ratio(x):
    """log2 sqrt((1+x)/(1-x)), clamped just below the x = 1 divergence."""
    xc = np.clip(x, None, 1.0 - SATURATION_CLAMP)
    return 0.5 * np.log2((1.0 + xc) / (1.0 - xc))


def _log_ratio_over_x(x):
    """_half_log_ratio(x) / x, continued through x = 0 by its series."""
    x = np.asarray(x, dtype=float)
    small = x < 1e-6
    safe = np.where(small, 1.0, x)
    out = _half_log_ratio(x) / safe
    series = (1.0 + x * x / 3.0) / LN2
    return np.where(small, series, out)


def grad_objective(ch, gamma, theta, phi):
    """Analytic gradient (dJ/dtheta, dJ/dphi) on the channel path.

    Purities are clamped at 1 - 1e-12 inside the logarithms, so the value is
    finite (and still ~0 where it should vanish) even for a channel that
    keeps the conditional states pure.
    """
    gt, gp = _grad_arrays(ch.eta, ch.c, gamma, np.asarray(theta, float), np.asarray(phi, float))
    return float(gt), float(gp)


def _grad_arrays(eta, c, gamma, th, ph):
    sg, cg = np.sin(gamma), np.cos(gamma)
    st, ct = np.sin(th), np.cos(th)
    cp, sp = np.cos(ph), np.sin(ph)
    dp = 1.0 + cg * ct
    dm = 1.0 - cg * ct
    dp = np.where(np.abs(dp) < PROB_TOL, PROB_TOL, dp)
    dm = np.where(np.abs(dm) < PROB_TOL, PROB_TOL, dm)

    # y components rotate against the measurement azimuth (exp(-i phi) on
    # the conditional amplitudes); see bloch._conditional_bloch_arrays
    s = np.stack([sg * st * cp / dp, -sg * st * sp / dp, (cg + ct) / dp])
    t = np.stack([-sg * st * cp / dm, sg * st * sp / dm, (cg - ct) / dm])
    ds_dth = np.stack(
        [
            sg * cp * (ct + cg) / dp**2,
            -sg * sp * (ct + cg) / dp**2,
            -(sg**2) * st / dp**2,
        ]
    )
    dt_dth = np.stack(
        [
            -sg * cp * (ct - cg) / dm**2,
            sg * sp * (ct - cg) / dm**2,
            (sg**2) * st / dm**2,
        ]
    )
    ds_dph = np.stack([-sg * st * sp / dp, -sg * st * cp / dp, np.zeros_like(dp)])
    dt_dph = np.stack([sg * st * sp / dm, sg * st * cp / dm, np.zeros_like(dm)])

    cvec = np.asarray(c, float).reshape((3,) + (1,) * (s.ndim - 1))

    def image(v):
        return np.tensordot(eta, v, axes=(1, 0))

    sv = image(s) + cvec
    tv = image(t) + cvec
    spn = np.sqrt(np.sum(sv * sv, axis=0))
    tpn = np.sqrt(np.sum(tv * tv, axis=0))

    p1 = dp / 2.0
    p2 = dm / 2.0
    dp1 = -st * cg / 2.0

    rs = _log_ratio_over_x(spn)
    rt = _log_ratio_over_x(tpn)
    hs = binary_entropy_arr((1.0 + spn) / 2.0)
    ht = binary_entropy_arr((1.0 + tpn) / 2.0)

    def dot(a, b):
        return np.sum(a * b, axis=0)

    g_th = (
        -dp1 * (hs - ht)
        + p1 * rs * dot(sv, image(ds_dth))
        + p2 * rt * dot(tv, image(dt_dth))
    )
    g_ph = p1 * rs * dot(sv, image(ds_dph)) + p2 * rt * dot(tv, image(dt_dph))
    return g_th, g_ph


def _scaled_grad_norm(eta, c, gamma, theta, phi):
    gt, gp = _grad_arrays(eta, c, gamma, np.asarray(theta, float), np.asarray(phi, float))
    return float(np.hypot(gt, np.sin(theta) * gp))


# ---------------------------------------------------------------------------
# direct path
# ---------------------------------------------------------------------------

def conditional_entropy_direct(rho, theta, phi):
    """sum_j p_j S(rho_j) by explicit projection of the state itself.

    The measurement acts on qubit b in the original basis; the channel
    decomposition is never consulted.  Outcomes with probability below
    1e-14 contribute zero.
    """
    rho = np.asarray(rho, dtype=complex)
    return float(_ce_direct_arrays(rho, np.asarray(theta, float), np.asarray(phi, float)))


def _ce_direct_arrays(rho, th, ph):
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    chh = np.cos(th / 2.0)
    shh = np.sin(th / 2.0)
    e = np.exp(1j * ph)
    uu, vv, uv = chh * chh, shh * shh, chh * shh

    # unnormalized conditional a-state for outcome 1 (vector (cos, sin e^{i phi}));
    # outcome 2 is the complement against the a marginal
    a00 = uu * r[0, 0, 0, 0] + uv * (e * r[0, 0, 0, 1] + e.conj() * r[0, 1, 0, 0]) + vv * r[0, 1, 0, 1]
    a01 = uu * r[0, 0, 1, 0] + uv * (e * r[0, 0, 1, 1] + e.conj() * r[0, 1, 1, 0]) + vv * r[0, 1, 1, 1]
    a11 = uu * r[1, 0, 1, 0] + uv * (e * r[1, 0, 1, 1] + e.conj() * r[1, 1, 1, 0]) + vv * r[1, 1, 1, 1]
    b00 = (r[0, 0, 0, 0] + r[0, 1, 0, 1]) - a00
    b01 = (r[0, 0, 1, 0] + r[0, 1, 1, 1]) - a01
    b11 = (r[1, 0, 1, 0] + r[1, 1, 1, 1]) - a11

    def weighted_entropy(x00, x01, x11):
        p = np.real(x00 + x11)
        det = np.real(x00 * x11 - x01 * np.conj(x01))
        safe = np.where(p > PROB_TOL, p, 1.0)
        purity = np.sqrt(np.clip(1.0 - 4.0 * det / (safe * safe), 0.0, 1.0))
        s = binary_entropy_arr((1.0 + purity) / 2.0)
        return np.where(p > PROB_TOL, p * s, 0.0)

    return weighted_entropy(a00, a01, a11) + weighted_entropy(b00, b01, b11)


# ---------------------------------------------------------------------------
# stationary-point search
# ---------------------------------------------------------------------------

def universal_candidates(ch, gamma):
    """The stationary settings that exist for every state.

    Returns the polar candidate theta = 0 and the equatorial candidates
    theta = pi/2 at every azimuth where dJ/dphi vanishes, each verified with
    scaled gradient norm below 1e-7.
    """
    eta, c = ch.eta, ch.c
    sa = output_marginal_entropy(ch, gamma)
    pts = []

    # polar candidate: dJ/dphi vanishes identically at theta = 0, while the
    # theta derivative there is A cos(phi) + B sin(phi); pick its zero
    ga, _ = _grad_arrays(eta, c, gamma, np.array(0.0), np.array(0.0))
    gb, _ = _grad_arrays(eta, c, gamma, np.array(0.0), np.array(np.pi / 2))
    a, b = float(ga), float(gb)
    if np.hypot(a, b) < 1e-11:
        phi0 = 0.0
    else:
        phi0 = float(np.arctan2(-a, b)) % np.pi
    obj0 = sa - float(_ce_channel_arrays(eta, c, gamma, np.array(0.0), np.array(phi0)))
    pts.append(
        StationaryPoint(0.0, phi0, obj0, _scaled_grad_norm(eta, c, gamma, 0.0, phi0), ASYMMETRIC)
    )

    # equatorial candidates: zeros of dJ/dphi along theta = pi/2
    half_pi = np.pi / 2
    phis = np.linspace(0.0, np.pi, 1441)
    _, gph = _grad_arrays(eta, c, gamma, np.full_like(phis, half_pi), phis)
    if np.max(np.abs(gph)) < 1e-12:
        roots = [0.0]
    else:
        roots = []
        for i in range(len(phis) - 1):
            lo, hi = phis[i], phis[i + 1]
            flo, fhi = gph[i], gph[i + 1]
            if flo == 0.0:
                roots.append(float(lo))
                continue
            if flo * fhi < 0.0:
                for _ in range(64):
                    mid = 0.5 * (lo + hi)
                    fm = float(_grad_arrays(eta, c, gamma, np.array(half_pi), np.array(mid))[1])
                    if flo * fm <= 0.0:
                        hi = mid
                    else:
                        lo, flo = mid, fm
                roots.append(0.5 * (lo + hi))
    seen = []
    for phib in roots:
        phib %= np.pi
        if any(min(abs(phib - q), np.pi - abs(phib - q)) < 1e-8 for q in seen):
            continue
        seen.append(phib)
        gn = _scaled_grad_norm(eta, c, gamma, half_pi, phib)
        if gn < STATIONARY_TOL:
            obj = sa - float(_ce_channel_arrays(eta, c, gamma, np.array(half_pi), np.array(phib)))
            pts.append(StationaryPoint(half_pi, phib, obj, gn, SYMMETRIC))
    return pts


def _newton_batch(eta, c, gamma, th0, ph0, max_iter=100, h=1e-6):
    """Damped Newton on the gradient, run on all start points at once."""
    th = np.asarray(th0, float).copy()
    ph = np.asarray(ph0, float).copy()
    alive = np.ones(th.shape, bool)

    def grad(t, p):
        return _grad_arrays(eta, c, gamma, t, p)

    for _ in range(max_iter):
        g0, g1 = grad(th, ph)
        gn = np.hypot(g0, g1)
        work = alive & (gn >= NEWTON_TOL) & np.isfinite(gn)
        if not work.any():
            break
        a0, a1 = grad(th + h, ph)
        b0, b1 = grad(th - h, ph)
        c0, c1 = grad(th, ph + h)
        d0, d1 = grad(th, ph - h)
        j00 = (a0 - b0) / (2 * h)
        j10 = (a1 - b1) / (2 * h)
        j01 = (c0 - d0) / (2 * h)
        j11 = (c1 - d1) / (2 * h)
        det = j00 * j11 - j01 * j10
        bad = work & ((np.abs(det) < 1e-30) | ~np.isfinite(det))
        alive &= ~bad
        work &= ~bad
        safe = np.where(np.abs(det) < 1e-30, 1.0, det)
        dth = np.where(work, -(j11 * g0 - j01 * g1) / safe, 0.0)
        dph = np.where(work, -(-j10 * g0 + j00 * g1) / safe, 0.0)

        alpha = np.ones_like(th)
        accepted = ~work
        for _ in range(50):
            if accepted.all():
                break
            tt = th + np.where(accepted, 0.0, alpha * dth)
            pp = ph + np.where(accepted, 0.0, alpha * dph)
            e0, e1 = grad(tt, pp)
            en = np.hypot(e0, e1)
            better = ~accepted & np.isfinite(en) & (en < gn)
            th = np.where(better, tt, th)
            ph = np.where(better, pp, ph)
            accepted |= better
            alpha = np.where(accepted, alpha, alpha / 2.0)
        alive &= ~(work & ~accepted)

    g0, g1 = grad(th, ph)
    keep = alive & (np.hypot(g0, g1) < NEWTON_TOL)
    return th[keep], ph[keep]


def _classify(theta):
    if theta < CLASSIFY_TOL:
        return ASYMMETRIC
    if abs(theta - np.pi / 2) < CLASSIFY_TOL:
        return SYMMETRIC
    return STATE_DEPENDENT


def _stationary_points_1d(eta, c, gamma, sa):
    """Roots when J does not depend on phi (stationary circles in phi).

    Each circle is reported once, at phi = 0.  The outcome-swap symmetry
    makes J(theta) symmetric about pi/2, so interior roots are bracketed on
    (0, pi/2) only.
    """

    def g(theta):
        return float(_grad_arrays(eta, c, gamma, np.asarray(theta, float), np.zeros(np.shape(theta)))[0])

    def point(theta):
        obj = sa - float(_ce_channel_arrays(eta, c, gamma, np.array(theta), np.array(0.0)))
        gn = _scaled_grad_norm(eta, c, gamma, theta, 0.0)
        return StationaryPoint(theta, 0.0, obj, gn, _classify(theta))

    pts = [point(0.0), point(np.pi / 2)]
    thetas = np.linspace(0.0, np.pi / 2, 2001)[1:-1]
    vals = _grad_arrays(eta, c, gamma, thetas, np.zeros_like(thetas))[0]
    for i in range(len(thetas) - 1):
        lo, hi, flo, fhi = thetas[i], thetas[i + 1], vals[i], vals[i + 1]
        if flo == 0.0 or flo * fhi >= 0.0:
            continue
        for _ in range(64):
            mid = 0.5 * (lo + hi)
            fm = g(mid)
            if flo * fm <= 0.0:
                hi = mid
            else:
                lo, flo = mid, fm
        root = 0.5 * (lo + hi)
        if min(abs(root - q.theta) for q in pts) > MERGE_TOL:
            q = point(root)
            if q.grad_norm < STATIONARY_TOL:
                pts.append(q)
    pts.sort(key=lambda q: (-q.objective, q.theta, q.phi))
    return pts


def find_stationary_points(ch, gamma, n_theta=24, n_phi=48):
    """All stationary points of J: universal candidates plus Newton roots.

    Newton starts on an n_theta x n_phi grid covering theta in (0, pi/2)
    and phi in [0, 2 pi); the outcome-swap symmetry maps that patch onto the
    rest of the sphere.  Roots are folded to canonical angles, merged within
    an angle of 1e-5, verified to scaled gradient norm < 1e-7 and classified
    by their polar angle.

    Degenerate landscapes are collapsed to representatives: a flat objective
    (constant channel) reports the single canonical point (pi/2, 0), and a
    phi-independent objective (xy-isotropic channel, where stationary points
    form circles) reports each circle once at phi = 0.
    """
    eta, c = ch.eta, ch.c
    sa = output_marginal_entropy(ch, gamma)

    th_scan, ph_scan = np.meshgrid(
        np.linspace(0.0, np.pi, 49), np.linspace(0.0, 2 * np.pi, 96, endpoint=False), indexing="ij"
    )
    ce_scan = _ce_channel_arrays(eta, c, gamma, th_scan, ph_scan)
    if float(np.ptp(ce_scan)) < 1e-12:
        obj = sa - float(ce_scan.mean())
        return [StationaryPoint(np.pi / 2, 0.0, obj, 0.0, SYMMETRIC)]
    if float(np.max(np.ptp(ce_scan, axis=1))) < 1e-11:
        return _stationary_points_1d(eta, c, gamma, sa)

    pts = universal_candidates(ch, gamma)

    t0 = (np.arange(n_theta) + 0.5) * (np.pi / 2) / n_theta
    p0 = np.arange(n_phi) * (2 * np.pi) / n_phi
    tt, pp = np.meshgrid(t0, p0, indexing="ij")
    rth, rph = _newton_batch(eta, c, gamma, tt.ravel(), pp.ravel())

    roots = sorted(
        {
            (round(t / MERGE_TOL), round(p / MERGE_TOL)): (t, p)
            for t, p in (bloch.normalize_angles(a, b) for a, b in zip(rth, rph))
        }.values()
    )
    for t, p in roots:
        if any(bloch.measurement_distance((t, p), (q.theta, q.phi)) < MERGE_TOL for q in pts):
            continue
        gn = _scaled_grad_norm(eta, c, gamma, t, p)
        if gn >= STATIONARY_TOL:
            continue
        obj = sa - float(_ce_channel_arrays(eta, c, gamma, np.array(t), np.array(p)))
        pts.append(StationaryPoint(t, p, obj, gn, _classify(t)))

    pts.sort(key=lambda q: (-q.objective, q.theta, q.phi))
    return pts


# ---------------------------------------------------------------------------
# grid oracle
# ---------------------------------------------------------------------------

def _golden_min(f, lo, hi, x0, f0, iters=25):
    """Golden-section minimize on [lo, hi]; never worse than (x0, f0)."""
    gr = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1 = b - gr * (b - a)
    x2 = a + gr * (b - a)
    f1, f2 = f(x1), f(x2)
    best_x, best_f = (x0, f0)
    for x, fx in ((x1, f1), (x2, f2)):
        if fx < best_f:
            best_x, best_f = x, fx
    for _ in range(iters):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - gr * (b - a)
            f1 = f(x1)
            if f1 < best_f:
                best_x, best_f = x1, f1
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + gr * (b - a)
            f2 = f(x2)
            if f2 < best_f:
                best_x, best_f = x2, f2
    return best_x, best_f, b - a


def grid_oracle(rho, n_theta=64, n_phi=128):
    """Brute-force maximization of J over the measurement angles.

    Evaluates the direct-projection objective on an n_theta x n_phi grid
    (theta in [0, pi], phi in [0, 2 pi)) and polishes the best cell with
    alternating golden-section line searches (40 rounds).  Deterministic;
    ties resolve to the smallest theta, then the smallest phi.

    Returns
    -------
    (C, (theta, phi))
        The classical correlation and the optimal angles in the original
        basis, canonically folded.
    """
    if n_theta < 64 or n_phi < 128:
        raise ValueError("grid oracle resolution must be at least 64 x 128")
    rho = check_density_matrix(rho)
    sa = von_neumann_entropy(partial_trace_b(rho))

    th = np.linspace(0.0, np.pi, n_theta)
    ph = np.linspace(0.0, 2 * np.pi, n_phi, endpoint=False)
    tt, pp = np.meshgrid(th, ph, indexing="ij")
    ce = _ce_direct_arrays(rho, tt, pp)
    k = int(np.argmin(ce))
    t, p = float(tt.flat[k]), float(pp.flat[k])
    fv = float(ce.flat[k])

    # brackets shrink only as fast as the point stops moving, so the zigzag
    # progress of coordinate descent across coupled axes is not cut off
    wt = np.pi / (n_theta - 1)
    wp = 2 * np.pi / n_phi
    for r in range(40):
        if r % 2 == 0:
            lo, hi = max(0.0, t - wt), min(np.pi, t + wt)
            t_new, fv, _ = _golden_min(
                lambda x: float(_ce_direct_arrays(rho, np.array(x), np.array(p))), lo, hi, t, fv
            )
            wt = max(4.0 * abs(t_new - t), 0.25 * wt, 1e-10)
            t = t_new
        else:
            lo, hi = p - wp, p + wp
            p_new, fv, _ = _golden_min(
                lambda x: float(_ce_direct_arrays(rho, np.array(t), np.array(x))), lo, hi, p, fv
            )
            wp = max(4.0 * abs(p_new - p), 0.25 * wp, 1e-10)
            p = p_new

    t, p = bloch.normalize_angles(t, p)
    return sa - fv, (t, p)


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

def discord(rho, method="stationary", oracle_resolution=(64, 128)):
    """Mutual information, classical correlation and discord of a state.

    Parameters
    ----------
    rho : array_like
        Two-qubit density matrix.
    method : str
        ``"stationary"`` (channel decomposition + stationary-point search),
        ``"oracle"`` (direct grid maximization) or ``"xstate_analytic"``
        (closed form; raises ``NotApplicableError`` off its domain).
    oracle_resolution : tuple
        Grid used when ``method="oracle"``.

    Notes
    -----
    A state whose b marginal is numerically pure is a product state with
    zero correlations; it short-circuits to C = I and Q = 0 without a
    decomposition.
    """
    rho = check_density_matrix(rho)
    info = mutual_information(rho)

    bvals = np.linalg.eigvalsh(partial_trace_a(rho))
    if bvals.min() <= choi.RANK_TOL:
        return DiscordReport(
            mutual_info=info,
            classical_corr=info,
            discord=0.0,
            theta=np.pi / 2,
            phi=0.0,
            method=method,
        )

    if method == "oracle":
        corr, (theta, phi) = grid_oracle(rho, *oracle_resolution)
        return DiscordReport(info, corr, info - corr, theta, phi, method)

    if method == "stationary":
        d = choi.decompose(rho)
        ch = bloch.affine_from_kraus(d.kraus)
        pts = find_stationary_points(ch, d.gamma)
        best_obj = max(q.objective for q in pts)
        best = min(
            (q for q in pts if q.objective >= best_obj - 1e-10),
            key=lambda q: (q.theta, q.phi),
        )
        theta, phi = bloch.fold_angles(d.basis_rotation, best.theta, best.phi)
        return DiscordReport(info, best.objective, info - best.objective, theta, phi, method, pts)

    if method == "xstate_analytic":
        from .xstate import analytic_discord_x

        return analytic_discord_x(rho)

    raise ValueError(f"unknown method {method!r}")
