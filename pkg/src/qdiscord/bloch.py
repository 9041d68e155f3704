"""Bloch-sphere picture of qubit states, channels and measurements.

A single-qubit state is rho = (I + r.sigma)/2 with a real vector r of norm
<= 1.  A trace-preserving channel acts on Bloch vectors as the affine map
r -> eta r + c with a real 3x3 matrix eta and a shift c.

The projective measurement on qubit b is parametrized by polar/azimuthal
angles (theta, phi).  Conditioned on the outcome, qubit a collapses to a
pure state whose Bloch direction depends on (theta, phi) and on the
entanglement angle gamma of the reference state; the channel then maps that
direction to the output Bloch vector whose length ("purity") drives the
conditional entropy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmat import I2, PAULIS, dagger

#: Outcome probabilities below this are degenerate (measurement pinned to a
#: zero-probability branch); scalar APIs raise, vector paths zero the branch.
DEGENERATE_TOL = 1e-14


class DegenerateOutcomeError(ValueError):
    """A measurement outcome has (numerically) zero probability."""


def to_bloch(rho):
    """Bloch vector r_k = Tr(rho sigma_k) of a 2x2 Hermitian matrix."""
    rho = np.asarray(rho, dtype=complex)
    return np.array([np.real(np.trace(rho @ s)) for s in PAULIS])


def from_bloch(r):
    """State (I + r.sigma)/2 for a real 3-vector r."""
    r = np.asarray(r, dtype=float)
    out = np.array(I2) / 2
    for rk, s in zip(r, PAULIS):
        out = out + 0.5 * rk * s
    return out


@dataclass
class AffineChannel:
    """Affine Bloch action r -> eta r + c of a trace-preserving channel."""

    eta: np.ndarray
    c: np.ndarray

    def __call__(self, r):
        return self.eta @ np.asarray(r, dtype=float) + self.c


def affine_from_kraus(kraus):
    """Affine form of a Kraus channel.

    Columns of eta are the Bloch images of the Pauli inputs,
    eta[j, i] = Tr(sigma_j eps(sigma_i)) / 2, and c is the Bloch vector of
    eps(I)/...; together they satisfy
    ``to_bloch(apply_channel(k, rho)) == eta @ to_bloch(rho) + c``.
    """
    from .choi import apply_channel

    eta = np.zeros((3, 3))
    for i, s in enumerate(PAULIS):
        out = apply_channel(kraus, s)
        for j, sj in enumerate(PAULIS):
            eta[j, i] = np.real(np.trace(sj @ out)) / 2
    c = to_bloch(apply_channel(kraus, I2)) / 2
    return AffineChannel(eta=eta, c=c)


def conditional_probabilities(gamma, theta):
    """Outcome probabilities ( (1+cos th cos g)/2, (1-cos th cos g)/2 )."""
    x = np.cos(theta) * np.cos(gamma)
    return 0.5 * (1.0 + x), 0.5 * (1.0 - x)


def conditional_bloch_in(gamma, theta, phi):
    """Pre-channel Bloch directions (s, t) of the two conditional states.

    Both are unit vectors.  Raises :class:`DegenerateOutcomeError` when one
    outcome probability vanishes (theta ~ 0 together with gamma ~ 0), where
    the corresponding direction is undefined.
    """
    p1, p2 = conditional_probabilities(gamma, theta)
    if min(p1, p2) < DEGENERATE_TOL:
        raise DegenerateOutcomeError(
            f"outcome probability {min(p1, p2):.3e} below {DEGENERATE_TOL:.0e}"
        )
    s, t = _conditional_bloch_arrays(gamma, np.asarray(theta, float), np.asarray(phi, float))
    return s.reshape(3), t.reshape(3)


def conditional_purities(ch, gamma, theta, phi):
    """Post-channel purities and probabilities (s', t', p1, p2)."""
    s, t = conditional_bloch_in(gamma, theta, phi)
    p1, p2 = conditional_probabilities(gamma, theta)
    sp = float(np.linalg.norm(ch(s)))
    tp = float(np.linalg.norm(ch(t)))
    return sp, tp, p1, p2


def _conditional_bloch_arrays(gamma, theta, phi):
    """Vectorized (s, t) directions, shape (3, ...); no degeneracy guard.

    The conditional amplitudes carry exp(-i phi) when the measurement vector
    carries exp(+i phi), so the y components rotate against the measurement
    azimuth; this is what keeps the channel path equal to the direct
    projection at the same angles.
    """
    sg, cg = np.sin(gamma), np.cos(gamma)
    st, ct = np.sin(theta), np.cos(theta)
    cp, sp = np.cos(phi), np.sin(phi)
    dp = 1.0 + cg * ct
    dm = 1.0 - cg * ct
    dp = np.where(np.abs(dp) < DEGENERATE_TOL, DEGENERATE_TOL, dp)
    dm = np.where(np.abs(dm) < DEGENERATE_TOL, DEGENERATE_TOL, dm)
    s = np.stack([sg * st * cp / dp, -sg * st * sp / dp, (cg + ct) / dp])
    t = np.stack([-sg * st * cp / dm, sg * st * sp / dm, (cg - ct) / dm])
    return s, t


def _purities_arrays(eta, c, gamma, theta, phi):
    """Vectorized (s', t', p1, p2) over angle arrays."""
    s, t = _conditional_bloch_arrays(gamma, theta, phi)
    sv = np.tensordot(eta, s, axes=(1, 0)) + c.reshape((3,) + (1,) * (s.ndim - 1))
    tv = np.tensordot(eta, t, axes=(1, 0)) + c.reshape((3,) + (1,) * (t.ndim - 1))
    sp = np.sqrt(np.sum(sv * sv, axis=0))
    tp = np.sqrt(np.sum(tv * tv, axis=0))
    x = np.cos(theta) * np.cos(gamma)
    return sp, tp, 0.5 * (1.0 + x), 0.5 * (1.0 - x)


# measurement-direction helpers ------------------------------------------------

def angles_to_direction(theta, phi):
    """Unit vector (sin th cos ph, sin th sin ph, cos th)."""
    st = np.sin(theta)
    return np.array([st * np.cos(phi), st * np.sin(phi), np.cos(theta)])


def direction_to_angles(n):
    """Inverse of :func:`angles_to_direction`; phi in [0, 2pi)."""
    n = np.asarray(n, dtype=float)
    n = n / np.linalg.norm(n)
    theta = float(np.arccos(np.clip(n[2], -1.0, 1.0)))
    phi = float(np.arctan2(n[1], n[0])) % (2 * np.pi)
    if theta < 1e-15 or theta > np.pi - 1e-15:
        phi = 0.0
    return theta, phi


def unitary_to_rotation(u):
    """SO(3) rotation R of a 2x2 unitary: u (n.sigma) u^+ = (R n).sigma."""
    u = np.asarray(u, dtype=complex)
    r = np.zeros((3, 3))
    for j, sj in enumerate(PAULIS):
        img = u @ sj @ dagger(u)
        for i, si in enumerate(PAULIS):
            r[i, j] = np.real(np.trace(si @ img)) / 2
    return r


def fold_angles(v, theta, phi):
    """Measurement angles in the original b frame, given angles in the frame
    rotated by the 2x2 unitary ``v`` (projectors P -> v^+ P v)."""
    n = unitary_to_rotation(dagger(v)) @ angles_to_direction(theta, phi)
    return normalize_angles(*direction_to_angles(n))


def normalize_angles(theta, phi):
    """Canonical angles for a projective measurement.

    The pairs (theta, phi) and (pi - theta, phi + pi) label the same
    measurement with outcomes swapped; the canonical member has
    theta in [0, pi/2] (and phi in [0, pi) when theta = pi/2).
    """
    theta = float(theta) % (2 * np.pi)
    phi = float(phi)
    if theta > np.pi:
        theta = 2 * np.pi - theta
        phi += np.pi
    if theta > np.pi / 2 + 1e-12:
        theta = np.pi - theta
        phi += np.pi
    phi %= 2 * np.pi
    if abs(theta - np.pi / 2) <= 1e-12:
        phi %= np.pi
    if theta <= 1e-15:
        phi = 0.0
    return theta, phi


def measurement_distance(a1, a2):
    """Angle between two projective measurements, folding the outcome swap.

    Arguments are (theta, phi) pairs; the result is in [0, pi/2].  The
    chord/arcsin form stays accurate near zero separation.
    """
    n1 = angles_to_direction(*a1)
    n2 = angles_to_direction(*a2)
    chord = min(np.linalg.norm(n1 - n2), np.linalg.norm(n1 + n2))
    return float(2.0 * np.arcsin(np.clip(chord / 2.0, 0.0, 1.0)))
