"""Channel/state correspondence for two-qubit density matrices.

A two-qubit state with a full-rank marginal on the second qubit is rewritten
as a qubit channel acting on one arm of a pure entangled reference state

    |ref> = cos(gamma/2)|00> + sin(gamma/2)|11>,

after a basis rotation on qubit b that diagonalizes its marginal.  The
channel comes out as a Kraus set built from the eigendecomposition of the
state, via the row-major operator <-> vector correspondence
``vec(A)[2i+j] = A[i, j]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .qmat import I2, check_density_matrix, dagger, frobenius, herm_eig, partial_trace_a, tensor

#: Marginal eigenvalues at or below this are treated as a singular marginal.
RANK_TOL = 1e-8
#: Eigenvalues of the state below this contribute no Kraus operator.
KRAUS_DROP_TOL = 1e-14


class SingularMarginalError(ValueError):
    """The marginal of qubit b is (numerically) pure; no channel form exists."""


def vectorize(a):
    """Row-major column stacking: vec(A)[2i+j] = A[i, j]."""
    return np.asarray(a, dtype=complex).reshape(4)


def devectorize(v):
    """Inverse of :func:`vectorize`."""
    return np.asarray(v, dtype=complex).reshape(2, 2)


def sandwich_identity_check(a, rho, b):
    """Residual of vec(A rho B) = (A (x) B^T) vec(rho); should be ~0."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    rho = np.asarray(rho, dtype=complex)
    lhs = vectorize(a @ rho @ b)
    rhs = tensor(a, b.T) @ vectorize(rho)
    return float(np.linalg.norm(lhs - rhs))


@dataclass
class KrausSet:
    """Trace-preserving channel as operators {E_m}, sum E_m^+ E_m = I."""

    operators: list = field(default_factory=list)

    def completeness_residual(self):
        acc = np.zeros((2, 2), dtype=complex)
        for e in self.operators:
            acc += dagger(e) @ e
        return frobenius(acc - I2)


@dataclass
class CJDecomposition:
    """Channel-plus-reference-state form of a two-qubit density matrix.

    Attributes
    ----------
    gamma : float
        Entanglement angle of the reference state, in (0, pi/2].
    basis_rotation : np.ndarray
        2x2 unitary V; the decomposition lives in the frame where qubit b is
        rotated by V (larger marginal eigenvalue first on the diagonal).
    lambdas : np.ndarray
        Eigenvalues of the rotated state, descending, length 4.
    gamma_ops : list of np.ndarray
        The 2x2 operators whose vectorizations are the eigenvectors.
    kraus : KrausSet
        Kraus operators of the extracted channel (near-zero weights dropped).
    omega : np.ndarray
        diag(cos(gamma/2), sin(gamma/2)); vec(omega) is the reference state.
    """

    gamma: float
    basis_rotation: np.ndarray
    lambdas: np.ndarray
    gamma_ops: list
    kraus: KrausSet
    omega: np.ndarray

    @property
    def reference_state(self):
        """The entangled reference vector cos(g/2)|00> + sin(g/2)|11>."""
        return vectorize(self.omega)


def rotate_b(rho, v):
    """Conjugate a two-qubit state by I (x) v."""
    u = tensor(I2, np.asarray(v, dtype=complex))
    return u @ np.asarray(rho, dtype=complex) @ dagger(u)


def decompose(rho, rank_tol=RANK_TOL):
    """Extract the channel/reference-state form of a two-qubit state.

    Parameters
    ----------
    rho : array_like
        Valid two-qubit density matrix.
    rank_tol : float
        Smallest admissible eigenvalue of the b marginal.

    Returns
    -------
    CJDecomposition

    Raises
    ------
    SingularMarginalError
        If the smaller eigenvalue of the b marginal is <= ``rank_tol``; the
        state is then a product with a pure b factor and carries no channel.
    """
    rho = check_density_matrix(rho)
    rho_b = partial_trace_a(rho)
    bvals, bvecs = herm_eig(rho_b)
    if bvals[-1] <= rank_tol:
        raise SingularMarginalError(
            f"marginal eigenvalue {bvals[-1]:.3e} <= {rank_tol:.1e}; "
            "state is a product with a pure b factor"
        )
    # rotate b so its marginal is diag(cos^2(g/2), sin^2(g/2)), larger first
    v = dagger(bvecs)
    rho_rot = rotate_b(rho, v)
    half = np.arccos(min(1.0, np.sqrt(bvals[0])))
    gamma = 2.0 * half
    omega = np.diag([np.cos(half), np.sin(half)]).astype(complex)
    omega_inv = np.diag([1.0 / np.cos(half), 1.0 / np.sin(half)]).astype(complex)

    lambdas, psis = herm_eig(rho_rot)
    lambdas = np.clip(lambdas, 0.0, None)
    gamma_ops = [devectorize(psis[:, m]) for m in range(4)]
    kraus = KrausSet(
        [
            np.sqrt(lam) * g @ omega_inv
            for lam, g in zip(lambdas, gamma_ops)
            if lam >= KRAUS_DROP_TOL
        ]
    )
    return CJDecomposition(
        gamma=float(gamma),
        basis_rotation=v,
        lambdas=lambdas,
        gamma_ops=gamma_ops,
        kraus=kraus,
        omega=omega,
    )


def reconstruct(d):
    """Rebuild the original state from a :class:`CJDecomposition`."""
    phi = d.reference_state
    acc = np.zeros((4, 4), dtype=complex)
    for e in d.kraus.operators:
        w = tensor(e, I2) @ phi
        acc += np.outer(w, w.conj())
    # undo the b-basis rotation
    return rotate_b(acc, dagger(d.basis_rotation))


def apply_channel(kraus, rho):
    """Apply the channel sum_m E_m rho E_m^+ to a single-qubit operator."""
    rho = np.asarray(rho, dtype=complex)
    acc = np.zeros((2, 2), dtype=complex)
    for e in kraus.operators:
        acc += e @ rho @ dagger(e)
    return acc


def channel_fidelity(rho, d):
    """Overlap of the state with the reference state, in the rotated frame.

    Equals 1 for a channel that preserves the reference entanglement
    perfectly and 1/4 for the completely depolarizing channel at maximal
    reference entanglement.
    """
    rho_rot = rotate_b(np.asarray(rho, dtype=complex), d.basis_rotation)
    phi = d.reference_state
    return float(np.real(phi.conj() @ rho_rot @ phi))
