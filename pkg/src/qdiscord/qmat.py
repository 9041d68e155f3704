"""Dense complex linear algebra for one- and two-qubit operators.

Everything here works on plain numpy arrays: 2x2 and 4x4 complex matrices,
row-major, with the two-qubit basis ordered |00>, |01>, |10>, |11> (first
factor = subsystem a, second = subsystem b).  All entropies are in bits.
"""

from __future__ import annotations

import numpy as np

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

#: Hermiticity / trace tolerance for density-matrix validation.
HERM_TOL = 1e-12
#: Eigenvalues above this (negative) floor count as nonnegative.
PSD_TOL = -1e-10


def frobenius(m):
    """Frobenius norm of a matrix."""
    return float(np.linalg.norm(np.asarray(m)))


def dagger(m):
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def tensor(a, b):
    """Kronecker product, (a x b)[2i+k, 2j+l] = a[i,j] * b[k,l]."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def check_density_matrix(rho):
    """Validate a two-qubit density matrix and return it as complex ndarray.

    Parameters
    ----------
    rho : array_like
        4x4 matrix expected to be Hermitian, unit trace and positive
        semidefinite (within small numerical slack).

    Returns
    -------
    np.ndarray
        The validated matrix, dtype complex.

    Raises
    ------
    ValueError
        If the shape is wrong or any invariant fails.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if not np.all(np.isfinite(rho.view(float))):
        raise ValueError("matrix contains NaN or Inf entries")
    herm = frobenius(rho - dagger(rho))
    if herm >= HERM_TOL:
        raise ValueError(f"matrix is not Hermitian (residual {herm:.3e})")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) >= HERM_TOL:
        raise ValueError(f"matrix trace is {tr.real:.12f}, expected 1")
    lo = float(np.linalg.eigvalsh((rho + dagger(rho)) / 2).min())
    if lo < PSD_TOL:
        raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {lo:.3e})")
    return rho


def partial_trace_a(rho):
    """Trace out the first qubit: for rho = A (x) B returns Tr(A) * B."""
    rho = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    # indices [a, b, a', b']; sum over a = a'
    return np.einsum("ijik->jk", rho)


def partial_trace_b(rho):
    """Trace out the second qubit: for rho = A (x) B returns Tr(B) * A."""
    rho = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return np.einsum("ijkj->ik", rho)


def herm_eig(m, tol=1e-10):
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Parameters
    ----------
    m : array_like
        Square Hermitian matrix.
    tol : float
        Largest allowed Hermiticity residual (Frobenius).

    Returns
    -------
    (values, vectors)
        ``values`` sorted descending; ``vectors[:, k]`` is the eigenvector
        for ``values[k]``, orthonormal columns.
    """
    m = np.asarray(m, dtype=complex)
    res = frobenius(m - dagger(m))
    if res >= tol:
        raise ValueError(f"matrix is not Hermitian (residual {res:.3e})")
    vals, vecs = np.linalg.eigh((m + dagger(m)) / 2)
    # stable: degenerate eigenvalues keep the solver's emitted order
    order = np.argsort(-vals, kind="stable")
    return vals[order], vecs[:, order]


def von_neumann_entropy(rho):
    """Von Neumann entropy -Tr(rho log2 rho) in bits.

    Eigenvalues in [-1e-10, 0] are clamped to zero; anything more negative
    is rejected.  ``rho`` must be Hermitian positive semidefinite with unit
    trace (the trace is the caller's responsibility).
    """
    rho = np.asarray(rho, dtype=complex)
    vals = np.linalg.eigvalsh((rho + dagger(rho)) / 2)
    if vals.min() < PSD_TOL:
        raise ValueError(f"negative eigenvalue {vals.min():.3e} below tolerance")
    vals = np.clip(vals, 0.0, None)
    nz = vals[vals > 0.0]
    return float(-np.sum(nz * np.log2(nz)))


def binary_entropy(p):
    """Binary entropy H2(p) = -p log2 p - (1-p) log2(1-p), in bits.

    ``p`` may stray outside [0, 1] by at most 1e-12 (clamped); farther out
    is rejected.
    """
    p = float(p)
    if p < -1e-12 or p > 1.0 + 1e-12:
        raise ValueError(f"probability {p!r} outside [0, 1]")
    return float(binary_entropy_arr(np.clip(p, 0.0, 1.0)))


def binary_entropy_arr(p):
    """Vectorized binary entropy; input silently clipped to [0, 1]."""
    p = np.clip(np.asarray(p, dtype=float), 0.0, 1.0)
    q = 1.0 - p
    out = np.zeros_like(p)
    mask = (p > 0.0) & (p < 1.0)
    pm, qm = p[mask], q[mask]
    out[mask] = -pm * np.log2(pm) - qm * np.log2(qm)
    return out if out.ndim else float(out)
