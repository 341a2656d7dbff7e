"""Dense numerics for the small Hermitian matrices used throughout the package.

Everything is fixed-size: 2x2 Hermitian (complex allowed) and 4x4 real
symmetric. Eigenvalues come from the 2x2 closed form and from cyclic Jacobi
sweeps for 4x4; determinants are direct cofactor expansions. The Jacobi
routine operates on batches so parameter scans stay cheap.

Basis convention for two-qubit operators: |00>, |01>, |10>, |11>, first
index = clone a, second = clone b.
"""

import numpy as np

from .errors import ConvergenceError, InvalidStateError

# eigenvalues of a state may dip this far below zero from roundoff
STATE_EIG_FLOOR = -1e-10
TRACE_TOL = 1e-12
HERM_ATOL = 1e-12

JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 50

_JACOBI_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def eig_herm2(m):
    """Both eigenvalues of a 2x2 Hermitian matrix, descending.

    Closed form tr/2 +- hypot((m00 - m11)/2, |m01|); exact for 2x2 and
    free of cancellation in the discriminant.
    """
    m = np.asarray(m)
    if m.shape != (2, 2):
        raise InvalidStateError(f"expected a 2x2 matrix, got shape {m.shape}")
    if (abs(np.imag(m[0, 0])) > HERM_ATOL or abs(np.imag(m[1, 1])) > HERM_ATOL
            or abs(m[0, 1] - np.conj(m[1, 0])) > HERM_ATOL):
        raise InvalidStateError("matrix is not Hermitian")
    a = float(np.real(m[0, 0]))
    b = float(np.real(m[1, 1]))
    half_tr = 0.5 * (a + b)
    rad = np.hypot(0.5 * (a - b), abs(m[0, 1]))
    return np.array([half_tr + rad, half_tr - rad])


def jacobi_eigvals(mats, off_tol=JACOBI_OFF_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigenvalues of a batch of real symmetric 4x4 matrices, descending.

    Cyclic Jacobi rotations over the six upper-triangle positions until the
    off-diagonal Frobenius norm of every matrix in the batch drops below
    off_tol. Raises ConvergenceError after max_sweeps.

    Parameters
    ----------
    mats : array_like, shape (..., 4, 4)
        Real symmetric matrices. Symmetry is the caller's responsibility
        here; use eig_sym4 for the validating single-matrix entry point.

    Returns
    -------
    ndarray, shape (..., 4)
    """
    a = np.array(mats, dtype=float)
    batch_shape = a.shape[:-2]
    a = a.reshape(-1, 4, 4)

    def max_off2(x):
        off = x.copy()
        off[:, range(4), range(4)] = 0.0
        return (off ** 2).sum(axis=(1, 2)).max()

    for _ in range(max_sweeps):
        if max_off2(a) <= off_tol ** 2:
            break
        for p, q in _JACOBI_PAIRS:
            apq = a[:, p, q]
            with np.errstate(divide="ignore", invalid="ignore"):
                theta = (a[:, q, q] - a[:, p, p]) / (2.0 * apq)
                sgn = np.where(theta >= 0.0, 1.0, -1.0)
                t = np.where(apq == 0.0, 0.0,
                             sgn / (np.abs(theta) + np.hypot(theta, 1.0)))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            cp, cq = a[:, :, p].copy(), a[:, :, q].copy()
            a[:, :, p] = c[:, None] * cp - s[:, None] * cq
            a[:, :, q] = s[:, None] * cp + c[:, None] * cq
            rp, rq = a[:, p, :].copy(), a[:, q, :].copy()
            a[:, p, :] = c[:, None] * rp - s[:, None] * rq
            a[:, q, :] = s[:, None] * rp + c[:, None] * rq
    if max_off2(a) > off_tol ** 2:
        raise ConvergenceError(
            f"Jacobi sweep budget of {max_sweeps} exhausted "
            f"(max off-diagonal norm {np.sqrt(max_off2(a)):.3e})")

    eigs = a[:, range(4), range(4)]
    eigs = -np.sort(-eigs, axis=1)
    return eigs.reshape(batch_shape + (4,))


def _require_real_symmetric(m, what="matrix"):
    m = np.asarray(m)
    if m.shape != (4, 4):
        raise InvalidStateError(f"expected a 4x4 {what}, got shape {m.shape}")
    if np.iscomplexobj(m):
        if np.abs(m.imag).max() > HERM_ATOL:
            raise InvalidStateError(f"{what} has complex entries")
        m = m.real
    if np.abs(m - m.T).max() > HERM_ATOL:
        raise InvalidStateError(f"{what} is not symmetric")
    return np.asarray(m, dtype=float)


def eig_sym4(m):
    """All four eigenvalues of a 4x4 real symmetric matrix, descending."""
    m = _require_real_symmetric(m)
    return jacobi_eigvals(m[None])[0]


def plogp(p):
    """Elementwise -p*log2(p) with the 0*log(0) = 0 convention.

    Entries <= 0 contribute exactly 0; no validation is performed.
    """
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    mask = p > 0.0
    out[mask] = -p[mask] * np.log2(p[mask])
    return out


def vn_entropy(spectrum):
    """Von Neumann entropy in bits from an eigenvalue spectrum.

    Eigenvalues in [-1e-10, 0) are treated as exact zeros (roundoff from
    singular states); anything lower raises InvalidStateError, as does a
    spectrum that does not sum to 1 within 1e-10.
    """
    lam = np.asarray(spectrum, dtype=float)
    if lam.min() < STATE_EIG_FLOOR:
        raise InvalidStateError(
            f"eigenvalue {lam.min():.6e} below {STATE_EIG_FLOOR}; not a state")
    if abs(lam.sum() - 1.0) > 1e-10:
        raise InvalidStateError(f"eigenvalues sum to {lam.sum()!r}, not 1")
    # summing in sorted order makes the value exactly permutation-invariant
    return float(plogp(np.sort(np.clip(lam, 0.0, None))).sum())


def partial_trace(m, keep):
    """Reduce a two-qubit operator to one qubit.

    keep="a" sums over the b indices: out(m, n) = sum_mu in(m mu, n mu).
    keep="b" sums over the a indices: out(mu, nu) = sum_m in(m mu, m nu).
    Trace is preserved.
    """
    m = np.asarray(m)
    if m.shape != (4, 4):
        raise InvalidStateError(f"expected a 4x4 matrix, got shape {m.shape}")
    r = m.reshape(2, 2, 2, 2)
    if keep == "a":
        return np.einsum("abcb->ac", r)
    if keep == "b":
        return np.einsum("abac->bc", r)
    raise ValueError(f"keep must be 'a' or 'b', got {keep!r}")


def partial_transpose_b(m):
    """Transpose the second-qubit indices: out(m mu, n nu) = in(m nu, n mu).

    A pure index shuffle; Hermiticity and trace are preserved, positivity
    is not. Accepts batches of shape (..., 4, 4).
    """
    m = np.asarray(m)
    if m.shape[-2:] != (4, 4):
        raise InvalidStateError(f"expected (..., 4, 4), got shape {m.shape}")
    r = m.reshape(m.shape[:-2] + (2, 2, 2, 2))
    k = r.ndim - 4
    axes = tuple(range(k)) + (k, k + 3, k + 2, k + 1)
    return r.transpose(axes).reshape(m.shape)


def _det2(m):
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def _det3(m):
    return (m[..., 0, 0] * (m[..., 1, 1] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 1])
            - m[..., 0, 1] * (m[..., 1, 0] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 0])
            + m[..., 0, 2] * (m[..., 1, 0] * m[..., 2, 1] - m[..., 1, 1] * m[..., 2, 0]))


def _det4(m):
    out = 0.0
    for col in range(4):
        rest = [c for c in range(4) if c != col]
        cof = _det3(m[..., 1:, :][..., rest])
        term = m[..., 0, col] * cof
        out = out + (term if col % 2 == 0 else -term)
    return out


def principal_minor(m, k):
    """Determinant of the top-left k x k block of a real symmetric 4x4 matrix.

    Direct cofactor expansion; k must be 1, 2, 3 or 4.
    """
    if k not in (1, 2, 3, 4):
        raise ValueError(f"minor order must be 1..4, got {k}")
    m = _require_real_symmetric(m)
    block = m[:k, :k]
    if k == 1:
        return float(block[0, 0])
    if k == 2:
        return float(_det2(block))
    if k == 3:
        return float(_det3(block))
    return float(_det4(block))


def swap_qubits(m):
    """Relabel the two qubits: SWAP . m . SWAP."""
    m = np.asarray(m)
    if m.shape != (4, 4):
        raise InvalidStateError(f"expected a 4x4 matrix, got shape {m.shape}")
    perm = [0, 2, 1, 3]
    return m[np.ix_(perm, perm)]


def validate_state(m, what="state"):
    """Check Hermiticity, unit trace and positivity of a 2x2 or 4x4 state.

    Returns the (descending) spectrum so callers can reuse it. Raises
    InvalidStateError on any violation.
    """
    m = np.asarray(m)
    if m.shape == (2, 2):
        spectrum = eig_herm2(m)
    elif m.shape == (4, 4):
        spectrum = eig_sym4(m)
    else:
        raise InvalidStateError(f"expected 2x2 or 4x4, got shape {m.shape}")
    tr = float(np.real(np.trace(m)))
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"{what} has trace {tr!r}, expected 1")
    if spectrum[-1] < STATE_EIG_FLOOR:
        raise InvalidStateError(
            f"{what} has eigenvalue {spectrum[-1]:.6e} below {STATE_EIG_FLOOR}")
    return spectrum
