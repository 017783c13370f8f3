"""Dense linear-algebra kernels.

Products, Kronecker structure, row-major vectorization, SVD with a fixed
sign convention, and the (optionally truncated) Moore-Penrose pseudo-inverse.
All functions are pure and operate on 2-D float64 arrays.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DimensionError, NumericalError, SizeError

EPS = float(np.finfo(np.float64).eps)

_MAX_INDEX = int(np.iinfo(np.intp).max)


class SvdFactors(NamedTuple):
    """Thin SVD triple: ``u @ diag(sigma) @ v.T`` reproduces the source."""

    u: np.ndarray       # (m, k)
    sigma: np.ndarray   # (k,), non-increasing, k = min(m, n)
    v: np.ndarray       # (n, k)


def as_matrix(a) -> np.ndarray:
    """Coerce to a 2-D float64 array, rejecting other ranks."""
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    return arr


def matmul(a, b) -> np.ndarray:
    """Standard matrix product with an explicit conformance check."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def transpose(a) -> np.ndarray:
    return as_matrix(a).T


def kron(a, b) -> np.ndarray:
    """Kronecker product: block (i, j) equals ``a[i, j] * b``."""
    a = as_matrix(a)
    b = as_matrix(b)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if rows > _MAX_INDEX or cols > _MAX_INDEX or rows * cols > _MAX_INDEX:
        raise SizeError(
            f"kron result {a.shape} x {b.shape} overflows the index type"
        )
    return np.kron(a, b)


def vec_row(x) -> np.ndarray:
    """Stack the rows of ``x`` into a single column vector."""
    return as_matrix(x).reshape(-1, 1)


def unvec_row(v, rows: int, cols: int) -> np.ndarray:
    """Inverse of :func:`vec_row`: row-major reshape to (rows, cols)."""
    v = as_matrix(v)
    if v.shape != (rows * cols, 1):
        raise DimensionError(
            f"cannot reshape {v.shape} into ({rows}, {cols})"
        )
    return v.reshape(rows, cols)


def svd(m) -> SvdFactors:
    """Thin SVD with descending singular values and a canonical sign.

    The first nonzero entry of each column of ``u`` is made non-negative
    (the paired ``v`` column is flipped along with it), so bit-identical
    inputs always produce bit-identical factors.
    """
    m = as_matrix(m)
    if not np.all(np.isfinite(m)):
        raise NumericalError("svd requires finite entries")
    try:
        u, s, vt = np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"svd did not converge: {exc}") from exc
    v = vt.T.copy()
    first_nonzero = (u != 0.0).argmax(axis=0)
    flip = u[first_nonzero, np.arange(u.shape[1])] < 0.0
    u[:, flip] *= -1.0
    v[:, flip] *= -1.0
    return SvdFactors(u, s, v)


def _rank_from_sigma(sigma: np.ndarray, shape) -> int:
    # Standard pseudo-inverse cutoff: sigma > eps * sigma_max * max(m, n).
    if sigma.size == 0:
        return 0
    tol = EPS * float(sigma[0]) * max(shape)
    return int(np.count_nonzero(sigma > tol))


def numerical_rank(m) -> int:
    """Count singular values above the pseudo-inverse cutoff."""
    m = as_matrix(m)
    sigma = np.linalg.svd(m, compute_uv=False)
    return _rank_from_sigma(sigma, m.shape)


def pinv(m, rate: float = 1.0) -> np.ndarray:
    """Moore-Penrose pseudo-inverse, optionally truncated.

    ``rate`` is the fraction of numerically nonzero singular values that
    are retained, keeping the largest: k = max(1, round(rate * k_eff)).
    With ``rate=1`` this is the exact pseudo-inverse.  An all-zero matrix
    maps to the all-zero transpose-shaped matrix.
    """
    if not 0.0 < rate <= 1.0:
        raise ValueError(f"truncation rate must be in (0, 1], got {rate}")
    m = as_matrix(m)
    u, sigma, v = svd(m)
    k_eff = _rank_from_sigma(sigma, m.shape)
    if k_eff == 0:
        return np.zeros((m.shape[1], m.shape[0]))
    k = max(1, int(np.floor(rate * k_eff + 0.5)))
    return (v[:, :k] / sigma[:k]) @ u[:, :k].T
