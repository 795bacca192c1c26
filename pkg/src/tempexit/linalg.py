"""Dense direct solves plus structure-exploiting fast paths.

The assembled 1D operator splits into a symmetric Toeplitz jump part, a
diagonal correction and a local tridiagonal stencil; the Toeplitz part
admits an O(n log n) matvec by circulant embedding.  The dense LU solve is
the correctness baseline, the restarted GMRES the scalable path for the
large 2D systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.linalg

__all__ = [
    "SingularMatrixError",
    "IterationLimitError",
    "ToeplitzSym",
    "DenseSystem",
    "solve_dense",
    "toeplitz_matvec",
    "solve_iterative",
]


class SingularMatrixError(np.linalg.LinAlgError):
    pass


class IterationLimitError(RuntimeError):
    pass


class ToeplitzSym:
    """Symmetric Toeplitz matrix stored by its first column.

    The circulant-embedding FFT is cached so repeated matvecs (Krylov
    iterations) pay the transform of the column only once.
    """

    def __init__(self, first_column):
        col = np.ascontiguousarray(first_column, dtype=float)
        if col.ndim != 1 or col.size == 0:
            raise ValueError("first_column must be a non-empty 1D array")
        self.first_column = col
        self.n = col.size
        self._circ_fft = None

    def _embedding(self):
        if self._circ_fft is None:
            c = self.first_column
            circ = np.concatenate([c, [0.0], c[-1:0:-1]])
            self._circ_fft = np.fft.rfft(circ)
        return self._circ_fft

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """Multiply by one vector (n,) or a batch of columns (n, m)."""
        v = np.asarray(v, dtype=float)
        squeeze = v.ndim == 1
        if squeeze:
            v = v[:, None]
        if v.shape[0] != self.n:
            raise ValueError(f"length mismatch: matrix {self.n}, vector {v.shape[0]}")
        m = 2 * self.n
        vf = np.fft.rfft(v, n=m, axis=0)
        out = np.fft.irfft(self._embedding()[:, None] * vf, n=m, axis=0)[: self.n]
        return out[:, 0] if squeeze else out

    def dense(self) -> np.ndarray:
        idx = np.arange(self.n)
        return self.first_column[np.abs(idx[:, None] - idx[None, :])]


@dataclass
class DenseSystem:
    """Assembled dense linear system A u = b."""

    matrix: np.ndarray
    rhs: np.ndarray


def solve_dense(system: DenseSystem) -> np.ndarray:
    """Solve a dense system by LU with partial pivoting.

    Raises SingularMatrixError when a pivot falls below 1e-14 relative to
    the largest matrix entry.
    """
    A = np.asarray(system.matrix, dtype=float)
    b = np.asarray(system.rhs, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"matrix must be square, got shape {A.shape}")
    if b.shape[0] != A.shape[0]:
        raise ValueError("right-hand side length does not match the matrix")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    lu, piv = scipy.linalg.lu_factor(A, check_finite=False)
    scale = np.abs(A).max()
    pivots = np.abs(np.diag(lu))
    if scale == 0.0 or pivots.min() <= 1e-14 * scale:
        raise SingularMatrixError("matrix is singular to working precision")
    return scipy.linalg.lu_solve((lu, piv), b, check_finite=False)


def toeplitz_matvec(t: ToeplitzSym, diag: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Compute (T + D) v with Toeplitz T and diagonal D in O(n log n)."""
    diag = np.asarray(diag, dtype=float)
    v = np.asarray(v, dtype=float)
    if diag.shape[0] != t.n or v.shape[0] != t.n:
        raise ValueError("length mismatch between Toeplitz part, diagonal and vector")
    if v.ndim == 1:
        return t.matvec(v) + diag * v
    return t.matvec(v) + diag[:, None] * v


def solve_iterative(
    apply: Callable[[np.ndarray], np.ndarray],
    b: np.ndarray,
    tol: float,
    *,
    restart: int = 100,
    maxiter: int = 20000,
    diag_precond: np.ndarray | None = None,
) -> np.ndarray:
    """Restarted GMRES for a nonsymmetric operator given by ``apply``.

    Terminates when the true residual satisfies ||A u - b||_2 <= tol ||b||_2,
    otherwise raises IterationLimitError.  ``diag_precond`` supplies the
    operator diagonal for right Jacobi preconditioning, which leaves the
    residual measure unchanged.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    b = np.asarray(b, dtype=float)
    n = b.size
    bnorm = np.linalg.norm(b)
    if bnorm == 0.0:
        return np.zeros(n)
    if diag_precond is not None:
        m_inv = 1.0 / np.asarray(diag_precond, dtype=float)
        if not np.all(np.isfinite(m_inv)):
            raise ValueError("preconditioner diagonal must be nonzero and finite")
    else:
        m_inv = None

    def op(v):
        return apply(m_inv * v) if m_inv is not None else apply(v)

    target = tol * bnorm
    x = np.zeros(n)
    used = 0
    while used < maxiter:
        r = b - apply(x)
        beta = np.linalg.norm(r)
        if beta <= target:
            return x
        m = min(restart, maxiter - used)
        V = np.empty((m + 1, n))
        H = np.zeros((m + 1, m))
        cs = np.zeros(m)
        sn = np.zeros(m)
        g = np.zeros(m + 1)
        V[0] = r / beta
        g[0] = beta
        k = 0
        for j in range(m):
            w = op(V[j])
            # modified Gram-Schmidt
            for i in range(j + 1):
                H[i, j] = w @ V[i]
                w -= H[i, j] * V[i]
            H[j + 1, j] = np.linalg.norm(w)
            breakdown = H[j + 1, j] <= 1e-300
            if not breakdown:
                V[j + 1] = w / H[j + 1, j]
            # apply stored Givens rotations, then zero the new subdiagonal
            for i in range(j):
                hi = cs[i] * H[i, j] + sn[i] * H[i + 1, j]
                H[i + 1, j] = -sn[i] * H[i, j] + cs[i] * H[i + 1, j]
                H[i, j] = hi
            denom = np.hypot(H[j, j], H[j + 1, j])
            cs[j] = H[j, j] / denom if denom else 1.0
            sn[j] = H[j + 1, j] / denom if denom else 0.0
            H[j, j] = denom
            H[j + 1, j] = 0.0
            g[j + 1] = -sn[j] * g[j]
            g[j] = cs[j] * g[j]
            used += 1
            k = j + 1
            if abs(g[k]) <= target or breakdown or used >= maxiter:
                break
        y = scipy.linalg.solve_triangular(H[:k, :k], g[:k], check_finite=False)
        dx = V[:k].T @ y
        x = x + (m_inv * dx if m_inv is not None else dx)
        if np.linalg.norm(b - apply(x)) <= target:
            return x
    raise IterationLimitError(
        f"GMRES did not reach tol={tol} within {maxiter} iterations"
    )
