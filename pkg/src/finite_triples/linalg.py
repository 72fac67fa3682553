"""Small dense linear-algebra helpers used across modules.

Every rank decision in the package goes through :func:`numerical_rank` or
:func:`null_space`, so the relative cutoff lives in one place.
"""
from __future__ import annotations

import numpy as np
import scipy.linalg

DEFAULT_TOL = 1e-9
RANK_RTOL = 1e-9


def max_norm(x) -> float:
    x = np.asarray(x)
    if x.size == 0:
        return 0.0
    return float(np.max(np.abs(x)))


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def realify(m: np.ndarray) -> np.ndarray:
    """Stack real and imaginary parts of the rows: (r, c) complex -> (2r, c) real."""
    m = np.asarray(m)
    return np.vstack([m.real, m.imag])


def numerical_rank(m: np.ndarray, rtol: float = RANK_RTOL) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def null_space(m: np.ndarray, rtol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal basis (columns) of the kernel, cutoff ``rtol * sigma_max``."""
    m = np.asarray(m)
    if m.shape[0] == 0 or not np.any(m):
        return np.eye(m.shape[1], dtype=m.dtype if m.size else float)
    return scipy.linalg.null_space(m, rcond=rtol)


def column_span(m: np.ndarray, rtol: float = RANK_RTOL, scale: float = 0.0) -> np.ndarray:
    """Orthonormal basis (columns) of the column space.

    The cutoff is ``rtol * max(sigma_max, scale)``; pass ``scale`` when the
    columns are derived from larger operators and may be pure round-off.
    """
    m = np.asarray(m)
    if m.size == 0 or not np.any(m):
        return np.zeros((m.shape[0], 0), dtype=m.dtype)
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    r = int(np.sum(s > rtol * max(s[0], scale)))
    return u[:, :r]


def real_linear_system(k_lin: np.ndarray, k_conj: np.ndarray | None = None) -> np.ndarray:
    """Real matrix of the map d -> K_lin d + K_conj conj(d) acting on [Re d; Im d]."""
    if k_conj is None:
        k_conj = np.zeros_like(k_lin)
    a = k_lin + k_conj
    b = 1j * (k_lin - k_conj)
    return np.block([[a.real, b.real], [a.imag, b.imag]])


def stacked_rank(blocks, rtol: float = RANK_RTOL) -> int:
    """Rank of vstack(blocks) without materialising the stack.

    The triangular factor of a running QR has the singular values of
    everything stacked so far.
    """
    r = None
    pending: list[np.ndarray] = []
    rows = 0

    def fold(r, pending):
        m = np.vstack(pending if r is None else [r, *pending])
        r = scipy.linalg.qr(m, mode="r", check_finite=False)[0]
        return r[: min(r.shape), :]

    for b in blocks:
        b = np.asarray(b)
        pending.append(b)
        rows += b.shape[0]
        # batch until the buffer is a few times wider than tall to keep QR calls few
        if rows >= 4 * b.shape[1]:
            r, pending, rows = fold(r, pending), [], 0
    if pending:
        r = fold(r, pending)
    return 0 if r is None else numerical_rank(r, rtol)
