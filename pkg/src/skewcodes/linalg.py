"""Gaussian elimination over F_q on integer arrays of element indices."""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .gf import GaloisField


def as_matrix(rows, n: int | None = None) -> np.ndarray:
    m = np.asarray(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1) if m.size else m.reshape(0, n or 0)
    if m.ndim != 2:
        raise DomainError("expected a 2-d matrix of field indices")
    return m


def rref(F: GaloisField, rows) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with zero rows dropped, and the pivot columns."""
    m = as_matrix(rows).copy()
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = F.mul(F.inv(int(m[r, c])), m[r])
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        if others.size:
            factors = m[others, c][:, None]
            m[others] = F.sub(m[others], F.mul(factors, m[r][None, :]))
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(F: GaloisField, rows) -> int:
    return len(rref(F, rows)[1])


def null_space(F: GaloisField, rows, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{x : rows . x = 0}``."""
    m = as_matrix(rows, n)
    ncols = m.shape[1] if n is None else n
    R, pivots = rref(F, m)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for i, pc in enumerate(pivots):
            basis[b, pc] = F.neg(int(R[i, f]))
    return basis


def matmul(F: GaloisField, A, B) -> np.ndarray:
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise DomainError("shape mismatch in matrix product")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = F.add(out, F.mul(A[:, k : k + 1], B[k : k + 1, :]))
    return out


def inverse(F: GaloisField, A) -> np.ndarray:
    A = as_matrix(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DomainError("only square matrices are invertible")
    eye = np.eye(n, dtype=np.int64)
    R, pivots = rref(F, np.hstack([A, eye]))
    if pivots[:n] != list(range(n)):
        raise DomainError("matrix is singular")
    return R[:, n:]


def in_row_space(F: GaloisField, basis_rref: np.ndarray, pivots: list[int], vectors) -> np.ndarray:
    """Membership test of each vector against an RREF basis with known pivots."""
    v = as_matrix(vectors, basis_rref.shape[1] if basis_rref.ndim == 2 else None).copy()
    for i, pc in enumerate(pivots):
        coef = v[:, pc : pc + 1]
        v = F.sub(v, F.mul(coef, basis_rref[i][None, :]))
    return ~np.any(v != 0, axis=1)
