"""Exact row reduction over a prime field GF(p) on int64 numpy arrays."""

from __future__ import annotations

import numpy as np


def rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of A mod p and its pivot columns."""
    R = np.array(A, dtype=np.int64) % p
    m, n = R.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        col = R[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            R[rows] = (R[rows] - np.outer(col[rows], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: np.ndarray, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of {x : A x = 0 mod p}; shape (ncols, nullity)."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(A, p)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for idx, f in enumerate(free):
        basis[f, idx] = 1
        for row, pc in enumerate(pivots):
            basis[pc, idx] = (-R[row, f]) % p
    return basis


def solve(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """X with A X = B mod p; A must have full column rank and B in its column space."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    m, n = A.shape
    R, pivots = rref(np.hstack([A, B]), p)
    if pivots[:n] != list(range(n)) or any(c >= n for c in pivots):
        raise ValueError("system has no unique solution")
    return R[:n, n:] % p
