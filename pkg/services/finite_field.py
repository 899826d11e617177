"""Exact linear algebra over GF(p) on int64 numpy arrays (p < 2**31)."""
import numpy as np


def mod_p(A, p):
    return np.asarray(A, dtype=np.int64) % p


def rref_mod(A, p):
    """Reduced row echelon form over GF(p). Returns (R, pivot_cols)."""
    R = mod_p(A, p).copy()
    m, n = R.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nonzero = np.flatnonzero(R[r:, c])
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        R[r] = (R[r] * inv) % p
        factors = R[:, c].copy()
        factors[r] = 0
        rows = np.flatnonzero(factors)
        if rows.size:
            R[rows] = (R[rows] - np.outer(factors[rows], R[r]) % p) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank_mod(A, p):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_mod(A, p)[1])


def nullspace_mod(A, p, n_cols=None):
    """Right nullspace of A over GF(p); rows of the result form a basis."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1] if A.ndim == 2 else n_cols
    if A.size == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref_mod(A, p)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = (-R[row, f]) % p
    return basis
