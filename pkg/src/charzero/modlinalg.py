"""Linear algebra over F_l on numpy int64 arrays.

Everything here is exact: entries live in [0, l), products of two entries fit
int64 with room for the accumulation lengths used, and each routine reduces
mod l before anything can overflow (asserted, not assumed). A float64 BLAS
path is used for matrix products only when the worst-case accumulated value
provably fits the 2^53 exact-integer window.
"""
from __future__ import annotations

import numpy as np

FLOAT_EXACT = 2**53
INT64_SAFE = 2**62


def matmul_mod(A: np.ndarray, B: np.ndarray, l: int) -> np.ndarray:
    """(A @ B) mod l, exactly."""
    inner = A.shape[-1]
    bound = (l - 1) * (l - 1) * max(inner, 1)
    if bound < FLOAT_EXACT:
        C = A.astype(np.float64) @ B.astype(np.float64)
        return np.asarray(C, dtype=np.int64) % l
    assert bound < INT64_SAFE, "modulus too large for exact int64 matmul"
    return (A.astype(np.int64) @ B.astype(np.int64)) % l


def rref_mod(A: np.ndarray, l: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod l and the pivot column list."""
    R = np.array(A, dtype=np.int64) % l
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, l) % l
        col = R[:, c].copy()
        col[r] = 0
        if np.any(col):
            R -= np.outer(col, R[r])
            R %= l
        pivots.append(c)
        r += 1
    return R, pivots


def nullspace_mod(A: np.ndarray, l: int) -> np.ndarray:
    """Columns form a basis of the right nullspace of A mod l."""
    R, pivots = rref_mod(A, l)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-R[r, fc]) % l
    return basis


def hessenberg_mod(A: np.ndarray, l: int) -> np.ndarray:
    """Upper Hessenberg form similar to A over F_l (row+column ops)."""
    H = np.array(A, dtype=np.int64) % l
    n = H.shape[0]
    for j in range(n - 2):
        sub = H[j + 1:, j]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        p = j + 1 + int(nz[0])
        if p != j + 1:
            H[[j + 1, p]] = H[[p, j + 1]]
            H[:, [j + 1, p]] = H[:, [p, j + 1]]
        inv = pow(int(H[j + 1, j]), -1, l)
        f = H[j + 2:, j] * inv % l
        if np.any(f):
            H[j + 2:, :] = (H[j + 2:, :] - np.outer(f, H[j + 1, :])) % l
            H[:, j + 1] = (H[:, j + 1] + H[:, j + 2:] @ f) % l
    return H


def hessenberg_eigenvalues_mod(H: np.ndarray, l: int) -> list[int]:
    """All eigenvalues of an upper Hessenberg matrix over F_l.

    Evaluates det(H - x I) at every x in F_l at once with the last-column
    cofactor recurrence on leading principal minors d_k:

        d_0 = 1
        d_k = (H[k-1,k-1] - x) d_{k-1}
              + sum_{j>=1} (-1)^j H[k-1-j,k-1]
                           (prod_{t=k-j..k-1} H[t,t-1]) d_{k-1-j}

    The alternating sign is folded into the running subdiagonal product by
    negating each factor. Cost is O(n^2 l) vectorized adds/mults, far cheaper
    than a nullspace per candidate x.
    """
    n = H.shape[0]
    xs = np.arange(l, dtype=np.int64)
    D = np.zeros((n + 1, l), dtype=np.int64)
    D[0] = 1
    subdiag = [int(H[t, t - 1]) % l for t in range(1, n)]
    for k in range(1, n + 1):
        acc = (int(H[k - 1, k - 1]) - xs) % l * D[k - 1] % l
        run = 1
        for j in range(1, k):
            run = run * (l - subdiag[k - 1 - j]) % l
            if run == 0:
                break
            c = int(H[k - 1 - j, k - 1]) * run % l
            if c:
                acc = (acc + c * D[k - 1 - j]) % l
        D[k] = acc
    return [int(x) for x in np.nonzero(D[n] == 0)[0]]


def inv_mod(A: np.ndarray, l: int) -> np.ndarray:
    """Inverse of a square matrix mod l (raises on singular input)."""
    n = A.shape[0]
    aug = np.concatenate([np.asarray(A, dtype=np.int64) % l, np.eye(n, dtype=np.int64)], axis=1)
    R, pivots = rref_mod(aug, l)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix mod l")
    return R[:, n:]


def identity_mod(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)
