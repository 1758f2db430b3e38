"""Modular linear algebra against defining properties (and numpy for the
plain products)."""
from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charzero.modlinalg import (
    hessenberg_eigenvalues_mod,
    hessenberg_mod,
    identity_mod,
    inv_mod,
    matmul_mod,
    nullspace_mod,
    rref_mod,
)

RNG = np.random.default_rng(20260815)
PRIMES = (97, 101, 10007)


def _rand(n, m, l):
    return RNG.integers(0, l, size=(n, m), dtype=np.int64)


def test_matmul_mod_matches_numpy():
    for l in PRIMES:
        A = _rand(5, 7, l)
        B = _rand(7, 3, l)
        want = (A.astype(object) @ B.astype(object)) % l
        assert (matmul_mod(A, B, l) == want.astype(np.int64)).all()


def test_rref_properties():
    for l in PRIMES:
        for shape in ((4, 4), (3, 6), (6, 3)):
            A = _rand(*shape, l)
            R, pivots = rref_mod(A.copy(), l)
            # pivot columns carry unit vectors
            for r, c in enumerate(pivots):
                col = R[:, c]
                assert col[r] == 1
                assert (np.delete(col, r) == 0).all()
            # rows of R lie in the row space of A and vice versa: check via
            # rank of stacked matrices
            def rank(M):
                return len(rref_mod(M.copy(), l)[1])

            assert rank(np.vstack([A, R])) == rank(A) == len(pivots)


def test_nullspace():
    for l in PRIMES:
        A = _rand(4, 6, l)
        N = nullspace_mod(A, l)  # basis as columns
        rank = len(rref_mod(A, l)[1])
        assert N.shape == (6, 6 - rank)
        if N.size:
            prod = matmul_mod(A, N % l, l)
            assert (prod == 0).all()
            # columns independent
            assert len(rref_mod(N.T, l)[1]) == 6 - rank


def test_inv_mod():
    for l in PRIMES:
        while True:
            A = _rand(5, 5, l)
            if len(rref_mod(A.copy(), l)[1]) == 5:
                break
        Ainv = inv_mod(A, l)
        assert (matmul_mod(A, Ainv, l) == identity_mod(5)).all()


def test_hessenberg_similarity_preserves_eigenvalues():
    l = 10007
    # build a matrix with known eigenvalues via conjugation of a diagonal
    eigs = [3, 3, 7, 11, 500]
    D = np.diag(np.array(eigs, dtype=np.int64)) % l
    while True:
        P = _rand(5, 5, l)
        if len(rref_mod(P.copy(), l)[1]) == 5:
            break
    A = matmul_mod(matmul_mod(P, D, l), inv_mod(P, l), l)
    H = hessenberg_mod(A, l)
    # Hessenberg form: zero below the first subdiagonal
    for i in range(5):
        for j in range(5):
            if i > j + 1:
                assert H[i, j] == 0
    got = sorted(hessenberg_eigenvalues_mod(H, l))  # distinct roots
    assert got == sorted(set(eigs))


def test_eigenvalues_are_singular_shifts():
    l = 101
    A = _rand(6, 6, l)
    H = hessenberg_mod(A.copy(), l)
    for lam in set(hessenberg_eigenvalues_mod(H, l)):
        shifted = (A - lam * identity_mod(6)) % l
        assert len(rref_mod(shifted.copy(), l)[1]) < 6, lam


@given(st.integers(min_value=2, max_value=6), st.sampled_from([97, 101]))
@settings(max_examples=30, deadline=None)
def test_inverse_roundtrip_random(n, l):
    M = RNG.integers(0, l, size=(n, n), dtype=np.int64)
    if len(rref_mod(M.copy(), l)[1]) < n:
        return
    assert (matmul_mod(inv_mod(M, l), M, l) == identity_mod(n)).all()
