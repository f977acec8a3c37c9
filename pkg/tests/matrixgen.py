"""Deterministic random-matrix generators shared by the numeric tests."""

import numpy as np


def random_symmetric(rng, n):
    """Symmetric matrix with entries uniform on [-1, 1]."""
    M = rng.uniform(-1.0, 1.0, (n, n))
    return np.triu(M) + np.triu(M, 1).T


def random_split_nonorthogonal(rng, n, max_tries=500):
    """Similarity-conjugated block diag(C, N) whose core and null subspaces
    are decisively non-orthogonal under the transpose pairing."""
    for _ in range(max_tries):
        r = int(rng.integers(1, n))
        C = rng.uniform(-1.0, 1.0, (r, r))
        if np.linalg.svd(C, compute_uv=False)[-1] < 0.2:
            continue
        # nilpotent entries keep magnitude >= 0.3 so singular values of powers
        # stay far from the rank-decision band
        mag = rng.uniform(0.3, 1.0, (n - r, n - r))
        sign = rng.choice([-1.0, 1.0], (n - r, n - r))
        N = np.triu(mag * sign, 1)
        P = rng.uniform(-1.0, 1.0, (n, n))
        s = np.linalg.svd(P, compute_uv=False)
        if s[-1] < 0.15 or s[0] / s[-1] > 50:
            continue
        Q1 = np.linalg.qr(P[:, :r])[0]
        Q2 = np.linalg.qr(P[:, r:])[0]
        if np.linalg.norm(Q1.T @ Q2, 2) < 0.05:
            continue
        block = np.zeros((n, n))
        block[:r, :r] = C
        block[r:, r:] = N
        return P @ block @ np.linalg.inv(P)
    raise RuntimeError("failed to generate a decisive test matrix")
