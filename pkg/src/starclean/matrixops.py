"""Numeric decision of the power-factorization property for complex matrices.

The check runs through the group/Drazin inverse: compute the index k of A,
split space into the column space and null space of A^k, invert the core
block, and test whether A times its Drazin inverse is fixed by the chosen
involution (plain transpose by default, conjugate transpose optionally).
Rank decisions use singular values with a relative threshold and an explicit
ambiguity band; decisions inside the band raise ``IllConditioned`` instead of
guessing.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import IllConditioned, MalformedSpec

INVOLUTION_MODES = ("transpose", "conjugate-transpose")
DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class DenseMatrix:
    data: np.ndarray
    involution: str = "transpose"

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise MalformedSpec(f"matrix must be square, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise MalformedSpec("matrix entries must be finite")
        if self.involution not in INVOLUTION_MODES:
            raise MalformedSpec(f"involution must be one of {INVOLUTION_MODES}")
        object.__setattr__(self, "data", arr)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def star(self, M: np.ndarray | None = None) -> np.ndarray:
        M = self.data if M is None else M
        return M.T if self.involution == "transpose" else M.conj().T


def _rank_from_singular_values(s: np.ndarray, n: int, tol: float) -> int:
    if s.size == 0 or s[0] == 0:
        return 0
    thresh = tol * float(s[0]) * n
    band = (s > thresh / 10) & (s < thresh * 10)
    if band.any():
        sigma = float(s[np.flatnonzero(band)[0]])
        raise IllConditioned(
            f"singular value {sigma:.3e} is within 10x of the rank threshold {thresh:.3e}"
        )
    return int((s > thresh).sum())


def numerical_rank(A: np.ndarray, tol: float = DEFAULT_TOL) -> int:
    A = np.asarray(A, dtype=complex)
    s = np.linalg.svd(A, compute_uv=False)
    return _rank_from_singular_values(s, A.shape[0], tol)


def matrix_index(A: DenseMatrix | np.ndarray, tol: float = DEFAULT_TOL) -> int:
    """Smallest k >= 0 with rank(A^k) = rank(A^(k+1))."""
    M = A.data if isinstance(A, DenseMatrix) else np.asarray(A, dtype=complex)
    n = M.shape[0]
    prev = n  # rank of A^0
    power = np.eye(n, dtype=complex)
    for k in range(1, n + 2):
        power = power @ M
        norm = np.linalg.norm(power)
        if norm > 0:
            power = power / norm  # rank is scale-invariant; keep powers finite
        rank = numerical_rank(power, tol)
        if rank == prev:
            return k - 1
        prev = rank
    return n  # unreachable in exact arithmetic: ranks strictly decrease


@dataclass(frozen=True)
class DrazinResult:
    drazin: np.ndarray
    index: int
    rank: int
    residuals: dict
    core_basis: np.ndarray  # orthonormal columns spanning col(A^k)
    null_basis: np.ndarray  # orthonormal columns spanning null(A^k)


def drazin_inverse(A: DenseMatrix | np.ndarray, tol: float = DEFAULT_TOL) -> DrazinResult:
    """The unique B with AB = BA, BAB = B, and A - A^2 B nilpotent."""
    M = A.data if isinstance(A, DenseMatrix) else np.asarray(A, dtype=complex)
    n = M.shape[0]
    k = matrix_index(M, tol)
    power = np.eye(n, dtype=complex)
    for _ in range(k):
        power = power @ M
        norm = np.linalg.norm(power)
        if norm > 0:
            power = power / norm
    U, s, Vh = np.linalg.svd(power)
    r = _rank_from_singular_values(s, n, tol)
    core = U[:, :r]
    null = Vh[r:, :].conj().T
    P = np.hstack([core, null])
    if r in (0, n):
        Pinv = P.conj().T  # unitary
    else:
        if np.linalg.cond(P) > 1e12:
            raise IllConditioned("core/null bases are nearly dependent")
        Pinv = np.linalg.inv(P)
    blocks = Pinv @ M @ P
    middle = np.zeros((n, n), dtype=complex)
    if r > 0:
        middle[:r, :r] = np.linalg.inv(blocks[:r, :r])
    B = P @ middle @ Pinv

    scale_a = max(1.0, float(np.linalg.norm(M)))
    scale_b = max(1.0, float(np.linalg.norm(B)))
    nil_part = M - M @ M @ B
    nil_power = np.linalg.matrix_power(nil_part, n)
    residuals = {
        "commute": float(np.linalg.norm(M @ B - B @ M)) / (scale_a * scale_b),
        "inner": float(np.linalg.norm(B @ M @ B - B)) / scale_b,
        "nilpotent": float(np.linalg.norm(nil_power)) / scale_a**n,
    }
    return DrazinResult(B, k, r, residuals, core, null)


def is_spsr_matrix(
    A: DenseMatrix, tol: float = DEFAULT_TOL
) -> tuple[bool, dict]:
    """Decide the property via (AB)* = AB; diagnostics carry the cross-basis test.

    The cross-gram check pairs the core basis vectors against the null basis
    vectors under the chosen involution; it must agree with the main verdict
    whenever no rank decision was ill-conditioned.
    """
    res = drazin_inverse(A, tol)
    M = A.data
    AB = M @ res.drazin
    sym_residual = float(np.linalg.norm(AB - A.star(AB))) / max(1.0, float(np.linalg.norm(AB)))
    verdict = sym_residual <= tol
    if res.core_basis.shape[1] and res.null_basis.shape[1]:
        gram = A.star(res.core_basis) @ res.null_basis
        gram_max = float(np.abs(gram).max())
    else:
        gram_max = 0.0
    diagnostics = {
        "index": res.index,
        "rank": res.rank,
        "residuals": res.residuals,
        "symmetry_residual": sym_residual,
        "cross_gram_max": gram_max,
        "gram_verdict": gram_max <= tol,
    }
    return verdict, diagnostics


# -- matrix input ---------------------------------------------------------------


_LONE_IMAG = re.compile(r"(?<![\d.])j")


def parse_complex(text: str) -> complex:
    s = text.strip().replace(" ", "")
    if not s:
        raise MalformedSpec("empty matrix entry")
    s = s.replace("I", "i").replace("i", "j")
    s = _LONE_IMAG.sub("1j", s)
    try:
        return complex(s)
    except ValueError as exc:
        raise MalformedSpec(f"cannot parse complex entry {text!r}") from exc


def load_matrix_csv(text: str, involution: str = "transpose") -> DenseMatrix:
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append([parse_complex(cell) for cell in line.split(",")])
    if not rows:
        raise MalformedSpec("matrix file is empty")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise MalformedSpec("rows have inconsistent lengths")
    return DenseMatrix(np.array(rows, dtype=complex), involution)


def load_matrix_json(text: str, involution: str = "transpose") -> DenseMatrix:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSpec(f"invalid JSON matrix: {exc}") from exc
    if not isinstance(payload, list) or not payload:
        raise MalformedSpec("JSON matrix must be a non-empty array of arrays")
    rows = []
    for row in payload:
        if not isinstance(row, list):
            raise MalformedSpec("JSON matrix must be an array of arrays")
        parsed = []
        for cell in row:
            if isinstance(cell, str):
                parsed.append(parse_complex(cell))
            elif isinstance(cell, (int, float)):
                parsed.append(complex(cell))
            else:
                raise MalformedSpec(f"unsupported matrix entry {cell!r}")
        rows.append(parsed)
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise MalformedSpec("rows have inconsistent lengths")
    return DenseMatrix(np.array(rows, dtype=complex), involution)


def load_matrix(path: str | Path, involution: str = "transpose") -> DenseMatrix:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json" or text.lstrip().startswith("["):
        return load_matrix_json(text, involution)
    return load_matrix_csv(text, involution)
