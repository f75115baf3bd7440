# src/core_logic/dsolve.py

"""
Penyelesaian sistem linear dual Âx̂ = b̂ melalui DDGI.

Berisi uji konsistensi, solusi tunggal di R(Â^k), keluarga solusi umum,
serta oracle keanggotaan range dan null space dari Â^k.
"""

import logging

import numpy as np
import scipy.linalg as sla

from src.core_logic.dualgi import InverseResult, ddgi
from src.core_logic.dualmat import DualMatrix, DualVector, apply, dual_distance, power
from src.core_logic.errors import Inconsistent, NoDDGI, ShapeMismatch
from src.core_logic.realgi import DEFAULT_TOLERANCES, Tolerances, fro, index, mp_inverse, numerical_rank


def _check_system(M: DualMatrix, vector: DualVector) -> None:
    if not M.is_square:
        raise ShapeMismatch(f"Sistem dual membutuhkan matriks persegi, didapat {M.shape}")
    if len(vector) != M.shape[0]:
        raise ShapeMismatch(f"Panjang vektor {len(vector)} tidak cocok dengan matriks {M.shape}")


def _require_ddgi(M: DualMatrix, tol: Tolerances) -> InverseResult:
    result = ddgi(M, tol)
    if not result.exists:
        raise NoDDGI(f"DDGI tidak ada ({result.reason}); sistem tidak bisa diselesaikan lewat Â^D")
    return result


def is_consistent(M: DualMatrix, b: DualVector, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """
    Sistem Âx̂ = b̂ konsisten jika dan hanya jika Â·Â^D·b̂ = b̂.

    Raises:
        NoDDGI: Jika DDGI dari Â tidak ada.
        ShapeMismatch: Jika dimensi tidak cocok.
    """
    _check_system(M, b)
    drazin = _require_ddgi(M, tol)
    gap = dual_distance(apply(M, apply(drazin.inverse, b)), b)
    logging.debug(f"🔍 Konsistensi: residual {gap:.3e}")
    return gap <= tol.resid_rel


def solve_unique(M: DualMatrix, b: DualVector, tol: Tolerances = DEFAULT_TOLERANCES) -> DualVector:
    """
    Solusi tunggal x̂ = Â^D·b̂ dari Âx̂ = b̂ dengan x̂ ∈ R(Â^k).

    Raises:
        NoDDGI: Jika DDGI dari Â tidak ada.
        Inconsistent: Jika Â·x̂ tidak kembali ke b̂.
    """
    _check_system(M, b)
    drazin = _require_ddgi(M, tol)
    x = apply(drazin.inverse, b)
    gap = dual_distance(apply(M, x), b)
    if gap > tol.resid_rel:
        raise Inconsistent(f"Sistem tidak konsisten: ‖Âx̂ − b̂‖ relatif {gap:.3e}")
    return x


def homogeneous_term(M: DualMatrix, z: DualVector, tol: Tolerances = DEFAULT_TOLERANCES) -> DualVector:
    """(Â^(k−1) − Â^D·Â^k)·ẑ; nol untuk k = 0."""
    _check_system(M, z)
    drazin = _require_ddgi(M, tol)
    k = drazin.k
    if k == 0:
        return DualVector.zeros(len(z))
    return apply(power(M, k - 1), z) - apply(drazin.inverse, apply(power(M, k), z))


def general_solution(M: DualMatrix, b: DualVector, z: DualVector,
                     tol: Tolerances = DEFAULT_TOLERANCES) -> DualVector:
    """
    Solusi umum Â^D·b̂ + (Â^(k−1) − Â^D·Â^k)·ẑ untuk sistem yang konsisten.

    Raises:
        NoDDGI: Jika DDGI dari Â tidak ada.
        Inconsistent: Jika sistem tidak konsisten.
    """
    particular = solve_unique(M, b, tol)
    return particular + homogeneous_term(M, z, tol)


def in_range_power(M: DualMatrix, w: DualVector, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """
    ŵ ∈ R(Â^k) = {A^k x + ε(A^k y + D x)}.

    Diputuskan dengan dua uji rank real: ŵ.real ∈ R(A^k), lalu
    ŵ.dual − D(A^k)^†ŵ.real ∈ R([A^k | D(I − (A^k)^†A^k)]).
    """
    _check_system(M, w)
    k = index(M.real, tol)
    Mk = power(M, k)
    Ak, D = Mk.real, Mk.dual
    n = Ak.shape[0]
    Ak_p = mp_inverse(Ak, tol)

    if numerical_rank(np.column_stack([Ak, w.real]), tol) != numerical_rank(Ak, tol):
        return False
    augmented = np.hstack([Ak, D @ (np.eye(n) - Ak_p @ Ak)])
    remainder = w.dual - D @ Ak_p @ w.real
    return numerical_rank(np.column_stack([augmented, remainder]), tol) == numerical_rank(augmented, tol)


def in_null_power(M: DualMatrix, w: DualVector, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """
    ŵ ∈ N(Â^k) = {x + εy : A^k x = 0, A^k y + D x = 0}.

    Skala: 1 + (‖A^k‖ + ‖D‖)·‖ŵ‖.
    """
    _check_system(M, w)
    k = index(M.real, tol)
    Mk = power(M, k)
    Ak, D = Mk.real, Mk.dual
    norm_w = float(np.hypot(np.linalg.norm(w.real), np.linalg.norm(w.dual)))
    scale = 1.0 + (fro(Ak) + fro(D)) * norm_w
    real_gap = float(np.linalg.norm(Ak @ w.real))
    dual_gap = float(np.linalg.norm(Ak @ w.dual + D @ w.real))
    return max(real_gap, dual_gap) <= tol.resid_rel * scale


def null_power_vector(M: DualMatrix, seed: int, tol: Tolerances = DEFAULT_TOLERANCES) -> DualVector:
    """
    Elemen ber-seed dari N(Â^k): x kombinasi basis N(A^k), y = −(A^k)^†Dx + elemen N(A^k).

    Raises:
        NoDDGI: Jika DDGI dari Â tidak ada (Dx belum tentu di R(A^k)).
    """
    drazin = _require_ddgi(M, tol)
    n = M.shape[0]
    Mk = power(M, drazin.k)
    Ak, D = Mk.real, Mk.dual
    basis = sla.null_space(Ak, rcond=tol.rank_rel)
    if basis.shape[1] == 0:
        return DualVector.zeros(n)
    rng = np.random.default_rng(seed)
    coeffs = rng.integers(-3, 4, size=basis.shape[1]).astype(float)
    if not np.any(coeffs):
        coeffs[0] = 1.0
    x = basis @ coeffs
    y = -mp_inverse(Ak, tol) @ D @ x + basis @ rng.integers(-3, 4, size=basis.shape[1])
    return DualVector(x, y)
