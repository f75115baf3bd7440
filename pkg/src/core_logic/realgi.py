# src/core_logic/realgi.py

"""
Kernel invers tergeneralisasi untuk matriks real.

Semua konstruksi dual di paket ini direduksi ke fungsi-fungsi di sini:
rank numerik, index, invers Moore-Penrose, invers grup, invers Drazin,
invers core, dan dekomposisi core-nilpotent.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
import scipy.linalg as sla

from src.core_logic.errors import (
    DecompositionFailure,
    NoCoreInverse,
    NoGroupInverse,
    ShapeMismatch,
)

DEFAULT_RANK_REL = 1e-10
DEFAULT_RESID_REL = 1e-8


@dataclass(frozen=True)
class Tolerances:
    """Data class untuk ambang rank dan ambang residual relatif."""
    rank_rel: float = DEFAULT_RANK_REL
    resid_rel: float = DEFAULT_RESID_REL

    def __post_init__(self):
        for name in ("rank_rel", "resid_rel"):
            value = getattr(self, name)
            if not (0.0 < float(value) < 1.0):
                raise ValueError(f"❌ Toleransi {name} harus di (0, 1), didapat {value!r}")


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class CoreNilpotent:
    """Data class untuk dekomposisi A = P·blockdiag(C, N)·P⁻¹"""
    P: np.ndarray
    C: np.ndarray
    N: np.ndarray
    r: int
    k: int
    residual: float = 0.0


def as_real_matrix(M) -> np.ndarray:
    """
    Mengubah input menjadi matriks float64 dua dimensi yang finite.

    Raises:
        ShapeMismatch: Jika input bukan matriks 2-D atau memuat NaN/Inf.
    """
    arr = np.asarray(M, dtype=float)
    if arr.ndim != 2:
        raise ShapeMismatch(f"Matriks harus 2-D, didapat ndim={arr.ndim}")
    if not np.all(np.isfinite(arr)):
        raise ShapeMismatch("Matriks memuat nilai non-finite")
    return arr


def _require_square(A: np.ndarray) -> int:
    if A.shape[0] != A.shape[1]:
        raise ShapeMismatch(f"Matriks persegi dibutuhkan, didapat {A.shape}")
    return A.shape[0]


def fro(M: np.ndarray) -> float:
    """Norma Frobenius; 0 untuk matriks kosong."""
    return float(np.linalg.norm(M)) if M.size else 0.0


def relative_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    """
    Jarak relatif ‖lhs − rhs‖_F / (1 + min(‖lhs‖_F, ‖rhs‖_F)).

    Normalisasi terhadap operand yang lebih kecil membuat pembanding dengan
    nol menjadi jarak absolut.
    """
    if lhs.shape != rhs.shape:
        raise ShapeMismatch(f"Bentuk residual tidak cocok: {lhs.shape} vs {rhs.shape}")
    return fro(lhs - rhs) / (1.0 + min(fro(lhs), fro(rhs)))


def numerical_rank(M, tol: Tolerances = DEFAULT_TOLERANCES, *, scale: float = 0.0) -> int:
    """
    Menghitung rank numerik: jumlah nilai singular > rank_rel × nilai singular terbesar.

    Args:
        M: Matriks real.
        tol (Tolerances): Ambang yang dipakai.
        scale (float): Skala acuan opsional; ambang memakai max(nilai singular terbesar, scale).

    Returns:
        int: Rank numerik, 0 untuk matriks nol.
    """
    M = as_real_matrix(M)
    if M.size == 0:
        return 0
    return _count_above(sla.svdvals(M), tol, scale)


def _count_above(s: np.ndarray, tol: Tolerances, scale: float = 0.0, floor: float = 0.0) -> int:
    reference = max(float(s[0]), scale) if s.size else 0.0
    if reference == 0.0:
        return 0
    return int(np.count_nonzero(s > max(tol.rank_rel * reference, floor)))


def _power_noise_floor(norm2: float, j: int, n: int) -> float:
    """Batas sisa pembulatan perkalian j matriks n×n: 10·n·(j+1)·eps·‖A‖₂^j."""
    return 10.0 * n * (j + 1) * np.finfo(float).eps * norm2 ** j


def _power_rank(s: np.ndarray, tol: Tolerances, norm2: float, j: int, n: int) -> int:
    """rank(A^j) = numerical_rank(A^j), tanpa menghitung sisa pembulatan pangkat nilpoten."""
    return _count_above(s, tol, floor=_power_noise_floor(norm2, j, n))


def _spectral_norm(A: np.ndarray) -> float:
    return float(sla.svdvals(A)[0]) if A.size else 0.0


def matrix_power(A: np.ndarray, k: int) -> np.ndarray:
    """A^k dengan konvensi A^0 = I."""
    return np.linalg.matrix_power(A, k)


def index(A, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """
    Index matriks persegi: k terkecil dengan rank(A^k) = rank(A^(k+1)), A^0 = I.

    Returns:
        int: Index, selalu <= n. Index matriks nol adalah 1.
    """
    A = as_real_matrix(A)
    n = _require_square(A)
    norm2 = _spectral_norm(A)
    power = np.eye(n)
    prev_rank = n
    for k in range(n + 1):
        power = power @ A
        rank_next = _power_rank(sla.svdvals(power), tol, norm2, k + 1, n)
        if rank_next == prev_rank:
            return k
        prev_rank = rank_next
    return n


def mp_inverse(M, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """
    Invers Moore-Penrose lewat SVD dengan cutoff relatif yang sama dengan numerical_rank.
    """
    M = as_real_matrix(M)
    m, n = M.shape
    U, s, Vt = sla.svd(M, full_matrices=False)
    r = _count_above(s, tol)
    if r == 0:
        return np.zeros((n, m))
    return (Vt[:r].T / s[:r]) @ U[:, :r].T


def _power_bases(A: np.ndarray, k: int, tol: Tolerances) -> Tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """Basis ortonormal R(A^k), R((A^k)ᵀ) dan N(A^k) dari SVD A^k."""
    Ak = matrix_power(A, k)
    U, s, Vt = sla.svd(Ak)
    r = _power_rank(s, tol, _spectral_norm(A), k, A.shape[0])
    return U[:, :r], Vt[:r].T, Vt[r:].T, r


def drazin_inverse(A, tol: Tolerances = DEFAULT_TOLERANCES) -> Tuple[np.ndarray, int]:
    """
    Menghitung invers Drazin A^D beserta index k.

    A^D dibangun dari basis ortonormal U untuk R(A^k) dan W untuk R((A^k)ᵀ):
    A^D = U·(UᵀAU)⁻¹·(WᵀU)⁻¹·Wᵀ. Jalur limit A^k·(A^(2k+1))^†·A^k tersedia
    di drazin_inverse_limit sebagai pembanding.

    Returns:
        Tuple[np.ndarray, int]: (A^D, k)
    """
    A = as_real_matrix(A)
    n = _require_square(A)
    k = index(A, tol)
    if k == 0:
        return np.linalg.inv(A), 0

    U, W, _, r = _power_bases(A, k, tol)
    if r == 0:
        logging.debug(f"🔹 Drazin: A nilpoten (k={k}), A^D = 0")
        return np.zeros((n, n)), k

    core = U.T @ A @ U
    coupling = W.T @ U
    try:
        AD = U @ np.linalg.solve(core, np.linalg.solve(coupling, W.T))
    except np.linalg.LinAlgError as e:
        raise DecompositionFailure(f"Blok core singular saat menghitung A^D (k={k}, r={r})") from e
    logging.debug(f"🔹 Drazin: n={n}, k={k}, rank(A^k)={r}")
    return AD, k


def drazin_inverse_limit(A, l: int, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """A^l · (A^(2l+1))^† · A^l, sah untuk setiap l >= index(A)."""
    A = as_real_matrix(A)
    _require_square(A)
    Al = matrix_power(A, l)
    return Al @ mp_inverse(matrix_power(A, 2 * l + 1), tol) @ Al


def group_inverse(A, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """
    Invers grup A^#.

    Raises:
        NoGroupInverse: Jika index(A) >= 2, yaitu rank(A) != rank(A²).
    """
    A = as_real_matrix(A)
    AD, k = drazin_inverse(A, tol)
    if k >= 2:
        raise NoGroupInverse(f"index(A) = {k}: rank(A) != rank(A²)")
    return AD


def core_inverse(A, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """
    Invers core A^⊕ = A^#·A·A^†.

    Raises:
        NoCoreInverse: Jika index(A) >= 2.
    """
    A = as_real_matrix(A)
    try:
        AG = group_inverse(A, tol)
    except NoGroupInverse as e:
        raise NoCoreInverse(str(e)) from e
    return AG @ A @ mp_inverse(A, tol)


def core_nilpotent(A, tol: Tolerances = DEFAULT_TOLERANCES) -> CoreNilpotent:
    """
    Dekomposisi core-nilpotent A = P·blockdiag(C, N)·P⁻¹.

    P = [basis ortonormal R(A^k) | basis ortonormal N(A^k)]; kedua subruang
    invarian terhadap A dan saling komplementer.

    Raises:
        DecompositionFailure: Jika residual rekonstruksi melebihi resid_rel.
    """
    A = as_real_matrix(A)
    n = _require_square(A)
    k = index(A, tol)
    if k == 0:
        return CoreNilpotent(P=np.eye(n), C=A.copy(), N=np.zeros((0, 0)), r=n, k=0)

    U, _, Z, r = _power_bases(A, k, tol)
    P = np.hstack([U, Z])
    try:
        P_inv = np.linalg.inv(P)
    except np.linalg.LinAlgError as e:
        raise DecompositionFailure("Basis R(A^k) dan N(A^k) tidak membentuk basis penuh") from e

    T = P_inv @ A @ P
    C, N = T[:r, :r], T[r:, r:]
    rebuilt = P @ sla.block_diag(C, N) @ P_inv
    residual = relative_residual(rebuilt, A)
    if residual > tol.resid_rel:
        raise DecompositionFailure(
            f"Rekonstruksi core-nilpotent gagal: residual {residual:.3e} > {tol.resid_rel:.1e}"
        )
    return CoreNilpotent(P=P, C=C, N=N, r=r, k=k, residual=residual)


def drazin_from_core_nilpotent(cn: CoreNilpotent) -> np.ndarray:
    """A^D = P·blockdiag(C⁻¹, 0)·P⁻¹ dari bentuk kanonik."""
    n = cn.P.shape[0]
    inner = np.zeros((n, n))
    if cn.r:
        inner[:cn.r, :cn.r] = np.linalg.inv(cn.C)
    return cn.P @ inner @ np.linalg.inv(cn.P)


def penrose_residuals(M, X) -> Dict[str, float]:
    """Residual empat persamaan Penrose untuk kandidat X dari M."""
    M, X = as_real_matrix(M), as_real_matrix(X)
    MX, XM = M @ X, X @ M
    return {
        "mxm": relative_residual(MX @ M, M),
        "xmx": relative_residual(XM @ X, X),
        "mx_symmetric": relative_residual(MX.T, MX),
        "xm_symmetric": relative_residual(XM.T, XM),
    }


def drazin_residuals(A, X, k: int) -> Dict[str, float]:
    """Residual A^(k+1)X = A^k, XAX = X, AX = XA."""
    A, X = as_real_matrix(A), as_real_matrix(X)
    Ak = matrix_power(A, k)
    return {
        "power": relative_residual(Ak @ A @ X, Ak),
        "reflexive": relative_residual(X @ A @ X, X),
        "commute": relative_residual(A @ X, X @ A),
    }


def group_residuals(A, X) -> Dict[str, float]:
    """Residual AXA = A, XAX = X, AX = XA."""
    A, X = as_real_matrix(A), as_real_matrix(X)
    return {
        "axa": relative_residual(A @ X @ A, A),
        "xax": relative_residual(X @ A @ X, X),
        "commute": relative_residual(A @ X, X @ A),
    }


def core_residuals(A, X) -> Dict[str, float]:
    """Residual AXA = A, AX² = X, (AX)ᵀ = AX."""
    A, X = as_real_matrix(A), as_real_matrix(X)
    AX = A @ X
    return {
        "axa": relative_residual(AX @ A, A),
        "axx": relative_residual(AX @ X, X),
        "ax_symmetric": relative_residual(AX.T, AX),
    }


def block_rank_identity(A, B, C, tol: Tolerances = DEFAULT_TOLERANCES) -> Tuple[int, int]:
    """
    Kedua sisi identitas rank blok untuk [[A, B^k], [C^l, 0]].

    Returns:
        Tuple[int, int]: (rank blok, rank(B^k) + rank(C^l) + rank((I−BB^D)A(I−CC^D)))
    """
    A, B, C = as_real_matrix(A), as_real_matrix(B), as_real_matrix(C)
    n = _require_square(B)
    BD, k = drazin_inverse(B, tol)
    CD, l = drazin_inverse(C, tol)
    Bk, Cl = matrix_power(B, k), matrix_power(C, l)
    block = np.block([[A, Bk], [Cl, np.zeros((Cl.shape[0], Bk.shape[1]))]])
    I = np.eye(n)
    left, right = I - B @ BD, I - C @ CD
    # proyektor tak nol bernorma >= 1; sisa pembulatan proyektor nol tidak dihitung sebagai rank
    scale = max(_spectral_norm(left), 1.0) * _spectral_norm(A) * max(_spectral_norm(right), 1.0)
    lhs = numerical_rank(block, tol)
    rhs = (numerical_rank(Bk, tol) + numerical_rank(Cl, tol)
           + numerical_rank(left @ A @ right, tol, scale=scale))
    return lhs, rhs


def range_equal(A, C, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """R(A) = R(C): rank([A|C]) = rank A = rank C."""
    A, C = as_real_matrix(A), as_real_matrix(C)
    ra, rc = numerical_rank(A, tol), numerical_rank(C, tol)
    return ra == rc == numerical_rank(np.hstack([A, C]), tol)


def null_equal(A, C, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """N(A) = N(C): rank([A;C]) = rank A = rank C."""
    A, C = as_real_matrix(A), as_real_matrix(C)
    ra, rc = numerical_rank(A, tol), numerical_rank(C, tol)
    return ra == rc == numerical_rank(np.vstack([A, C]), tol)
