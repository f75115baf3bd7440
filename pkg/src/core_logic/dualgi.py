# src/core_logic/dualgi.py

"""
Invers tergeneralisasi untuk matriks dual: MPDGI, DMPGI, DGGI, DCGI, DDGI, DDMPGI.

Setiap konstruktor yang bisa gagal mengembalikan InverseResult. Ketiadaan
invers adalah nilai (exists=False beserta residual yang melanggar), bukan
exception.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np

from src.core_logic.dualmat import DualMatrix, dual_distance, multiply, power
from src.core_logic.errors import HypothesisFailed, ShapeMismatch
from src.core_logic.realgi import (
    DEFAULT_TOLERANCES,
    Tolerances,
    core_inverse,
    drazin_inverse,
    fro,
    group_inverse,
    index,
    matrix_power,
    mp_inverse,
    numerical_rank,
    relative_residual,
)


class InverseKind(str, Enum):
    MPDGI = "MPDGI"
    DMPGI = "DMPGI"
    DGGI = "DGGI"
    DCGI = "DCGI"
    DDGI = "DDGI"
    DDMPGI = "DDMPGI"


# Prefix nama residual -> alasan ketiadaan invers
_REASONS = (
    ("index_condition", "IndexTooHigh"),
    ("existence_condition", "ExistenceConditionFailed"),
    ("rank_condition", "RankConditionFailed"),
    ("factor_", "FactorMissing"),
)


@dataclass(frozen=True)
class ResidualReport:
    """Data class untuk residual bernama, satu per persamaan atau syarat yang dicek"""
    residuals: Dict[str, float] = field(default_factory=dict)

    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    def worst(self) -> Optional[Tuple[str, float]]:
        if not self.residuals:
            return None
        name = max(self.residuals, key=self.residuals.get)
        return name, self.residuals[name]

    def passes(self, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        return all(value <= tol.resid_rel for value in self.residuals.values())

    def failing(self, tol: Tolerances = DEFAULT_TOLERANCES) -> Dict[str, float]:
        return {name: value for name, value in self.residuals.items() if value > tol.resid_rel}

    def as_dict(self) -> Dict[str, float]:
        return dict(self.residuals)


@dataclass(frozen=True)
class InverseResult:
    """Data class untuk hasil konstruksi invers dual"""
    kind: InverseKind
    exists: bool
    inverse: Optional[DualMatrix]
    k: int
    report: ResidualReport
    reason: Optional[str] = None


def _reason_for(failing: Dict[str, float]) -> str:
    for prefix, reason in _REASONS:
        if any(name.startswith(prefix) for name in failing):
            return reason
    return "DefiningEquationsFailed"


def _finalize(kind: InverseKind, candidate: DualMatrix, k: int,
              residuals: Dict[str, float], tol: Tolerances) -> InverseResult:
    """Menetapkan exists dari residual: exists iff semua residual <= resid_rel."""
    report = ResidualReport({name: float(value) for name, value in residuals.items()})
    failing = report.failing(tol)
    if not failing:
        logging.debug(f"✅ {kind.value} ada (k={k}, residual maks {report.max_residual():.2e})")
        return InverseResult(kind, True, candidate, k, report)
    reason = _reason_for(failing)
    logging.debug(f"❌ {kind.value} tidak ada: {reason}")
    for name, value in failing.items():
        logging.debug(f"   └─ {name} = {value:.3e}")
    return InverseResult(kind, False, None, k, report, reason)


def _require_square(M: DualMatrix, what: str) -> int:
    if not M.is_square:
        raise ShapeMismatch(f"{what} membutuhkan matriks dual persegi, didapat {M.shape}")
    return M.shape[0]


def _projector_residual(left: np.ndarray, middle: np.ndarray, right: np.ndarray) -> float:
    """‖L·M·R‖_F / (1 + ‖L‖·‖M‖·‖R‖) untuk syarat eksistensi berbentuk proyektor."""
    return fro(left @ middle @ right) / (1.0 + fro(left) * fro(middle) * fro(right))


def _dual_penrose(M: DualMatrix, X: DualMatrix) -> Dict[str, float]:
    MX, XM = multiply(M, X), multiply(X, M)
    return {
        "axa": dual_distance(multiply(MX, M), M),
        "xax": dual_distance(multiply(XM, X), X),
        "ax_symmetric": dual_distance(MX.T, MX),
        "xa_symmetric": dual_distance(XM.T, XM),
    }


def _dggi_equations(M: DualMatrix, X: DualMatrix) -> Dict[str, float]:
    A, B, AG, R = M.real, M.dual, X.real, X.dual
    return {
        "axa": dual_distance(multiply(multiply(M, X), M), M),
        "xax": dual_distance(multiply(multiply(X, M), X), X),
        "commute": dual_distance(multiply(M, X), multiply(X, M)),
        "char_b": relative_residual(A @ AG @ B + A @ R @ A + B @ AG @ A, B),
        "char_r": relative_residual(AG @ A @ R + AG @ B @ AG + R @ A @ AG, R),
        "char_commute": relative_residual(A @ R + B @ AG, R @ A + AG @ B),
    }


def _dcgi_equations(M: DualMatrix, X: DualMatrix) -> Dict[str, float]:
    MX = multiply(M, X)
    return {
        "axa": dual_distance(multiply(MX, M), M),
        "axx": dual_distance(multiply(MX, X), X),
        "ax_symmetric": dual_distance(MX.T, MX),
    }


def _ddgi_equations(M: DualMatrix, X: DualMatrix, k: int) -> Dict[str, float]:
    A, B, AD, R = M.real, M.dual, X.real, X.dual
    Mk = power(M, k)
    Ak, D = Mk.real, Mk.dual
    I = np.eye(A.shape[0])
    return {
        "power": dual_distance(multiply(multiply(Mk, X), M), Mk),
        "reflexive": dual_distance(multiply(multiply(X, M), X), X),
        "commute": dual_distance(multiply(M, X), multiply(X, M)),
        "lemma_power": relative_residual(Ak @ AD @ B + Ak @ R @ A, D @ (I - AD @ A)),
        "lemma_reflexive": relative_residual(R, AD @ A @ R + AD @ B @ AD + R @ A @ AD),
        "lemma_commute": relative_residual(A @ R + B @ AD, R @ A + AD @ B),
    }


def _ddmpgi_equations(M: DualMatrix, X: DualMatrix, k: int, tol: Tolerances) -> Dict[str, float]:
    MD = _ddgi_candidate(M, tol)[0]
    MP = _dmpgi_candidate(M, tol)
    Mk = power(M, k)
    XM = multiply(X, M)
    return {
        "xax": dual_distance(multiply(XM, X), X),
        "xa_drazin": dual_distance(XM, multiply(MD, M)),
        "power_mp": dual_distance(multiply(Mk, X), multiply(Mk, MP)),
    }


def verify_inverse(kind: InverseKind, M: DualMatrix, X: DualMatrix, k: Optional[int] = None,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> ResidualReport:
    """
    Menghitung residual persamaan pendefinisi untuk kandidat invers X̂ dari Â.

    Args:
        kind (InverseKind): Jenis invers yang dicek.
        M (DualMatrix): Matriks dual Â.
        X (DualMatrix): Kandidat invers X̂.
        k (int, optional): Index yang dipakai untuk DDGI/DDMPGI; default index(A).
        tol (Tolerances): Ambang numerik.

    Returns:
        ResidualReport: Residual relatif per persamaan.

    Raises:
        ShapeMismatch: Jika bentuk X̂ bukan transpose bentuk Â.
    """
    kind = InverseKind(kind)
    if X.shape != (M.shape[1], M.shape[0]):
        raise ShapeMismatch(f"Kandidat {X.shape} tidak cocok dengan matriks {M.shape}")
    if kind in (InverseKind.MPDGI, InverseKind.DMPGI):
        residuals = _dual_penrose(M, X)
    else:
        _require_square(M, kind.value)
        if k is None:
            k = index(M.real, tol)
        if kind is InverseKind.DGGI:
            residuals = _dggi_equations(M, X)
        elif kind is InverseKind.DCGI:
            residuals = _dcgi_equations(M, X)
        elif kind is InverseKind.DDGI:
            residuals = _ddgi_equations(M, X, k)
        else:
            residuals = _ddmpgi_equations(M, X, k, tol)
    return ResidualReport({name: float(value) for name, value in residuals.items()})


def mpdgi(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> DualMatrix:
    """MPDGI Â^P = A^† − ε·A^†·B·A^†, selalu terdefinisi."""
    Ap = mp_inverse(M.real, tol)
    return DualMatrix(Ap, -Ap @ M.dual @ Ap)


def _dmpgi_candidate(M: DualMatrix, tol: Tolerances) -> DualMatrix:
    # (AᵀA)^† = A^†(A^†)ᵀ dan (AAᵀ)^† = (A^†)ᵀA^† tanpa mengkuadratkan kondisi A
    A, B = M.real, M.dual
    m, n = A.shape
    Ap = mp_inverse(A, tol)
    R = (Ap @ B @ Ap
         - Ap @ Ap.T @ B.T @ (np.eye(m) - A @ Ap)
         - (np.eye(n) - Ap @ A) @ B.T @ Ap.T @ Ap)
    return DualMatrix(Ap, -R)


def dmpgi_rank_test(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """rank([[B, A], [A, 0]]) = 2·rank(A)."""
    A, B = M.real, M.dual
    block = np.block([[B, A], [A, np.zeros_like(A)]])
    return numerical_rank(block, tol) == 2 * numerical_rank(A, tol)


def dmpgi(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> InverseResult:
    """
    DMPGI Â^† = A^† − εR.

    Ada jika dan hanya jika (I − AA^†)B(I − A^†A) = 0, setara dengan
    rank([[B, A], [A, 0]]) = 2·rank(A). Kedua uji dihitung; ketidaksesuaian dicatat.
    """
    A, B = M.real, M.dual
    m, n = A.shape
    candidate = _dmpgi_candidate(M, tol)
    Ap = candidate.real
    condition = _projector_residual(np.eye(m) - A @ Ap, B, np.eye(n) - Ap @ A)
    block = np.block([[B, A], [A, np.zeros_like(A)]])
    rank_gap = abs(numerical_rank(block, tol) - 2 * numerical_rank(A, tol))
    if (condition <= tol.resid_rel) != (rank_gap == 0):
        logging.warning("⚠️ DMPGI: syarat proyektor dan uji rank tidak sepakat")
        logging.warning(f"   └─ residual proyektor {condition:.3e}, selisih rank {rank_gap}")
    residuals = {"existence_condition": condition, "rank_condition": float(rank_gap)}
    residuals.update(_dual_penrose(M, candidate))
    return _finalize(InverseKind.DMPGI, candidate, 0, residuals, tol)


def dggi(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> InverseResult:
    """
    DGGI Â^# = A^# + εR, dengan
    R = −A^#BA^# + (A^#)²B(I − AA^#) + (I − AA^#)B(A^#)².

    Membutuhkan index(A) <= 1; ada jika dan hanya jika (I − AA^#)B(I − AA^#) = 0.
    """
    n = _require_square(M, "DGGI")
    A, B = M.real, M.dual
    k = index(A, tol)
    if k >= 2:
        logging.debug(f"❌ DGGI: index(A) = {k} > 1")
        return InverseResult(InverseKind.DGGI, False, None, 1,
                             ResidualReport({"index_condition": float(k - 1)}), "IndexTooHigh")
    AG = group_inverse(A, tol)
    E = np.eye(n) - A @ AG
    AG2 = AG @ AG
    R = -AG @ B @ AG + AG2 @ B @ E + E @ B @ AG2
    candidate = DualMatrix(AG, R)
    residuals = {"existence_condition": _projector_residual(E, B, E)}
    residuals.update(_dggi_equations(M, candidate))
    return _finalize(InverseKind.DGGI, candidate, 1, residuals, tol)


def dcgi_candidate_dual(A: np.ndarray, B: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """
    Bagian dual kandidat DCGI:
    R = −A^⊕BA^† + A^#BA^† − A^#BA^⊕ + A^⊕(BA^†)ᵀ(I − AA^#) + (I − AA^#)BA^#A^⊕.
    """
    AC = core_inverse(A, tol)
    AG = group_inverse(A, tol)
    Ap = mp_inverse(A, tol)
    E = np.eye(A.shape[0]) - A @ AG
    return (-AC @ B @ Ap + AG @ B @ Ap - AG @ B @ AC
            + AC @ (B @ Ap).T @ E + E @ B @ AG @ AC)


def dcgi(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> InverseResult:
    """
    DCGI: kandidat A^⊕ + εR, eksistensi diputuskan oleh tiga persamaan pendefinisi
    ÂX̂Â = Â, ÂX̂² = X̂, (ÂX̂)ᵀ = ÂX̂.
    """
    _require_square(M, "DCGI")
    A, B = M.real, M.dual
    k = index(A, tol)
    if k >= 2:
        logging.debug(f"❌ DCGI: index(A) = {k} > 1")
        return InverseResult(InverseKind.DCGI, False, None, 1,
                             ResidualReport({"index_condition": float(k - 1)}), "IndexTooHigh")
    candidate = DualMatrix(core_inverse(A, tol), dcgi_candidate_dual(A, B, tol))
    return _finalize(InverseKind.DCGI, candidate, 1, _dcgi_equations(M, candidate), tol)


def _ddgi_candidate(M: DualMatrix, tol: Tolerances) -> Tuple[DualMatrix, int, float]:
    """Kandidat DDGI A^D + εR, index k dan residual syarat (iii)."""
    A, B = M.real, M.dual
    n = A.shape[0]
    AD, k = drazin_inverse(A, tol)
    D = power(M, k).dual
    E = np.eye(n) - A @ AD
    ADk1 = matrix_power(AD, k + 1)
    R = -AD @ B @ AD + ADk1 @ D @ E + E @ D @ ADk1
    condition = _projector_residual(E, D, AD @ A - np.eye(n))
    return DualMatrix(AD, R), k, condition


def ddgi(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> InverseResult:
    """
    DDGI Â^D = A^D + εR, dengan k = index(A) dan D bagian dual dari Â^k:
    R = −A^DBA^D + (A^D)^(k+1)D(I − AA^D) + (I − AA^D)D(A^D)^(k+1).

    Ada jika dan hanya jika (I − AA^D)·D·(A^DA − I) = 0. Residual persamaan
    pendefinisi dan persamaan karakterisasi ikut dilaporkan.
    """
    _require_square(M, "DDGI")
    candidate, k, condition = _ddgi_candidate(M, tol)
    residuals = {"existence_condition": condition}
    residuals.update(_ddgi_equations(M, candidate, k))
    if (condition <= tol.resid_rel) != (residuals["lemma_power"] <= tol.resid_rel):
        logging.warning("⚠️ DDGI: syarat eksistensi dan persamaan karakterisasi pertama tidak sepakat")
        logging.warning(f"   └─ syarat {condition:.3e}, persamaan {residuals['lemma_power']:.3e}")
    return _finalize(InverseKind.DDGI, candidate, k, residuals, tol)


def ddgi_exists_rank(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """rank([[D, A^k], [A^k, 0]]) = 2·rank(A^k)."""
    _require_square(M, "DDGI")
    k = index(M.real, tol)
    Mk = power(M, k)
    Ak, D = Mk.real, Mk.dual
    block = np.block([[D, Ak], [Ak, np.zeros_like(Ak)]])
    return numerical_rank(block, tol) == 2 * numerical_rank(Ak, tol)


def ddgi_exists_aux(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """DMPGI dari Ĉ = A^k + εD ada."""
    _require_square(M, "DDGI")
    return dmpgi(power(M, index(M.real, tol)), tol).exists


def ddgi_absorbed(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> InverseResult:
    """
    DDGI ketika AA^D·D = D·AA^D = D: suku proyektor R hilang dan Â^D = A^D − ε·A^D·B·A^D.

    Raises:
        HypothesisFailed: Jika AA^D·D atau D·AA^D berbeda dari D.
    """
    _require_square(M, "DDGI")
    A, B = M.real, M.dual
    AD, k = drazin_inverse(A, tol)
    D = power(M, k).dual
    P = A @ AD
    hypotheses = {
        "hypothesis_left": relative_residual(P @ D, D),
        "hypothesis_right": relative_residual(D @ P, D),
    }
    if any(value > tol.resid_rel for value in hypotheses.values()):
        raise HypothesisFailed(
            f"AA^D·D = D·AA^D = D tidak terpenuhi (residual {max(hypotheses.values()):.3e})"
        )
    candidate = DualMatrix(AD, -AD @ B @ AD)
    printed_gap = relative_residual(AD @ D @ AD, AD @ B @ AD)
    if printed_gap > tol.resid_rel:
        logging.info(f"ℹ️ Bentuk A^D − εA^DDA^D berbeda dari hasil umum (gap {printed_gap:.3e}, k={k})")
    residuals = dict(hypotheses)
    residuals.update(_ddgi_equations(M, candidate, k))
    return _finalize(InverseKind.DDGI, candidate, k, residuals, tol)


def ddgi_canonical(P: np.ndarray, P_inv: np.ndarray, C: np.ndarray, N: np.ndarray,
                   B1: np.ndarray, B2: np.ndarray, B3: np.ndarray, k: int) -> DualMatrix:
    """
    DDGI disusun per blok pada koordinat kanonik:
    real P·diag(C⁻¹, 0)·P⁻¹, dual P·[[−C⁻¹B₁C⁻¹, ΣC^-(i+2)B₂N^i], [ΣN^iB₃C^-(i+2), 0]]·P⁻¹.
    """
    r, m = C.shape[0], N.shape[0]
    C_inv = np.linalg.inv(C)
    top_right = np.zeros((r, m))
    bottom_left = np.zeros((m, r))
    for i in range(k):
        C_pow = np.linalg.matrix_power(C_inv, i + 2)
        N_pow = np.linalg.matrix_power(N, i)
        top_right += C_pow @ B2 @ N_pow
        bottom_left += N_pow @ B3 @ C_pow
    real = np.zeros((r + m, r + m))
    real[:r, :r] = C_inv
    dual = np.block([[-C_inv @ B1 @ C_inv, top_right], [bottom_left, np.zeros((m, m))]])
    return DualMatrix(P @ real @ P_inv, P @ dual @ P_inv)


def ddmpgi(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> InverseResult:
    """
    DDMPGI Â^(D,†) = Â^D·Â·Â^†, ada jika DDGI dan DMPGI keduanya ada.
    """
    _require_square(M, "DDMPGI")
    drazin = ddgi(M, tol)
    moore = dmpgi(M, tol)
    residuals = {
        "factor_ddgi": 0.0 if drazin.exists else drazin.report.max_residual(),
        "factor_dmpgi": 0.0 if moore.exists else moore.report.max_residual(),
    }
    if not (drazin.exists and moore.exists):
        logging.debug("❌ DDMPGI: salah satu faktor tidak ada")
        return InverseResult(InverseKind.DDMPGI, False, None, drazin.k,
                             ResidualReport(residuals), "FactorMissing")
    candidate = multiply(multiply(drazin.inverse, M), moore.inverse)
    residuals.update(_ddmpgi_equations(M, candidate, drazin.k, tol))
    return _finalize(InverseKind.DDMPGI, candidate, drazin.k, residuals, tol)


def ddmpgi_expanded(M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> DualMatrix:
    """
    DDMPGI dalam bentuk terurai:
    A^DAA^† + ε(R_D·A·A^† + A^D·B·A^† − A^D·A·R_†),
    dengan Â^D = A^D + εR_D dan Â^† = A^† − εR_†.
    """
    drazin = _ddgi_candidate(M, tol)[0]
    moore = _dmpgi_candidate(M, tol)
    AD, RD = drazin.real, drazin.dual
    Ap, R_mp = moore.real, -moore.dual
    A, B = M.real, M.dual
    return DualMatrix(AD @ A @ Ap, RD @ A @ Ap + AD @ B @ Ap - AD @ A @ R_mp)
