# src/core_logic/laws.py

"""
Pemeriksa hukum urutan (reverse, forward, absorption) untuk bentuk partikular
invers dual, serta orde parsial D-group dan D-core beserta karakterisasi
real-nya.

Flag hipotesis dilaporkan terpisah dari flag kesimpulan; hipotesis hanya
syarat cukup, jadi sebuah hukum bisa berlaku walau hipotesisnya gagal.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from src.core_logic.dualgi import dcgi, dcgi_candidate_dual, ddgi, dggi, dmpgi
from src.core_logic.dualmat import DualMatrix, add, dual_distance, multiply
from src.core_logic.errors import NoDCGI, NoDDGI, NoDGGI, NoDMPGI, ShapeMismatch
from src.core_logic.realgi import (
    DEFAULT_TOLERANCES,
    Tolerances,
    core_inverse,
    drazin_inverse,
    group_inverse,
    mp_inverse,
    null_equal,
    range_equal,
    relative_residual,
)


class GInverseKind(str, Enum):
    MP = "mp"
    GROUP = "group"
    DRAZIN = "drazin"
    CORE = "core"


@dataclass(frozen=True)
class HypothesisFlag:
    """Data class untuk satu hipotesis: flag beserta residualnya"""
    holds: bool
    residual: float


@dataclass(frozen=True)
class LawReport:
    """Data class untuk hasil pemeriksaan hukum urutan"""
    kind: str
    hypotheses: Dict[str, HypothesisFlag]
    reverse_holds: Optional[bool]
    forward_holds: Optional[bool]
    distances: Dict[str, float]
    absorption_holds: Optional[bool] = None

    @property
    def all_hypotheses(self) -> bool:
        return all(flag.holds for flag in self.hypotheses.values())


@dataclass(frozen=True)
class PartialOrderReport:
    """Data class untuk temuan aksioma orde parsial pada sebuah rantai"""
    reflexive: bool
    antisymmetric: bool
    transitive: bool
    violations: List[str] = field(default_factory=list)


_GENERAL = {
    GInverseKind.GROUP: (dggi, NoDGGI),
    GInverseKind.DRAZIN: (ddgi, NoDDGI),
    GInverseKind.MP: (dmpgi, NoDMPGI),
    GInverseKind.CORE: (dcgi, NoDCGI),
}


def _require_square(M: DualMatrix) -> None:
    if not M.is_square:
        raise ShapeMismatch(f"Hukum urutan membutuhkan matriks persegi, didapat {M.shape}")


def real_inverse(kind: GInverseKind, A: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """A^c untuk c ∈ {†, #, D, ⊕}."""
    kind = GInverseKind(kind)
    if kind is GInverseKind.MP:
        return mp_inverse(A, tol)
    if kind is GInverseKind.GROUP:
        return group_inverse(A, tol)
    if kind is GInverseKind.DRAZIN:
        return drazin_inverse(A, tol)[0]
    return core_inverse(A, tol)


def particular_form(kind: GInverseKind, M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> DualMatrix:
    """
    Bentuk partikular Â^c = A^c − ε·A^c·B·A^c.

    Raises:
        NoGroupInverse / NoCoreInverse: Jika invers real jenis tersebut tidak ada.
    """
    Ac = real_inverse(kind, M.real, tol)
    return DualMatrix(Ac, -Ac @ M.dual @ Ac)


def general_form(kind: GInverseKind, M: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> DualMatrix:
    """
    Invers dual umum sesuai jenis: DGGI, DDGI, DMPGI atau DCGI.

    Raises:
        NoDGGI / NoDDGI / NoDMPGI / NoDCGI: Jika invers tersebut tidak ada.
    """
    constructor, missing = _GENERAL[GInverseKind(kind)]
    result = constructor(M, tol)
    if not result.exists:
        raise missing(f"{result.kind.value} tidak ada ({result.reason})")
    return result.inverse


def _flag(residual: float, tol: Tolerances) -> HypothesisFlag:
    return HypothesisFlag(holds=residual <= tol.resid_rel, residual=float(residual))


def check_order_law(kind: GInverseKind, M: DualMatrix, N: DualMatrix,
                    tol: Tolerances = DEFAULT_TOLERANCES, form: str = "particular") -> LawReport:
    """
    Memeriksa (ÂĈ)^c = Â^cĈ^c (forward) dan (ÂĈ)^c = Ĉ^cÂ^c (reverse).

    Args:
        kind (GInverseKind): Jenis invers (mp, group, drazin, core).
        M (DualMatrix): Â = A + εB.
        N (DualMatrix): Ĉ = C + εD.
        tol (Tolerances): Ambang numerik.
        form (str): "particular" untuk A^c − εA^cBA^c, "general" untuk invers dual umum.

    Returns:
        LawReport: Flag hipotesis, flag hukum, dan jarak berpasangan.
    """
    kind = GInverseKind(kind)
    if form not in ("particular", "general"):
        raise ValueError(f"form harus 'particular' atau 'general', didapat {form!r}")
    _require_square(M)
    _require_square(N)
    if M.shape != N.shape:
        raise ShapeMismatch(f"Bentuk Â {M.shape} dan Ĉ {N.shape} berbeda")

    invert = particular_form if form == "particular" else general_form
    product = multiply(M, N)
    inv_product, inv_m, inv_n = invert(kind, product, tol), invert(kind, M, tol), invert(kind, N, tol)
    forward = multiply(inv_m, inv_n)
    reverse = multiply(inv_n, inv_m)
    distances = {
        "product_vs_forward": dual_distance(inv_product, forward),
        "product_vs_reverse": dual_distance(inv_product, reverse),
        "forward_vs_reverse": dual_distance(forward, reverse),
    }

    A, B, C, D = M.real, M.dual, N.real, N.dual
    Ac, Cc = real_inverse(kind, A, tol), real_inverse(kind, C, tol)
    hypotheses = {
        "ac_commute": _flag(relative_residual(A @ C, C @ A), tol),
        "cc_b_commute": _flag(relative_residual(Cc @ B, B @ Cc), tol),
        "ac_d_commute": _flag(relative_residual(Ac @ D, D @ Ac), tol),
    }
    if kind in (GInverseKind.MP, GInverseKind.CORE):
        hypotheses["at_c_commute"] = _flag(relative_residual(A.T @ C, C @ A.T), tol)

    report = LawReport(
        kind=kind.value,
        hypotheses=hypotheses,
        reverse_holds=distances["product_vs_reverse"] <= tol.resid_rel,
        forward_holds=distances["product_vs_forward"] <= tol.resid_rel,
        distances=distances,
    )
    logging.debug(f"📐 Hukum urutan {kind.value} ({form}): hipotesis={report.all_hypotheses}, "
                  f"forward={report.forward_holds}, reverse={report.reverse_holds}")
    return report


def absorption_check(M: DualMatrix, N: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> LawReport:
    """
    Membandingkan Â^D(Â + Ĉ)Ĉ^D dengan Â^D + Ĉ^D (bentuk partikular Drazin).

    Hipotesis yang dilaporkan: A = Ĉ.dual, R(A) = R(C), N(A) = N(C).
    """
    _require_square(M)
    if M.shape != N.shape:
        raise ShapeMismatch(f"Bentuk Â {M.shape} dan Ĉ {N.shape} berbeda")
    MD = particular_form(GInverseKind.DRAZIN, M, tol)
    ND = particular_form(GInverseKind.DRAZIN, N, tol)
    lhs = multiply(multiply(MD, add(M, N)), ND)
    rhs = add(MD, ND)
    gap = dual_distance(lhs, rhs)

    A, C = M.real, N.real
    same_range = range_equal(A, C, tol)
    same_null = null_equal(A, C, tol)
    hypotheses = {
        "a_equals_c_dual": _flag(relative_residual(A, N.dual), tol),
        "range_equal": HypothesisFlag(same_range, 0.0 if same_range else 1.0),
        "null_equal": HypothesisFlag(same_null, 0.0 if same_null else 1.0),
    }
    return LawReport(
        kind="absorption",
        hypotheses=hypotheses,
        reverse_holds=None,
        forward_holds=None,
        distances={"absorption": gap},
        absorption_holds=gap <= tol.resid_rel,
    )


def _one_sided_equalities(X: DualMatrix, Y: DualMatrix, Xi: DualMatrix, tol: Tolerances) -> bool:
    left = dual_distance(multiply(Xi, X), multiply(Xi, Y))
    right = dual_distance(multiply(X, Xi), multiply(Y, Xi))
    return max(left, right) <= tol.resid_rel


def _check_pair(X: DualMatrix, Y: DualMatrix) -> None:
    if not X.is_square or X.shape != Y.shape:
        raise ShapeMismatch(f"Orde parsial membutuhkan dua matriks persegi sebentuk: {X.shape} vs {Y.shape}")


def d_group_leq(X: DualMatrix, Y: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """
    X̂ ≤ Ŷ pada orde D-group: X̂^#X̂ = X̂^#Ŷ dan X̂X̂^# = ŶX̂^#.

    Raises:
        NoDGGI: Jika DGGI dari X̂ tidak ada.
    """
    _check_pair(X, Y)
    return _one_sided_equalities(X, Y, general_form(GInverseKind.GROUP, X, tol), tol)


def sharp_leq(X: np.ndarray, Y: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """Orde sharp real: X^#X = X^#Y dan XX^# = YX^#."""
    Xg = group_inverse(X, tol)
    return max(relative_residual(Xg @ X, Xg @ Y), relative_residual(X @ Xg, Y @ Xg)) <= tol.resid_rel


def core_leq(X: np.ndarray, Y: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """Orde core real: X^⊕X = X^⊕Y dan XX^⊕ = YX^⊕."""
    Xc = core_inverse(X, tol)
    return max(relative_residual(Xc @ X, Xc @ Y), relative_residual(X @ Xc, Y @ Xc)) <= tol.resid_rel


def _dual_part_equalities(X: DualMatrix, Y: DualMatrix, Xi: np.ndarray, R: np.ndarray) -> float:
    X1, X0, Y1, Y0 = X.real, X.dual, Y.real, Y.dual
    return max(
        relative_residual(Xi @ X0 + R @ X1, Xi @ Y0 + R @ Y1),
        relative_residual(X1 @ R + X0 @ Xi, Y1 @ R + Y0 @ Xi),
    )


def d_group_leq_char(X: DualMatrix, Y: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """
    Karakterisasi real orde D-group: X ≤^# Y, X^#X₀ + RX = X^#Y₀ + RY,
    XR + X₀X^# = YR + Y₀X^#, dengan R bagian dual rumus DGGI.

    Raises:
        NoGroupInverse: Jika invers grup dari X tidak ada.
    """
    _check_pair(X, Y)
    Xg = group_inverse(X.real, tol)
    E = np.eye(X.shape[0]) - X.real @ Xg
    Xg2 = Xg @ Xg
    R = -Xg @ X.dual @ Xg + Xg2 @ X.dual @ E + E @ X.dual @ Xg2
    if not sharp_leq(X.real, Y.real, tol):
        return False
    return _dual_part_equalities(X, Y, Xg, R) <= tol.resid_rel


def d_core_leq(X: DualMatrix, Y: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """
    X̂ ≤ Ŷ pada orde D-core: X̂^⊕X̂ = X̂^⊕Ŷ dan X̂X̂^⊕ = ŶX̂^⊕ (DCGI umum).

    Raises:
        NoDCGI: Jika DCGI dari X̂ tidak ada.
    """
    _check_pair(X, Y)
    return _one_sided_equalities(X, Y, general_form(GInverseKind.CORE, X, tol), tol)


def d_core_leq_char(X: DualMatrix, Y: DualMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """
    Karakterisasi real orde D-core: X ≤^⊕ Y plus dua kesamaan bagian dual dengan
    R kandidat DCGI.

    Raises:
        NoCoreInverse: Jika invers core dari X tidak ada.
    """
    _check_pair(X, Y)
    Xc = core_inverse(X.real, tol)
    R = dcgi_candidate_dual(X.real, X.dual, tol)
    if not core_leq(X.real, Y.real, tol):
        return False
    return _dual_part_equalities(X, Y, Xc, R) <= tol.resid_rel


_ORDERS: Dict[str, Callable[[DualMatrix, DualMatrix, Tolerances], bool]] = {
    "group": d_group_leq,
    "core": d_core_leq,
}


def _leq_or_none(order: str, X: DualMatrix, Y: DualMatrix, tol: Tolerances) -> Optional[bool]:
    """None jika relasi tidak terdefinisi (invers elemen kiri tidak ada)."""
    try:
        return _ORDERS[order](X, Y, tol)
    except (NoDGGI, NoDCGI):
        return None


def check_partial_order(chain: Sequence[DualMatrix], order: str = "group",
                        tol: Tolerances = DEFAULT_TOLERANCES) -> PartialOrderReport:
    """
    Memeriksa refleksivitas, antisimetri dan transitivitas pada sebuah rantai.

    Pelanggaran dicatat sebagai temuan (warning), bukan exception.
    """
    if order not in _ORDERS:
        raise ValueError(f"Orde tidak dikenal: {order!r}")
    violations = []
    reflexive = antisymmetric = transitive = True

    for i, X in enumerate(chain):
        if _leq_or_none(order, X, X, tol) is False:
            reflexive = False
            violations.append(f"reflexive[{i}]")

    for i, j in combinations(range(len(chain)), 2):
        forward = _leq_or_none(order, chain[i], chain[j], tol)
        backward = _leq_or_none(order, chain[j], chain[i], tol)
        if forward and backward and dual_distance(chain[i], chain[j]) > tol.resid_rel:
            antisymmetric = False
            violations.append(f"antisymmetric[{i},{j}]")

    for i, j, k in combinations(range(len(chain)), 3):
        if _leq_or_none(order, chain[i], chain[j], tol) and _leq_or_none(order, chain[j], chain[k], tol):
            if not _leq_or_none(order, chain[i], chain[k], tol):
                transitive = False
                violations.append(f"transitive[{i},{j},{k}]")

    for violation in violations:
        logging.warning(f"⚠️ Temuan orde {order}: pelanggaran {violation}")
    return PartialOrderReport(reflexive, antisymmetric, transitive, violations)
