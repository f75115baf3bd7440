# src/core_logic/fixtures.py

"""
Generator fixture ber-seed untuk matriks dual dengan struktur terjamin.

Semua generator deterministik terhadap (parameter, seed): keacakan hanya
berasal dari ``numpy.random.default_rng(seed)``.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.linalg as sla

from src.core_logic.dualgi import ddgi_canonical
from src.core_logic.dualmat import DualMatrix
from src.core_logic.errors import BadShapeParams, DecompositionFailure

MAX_COND_P = 100.0
MAX_COND_C = 20.0
_MAX_ATTEMPTS = 500
B4_MODES = ("zero", "violate", "nontrivial")
COMMUTING_KINDS = ("group", "drazin", "mp", "core")


@dataclass(frozen=True)
class CanonicalDual:
    """Data class untuk Â = P·blockdiag(C, N)·P⁻¹ + ε·P·[[B₁, B₂], [B₃, B₄]]·P⁻¹"""
    P: np.ndarray
    P_inv: np.ndarray
    C: np.ndarray
    N: np.ndarray
    B1: np.ndarray
    B2: np.ndarray
    B3: np.ndarray
    B4: np.ndarray
    k: int

    def assemble(self) -> DualMatrix:
        real = sla.block_diag(self.C, self.N)
        dual = np.block([[self.B1, self.B2], [self.B3, self.B4]])
        return DualMatrix(self.P @ real @ self.P_inv, self.P @ dual @ self.P_inv)

    def expected_ddgi(self) -> DualMatrix:
        """DDGI dari koordinat kanonik, hanya bermakna jika syarat B₄ terpenuhi."""
        return ddgi_canonical(self.P, self.P_inv, self.C, self.N, self.B1, self.B2, self.B3, self.k)


def _ints(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.integers(-3, 4, size=shape).astype(float)


def _unimodular(rng: np.random.Generator, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    P hasil perkalian operasi baris elementer bilangan bulat (pengali ±1),
    P⁻¹ dibangun eksak bersamaan. cond(P) <= MAX_COND_P lewat rejection.
    """
    for _ in range(_MAX_ATTEMPTS):
        P = np.eye(n)
        P_inv = np.eye(n)
        for _ in range(n if n > 1 else 0):
            i, j = rng.choice(n, size=2, replace=False)
            m = float(rng.choice([-1, 1]))
            P[i, :] += m * P[j, :]
            P_inv[:, j] -= m * P_inv[:, i]
        if np.linalg.cond(P) <= MAX_COND_P:
            return P, P_inv
    raise DecompositionFailure(f"Gagal mengambil P dengan cond <= {MAX_COND_P} untuk n={n}")


def _triangular_core(rng: np.random.Generator, r: int) -> np.ndarray:
    """C segitiga atas: diagonal dari {±1, ±2}, off-diagonal dari {−1, 0, 1}."""
    for _ in range(_MAX_ATTEMPTS):
        C = np.diag(rng.choice([-2.0, -1.0, 1.0, 2.0], size=r))
        upper = rng.choice([-1.0, 0.0, 1.0], size=(r, r), p=[0.15, 0.7, 0.15])
        C += np.triu(upper, 1)
        if r == 0 or np.linalg.cond(C) <= MAX_COND_C:
            return C
    raise DecompositionFailure(f"Gagal mengambil C dengan cond <= {MAX_COND_C} untuk r={r}")


def nilpotent_block(m: int, k: int) -> np.ndarray:
    """N = blockdiag(J_k, 0) berukuran m×m dengan index k (J_k: satu di superdiagonal)."""
    N = np.zeros((m, m))
    for i in range(max(k - 1, 0)):
        N[i, i + 1] = 1.0
    return N


def _constraint_operator(N: np.ndarray, k: int) -> np.ndarray:
    """Matriks dari B₄ ↦ Σ_{i=0}^{k−1} N^(k−1−i)·B₄·N^i terhadap vec kolom-mayor."""
    m = N.shape[0]
    L = np.zeros((m * m, m * m))
    for i in range(k):
        L += np.kron(np.linalg.matrix_power(N, i).T, np.linalg.matrix_power(N, k - 1 - i))
    return L


def _sample_b4(rng: np.random.Generator, N: np.ndarray, k: int, mode: str) -> np.ndarray:
    m = N.shape[0]
    if mode == "zero" or m == 0:
        return np.zeros((m, m))
    if mode == "violate":
        # Σ N^(k−1−i)·e_(k−1)·e_0ᵀ·N^i = I_k pada blok Jordan
        B4 = np.zeros((m, m))
        B4[k - 1, 0] = 1.0
        return B4
    basis = sla.null_space(_constraint_operator(N, k))
    if basis.shape[1] == 0:
        return np.zeros((m, m))
    coeffs = _ints(rng, basis.shape[1])
    if not np.any(coeffs):
        coeffs[0] = 1.0
    return (basis @ coeffs).reshape((m, m), order="F")


def gen_ddgi_canonical(n: int, r: int, k: int, seed: int, *, b4: str = "zero") -> CanonicalDual:
    """
    Membangkitkan matriks dual dalam bentuk kanonik core-nilpotent.

    Args:
        n (int): Ukuran matriks.
        r (int): Ukuran blok core C, 1 <= r <= n.
        k (int): Index blok nilpoten, 1 <= k <= n − r; diabaikan (jadi 0) saat r = n.
        seed (int): Seed generator.
        b4 (str): "zero" (memenuhi syarat eksistensi), "violate" (kontrol negatif),
            atau "nontrivial" (B₄ ≠ 0 dari null space operator syarat).

    Returns:
        CanonicalDual: Semua blok beserta P dan P⁻¹.

    Raises:
        BadShapeParams: Jika (n, r, k) atau mode b4 tidak valid.
    """
    if b4 not in B4_MODES:
        raise BadShapeParams(f"Mode b4 tidak dikenal: {b4!r}")
    if n < 1 or not 1 <= r <= n:
        raise BadShapeParams(f"Dibutuhkan 1 <= r <= n, didapat n={n}, r={r}")
    m = n - r
    if m == 0:
        k = 0
    elif not 1 <= k <= m:
        raise BadShapeParams(f"Dibutuhkan 1 <= k <= n − r = {m}, didapat k={k}")

    rng = np.random.default_rng(seed)
    P, P_inv = _unimodular(rng, n)
    C = _triangular_core(rng, r)
    N = nilpotent_block(m, k)
    fixture = CanonicalDual(
        P=P, P_inv=P_inv, C=C, N=N,
        B1=_ints(rng, (r, r)), B2=_ints(rng, (r, m)), B3=_ints(rng, (m, r)),
        B4=_sample_b4(rng, N, k, b4), k=k,
    )
    logging.debug(f"🧪 Fixture kanonik n={n}, r={r}, k={k}, b4={b4}, seed={seed}")
    return fixture


def gen_ddgi_invertible(n: int, r: int, k: int, seed: int) -> DualMatrix:
    """Matriks dual dengan index(A) = k yang DDGI-nya ada (B₄ = 0)."""
    return gen_ddgi_canonical(n, r, k, seed).assemble()


def gen_group_invertible(n: int, r: int, seed: int, *, b4: str = "zero") -> DualMatrix:
    """
    Matriks dual dengan index(A) <= 1: N = 0, sehingga DGGI ada tepat ketika B₄ = 0.
    Mode "violate" memberi blok kanan-bawah tak nol sebagai kontrol negatif.
    """
    return gen_ddgi_canonical(n, r, 1, seed, b4=b4).assemble()


def _lift(P: np.ndarray, P_inv: np.ndarray, core: np.ndarray, dual: np.ndarray,
          Bm: np.ndarray, Y4: np.ndarray) -> Tuple[DualMatrix, np.ndarray, np.ndarray]:
    """
    Ŷ = P·diag(C, B)·P⁻¹ + ε·P·[[X₁, X₂ − C⁻¹X₂B], [X₃ − BX₃C⁻¹, Y₄]]·P⁻¹,
    yang berada di atas X̂ = P·diag(C, 0)·P⁻¹ + ε·P·[[X₁, X₂], [X₃, 0]]·P⁻¹.
    """
    r = core.shape[0]
    X1, X2, X3 = dual[:r, :r], dual[:r, r:], dual[r:, :r]
    C_inv = np.linalg.inv(core)
    real = sla.block_diag(core, Bm)
    upper = np.block([[X1, X2 - C_inv @ X2 @ Bm], [X3 - Bm @ X3 @ C_inv, Y4]])
    return DualMatrix(P @ real @ P_inv, P @ upper @ P_inv), real, upper


def gen_ordered_pair(n: int, r: int, seed: int, *, zero_b: bool = False,
                     zero_y4: bool = False) -> Tuple[DualMatrix, DualMatrix]:
    """
    Pasangan X̂ ≤ Ŷ pada orde D-group.

    Args:
        n (int): Ukuran matriks.
        r (int): Rank bagian real X̂, 1 <= r < n.
        seed (int): Seed generator.
        zero_b (bool): Blok B = 0 pada bagian real Ŷ.
        zero_y4 (bool): Blok Y₄ = 0 pada bagian dual Ŷ; bersama zero_b memberi Ŷ = X̂.

    Raises:
        BadShapeParams: Jika tidak 1 <= r < n.
    """
    if not 1 <= r < n:
        raise BadShapeParams(f"Dibutuhkan 1 <= r < n, didapat n={n}, r={r}")
    base = gen_ddgi_canonical(n, r, 1, seed)
    rng = np.random.default_rng([seed, 1])
    m = n - r
    Bm = np.zeros((m, m)) if zero_b else _ints(rng, (m, m))
    Y4 = np.zeros((m, m)) if zero_y4 else _ints(rng, (m, m))
    lower = base.assemble()
    upper, _, _ = _lift(base.P, base.P_inv, base.C, np.block([[base.B1, base.B2], [base.B3, base.B4]]), Bm, Y4)
    return lower, upper


def gen_ordered_chain(n: int, r: int, s: int, seed: int) -> Tuple[DualMatrix, DualMatrix, DualMatrix]:
    """
    Rantai X̂ ≤ Ŷ ≤ Ẑ dari dua kali konstruksi pasangan terurut.

    Ŷ memakai B = diag(C₂, 0) dan Y₄ dengan blok kanan-bawah nol, sehingga DGGI
    Ŷ ada dengan core diag(C, C₂) berukuran s.

    Raises:
        BadShapeParams: Jika tidak 1 <= r < s < n.
    """
    if not 1 <= r < s < n:
        raise BadShapeParams(f"Dibutuhkan 1 <= r < s < n, didapat n={n}, r={r}, s={s}")
    base = gen_ddgi_canonical(n, r, 1, seed)
    rng = np.random.default_rng([seed, 2])
    m, t = n - r, s - r
    C2 = _triangular_core(rng, t)
    Bm = sla.block_diag(C2, np.zeros((n - s, n - s)))
    Y4 = _ints(rng, (m, m))
    Y4[t:, t:] = 0.0

    X = base.assemble()
    base_dual = np.block([[base.B1, base.B2], [base.B3, base.B4]])
    Y, y_real, y_dual = _lift(base.P, base.P_inv, base.C, base_dual, Bm, Y4)
    Z, _, _ = _lift(base.P, base.P_inv, y_real[:s, :s], y_dual,
                    _ints(rng, (n - s, n - s)), _ints(rng, (n - s, n - s)))
    return X, Y, Z


def _distinct_eigenvalues(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    values = rng.permutation(np.arange(-n, n + 1))[:count].astype(float)
    if count and not np.any(values == 0):
        values[0] = 0.0
    return values


def _polynomial(rng: np.random.Generator, J: np.ndarray) -> np.ndarray:
    coeffs = rng.integers(-2, 3, size=3)
    return sum(c * np.linalg.matrix_power(J, i) for i, c in enumerate(coeffs))


def gen_commuting_pair(kind: str, n: int, seed: int) -> Tuple[DualMatrix, DualMatrix]:
    """
    Pasangan (Â, Ĉ) yang semua bagiannya polinomial dari satu matriks M = S·J·S⁻¹.

    Untuk kind "mp" dan "core" S ortogonal dan J diagonal, sehingga M simetris dan
    syarat transpose ikut terpenuhi. Untuk "drazin" dengan n >= 3, J memuat blok
    Jordan nilpoten berukuran 2 agar index bisa 2.

    Raises:
        BadShapeParams: Jika n < 1 atau kind tidak dikenal.
    """
    if kind not in COMMUTING_KINDS:
        raise BadShapeParams(f"Jenis pasangan komutatif tidak dikenal: {kind!r}")
    if n < 1:
        raise BadShapeParams(f"Dibutuhkan n >= 1, didapat {n}")
    rng = np.random.default_rng(seed)

    if kind in ("mp", "core"):
        S, _ = np.linalg.qr(rng.standard_normal((n, n)))
        S_inv = S.T
    else:
        S, S_inv = _unimodular(rng, n)

    jordan = 2 if kind == "drazin" and n >= 3 else 0
    J = np.diag(_distinct_eigenvalues(rng, n - jordan, n))
    if jordan:
        J = sla.block_diag(J, nilpotent_block(jordan, jordan))

    A, B, C, D = (S @ _polynomial(rng, J) @ S_inv for _ in range(4))
    return DualMatrix(A, B), DualMatrix(C, D)


def gen_absorption_pair(n: int, seed: int) -> Tuple[DualMatrix, DualMatrix]:
    """
    Pasangan dengan C = A·Q (Q nonsingular, komutatif dengan A) dan Ĉ.dual = A,
    sehingga R(A) = R(C), N(A) = N(C) dan A = Ĉ.dual sekaligus.
    """
    if n < 1:
        raise BadShapeParams(f"Dibutuhkan n >= 1, didapat {n}")
    rng = np.random.default_rng(seed)
    S, S_inv = _unimodular(rng, n)
    a = _ints(rng, n)
    if n > 1:
        a[0] = 0.0
    q = rng.choice([-3.0, -2.0, -1.0, 1.0, 2.0, 3.0], size=n)
    b = _ints(rng, n)
    A = S @ np.diag(a) @ S_inv
    C = S @ np.diag(a * q) @ S_inv
    B = S @ np.diag(b) @ S_inv
    return DualMatrix(A, B), DualMatrix(C, A)
