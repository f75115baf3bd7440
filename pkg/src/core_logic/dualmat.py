# src/core_logic/dualmat.py

"""
Aritmetika matriks dual dan vektor dual dengan ε² = 0.

Matriks dual Â = A + εB disimpan sebagai pasangan (real, dual) dari array
numpy berbentuk sama. Nilainya immutable: array internal dibuat read-only.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from src.core_logic.errors import ShapeMismatch
from src.core_logic.realgi import fro


def _frozen(values, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != ndim:
        raise ShapeMismatch(f"Diharapkan array {ndim}-D, didapat ndim={arr.ndim}")
    if not np.all(np.isfinite(arr)):
        raise ShapeMismatch("Nilai non-finite pada bagian real/dual")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class DualMatrix:
    """Data class untuk matriks dual Â = real + ε·dual"""
    real: np.ndarray
    dual: np.ndarray

    def __post_init__(self):
        real = _frozen(self.real, 2)
        dual = _frozen(self.dual, 2) if self.dual is not None else _frozen(np.zeros_like(real), 2)
        if real.shape != dual.shape:
            raise ShapeMismatch(f"Bagian real {real.shape} dan dual {dual.shape} harus sama bentuk")
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "dual", dual)

    @classmethod
    def from_real(cls, A) -> "DualMatrix":
        A = np.asarray(A, dtype=float)
        return cls(A, np.zeros_like(A))

    @classmethod
    def zeros(cls, rows: int, cols: int = None) -> "DualMatrix":
        cols = rows if cols is None else cols
        return cls(np.zeros((rows, cols)), np.zeros((rows, cols)))

    @classmethod
    def identity(cls, n: int) -> "DualMatrix":
        return cls(np.eye(n), np.zeros((n, n)))

    @property
    def shape(self):
        return self.real.shape

    @property
    def is_square(self) -> bool:
        return self.real.shape[0] == self.real.shape[1]

    @property
    def T(self) -> "DualMatrix":
        return transpose(self)

    def to_lists(self) -> dict:
        return {"real": self.real.tolist(), "dual": self.dual.tolist()}

    def __matmul__(self, other):
        if isinstance(other, DualVector):
            return apply(self, other)
        return multiply(self, other)

    def __add__(self, other: "DualMatrix") -> "DualMatrix":
        return add(self, other)

    def __sub__(self, other: "DualMatrix") -> "DualMatrix":
        return add(self, scale(-1.0, other))

    def __neg__(self) -> "DualMatrix":
        return scale(-1.0, self)

    def __mul__(self, c: float) -> "DualMatrix":
        return scale(c, self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"DualMatrix(shape={self.shape},\n real={self.real!r},\n dual={self.dual!r})"


@dataclass(frozen=True, eq=False)
class DualVector:
    """Data class untuk vektor dual x̂ = real + ε·dual"""
    real: np.ndarray
    dual: np.ndarray

    def __post_init__(self):
        real = _frozen(np.ravel(self.real), 1)
        dual = _frozen(np.ravel(self.dual), 1) if self.dual is not None else _frozen(np.zeros_like(real), 1)
        if real.shape != dual.shape:
            raise ShapeMismatch(f"Panjang real {real.shape[0]} dan dual {dual.shape[0]} berbeda")
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "dual", dual)

    @classmethod
    def zeros(cls, n: int) -> "DualVector":
        return cls(np.zeros(n), np.zeros(n))

    def __len__(self) -> int:
        return self.real.shape[0]

    def to_lists(self) -> dict:
        # Format kolom tunggal, sama dengan format input file
        return {"real": [[v] for v in self.real.tolist()], "dual": [[v] for v in self.dual.tolist()]}

    def __add__(self, other: "DualVector") -> "DualVector":
        if len(self) != len(other):
            raise ShapeMismatch(f"Panjang vektor {len(self)} vs {len(other)}")
        return DualVector(self.real + other.real, self.dual + other.dual)

    def __sub__(self, other: "DualVector") -> "DualVector":
        return self + other * -1.0

    def __mul__(self, c: float) -> "DualVector":
        return DualVector(c * self.real, c * self.dual)

    __rmul__ = __mul__


DualValue = Union[DualMatrix, DualVector]


def multiply(L: DualMatrix, R: DualMatrix) -> DualMatrix:
    """
    Perkalian matriks dual: (A + εB)(C + εD) = AC + ε(AD + BC).

    Raises:
        ShapeMismatch: Jika dimensi dalam tidak cocok.
    """
    if L.shape[1] != R.shape[0]:
        raise ShapeMismatch(f"Dimensi dalam tidak cocok: {L.shape} · {R.shape}")
    return DualMatrix(L.real @ R.real, L.real @ R.dual + L.dual @ R.real)


def apply(M: DualMatrix, x: DualVector) -> DualVector:
    """(A + εB)(x + εy) = Ax + ε(Ay + Bx)."""
    if M.shape[1] != len(x):
        raise ShapeMismatch(f"Dimensi tidak cocok: {M.shape} · {len(x)}")
    return DualVector(M.real @ x.real, M.real @ x.dual + M.dual @ x.real)


def power(M: DualMatrix, k: int) -> DualMatrix:
    """
    Pangkat Â^k = A^k + ε·Σ_{i=0}^{k-1} A^(k-1-i)·B·A^i, dengan Â^0 = I + ε0.

    Args:
        M (DualMatrix): Matriks dual persegi.
        k (int): Pangkat, k >= 0.

    Returns:
        DualMatrix: Â^k. Bagian dual-nya adalah D pada rumus DDGI.
    """
    if not M.is_square:
        raise ShapeMismatch(f"Pangkat hanya untuk matriks persegi, didapat {M.shape}")
    if k < 0:
        raise ValueError(f"Pangkat harus >= 0, didapat {k}")
    result = DualMatrix.identity(M.shape[0])
    for _ in range(k):
        result = multiply(result, M)
    return result


def add(L: DualMatrix, R: DualMatrix) -> DualMatrix:
    """Penjumlahan komponen demi komponen."""
    if L.shape != R.shape:
        raise ShapeMismatch(f"Bentuk tidak cocok untuk penjumlahan: {L.shape} vs {R.shape}")
    return DualMatrix(L.real + R.real, L.dual + R.dual)


def scale(c: float, M: DualMatrix) -> DualMatrix:
    """Perkalian skalar real c·Â."""
    return DualMatrix(c * M.real, c * M.dual)


def transpose(M: DualMatrix) -> DualMatrix:
    """Transpose kedua bagian."""
    return DualMatrix(M.real.T, M.dual.T)


def dual_distance(L: DualValue, R: DualValue) -> float:
    """
    Jarak dual: maksimum dari jarak Frobenius relatif bagian real dan bagian dual.

    Setiap bagian dinormalisasi dengan 1 + min(‖L‖_F, ‖R‖_F), sehingga
    (I, 2I) untuk n = 1 menghasilkan 0.5 dan jarak terhadap nol bersifat absolut.

    Raises:
        ShapeMismatch: Jika bentuk kedua operand berbeda.
    """
    if type(L) is not type(R) or L.real.shape != R.real.shape:
        raise ShapeMismatch(f"Operand jarak tidak cocok: {L.real.shape} vs {R.real.shape}")
    distances = []
    for left, right in ((L.real, R.real), (L.dual, R.dual)):
        distances.append(fro(left - right) / (1.0 + min(fro(left), fro(right))))
    return float(max(distances))
