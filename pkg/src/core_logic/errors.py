# src/core_logic/errors.py

"""
Hierarki exception untuk toolkit dualgi.

Ketiadaan invers dual dilaporkan sebagai nilai (``InverseResult.exists = False``),
bukan exception. Exception di sini dipakai untuk kesalahan bentuk/parsing,
prasyarat yang dilanggar, dan kegagalan numerik.
"""


class DualGIError(Exception):
    """Root dari semua error toolkit dualgi."""


class ShapeMismatch(DualGIError, ValueError):
    """Dimensi operand tidak cocok (perkalian, penjumlahan, sistem linear)."""


class ParseError(DualGIError, ValueError):
    """Dokumen input tidak bisa dibaca sebagai matriks/vektor dual."""


class BadShapeParams(DualGIError, ValueError):
    """Parameter (n, r, k) generator fixture tidak valid."""


class NoGroupInverse(DualGIError):
    """Invers grup real tidak ada (index(A) >= 2)."""


class NoCoreInverse(DualGIError):
    """Invers core real tidak ada (index(A) >= 2)."""


class NoDDGI(DualGIError):
    """DDGI dari matriks dual tidak ada."""


class NoDGGI(DualGIError):
    """DGGI dari matriks dual tidak ada."""


class NoDMPGI(DualGIError):
    """DMPGI dari matriks dual tidak ada."""


class NoDCGI(DualGIError):
    """DCGI dari matriks dual tidak ada."""


class Inconsistent(DualGIError):
    """Sistem linear dual tidak konsisten."""


class HypothesisFailed(DualGIError):
    """Hipotesis sebuah rumus khusus tidak terpenuhi."""


class DecompositionFailure(DualGIError):
    """Dekomposisi core-nilpotent gagal direkonstruksi (sinyal ill-conditioning)."""
