# src/core_logic/utils.py

"""
Utilitas I/O: parsing dokumen matriks dual, serialisasi laporan, dan setup logging.
"""

import json
import logging
import math
import os
import re
import sys
from dataclasses import asdict, is_dataclass
from datetime import datetime
from enum import Enum
from typing import Any, Dict, Union

import numpy as np

from src.core_logic.dualmat import DualMatrix, DualVector
from src.core_logic.errors import ParseError, ShapeMismatch

PathOrText = Union[str, os.PathLike]

# json meng-escape \x00 menjadi \u0000
_FLOAT_TOKEN = re.compile(r'"\\u0000f(\d+)\\u0000"')


def setup_logging(log_dir: str = "logs", level: str = "INFO") -> None:
    """
    Mengonfigurasi logging ke file harian dan ke stderr.

    Stdout tidak pernah dipakai untuk log; stdout hanya memuat dokumen laporan.

    Args:
        log_dir (str): Direktori file log; string kosong menonaktifkan file handler.
        level (str): Nama level logging (DEBUG, INFO, WARNING, ...).
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        log_filename = datetime.now().strftime("dualgi_%Y-%m-%d.log")
        handlers.insert(0, logging.FileHandler(os.path.join(log_dir, log_filename), encoding="utf-8"))

    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format="%(asctime)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )


def _load_document(source: PathOrText) -> Any:
    """Membaca JSON dari path file, atau langsung dari teks jika bukan path."""
    try:
        if os.path.isfile(source):
            with open(source, "r", encoding="utf-8") as f:
                return json.load(f)
        return json.loads(str(source))
    except json.JSONDecodeError as e:
        raise ParseError(f"Dokumen bukan JSON yang valid ({source}): {e}") from e
    except OSError as e:
        raise ParseError(f"Gagal membaca file {source}: {e}") from e


def _numeric_rows(value: Any, field: str) -> np.ndarray:
    if not isinstance(value, list) or not value:
        raise ParseError(f"Field '{field}' harus berupa list baris yang tidak kosong")
    rows = [row if isinstance(row, list) else [row] for row in value]
    widths = {len(row) for row in rows}
    if len(widths) != 1 or 0 in widths:
        raise ParseError(f"Baris pada field '{field}' memiliki panjang tidak seragam atau kosong")
    for row in rows:
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, (int, float)):
                raise ParseError(f"Entri non-numerik pada field '{field}': {entry!r}")
    return np.array(rows, dtype=float)


def _parse_parts(source: PathOrText) -> tuple:
    document = _load_document(source)
    if not isinstance(document, dict) or "real" not in document:
        raise ParseError("Dokumen harus berupa objek dengan field 'real' (dan opsional 'dual')")
    real = _numeric_rows(document["real"], "real")
    dual = document.get("dual")
    dual = np.zeros_like(real) if dual is None else _numeric_rows(dual, "dual")
    if real.shape != dual.shape:
        raise ShapeMismatch(f"Bentuk 'real' {real.shape} dan 'dual' {dual.shape} berbeda")
    if not (np.all(np.isfinite(real)) and np.all(np.isfinite(dual))):
        raise ParseError("Dokumen memuat nilai non-finite")
    return real, dual


def parse_dual_matrix(source: PathOrText) -> DualMatrix:
    """
    Mem-parsing dokumen {"real": [[...]], "dual": [[...]]} menjadi DualMatrix.

    Args:
        source: Path file JSON atau teks JSON.

    Returns:
        DualMatrix: Matriks dual; 'dual' yang tidak ada dianggap nol.

    Raises:
        ParseError: Jika dokumen tidak valid.
        ShapeMismatch: Jika bentuk 'real' dan 'dual' berbeda.
    """
    real, dual = _parse_parts(source)
    return DualMatrix(real, dual)


def parse_dual_vector(source: PathOrText) -> DualVector:
    """
    Mem-parsing vektor dual: kolom tunggal [[1], [2]] atau list datar [1, 2].

    Raises:
        ParseError: Jika dokumen tidak valid atau bukan satu kolom.
    """
    real, dual = _parse_parts(source)
    if real.shape[1] != 1:
        raise ParseError(f"Vektor harus satu kolom, didapat bentuk {real.shape}")
    return DualVector(real[:, 0], dual[:, 0])


class ReportJSONEncoder(json.JSONEncoder):
    """
    JSON encoder untuk tipe numpy, nilai dual, enum dan dataclass
    yang tidak bisa di-serialize secara default
    """
    def default(self, obj):
        if isinstance(obj, (DualMatrix, DualVector)):
            return obj.to_lists()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, Enum):
            return obj.value
        if is_dataclass(obj):
            return asdict(obj)
        return super().default(obj)


def _plain(obj: Any) -> Any:
    """Mengubah isi laporan menjadi tipe JSON dasar, float tetap float."""
    if isinstance(obj, dict):
        return {str(key): _plain(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(value) for value in obj]
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return _plain(json.loads(json.dumps(obj, cls=ReportJSONEncoder)))


def _format_float(value: float) -> str:
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    return format(value, ".17g")


def dumps_report(report: Dict[str, Any]) -> str:
    """
    Serialisasi laporan secara deterministik: urutan key dipertahankan,
    setiap float ditulis dengan 17 digit signifikan, integer tetap integer.
    """
    floats = []

    def tokenize(obj):
        if isinstance(obj, dict):
            return {key: tokenize(value) for key, value in obj.items()}
        if isinstance(obj, list):
            return [tokenize(value) for value in obj]
        if isinstance(obj, float):
            floats.append(obj)
            return f"\x00f{len(floats) - 1}\x00"
        return obj

    text = json.dumps(tokenize(_plain(report)), indent=2, ensure_ascii=False)
    return _FLOAT_TOKEN.sub(lambda match: _format_float(floats[int(match.group(1))]), text)


def write_report(report: Dict[str, Any], path: str) -> None:
    """Menyimpan laporan ke file (direktori dibuat jika belum ada)."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_report(report) + "\n")
