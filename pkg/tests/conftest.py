# tests/conftest.py

import os
import sys
import pytest
import numpy as np
from pathlib import Path

# Menambahkan path root project untuk import
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.core_logic.dualmat import DualMatrix
from src.core_logic.realgi import Tolerances


@pytest.fixture(scope="session")
def project_root():
    """Fixture untuk mendapatkan path root project"""
    return Path(__file__).parent.parent


@pytest.fixture(scope="function")
def temp_workspace(tmp_path):
    """Fixture untuk membuat workspace temporary yang terisolasi"""
    (tmp_path / "results").mkdir()
    (tmp_path / "datasets").mkdir()
    (tmp_path / "logs").mkdir()

    return tmp_path


@pytest.fixture(scope="session")
def tol():
    """Toleransi default"""
    return Tolerances()


@pytest.fixture(scope="function")
def index_two_example():
    """Contoh kerja dengan Ind(A) = 2: A^D = [[1,1,1],[0,0,0],[0,0,0]]"""
    A = np.array([[1, 1, 0], [0, 0, 1], [0, 0, 0]], dtype=float)
    B = np.array([[1, 2, 0], [2, 1, 0], [0, 0, 1]], dtype=float)
    return DualMatrix(A, B)


@pytest.fixture(scope="function")
def diagonal_example():
    """Contoh kerja diag(4,0,5) yang tidak punya DGGI"""
    A = np.diag([4.0, 0.0, 5.0])
    B = np.array([[1, 0, 4], [1, 2, 0], [0, 2, 0]], dtype=float)
    return DualMatrix(A, B)


@pytest.fixture(scope="function")
def nilpotent_example():
    """Contoh kerja dengan A nilpoten berindex 2 dan B = diag(0,0,1)"""
    A = np.array([[-1, -1, 0], [1, 1, 0], [0, 0, 0]], dtype=float)
    return DualMatrix(A, np.diag([0.0, 0.0, 1.0]))


@pytest.fixture(scope="function")
def order_law_pair():
    """Pasangan (Â, Ĉ) yang melanggar hukum urutan reverse/forward DGGI"""
    A = np.array([[2, 1, 3], [0, 0, 0], [1, 1, 2]], dtype=float)
    B = np.array([[2, 2, 4], [3, -1, 2], [-4, -2, -6]], dtype=float)
    C = np.array([[1, -1, 0], [0, 0, 0], [-1, 3, 2]], dtype=float)
    D = np.array([[2, -4, 3], [0, 0, 0], [1, -5, 6]], dtype=float)
    return DualMatrix(A, B), DualMatrix(C, D)


@pytest.fixture(scope="function")
def write_matrix(tmp_path):
    """Fixture untuk menulis dokumen matriks dual ke file JSON temporary"""
    import json

    def _write(name, real, dual=None):
        document = {"real": np.asarray(real, dtype=float).tolist()}
        if dual is not None:
            document["dual"] = np.asarray(dual, dtype=float).tolist()
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch):
    """Mencegah .env lokal atau environment mesin mengubah toleransi selama test"""
    for key in ("DUALGI_TOL_RANK", "DUALGI_TOL_RESID", "LOG_DIR", "LOG_LEVEL", "OUTPUT_DIR", "DATASET_DIR"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setattr("src.core_logic.env_manager.load_dotenv", lambda *args, **kwargs: False)


@pytest.fixture(autouse=True)
def cleanup_logging():
    """Fixture untuk membersihkan logging configuration setelah setiap test"""
    import logging

    yield

    # Reset logging handlers
    logger = logging.getLogger()
    for handler in logger.handlers[:]:
        handler.close()
        logger.removeHandler(handler)

    # Reset logging level
    logging.getLogger().setLevel(logging.WARNING)


def pytest_configure(config):
    """Konfigurasi pytest yang dijalankan sekali di awal"""
    config.addinivalue_line(
        "markers", "unit: mark test as a unit test"
    )
    config.addinivalue_line(
        "markers", "integration: mark test as an integration test"
    )
    config.addinivalue_line(
        "markers", "slow: mark test as slow running"
    )
    config.addinivalue_line(
        "markers", "property: mark test as a hypothesis property test"
    )


def pytest_collection_modifyitems(config, items):
    """Modifikasi item collection untuk menambahkan markers otomatis"""
    for item in items:
        # Tambahkan marker berdasarkan path file
        if "unit" in str(item.fspath):
            item.add_marker(pytest.mark.unit)
        elif "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)

        # Test hypothesis
        if getattr(item.obj, "is_hypothesis_test", False):
            item.add_marker(pytest.mark.property)

        # Sweep properti ber-seed
        if "test_acceptance_properties" in str(item.fspath):
            item.add_marker(pytest.mark.slow)
