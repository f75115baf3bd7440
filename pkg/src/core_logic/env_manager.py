# src/core_logic/env_manager.py

import os
import logging
from dotenv import load_dotenv
from typing import Dict, Tuple

from src.core_logic.realgi import DEFAULT_RANK_REL, DEFAULT_RESID_REL, Tolerances

DEFAULTS = {
    "DUALGI_TOL_RANK": str(DEFAULT_RANK_REL),
    "DUALGI_TOL_RESID": str(DEFAULT_RESID_REL),
    "LOG_DIR": "logs",
    "LOG_LEVEL": "INFO",
    "OUTPUT_DIR": "results",
    "DATASET_DIR": "datasets",
}


def load_env_variables() -> Dict[str, str]:
    """
    Memuat variabel konfigurasi dari file .env dan environment.

    Returns:
        Dict[str, str]: Setting proyek (toleransi, direktori log/output/dataset, level log).
    """
    load_dotenv()
    return {key: os.getenv(key, default) for key, default in DEFAULTS.items()}


def load_tolerances(settings: Dict[str, str]) -> Tolerances:
    """
    Mem-parsing DUALGI_TOL_RANK dan DUALGI_TOL_RESID menjadi Tolerances.

    Raises:
        ValueError: Jika nilai bukan angka atau di luar (0, 1).
    """
    values = {}
    for key in ("DUALGI_TOL_RANK", "DUALGI_TOL_RESID"):
        raw = settings.get(key, DEFAULTS[key])
        try:
            values[key] = float(raw)
        except (TypeError, ValueError) as e:
            raise ValueError(f"❌ {key} harus berupa angka, didapat {raw!r}") from e
    return Tolerances(rank_rel=values["DUALGI_TOL_RANK"], resid_rel=values["DUALGI_TOL_RESID"])


def load_and_log_config() -> Tuple[Dict[str, str], Tolerances]:
    """
    Memuat konfigurasi dan toleransi, lalu mencatatnya ke log.
    """
    settings = load_env_variables()

    logging.info("🔧 Konfigurasi Proyek Dimuat:")
    for key, value in settings.items():
        logging.info(f"   - {key}: {value}")

    tolerances = load_tolerances(settings)
    logging.info(f"📏 Toleransi: rank_rel={tolerances.rank_rel:g}, resid_rel={tolerances.resid_rel:g}")

    return settings, tolerances
