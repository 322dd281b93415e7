"""
config.py
---------
Centralized configuration for the motion-certificate toolkit.

Contains:
- Project paths (reports, logs, YAML overrides)
- Numerical tolerances for spectra, PSD witnesses and cubic residuals
- Search limits for the brute-force oracle and recognition
- Defaults for epsilon, seed and timeouts
- YAML override loader

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

from pathlib import Path
from typing import Dict, Optional
from datetime import datetime

import yaml

# =============================================================================
# PROJECT PATHS
# =============================================================================

# Project root (relative to this file: src/config.py -> project root)
PROJECT_ROOT = Path(__file__).parent.parent
DATA_DIR = PROJECT_ROOT / "data"
REPORTS_DIR = DATA_DIR / "reports"
LOGS_DIR = DATA_DIR / "logs"
CONFIG_DIR = PROJECT_ROOT / "config"
DEFAULT_CONFIG_PATH = CONFIG_DIR / "config.yaml"

# =============================================================================
# NUMERICAL TOLERANCES
# =============================================================================

SPECTRAL_TOL = 1e-9           # Relative, tridiagonal vs dense spectra
PSD_TOL = 1e-9                # Absolute, min eigenvalue of PSD witness
MULTIPLICITY_TOL = 1e-6       # Fraction of n a multiplicity may be off by
CUBIC_RESIDUAL_TOL = 1e-6     # Times max(1, k1)^3
EIGEN_ZERO_TOL = 1e-7         # Eigenvalue clustering / equality
SEIDEL_EIGEN_TOL = 1e-9       # Smallest eigenvalue must be -2 within this

# =============================================================================
# LIMITS
# =============================================================================

RANK_CAP = 2 ** 16            # Colors are stored as uint16
ORACLE_LIMIT_N = 60           # Brute-force automorphism search
ENUMERATION_ORDER_LIMIT = 10 ** 6
RECOGNITION_MAX_N = 200
SEIDEL_ORACLE_MAX_N = 100
SWEEP_MAX_N = 40
ISOMORPHISM_BUDGET_SECONDS = 5.0
SUN_WILMES_MAX_RANK = 6       # Color subsets are enumerated up to this rank
WL_CHUNK_CELLS = 2 ** 22      # Code cells held per WL block
GREEDY_MATMUL_COLORS = 64     # Above this, greedy gains are counted row by row

# =============================================================================
# DEFAULTS
# =============================================================================

DEFAULT_SEED = 0
DEFAULT_EPSILON = 0.01
DEFAULT_TIMEOUT_MS = int(ISOMORPHISM_BUDGET_SECONDS * 1000)

# =============================================================================
# VALIDATION THRESHOLDS
# =============================================================================

VALIDATION_THRESHOLDS = {
    "min_sweep_instances": 10,      # Soundness sweep must cover at least this many
    "max_soundness_violations": 0,
    "random_wl_graphs": 100,        # Random graphs for the WL fixpoint check
    "random_wl_max_n": 15,
}

# =============================================================================
# HELPER FUNCTIONS
# =============================================================================

def ensure_directories() -> None:
    """Create all required directories if they don't exist."""
    for directory in [DATA_DIR, REPORTS_DIR, LOGS_DIR, CONFIG_DIR]:
        directory.mkdir(parents=True, exist_ok=True)


def get_date_stamp() -> str:
    """Get current date stamp for file naming."""
    return datetime.now().strftime("%Y%m%d")


def load_config(config_path: Optional[Path] = None) -> Dict:
    """
    Load YAML overrides (epsilon, limit_n, seed, timeout_ms, sweep).

    Returns an empty dict when the file is missing.
    """
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    if not path.exists():
        return {}
    with open(path, 'r') as f:
        data = yaml.safe_load(f)
    return data or {}


def resolve_settings(overrides: Optional[Dict] = None,
                     config_path: Optional[Path] = None) -> Dict:
    """
    Merge constants < YAML file < explicit overrides (CLI flags).

    Overrides whose value is None are ignored.
    """
    settings = {
        "epsilon": DEFAULT_EPSILON,
        "limit_n": ORACLE_LIMIT_N,
        "seed": DEFAULT_SEED,
        "timeout_ms": DEFAULT_TIMEOUT_MS,
    }
    file_settings = load_config(config_path)
    for key in settings:
        if file_settings.get(key) is not None:
            settings[key] = file_settings[key]
    for key, value in (overrides or {}).items():
        if value is not None:
            settings[key] = value
    settings["epsilon"] = float(settings["epsilon"])
    settings["limit_n"] = int(settings["limit_n"])
    settings["seed"] = int(settings["seed"])
    settings["timeout_ms"] = int(settings["timeout_ms"])
    return settings
