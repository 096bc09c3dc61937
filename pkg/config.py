"""
Configuration module for the sigma-trace engine.

Handles environment variable loading, logging settings, verification grid
defaults, oracle precision and class-number cache bounds.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# ============================================================================
# File Paths
# ============================================================================

# Base directory (project root)
BASE_DIR = Path(__file__).parent

# ============================================================================
# Logging Configuration
# ============================================================================

# Overall log level
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# File logging (off by default: the CLI is usually run interactively)
LOG_FILE_ENABLED = os.getenv("LOG_FILE_ENABLED", "false").lower() == "true"
LOG_FILE_PATH = Path(os.getenv("LOG_FILE_PATH", BASE_DIR / "logs"))
LOG_FILE_FORMAT = os.getenv("LOG_FILE_FORMAT", "text")  # text or json
LOG_FILE_BACKUP_COUNT = int(os.getenv("LOG_FILE_BACKUP_COUNT", "10"))
LOG_FILE_MAX_SIZE_MB = int(os.getenv("LOG_FILE_MAX_SIZE_MB", "10"))

# Console logging (stderr; stdout is reserved for rendered results)
LOG_CONSOLE_ENABLED = os.getenv("LOG_CONSOLE_ENABLED", "true").lower() == "true"
LOG_CONSOLE_FORMAT = os.getenv("LOG_CONSOLE_FORMAT", "text")  # text or json

# Module-specific log levels
# Can override default LOG_LEVEL for specific packages
LOG_LEVELS = {
    "sigma_trace": LOG_LEVEL,
    "sigma_trace.oracle": os.getenv("LOG_LEVEL_ORACLE", "WARNING"),
    "sigma_trace.galois": os.getenv("LOG_LEVEL_GALOIS", LOG_LEVEL),
    "sigma_trace.classnum": os.getenv("LOG_LEVEL_CLASSNUM", "WARNING"),
}

# Create logs directory if file logging enabled
if LOG_FILE_ENABLED:
    LOG_FILE_PATH.mkdir(parents=True, exist_ok=True)

# ============================================================================
# Verification Grid
# ============================================================================

# Weight range and Hecke index range of the engine-vs-oracle comparison
VERIFY_K_MIN = int(os.getenv("VERIFY_K_MIN", "4"))
VERIFY_K_MAX = int(os.getenv("VERIFY_K_MAX", "30"))
VERIFY_M_MAX = int(os.getenv("VERIFY_M_MAX", "30"))

# Worker threads for grid evaluation (1 = sequential)
VERIFY_WORKERS = int(os.getenv("VERIFY_WORKERS", "1"))

# ============================================================================
# Class Numbers
# ============================================================================

# Largest N whose Hurwitz class number is memoized.
# The trace grid reads H(4m - t^2) for m <= VERIFY_M_MAX, hence the default.
HURWITZ_CACHE_BOUND = int(os.getenv("HURWITZ_CACHE_BOUND", str(4 * VERIFY_M_MAX + 1)))

# ============================================================================
# Spectral Oracle
# ============================================================================

# Extra q-expansion coefficients on top of dim * (m + 1)
ORACLE_EXTRA_PRECISION = int(os.getenv("ORACLE_EXTRA_PRECISION", "10"))

# ============================================================================
# Galois Suites
# ============================================================================

SUITE_SEED = int(os.getenv("SUITE_SEED", "20240607"))
HILBERT_SAMPLES = int(os.getenv("HILBERT_SAMPLES", "100"))
VANISHING_SAMPLES = int(os.getenv("VANISHING_SAMPLES", "200"))
EIGENSYSTEM_M_MAX = int(os.getenv("EIGENSYSTEM_M_MAX", "20"))

# Real quadratic fields and weight pairs exercised by the Hilbert-layer suite
HILBERT_FIELDS = [2, 3, 5, 13]
HILBERT_WEIGHTS = [(4, 6), (4, 10), (6, 8)]

# ============================================================================
# Output
# ============================================================================

# Output mode: "table" (aligned columns) or "records" (one JSON object per line)
OUTPUT_MODE = os.getenv("OUTPUT_MODE", "table")
OUTPUT_MODES = ["table", "records"]

# ============================================================================
# Validation
# ============================================================================

def validate_config():
    """
    Validate that configuration values are usable.

    Raises:
        ConfigurationError: If a setting is out of range.
    """
    from utils.exceptions import ConfigurationError

    if OUTPUT_MODE not in OUTPUT_MODES:
        raise ConfigurationError(
            f"OUTPUT_MODE must be one of {OUTPUT_MODES}",
            details={"OUTPUT_MODE": OUTPUT_MODE}
        )
    if VERIFY_K_MIN < 4 or VERIFY_K_MAX < VERIFY_K_MIN:
        raise ConfigurationError(
            "Verification weights must satisfy 4 <= VERIFY_K_MIN <= VERIFY_K_MAX",
            details={"VERIFY_K_MIN": VERIFY_K_MIN, "VERIFY_K_MAX": VERIFY_K_MAX}
        )
    if VERIFY_M_MAX < 1:
        raise ConfigurationError("VERIFY_M_MAX must be >= 1", details={"VERIFY_M_MAX": VERIFY_M_MAX})
    if VERIFY_WORKERS < 1:
        raise ConfigurationError("VERIFY_WORKERS must be >= 1", details={"VERIFY_WORKERS": VERIFY_WORKERS})
    if HURWITZ_CACHE_BOUND < 0:
        raise ConfigurationError(
            "HURWITZ_CACHE_BOUND must be non-negative",
            details={"HURWITZ_CACHE_BOUND": HURWITZ_CACHE_BOUND}
        )
    if ORACLE_EXTRA_PRECISION < 2:
        raise ConfigurationError(
            "ORACLE_EXTRA_PRECISION must be >= 2",
            details={"ORACLE_EXTRA_PRECISION": ORACLE_EXTRA_PRECISION}
        )
