#!/usr/bin/env python3
"""
Configuration for braidrep

This module provides centralized configuration for the exact braid
representation engine: computation caps, logging settings and paths.
Every cap can be overridden from the environment (or a .env file).
"""

import os
import sys
from pathlib import Path

# Add the parent directory to sys.path to allow importing from the project root
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

# Load environment variables from .env file if it exists
try:
    from src.utils.env_loader import load_env
    load_env()
except Exception as e:
    # If there's any issue with load_env, continue with environment as is
    print(f"Note: Could not load environment from .env file: {e}", file=sys.stderr)


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        print(f"Note: ignoring non-integer {name}={value!r}", file=sys.stderr)
        return default


# Base directories
ROOT_DIR = Path(__file__).parent.parent.parent
SRC_DIR = ROOT_DIR / "src"
SCRIPTS_DIR = ROOT_DIR / "scripts"

# Dense 2^n x 2^n matrices
MAX_DENSE_STRANDS = _env_int("BRAIDREP_MAX_DENSE_STRANDS", 10)

# verify --max-n
MAX_VERIFY_STRANDS = _env_int("BRAIDREP_MAX_VERIFY_STRANDS", 8)

# Exhaustive enumeration of E_m^nu (order 2^(m+1))
MAX_ES_RANK = _env_int("BRAIDREP_MAX_ES_RANK", 13)
MAX_CHAR_RANK = _env_int("BRAIDREP_MAX_CHAR_RANK", 13)

# BFS over matrix groups: |G_n| = n! 2^n, |H_n| = 2^n
MAX_G_STRANDS = _env_int("BRAIDREP_MAX_G_STRANDS", 6)
MAX_H_STRANDS = _env_int("BRAIDREP_MAX_H_STRANDS", 10)

MAX_DECOMPOSE_STRANDS = _env_int("BRAIDREP_MAX_DECOMPOSE_STRANDS", 11)
MAX_RESTRICTION_K = _env_int("BRAIDREP_MAX_RESTRICTION_K", 5)

# Kauffman bracket state sum visits 2^crossings states
MAX_ORACLE_CROSSINGS = _env_int("BRAIDREP_MAX_ORACLE_CROSSINGS", 16)

# Logging
LOG_LEVEL = os.environ.get("BRAIDREP_LOG_LEVEL", "WARNING")
LOG_DIR = os.environ.get("BRAIDREP_LOG_DIR") or None

# Float renderings (--approx) only
APPROX_DIGITS = 12

# Verification suites understood by the CLI
VERIFY_SUITES = ["ybe", "braid", "lemma22", "tl", "chars"]

# Representation kinds selectable on the command line
CLI_KINDS = {
    "pi": "PI",
    "pi-prime": "PI_PRIME",
    "rho1-hat": "RHO1_HAT",
    "lambda-hat": "LAMBDA_HAT",
    "jones4": "JONES4",
}

# Default --max-n per verification suite (for "chars" it bounds the rank m)
VERIFY_DEFAULT_MAX_N = {
    "ybe": 3,
    "braid": 8,
    "lemma22": 6,
    "tl": 5,
    "chars": 7,
}

# Exhaustive pairwise homomorphism check of phi
MAX_PHI_PAIRS_STRANDS = _env_int("BRAIDREP_MAX_PHI_PAIRS_STRANDS", 6)
