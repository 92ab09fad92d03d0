#!/usr/bin/env python3
"""
Environment Variable Loader

This module locates a .env file and loads it with python-dotenv so that
computation caps and logging settings can be configured per checkout.
"""

import logging
import os
from pathlib import Path

from dotenv import find_dotenv as _dotenv_find
from dotenv import load_dotenv

logger = logging.getLogger("env_loader")


def find_dotenv(start_path=None):
    """
    Find the .env file by searching upwards from the current directory.

    Args:
        start_path: Path to start searching from (defaults to current directory)

    Returns:
        Path to the .env file if found, None otherwise
    """
    if start_path is None:
        found = _dotenv_find(usecwd=True)
        return Path(found) if found else None

    path = Path(start_path).absolute()
    while path != path.parent:
        env_path = path / ".env"
        if env_path.exists():
            return env_path
        path = path.parent
    return None


def load_env(dotenv_path=None):
    """
    Load environment variables from .env file.

    Variables already present in the process environment win over the file.

    Args:
        dotenv_path: Optional path to .env file

    Returns:
        True if variables were loaded, False otherwise
    """
    if dotenv_path is None:
        dotenv_path = find_dotenv()

    if dotenv_path is None or not Path(dotenv_path).exists():
        logger.debug("No .env file found")
        return False

    logger.debug(f"Loading environment from {dotenv_path}")
    loaded = load_dotenv(dotenv_path, override=False)

    overrides = sorted(k for k in os.environ if k.startswith("BRAIDREP_"))
    if overrides:
        logger.debug(f"braidrep overrides in effect: {', '.join(overrides)}")
    return loaded


if __name__ == "__main__":
    if load_env():
        print("Environment variables loaded successfully")
    else:
        print("No .env file loaded")
