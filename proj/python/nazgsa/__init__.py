"""Gaussian surface area of random polytopes: numerical lab."""

import json

from ._core import *  # noqa: F401,F403
from ._core import _scan_rows_json

__all__ = [name for name in dir() if not name.startswith("_")]


def scan_rows(ns, alphas, seed=1):
    """Scan cells as dictionaries, one per (n, alpha), n-major."""
    return json.loads(_scan_rows_json(list(ns), list(alphas), seed))
