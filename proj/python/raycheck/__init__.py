"""Exact verification of the 120-state and Witting ray configurations."""

import os

from ._core import Session, verify_all

__all__ = ["Session", "verify_all", "data_dir"]


def data_dir():
    """Directory with the bundled reference fixtures, when packaged."""
    here = os.path.join(os.path.dirname(__file__), "data")
    if os.path.isdir(here):
        return here
    env = os.environ.get("RAYCHECK_FIXTURES")
    if env:
        return env
    return "data"
