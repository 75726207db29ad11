"""Ulam-metric permutation and multipermutation codes: distances, sphere sizes and bounds."""
from ._accel import BACKEND, COMPILED
from .core import (
    CapExceeded,
    Multipermutation,
    Permutation,
    Translocation,
    UlamError,
    act,
    compose,
    identity,
    lcs_length,
    omega,
    project,
    translocation_perm,
    ulam_distance,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "COMPILED", "CapExceeded", "Multipermutation", "Permutation",
    "Translocation", "UlamError", "act", "compose", "identity", "lcs_length",
    "omega", "project", "translocation_perm", "ulam_distance", "__version__",
]
