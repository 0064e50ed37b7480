"""Exact determinants of tope distance matrices of sign-vector systems."""

try:
    from ._comdet import (
        SignSystem,
        cube,
        cycle,
        ideals,
        ideals_formula,
        k4_subdivision_det,
        random_com,
        ranking,
    )
except ImportError:
    # Development layout: the extension lives in the CMake build directory,
    # which the caller puts on sys.path.
    from _comdet import (
        SignSystem,
        cube,
        cycle,
        ideals,
        ideals_formula,
        k4_subdivision_det,
        random_com,
        ranking,
    )

__all__ = [
    "SignSystem",
    "cube",
    "cycle",
    "ideals",
    "ideals_formula",
    "k4_subdivision_det",
    "random_com",
    "ranking",
]
