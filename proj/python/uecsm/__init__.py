"""Decide whether a small complex matrix is unitarily equivalent to a complex symmetric matrix."""

from ._uecsm import (
    Error,
    angle_suite,
    classify_nilpotent,
    construct,
    find_symmetrizer,
    phi3,
    psi7,
    read_document,
    test,
    transpose_equivalence,
    uecsm_verdict,
    write_document,
)

__all__ = [
    "Error",
    "angle_suite",
    "classify_nilpotent",
    "construct",
    "find_symmetrizer",
    "phi3",
    "psi7",
    "read_document",
    "test",
    "transpose_equivalence",
    "uecsm_verdict",
    "write_document",
]
