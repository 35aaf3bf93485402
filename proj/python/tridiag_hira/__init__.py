"""Eigenvectors of tridiagonal matrices with unit off-diagonals to high relative accuracy."""

from ._core import (
    BesselRun,
    Eigenvector,
    Matrix,
    Partition,
    bessel_backward,
    bessel_via_hira,
    choose_N,
    classify_regions,
    experiment1,
    experiment2,
    hira_eigenvector,
    inverse_power,
    sign_agreements,
    simplified_eigenvector,
    sturm_bisect,
)

__all__ = [
    "BesselRun",
    "Eigenvector",
    "Matrix",
    "Partition",
    "bessel_backward",
    "bessel_via_hira",
    "choose_N",
    "classify_regions",
    "experiment1",
    "experiment2",
    "hira_eigenvector",
    "inverse_power",
    "sign_agreements",
    "simplified_eigenvector",
    "sturm_bisect",
]
