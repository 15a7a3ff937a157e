"""Ratios of contiguous Gauss hypergeometric functions: evaluation, branch-cut
densities, continued fractions, Nevanlinna-class tests and integral
representations."""

from ._grl import (
    GrlError,
    abs2_on_cut,
    boundary_density,
    boundary_im,
    classify_gauss_ratio,
    eval_gauss_cfrac,
    example12_identity,
    gauss_cfrac_alphas,
    hyp2f1,
    hyp2f1_on_cut,
    integral_representation,
    moment_check,
    ratio,
    ratio_taylor,
    runckel_check,
    verify_example,
)

__all__ = [
    "GrlError",
    "abs2_on_cut",
    "boundary_density",
    "boundary_im",
    "classify_gauss_ratio",
    "eval_gauss_cfrac",
    "example12_identity",
    "gauss_cfrac_alphas",
    "hyp2f1",
    "hyp2f1_on_cut",
    "integral_representation",
    "moment_check",
    "ratio",
    "ratio_taylor",
    "runckel_check",
    "verify_example",
]
