"""Stick-breaking samplers for Levy path extrema and convex minorants,
with quadrature checks of the classical fluctuation identities."""

from ._core import (  # noqa: F401
    LevyModel,
    enumerate_minorant_distribution,
    enumerate_sb_distribution,
    face_law_total_variation,
    ks_one_sample,
    laplace_inf_exp_horizon,
    laplace_sup_exp_horizon,
    rogozin_partial_integrals,
    sample_minorant_faces,
    sample_sticks,
    sample_triplets,
    spitzer_sup,
    spitzer_time,
    transform_3214,
    vertex_sigma_laplace,
    wh_product_check,
    __version__,
)

__all__ = [
    "LevyModel",
    "enumerate_minorant_distribution",
    "enumerate_sb_distribution",
    "face_law_total_variation",
    "ks_one_sample",
    "laplace_inf_exp_horizon",
    "laplace_sup_exp_horizon",
    "rogozin_partial_integrals",
    "sample_minorant_faces",
    "sample_sticks",
    "sample_triplets",
    "spitzer_sup",
    "spitzer_time",
    "transform_3214",
    "vertex_sigma_laplace",
    "wh_product_check",
]
