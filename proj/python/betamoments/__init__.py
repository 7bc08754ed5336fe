"""Exact moment sequences of modified Beta distributions."""

from ._core import (
    __version__,
    binomial_transform,
    catalan,
    catalog,
    central_binomial,
    check_integrality,
    closed_form_gf,
    closed_form_ids,
    d_value,
    expansion_c,
    finite_identity_ids,
    gf_coefficients,
    hankel_check,
    hankel_determinants,
    infinite_identity_ids,
    integrality_demo,
    inverse_binomial_transform,
    match,
    moment,
    moments,
    raw_moments,
    symmetric_moments,
    verify_catalog_claims,
    verify_finite,
    verify_infinite,
)

__all__ = [
    "__version__",
    "binomial_transform",
    "catalan",
    "catalog",
    "central_binomial",
    "check_integrality",
    "closed_form_gf",
    "closed_form_ids",
    "d_value",
    "expansion_c",
    "finite_identity_ids",
    "gf_coefficients",
    "hankel_check",
    "hankel_determinants",
    "infinite_identity_ids",
    "integrality_demo",
    "inverse_binomial_transform",
    "match",
    "moment",
    "moments",
    "raw_moments",
    "symmetric_moments",
    "verify_catalog_claims",
    "verify_finite",
    "verify_infinite",
]
