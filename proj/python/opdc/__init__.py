"""Exact spectral transformations for orthogonal polynomials on the unit
circle: Szego/CMV machinery, Christoffel-Geronimus-SDG-Chihara transforms,
Bannai-Ito and Racah-Wilson coefficient families, and dressing-chain
verification. Rationals cross the boundary as "p/q" strings and stay exact.
"""

from ._opdc import (
    Error,
    PoleInParameters,
    IdentityViolation,
    DegenerateReflection,
    ZeroAtTheta,
    szego_polynomials,
    classify,
    pencil_recurrence,
    build_lm,
    build_cmv,
    build_pencil_matrix,
    christoffel,
    geronimus_roundtrip,
    sdg_step,
    rescale,
    chihara_split,
    chihara_polynomial_check,
    bi_coeffs,
    cbi_coeffs,
    bi_seed,
    bi_reflection,
    bi_q_reflection,
    rw_coeffs,
    beta_map,
    rw_reflection,
    subs1,
    bi_identify_q,
    cholesky_darboux,
    lu_darboux,
    quad_algebra_solve,
    chain_step,
    verify_identities,
    monic_tridiag_eigenvalues,
)

__all__ = [
    "Error",
    "PoleInParameters",
    "IdentityViolation",
    "DegenerateReflection",
    "ZeroAtTheta",
    "szego_polynomials",
    "classify",
    "pencil_recurrence",
    "build_lm",
    "build_cmv",
    "build_pencil_matrix",
    "christoffel",
    "geronimus_roundtrip",
    "sdg_step",
    "rescale",
    "chihara_split",
    "chihara_polynomial_check",
    "bi_coeffs",
    "cbi_coeffs",
    "bi_seed",
    "bi_reflection",
    "bi_q_reflection",
    "rw_coeffs",
    "beta_map",
    "rw_reflection",
    "subs1",
    "bi_identify_q",
    "cholesky_darboux",
    "lu_darboux",
    "quad_algebra_solve",
    "chain_step",
    "verify_identities",
    "monic_tridiag_eigenvalues",
]

__version__ = "0.1.0"
