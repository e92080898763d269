"""Calculus of N-harmonic functions on the unit disk.

Exact Almansi and cellular decompositions, the critical integrability
curves beta(N, p) with their cell tiling, extremal-kernel norms with
certified series evaluation, and adaptive polar quadrature.

Exact rational values cross the Python boundary as "num/den" strings;
``fractions.Fraction`` accepts them directly.
"""

from ._core import (  # noqa: F401
    AlmansiForm,
    AltAlmansiForm,
    BadIndexError,
    BiLaurent,
    CellularForm,
    I_series,
    NegativeExponentError,
    NotPolyharmonicError,
    ParseError,
    PolyharmError,
    a_curve_eval,
    almansi_decompose,
    almansi_recompose,
    almansi_to_alternative,
    alternative_to_almansi,
    annulus_norm,
    annulus_regime_exponent,
    annulus_slope_fit,
    apply_L,
    b_curve_eval,
    beta_curve,
    beta_eval,
    cellular_decompose,
    cellular_recompose,
    circle_average,
    classify,
    dz,
    dzbar,
    entangled_v1_from_v0,
    enumerate_cells,
    extension,
    extension_restrict,
    integrate,
    is_n_harmonic,
    kernel_eval,
    kernel_laurent_at_one,
    kernel_norm,
    lagrange_reconstruct,
    laplacian,
    local_critical_alpha,
    mul_disk_weight,
    olofsson_uniform_potential,
    polyanalytic_beta,
    verify_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
