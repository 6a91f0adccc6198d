"""Exact arithmetic for exponents of unipotent kernels of Weil restrictions."""

from insep._core import (
    Element,
    Matrix,
    Prediction,
    Profile,
    Ring,
    Sl2Check,
    Sl2Witness,
    WitnessReport,
    borel_witness,
    cayley_hamilton_check,
    ch_bound_check,
    char_poly,
    closed_form_power_2,
    modular_grid,
    p_power_exponent,
    predict,
    run_verify,
    sl2_borel_witness,
    sl2_full_witness,
    sl2_sample_check,
    verify_witness,
)

__all__ = [
    "Element",
    "Matrix",
    "Prediction",
    "Profile",
    "Ring",
    "Sl2Check",
    "Sl2Witness",
    "WitnessReport",
    "borel_witness",
    "cayley_hamilton_check",
    "ch_bound_check",
    "char_poly",
    "closed_form_power_2",
    "modular_grid",
    "p_power_exponent",
    "predict",
    "run_verify",
    "sl2_borel_witness",
    "sl2_full_witness",
    "sl2_sample_check",
    "verify_witness",
]
