"""Flagged refined dual stable Grothendieck polynomials: RPP enumeration and Jacobi-Trudi determinants."""

from .alphabets import Alphabet, e_pleth, h_pleth, t_prefix, x_interval
from .jacobi_trudi import E_det, E_det_finite, EE_partial, H_det, HH_partial, det, g_dual_via_phi, phi_h
from .polyring import ONE, ZERO, Polynomial, canonical_string, parse_polynomial, substitute_t, t, x
from .rpp import enumerate_row_flagged, g_col_flagged, g_row_flagged, g_unflagged_truncated, owt, r_bar_partial, r_partial, wt
from .shapes import Flags, NonPartitionInput, SkewShape, flag_condition_col, flag_condition_row

__all__ = [
    "Alphabet",
    "E_det",
    "E_det_finite",
    "EE_partial",
    "Flags",
    "H_det",
    "HH_partial",
    "NonPartitionInput",
    "ONE",
    "Polynomial",
    "SkewShape",
    "ZERO",
    "canonical_string",
    "det",
    "e_pleth",
    "enumerate_row_flagged",
    "flag_condition_col",
    "flag_condition_row",
    "g_col_flagged",
    "g_dual_via_phi",
    "g_row_flagged",
    "g_unflagged_truncated",
    "h_pleth",
    "owt",
    "parse_polynomial",
    "phi_h",
    "r_bar_partial",
    "r_partial",
    "substitute_t",
    "t",
    "t_prefix",
    "wt",
    "x",
    "x_interval",
]
