"""
Two ways to the same polynomial
================================

Flagged generating functions can be computed by brute-force enumeration of
RPPs or as a small determinant of plethystic e_k / h_k entries.  The matrix
stays n x n, but its entries grow with the flags, so in exact arithmetic
both routes end up paying for the size of the answer.
"""

import time

from rppjt.jacobi_trudi import E_det, E_det_finite, H_det
from rppjt.polyring import canonical_string
from rppjt.rpp import g_col_flagged, g_row_flagged, rpp_count
from rppjt.shapes import Flags, SkewShape, flag_condition_col, flag_condition_row

shape = SkewShape((4, 3, 3), (1, 1, 0))
flags = Flags((0, 0, 1), (3, 4, 4))
print("lambda/mu =", shape, " alpha =", flags.alpha, " beta =", flags.beta)
print("row condition:", flag_condition_row(shape, flags), " col condition:", flag_condition_col(shape, flags))

# Row flags: entries of row i lie in (alpha_i, beta_i].
start = time.perf_counter()
by_enum = g_row_flagged(shape, flags)
t_enum = time.perf_counter() - start
start = time.perf_counter()
by_det = H_det(shape, flags)
t_det = time.perf_counter() - start
print(f"\n{rpp_count(shape, flags)} row-flagged RPPs, {len(by_enum)} terms")
print(f"enumeration {t_enum * 1000:.1f} ms, h-determinant {t_det * 1000:.1f} ms, equal: {by_enum == by_det}")

# Column flags on the transposed shape use the e-determinant, in a
# plethystic and a finite-alphabet version.
conj = shape.transpose()
col_enum = g_col_flagged(conj, flags)
print("\ncolumn-flagged on", conj)
print("enumeration == e-determinant:", col_enum == E_det(shape, flags))
print("finite-alphabet form agrees:", E_det_finite(shape, flags) == E_det(shape, flags))

# Widening the flags: both costs track the number of terms.
print("\n beta   terms   enum ms   det ms")
for b in (4, 6, 8):
    wide = Flags((0, 0, 1), (b - 1, b, b))
    start = time.perf_counter()
    g = g_row_flagged(shape, wide)
    t_enum = time.perf_counter() - start
    start = time.perf_counter()
    h = H_det(shape, wide)
    t_det = time.perf_counter() - start
    assert g == h
    print(f"{b:5d} {len(g):7d} {t_enum * 1000:9.1f} {t_det * 1000:8.1f}")

small = SkewShape((2, 1), (1, 0))
print("\nsmall example:", canonical_string(H_det(small, Flags((0, 0), (2, 2)))))
