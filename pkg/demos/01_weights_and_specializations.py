"""
Reverse plane partitions and their two weights
===============================================

A reverse plane partition (RPP) is a filling of a skew shape that weakly
increases along rows and down columns.  ``wt`` counts, for each value, the
columns containing it, plus one t_i for every equal vertical pair starting
in row i.  ``owt`` is the same thing read along rows.
"""

from rppjt.polyring import canonical_string, substitute_t
from rppjt.rpp import g_unflagged_truncated, owt, parse_rpp, transpose_filling, wt
from rppjt.shapes import SkewShape

# Dots mark the cells of the inner shape.
text = """\
. . . 2 2 3
. 1 1 2 3
1 1 2 2 3
1 2 3
2 2 3
"""
filling, shape = parse_rpp(text)
print("shape", shape)
print("wt  =", canonical_string(wt(filling)))
print("owt =", canonical_string(owt(filling)))

# owt of R is wt of the transposed filling
assert owt(filling) == wt(transpose_filling(filling))

# Summing wt over all RPPs with entries <= N gives the refined dual stable
# Grothendieck polynomial in N x-variables.
g = g_unflagged_truncated(SkewShape((2, 1)), 3)
print("\ng for (2,1), N=3:")
print(" ", canonical_string(g))

# t = 0 keeps only column-strict fillings: the Schur polynomial.
print("t = 0:", canonical_string(substitute_t(g, default=0)))
# t = 1 gives the dual stable Grothendieck polynomial.
print("t = 1:", canonical_string(substitute_t(g, default=1)))
