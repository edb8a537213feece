"""
Filling cell by cell
=====================

Cells are filled right to left by column, top to bottom inside a column.
After m cells, the rest of the sum is again a determinant: the filled rows
are shortened, their upper bounds drop to the leftmost filled entry, and
those rows switch to the barred entry form.
"""

from rppjt.jacobi_trudi import EE_partial, HH_partial, recurrence_interval
from rppjt.polyring import polysum
from rppjt.rpp import format_rpp, r_bar_partial, r_partial
from rppjt.shapes import Flags, SkewShape, effective_bounds, prefix, row_support

shape = SkewShape((8, 7, 7, 5, 3), (4, 2))
flags = Flags((0, 0, 1, 1, 2), (5, 5, 6, 7, 7))
r0 = {
    (1, 5): 3, (1, 6): 3, (1, 7): 4, (1, 8): 4,
    (2, 3): 1, (2, 4): 1, (2, 5): 4, (2, 6): 4, (2, 7): 5,
    (3, 4): 3, (3, 5): 4, (3, 6): 4, (3, 7): 6,
    (4, 4): 4, (4, 5): 4,
}
rho = prefix(shape, len(r0))
print("filled rows:", sorted(row_support(rho)))
print("new upper bounds:", effective_bounds(rho, r0, flags.beta))

# The determinant of the unfilled part times the weight of the filled part
# equals the sum over all completions.
print("e side matches enumeration:", EE_partial(shape, flags, r0) == r_bar_partial(shape, flags, r0))
print("h side matches enumeration:", HH_partial(shape, flags, r0) == r_partial(shape, flags, r0))

# One step of the recurrence: branch on the value of the next cell.
cell, a, b = recurrence_interval(shape, flags, r0)
print(f"next cell {cell}, values {a}..{b}")
children = [EE_partial(shape, flags, {**r0, cell: k}) for k in range(a, b + 1)]
print("sum of branches equals parent:", polysum(children) == EE_partial(shape, flags, r0))

small = SkewShape((2, 2))
print()
print(format_rpp({(1, 1): 1, (1, 2): 2, (2, 1): 2, (2, 2): 2}, small))
