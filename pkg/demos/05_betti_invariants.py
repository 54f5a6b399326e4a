"""
Multigraded Betti numbers and the derived invariants
====================================================

Betti numbers in each squarefree degree come from ranks of Koszul
boundary maps, computed exactly over a finite prime field or over the
rationals.  Regularity, projective dimension, depth, and the
Cohen-Macaulay and linear-resolution properties all read off the table.
"""

from sqstanley import SqIdeal, SqQuotient, betti, invariants

# The residue field k = S/(x1, x2, x3) has the full Koszul complex as
# its resolution: one Betti number in every squarefree degree.
k = SqQuotient(3, SqIdeal.of(3, [0b001, 0b010, 0b100]), SqIdeal.of(3, [0]))
table = betti(k)
print("Betti table of k over three variables:")
print(table)
print("totals by homological degree:",
      [table.total(i) for i in range(table.projdim + 1)])

# An edge plus an isolated point: S/(x1x3, x2x3).  The table shows a
# first syzygy in degree {1,2,3}, so the resolution is not linear, and
# depth drops below dimension.
edge_point = SqQuotient(3, SqIdeal.of(3, [0b101, 0b110]), SqIdeal.of(3, [0]))
rep = invariants(edge_point)
print("\nS/(x1x3, x2x3):")
print("  projdim", rep.projdim, " reg", rep.reg,
      " depth", rep.depth, " dim", rep.dim)
print("  Cohen-Macaulay:", rep.cohen_macaulay,
      "  linear resolution:", rep.linear_resolution)

# The characteristic is an argument; these small examples are
# torsion free, so char 0 and char 2 agree with the default 32003.
print("\nsame table over the rationals:",
      betti(edge_point, char=0).entries == betti(edge_point).entries)
print("same table in char 2:",
      betti(edge_point, char=2).entries == betti(edge_point).entries)
