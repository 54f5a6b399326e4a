"""
Stanley decompositions and the two optima
=========================================
"""

from sqstanley import (
    IndexSet,
    SqIdeal,
    SqQuotient,
    dualize_decomposition,
    dualize_quotient,
    hreg_min,
    sdepth,
    validate_decomposition,
)


def show(dec):
    for iv in dec.intervals:
        print("   ", iv.bottom, "..", iv.top)


# S/(x1x2) over two variables: the staircase splits into the interval
# above {1}, the interval above {2}, and the point at the empty set.
ring_mod = SqQuotient(2, SqIdeal.of(2, [0b11]), SqIdeal.of(2, [0]))
s, dec = sdepth(ring_mod)
print("sdepth S/(x1x2) =", s)
show(dec)

# hreg is the opposite optimum: minimize the largest interval bottom
# instead of maximizing the smallest top.
h, hdec = hreg_min(ring_mod)
print("hreg =", h)
show(hdec)

# Dualizing a decomposition interval by interval gives a decomposition
# of the dual module, swapping the roles of the two optima.
dual = dualize_quotient(ring_mod)
ddec = dualize_decomposition(dec)
print("dual decomposition valid:", validate_decomposition(dual, ddec))
print("hreg of the dual:", hreg_min(dual)[0], "= n - sdepth =", 2 - s)

# A case where Stanley depth strictly beats depth: the ideal
# x1*(x2, x3, x4) has depth 2 but Stanley depth 3.
ideal = SqIdeal.of(4, [0b0011, 0b0101, 0b1001])
mod = SqQuotient(4, SqIdeal.of(4, []), ideal)
s, dec = sdepth(mod)
print("sdepth of x1*(x2,x3,x4) as a module:", s)
show(dec)
