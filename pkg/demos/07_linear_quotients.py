"""
Linear quotients and exact Stanley depth
========================================

When the generators of a monomial ideal can be ordered so each colon by
the earlier ones is generated by variables, the ideal decomposes into
intervals read straight off the order, and for squarefree ideals the
resulting Stanley depth n - r is exactly the depth.
"""

from sqstanley import (
    SqIdeal,
    SqQuotient,
    has_linear_quotients,
    invariants,
    linear_quotients_order,
    lq_decomposition,
)

# The maximal ideal (x1, x2, x3) has linear quotients in any order.
m3 = SqIdeal.of(3, [0b001, 0b010, 0b100])
order = linear_quotients_order(m3)
print("order:", order)
print("r =", order.r)

dec = lq_decomposition(m3)
print("decomposition:")
for iv in dec.intervals:
    print("   ", iv.bottom, "..", iv.top)
print("sdepth =", dec.sdepth, "= n - r =", 3 - order.r)

module = SqQuotient(3, SqIdeal.of(3, []), m3)
print("depth of the ideal as a module:", invariants(module).depth)

# Two disjoint edges have no linear quotients in either order of the
# two generators.
disjoint = SqIdeal.of(4, [0b0011, 0b1100])
print("\n(x1x2, x3x4) has linear quotients:", has_linear_quotients(disjoint))

# A bigger ideal: the edges of a path on four vertices.
path_edges = SqIdeal.of(4, [0b0011, 0b0110, 0b1100])
order = linear_quotients_order(path_edges)
print("path edge ideal order:", order)
dec = lq_decomposition(path_edges)
print("sdepth", dec.sdepth, " depth",
      invariants(SqQuotient(4, SqIdeal.of(4, []), path_edges)).depth)
