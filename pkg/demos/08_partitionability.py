"""
Partitionable complexes and the dual point of view
==================================================

A complex is partitionable when its faces split into intervals topped by
facets.  Under Alexander duality this is the same as the dual module
having a Stanley decomposition whose interval bottoms are all minimal
support members, so both searches run on the same cover engine.
"""

from sqstanley import (
    IndexSet,
    SimplicialComplex,
    dualize_quotient,
    face_ring,
    find_partition,
    generator_bottom_decomposition,
    is_partitionable,
    partition_duality_check,
)

path = SimplicialComplex.from_facets(3, [IndexSet(3, 0b011), IndexSet(3, 0b110)])
dec = find_partition(path)
print("partition of the path complex:")
for iv in dec.intervals:
    print("   ", iv.bottom, "..", iv.top)

# Two disjoint edges: seven faces, and no way to cover the empty face by
# an interval topped by a two-element facet without collision.
disjoint = SimplicialComplex.from_facets(
    4, [IndexSet(4, 0b0011), IndexSet(4, 0b1100)])
print("disjoint edges partitionable:", is_partitionable(disjoint))

# The dual search fails in the same way, which is the content of the
# equivalence: both sides answer no.
dual_module = dualize_quotient(face_ring(disjoint))
print("dual generator-bottom decomposition:",
      generator_bottom_decomposition(dual_module))

rec = partition_duality_check(disjoint)
print("record:", "partitionable", rec.partitionable,
      " dual bottoms", rec.dual_generator_bottoms, " agree:", rec.ok)

# Cohen-Macaulay complexes of this size are all partitionable; the
# record carries the CM flag so surveys can look for the converse.
rec = partition_duality_check(path)
print("path: CM", rec.cohen_macaulay, " partitionable", rec.partitionable)
