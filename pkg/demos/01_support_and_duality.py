"""
Squarefree supports and Alexander duality
=========================================

A quotient J/I of monomial ideals is a squarefree module exactly when
its multigraded support is a set of squarefree degrees closed under the
interval order, and everything the package does starts from that support.
"""

from sqstanley import (
    IndexSet,
    Monomial,
    MonomialIdeal,
    build_quotient,
    dualize_quotient,
    tilde,
    SqIdeal,
)

# The pair I = (x1^2, x1x2) inside J = (x1^2, x1x2, x2x3) is not
# squarefree as written, but the quotient J/I is: the only monomials of
# J outside I are the multiples of x2x3 avoiding x1, so the support is
# the single set {2, 3}.
inner = MonomialIdeal.of(3, [Monomial.of(2, 0, 0), Monomial.of(1, 1, 0)])
outer = MonomialIdeal.of(3, [Monomial.of(2, 0, 0), Monomial.of(1, 1, 0),
                             Monomial.of(0, 1, 1)])
module = build_quotient(inner, outer)
print("support of J/I:", [str(IndexSet(3, m)) for m in module.support_masks()])

# Swapping x1x2 out of the inner ideal breaks the squarefree condition,
# and the constructor refuses with a witness.
try:
    build_quotient(
        MonomialIdeal.of(3, [Monomial.of(2, 0, 0), Monomial.of(0, 1, 1)]),
        outer)
except ValueError as e:
    print("rejected:", e)

# Alexander duality on ideals sends the squarefree ideal of a complex to
# the ideal generated by complements of its facets.
ideal = SqIdeal.of(3, [0b011, 0b110])
print("I =", ideal)
print("tilde(I) =", tilde(ideal))

# On modules, duality complements every support set.  Applying it twice
# returns the original module.
dual = dualize_quotient(module)
print("support of the dual:",
      [str(IndexSet(3, m)) for m in dual.support_masks()])
double = dualize_quotient(dual)
print("double dual equals the module:",
      double.support_masks() == module.support_masks())
