"""
Prime filtrations by facet peeling
==================================

Every squarefree module has a filtration whose successive quotients are
shifted copies of S/P for monomial primes P.  Peeling a facet of the
support at each step produces one, and the filtration dualizes step by
step alongside the module.
"""

from sqstanley import (
    SqIdeal,
    SqQuotient,
    dualize_filtration,
    dualize_quotient,
    facet_peel_filtration,
    filtration_to_decomposition,
    validate_filtration,
)

module = SqQuotient(3, SqIdeal.of(3, [0b111]), SqIdeal.of(3, [0]))
filt = facet_peel_filtration(module)
print("filtration of S/(x1x2x3):")
for step in filt.steps:
    print("  degree", step.degree, " prime", step.prime)
print("valid:", validate_filtration(module, filt))

# Each step reads as an interval, so the filtration is also a Stanley
# decomposition (generally not an optimal one).
dec = filtration_to_decomposition(filt)
print("as intervals:")
for iv in dec.intervals:
    print("   ", iv.bottom, "..", iv.top)
print("sdepth of this decomposition:", dec.sdepth)

# The dual filtration filters the dual module.
dual = dualize_quotient(module)
dfilt = dualize_filtration(filt)
print("dual filtration valid on the dual module:",
      validate_filtration(dual, dfilt))
for step in dfilt.steps:
    print("  degree", step.degree, " prime", step.prime)
