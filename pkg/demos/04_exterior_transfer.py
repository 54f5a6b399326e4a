"""
Moving a squarefree module to the exterior algebra
==================================================

The same support family defines a module over the exterior algebra, and
the transfer map theta sends the class of x_F to the class of e_F no
matter how x_F is presented through the generators.
"""

from sqstanley import (
    ExtElement,
    IndexSet,
    SqIdeal,
    SqQuotient,
    sigma,
    theta,
    theta_monomial,
    to_exterior,
    wedge,
)

# Signs first.  The wedge of basis elements is governed by counting
# inversions between the two index sets.
a = IndexSet(5, 0b00110)
b = IndexSet(5, 0b11000)
print("sigma({2,3},{4,5}) =", sigma(b, a), " so e_45 e_23 =",
      wedge(ExtElement.basis(5, b.mask), ExtElement.basis(5, a.mask)))

# Now a module: J/I with J = (x1, x2x3), I = (x1x2x3).
module = SqQuotient(3, SqIdeal.of(3, [0b111]), SqIdeal.of(3, [0b001, 0b110]))
emod = to_exterior(module)
print("support:", [str(IndexSet(3, m)) for m in emod.support_masks()])

# The degree {1,2} contains only the generator x1, giving the one-term
# presentation x2 * x1; theta lands on e_12.
f = IndexSet(3, 0b011)
print("theta at {1,2}:", theta_monomial(emod, f))

# A two-term presentation of the same degree through the same generator,
# with coefficients 3 and -2 summing to one, gives the same answer.
g = IndexSet(3, 0b001)
print("with coefficients 3, -2:", theta(emod, f, [(3, g), (-2, g)]))
print("agrees with the basis class:",
      theta(emod, f, [(3, g), (-2, g)]) == ExtElement.basis(3, f.mask))
