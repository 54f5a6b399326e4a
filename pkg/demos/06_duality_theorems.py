"""
Three dualities, checked instance by instance
=============================================

Projective dimension of a squarefree module equals the regularity of its
Alexander dual; a complex is Cohen-Macaulay exactly when its dual ideal
has a linear resolution; and the Stanley-depth inequality transfers to a
regularity inequality on the dual side.
"""

from sqstanley import (
    SimplicialComplex,
    IndexSet,
    all_quotients,
    depth_duality_check,
    eagon_reiner_check,
    terai_check,
)

# Terai's equality on every one of the 148 nonzero quotients over three
# variables.
records = [terai_check(m) for m in all_quotients(3)]
print("projdim == reg of dual on all", len(records), "modules:",
      all(r.ok for r in records))

# Eagon-Reiner on a path and on a non-Cohen-Macaulay example.
path = SimplicialComplex.from_facets(3, [IndexSet(3, 0b011), IndexSet(3, 0b110)])
rec = eagon_reiner_check(path)
print("path: CM", rec.cohen_macaulay, " dual linear", rec.dual_linear)

edge_point = SimplicialComplex.from_facets(
    3, [IndexSet(3, 0b011), IndexSet(3, 0b100)])
rec = eagon_reiner_check(edge_point)
print("edge plus point: CM", rec.cohen_macaulay,
      " dual linear", rec.dual_linear)

# The depth side: sdepth >= depth on a module is equivalent to
# hreg <= reg on its dual, because dual decompositions exchange the
# smallest interval top with the largest interval bottom.
for m in list(all_quotients(3))[:5]:
    r = depth_duality_check(m)
    print("sdepth", r.sdepth, ">= depth", r.depth, "is",
          r.sdepth >= r.depth, " | dual hreg", r.dual_hreg_min,
          "<= dual reg", r.dual_reg, "is", r.dual_hreg_min <= r.dual_reg)
