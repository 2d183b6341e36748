"""Stable endomorphism algebras of the three curve double points.

The stable Hom of two maximal Cohen-Macaulay modules is the ordinary Hom
modulo every map that factors through a free cover: it is the Hom space of
the singularity category.  This walk-through computes it for the three
one-dimensional models and shows how the ground field changes the answer
for the non-split point.
"""

from singcat import models
from singcat.findim import algebra_idempotents
from singcat.homs import stable_hom

print("== the double point z^2 = 0 ==")
A = models.dual_numbers("Q")
V1 = models.point_module(A)
S = stable_hom(V1, V1)
print(f"stable End of the point module: dimension {S.dim} (the identity only)")

print()
print("== the node zw = 0 ==")
B = models.node_curve("Q")
Mz, Mw = models.branch_module_z(B), models.branch_module_w(B)
print(f"stable Hom between the two branches: {stable_hom(Mz, Mw).dim}")
print(f"stable End of one branch:            {stable_hom(Mz, Mz).dim}")
print("the two branch modules are orthogonal simple objects")

print()
print("== the non-split point z^2 + z^3 + w^2 = 0 ==")
C = models.nonsplit_curve("Q")
Cp = models.normalization_module(C)
S = stable_hom(Cp, Cp)
alg = S.algebra()
print(f"stable End of the normalization: dimension {S.dim}")

# multiplication by the normalizing parameter t squares to -1 stably
tmat = [[C.zero(), C.one()], [C.parse("-z-1"), C.zero()]]
tco = S.coords(tmat)
sq = alg.mul(tco, tco)
print(f"(mult by t)^2 = {alg.to_str(sq)}  -- the algebra is k[t]/(t^2+1)")

print()
print("idempotent census of k[t]/(t^2+1):")
print(f"  over Q : {len(algebra_idempotents(alg))} idempotents (0 and 1)")
C5 = models.nonsplit_curve("F5")
S5 = stable_hom(models.normalization_module(C5), models.normalization_module(C5))
alg5 = S5.algebra()
idems = algebra_idempotents(alg5)
print(f"  over F5: {len(idems)} idempotents "
      f"({', '.join(alg5.to_str(v) for v in idems)})")
print("the extra idempotents over F5 witness that the category over Q")
print("is not idempotent complete: a projector exists with no kernel object")
