"""Matrix factorizations and the doubling functor.

A module over a hypersurface ring S/f with no free summands is presented by
a square matrix pair (A, B) with A*B = B*A = f*I.  Adding a fresh quadratic
term xy to the potential doubles the pair in blocks and preserves every
stable Hom dimension: the singularity categories in consecutive even (or
odd) dimensions are equivalent.
"""

from singcat import models
from singcat.matfac import knorrer, mf_from_module, mf_shift, mf_stable_hom


def show(X, name):
    rows_a = ["[" + ", ".join(repr(p) for p in row) + "]" for row in X.A]
    rows_b = ["[" + ", ".join(repr(p) for p in row) + "]" for row in X.B]
    print(f"{name}: potential {X.f!r}")
    print("  A =", "; ".join(rows_a))
    print("  B =", "; ".join(rows_b))


print("== from modules to factorizations ==")
A = models.dual_numbers("Q")
X0 = mf_from_module(models.point_module(A))
show(X0, "point module on z^2")

B = models.node_curve("Q")
Xz = mf_from_module(models.branch_module_z(B))
show(Xz, "branch module on zw")
print("the shift swaps the two factors:")
show(mf_shift(Xz), "shifted branch")

C = models.cone_ring("Q")
XL = mf_from_module(models.cone_L1(C))
show(XL, "rank-one module (x, z) on xy + zw")

print()
print("== doubling against a fresh xy ==")
K0 = knorrer(X0, "x", "y")
show(K0, "doubled point module (now on z^2 + xy)")
print(f"dimensions before doubling: {mf_stable_hom(X0, X0)}")
print(f"dimensions after  doubling: {mf_stable_hom(K0, K0)}")

Kz = knorrer(Xz, "x", "y")
Kw = knorrer(mf_from_module(models.branch_module_w(B)), "x", "y")
print()
print("node branches double to the two planes through the threefold point:")
print(f"  self pair:  {mf_stable_hom(Xz, Xz)} -> {mf_stable_hom(Kz, Kz)}")
print(f"  cross pair: {mf_stable_hom(Xz, mf_from_module(models.branch_module_w(B)))}"
      f" -> {mf_stable_hom(Kz, Kw)}")

print()
print("== the non-split curve doubles to the non-split threefold ==")
Cns = models.nonsplit_curve("Q")
Xc = mf_from_module(models.normalization_module(Cns))
Kc = knorrer(Xc, "x", "y")
print(f"dimensions: {mf_stable_hom(Xc, Xc)} -> {mf_stable_hom(Kc, Kc)}")
print("one indecomposable over Q whose base change splits into two planes")
