"""Matrix factorizations of a hypersurface potential.

A factorization of f over the ambient polynomial ring S is a square pair
(A, B) with A*B = B*A = f*I.  coker(A mod f) is the associated MCM module
over S/f; the shift functor swaps the factors and the Knoerrer functor
doubles the size against a fresh quadratic term f + xy.

Stable Hom dimensions are the homology of the Z/2-graded Hom complex

    (u, v) -> (A'v + uB, B'u + vA)     [odd -> even]
    (a, b) -> (A'b - aA, B'a - bB)     [even -> odd]

computed exactly as a subquotient of a free S-module, so no degree bounds
enter: morphisms modulo homotopy in even degree, maps to the shift in odd.
"""

from __future__ import annotations

from .poly import PolyRing, Polynomial
from .quotient import QuotientRing
from .modules import FPModule, _prune_columns, _sort_columns
from .modgb import SubmoduleGB, vec_from_polys, vec_to_polys


class MFError(ValueError):
    pass


def _mat_mul(ring: PolyRing, A, B):
    n = len(A)
    m = len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = ring.zero()
            for k in range(len(B)):
                s = s + A[i][k] * B[k][j]
            row.append(s)
        out.append(row)
    return out


def _is_f_identity(ring: PolyRing, M, f: Polynomial) -> bool:
    n = len(M)
    for i in range(n):
        for j in range(n):
            want = f if i == j else ring.zero()
            if M[i][j] != want:
                return False
    return True


class MatrixFactorization:
    """Square pair (A, B) over the ambient ring with A*B = B*A = f*I."""

    def __init__(self, ring: PolyRing, f: Polynomial, A, B, check: bool = True):
        self.ring = ring
        self.f = f
        self.A = [list(r) for r in A]
        self.B = [list(r) for r in B]
        self.size = len(self.A)
        if check and not self.is_valid():
            raise MFError("A*B = B*A = f*I fails")

    def is_valid(self) -> bool:
        if len(self.A) != len(self.B):
            return False
        if any(len(r) != self.size for r in self.A + self.B):
            return False
        if self.size == 0:
            return True
        return (_is_f_identity(self.ring, _mat_mul(self.ring, self.A, self.B), self.f)
                and _is_f_identity(self.ring, _mat_mul(self.ring, self.B, self.A), self.f))

    def shift(self) -> "MatrixFactorization":
        return MatrixFactorization(self.ring, self.f, self.B, self.A, check=False)

    def direct_sum(self, other: "MatrixFactorization") -> "MatrixFactorization":
        if other.ring != self.ring or other.f != self.f:
            raise MFError("summands must share ring and potential")
        n, m = self.size, other.size
        z = self.ring.zero()

        def block(X, Y):
            out = []
            for i in range(n):
                out.append(list(X[i]) + [z] * m)
            for i in range(m):
                out.append([z] * n + list(Y[i]))
            return out

        return MatrixFactorization(self.ring, self.f,
                                   block(self.A, other.A), block(self.B, other.B),
                                   check=False)

    @classmethod
    def zero(cls, ring: PolyRing, f: Polynomial) -> "MatrixFactorization":
        return cls(ring, f, [], [], check=False)

    def quotient_ring(self) -> QuotientRing:
        return QuotientRing(self.ring, [self.f])

    def module(self) -> FPModule:
        """coker(A mod f) as a finitely presented module over S/f."""
        R = self.quotient_ring()
        cols = [[self.A[i][j] for i in range(self.size)] for j in range(self.size)]
        return FPModule(R, self.size, cols)

    def __repr__(self):
        return f"MF(size={self.size}, f={self.f!r})"


def mf_check(ring: PolyRing, A, B, f: Polynomial) -> bool:
    if len(A) != len(B) or any(len(r) != len(A) for r in A) \
            or any(len(r) != len(B) for r in B):
        raise MFError("matrices must be square of equal size")
    try:
        return MatrixFactorization(ring, f, A, B).is_valid()
    except MFError:
        return False


def mf_shift(X: MatrixFactorization) -> MatrixFactorization:
    return X.shift()


def knorrer(X: MatrixFactorization, xname: str, yname: str) -> MatrixFactorization:
    """Factorization of f + x*y over S[x, y] by the block doubling
    A' = [[A, -yI], [xI, B]], B' = [[B, yI], [-xI, A]]."""
    if xname in X.ring.variables or yname in X.ring.variables or xname == yname:
        raise MFError("Knoerrer variables collide with the ambient ring")
    S2 = X.ring.extend([xname, yname])
    x, y = S2.gen(xname), S2.gen(yname)
    n = X.size
    A = [[p.map_to(S2) for p in row] for row in X.A]
    B = [[p.map_to(S2) for p in row] for row in X.B]
    z = S2.zero()

    def blocks(TL, tr_scale, BR, bl_scale):
        out = []
        for i in range(n):
            out.append(list(TL[i]) + [tr_scale if i == j else z for j in range(n)])
        for i in range(n):
            out.append([bl_scale if i == j else z for j in range(n)] + list(BR[i]))
        return out

    A2 = blocks(A, -y, B, x)
    B2 = blocks(B, y, A, -x)
    f2 = X.f.map_to(S2) + x * y
    return MatrixFactorization(S2, f2, A2, B2)


def reduce_trivial_blocks(X: MatrixFactorization) -> MatrixFactorization:
    """Split off trivial (unit, f)-blocks: the result presents the same
    object of the singularity category with no unit entries in A or B.

    Row operations on B are column operations on A and vice versa, so the
    factorization identities are preserved at every step."""
    ring = X.ring
    F = ring.field
    A = [[p for p in row] for row in X.A]
    B = [[p for p in row] for row in X.B]

    def find_unit(M):
        for i, row in enumerate(M):
            for j, p in enumerate(row):
                if not p.is_zero() and p.total_deg() == 0:
                    return i, j
        return None

    def eliminate(M, other, i, j):
        # clear row i and column j of M around the unit at (i, j);
        # mirror the inverse operations on `other`
        unit = M[i][j]
        inv = ring.const(F.inv(unit.constant_coeff()))
        n = len(M)
        # row ops on M: R_k -= (M[k][j]/u) R_i ; mirrored as column ops on other
        for k in range(n):
            if k == i:
                continue
            c = M[k][j] * inv
            if c.is_zero():
                continue
            for t in range(n):
                M[k][t] = M[k][t] - c * M[i][t]
            for t in range(n):
                other[t][i] = other[t][i] + c * other[t][k]
        # column ops on M: C_t -= (M[i][t]/u) C_j ; mirrored as row ops on other
        for t in range(n):
            if t == j:
                continue
            c = M[i][t] * inv
            if c.is_zero():
                continue
            for k in range(n):
                M[k][t] = M[k][t] - M[k][j] * c
            for k in range(n):
                other[j][k] = other[j][k] + c * other[t][k]

    while True:
        hit = find_unit(B)
        if hit is not None:
            i, j = hit
            eliminate(B, A, i, j)
            B = [[B[k][t] for t in range(len(B)) if t != j] for k in range(len(B)) if k != i]
            A = [[A[k][t] for t in range(len(A)) if t != i] for k in range(len(A)) if k != j]
            continue
        hit = find_unit(A)
        if hit is not None:
            i, j = hit
            eliminate(A, B, i, j)
            A = [[A[k][t] for t in range(len(A)) if t != j] for k in range(len(A)) if k != i]
            B = [[B[k][t] for t in range(len(B)) if t != i] for k in range(len(B)) if k != j]
            continue
        break
    return MatrixFactorization(ring, X.f, A, B)


def mf_from_module(M: FPModule) -> MatrixFactorization:
    """Factorization with coker(A mod f) = M, via the length-one ambient
    resolution: the kernel of S^g -> M is free of rank g for MCM M without
    free summands, and its generator matrix D satisfies D*E = f*I."""
    R = M.ring
    if not R.hypersurface:
        raise MFError("matrix factorizations need a hypersurface ring")
    S = R.ambient
    f = R.gb[0]
    g = M.ngens
    cols = [[S_poly for S_poly in col] for col in M.relations]
    gens = [vec_from_polys(col) for col in cols]
    for i in range(g):
        colf = [S.zero()] * g
        colf[i] = f
        gens.append(vec_from_polys(colf))
    free_R = QuotientRing(S, [])
    polys_cols = [vec_to_polys(S, v, g) for v in gens]
    pruned = _prune_columns(free_R, polys_cols, g)
    pruned = _sort_columns(free_R, pruned)
    if len(pruned) == 0:
        return MatrixFactorization.zero(S, f)
    if len(pruned) != g:
        raise MFError(f"stabilization failed: kernel needs {len(pruned)} generators "
                      f"for {g} module generators (module may not be MCM)")
    A = [[pruned[j][i] for j in range(g)] for i in range(g)]
    gb = SubmoduleGB(S, g, [vec_from_polys(c) for c in pruned])
    Bcols = []
    for i in range(g):
        colf = [S.zero()] * g
        colf[i] = f
        nf, cert = gb.normal_form(vec_from_polys(colf), with_cert=True)
        if nf:
            raise MFError("f*I does not lie in the kernel span: not a valid tail")
        Bcols.append(vec_to_polys(S, cert, g))
    B = [[Bcols[j][i] for j in range(g)] for i in range(g)]
    return reduce_trivial_blocks(MatrixFactorization(S, f, A, B))


# ---------------------------------------------------------------------------
# stable homs via the Z/2-graded Hom complex


def _flatten_index(nrows, i, j):
    return j * nrows + i


def _build_even_to_odd(ring, X, Y):
    """Columns of d0: (alpha, beta) -> (A'beta - alpha A, B'alpha - beta B)."""
    n, m = X.size, Y.size
    blk = m * n
    cols = []
    # alpha unit at (i0, j0): Hom(X0, Y0)
    for j0 in range(n):
        for i0 in range(m):
            vec = {}
            # component 1 entry (i0, l) -= A[j0][l]
            for l in range(n):
                p = X.A[j0][l]
                for mon, c in p.terms.items():
                    key = (_flatten_index(m, i0, l), mon)
                    vec[key] = ring.field.add(vec.get(key, ring.field.zero()),
                                              ring.field.neg(c))
            # component 2 entry (k, j0) += B'[k][i0]
            for k in range(m):
                p = Y.B[k][i0]
                for mon, c in p.terms.items():
                    key = (blk + _flatten_index(m, k, j0), mon)
                    vec[key] = ring.field.add(vec.get(key, ring.field.zero()), c)
            cols.append({k: v for k, v in vec.items() if not ring.field.is_zero(v)})
    # beta unit at (k0, l0): Hom(X1, Y1)
    for l0 in range(n):
        for k0 in range(m):
            vec = {}
            # component 1 entry (i, l0) += A'[i][k0]
            for i in range(m):
                p = Y.A[i][k0]
                for mon, c in p.terms.items():
                    key = (_flatten_index(m, i, l0), mon)
                    vec[key] = ring.field.add(vec.get(key, ring.field.zero()), c)
            # component 2 entry (k0, j) -= B[l0][j]
            for j in range(n):
                p = X.B[l0][j]
                for mon, c in p.terms.items():
                    key = (blk + _flatten_index(m, k0, j), mon)
                    vec[key] = ring.field.add(vec.get(key, ring.field.zero()),
                                              ring.field.neg(c))
            cols.append({k: v for k, v in vec.items() if not ring.field.is_zero(v)})
    return cols


def _build_odd_to_even(ring, X, Y):
    """Columns of d1: (u, v) -> (A'v + uB, B'u + vA): u: X1 -> Y0, v: X0 -> Y1."""
    n, m = X.size, Y.size
    blk = m * n
    cols = []
    # u unit at (i0, k0): Hom(X1, Y0)
    for k0 in range(n):
        for i0 in range(m):
            vec = {}
            # component 1 (to Hom(X0, Y0)) entry (i0, j) += B[k0][j]
            for j in range(n):
                p = X.B[k0][j]
                for mon, c in p.terms.items():
                    key = (_flatten_index(m, i0, j), mon)
                    vec[key] = ring.field.add(vec.get(key, ring.field.zero()), c)
            # component 2 (to Hom(X1, Y1)) entry (k, k0) += B'[k][i0]
            for k in range(m):
                p = Y.B[k][i0]
                for mon, c in p.terms.items():
                    key = (blk + _flatten_index(m, k, k0), mon)
                    vec[key] = ring.field.add(vec.get(key, ring.field.zero()), c)
            cols.append({k: v for k, v in vec.items() if not ring.field.is_zero(v)})
    # v unit at (k0, j0): Hom(X0, Y1)
    for j0 in range(n):
        for k0 in range(m):
            vec = {}
            # component 1 entry (i, j0) += A'[i][k0]
            for i in range(m):
                p = Y.A[i][k0]
                for mon, c in p.terms.items():
                    key = (_flatten_index(m, i, j0), mon)
                    vec[key] = ring.field.add(vec.get(key, ring.field.zero()), c)
            # component 2 entry (k0, l) += A[j0][l]
            for l in range(n):
                p = X.A[j0][l]
                for mon, c in p.terms.items():
                    key = (blk + _flatten_index(m, k0, l), mon)
                    vec[key] = ring.field.add(vec.get(key, ring.field.zero()), c)
            cols.append({k: v for k, v in vec.items() if not ring.field.is_zero(v)})
    return cols


def _homology_dim(ring: PolyRing, npos, d_out_cols, d_in_cols):
    """dim_k of ker(d_out)/im(d_in) inside S^npos (exact, no truncation)."""
    if npos == 0:
        return 0
    gb_out = SubmoduleGB(ring, npos, d_out_cols)
    U = gb_out.syzygies()
    # syzygy coords live on the source positions of d_out = our npos
    kernel_gens = []
    for s in U:
        kernel_gens.append(dict(s))
    sub = SubmoduleGB(ring, npos, kernel_gens + d_in_cols)
    W = []
    for s in sub.syzygies():
        w = {(p, m): c for (p, m), c in s.items() if p < len(kernel_gens)}
        if w:
            W.append(w)
    pres = SubmoduleGB(ring, len(kernel_gens), W)
    if not kernel_gens:
        return 0
    return pres.quotient_dim()


def mf_stable_hom(X: MatrixFactorization, Y: MatrixFactorization):
    """(even, odd) dimensions of stable homs between two factorizations.

    Raises MFError when a dimension is infinite (non-isolated singularity).
    """
    if X.ring != Y.ring or X.f != Y.f:
        raise MFError("factorizations must share ring and potential")
    if X.size == 0 or Y.size == 0:
        return (0, 0)
    ring = X.ring
    npos = 2 * X.size * Y.size
    d0 = _build_even_to_odd(ring, X, Y)
    d1 = _build_odd_to_even(ring, X, Y)
    even = _homology_dim(ring, npos, d0, d1)
    odd = _homology_dim(ring, npos, d1, d0)
    if even is None or odd is None:
        raise MFError("infinite-dimensional stable hom: the singular locus "
                      "of the potential is not isolated on the support")
    return (even, odd)
