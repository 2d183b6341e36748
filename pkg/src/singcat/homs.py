"""Hom, Ext, stable Hom, Yoneda extensions, MCM tests for FPModules.

All spaces of module maps are handled as matrix subquotients: a space of
h x w matrices over R spanned by generators U modulo a null space V, both
obtained from syzygy computations.  Finite k-bases come from Groebner
staircases; graded degree-0 bases are available when source and target carry
generator degrees.

Stable Hom follows the free-cover recipe: Hom(M,N) modulo the image of
Hom(M, R^{g_N}) -> Hom(M,N) induced by the generator surjection R^{g_N} -> N.
"""

from __future__ import annotations

from .findim import FiniteDimAlgebra
from .modules import FPModule, FreeResolution
from .modgb import SubmoduleGB, vec_from_polys, vec_to_polys
from .quotient import QuotientRing


class InfiniteDimensionError(ValueError):
    pass


class HomError(ValueError):
    pass


def _matrix_to_vec(cols):
    """Columns (lists of polynomials) to a flattened vector, column-major."""
    flat = []
    for col in cols:
        flat.extend(col)
    return vec_from_polys(flat)


def _vec_to_matrix(ring, vec, nrows, ncols):
    polys = vec_to_polys(ring.ambient, vec, nrows * ncols)
    return [[ring.normal_form(polys[j * nrows + i]) for i in range(nrows)]
            for j in range(ncols)]


class MatrixSubquotient:
    """Space of h x w matrices over R: span(U) / span(V), U and V flattened.

    Optional row/column generator degrees enable graded degree-d bases.
    """

    def __init__(self, ring: QuotientRing, nrows: int, ncols: int, U, V,
                 row_degrees=None, col_degrees=None):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.U = list(U)
        self.V = list(V)
        self.row_degrees = row_degrees
        self.col_degrees = col_degrees
        self._big = None
        self._pres = None

    def _position_degrees(self):
        if self.row_degrees is None or self.col_degrees is None:
            return None
        out = []
        for j in range(self.ncols):
            for i in range(self.nrows):
                out.append(self.row_degrees[i] - self.col_degrees[j])
        return out

    def big_gb(self) -> SubmoduleGB:
        if self._big is None:
            self._big = SubmoduleGB(self.ring.ambient, self.nrows * self.ncols,
                                    self.U + self.V, pad_polys=self.ring.gb)
        return self._big

    def pres_gb(self) -> SubmoduleGB:
        if self._pres is None:
            W = []
            for s in self.big_gb().syzygies():
                w = {(p, m): c for (p, m), c in s.items() if p < len(self.U)}
                if w:
                    W.append(w)
            self._pres = SubmoduleGB(self.ring.ambient, len(self.U), W,
                                     pad_polys=self.ring.gb)
        return self._pres

    def gen_degrees(self):
        """Map degree of each U generator (graded context only)."""
        pos_degs = self._position_degrees()
        if pos_degs is None:
            raise HomError("not a graded context")
        out = []
        for u in self.U:
            degs = {self.ring.ambient.weighted_deg(m) + pos_degs[p]
                    for (p, m) in u}
            if len(degs) != 1:
                raise HomError("inhomogeneous hom generator in graded context")
            out.append(degs.pop())
        return out

    def dim(self):
        """Total k-dimension, or None if infinite."""
        if not self.U:
            return 0
        return self.pres_gb().quotient_dim()

    def graded_dim(self, degree: int = 0):
        if not self.U:
            return 0
        return self.pres_gb().quotient_graded_dim(degree, self.gen_degrees())

    def basis_items(self, graded_degree=None):
        """Staircase basis as (generator index, monomial) pairs."""
        if not self.U:
            return []
        if graded_degree is None:
            return self.pres_gb().quotient_std_monomials()
        return self.pres_gb().quotient_graded_monomials(graded_degree, self.gen_degrees())

    def item_vec(self, item):
        from .poly import mon_mul
        idx, mon = item
        out = {}
        for (p, m), c in self.U[idx].items():
            out[(p, mon_mul(m, mon))] = c
        return out

    def item_matrix(self, item):
        return _vec_to_matrix(self.ring, self.item_vec(item), self.nrows, self.ncols)

    def coords(self, vec, basis_items):
        """Coordinates of a flattened matrix in span(U) over the given basis."""
        F = self.ring.field
        nf, cert = self.big_gb().normal_form(vec, with_cert=True)
        if nf:
            raise HomError("matrix does not lie in the hom space")
        cvec = {(p, m): c for (p, m), c in cert.items() if p < len(self.U)}
        red = self.pres_gb().normal_form(cvec)
        index = {it: k for k, it in enumerate(basis_items)}
        out = [F.zero()] * len(basis_items)
        for (p, m), c in red.items():
            key = (p, m)
            if key not in index:
                raise HomError("coordinate outside the chosen basis "
                               "(mixed degrees or stale basis)")
            out[index[key]] = c
        return out

    def _null_gb(self) -> SubmoduleGB:
        if getattr(self, "_gbV", None) is None:
            self._gbV = SubmoduleGB(self.ring.ambient, self.nrows * self.ncols,
                                    self.V, pad_polys=self.ring.gb)
        return self._gbV

    def is_zero_space(self) -> bool:
        """True iff span(U) is contained in span(V) + ideal."""
        if not self.U:
            return True
        gbV = self._null_gb()
        return all(gbV.contains(u) for u in self.U)

    def element_class_is_zero(self, vec) -> bool:
        return self._null_gb().contains(vec)


# ---------------------------------------------------------------------------
# Hom spaces


def _hom_generators(M: FPModule, N: FPModule, modulo_relations: bool):
    """Generators of matrices phi with phi o d_M landing in rel(N)-span
    (modulo_relations=True) or in the ideal only (False: maps to the free
    cover R^{g_N})."""
    ring = M.ring
    h, g = N.ngens, M.ngens
    rM = len(M.relations)
    if rM == 0:
        units = []
        for j in range(g):
            for i in range(h):
                units.append({(j * h + i, (0,) * ring.ambient.nvars): ring.field.one()})
        return units
    L_images = []
    for j in range(g):
        for i in range(h):
            vec = {}
            for l, col in enumerate(M.relations):
                p = col[j]
                for m, c in p.terms.items():
                    vec[(l * h + i, m)] = c
            L_images.append(vec)
    T = []
    if modulo_relations:
        for l in range(rM):
            for t in N.relations:
                vec = {}
                for i, p in enumerate(t):
                    for m, c in p.terms.items():
                        vec[(l * h + i, m)] = c
                if vec:
                    T.append(vec)
    B0 = SubmoduleGB(ring.ambient, h * rM, L_images + T, pad_polys=ring.gb)
    U = []
    for s in B0.syzygies():
        u = {(p, m): c for (p, m), c in s.items() if p < g * h}
        if u:
            U.append(u)
    return U


def _coboundaries(M: FPModule, N: FPModule):
    h, g = N.ngens, M.ngens
    V = []
    for j in range(g):
        for t in N.relations:
            vec = {}
            for i, p in enumerate(t):
                for m, c in p.terms.items():
                    vec[(j * h + i, m)] = c
            if vec:
                V.append(vec)
    return V


class MorphismSpace:
    """k-basis of Hom_R(M, N) (or its stable quotient), with composition.

    mode: 'full' (finite total dimension), 'graded0' (degree-zero part of a
    graded Hom), or 'module' (presentation only, no k-basis).
    """

    def __init__(self, M: FPModule, N: FPModule, msq: MatrixSubquotient,
                 mode: str, stable: bool):
        self.M = M
        self.N = N
        self.msq = msq
        self.mode = mode
        self.stable = stable
        if mode == "full":
            self.basis = msq.basis_items()
        elif mode == "graded0":
            self.basis = msq.basis_items(graded_degree=0)
        else:
            self.basis = None

    @property
    def dim(self):
        if self.basis is None:
            raise HomError("module-mode hom space has no k-basis")
        return len(self.basis)

    def basis_matrices(self):
        return [self.msq.item_matrix(it) for it in self.basis]

    def coords(self, matrix_cols):
        return self.msq.coords(_matrix_to_vec(matrix_cols), self.basis)

    def compose(self, phi_cols, psi_cols):
        """Matrix of phi o psi where psi: P -> M and phi: M -> N
        (phi given here, psi over this space's M as source arrangement).

        Columns are lists over target generators; composition is matrix
        product over R followed by normal form."""
        ring = self.M.ring
        h = len(phi_cols[0]) if phi_cols else 0
        out = []
        for col in psi_cols:
            acc = [ring.zero() for _ in range(h)]
            for i_mid, entry in enumerate(col):
                if entry.is_zero():
                    continue
                for i in range(h):
                    acc[i] = acc[i] + phi_cols[i_mid][i] * entry
            out.append([ring.normal_form(p) for p in acc])
        return out

    def verify_bases_are_morphisms(self) -> bool:
        """Exact check: every basis matrix sends rel(M) into rel(N)-span."""
        relN_gb = self.N.rel_gb()
        for mat in self.basis_matrices():
            for col in self.M.relations:
                image = [self.M.ring.zero() for _ in range(self.N.ngens)]
                for j, entry in enumerate(col):
                    for i in range(self.N.ngens):
                        image[i] = image[i] + mat[j][i] * entry
                if not relN_gb.contains(vec_from_polys(image)):
                    return False
        return True

    def algebra(self, labels=None) -> FiniteDimAlgebra:
        """Multiplication table on the basis (requires M == N presentation)."""
        if self.M is not self.N and (self.M.ngens != self.N.ngens
                                     or self.M.relations != self.N.relations):
            raise HomError("algebra structure needs equal source and target")
        mats = self.basis_matrices()
        d = len(mats)
        table = []
        for a in range(d):
            row = []
            for b in range(d):
                comp = self.compose(mats[a], mats[b])
                row.append(self.coords(comp))
            table.append(row)
        ring = self.M.ring
        ident = [[ring.one() if i == j else ring.zero() for i in range(self.M.ngens)]
                 for j in range(self.M.ngens)]
        unit = self.coords(ident)
        labs = labels or [f"f{k}" for k in range(d)]
        return FiniteDimAlgebra(ring.field, labs, table, unit)

    def presentation(self) -> FPModule:
        """Hom as an FPModule on the U-generators (module mode)."""
        W = []
        for s in self.msq.big_gb().syzygies():
            w = {(p, m): c for (p, m), c in s.items() if p < len(self.msq.U)}
            if w:
                W.append(w)
        cols = [vec_to_polys(self.M.ring.ambient, w, len(self.msq.U)) for w in W]
        return FPModule(self.M.ring, len(self.msq.U), cols)


def hom_space(M: FPModule, N: FPModule, stable: bool = False,
              mode: str = "auto") -> MorphismSpace:
    if M.ring != N.ring:
        raise HomError("modules live over different rings")
    h, g = N.ngens, M.ngens
    U = _hom_generators(M, N, modulo_relations=True)
    V = _coboundaries(M, N)
    if stable:
        V = V + _hom_generators(M, N, modulo_relations=False)
    msq = MatrixSubquotient(M.ring, h, g, U, V,
                            row_degrees=N.gen_degrees, col_degrees=M.gen_degrees)
    if mode == "module":
        return MorphismSpace(M, N, msq, "module", stable)
    if mode == "graded0":
        if M.gen_degrees is None or N.gen_degrees is None:
            raise HomError("degree-zero mode needs graded modules")
        return MorphismSpace(M, N, msq, "graded0", stable)
    if mode in ("auto", "full"):
        d = msq.dim()
        if d is not None:
            return MorphismSpace(M, N, msq, "full", stable)
        if mode == "full" or stable:
            raise InfiniteDimensionError(
                "stable hom space is infinite-dimensional (non-isolated "
                "singularity in the module support)" if stable else
                "hom space is infinite-dimensional over k")
    if M.gen_degrees is None or N.gen_degrees is None:
        raise InfiniteDimensionError(
            "hom space is infinite-dimensional and modules are not graded; "
            "request module mode")
    return MorphismSpace(M, N, msq, "graded0", stable)


def stable_hom(M: FPModule, N: FPModule) -> MorphismSpace:
    """Hom in the singularity category for MCM-type inputs: Hom(M,N) modulo
    maps factoring through the free cover of N."""
    return hom_space(M, N, stable=True, mode="auto")


# ---------------------------------------------------------------------------
# Ext


def _ext_subquotient(M: FPModule, N: FPModule, p: int, res: FreeResolution):
    """Ext^p(M, N) as a matrix subquotient of Hom(F_p, N)."""
    ring = M.ring
    h = N.ngens
    r_p = res.rank(p)
    if r_p == 0:
        return MatrixSubquotient(ring, h, 0, [], [])
    d_next = res.differential(p + 1)
    r_next = len(d_next)
    if r_next == 0:
        U = []
        for j in range(r_p):
            for i in range(h):
                U.append({(j * h + i, (0,) * ring.ambient.nvars): ring.field.one()})
    else:
        L_images = []
        for j in range(r_p):
            for i in range(h):
                vec = {}
                for l, col in enumerate(d_next):
                    poly = col[j]
                    for m, c in poly.terms.items():
                        vec[(l * h + i, m)] = c
                L_images.append(vec)
        T = []
        for l in range(r_next):
            for t in N.relations:
                vec = {}
                for i, poly in enumerate(t):
                    for m, c in poly.terms.items():
                        vec[(l * h + i, m)] = c
                if vec:
                    T.append(vec)
        B0 = SubmoduleGB(ring.ambient, h * r_next, L_images + T, pad_polys=ring.gb)
        U = []
        for s in B0.syzygies():
            u = {(q, m): c for (q, m), c in s.items() if q < r_p * h}
            if u:
                U.append(u)
    V = []
    for j in range(r_p):
        for t in N.relations:
            vec = {}
            for i, poly in enumerate(t):
                for m, c in poly.terms.items():
                    vec[(j * h + i, m)] = c
            if vec:
                V.append(vec)
    if p >= 1:
        d_p = res.differential(p)
        r_prev = res.rank(p - 1)
        for jprev in range(r_prev):
            for i in range(h):
                vec = {}
                for l, col in enumerate(d_p):
                    poly = col[jprev]
                    for m, c in poly.terms.items():
                        vec[(l * h + i, m)] = c
                if vec:
                    V.append(vec)
    row_degs = N.gen_degrees
    col_degs = res.step_degrees[p] if res.step_degrees[p] is not None else None
    return MatrixSubquotient(ring, h, r_p, U, V,
                             row_degrees=row_degs, col_degrees=col_degs)


def ext_dims(M: FPModule, N: FPModule, p_max: int, p_min: int = 0):
    """dim_k Ext^p_R(M, N) for p_min <= p <= p_max.

    Raises InfiniteDimensionError naming the first degree with an
    infinite-dimensional Ext group.
    """
    if M.ring != N.ring:
        raise HomError("modules live over different rings")
    res = M.resolve(p_max + 1)
    out = {}
    for p in range(p_min, p_max + 1):
        msq = _ext_subquotient(M, N, p, res)
        d = msq.dim()
        if d is None:
            raise InfiniteDimensionError(f"Ext^{p} is infinite-dimensional over k")
        out[p] = d
    return out


def ext_space(M: FPModule, N: FPModule, p: int) -> MatrixSubquotient:
    """The Ext^p subquotient itself; basis items yield cocycle matrices
    (columns indexed by the step-p free generators, rows by N generators)."""
    res = M.resolve(p + 1)
    return _ext_subquotient(M, N, p, res)


def ext_is_zero(M: FPModule, N: FPModule, p: int) -> bool:
    """Exact vanishing test for Ext^p(M, N), valid even when the group would
    be infinite-dimensional over k."""
    return ext_space(M, N, p).is_zero_space()


# ---------------------------------------------------------------------------
# Yoneda extensions


class Extension:
    """0 -> A -> E -> B -> 0 built from a degree-one cocycle."""

    def __init__(self, E: FPModule, A: FPModule, B: FPModule):
        self.E = E
        self.A = A
        self.B = B

    def inclusion_cols(self):
        ring = self.E.ring
        cols = []
        for i in range(self.A.ngens):
            col = [ring.zero()] * self.E.ngens
            col[self.B.ngens + i] = ring.one()
            cols.append(col)
        return cols

    def projection_cols(self):
        ring = self.E.ring
        cols = []
        for j in range(self.E.ngens):
            col = [ring.zero()] * self.B.ngens
            if j < self.B.ngens:
                col[j] = ring.one()
            cols.append(col)
        return cols

    def verify_exact(self) -> bool:
        """Exactness by Groebner checks: ker(A -> E) = rel(A), which fails
        for a non-cocycle, and ker(E -> B) = image of A plus relations."""
        ring = self.E.ring
        gB, gA = self.B.ngens, self.A.ngens
        # ker(incl): u with (0, u) in rel(E)-span must lie in rel(A)-span
        incl_vecs = []
        for i in range(gA):
            col = [ring.zero()] * self.E.ngens
            col[gB + i] = ring.one()
            incl_vecs.append(vec_from_polys(col))
        gens = incl_vecs + [vec_from_polys(c) for c in self.E.relations]
        gb = SubmoduleGB(ring.ambient, self.E.ngens, gens, pad_polys=ring.gb)
        relA_gb = self.A.rel_gb()
        for s in gb.syzygies():
            ker_elt = [ring.zero()] * gA
            hit = False
            for (pidx, m), c in s.items():
                if pidx < gA:
                    hit = True
                    ker_elt[pidx] = ker_elt[pidx] + ring.ambient.monomial(m, c)
            if hit and not relA_gb.contains(vec_from_polys(ker_elt)):
                return False
        # ker(proj) subset image(incl) + rel(E)
        target_gens = incl_vecs + [vec_from_polys(c) for c in self.E.relations]
        tgt = SubmoduleGB(ring.ambient, self.E.ngens, target_gens, pad_polys=ring.gb)
        for relcol in self.B.relations:
            lifted = [ring.normal_form(p) for p in relcol] + [ring.zero()] * gA
            if not tgt.contains(vec_from_polys(lifted)):
                return False
        return True


def yoneda_extension(cocycle_cols, A: FPModule, B: FPModule,
                     require_nontrivial: bool = False) -> Extension:
    """Extension 0 -> A -> E -> B -> 0 from a cocycle in Hom(F_1(B), A).

    cocycle_cols[l] lists the A-coordinates assigned to the l-th relation
    column of B.  The zero class yields the split extension A (+) B.
    """
    ring = A.ring
    if B.ring != ring:
        raise HomError("modules live over different rings")
    if len(cocycle_cols) != len(B.relations):
        raise HomError("cocycle shape does not match the relations of B")
    if require_nontrivial:
        space = ext_space(B, A, 1)
        vec = _matrix_to_vec([[ring.normal_form(p) for p in col] for col in cocycle_cols])
        if not vec or space.element_class_is_zero(vec):
            raise HomError("zero class passed with require_nontrivial")
    gE = B.ngens + A.ngens
    cols = []
    for l, relcol in enumerate(B.relations):
        col = [ring.normal_form(p) for p in relcol]
        col += [ring.normal_form(-p) for p in cocycle_cols[l]]
        cols.append(col)
    for relcol in A.relations:
        col = [ring.zero()] * B.ngens + list(relcol)
        cols.append(col)
    degrees = None
    if A.gen_degrees is not None and B.gen_degrees is not None:
        degrees = tuple(B.gen_degrees) + tuple(A.gen_degrees)
    E = FPModule(ring, gE, cols, degrees)
    if degrees is not None and not E.is_graded():
        E = FPModule(ring, gE, cols, None)
    return Extension(E, A, B)


# ---------------------------------------------------------------------------
# MCM test and fiber counts


def is_mcm(M: FPModule, bound: int | None = None):
    """Ext^i(M, R) = 0 for 0 < i <= bound (Gorenstein criterion).

    Returns (True, None) or (False, first nonvanishing degree).
    """
    ring = M.ring
    if bound is None:
        bound = max(ring.krull_dim_bound(), 1)
    N = FPModule.free(ring, 1, degrees=(0,) if M.gen_degrees is not None else None)
    res = M.resolve(bound + 1)
    for p in range(1, bound + 1):
        msq = _ext_subquotient(M, N, p, res)
        if not msq.is_zero_space():
            return False, p
    return True, None


def fiber_generators(M: FPModule, point_polys) -> int:
    """dim_k M/mM for the maximal ideal m generated by point_polys."""
    ring = M.ring
    gens = [vec_from_polys(col) for col in M.relations]
    for i in range(M.ngens):
        for f in point_polys:
            col = [ring.zero()] * M.ngens
            col[i] = ring.normal_form(f)
            v = vec_from_polys(col)
            if v:
                gens.append(v)
    gb = SubmoduleGB(ring.ambient, M.ngens, gens, pad_polys=ring.gb)
    d = gb.quotient_dim()
    if d is None:
        raise InfiniteDimensionError("fiber is infinite-dimensional: point ideal "
                                     "is not maximal")
    return d
