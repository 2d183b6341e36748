"""Finitely presented modules over affine quotient rings, and free resolutions.

An FPModule is coker(R^r -> R^g) given by relation columns.  Syzygy steps are
pruned of redundant generators and sorted canonically, so resolution tails
over hypersurface rings tend to repeat literally; when d_{i+2} = d_i is
detected the resolution is extended by copying.
"""

from __future__ import annotations

from .poly import Polynomial
from .quotient import QuotientRing
from .modgb import SubmoduleGB, vec_from_polys, vec_to_polys


def column_vec(col):
    return vec_from_polys(col)


def syzygies(ring: QuotientRing, columns):
    """Generators of the syzygy module of the given columns over the ring.

    Each column is a list of polynomials in the ambient ring; the result
    columns S satisfy M*S = 0 modulo the defining ideal and generate every
    such relation."""
    if not columns:
        return []
    npos = len(columns[0])
    vecs = [vec_from_polys([ring.normal_form(p) for p in col]) for col in columns]
    gb = SubmoduleGB(ring.ambient, npos, vecs, pad_polys=ring.gb)
    return [[ring.normal_form(p) for p in vec_to_polys(ring.ambient, s, len(columns))]
            for s in gb.syzygies()]


class FPModule:
    def __init__(self, ring: QuotientRing, ngens: int, relations, gen_degrees=None):
        self.ring = ring
        self.ngens = ngens
        self.relations = []
        for col in relations:
            if len(col) != ngens:
                raise ValueError("relation column has wrong length")
            self.relations.append([ring.normal_form(p) for p in col])
        self.gen_degrees = tuple(gen_degrees) if gen_degrees is not None else None
        self._rel_gb = None
        self._resolution = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def free(cls, ring: QuotientRing, rank: int, degrees=None) -> "FPModule":
        return cls(ring, rank, [], degrees)

    @classmethod
    def cyclic(cls, ring: QuotientRing, ideal_polys, degree: int = 0) -> "FPModule":
        """R/(ideal_polys) presented on one generator."""
        return cls(ring, 1, [[p] for p in ideal_polys], [degree])

    @classmethod
    def from_submodule(cls, ring: QuotientRing, elements, ambient_rank: int = 1,
                       ambient_degrees=None) -> "FPModule":
        """Module generated by elements of R^ambient_rank, presented by their
        syzygies.  Each element is a list of ambient_rank polynomials."""
        normed = [[ring.normal_form(p) for p in e] for e in elements]
        vecs = [vec_from_polys(e) for e in normed]
        gb = SubmoduleGB(ring.ambient, ambient_rank, vecs, pad_polys=ring.gb)
        syz = gb.syzygies()
        cols = [vec_to_polys(ring.ambient, s, len(elements)) for s in syz]
        degrees = None
        if ambient_degrees is not None:
            degrees = []
            for e in normed:
                d = None
                for i, p in enumerate(e):
                    if not p.is_zero():
                        d = _homogeneous_degree(ring, p) + ambient_degrees[i]
                        break
                if d is None:
                    raise ValueError("zero generator in submodule presentation")
                degrees.append(d)
        cols = _prune_columns(ring, cols, len(elements))
        cols = _sort_columns(ring, cols)
        return cls(ring, len(elements), cols, degrees)

    def direct_sum(self, other: "FPModule") -> "FPModule":
        if other.ring != self.ring:
            raise ValueError("mismatched rings")
        g = self.ngens + other.ngens
        zero = self.ring.zero()
        cols = [col + [zero] * other.ngens for col in self.relations]
        cols += [[zero] * self.ngens + col for col in other.relations]
        degs = None
        if self.gen_degrees is not None and other.gen_degrees is not None:
            degs = self.gen_degrees + other.gen_degrees
        return FPModule(self.ring, g, cols, degs)

    # -- cached machinery ----------------------------------------------------

    def rel_gb(self) -> SubmoduleGB:
        if self._rel_gb is None:
            vecs = [vec_from_polys(col) for col in self.relations]
            self._rel_gb = SubmoduleGB(self.ring.ambient, self.ngens, vecs,
                                       pad_polys=self.ring.gb)
        return self._rel_gb

    def k_dim(self):
        """dim_k of the module, or None if infinite."""
        return self.rel_gb().quotient_dim()

    def graded_dim(self, degree: int):
        if self.gen_degrees is None:
            raise ValueError("module is not graded")
        return self.rel_gb().quotient_graded_dim(degree, self.gen_degrees)

    def is_graded(self) -> bool:
        if self.gen_degrees is None:
            return False
        for col in self.relations:
            degs = set()
            for i, p in enumerate(col):
                if p.is_zero():
                    continue
                for m in p.terms:
                    degs.add(self.ring.ambient.weighted_deg(m) + self.gen_degrees[i])
            if len(degs) > 1:
                return False
        return True

    def resolve(self, length: int) -> "FreeResolution":
        if self._resolution is None or len(self._resolution.diffs) < length:
            self._resolution = _resolve(self, length)
        return self._resolution

    def __repr__(self):
        return f"FPModule(g={self.ngens}, r={len(self.relations)} over {self.ring!r})"


def _homogeneous_degree(ring: QuotientRing, p: Polynomial):
    degs = {ring.ambient.weighted_deg(m) for m in p.terms}
    if len(degs) != 1:
        raise ValueError("inhomogeneous entry in graded context")
    return degs.pop()


def _sort_columns(ring: QuotientRing, cols):
    return sorted((c for c in cols if any(not p.is_zero() for p in c)),
                  key=lambda col: _canon_col_key(ring, col))


def _canon_col_key(ring: QuotientRing, col):
    items = []
    for i, p in enumerate(col):
        for m, c in p.terms.items():
            items.append((i, m))
    return sorted(items)


def _prune_columns(ring: QuotientRing, cols, npos):
    """Drop columns lying in the span of the others (plus the ideal)."""
    cols = [c for c in cols if any(not p.is_zero() for p in c)]
    changed = True
    while changed:
        changed = False
        for i in range(len(cols)):
            others = [vec_from_polys(c) for j, c in enumerate(cols) if j != i]
            gb = SubmoduleGB(ring.ambient, npos, others, pad_polys=ring.gb)
            if gb.contains(vec_from_polys(cols[i])):
                cols.pop(i)
                changed = True
                break
    return cols


class FreeResolution:
    """Complex R^{r_n} -> ... -> R^{r_1} -> R^g with d_i d_{i+1} = 0."""

    def __init__(self, module: FPModule, diffs, ranks, step_degrees, periodic_from):
        self.module = module
        self.diffs = diffs          # diffs[i] = list of columns of d_{i+1}
        self.ranks = ranks          # ranks[0] = g, ranks[i] = rank of step i
        self.step_degrees = step_degrees  # generator degrees per step (or None)
        self.periodic_from = periodic_from  # smallest i >= 1 with d_{i+2} = d_i

    def differential(self, p: int):
        """Columns of d_p: R^{r_p} -> R^{r_{p-1}} (p >= 1)."""
        return self.diffs[p - 1]

    def rank(self, p: int) -> int:
        return self.ranks[p]

    def verify_complex(self) -> bool:
        ring = self.module.ring
        for p in range(2, len(self.diffs) + 1):
            prev = self.differential(p - 1)
            cur = self.differential(p)
            for col in cur:
                acc = [ring.zero() for _ in range(self.ranks[p - 2])]
                for j, c in enumerate(col):
                    for i in range(self.ranks[p - 2]):
                        acc[i] = acc[i] + prev[j][i] * c
                if not all(ring.is_zero(a) for a in acc):
                    return False
        return True

    def periodic_pair_is_factorization(self) -> bool:
        """Over a hypersurface ring, the marked periodic pair of
        differentials lifts to matrices whose product is exactly f*I."""
        if self.periodic_from is None or not self.module.ring.hypersurface:
            return False
        ring = self.module.ring
        f = ring.gb[0]
        i = self.periodic_from
        A = self.differential(i + 1)
        B = self.differential(i + 2)
        if len(A) != len(B) or (A and len(A) != len(A[0])):
            return False
        for j in range(len(B)):
            acc = [ring.ambient.zero() for _ in range(len(A[0]))]
            for k in range(len(A)):
                for t in range(len(A[0])):
                    acc[t] = acc[t] + A[k][t] * B[j][k]
            if acc != [f if t == j else ring.ambient.zero()
                       for t in range(len(acc))]:
                return False
        return True


def _syzygy_columns(ring: QuotientRing, cols, npos):
    vecs = [vec_from_polys(c) for c in cols]
    gb = SubmoduleGB(ring.ambient, npos, vecs, pad_polys=ring.gb)
    syz = gb.syzygies()
    out = [[ring.normal_form(p) for p in vec_to_polys(ring.ambient, s, len(cols))]
           for s in syz]
    out = _prune_columns(ring, out, len(cols))
    return _sort_columns(ring, out)


def _resolve(module: FPModule, length: int) -> FreeResolution:
    ring = module.ring
    diffs = [module.relations]
    ranks = [module.ngens, len(module.relations)]
    degrees = [module.gen_degrees]
    degrees.append(_column_degrees(ring, module.relations, module.gen_degrees))
    periodic_from = None
    step = 1
    while step < length:
        if periodic_from is not None and step >= periodic_from + 2:
            nxt = diffs[-2]
        else:
            nxt = _syzygy_columns(ring, diffs[-1], ranks[step - 1])
        diffs.append(nxt)
        ranks.append(len(nxt))
        degrees.append(_column_degrees(ring, nxt, degrees[-1]))
        step += 1
        if periodic_from is None and len(diffs) >= 3:
            for i in range(1, len(diffs) - 1):
                if diffs[i + 1] == diffs[i - 1] and ranks[i + 1] == ranks[i - 1]:
                    periodic_from = i
                    break
    return FreeResolution(module, diffs, ranks, degrees, periodic_from)


def _column_degrees(ring: QuotientRing, cols, src_degrees):
    if src_degrees is None:
        return None
    out = []
    for col in cols:
        d = None
        for i, p in enumerate(col):
            if p.is_zero():
                continue
            d = _homogeneous_degree(ring, p) + src_degrees[i]
            break
        if d is None:
            return None
        out.append(d)
    return tuple(out)
