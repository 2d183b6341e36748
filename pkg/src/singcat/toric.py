"""Complete rational fans, torus-invariant divisors, and exact sheaf
cohomology of Weil divisor classes.

Cohomology uses the Cech complex of the cover by maximal-cone charts: the
graded piece at a character m only sees which rays satisfy <m, u> >= -a,
so characters are grouped by that sign vector.  Each sign chamber is an
integral polyhedron; feasibility, boundedness, and coordinate bounds come
from exact Fourier-Motzkin elimination, and the reduced profile of a
chamber is memoized per fan.  This treats arbitrary (also non-simplicial)
cones and arbitrary Weil divisors uniformly.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ
from .linalg import Matrix, rank as mat_rank


class ToricError(ValueError):
    pass


def _gcd_list(v):
    g = 0
    for x in v:
        g = _gcd(g, abs(x))
    return g


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _dot(m, u):
    return sum(a * b for a, b in zip(m, u))


# ---------------------------------------------------------------------------
# Fourier-Motzkin over exact rationals


def fm_eliminate(constraints, keep):
    """Project {x : c.x >= r for all (c, r)} onto coordinates < keep.

    Constraints are (coefficient tuple, rhs).  Variables are eliminated from
    the back; returns the projected constraint list.
    """
    cons = [(list(c), Fraction(r)) for c, r in constraints]
    nvars = len(cons[0][0]) if cons else keep
    for k in range(nvars - 1, keep - 1, -1):
        pos, neg, rest = [], [], []
        for c, r in cons:
            if c[k] > 0:
                pos.append((c, r))
            elif c[k] < 0:
                neg.append((c, r))
            else:
                rest.append((c[:k], r))
        new = rest
        for cp, rp in pos:
            for cn, rn in neg:
                lam_p = -cn[k]
                lam_n = cp[k]
                c = [lam_p * cp[i] + lam_n * cn[i] for i in range(k)]
                new.append((c, lam_p * rp + lam_n * rn))
        cons = [(list(c), r) for c, r in new]
    return cons


def fm_feasible(constraints, nvars) -> bool:
    out = fm_eliminate(constraints, 0)
    return all(r <= 0 for _c, r in out)


def fm_interval(constraints, nvars, var):
    """(lo, hi) bounds of x_var over the polyhedron; None means unbounded."""
    order = [var] + [i for i in range(nvars) if i != var]
    permuted = [([c[i] for i in order], r) for c, r in constraints]
    out = fm_eliminate(permuted, 1)
    lo, hi = None, None
    feasible_ok = True
    for c, r in out:
        a = c[0]
        if a > 0:
            b = Fraction(r, a)
            lo = b if lo is None else max(lo, b)
        elif a < 0:
            b = Fraction(r, a)
            hi = b if hi is None else min(hi, b)
        else:
            if r > 0:
                feasible_ok = False
    if not feasible_ok:
        return Fraction(1), Fraction(0)  # empty
    return lo, hi


# ---------------------------------------------------------------------------
# fans


class Fan:
    def __init__(self, rank: int, rays, cones, name: str = "fan"):
        self.rank = rank
        self.rays = [tuple(int(x) for x in u) for u in rays]
        self.max_cones = [tuple(sorted(c)) for c in cones]
        self.name = name
        for u in self.rays:
            if len(u) != rank:
                raise ToricError("ray arity mismatch")
            g = _gcd_list(u)
            if g == 0:
                raise ToricError("zero ray")
            if g != 1:
                raise ToricError(f"ray {u} is not primitive")
        if len(set(self.rays)) != len(self.rays):
            raise ToricError("duplicate rays")
        self._facet_normals = {}
        for c in self.max_cones:
            self._facet_normals[c] = self._cone_facets(c)
            if not self._strongly_convex(c):
                raise ToricError(f"cone {c} is not strongly convex")
        self._profile_memo = {}
        self._complete = None

    # -- cone geometry ---------------------------------------------------------

    def _cone_facets(self, cone):
        """Facet normals (inward) of a full- or lower-dimensional cone."""
        pts = [self.rays[i] for i in cone]
        normals = []
        seen = set()
        from itertools import combinations
        for sub in combinations(range(len(pts)), max(self.rank - 1, 1)):
            mat = Matrix(QQ, [[Fraction(x) for x in pts[i]] for i in sub])
            from .linalg import kernel_basis
            ker = kernel_basis(mat)
            if ker.ncols != 1:
                continue
            n = [ker.rows[i][0] for i in range(self.rank)]
            den = 1
            for v in n:
                den = den * v.denominator // _gcd(den, v.denominator)
            n = [int(v * den) for v in n]
            g = _gcd_list(n)
            n = tuple(v // g for v in n)
            for cand in (n, tuple(-v for v in n)):
                if cand in seen:
                    continue
                vals = [_dot(cand, p) for p in pts]
                if all(v >= 0 for v in vals):
                    seen.add(cand)
                    normals.append(cand)
        return normals

    def _strongly_convex(self, cone) -> bool:
        # a strictly positive functional exists on the rays
        cons = [(list(self.rays[i]), 1) for i in cone]
        return fm_feasible(cons, self.rank)

    def cone_contains(self, cone, point) -> bool:
        """Membership for a rational point, via facet normals and span."""
        pts = [self.rays[i] for i in cone]
        mat = Matrix(QQ, [[Fraction(x) for x in p] for p in pts])
        aug = Matrix(QQ, mat.rows + [[Fraction(x) for x in point]])
        if mat_rank(aug) != mat_rank(mat):
            return False
        return all(_dot(n, point) >= 0 for n in self._facet_normals[cone])

    def walls(self):
        """Codimension-one faces shared by exactly two maximal cones,
        as (rayset tuple, cone index pair)."""
        from itertools import combinations
        found = {}
        for idx, c in enumerate(self.max_cones):
            for n in self._facet_normals[c]:
                rayset = tuple(sorted(i for i in c if _dot(n, self.rays[i]) == 0))
                if len(rayset) >= self.rank - 1:
                    found.setdefault(rayset, set()).add(idx)
        return {rs: tuple(sorted(v)) for rs, v in found.items() if len(v) == 2}

    def is_complete(self, samples: int = 60) -> bool:
        """Wall pairing plus a deterministic sampled covering test."""
        if self._complete is not None:
            return self._complete
        ok = True
        for rs, owners in self.walls().items():
            if len(owners) != 2:
                ok = False
        # every facet of every maximal cone must be a shared wall
        shared = self.walls()
        for idx, c in enumerate(self.max_cones):
            for n in self._facet_normals[c]:
                rayset = tuple(sorted(i for i in c if _dot(n, self.rays[i]) == 0))
                if rayset not in shared:
                    ok = False
        if ok:
            import random
            rng = random.Random(20240817)
            for _ in range(samples):
                pt = [Fraction(rng.randint(-97, 97), rng.randint(1, 13)) for _ in range(self.rank)]
                if all(x == 0 for x in pt):
                    continue
                if not any(self.cone_contains(c, pt) for c in self.max_cones):
                    ok = False
                    break
        self._complete = ok
        return ok

    def face_rayset(self, cone_subset):
        common = set(self.max_cones[cone_subset[0]])
        for i in cone_subset[1:]:
            common &= set(self.max_cones[i])
        return tuple(sorted(common))

    def __repr__(self):
        return (f"Fan({self.name}: rank {self.rank}, {len(self.rays)} rays, "
                f"{len(self.max_cones)} maximal cones)")


class TDivisor:
    """Torus-invariant Weil divisor: one integer coefficient per ray."""

    def __init__(self, fan: Fan, coeffs):
        self.fan = fan
        self.coeffs = [int(c) for c in coeffs]
        if len(self.coeffs) != len(fan.rays):
            raise ToricError("coefficient vector length must match ray count")

    def __add__(self, other):
        self._check(other)
        return TDivisor(self.fan, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return TDivisor(self.fan, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TDivisor(self.fan, [-a for a in self.coeffs])

    def scale(self, n: int):
        return TDivisor(self.fan, [n * a for a in self.coeffs])

    def _check(self, other):
        if other.fan is not self.fan:
            raise ToricError("divisors on different fans")

    def __repr__(self):
        return f"TDivisor({self.coeffs})"


# ---------------------------------------------------------------------------
# cohomology


def _cech_profile(fan: Fan, plus_rays: frozenset):
    """(h^0..h^rank) of the indicator Cech complex for one sign pattern."""
    memo = fan._profile_memo
    if plus_rays in memo:
        return memo[plus_rays]
    from itertools import combinations
    t = len(fan.max_cones)
    # active subsets by size; activity only grows with subset size
    levels = []
    for p in range(t):
        active = []
        for sub in combinations(range(t), p + 1):
            rays = fan.face_rayset(sub)
            if all(i in plus_rays for i in rays):
                active.append(sub)
        levels.append({sub: k for k, sub in enumerate(active)})
    dims = []
    ranks = []
    for p in range(len(levels) - 1):
        src, tgt = levels[p], levels[p + 1]
        if not src or not tgt:
            ranks.append(0)
            continue
        rows = [[QQ.zero()] * len(src) for _ in range(len(tgt))]
        for sub, col in src.items():
            for extra in range(t):
                if extra in sub:
                    continue
                bigger = tuple(sorted(sub + (extra,)))
                if bigger not in tgt:
                    continue
                sign = (-1) ** bigger.index(extra)
                rows[tgt[bigger]][col] = QQ.add(rows[tgt[bigger]][col],
                                                QQ.from_int(sign))
        ranks.append(mat_rank(Matrix(QQ, rows)))
    ranks.append(0)
    out = []
    for p in range(len(levels)):
        d = len(levels[p])
        r_out = ranks[p] if p < len(ranks) else 0
        r_in = ranks[p - 1] if p >= 1 else 0
        out.append(d - r_out - r_in)
    while len(out) < fan.rank + 1:
        out.append(0)
    if any(h != 0 for h in out[fan.rank + 1:]):
        raise ToricError("Cech cohomology above the rank: inconsistent fan")
    profile = tuple(out[: fan.rank + 1])
    memo[plus_rays] = profile
    return profile


def cohomology(fan: Fan, D: TDivisor):
    """(h^0, .., h^rank) of O(D) for a complete fan, exact.

    Characters are partitioned by the sign vector of <m, u_rho> + a_rho;
    each nonzero-profile chamber must be bounded, and its lattice points are
    counted by box scanning inside Fourier-Motzkin bounds.
    """
    if D.fan is not fan:
        raise ToricError("divisor lives on a different fan")
    if not fan.is_complete():
        raise ToricError("cohomology needs a complete fan")
    s = len(fan.rays)
    total = [0] * (fan.rank + 1)
    for mask in range(1 << s):
        plus = frozenset(i for i in range(s) if mask & (1 << i))
        cons = []
        for i, u in enumerate(fan.rays):
            a = D.coeffs[i]
            if i in plus:
                cons.append((list(u), -a))
            else:
                cons.append(([-x for x in u], a + 1))
        if not fm_feasible(cons, fan.rank):
            continue
        profile = _cech_profile(fan, plus)
        if all(h == 0 for h in profile):
            continue
        bounds = []
        for v in range(fan.rank):
            lo, hi = fm_interval(cons, fan.rank, v)
            if lo is None or hi is None:
                raise ToricError("unbounded chamber with nonzero cohomology: "
                                 "fan cannot be complete")
            bounds.append((lo, hi))
        count = 0
        import math
        ranges = [range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in bounds]

        def scan(prefix):
            nonlocal count
            k = len(prefix)
            if k == fan.rank:
                if all(_dot(c, prefix) >= r for c, r in cons):
                    count += 1
                return
            for val in ranges[k]:
                scan(prefix + [val])

        scan([])
        if count:
            for p in range(fan.rank + 1):
                total[p] += count * profile[p]
    return tuple(total)


# ---------------------------------------------------------------------------
# intersection numbers, class group, Cartier test


def intersect_curve(D: TDivisor, wall, fan: Fan | None = None) -> int:
    """(D . V(wall)) for a wall between two unimodular maximal cones."""
    fan = fan or D.fan
    walls = fan.walls()
    wall = tuple(sorted(wall))
    if wall not in walls:
        raise ToricError(f"{wall} is not a wall of the fan")
    ca, cb = walls[wall]
    for cidx in (ca, cb):
        cone = fan.max_cones[cidx]
        if len(cone) != fan.rank:
            raise ToricError("wall adjacent to a non-simplicial cone")
        det = _int_det([list(fan.rays[i]) for i in cone])
        if abs(det) != 1:
            raise ToricError("fan is not smooth along the wall")
    extra_a = [i for i in fan.max_cones[ca] if i not in wall][0]
    extra_b = [i for i in fan.max_cones[cb] if i not in wall][0]
    # u_a + u_b = sum alpha_rho u_rho over the wall
    rhs = [fan.rays[extra_a][k] + fan.rays[extra_b][k] for k in range(fan.rank)]
    cols = [fan.rays[i] for i in wall]
    mat = Matrix(QQ, [[Fraction(cols[j][k]) for j in range(len(cols))]
                      for k in range(fan.rank)])
    from .linalg import solve
    alpha = solve(mat, [Fraction(x) for x in rhs])
    if alpha is None:
        raise ToricError("wall relation is not solvable")
    val = Fraction(D.coeffs[extra_a] + D.coeffs[extra_b])
    for j, i in enumerate(wall):
        val -= alpha[j] * D.coeffs[i]
    if val.denominator != 1:
        raise ToricError("non-integral intersection number on a smooth wall")
    return int(val)


def _int_det(rows):
    n = len(rows)
    m = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] * inv
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return int(det)


def smith_normal_form(mat):
    """(U, D, V) with U*mat*V = D diagonal over the integers."""
    A = [list(map(int, row)) for row in mat]
    nr = len(A)
    nc = len(A[0]) if A else 0
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_op(i, j, q):  # row_i -= q row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q col_j
        for r in range(nr):
            A[r][i] -= q * A[r][j]
        for r in range(nc):
            V[r][i] -= q * V[r][j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(nr):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(nc):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(nr, nc):
        piv = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < best):
                    best = abs(A[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, nr):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    row_op(i, t, q)
                    if A[i][t] != 0:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, nc):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    col_op(j, t, q)
                    if A[t][j] != 0:
                        swap_cols(t, j)
                        done = False
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, A, V


class ClassGroup:
    """Cl(X) = Z^rays / image(character lattice), via Smith normal form."""

    def __init__(self, fan: Fan):
        self.fan = fan
        # columns of B: images of the character basis vectors
        B = [[fan.rays[r][i] for i in range(fan.rank)] for r in range(len(fan.rays))]
        self.U, D, _V = smith_normal_form(B)
        self.invariants = [D[i][i] for i in range(min(len(D), fan.rank)) if D[i][i] != 0]
        self.free_rank = len(fan.rays) - len(self.invariants)
        self.torsion = [d for d in self.invariants if d != 1]

    def class_of(self, D: TDivisor):
        """Canonical coordinates of [D]: torsion residues then free part."""
        c = [sum(self.U[i][r] * D.coeffs[r] for r in range(len(self.fan.rays)))
             for i in range(len(self.fan.rays))]
        tor = []
        for i, d in enumerate(self.invariants):
            if d != 1:
                tor.append(c[i] % d)
        free = c[len(self.invariants):]
        return (tuple(tor), tuple(free))

    def __repr__(self):
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return "Cl = " + (" + ".join(parts) if parts else "0")


def class_group(fan: Fan) -> ClassGroup:
    return ClassGroup(fan)


def weil_is_cartier(fan: Fan, D: TDivisor) -> bool:
    """True iff D is integrally linear on every maximal cone."""
    from .linalg import solve
    for cone in fan.max_cones:
        rows = [[Fraction(x) for x in fan.rays[i]] for i in cone]
        rhs = [Fraction(-D.coeffs[i]) for i in cone]
        m = Matrix(QQ, rows)
        sol = solve(m, rhs)
        if sol is None:
            return False
        # solution must be integral; on full-dimensional cones it is unique
        if any(x.denominator != 1 for x in sol):
            return False
        if any(_dot([int(v) for v in sol], fan.rays[i]) != -D.coeffs[i] for i in cone):
            return False
    return True


# ---------------------------------------------------------------------------
# the fan library


def _simplex_fan(name, rays, triples):
    return Fan(len(rays[0]), rays, triples, name)


_LIBRARY_CACHE: dict = {}


def fan_library(name: str):
    """Named fans plus their named divisors and curves.

    Returns (fan, divisors, walls): divisors maps names to TDivisors, walls
    maps names to ray-index tuples.  Instances are cached so the per-fan
    cohomology memo persists across calls.
    """
    if name in _LIBRARY_CACHE:
        return _LIBRARY_CACHE[name]
    out = _fan_library_build(name)
    _LIBRARY_CACHE[name] = out
    return out


def _fan_library_build(name: str):
    if name == "P2":
        fan = Fan(2, [(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)], "P2")
        H = TDivisor(fan, [1, 0, 0])
        return fan, {"H": H}, {}
    if name == "P1xP1":
        fan = Fan(2, [(1, 0), (-1, 0), (0, 1), (0, -1)],
                  [(0, 2), (2, 1), (1, 3), (3, 0)], "P1xP1")
        return fan, {"H1": TDivisor(fan, [1, 0, 0, 0]),
                     "H2": TDivisor(fan, [0, 0, 1, 0])}, {}
    if name == "P3":
        rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
        cones = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        fan = Fan(3, rays, cones, "P3")
        return fan, {"H": TDivisor(fan, [1, 0, 0, 0])}, \
            {"line": (1, 2)}
    if name == "blowupP3_1pt":
        rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1), (1, 1, 1)]
        cones = [(0, 1, 4), (0, 2, 4), (1, 2, 4),
                 (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        fan = Fan(3, rays, cones, "blowupP3_1pt")
        H = TDivisor(fan, [1, 0, 0, 0, 1])
        E1 = TDivisor(fan, [0, 0, 0, 0, 1])
        return fan, {"H": H, "E1": E1}, {}
    if name == "blowupP3_2pts":
        # rays: e1, e2, e3, u0 = -e1-e2-e3, v1 = e1+e2+e3, v2 = -e1
        rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1),
                (1, 1, 1), (-1, 0, 0)]
        cones = [
            (0, 1, 4), (0, 2, 4), (1, 2, 4),      # star of v1 in <e1,e2,e3>
            (1, 3, 5), (2, 3, 5), (1, 2, 5),      # star of v2 in <u0,e2,e3>
            (0, 1, 3), (0, 2, 3),                  # untouched charts
        ]
        fan = Fan(3, rays, cones, "blowupP3_2pts")
        E1 = TDivisor(fan, [0, 0, 0, 0, 1, 0])
        E2 = TDivisor(fan, [0, 0, 0, 0, 0, 1])
        # pullback hyperplane: strict transform of the u0-plane plus E2
        H = TDivisor(fan, [0, 0, 0, 1, 0, 1])
        return fan, {"H": H, "E1": E1, "E2": E2}, {"l": (1, 2)}
    if name == "coneP1xP1_projective":
        rays = [(1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1), (0, 0, -1)]
        cones = [(0, 1, 2, 3), (0, 1, 4), (1, 2, 4), (2, 3, 4), (0, 3, 4)]
        fan = Fan(3, rays, cones, "coneP1xP1_projective")
        # O(a, b) = a*D_a + b*D_b with [D_a] = [D_c], [D_b] = [D_d],
        # hyperplane = [D_infinity] = O(1,1)
        return fan, {"O(1,0)": TDivisor(fan, [1, 0, 0, 0, 0]),
                     "O(0,1)": TDivisor(fan, [0, 1, 0, 0, 0])}, {}
    if name == "coneP1xP1_smallres":
        rays = [(1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1), (0, 0, -1)]
        cones = [(0, 1, 2), (0, 2, 3), (0, 1, 4), (1, 2, 4), (2, 3, 4), (0, 3, 4)]
        fan = Fan(3, rays, cones, "coneP1xP1_smallres")
        return fan, {"O(1,0)": TDivisor(fan, [1, 0, 0, 0, 0]),
                     "O(0,1)": TDivisor(fan, [0, 1, 0, 0, 0])}, {"C": (0, 2)}
    raise ToricError(f"unknown fan name {name!r}")


def divisor_from_combo(divisors: dict, combo: dict) -> TDivisor:
    """Integer combination of named divisors, e.g. {'H': -4, 'E1': 3}."""
    out = None
    for name, mult in combo.items():
        term = divisors[name].scale(mult)
        out = term if out is None else out + term
    return out


def canonical_divisor(fan: Fan) -> TDivisor:
    return TDivisor(fan, [-1] * len(fan.rays))
