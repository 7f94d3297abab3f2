"""Singular loci of plane curves, point solving over extensions, and A1/A2 classification."""

from dataclasses import dataclass, field
from math import comb
import random

import numpy as np

from . import upoly
from .fields import make_field
from .groebner import (CoordinateChart, GroebnerError, IdealBasis, NotZeroDimensional,
                       QuotientAlgebra, _affine_radical, binary_gcd_degree)
from .poly import NotHomogeneous, Poly, apply3, monomials


class SingularError(ValueError):
    pass


class NonReducedCurve(SingularError):
    pass


class NotRadical(SingularError):
    pass


class PointNotOnCurve(SingularError):
    pass


class SmoothPoint(SingularError):
    pass


class NonCuspSingularity(SingularError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^2 over field (prime field or a simple extension), last nonzero coordinate 1."""

    field: object
    coords: tuple

    @classmethod
    def normalized(cls, K, coords):
        coords = tuple(coords)
        idx = max(i for i, c in enumerate(coords) if not K.is_zero(c))
        inv = K.inv(coords[idx])
        return cls(K, tuple(K.mul(c, inv) for c in coords))

    @property
    def ext_degree(self):
        return self.field.degree

    def chart(self):
        return max(i for i, c in enumerate(self.coords) if not self.field.is_zero(c))

    def conjugate(self):
        """Image under the Frobenius x -> x^p."""
        K = self.field
        return ProjPoint(K, tuple(K.pow(c, K.characteristic) for c in self.coords))

    def format(self):
        K = self.field
        return "[%s]" % ":".join(K.format_elem(c) for c in self.coords)

    def __str__(self):
        return self.format()


@dataclass
class SingularityReport:
    point: ProjPoint
    type: str
    local_tjurina: int

    @property
    def ext_degree(self):
        return self.point.ext_degree

    def as_dict(self):
        return {"coords": self.point.format(), "field": str(self.point.field),
                "ext_degree": self.ext_degree, "type": self.type, "local_tjurina": self.local_tjurina}


@dataclass
class CuspLocus:
    curve: Poly
    ideal: IdealBasis
    count: int
    tjurina_total: int
    jacobian_saturated: IdealBasis = None
    reports: list = field(default_factory=list)
    unresolved_degree: int = 0


# -- squarefree test ---------------------------------------------------------------


def restrict_to_line(f, P, Q):
    """Coefficients (low degree first, in s) of f(P + s Q) as a univariate polynomial."""
    F = f.field
    n = f.nvars
    images = []
    for i in range(n):
        images.append({0: P[i], 1: Q[i]})
    acc = [F.zero] * (f.degree() + 1)
    for e, c in f.terms.items():
        term = [c]
        for i, k in enumerate(e):
            for _ in range(k):
                a, b = images[i][0], images[i][1]
                nxt = [F.zero] * (len(term) + 1)
                for j, x in enumerate(term):
                    nxt[j] = F.add(nxt[j], F.mul(x, a))
                    nxt[j + 1] = F.add(nxt[j + 1], F.mul(x, b))
                term = nxt
        for j, x in enumerate(term):
            acc[j] = F.add(acc[j], x)
    return upoly.trim(acc, F)


def is_reduced(f, seed=0, tries=30):
    """True if f has no repeated factor: some line restriction is squarefree of full degree."""
    F = f.field
    rng = random.Random(seed)
    D = f.degree()
    for _ in range(tries):
        P = [F.random(rng) for _ in range(3)]
        Q = [F.random(rng) for _ in range(3)]
        r = restrict_to_line(f, P, Q)
        if upoly.degree(r) == D and upoly.is_squarefree(r, F):
            return True
    return False


# -- singular locus ------------------------------------------------------------------


def singular_locus(f, seed=0):
    """Singular scheme of V(f): saturated Jacobian ideal, its radical and their lengths."""
    if not f.is_homogeneous():
        raise NotHomogeneous("curve equation must be homogeneous")
    F = f.field
    if not is_reduced(f, seed):
        raise NonReducedCurve("curve has a repeated component")
    gens = [f] + f.gradient()
    try:
        ch = CoordinateChart(F, seed, gens)
    except GroebnerError:
        raise NotZeroDimensional("every chart meets the singular locus on its line at infinity")
    Jaff = IdealBasis([g.dehomogenize(2) for g in ch.moved], "grevlex", F, 3)
    Jaff.gb()
    try:
        A = QuotientAlgebra(Jaff, 2)
    except NotZeroDimensional:
        raise NotZeroDimensional("curve has a singular component")
    tjurina_total = A.dim
    Raff, RA = _affine_radical(Jaff, 2)
    count = RA.dim
    Minv = ch.Minv
    J = IdealBasis([g.homogenize(2).linear_change(Minv) for g in Jaff.gb()], "grevlex", F, 3)
    R = IdealBasis([g.homogenize(2).linear_change(Minv) for g in Raff.gb()], "grevlex", F, 3)
    if count == 0:
        J = IdealBasis([Poly.const(F, 1)], "grevlex", F, 3)
        R = J
    J.gb()
    R.gb()
    return CuspLocus(curve=f, ideal=R, count=count, tjurina_total=tjurina_total, jacobian_saturated=J)


# -- point solving -------------------------------------------------------------------


def solve_points(ideal, max_ext_degree=8, seed=0, tries=20):
    """Points of a radical zero-dimensional ideal, one per Frobenius orbit.

    A random coordinate change puts the ideal in shape position
    (u generates the coordinate ring), the eliminant in u is factored, and
    v is back-substituted as a polynomial in u.  Orbits of degree above
    max_ext_degree are skipped.  Returns (points, total_degree, skipped_degree).
    """
    F = ideal.field
    gens = ideal.generators
    if ideal.is_unit():
        return [], 0, 0
    for attempt in range(tries):
        ch = CoordinateChart(F, seed + 1000 * attempt + 1, gens)
        J = IdealBasis([g.dehomogenize(2) for g in ch.moved], "grevlex", F, 3)
        J.gb()
        A = QuotientAlgebra(J, 2)
        mp = A.minimal_polynomial(0)
        if len(mp) - 1 < A.dim:
            continue
        if not upoly.is_squarefree(mp, F):
            raise NotRadical("eliminant is not squarefree")
        h = A.express_in_powers(0, Poly.var(F, 1))
        break
    else:
        raise NotRadical("no shape position found; the ideal is probably not radical")
    points = []
    skipped = 0
    rng = random.Random(seed)
    for fac, mult in upoly.factor(mp, F, rng):
        e = upoly.degree(fac)
        if e > max_ext_degree:
            skipped += e
            continue
        if e == 1:
            K = F
            x = F.neg(fac[0])
        else:
            K = make_field("extension", F.characteristic, fac)
            x = K.gen
        y = K.zero
        for c in reversed(h):
            y = K.add(K.mul(y, x), K.embed(c))
        moved = (x, y, K.one)
        M = [[K.embed(c) for c in row] for row in ch.M]
        points.append(ProjPoint.normalized(K, apply3(M, moved, K)))
    points.sort(key=lambda P: (P.ext_degree, [P.field.sort_key(c) for c in P.coords]))
    return points, A.dim, skipped


# -- local classification --------------------------------------------------------------


def local_expansion(f, point, max_order=None):
    """f in the affine chart of the point, translated to the origin.

    Returns (g, chart, (i, j)) where g lives in the 3-variable ring with the
    chart variable unused and local coordinates x_i, x_j.
    """
    K = point.field
    fK = f if f.field == K else f.change_field(K)
    c = point.chart()
    i, j = [k for k in range(3) if k != c]
    a, b = point.coords[i], point.coords[j]
    out = {}
    apow = [K.one]
    bpow = [K.one]
    D = f.degree()
    for _ in range(D):
        apow.append(K.mul(apow[-1], a))
        bpow.append(K.mul(bpow[-1], b))
    for e, coef in fK.terms.items():
        ei, ej = e[i], e[j]
        for s in range(ei + 1):
            for t in range(ej + 1):
                if max_order is not None and s + t > max_order:
                    continue
                val = K.mul(coef, K.from_int(comb(ei, s) * comb(ej, t)))
                val = K.mul(val, K.mul(apow[ei - s], bpow[ej - t]))
                ex = [0, 0, 0]
                ex[i], ex[j] = s, t
                ex = tuple(ex)
                out[ex] = K.add(out.get(ex, K.zero), val)
    return Poly(K, out), c, (i, j)


def _jet(g, order, i, j):
    return {(e[i], e[j]): c for e, c in g.terms.items() if e[i] + e[j] == order}


def classify_singularity(f, point, seed=0):
    K = point.field
    g, c, (i, j) = local_expansion(f, point, max_order=3)
    if g.terms.get((0, 0, 0)):
        raise PointNotOnCurve("f does not vanish at %s" % point)
    if _jet(g, 1, i, j):
        raise SmoothPoint("%s is a smooth point" % point)
    f2 = _jet(g, 2, i, j)
    if not f2:
        return SingularityReport(point, "other", local_tjurina(f, point))
    A = f2.get((2, 0), K.zero)
    B = f2.get((1, 1), K.zero)
    C = f2.get((0, 2), K.zero)
    disc = K.sub(K.mul(B, B), K.mul(K.from_int(4), K.mul(A, C)))
    if not K.is_zero(disc):
        return SingularityReport(point, "A1", 1)
    f3 = _jet(g, 3, i, j)
    if f3 and binary_gcd_degree([f2, f3], K) == 0:
        return SingularityReport(point, "A2", 2)
    return SingularityReport(point, "other", local_tjurina(f, point))


def local_tjurina(f, point, max_power=40):
    """Length of O/(g, g_x, g_y) at the origin, via the m-primary ideals T + m^N."""
    g, c, (i, j) = local_expansion(f, point)
    K = point.field
    gens = [g, g.diff(i), g.diff(j)]
    prev = None
    for N in range(1, max_power + 1):
        mN = []
        for s in range(N + 1):
            e = [0, 0, 0]
            e[i], e[j] = s, N - s
            mN.append(Poly(K, {tuple(e): K.one}))
        I = IdealBasis(gens + mN, "grevlex", K, 3)
        I.gb()
        val = QuotientAlgebra(I, c).dim
        if prev is not None and val == prev:
            # equality for N-1 and N gives m^(N-1) in T + m^N, hence in T locally
            return val
        prev = val
    raise SingularError("local Tjurina number did not stabilize")


def assert_only_cusps(f, max_ext_degree=8, seed=0, locus=None):
    """Certify that V(f) has only ordinary cusps, resolving and classifying each point."""
    if locus is None:
        locus = singular_locus(f, seed)
    points, total, skipped = solve_points(locus.ideal, max_ext_degree, seed)
    reports = [classify_singularity(f, P) for P in points]
    locus.reports = reports
    locus.unresolved_degree = skipped
    for r in reports:
        if r.type != "A2":
            raise NonCuspSingularity("%s singularity at %s" % (r.type, r.point), r)
    resolved = sum(r.ext_degree for r in reports)
    if resolved != locus.count:
        raise NonCuspSingularity("only %d of %d singular points resolved over extensions of degree <= %d"
                                 % (resolved, locus.count, max_ext_degree))
    if locus.tjurina_total != 2 * locus.count:
        raise NonCuspSingularity("total Tjurina number %d != 2 * %d" % (locus.tjurina_total, locus.count))
    if sum(r.ext_degree * r.local_tjurina for r in reports) != locus.tjurina_total:
        raise NonCuspSingularity("local Tjurina numbers do not add up")
    return locus


# -- brute-force oracle ------------------------------------------------------------------


def _eval_grid(f, p):
    """Values of f(u, v, 1) on the grid F_p x F_p as a p x p array."""
    D = f.degree()
    C = np.zeros((D + 1, D + 1), dtype=np.int64)
    for e, c in f.terms.items():
        C[e[0], e[1]] = (C[e[0], e[1]] + c) % p
    x = np.arange(p, dtype=np.int64)
    pw = np.ones((D + 1, p), dtype=np.int64)
    for k in range(1, D + 1):
        pw[k] = pw[k - 1] * x % p
    left = (pw.T @ C) % p          # [u, j] = sum_i u^i C[i, j]
    return (left @ pw) % p         # [u, v]


def brute_force_singular_points(f):
    """All F_p-rational points where f and its partials vanish, by exhaustive scan."""
    F = f.field
    if F.kind != "prime":
        raise SingularError("brute-force scan needs a prime field")
    p = F.characteristic
    polys = [f] + f.gradient()
    mask = np.ones((p, p), dtype=bool)
    for g in polys:
        if g:
            mask &= _eval_grid(g, p) == 0
    pts = [(int(a), int(b), 1) for a, b in zip(*np.nonzero(mask))]
    # line at infinity: [u:1:0] and [1:0:0]
    for a in range(p):
        P = (a, 1, 0)
        if all(g.evaluate_raw(P) == 0 for g in polys):
            pts.append(P)
    if all(g.evaluate_raw((1, 0, 0)) == 0 for g in polys):
        pts.append((1, 0, 0))
    return sorted(pts)


def rational_points_of(points):
    """Coordinates of the degree-one points in a solve_points list."""
    return sorted(tuple(P.coords) for P in points if P.ext_degree == 1)


def evaluation_rank(points, d):
    """Number of independent conditions imposed on degree-d forms over the base field.

    A point over an extension of degree e contributes e rows (the coordinates of
    its values in the power basis), which together encode its whole orbit.
    """
    from .resolution import _LA

    if not points:
        return 0
    base = points[0].field.base
    mons = monomials(d)
    rows = []
    for P in points:
        K = P.field
        vals = []
        for m in mons:
            acc = K.one
            for x, k in zip(P.coords, m):
                if k:
                    acc = K.mul(acc, K.pow(x, k))
            vals.append(acc)
        if K.kind == "extension":
            for r in range(K.degree):
                rows.append([v[r] for v in vals])
        else:
            rows.append(vals)
    return _LA(base).rank(rows, len(mons))


def cusp_condition_rank(f, points, d):
    """Rank of g -> (g(P), derivative of g along the cusp tangent at P) on degree-d forms.

    At an ordinary cusp the Tjurina ideal is (l, m^2) for the tangent-cone
    line l, so this rank is codim of J_d for the saturated Jacobian ideal J
    when every point of the singular scheme is listed.
    """
    from .resolution import _LA

    if not points:
        return 0
    base = points[0].field.base
    mons = monomials(d)
    rows = []
    for P in points:
        K = P.field
        g, c, (i, j) = local_expansion(f, P, max_order=2)
        f2 = _jet(g, 2, i, j)
        A = f2.get((2, 0), K.zero)
        B = f2.get((1, 1), K.zero)
        if not K.is_zero(A):
            alpha, beta = K.add(A, A), B
        else:
            alpha, beta = K.zero, K.one
        # tangent direction t with l(t) = 0 for l = alpha x_i + beta x_j
        ti, tj = K.neg(beta), alpha
        vals, ders = [], []
        for m in mons:
            mono = Poly(K, {m: K.one})
            vals.append(mono.evaluate_raw(P.coords))
            di = mono.diff(i).evaluate_raw(P.coords) if m[i] else K.zero
            dj = mono.diff(j).evaluate_raw(P.coords) if m[j] else K.zero
            ders.append(K.add(K.mul(ti, di), K.mul(tj, dj)))
        for vec in (vals, ders):
            if K.kind == "extension":
                rows.extend([v[r] for v in vec] for r in range(K.degree))
            else:
                rows.append(vec)
    return _LA(base).rank(rows, len(mons))
