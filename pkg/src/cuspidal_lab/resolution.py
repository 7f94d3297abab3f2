"""Hilbert functions, minimal generators and Hilbert-Burch Betti tables.

The Betti numbers are computed by plain linear algebra in each degree:
the degree-d syzygies of the minimal generators g_1..g_s are the kernel of
the Macaulay block matrix [S_{d-a_1} g_1 | ... | S_{d-a_s} g_s], and the
minimal ones are those not generated by linear multiples of degree-(d-1)
syzygies.  None of this uses the Groebner staircase beyond choosing a
spanning set of the ideal, so the Hilbert function read off the Betti table
is an independent check on the staircase count.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .groebner import GroebnerError, NotZeroDimensional
from .poly import NotHomogeneous, graded_dim, monomials


class ResolutionError(GroebnerError):
    pass


class UnexpectedProjectiveDimension(ResolutionError):
    pass


class NoStabilization(ResolutionError):
    pass


@dataclass
class BettiTable:
    gen_degrees: list
    syz_degrees: list

    def __post_init__(self):
        self.gen_degrees = sorted(self.gen_degrees, reverse=True)
        self.syz_degrees = sorted(self.syz_degrees, reverse=True)

    @property
    def t(self):
        return len(self.syz_degrees)

    def sum_equal(self):
        return sum(self.gen_degrees) == sum(self.syz_degrees)

    def square_identity_value(self):
        """sum b^2 - sum a^2, which is twice the number of points for a reduced scheme."""
        return sum(b * b for b in self.syz_degrees) - sum(a * a for a in self.gen_degrees)

    def positionwise_ok(self):
        a, b = self.gen_degrees, self.syz_degrees
        return len(a) == len(b) + 1 and all(x < y for x, y in zip(a, b))

    def quotient_dim(self, d):
        """dim (S/I)_d predicted by the resolution."""
        return (graded_dim(d) - sum(graded_dim(d - a) for a in self.gen_degrees)
                + sum(graded_dim(d - b) for b in self.syz_degrees))

    def as_dict(self):
        return {"gen_degrees": list(self.gen_degrees), "syz_degrees": list(self.syz_degrees)}

    def key(self):
        return (tuple(self.gen_degrees), tuple(self.syz_degrees))

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return self.key() == other.key()
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return "a=%s b=%s" % (tuple(self.gen_degrees), tuple(self.syz_degrees))


# -- linear algebra dispatch ----------------------------------------------------


class _LA:
    def __init__(self, F):
        self.F = F
        self.np = F.kind == "prime"
        self.p = F.characteristic

    def matrix(self, rows, ncols):
        if self.np:
            return np.array(rows, dtype=np.int64).reshape(len(rows), ncols)
        return [list(r) for r in rows]

    def rank(self, rows, ncols):
        if not rows:
            return 0
        if self.np:
            return linalg.rank_mod_p(self.matrix(rows, ncols), self.p)
        return linalg.rank(rows, self.F)

    def row_basis(self, rows, ncols):
        if not rows:
            return []
        if self.np:
            return [list(map(int, r)) for r in linalg.row_basis_mod_p(self.matrix(rows, ncols), self.p)]
        return linalg.rref(rows, self.F)[0]

    def nullspace_of_columns(self, cols, nrows):
        """Kernel of the matrix whose columns are given (as rows of the transpose)."""
        if not cols:
            return []
        if self.np:
            A = np.array(cols, dtype=np.int64).reshape(len(cols), nrows).T
            return [list(map(int, r)) for r in linalg.nullspace_mod_p(A, self.p)]
        A = [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]
        return linalg.nullspace(A, self.F)


def _vector(f, index, F):
    v = [F.zero] * len(index)
    for e, c in f.terms.items():
        v[index[e]] = c
    return v


class _Graded:
    """Monomial bases and coordinate vectors for each degree."""

    def __init__(self, F, nvars=3):
        self.F = F
        self.n = nvars
        self._mons = {}
        self._idx = {}

    def mons(self, d):
        if d not in self._mons:
            self._mons[d] = monomials(d, self.n)
            self._idx[d] = {m: i for i, m in enumerate(self._mons[d])}
        return self._mons[d]

    def idx(self, d):
        self.mons(d)
        return self._idx[d]

    def vector(self, f, d):
        return _vector(f, self.idx(d), self.F)

    def shift_vector(self, v, d, var):
        """Coordinates of x_var * (vector v of degree d), in degree d+1."""
        F = self.F
        out = [F.zero] * graded_dim(d + 1, self.n)
        idx = self.idx(d + 1)
        for m, c in zip(self.mons(d), v):
            if not F.is_zero(c):
                mm = list(m)
                mm[var] += 1
                out[idx[tuple(mm)]] = c
        return out


def _require_homogeneous(I):
    if not I.is_homogeneous():
        raise NotHomogeneous("ideal is not homogeneous")


def minimal_generators(I):
    """Minimal homogeneous generators [(degree, Poly)] of a homogeneous ideal."""
    _require_homogeneous(I)
    F = I.field
    G = I.gb()
    if not G:
        return []
    grading = _Graded(F, I.nvars)
    la = _LA(F)
    by_deg = {}
    for g in G:
        by_deg.setdefault(g.degree(), []).append(g)
    dmin, dmax = min(by_deg), max(by_deg)
    basis_prev = []
    out = []
    for d in range(dmin, dmax + 1):
        ncols = graded_dim(d, I.nvars)
        rows = []
        for v in basis_prev:
            for x in range(I.nvars):
                rows.append(grading.shift_vector(v, d - 1, x))
        span = la.row_basis(rows, ncols)
        r = len(span)
        for g in by_deg.get(d, []):
            cand = span + [grading.vector(g, d)]
            r2 = la.rank(cand, ncols)
            if r2 > r:
                span = la.row_basis(cand, ncols)
                r = r2
                out.append((d, g))
        basis_prev = span
    return out


def ideal_dims_from_generators(gens, dmax, F, nvars=3):
    """dim I_d for d <= dmax, by rank of the span of monomial multiples of gens."""
    grading = _Graded(F, nvars)
    la = _LA(F)
    dims = {}
    for d in range(dmax + 1):
        rows = []
        for a, g in gens:
            if a <= d:
                for m in grading.mons(d - a):
                    rows.append(grading.vector(g.mul_monomial(m), d))
        dims[d] = la.rank(rows, graded_dim(d, nvars))
    return dims


def betti_table(I, cap=None, gens=None):
    """Minimal graded Betti numbers of a codimension-2 saturated ideal in k[u,v,w]."""
    _require_homogeneous(I)
    F = I.field
    n = I.nvars
    if gens is None:
        gens = minimal_generators(I)
    if not gens:
        raise UnexpectedProjectiveDimension("zero ideal")
    a = [d for d, _ in gens]
    if len(gens) == 1:
        raise UnexpectedProjectiveDimension("principal ideal: not a zero-dimensional scheme")
    t = len(gens) - 1
    cap = 3 * max(a) if cap is None else cap
    grading = _Graded(F, n)
    la = _LA(F)
    syz = []
    kernel_prev = None
    d0 = min(a) + 1
    for d in range(d0, cap + 1):
        blocks = [(i, d - ai) for i, ai in enumerate(a) if d - ai >= 0]
        cols = []
        for i, e in blocks:
            for m in grading.mons(e):
                cols.append(grading.vector(gens[i][1].mul_monomial(m), d))
        nrows = graded_dim(d, n)
        K = la.nullspace_of_columns(cols, nrows)
        # linear multiples of the previous kernel
        lifted = []
        if kernel_prev:
            prev_blocks, prev_K = kernel_prev
            offsets_new = {}
            off = 0
            for i, e in blocks:
                offsets_new[i] = off
                off += graded_dim(e, n)
            total = off
            for vec in prev_K:
                for x in range(n):
                    out = [F.zero] * total
                    off = 0
                    for i, e in prev_blocks:
                        seg = vec[off:off + graded_dim(e, n)]
                        off += graded_dim(e, n)
                        sh = grading.shift_vector(seg, e, x)
                        o2 = offsets_new[i]
                        out[o2:o2 + len(sh)] = sh
                    lifted.append(out)
        ncols = len(cols)
        r_lift = la.rank(lifted, ncols) if lifted else 0
        new = len(K) - r_lift
        syz.extend([d] * new)
        kernel_prev = (blocks, K)
        if len(syz) > t:
            raise UnexpectedProjectiveDimension("more than %d minimal syzygies" % t)
        if len(syz) == t:
            B = BettiTable(a, syz)
            if B.sum_equal():
                return B
    raise UnexpectedProjectiveDimension("found %d of %d syzygies below degree %d" % (len(syz), t, cap))


def hilbert_function(I, d):
    """dim I_d, counted off the Groebner staircase."""
    _require_homogeneous(I)
    return graded_dim(d, I.nvars) - I.quotient_dim(d)


def quotient_dim(I, d):
    _require_homogeneous(I)
    return I.quotient_dim(d)


def hilbert_series_values(I, dmax):
    return [quotient_dim(I, d) for d in range(dmax + 1)]


def scheme_length(I, window=3):
    """Stable value of dim (S/I)_d for a zero-dimensional projective scheme."""
    _require_homogeneous(I)
    kd = I.krull_dim()
    if kd > 1:
        raise NotZeroDimensional("Krull dimension %d" % kd)
    if kd < 1:
        return 0
    G = I.gb()
    dmax = max(g.degree() for g in G)
    cap = max(sum(g.degree() for g in G), dmax + window)
    vals = []
    for d in range(cap + 1):
        vals.append(I.quotient_dim(d))
        if d >= dmax and len(vals) >= window and len(set(vals[-window:])) == 1:
            return vals[-1]
    raise NoStabilization("no stabilization up to degree %d" % cap)


def stabilization_degree(I):
    """First degree from which dim (S/I)_d equals the scheme length."""
    L = scheme_length(I)
    G = I.gb()
    dmax = max(g.degree() for g in G)
    d = dmax
    while d > 0 and I.quotient_dim(d - 1) == L:
        d -= 1
    return d
