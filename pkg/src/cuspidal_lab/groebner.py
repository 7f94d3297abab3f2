"""Reduced Groebner bases (Buchberger with sugar and Gebauer-Moeller) and ideal operations.

Inside the engine a monomial is carried as two integers: its order key (a
weighted sum of exponents, see poly.order_weights) and a packed exponent
word with one guard bit per variable for division tests.  Both encodings
are additive, so shifting a polynomial by a monomial is integer addition.
"""

from heapq import heapify, heappop, heappush
import itertools
import random

from . import upoly
from .linalg import IncrementalBasis
from .poly import Poly, PolyError, order_weights, det3, inverse3, monomials

BITS = 12
FIELD_MASK = (1 << BITS) - 1


class GroebnerError(ValueError):
    pass


class ResourceExhausted(GroebnerError):
    def __init__(self, msg, diagnostics=None):
        super().__init__(msg)
        self.diagnostics = diagnostics or {}


class FieldMismatch(GroebnerError):
    pass


class NotZeroDimensional(GroebnerError):
    pass


class CharacteristicTooSmall(GroebnerError):
    pass


class _Elem:
    __slots__ = ("keys", "coefs", "packs", "lm_exps", "sugar")

    def __init__(self, keys, coefs, packs, lm_exps, sugar):
        self.keys = keys
        self.coefs = coefs
        self.packs = packs
        self.lm_exps = lm_exps
        self.sugar = sugar


class Engine:
    """Buchberger's algorithm over one (field, nvars, order)."""

    def __init__(self, field, nvars, order, max_steps=None, max_basis=None):
        self.F = field
        self.n = nvars
        self.order = order
        self.w = order_weights(order, nvars)
        self.guard = sum(1 << (BITS * i + BITS - 1) for i in range(nvars))
        self.prime = field.kind == "prime"
        self.p = field.characteristic
        if field.characteristic == 0:
            max_steps = max_steps if max_steps is not None else 3_000_000
            max_basis = max_basis if max_basis is not None else 3000
        self.max_steps = max_steps
        self.max_basis = max_basis
        self.steps = 0
        self.reducers = []
        self.div_cache = {}
        self.pk = {}

    # -- conversion ----------------------------------------------------------

    def key(self, e):
        return sum(a * b for a, b in zip(self.w, e))

    def pack(self, e):
        out = 0
        for i, x in enumerate(e):
            if x >= 1 << (BITS - 1):
                raise GroebnerError("exponent too large for the packed representation")
            out |= x << (BITS * i)
        return out

    def unpack(self, pk):
        return tuple((pk >> (BITS * i)) & FIELD_MASK for i in range(self.n))

    def to_elem(self, f):
        if f.field != self.F:
            raise FieldMismatch("polynomial over %s, ideal over %s" % (f.field, self.F))
        items = sorted(((self.key(e), e, c) for e, c in f.terms.items()), reverse=True)
        keys = [k for k, _, _ in items]
        packs = [self.pack(e) for _, e, _ in items]
        for k, pk in zip(keys, packs):
            self.pk[k] = pk
        coefs = [c for _, _, c in items]
        return _Elem(keys, coefs, packs, items[0][1] if items else None, max((sum(e) for e in f.terms), default=0))

    def to_poly(self, el):
        return Poly(self.F, {self.unpack(pk): c for pk, c in zip(el.packs, el.coefs)}, self.n)

    def _monic(self, el):
        F = self.F
        if el.coefs and el.coefs[0] != F.one:
            inv = F.inv(el.coefs[0])
            el.coefs = [F.mul(c, inv) for c in el.coefs]
        return el

    # -- reduction -------------------------------------------------------------

    def find_reducer(self, k):
        ent = self.div_cache.get(k)
        start = 0
        if ent is not None:
            if ent[0] >= 0:
                return ent[0]
            start = ent[1]
        R = self.reducers
        P = self.pk[k] | self.guard
        G = self.guard
        for i in range(start, len(R)):
            if (P - R[i].packs[0]) & G == G:
                self.div_cache[k] = (i, 0)
                return i
        self.div_cache[k] = (-1, len(R))
        return -1

    def _degree_of_pack(self, pk):
        return sum((pk >> (BITS * i)) & FIELD_MASK for i in range(self.n))

    def reduce(self, h, heap, sugar, full=True):
        """Reduce the polynomial given as dict key->coef (plus its key heap) by self.reducers.

        Returns (keys, coefs) of the remainder in decreasing order, and the sugar.
        """
        F = self.F
        pk = self.pk
        R = self.reducers
        rem_k, rem_c = [], []
        max_steps = self.max_steps
        prime = self.prime
        p = self.p
        while heap:
            k = -heappop(heap)
            c = h.pop(k)
            if (c == 0) if prime else F.is_zero(c):
                continue
            r = self.find_reducer(k)
            if r < 0:
                rem_k.append(k)
                rem_c.append(c)
                if not full:
                    rest = sorted(((kk, cc) for kk, cc in h.items() if (cc if prime else not F.is_zero(cc))),
                                  reverse=True)
                    rem_k.extend(kk for kk, _ in rest)
                    rem_c.extend(cc for _, cc in rest)
                    break
                continue
            g = R[r]
            gk, gc, gp = g.keys, g.coefs, g.packs
            dk = k - gk[0]
            dp = pk[k] - gp[0]
            s = g.sugar + self._degree_of_pack(dp)
            if s > sugar:
                sugar = s
            n = len(gk)
            self.steps += n
            if prime:
                for j in range(1, n):
                    nk = gk[j] + dk
                    v = h.get(nk)
                    if v is None:
                        h[nk] = (-c * gc[j]) % p
                        heappush(heap, -nk)
                        if nk not in pk:
                            pk[nk] = gp[j] + dp
                    else:
                        h[nk] = (v - c * gc[j]) % p
            else:
                mul, sub, neg = F.mul, F.sub, F.neg
                for j in range(1, n):
                    nk = gk[j] + dk
                    v = h.get(nk)
                    if v is None:
                        h[nk] = neg(mul(c, gc[j]))
                        heappush(heap, -nk)
                        if nk not in pk:
                            pk[nk] = gp[j] + dp
                    else:
                        h[nk] = sub(v, mul(c, gc[j]))
            if max_steps is not None and self.steps > max_steps:
                raise ResourceExhausted("reduction step budget exceeded",
                                        {"steps": self.steps, "basis": len(R)})
        return rem_k, rem_c, sugar

    def _as_dict(self, el, shift_k=0, shift_p=0, scale=None, into=None, skip_lead=False):
        F = self.F
        h = {} if into is None else into
        pk = self.pk
        start = 1 if skip_lead else 0
        for j in range(start, len(el.keys)):
            nk = el.keys[j] + shift_k
            c = el.coefs[j] if scale is None else F.mul(el.coefs[j], scale)
            if nk in h:
                h[nk] = F.add(h[nk], c)
            else:
                h[nk] = c
                if nk not in pk:
                    pk[nk] = el.packs[j] + shift_p
        return h

    def normal_form_elem(self, el, full=True):
        h = self._as_dict(el)
        heap = [-k for k in h]
        heapify(heap)
        keys, coefs, sugar = self.reduce(h, heap, el.sugar, full)
        return self._make(keys, coefs, sugar)

    def _make(self, keys, coefs, sugar):
        if not keys:
            return None
        packs = [self.pk[k] for k in keys]
        return _Elem(keys, coefs, packs, self.unpack(packs[0]), sugar)

    # -- Buchberger ------------------------------------------------------------

    def _lcm(self, a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    @staticmethod
    def _divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    @staticmethod
    def _disjoint(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def spoly(self, f, g):
        F = self.F
        L = self._lcm(f.lm_exps, g.lm_exps)
        sf = tuple(x - y for x, y in zip(L, f.lm_exps))
        sg = tuple(x - y for x, y in zip(L, g.lm_exps))
        h = self._as_dict(f, self.key(sf), self.pack(sf), skip_lead=True)
        h = self._as_dict(g, self.key(sg), self.pack(sg), scale=F.neg(F.one), into=h, skip_lead=True)
        sugar = max(f.sugar + sum(sf), g.sugar + sum(sg))
        return h, sugar

    def groebner(self, polys, deg_bound=None):
        """Reduced Groebner basis of the given Polys, as a list of _Elems."""
        basis = []          # all elements found, indices are stable
        active = []         # indices of the current (GM-minimal) basis
        pairs = []          # heap of (sugar, lcm key, i, j)
        # inputs are added in increasing order of their leading monomials
        elems = [self._monic(self.to_elem(f)) for f in polys if f]
        elems.sort(key=lambda e: (e.sugar, e.keys[0]))
        for el in elems:
            self.reducers = [basis[i] for i in active]
            self.div_cache = {}
            red = self.normal_form_elem(el)
            if red is None:
                continue
            self._insert(self._monic(red), basis, active, pairs)
        # main loop
        self.reducers = [basis[i] for i in active]
        self.div_cache = {}
        while pairs:
            sug, lk, i, j = heappop(pairs)
            if deg_bound is not None and sug > deg_bound:
                continue
            h, sugar = self.spoly(basis[i], basis[j])
            heap = [-k for k in h]
            heapify(heap)
            keys, coefs, sugar = self.reduce(h, heap, sugar)
            if not keys:
                continue
            new = self._monic(self._make(keys, coefs, sugar))
            self._insert(new, basis, active, pairs)
            self.reducers.append(new)
            if self.max_basis is not None and len(active) > self.max_basis:
                raise ResourceExhausted("basis size budget exceeded",
                                        {"basis": len(active), "pairs": len(pairs), "sugar": sug})
        return self._interreduce([basis[i] for i in active])

    def _insert(self, h, basis, active, pairs):
        """Gebauer-Moeller update for the new element h."""
        hi = len(basis)
        basis.append(h)
        lh = h.lm_exps
        lcm = self._lcm
        div = self._divides
        C = [(g, lcm(basis[g].lm_exps, lh)) for g in active]
        D = []
        while C:
            g, L = C.pop()
            if self._disjoint(basis[g].lm_exps, lh) or not (
                    any(div(L2, L) for _, L2 in C) or any(div(L2, L) for _, L2 in D)):
                D.append((g, L))
        E = [(g, L) for g, L in D if not self._disjoint(basis[g].lm_exps, lh)]
        kept = []
        for item in pairs:
            _, _, i, j = item
            Lij = lcm(basis[i].lm_exps, basis[j].lm_exps)
            if div(lh, Lij) and lcm(basis[i].lm_exps, lh) != Lij and lcm(basis[j].lm_exps, lh) != Lij:
                continue
            kept.append(item)
        for g, L in E:
            sug = max(basis[g].sugar + sum(L) - sum(basis[g].lm_exps), h.sugar + sum(L) - sum(lh))
            kept.append((sug, self.key(L), g, hi))
        heapify(kept)
        pairs[:] = kept
        active[:] = [g for g in active if not div(lh, basis[g].lm_exps)] + [hi]

    def _interreduce(self, elems):
        elems = sorted(elems, key=lambda e: e.keys[0])
        minimal = []
        for e in elems:
            if not any(self._divides(m.lm_exps, e.lm_exps) for m in minimal):
                minimal.append(e)
        self.reducers = minimal
        self.div_cache = {}
        out = []
        for e in minimal:
            # tail reduction; the leading term is irreducible by the other leads
            h = self._as_dict(e, skip_lead=True)
            heap = [-k for k in h]
            heapify(heap)
            keys, coefs, _ = self.reduce(h, heap, e.sugar)
            el = _Elem([e.keys[0]] + keys, [e.coefs[0]] + coefs, [e.packs[0]] + [self.pk[k] for k in keys],
                       e.lm_exps, e.sugar)
            out.append(self._monic(el))
        return out


# -- IdealBasis ------------------------------------------------------------------


class IdealBasis:
    """Generators of an ideal, with a lazily computed reduced Groebner basis."""

    def __init__(self, generators, order="grevlex", field=None, nvars=None, gb=None):
        gens = [g for g in generators]
        if field is None:
            if not gens:
                raise GroebnerError("empty ideal needs an explicit field")
            field = gens[0].field
        if nvars is None:
            nvars = gens[0].nvars if gens else 3
        for g in gens:
            if g.field != field:
                raise FieldMismatch("generators over different fields")
            if g.nvars != nvars:
                raise GroebnerError("generators in different rings")
        self.field = field
        self.nvars = nvars
        self.generators = [g for g in gens if g]
        self.order = order
        self._gb = gb
        self._engine = None
        self.stats = {}

    def __repr__(self):
        return "IdealBasis(%d generators over %s, %s)" % (len(self.generators), self.field, self.order)

    def gb(self, deg_bound=None, max_steps=None, max_basis=None):
        """The reduced Groebner basis as a list of monic Polys (smallest lead first)."""
        if self._gb is None:
            eng = Engine(self.field, self.nvars, self.order, max_steps, max_basis)
            elems = eng.groebner(self.generators, deg_bound)
            self._gb = [eng.to_poly(e) for e in elems]
            self.stats = {"steps": eng.steps, "size": len(elems)}
            if deg_bound is not None:
                self.stats["deg_bound"] = deg_bound
        return self._gb

    @property
    def has_gb(self):
        return self._gb is not None

    def _eng(self):
        if self._engine is None:
            eng = Engine(self.field, self.nvars, self.order)
            eng.reducers = [eng._monic(eng.to_elem(g)) for g in self.gb()]
            eng.div_cache = {}
            self._engine = eng
        return self._engine

    def normal_form(self, f):
        if f.field != self.field:
            raise FieldMismatch("polynomial over %s, ideal over %s" % (f.field, self.field))
        if not f:
            return f
        eng = self._eng()
        r = eng.normal_form_elem(eng.to_elem(f))
        return Poly.zero(self.field, self.nvars) if r is None else eng.to_poly(r)

    def contains(self, f):
        return not self.normal_form(f)

    def __contains__(self, f):
        return self.contains(f)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.gb()]

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def with_order(self, order):
        return IdealBasis(self.generators, order, self.field, self.nvars)

    def same_ideal(self, other):
        a = self if self.order == "grevlex" else self.with_order("grevlex")
        b = other if other.order == "grevlex" else other.with_order("grevlex")
        return sorted(map(_canon, a.gb())) == sorted(map(_canon, b.gb()))

    def is_unit(self):
        g = self.gb()
        return len(g) == 1 and g[0].degree() == 0

    # -- staircase ---------------------------------------------------------

    def standard_monomials(self, d):
        """Degree-d monomials outside the leading-term ideal."""
        lms = self.leading_monomials()
        return [m for m in monomials(d, self.nvars)
                if not any(all(a <= b for a, b in zip(l, m)) for l in lms)]

    def quotient_dim(self, d):
        return len(self.standard_monomials(d))

    def krull_dim(self):
        return monomial_krull_dim(self.leading_monomials(), self.nvars)


def _canon(p):
    return tuple(sorted(p.terms.items()))


def monomial_krull_dim(lms, n, ignore=()):
    """Krull dimension of k[x]/<lms> (variables in ignore are set to 1 first)."""
    import itertools

    supports = [frozenset(i for i in range(n) if m[i] and i not in ignore) for m in lms]
    if any(not s for s in supports):
        return -1
    live = [i for i in range(n) if i not in ignore]
    for size in range(len(live), -1, -1):
        for V in itertools.combinations(live, size):
            Vs = set(V)
            # V is independent if no generator is supported inside V
            if not any(s <= Vs for s in supports):
                return size
    return -1


# -- module-level operations ---------------------------------------------------


def reduced_gb(I, **guard):
    I.gb(**guard)
    return I


def normal_form(f, I):
    return I.normal_form(f)


def spoly(f, g, order="grevlex"):
    """S-polynomial of two Polys."""
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    L = tuple(max(a, b) for a, b in zip(lf, lg))
    F = f.field
    a = f.mul_monomial(tuple(x - y for x, y in zip(L, lf)), F.inv(f.leading_coeff(order)))
    b = g.mul_monomial(tuple(x - y for x, y in zip(L, lg)), F.inv(g.leading_coeff(order)))
    return a - b


def is_groebner(G, order="grevlex"):
    """Check that every S-polynomial of G reduces to zero modulo G."""
    if not G:
        return True
    I = IdealBasis(G, order, gb=list(G))
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if I.normal_form(spoly(G[i], G[j], order)):
                return False
    return True


def eliminate(I, variable):
    """Generators of I intersected with the subring not involving x_variable."""
    J = IdealBasis(I.generators, ("elim", variable), I.field, I.nvars)
    kept = [g for g in J.gb() if all(e[variable] == 0 for e in g.terms)]
    return IdealBasis(kept, I.order, I.field, I.nvars)


def exact_divide(a, b, order="grevlex"):
    """a / b, raising if b does not divide a."""
    F = a.field
    lb = b.leading_monomial(order)
    inv = F.inv(b.terms[lb])
    q = Poly.zero(F, a.nvars)
    r = a
    while r:
        lr = r.leading_monomial(order)
        d = tuple(x - y for x, y in zip(lr, lb))
        if min(d) < 0:
            raise PolyError("inexact division")
        c = F.mul(r.terms[lr], inv)
        t = Poly._raw(F, {d: c}, a.nvars)
        q = q + t
        r = r - b * t
    return q


def _is_last_variable(f, n):
    e = [0] * n
    e[n - 1] = 1
    return len(f.terms) == 1 and tuple(e) in f.terms


def colon(I, f):
    """The ideal quotient (I : f)."""
    if not f:
        raise GroebnerError("colon by the zero polynomial")
    F, n = I.field, I.nvars
    if I.order == "grevlex" and I.is_homogeneous() and _is_last_variable(f, n):
        out = []
        for g in I.gb():
            if all(e[n - 1] >= 1 for e in g.terms):
                g = g.divide_by_monomial(tuple(1 if i == n - 1 else 0 for i in range(n)))
            out.append(g)
        J = IdealBasis(out, I.order, F, n)
        J.gb()
        return J
    # tag variable t: (I : f) = (t I + (1 - t) f) cap k[x], divided by f
    t = Poly.var(F, n, n + 1)
    one = Poly.const(F, 1, n + 1)
    gens = [t * g.extend_vars(n + 1) for g in I.generators] + [(one - t) * f.extend_vars(n + 1)]
    E = IdealBasis(gens, ("elim", n), F, n + 1)
    inter = [g.restrict_vars(n) for g in E.gb() if all(e[n] == 0 for e in g.terms)]
    quot = [exact_divide(g, f) for g in inter]
    return IdealBasis(quot, I.order, F, n)


def saturate(I, f, max_rounds=100):
    """(I : f^infinity).

    For the last variable under grevlex on a homogeneous ideal, every basis
    element is divided by its highest power of that variable.  A linear form
    is first moved to the last variable by a coordinate change.  Anything
    else iterates colon until the ideal stops growing.
    """
    F, n = I.field, I.nvars
    if I.order == "grevlex" and I.is_homogeneous() and f.is_homogeneous():
        if _is_last_variable(f, n):
            out = []
            for g in I.gb():
                k = min(e[n - 1] for e in g.terms)
                if k:
                    g = g.divide_by_monomial(tuple(k if i == n - 1 else 0 for i in range(n)))
                out.append(g)
            J = IdealBasis(out, "grevlex", F, n)
            J.gb()
            return J
        if f.degree() == 1 and n == 3:
            N = complete_to_basis(f)
            Ninv = inverse3(N, F)
            moved = IdealBasis([g.linear_change(Ninv) for g in I.generators], "grevlex", F, n)
            S = saturate(moved, Poly.var(F, 2, 3))
            back = IdealBasis([g.linear_change(N) for g in S.gb()], "grevlex", F, n)
            back.gb()
            return back
    J = I
    for _ in range(max_rounds):
        K = colon(J, f)
        if all(J.contains(g) for g in K.gb()):
            return J
        J = K
    raise ResourceExhausted("saturation did not stabilize", {"rounds": max_rounds})


def complete_to_basis(l):
    """Invertible matrix N whose last row holds the coefficients of the linear form l.

    With y = N x the form l becomes the last coordinate y_3.
    """
    F = l.field
    row = [l.terms.get(e, F.zero) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    units = [[F.one if i == j else F.zero for j in range(3)] for i in range(3)]
    for a, b in itertools.combinations(range(3), 2):
        N = [units[a], units[b], row]
        if not F.is_zero(det3(N, F)):
            return N
    raise GroebnerError("linear form is zero")


# -- zero-dimensional tools ----------------------------------------------------


class QuotientAlgebra:
    """k[x]/I for a zero-dimensional affine ideal given by its Groebner basis.

    The affine ideal lives in the ambient ring with the chart variable unused.
    """

    def __init__(self, I, chart):
        self.I = I
        self.chart = chart
        self.F = I.field
        n = I.nvars
        live = [i for i in range(n) if i != chart]
        self.live = live
        lms = I.leading_monomials()
        if monomial_krull_dim(lms, n, ignore=(chart,)) > 0:
            raise NotZeroDimensional("ideal is not zero-dimensional in the chart")
        basis = []
        # enumerate standard monomials by increasing degree until a whole degree is empty
        d = 0
        while True:
            layer = [m for m in _affine_monomials(d, n, chart)
                     if not any(all(a <= b for a, b in zip(l, m)) for l in lms)]
            if not layer:
                break
            basis.extend(layer)
            d += 1
        self.basis = basis
        self.index = {m: i for i, m in enumerate(basis)}
        self.dim = len(basis)

    def vector(self, f):
        """Coordinates of the normal form of f in the standard-monomial basis."""
        r = self.I.normal_form(f)
        v = [self.F.zero] * self.dim
        for e, c in r.terms.items():
            v[self.index[e]] = c
        return v

    def power_vectors(self, x, count):
        F = self.F
        g = Poly.var(F, x, self.I.nvars)
        cur = Poly.const(F, 1, self.I.nvars)
        out = []
        for _ in range(count):
            out.append(self.vector(cur))
            cur = self.I.normal_form(cur * g)
        return out

    def minimal_polynomial(self, x):
        """Minimal polynomial (low degree first, monic) of the class of x_x."""
        F = self.F
        inc = IncrementalBasis(F, self.dim)
        g = Poly.var(F, x, self.I.nvars)
        cur = Poly.const(F, 1, self.I.nvars)
        for k in range(self.dim + 1):
            comb = inc.add(self.vector(cur))
            if comb is not None:
                # x^k = sum comb_i x^i
                return [F.neg(c) for c in comb] + [F.one]
            cur = self.I.normal_form(cur * g)
        raise GroebnerError("no dependency found")  # unreachable

    def express_in_powers(self, x, f):
        """Coefficients c with f = sum c_i x^i in the algebra, or None."""
        F = self.F
        inc = IncrementalBasis(F, self.dim)
        for v in self.power_vectors(x, self.dim):
            if inc.add(v) is not None:
                return None
        comb = inc.add(self.vector(f))
        return comb


def _affine_monomials(d, n, chart):
    out = []
    for m in monomials(d, n - 1):
        out.append(m[:chart] + (0,) + m[chart:])
    return out


def affine_gb(I, chart):
    """GB of the dehomogenized ideal (x_chart = 1), keeping the ambient ring."""
    J = IdealBasis([g.dehomogenize(chart) for g in I.generators], "grevlex", I.field, I.nvars)
    J.gb()
    return J


def binary_gcd_degree(forms, F):
    """Degree of the gcd of binary forms given as dicts {(i, j): c} for x^i y^j."""
    forms = [f for f in forms if f]
    if not forms:
        return None
    g = None
    ymin = None
    for f in forms:
        d = max(i + j for i, j in f)
        coeffs = [F.zero] * (d + 1)
        for (i, j), c in f.items():
            coeffs[i] = F.add(coeffs[i], c)
        yord = min(j for _, j in f)
        ymin = yord if ymin is None else min(ymin, yord)
        u = upoly.trim(coeffs, F)
        g = u if g is None else upoly.gcd(g, u, F)
    # the y-part: common power of y, plus the x-gcd of the dehomogenization
    return upoly.degree(upoly.monic(g, F)) + ymin


def restrict_to_line_w0(f):
    """f(u, v, 0) as a binary-form dict {(i, j): c}."""
    return {(e[0], e[1]): c for e, c in f.terms.items() if e[2] == 0}


class CoordinateChart:
    """A random linear coordinate change placing no point of V(I) on w = 0."""

    def __init__(self, F, seed, polys, tries=50):
        rng = random.Random(seed)
        for _ in range(tries):
            M = [[F.random(rng) for _ in range(3)] for _ in range(3)]
            if F.is_zero(det3(M, F)):
                continue
            moved = [g.linear_change(M) for g in polys]
            dg = binary_gcd_degree([restrict_to_line_w0(g) for g in moved], F)
            if dg == 0:
                self.M = M
                self.Minv = inverse3(M, F)
                self.moved = moved
                return
        raise GroebnerError("no admissible coordinate change found")


def _affine_radical(J, chart):
    """Seidenberg: add squarefree parts of the eliminants of each live variable."""
    F = J.field
    A = QuotientAlgebra(J, chart)
    extra = []
    for x in A.live:
        mp = A.minimal_polynomial(x)
        deg = len(mp) - 1
        if F.characteristic and F.characteristic <= deg:
            raise CharacteristicTooSmall("eliminant degree %d >= characteristic" % deg)
        sq = upoly.squarefree_part(mp, F)
        if len(sq) < len(mp):
            extra.append(_univariate_to_poly(sq, x, F, J.nvars))
    if not extra:
        return J, A
    R = IdealBasis(J.gb() + extra, "grevlex", F, J.nvars)
    R.gb()
    return R, QuotientAlgebra(R, chart)


def _univariate_to_poly(coeffs, x, F, n):
    t = {}
    for i, c in enumerate(coeffs):
        if not F.is_zero(c):
            e = [0] * n
            e[x] = i
            t[tuple(e)] = c
    return Poly(F, t, n)


def homogenize_ideal(J, chart):
    return [g.homogenize(chart) for g in J.gb()]


def radical_zero_dim(I, seed=0, chart=None):
    """Radical of a zero-dimensional ideal.

    Homogeneous input: a random coordinate change moves all points off w = 0,
    the affine radical is computed there, homogenized (which also saturates)
    and moved back.  If chart is given the input is treated as an affine
    ideal in that chart and the affine radical is returned.
    """
    F = I.field
    if chart is not None:
        J = IdealBasis([g.dehomogenize(chart) for g in I.generators], "grevlex", F, I.nvars)
        return _affine_radical(J, chart)[0]
    if not I.is_homogeneous():
        raise GroebnerError("projective radical needs a homogeneous ideal (or pass chart=)")
    if I.nvars != 3:
        raise GroebnerError("projective radical is implemented for P^2")
    ch = CoordinateChart(F, seed, I.generators)
    Jm = IdealBasis([g.dehomogenize(2) for g in ch.moved], "grevlex", F, 3)
    Jm.gb()
    R, _ = _affine_radical(Jm, 2)
    back = IdealBasis([g.homogenize(2).linear_change(ch.Minv) for g in R.gb()], "grevlex", F, 3)
    back.gb()
    return back
