"""Sparse polynomials in u, v, w over a FieldSpec.

Terms are stored in a dict mapping exponent tuples to raw nonzero field
values.  Most polynomials here are homogeneous; affine (dehomogenized)
polynomials still use three-slot exponent tuples with a zero in the
dehomogenized slot, so charts never change the ambient ring.
"""

from fractions import Fraction
from math import comb
import random
import warnings

from .fields import FieldElem, FieldError

VAR_NAMES = ("u", "v", "w", "s")


class PolyError(ValueError):
    pass


class PolySyntaxError(SyntaxError):
    def __init__(self, msg, position):
        super().__init__("%s (at position %d)" % (msg, position))
        self.position = position


class MixedField(PolyError):
    pass


class NotHomogeneous(PolyError):
    pass


class DependentLines(PolyError):
    pass


# -- monomial orders ---------------------------------------------------------
#
# Each order is realized by integer weights, so key(a*b) = key(a) + key(b).
# B bounds the exponents (B > every exponent and every total degree).

ORDER_BASE = 1024


def order_weights(order, n):
    B = ORDER_BASE
    if order == "grevlex":
        return tuple([B ** (n - 1)] + [B ** (n - 1) - B ** (i - 1) for i in range(1, n)])
    if order == "lex":
        return tuple(B ** (n - 1 - i) for i in range(n))
    if isinstance(order, tuple) and order[0] == "elim":
        j = order[1]
        g = order_weights("grevlex", n)
        return tuple(g[i] + (B ** n if i == j else 0) for i in range(n))
    raise PolyError("unknown monomial order %r" % (order,))


def order_key(order, n):
    w = order_weights(order, n)
    if n == 3:
        a, b, c = w
        return lambda e: a * e[0] + b * e[1] + c * e[2]
    return lambda e: sum(x * y for x, y in zip(w, e))


def graded_dim(d, nvars=3):
    """Dimension of the space of degree-d forms."""
    if d < 0:
        return 0
    return comb(d + nvars - 1, nvars - 1)


def monomials(d, nvars=3):
    """Exponent tuples of degree d, in decreasing grevlex order."""
    out = []

    def rec(prefix, left, k):
        if k == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, k - 1)

    if d >= 0:
        rec((), d, nvars)
    key = order_key("grevlex", nvars)
    out.sort(key=key, reverse=True)
    return out


class Poly:
    __slots__ = ("field", "terms", "nvars", "_hash")

    def __init__(self, field, terms=None, nvars=3):
        self.field = field
        self.nvars = nvars
        t = {}
        if terms:
            isz = field.is_zero
            for e, c in terms.items():
                if not isz(c):
                    t[e] = c
        self.terms = t
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, field, terms, nvars=3):
        p = cls.__new__(cls)
        p.field = field
        p.terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def zero(cls, field, nvars=3):
        return cls._raw(field, {}, nvars)

    @classmethod
    def const(cls, field, c, nvars=3):
        return cls(field, {(0,) * nvars: field.coerce(c)}, nvars)

    @classmethod
    def var(cls, field, i, nvars=3):
        e = [0] * nvars
        e[i] = 1
        return cls._raw(field, {tuple(e): field.one}, nvars)

    @classmethod
    def gens(cls, field, nvars=3):
        return tuple(cls.var(field, i, nvars) for i in range(nvars))

    @classmethod
    def monomial(cls, field, exps, c=1):
        return cls(field, {tuple(exps): field.coerce(c)}, len(exps))

    @classmethod
    def linear(cls, field, coeffs):
        """The linear form sum coeffs[i] * x_i."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = field.coerce(c)
        return cls(field, terms, n)

    @classmethod
    def parse(cls, text, field, nvars=3):
        return parse(text, field, nvars)

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degrees(self):
        return sorted({sum(e) for e in self.terms})

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def coeff(self, exps):
        return FieldElem(self.field, self.terms.get(tuple(exps), self.field.zero))

    def homogeneous_part(self, d):
        return Poly._raw(self.field, {e: c for e, c in self.terms.items() if sum(e) == d}, self.nvars)

    def sorted_terms(self, order="grevlex"):
        key = order_key(order, self.nvars)
        return sorted(self.terms.items(), key=lambda ec: key(ec[0]), reverse=True)

    def leading_monomial(self, order="grevlex"):
        key = order_key(order, self.nvars)
        return max(self.terms, key=key)

    def leading_coeff(self, order="grevlex"):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order="grevlex"):
        if not self.terms:
            return self
        return self.scale_raw(self.field.inv(self.leading_coeff(order)))

    def variables(self):
        return {i for e in self.terms for i in range(self.nvars) if e[i]}

    # -- arithmetic --------------------------------------------------------

    def _coerce_other(self, o):
        if isinstance(o, Poly):
            if o.field != self.field:
                if o.field == self.field.base:
                    return o.change_field(self.field)
                raise MixedField("polynomials over %s and %s" % (self.field, o.field))
            return o
        return Poly.const(self.field, o, self.nvars)

    def __add__(self, o):
        o = self._coerce_other(o)
        F = self.field
        t = dict(self.terms)
        for e, c in o.terms.items():
            if e in t:
                s = F.add(t[e], c)
                if F.is_zero(s):
                    del t[e]
                else:
                    t[e] = s
            else:
                t[e] = c
        return Poly._raw(F, t, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._raw(F, {e: F.neg(c) for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, o):
        return self + (-self._coerce_other(o))

    def __rsub__(self, o):
        return self._coerce_other(o) - self

    def scale_raw(self, c):
        F = self.field
        if F.is_zero(c):
            return Poly.zero(F, self.nvars)
        return Poly._raw(F, {e: F.mul(x, c) for e, x in self.terms.items()}, self.nvars)

    def scale(self, c):
        return self.scale_raw(self.field.coerce(c))

    def __mul__(self, o):
        if not isinstance(o, Poly):
            return self.scale(o)
        o = self._coerce_other(o)
        F = self.field
        t = {}
        if F.kind == "prime":
            p = F.characteristic
            for e1, c1 in self.terms.items():
                for e2, c2 in o.terms.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    t[e] = (t.get(e, 0) + c1 * c2) % p
            t = {e: c for e, c in t.items() if c}
            return Poly._raw(F, t, self.nvars)
        zero = F.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                t[e] = F.add(t.get(e, zero), F.mul(c1, c2))
        return Poly(F, t, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise PolyError("negative power")
        result = Poly.const(self.field, 1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, exps, c=None):
        F = self.field
        if c is None:
            t = {tuple(x + y for x, y in zip(e, exps)): v for e, v in self.terms.items()}
        else:
            t = {tuple(x + y for x, y in zip(e, exps)): F.mul(v, c) for e, v in self.terms.items()}
        return Poly._raw(F, t, self.nvars)

    def divide_by_monomial(self, exps):
        t = {}
        for e, c in self.terms.items():
            q = tuple(x - y for x, y in zip(e, exps))
            if min(q) < 0:
                raise PolyError("monomial does not divide")
            t[q] = c
        return Poly._raw(self.field, t, self.nvars)

    def __eq__(self, o):
        if isinstance(o, Poly):
            return self.field == o.field and self.terms == o.terms
        if isinstance(o, (int, Fraction, FieldElem)):
            return self == Poly.const(self.field, o, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and evaluation ------------------------------------------

    def diff(self, i):
        F = self.field
        t = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                v = F.mul(F.from_int(k), c)
                if not F.is_zero(v):
                    t[ne] = v
        return Poly._raw(F, t, self.nvars)

    def gradient(self):
        return [self.diff(i) for i in range(self.nvars)]

    def evaluate_raw(self, point):
        """Evaluate at a tuple of raw field values."""
        F = self.field
        acc = F.zero
        pows = [dict() for _ in point]
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    pk = pows[i].get(k)
                    if pk is None:
                        pk = F.pow(point[i], k)
                        pows[i][k] = pk
                    term = F.mul(term, pk)
            acc = F.add(acc, term)
        return acc

    def __call__(self, *point):
        F = self.field
        return FieldElem(F, self.evaluate_raw(tuple(F.coerce(x) for x in point)))

    def substitute(self, images):
        """Replace x_i by the polynomial images[i] (all over the same field)."""
        F = self.field
        if len(images) != self.nvars:
            raise PolyError("need %d images" % self.nvars)
        images = [self._coerce_other(g) if isinstance(g, Poly) else Poly.const(F, g, images_nvars(images))
                  for g in images]
        nv = images[0].nvars
        cache = [{0: Poly.const(F, 1, nv), 1: g} for g in images]

        def power(i, k):
            c = cache[i]
            if k not in c:
                # square-and-multiply through the cache
                h = k // 2
                c[k] = power(i, h) * power(i, k - h)
            return c[k]

        acc = {}
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    pk = power(i, k)
                    term = pk if term is None else term * pk
            if term is None:
                term = Poly.const(F, 1, nv)
            for me, mc in term.terms.items():
                acc[me] = F.add(acc.get(me, F.zero), F.mul(mc, c))
        return Poly(F, acc, nv)

    def linear_change(self, M):
        """f(M x): x_i -> sum_j M[i][j] x_j, M given as raw or coercible entries."""
        F = self.field
        n = self.nvars
        images = [Poly.linear(F, [M[i][j] for j in range(n)]) for i in range(n)]
        return self.substitute(images)

    def dehomogenize(self, i):
        """Set x_i = 1, keeping the ambient ring."""
        F = self.field
        t = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            t[ne] = F.add(t.get(ne, F.zero), c)
        return Poly(F, t, self.nvars)

    def homogenize(self, i, degree=None):
        """Inverse of dehomogenize: multiply terms by powers of x_i up to the degree."""
        d = self.degree() if degree is None else degree
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                raise PolyError("polynomial already involves the homogenizing variable")
            t[e[:i] + (d - sum(e),) + e[i + 1:]] = c
        return Poly._raw(self.field, t, self.nvars)

    def change_field(self, K, fn=None):
        """Coefficients mapped into K (by embedding, or by fn on raws)."""
        fn = fn or K.embed
        return Poly(K, {e: fn(c) for e, c in self.terms.items()}, self.nvars)

    def extend_vars(self, n):
        """The same polynomial in a ring with n >= nvars variables."""
        pad = (0,) * (n - self.nvars)
        return Poly._raw(self.field, {e + pad: c for e, c in self.terms.items()}, n)

    def restrict_vars(self, n):
        for e in self.terms:
            if any(e[n:]):
                raise PolyError("polynomial involves dropped variables")
        return Poly._raw(self.field, {e[:n]: c for e, c in self.terms.items()}, n)

    # -- text ----------------------------------------------------------------

    def format(self, order="grevlex"):
        if not self.terms:
            return "0"
        return format_terms(self.sorted_terms(order), self.field, self.nvars)

    def __str__(self):
        return self.format()

    def __repr__(self):
        s = self.format()
        if len(s) > 80:
            s = s[:77] + "..."
        return "Poly(%s: %s)" % (self.field, s)


def images_nvars(images):
    for g in images:
        if isinstance(g, Poly):
            return g.nvars
    return len(images)


def _format_coeff(F, c):
    if F.kind == "extension":
        if not any(c[1:]):
            return F.base.format_elem(c[0]), F.base.kind == "rationals" and c[0] < 0
        return "[%s]" % F.format_elem(c), False
    s = F.format_elem(c)
    return s, s.startswith("-")


def format_terms(items, F, nvars=3):
    out = []
    for e, c in items:
        cs, negative = _format_coeff(F, c)
        if negative:
            cs = cs[1:]
        mono = "*".join(VAR_NAMES[i] + ("^%d" % k if k > 1 else "") for i, k in enumerate(e) if k)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = cs + "*" + mono
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


# -- parsing -----------------------------------------------------------------


def _tokens(text):
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield ("num", text[i:j], i)
            i = j
            continue
        if ch == "[":
            j = text.find("]", i)
            if j < 0:
                raise PolySyntaxError("unclosed bracket", i)
            yield ("bracket", text[i + 1:j], i)
            i = j + 1
            continue
        if ch in "+-*^/":
            yield (ch, ch, i)
            i += 1
            continue
        if ch.isalpha():
            yield ("name", ch, i)
            i += 1
            continue
        raise PolySyntaxError("unexpected character %r" % ch, i)
    yield ("end", "", n)


def parse(text, field, nvars=3):
    """Parse a polynomial like "409*u^8*v^2*w^2 + 3u^2 - [t+2]*w^3".

    Coefficients are integers, fractions a/b, or bracketed extension
    elements; '*' between factors is optional.
    """
    names = VAR_NAMES[:nvars]
    toks = list(_tokens(text))
    pos = 0
    F = field
    terms = {}

    def peek():
        return toks[pos]

    def take():
        nonlocal pos
        t = toks[pos]
        pos += 1
        return t

    while True:
        sign = 1
        kind, val, at = peek()
        if kind in "+-":
            take()
            sign = -1 if kind == "-" else 1
            kind, val, at = peek()
        elif terms or pos > 0:
            raise PolySyntaxError("expected '+' or '-'", at)
        coef = F.from_int(sign)
        exps = [0] * nvars
        nfactors = 0
        while True:
            kind, val, at = peek()
            if kind == "num":
                take()
                c = Fraction(int(val))
                if peek()[0] == "/":
                    take()
                    k2, v2, a2 = take()
                    if k2 != "num":
                        raise PolySyntaxError("expected denominator", a2)
                    if int(v2) == 0:
                        raise PolySyntaxError("zero denominator", a2)
                    c = c / int(v2)
                try:
                    coef = F.mul(coef, F.from_fraction(c))
                except ZeroDivisionError:
                    raise PolySyntaxError("denominator vanishes in %s" % F, at)
            elif kind == "bracket":
                take()
                if F.kind != "extension":
                    raise MixedField("bracketed extension coefficient over %s" % F)
                try:
                    coef = F.mul(coef, F.parse_elem(val))
                except (FieldError, ValueError) as exc:
                    raise PolySyntaxError("bad coefficient [%s]: %s" % (val, exc), at)
            elif kind == "name":
                take()
                if val == "t":
                    raise MixedField("t must appear inside brackets")
                if val not in names:
                    raise PolySyntaxError("unknown variable %r" % val, at)
                k = 1
                if peek()[0] == "^":
                    take()
                    k2, v2, a2 = take()
                    if k2 != "num":
                        raise PolySyntaxError("expected exponent", a2)
                    k = int(v2)
                exps[names.index(val)] += k
            else:
                if nfactors == 0:
                    raise PolySyntaxError("expected a term", at)
                break
            nfactors += 1
            if peek()[0] == "*":
                take()
                if peek()[0] not in ("num", "bracket", "name"):
                    raise PolySyntaxError("dangling '*'", peek()[2])
        e = tuple(exps)
        terms[e] = F.add(terms.get(e, F.zero), coef)
        kind, val, at = peek()
        if kind == "end":
            break
        if kind not in "+-":
            raise PolySyntaxError("unexpected %r" % val, at)
    return Poly(F, terms, nvars)


def parse_many(text, field, nvars=3):
    """One polynomial per non-empty line; '#' starts a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse(line, field, nvars))
    return out


# -- geometry helpers ---------------------------------------------------------


def jacobian_ideal(f, order="grevlex"):
    """IdealBasis of (f, f_u, f_v, f_w).

    f is kept as a generator; it is redundant when the characteristic does not
    divide deg f (Euler relation), and a warning is emitted when it does.
    """
    from .groebner import IdealBasis

    if not f.is_homogeneous():
        raise NotHomogeneous("jacobian ideal needs a homogeneous polynomial")
    p = f.field.characteristic
    if p and f.degree() % p == 0:
        warnings.warn("characteristic divides the degree; f is not in the ideal of its partials")
    return IdealBasis([f] + f.gradient(), order=order)


def euler_holds(f):
    d = f.degree()
    lhs = f.scale(d)
    rhs = Poly.zero(f.field, f.nvars)
    for i, g in enumerate(f.gradient()):
        rhs = rhs + Poly.var(f.field, i, f.nvars) * g
    return lhs == rhs


def det3(M, F):
    a, b, c = M
    t1 = F.mul(a[0], F.sub(F.mul(b[1], c[2]), F.mul(b[2], c[1])))
    t2 = F.mul(a[1], F.sub(F.mul(b[0], c[2]), F.mul(b[2], c[0])))
    t3 = F.mul(a[2], F.sub(F.mul(b[0], c[1]), F.mul(b[1], c[0])))
    return F.add(F.sub(t1, t2), t3)


def inverse3(M, F):
    d = det3(M, F)
    if F.is_zero(d):
        raise DependentLines("matrix is singular")
    di = F.inv(d)
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != i]
            c = [y for y in range(3) if y != j]
            minor = F.sub(F.mul(M[r[0]][c[0]], M[r[1]][c[1]]), F.mul(M[r[0]][c[1]], M[r[1]][c[0]]))
            if (i + j) % 2:
                minor = F.neg(minor)
            cof[i][j] = minor
    # inverse = adjugate / det, adjugate = cofactor transposed
    return [[F.mul(cof[j][i], di) for j in range(3)] for i in range(3)]


def matmul3(A, B, F):
    return [[_dot([A[i][k] for k in range(3)], [B[k][j] for k in range(3)], F) for j in range(3)]
            for i in range(3)]


def _dot(a, b, F):
    acc = F.zero
    for x, y in zip(a, b):
        acc = F.add(acc, F.mul(x, y))
    return acc


def apply3(M, x, F):
    return tuple(_dot(M[i], x, F) for i in range(3))


class LinearTriple:
    """Three linearly independent linear forms in u, v, w."""

    def __init__(self, l1, l2, l3):
        self.lines = (l1, l2, l3)
        F = l1.field
        for l in self.lines:
            if l.field != F or not l.is_homogeneous() or l.degree() != 1:
                raise PolyError("LinearTriple needs linear forms over one field")
        self.field = F
        self.matrix = [[l.terms.get(e, F.zero) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
                       for l in self.lines]
        if F.is_zero(det3(self.matrix, F)):
            raise DependentLines("lines are linearly dependent")

    def inverse(self):
        return inverse3(self.matrix, self.field)

    def __iter__(self):
        return iter(self.lines)


def kummer_order2_pullback(f, lines):
    """f o B(u^2, v^2, w^2) where B inverts p -> (l1(p), l2(p), l3(p)).

    In the new coordinates the i-th line pulls back to the square of the
    i-th coordinate.
    """
    if not isinstance(lines, LinearTriple):
        lines = LinearTriple(*lines)
    if not f.is_homogeneous():
        raise NotHomogeneous("pullback needs a homogeneous polynomial")
    F = f.field
    B = lines.inverse()
    sq = [{(2, 0, 0): F.one}, {(0, 2, 0): F.one}, {(0, 0, 2): F.one}]
    images = []
    for i in range(3):
        t = {}
        for j in range(3):
            if not F.is_zero(B[i][j]):
                (e, c), = sq[j].items()
                t[e] = B[i][j]
        images.append(Poly(F, t))
    return f.substitute(images)


def kummer_map_images(lines):
    """Quadrics (q_u, q_v, q_w) with f o kappa = f(q_u, q_v, q_w)."""
    if not isinstance(lines, LinearTriple):
        lines = LinearTriple(*lines)
    F = lines.field
    B = lines.inverse()
    sq = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
    return [Poly(F, {sq[j]: B[i][j] for j in range(3)}) for i in range(3)]


def random_form(field, d, rng, nvars=3):
    return Poly(field, {e: field.random(rng) for e in monomials(d, nvars)}, nvars)


def base_change(f, d, seed=None, forms=None):
    """f(k1, k2, k3) for three pseudorandom degree-d forms drawn from seed.

    With d = 1 and seed None the identity map is used.
    """
    if d < 1:
        raise PolyError("base change degree must be at least 1")
    F = f.field
    if forms is None:
        if seed is None:
            if d != 1:
                raise PolyError("a seed is needed for d > 1")
            return f
        rng = random.Random(seed)
        forms = [random_form(F, d, rng) for _ in range(3)]
    return f.substitute(list(forms))


def random_linear_change(field, rng):
    """A random invertible 3x3 matrix of raws."""
    while True:
        M = [[field.random(rng) for _ in range(3)] for _ in range(3)]
        if not field.is_zero(det3(M, field)):
            return M
