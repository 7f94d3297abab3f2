"""Exact coefficient fields: F_p, simple extensions F_p[t]/(m) and Q[t]/(m), and Q.

Elements are handled in two layers.  A :class:`FieldSpec` knows how to do
arithmetic on *raw* values (``int`` for F_p, ``Fraction`` for Q, a tuple of
base raws of fixed length for extensions).  The polynomial and Groebner code
works on raw values directly for speed.  :class:`FieldElem` wraps a raw value
with operator overloading for user-facing code and tests.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
import math
import random
import re

from . import upoly


class FieldError(ValueError):
    pass


class CompositeCharacteristic(FieldError):
    pass


class ReducibleModulus(FieldError):
    def __init__(self, msg, factor=None):
        super().__init__(msg)
        self.factor = factor


class NoSuchRoot(FieldError):
    pass


class NonResidue(FieldError):
    pass


MAX_CHAR = 2 ** 31

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Description of a coefficient field.

    kind is one of "prime", "extension", "rationals".  For extensions the
    modulus is a monic tuple of base-field raws (low degree first).
    """

    kind: str
    characteristic: int
    modulus: tuple = None
    name: str = dc_field(default=None, compare=False, hash=False)

    # -- structure -----------------------------------------------------------

    @cached_property
    def base(self):
        if self.kind != "extension":
            return self
        if self.characteristic == 0:
            return QQ
        return FieldSpec("prime", self.characteristic)

    @cached_property
    def degree(self):
        return len(self.modulus) - 1 if self.kind == "extension" else 1

    @cached_property
    def size(self):
        if self.characteristic == 0:
            return None
        return self.characteristic ** self.degree

    @property
    def is_finite(self):
        return self.characteristic != 0

    @cached_property
    def zero(self):
        if self.kind == "prime":
            return 0
        if self.kind == "rationals":
            return Fraction(0)
        return (self.base.zero,) * self.degree

    @cached_property
    def one(self):
        if self.kind == "prime":
            return 1
        if self.kind == "rationals":
            return Fraction(1)
        return (self.base.one,) + (self.base.zero,) * (self.degree - 1)

    @cached_property
    def gen(self):
        """The class of t for extensions."""
        if self.kind != "extension":
            raise FieldError("only extensions have a generator t")
        return self.reduce_poly([self.base.zero, self.base.one])

    # -- raw arithmetic ------------------------------------------------------

    def add(self, a, b):
        k = self.kind
        if k == "prime":
            return (a + b) % self.characteristic
        if k == "rationals":
            return a + b
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        k = self.kind
        if k == "prime":
            return (a - b) % self.characteristic
        if k == "rationals":
            return a - b
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        k = self.kind
        if k == "prime":
            return -a % self.characteristic
        if k == "rationals":
            return -a
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul(self, a, b):
        k = self.kind
        if k == "prime":
            return a * b % self.characteristic
        if k == "rationals":
            return a * b
        if self.characteristic:
            p = self.characteristic
            n = self.degree
            prod = [0] * (2 * n - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        prod[i + j] += x * y
            m = self.modulus
            for i in range(2 * n - 2, n - 1, -1):
                c = prod[i] % p
                if c:
                    for j in range(n):
                        prod[i - n + j] -= c * m[j]
            return tuple(c % p for c in prod[:n])
        return self.reduce_poly(upoly.mul(list(a), list(b), self.base))

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        k = self.kind
        if k == "prime":
            return pow(a, -1, self.characteristic)
        if k == "rationals":
            return 1 / a
        B = self.base
        g, s, _ = upoly.xgcd(upoly.trim(list(a), B), list(self.modulus), B)
        # modulus is irreducible so the gcd is 1
        return self.reduce_poly(s)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        if self.kind == "prime":
            return pow(a, n, self.characteristic)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def is_zero(self, a):
        if self.kind == "extension":
            return not any(a)
        return not a

    def from_int(self, n):
        if self.kind == "prime":
            return n % self.characteristic
        if self.kind == "rationals":
            return Fraction(n)
        return (self.base.from_int(n),) + (self.base.zero,) * (self.degree - 1)

    def from_fraction(self, q):
        q = Fraction(q)
        return self.div(self.from_int(q.numerator), self.from_int(q.denominator))

    def embed(self, a):
        """Map a raw element of the base field into this field."""
        if self.kind != "extension":
            return a
        return (a,) + (self.base.zero,) * (self.degree - 1)

    def reduce_poly(self, coeffs):
        """Raw element of an extension from a list of base coefficients."""
        B = self.base
        r = upoly.mod(upoly.trim(list(coeffs), B), list(self.modulus), B)
        return tuple(r) + (B.zero,) * (self.degree - len(r))

    def random(self, rng):
        k = self.kind
        if k == "prime":
            return rng.randrange(self.characteristic)
        if k == "rationals":
            return Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        return tuple(self.base.random(rng) for _ in range(self.degree))

    def random_nonzero(self, rng):
        while True:
            a = self.random(rng)
            if not self.is_zero(a):
                return a

    def sort_key(self, a):
        """Total order on raws: integers for F_p, highest coefficient first for extensions."""
        if self.kind == "extension":
            return tuple(self.base.sort_key(c) for c in reversed(a))
        return a

    def elements(self):
        """Iterate over all elements of a finite field in sort_key order."""
        if not self.is_finite:
            raise FieldError("infinite field")
        if self.kind == "prime":
            return iter(range(self.characteristic))
        import itertools
        p = self.characteristic
        return (tuple(reversed(c)) for c in itertools.product(range(p), repeat=self.degree))

    def __call__(self, value):
        return FieldElem(self, self.coerce(value))

    def coerce(self, value):
        if isinstance(value, FieldElem):
            if value.spec == self:
                return value.raw
            if value.spec == self.base:
                return self.embed(value.raw)
            raise FieldError("element of %s used in %s" % (value.spec, self))
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        if isinstance(value, (tuple, list)) and self.kind == "extension":
            return self.reduce_poly([self.base.coerce(c) for c in value])
        if isinstance(value, str):
            return self.parse_elem(value)
        raise TypeError("cannot coerce %r into %s" % (value, self))

    # -- text -----------------------------------------------------------------

    def format_elem(self, a):
        k = self.kind
        if k == "prime":
            return str(a)
        if k == "rationals":
            return str(a)
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if self.base.is_zero(c):
                continue
            cs = self.base.format_elem(c)
            if i == 0:
                terms.append(cs)
                continue
            mono = "t" if i == 1 else "t^%d" % i
            if cs == "1":
                terms.append(mono)
            else:
                terms.append("%s*%s" % (cs, mono))
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")

    def parse_elem(self, text):
        """Parse an integer, a fraction or (for extensions) a polynomial in t."""
        text = text.strip()
        if self.kind != "extension":
            if "t" in text:
                raise FieldError("t is only meaningful in an extension field")
            return self.from_fraction(Fraction(text.replace(" ", "")))
        coeffs = parse_univariate(text, "t")
        return self.reduce_poly([self.base.from_fraction(c) for c in coeffs])

    def __str__(self):
        if self.name:
            return self.name
        if self.kind == "prime":
            return "F%d" % self.characteristic
        if self.kind == "rationals":
            return "Q"
        base = "Q" if self.characteristic == 0 else "F%d" % self.characteristic
        return "%s[t]/%s" % (base, _format_univariate(self.modulus, self.base))

    def __repr__(self):
        return "FieldSpec(%s)" % self


QQ = FieldSpec("rationals", 0)


def _format_univariate(coeffs, F):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if F.is_zero(c):
            continue
        cs = F.format_elem(c)
        mono = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        else:
            terms.append(cs + "*" + mono)
    return "+".join(terms).replace("+-", "-") if terms else "0"


_UNI_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(?:(t)(?:\^(\d+))?)?")


def parse_univariate(text, var="t"):
    """Parse e.g. "t^2+1" or "3*t - 1/2" into Fraction coefficients, low degree first."""
    s = text.replace(" ", "")
    if not s:
        raise FieldError("empty polynomial")
    pos = 0
    coeffs = {}
    while pos < len(s):
        m = _UNI_TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise FieldError("cannot parse %r at position %d" % (text, pos))
        sign, num, has_t, exp = m.groups()
        if pos > 0 and not sign:
            raise FieldError("missing operator in %r at position %d" % (text, pos))
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if has_t else 0
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
    n = max(coeffs) + 1
    return [coeffs.get(i, Fraction(0)) for i in range(n)]


def make_field(kind, p=0, modulus=None):
    """Construct and validate a field.

    kind: "prime", "extension" or "rationals" (aliases "prime-field", "Q").
    For extensions the modulus is a sequence of coefficients (low degree
    first) or a string in t; it must be monic and irreducible.
    """
    kind = {"prime-field": "prime", "Q": "rationals", "rational": "rationals"}.get(kind, kind)
    if kind == "rationals":
        return QQ
    if kind not in ("prime", "extension"):
        raise FieldError("unknown field kind %r" % kind)
    if p != 0:
        if p >= MAX_CHAR:
            raise FieldError("characteristic must be below 2^31")
        if not is_prime(p):
            raise CompositeCharacteristic("%d is not prime" % p)
    elif kind == "prime":
        raise CompositeCharacteristic("a prime field needs a prime characteristic")
    if kind == "prime":
        return FieldSpec("prime", p)
    if modulus is None:
        raise FieldError("an extension needs a modulus")
    base = FieldSpec("prime", p) if p else QQ
    if isinstance(modulus, str):
        modulus = parse_univariate(modulus)
    m = upoly.trim([base.coerce(c) for c in modulus], base)
    if len(m) < 2:
        raise ReducibleModulus("modulus must have degree at least 1")
    if m[-1] != base.one:
        raise FieldError("modulus must be monic")
    if len(m) == 2:
        # a degree-one extension is the base field in disguise; allowed
        pass
    elif p:
        ok, fac = upoly.is_irreducible(m, base)
        if not ok:
            raise ReducibleModulus("modulus is reducible over F_%d" % p, factor=fac)
    else:
        ok, fac = _irreducible_over_q(m)
        if not ok:
            raise ReducibleModulus("modulus is reducible over Q", factor=fac)
    return FieldSpec("extension", p, tuple(m))


def _irreducible_over_q(m):
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(m))
    _, facs = sympy.factor_list(expr, t)
    if len(facs) == 1 and facs[0][1] == 1:
        return True, None
    fac = sympy.Poly(facs[0][0], t).monic().all_coeffs()[::-1]
    return False, [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in fac]


def parse_field(text):
    """Parse "Q", "F457", "F3[t]/t^2+1" or "Q[t]/t^2+3"."""
    s = text.strip().replace(" ", "")
    if s == "Q":
        return QQ
    m = re.fullmatch(r"(?:F(\d+)|Q)\[t\]/\(?([^()]+)\)?", s)
    if m:
        p = int(m.group(1)) if m.group(1) else 0
        return make_field("extension", p, m.group(2))
    m = re.fullmatch(r"F(\d+)", s)
    if m:
        return make_field("prime", int(m.group(1)))
    raise FieldError("cannot parse field %r" % text)


def _prime_factors(n):
    return upoly._prime_factors(n)


def find_primitive_nth_root(F, n, seed=0):
    """A primitive n-th root of unity in F.

    Candidates are drawn from a seeded stream; the answer is then normalized
    to the smallest (by sort_key) of its primitive powers, so it does not
    depend on the seed.
    """
    if n < 1:
        raise NoSuchRoot("n must be positive")
    one = F.one
    if not F.is_finite:
        if n == 1:
            return FieldElem(F, one)
        if n == 2:
            return FieldElem(F, F.neg(one))
        raise NoSuchRoot("root search over characteristic 0 supports n <= 2 only")
    q = F.size
    if (q - 1) % n:
        raise NoSuchRoot("%d does not divide %d" % (n, q - 1))
    primes = _prime_factors(n)
    rng = random.Random(seed)
    e = (q - 1) // n

    def primitive(z):
        return F.pow(z, n) == one and all(F.pow(z, n // ell) != one for ell in primes)

    z = None
    for _ in range(10000):
        cand = F.pow(F.random_nonzero(rng), e)
        if primitive(cand):
            z = cand
            break
    if z is None:
        raise NoSuchRoot("search failed")
    best = min((F.pow(z, k) for k in range(1, n + 1) if math.gcd(k, n) == 1), key=F.sort_key)
    return FieldElem(F, best)


def _tonelli_shanks(F, a):
    """Square root in a finite field of odd size; None if a is a non-residue."""
    if F.is_zero(a):
        return F.zero
    q = F.size
    one = F.one
    if F.pow(a, (q - 1) // 2) != one:
        return None
    s, Q = 0, q - 1
    while Q % 2 == 0:
        Q //= 2
        s += 1
    rng = random.Random(1)
    minus_one = F.neg(one)
    if F.kind == "prime":
        z = 2
        while F.pow(z, (q - 1) // 2) != minus_one:
            z += 1
    else:
        z = F.random_nonzero(rng)
        while F.pow(z, (q - 1) // 2) != minus_one:
            z = F.random_nonzero(rng)
    m, c = s, F.pow(z, Q)
    t, r = F.pow(a, Q), F.pow(a, (Q + 1) // 2)
    while t != one:
        i, t2 = 0, t
        while t2 != one:
            t2 = F.mul(t2, t2)
            i += 1
        b = c
        for _ in range(m - i - 1):
            b = F.mul(b, b)
        m, c = i, F.mul(b, b)
        t, r = F.mul(t, c), F.mul(r, b)
    return r


def sqrt_of(F, a):
    """Square root of a in F, choosing the root with the smaller sort_key."""
    a = F.coerce(a)
    if F.kind == "rationals":
        if a < 0:
            raise NonResidue("%s has no rational square root" % a)
        n, d = math.isqrt(a.numerator), math.isqrt(a.denominator)
        if n * n != a.numerator or d * d != a.denominator:
            raise NonResidue("%s is not a rational square" % a)
        return FieldElem(F, Fraction(n, d))
    if not F.is_finite:
        raise NotImplementedError("square roots in number fields are not supported")
    if F.characteristic == 2:
        return FieldElem(F, F.pow(a, F.size // 2))
    r = _tonelli_shanks(F, a)
    if r is None:
        raise NonResidue("%s is not a square in %s" % (F.format_elem(a), F))
    return FieldElem(F, min(r, F.neg(r), key=F.sort_key))


@dataclass(frozen=True)
class FieldElem:
    spec: FieldSpec
    raw: object

    def _other(self, o):
        if isinstance(o, FieldElem):
            if o.spec != self.spec:
                return self.spec.coerce(o)
            return o.raw
        return self.spec.coerce(o)

    def __add__(self, o):
        return FieldElem(self.spec, self.spec.add(self.raw, self._other(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElem(self.spec, self.spec.sub(self.raw, self._other(o)))

    def __rsub__(self, o):
        return FieldElem(self.spec, self.spec.sub(self._other(o), self.raw))

    def __mul__(self, o):
        return FieldElem(self.spec, self.spec.mul(self.raw, self._other(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElem(self.spec, self.spec.div(self.raw, self._other(o)))

    def __rtruediv__(self, o):
        return FieldElem(self.spec, self.spec.div(self._other(o), self.raw))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.raw))

    def __pow__(self, n):
        return FieldElem(self.spec, self.spec.pow(self.raw, n))

    def inverse(self):
        return FieldElem(self.spec, self.spec.inv(self.raw))

    def is_zero(self):
        return self.spec.is_zero(self.raw)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, o):
        if isinstance(o, FieldElem):
            return self.spec == o.spec and self.raw == o.raw
        try:
            return self.raw == self.spec.coerce(o)
        except (TypeError, FieldError):
            return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.raw))

    def __int__(self):
        if self.spec.kind == "prime":
            return self.raw
        if self.spec.kind == "rationals" and self.raw.denominator == 1:
            return int(self.raw)
        raise TypeError("not an integer-valued element")

    def __str__(self):
        return self.spec.format_elem(self.raw)

    def __repr__(self):
        return "FieldElem(%s, %s)" % (self.spec, self)
