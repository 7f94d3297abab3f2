"""Quasi-toric relations h1^2 + h2^3 = f h3^6, their unit twists, and torus-type families."""

from dataclasses import dataclass

from .fields import FieldError, NonResidue, sqrt_of
from .poly import Poly, graded_dim


class QtrError(ValueError):
    pass


class IdentityFails(QtrError):
    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


class DegreeMismatch(QtrError):
    pass


class NoEta(QtrError):
    pass


class ConventionUnavailable(QtrError):
    pass


TORUS = "torus-sign"
ZERO_SUM = "zero-sum"
_ALIASES = {"torus": TORUS, "torus-sign": TORUS, "zero-sum": ZERO_SUM}


def _convention(name):
    try:
        return _ALIASES[name]
    except KeyError:
        raise QtrError("unknown convention %r" % name)


@dataclass(frozen=True)
class QtrTriple:
    """(h1, h2, h3) for the curve f.

    torus-sign:  h1^2 + h2^3 = f h3^6
    zero-sum:    h1^2 + h2^3 + f h3^6 = 0
    """

    h1: Poly
    h2: Poly
    h3: Poly
    f: Poly
    convention: str = TORUS

    def __post_init__(self):
        object.__setattr__(self, "convention", _convention(self.convention))

    def residual(self):
        lhs = self.h1 * self.h1 + self.h2 ** 3
        rhs = self.f * self.h3 ** 6
        return lhs - rhs if self.convention == TORUS else lhs + rhs

    def degrees(self):
        return {"h1": self.h1.degree(), "h2": self.h2.degree(), "h3": self.h3.degree(),
                "f": self.f.degree()}

    def key(self):
        return (self.h1, self.h2, self.h3, self.convention)


@dataclass
class QtrCheck:
    valid: bool
    residual: Poly
    degrees: dict
    expected_degrees: dict = None
    message: str = ""

    def as_dict(self):
        return {"valid": self.valid, "residual_terms": len(self.residual),
                "degrees": self.degrees, "expected_degrees": self.expected_degrees,
                "message": self.message}


def check_qtr(t):
    """Non-raising version of verify_qtr."""
    degs = t.degrees()
    if not t.h3:
        return QtrCheck(False, Poly.zero(t.f.field), degs, None, "h3 is zero")
    if not t.f.is_homogeneous() or t.f.degree() % 6:
        return QtrCheck(False, Poly.zero(t.f.field), degs, None, "f must be homogeneous of degree 6k")
    r = t.residual()
    k = t.f.degree() // 6
    s = t.h3.degree()
    expected = {"h1": 3 * (k + s), "h2": 2 * (k + s), "h3": s}
    if r:
        return QtrCheck(False, r, degs, expected, "identity fails (%d residual terms)" % len(r))
    for name, h in (("h1", t.h1), ("h2", t.h2), ("h3", t.h3)):
        if h and (not h.is_homogeneous() or h.degree() != expected[name]):
            return QtrCheck(False, r, degs, expected, "degree of %s is not %d" % (name, expected[name]))
    return QtrCheck(True, r, degs, expected, "ok")


def verify_qtr(t):
    c = check_qtr(t)
    if c.valid:
        return c
    if c.residual:
        raise IdentityFails(c.message, c.residual)
    raise DegreeMismatch(c.message)


def convert(t, target):
    """Move a triple between sign conventions: h1 -> i h1, h2 -> -h2 (an involution up to h1 -> -h1)."""
    target = _convention(target)
    if target == t.convention:
        return t
    F = t.f.field
    try:
        i = sqrt_of(F, F.neg(F.one)).raw
    except (NonResidue, FieldError):
        raise ConventionUnavailable("%s has no square root of -1" % F)
    return QtrTriple(t.h1.scale_raw(i), -t.h2, t.h3, t.f, target)


def _check_primitive6(F, z):
    one = F.one
    if F.pow(z, 6) != one or F.pow(z, 2) == one or F.pow(z, 3) == one:
        raise QtrError("not a primitive sixth root of unity")


def xi_twist(t, zeta6, check=True):
    """(-h1, zeta6^2 h2, h3): the order-6 action of the sixth roots of unity."""
    F = t.f.field
    z = F.coerce(zeta6)
    _check_primitive6(F, z)
    out = QtrTriple(-t.h1, t.h2.scale_raw(F.mul(z, z)), t.h3, t.f, t.convention)
    if check:
        verify_qtr(out)
    return out


def twist_orbit(t, zeta6):
    """Orbit of t under repeated xi_twist; its length is the order of the action on t."""
    orbit = [t]
    cur = xi_twist(t, zeta6)
    while cur.key() != t.key():
        orbit.append(cur)
        cur = xi_twist(cur, zeta6)
        if len(orbit) > 12:
            raise QtrError("twist orbit does not close")
    return orbit


# -- torus-type family ---------------------------------------------------------------


@dataclass
class TorusFamily:
    k: int
    f1: Poly
    f2: Poly
    f3: Poly
    eta: object
    w1: Poly
    w2: Poly
    v1: Poly
    v2: Poly
    f: Poly

    def qtrs(self):
        """The two torus-sign relations (v_i, -w_i, 1)."""
        one = Poly.const(self.f.field, 1)
        return [QtrTriple(self.v1, -self.w1, one, self.f, TORUS),
                QtrTriple(self.v2, -self.w2, one, self.f, TORUS)]


def torus_family(k, f1, f2, f3, field=None, eta=None):
    """The sextic-type family f = v1^2 - w1^3 = v2^2 - w2^3 built from f1 in S_2k and f2, f3 in S_k."""
    F = field or f1.field
    if F.characteristic in (2, 3):
        raise NoEta("characteristic %d: 6 is not invertible" % F.characteristic)
    if eta is None:
        try:
            eta = sqrt_of(F, F.from_int(-3))
        except (NonResidue, FieldError):
            raise NoEta("-3 is not a square in %s" % F)
    eta = F.coerce(eta)
    if F.mul(eta, eta) != F.from_int(-3):
        raise NoEta("eta^2 != -3")
    for g, d, name in ((f1, 2 * k, "f1"), (f2, k, "f2"), (f3, k, "f3")):
        if not g.is_homogeneous() or g.degree() != d:
            raise DegreeMismatch("%s must be a form of degree %d" % (name, d))
    half = F.inv(F.from_int(2))
    e = eta
    he = F.mul(eta, half)
    f23 = f2 * f3
    w1 = f1 - f23
    w2 = f1 + f23
    a = (f23 * f3).scale_raw(half)
    b = (f1 * f2).scale_raw(e)
    c = f2 * f23
    d = (f1 * f3).scale_raw(he)
    v1 = a - b - c - d
    v2 = a + b + c - d
    f = v1 * v1 - w1 ** 3
    if f != v2 * v2 - w2 ** 3:
        raise IdentityFails("v1^2 - w1^3 != v2^2 - w2^3", f - (v2 * v2 - w2 ** 3))
    return TorusFamily(k, f1, f2, f3, eta, w1, w2, v1, v2, f)


# -- dimension counts ----------------------------------------------------------------


def dimension_audit(k, d, m_values=(0, 1, 2)):
    """Closed-form integer identities from the deformation count."""
    out = []

    def rec(name, lhs, rhs):
        out.append({"identity": name, "lhs": lhs, "rhs": rhs, "holds": lhs == rhs})

    a = graded_dim(2 * k) + 2 * graded_dim(k)
    rec("dimS_2k + 2 dimS_k = 3k^2+6k+3", a, 3 * k * k + 6 * k + 3)
    rec("3k^2+6k+3 = dimS_6k - 16k^2 + (k-1)(k-2)", 3 * k * k + 6 * k + 3,
        graded_dim(6 * k) - 16 * k * k + (k - 1) * (k - 2))
    rec("dimS_12d - dimS_4d - dimS_6d = 46d^2+3d-1",
        graded_dim(12 * d) - graded_dim(4 * d) - graded_dim(6 * d), 46 * d * d + 3 * d - 1)
    for m in m_values:
        rec("2*32d^2 - m(2d-1)(d-1) = 64d^2 - m(2d-1)(d-1) [m=%d]" % m,
            2 * 32 * d * d - m * (2 * d - 1) * (d - 1), 64 * d * d - m * (2 * d - 1) * (d - 1))
    return out
