"""Executable constructions of the cuspidal sextics and the three degree-12 curves."""

from dataclasses import dataclass, field
from itertools import permutations
import random

import numpy as np

from . import linalg, upoly
from .alexander import alexander_degree
from .fields import NoSuchRoot, find_primitive_nth_root, make_field, sqrt_of
from .groebner import IdealBasis
from .mordell import TORUS, QtrTriple, torus_family
from .poly import (LinearTriple, Poly, kummer_map_images,
                   kummer_order2_pullback, parse, random_form)
from .resolution import betti_table, minimal_generators, scheme_length
from .singular import ProjPoint, assert_only_cusps, restrict_to_line, singular_locus


class ZooError(ValueError):
    pass


class NoSixthRoot(ZooError):
    pass


class NonGenericLine(ZooError):
    pass


class NonTransverseLines(ZooError):
    pass


DEFAULT_PRIME = 457

C120BAR_TEXT = (
    "409u^8v^2w^2+32u^6v^2w^4+203u^6v^4w^2+263u^4v^2w^6+224u^4v^6w^2+"
    "290u^4v^4w^4+85u^12+160w^12+317u^2w^6v^4+220u^2w^2v^8+436u^10v^2+"
    "276u^8v^4+399u^6v^6+82u^10w^2+352u^4w^8+318u^8w^4+198u^6w^6+"
    "31u^2w^10+210u^2w^8v^2+451u^2w^4v^6+121w^4v^8+306w^8v^4+291w^6v^6+"
    "31w^10v^2+208u^2v^10+103u^4v^8+148v^12+325v^10w^2"
)


def default_field(p=DEFAULT_PRIME):
    return make_field("prime", p)


@dataclass(frozen=True)
class Constants:
    """Roots of unity realized in F: zeta12, zeta6 = zeta12^2, omega = zeta12^4, i = zeta12^3, eta^2 = -3."""

    zeta12: int
    zeta6: int
    omega: int
    i: int
    eta: int
    gamma: int      # gamma^2 = -omega


def constants(F):
    try:
        z = find_primitive_nth_root(F, 12).raw
    except NoSuchRoot:
        raise NoSixthRoot("%s has no primitive 12th root of unity (need p = 1 mod 12)" % F)
    omega = F.pow(z, 4)
    i = F.pow(z, 3)
    eta = sqrt_of(F, F.from_int(-3)).raw
    gamma = F.mul(i, F.add(omega, F.one))
    return Constants(z, F.pow(z, 2), omega, i, eta, gamma)


def _lin(F, a, b, c):
    return Poly.linear(F, [a, b, c])


# -- Fermat cubic flexes ---------------------------------------------------------


@dataclass
class FermatData:
    field: object
    xi: int                  # cube root of unity used in the flex table
    cubic: Poly
    points: list             # points[i][j] raw triples
    lines: list              # lines[i][j] linear forms
    centers: list            # concurrency point of row i
    checks: dict = field(default_factory=dict)


def _proportional(P, Q, F):
    return all(F.is_zero(F.sub(F.mul(P[i], Q[j]), F.mul(P[j], Q[i]))) for i in range(3) for j in range(3))


def _triple_contact(f, P, line):
    """f restricted to the line is c * s^3 with c != 0 in a parameter s vanishing at P."""
    F = f.field
    Q1, Q2 = line_points(line)
    for Q in (Q1, Q2, [F.add(x, y) for x, y in zip(Q1, Q2)]):
        if _proportional(P, Q, F):
            continue
        r = restrict_to_line(f, P, Q)
        if upoly.degree(r) == 3:
            return all(F.is_zero(x) for x in r[:3])
    return False


def _flex_table(F, xi):
    one, zero, m1 = F.one, F.zero, F.neg(F.one)
    pw = [one, xi, F.mul(xi, xi)]
    points = [[(x, zero, m1) for x in pw], [(x, m1, zero) for x in pw], [(zero, x, m1) for x in pw]]
    lines = [[_lin(F, 1, 0, x) for x in pw], [_lin(F, 1, x, 0) for x in pw], [_lin(F, 0, 1, x) for x in pw]]
    centers = [(zero, one, zero), (zero, zero, one), (one, zero, zero)]
    return points, lines, centers


def build_fermat_data(F, xi=None):
    """Flexes p_ij and tangents t_ij of u^3 + v^3 + w^3, rows of tangents concurrent.

    xi is a primitive cube root of unity (by default the square of the
    canonical primitive sixth root).
    """
    if not F.is_finite or (F.size - 1) % 6:
        raise NoSixthRoot("%s has no primitive sixth root of unity" % F)
    if xi is None:
        zeta6 = find_primitive_nth_root(F, 6).raw
        xi = F.mul(zeta6, zeta6)
    cubic = parse("u^3+v^3+w^3", F)
    points, lines, centers = _flex_table(F, xi)
    on_cubic = all(F.is_zero(cubic.evaluate_raw(P)) for row in points for P in row)
    on_line = all(F.is_zero(lines[i][j].evaluate_raw(points[i][j])) for i in range(3) for j in range(3))
    tangent = all(_triple_contact(cubic, points[i][j], lines[i][j]) for i in range(3) for j in range(3))
    concurrent = all(F.is_zero(l.evaluate_raw(centers[i])) for i in range(3) for l in lines[i])
    checks = {"points_on_cubic": on_cubic, "points_on_lines": on_line,
              "triple_contact": tangent, "rows_concurrent": concurrent}
    return FermatData(F, xi, cubic, points, lines, centers, checks)


# -- recipes -----------------------------------------------------------------------


@dataclass
class CurveRecipe:
    name: str
    field: object
    curve: Poly
    params: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)


def display_C66(F, xi):
    """The explicit sextic written in terms of a root of unity xi."""
    x2 = F.mul(xi, xi)
    c = lambda a, b: F.add(F.mul(F.from_int(a), x2), F.from_int(b))
    terms = {
        (6, 0, 0): F.one, (4, 2, 0): F.from_int(3), (2, 4, 0): F.from_int(-3), (0, 6, 0): F.one,
        (4, 0, 2): F.neg(c(3, -3)), (2, 2, 2): F.neg(c(12, 6)), (0, 4, 2): F.neg(c(3, 6)),
        (2, 0, 4): c(9, 0), (0, 2, 4): c(9, 9), (0, 0, 6): F.neg(c(6, -3)),
    }
    return Poly(F, terms)


def _discrete_log_table(F):
    g = find_primitive_nth_root(F, F.size - 1).raw
    table = {}
    x = F.one
    for k in range(F.size - 1):
        table[x] = k
        x = F.mul(x, g)
    return g, table


def match_up_to_scaling(f, g):
    """Search for a permutation and diagonal scaling with f(s_u u, s_v v, s_w w) o perm = lam * g.

    Exhaustive over F_p: with discrete logs the condition is linear, so for
    each permutation the scalings of u and v (relative to w) are enumerated
    on a grid and the overall factor read off.  Returns a dict with the match
    (or None) and the fewest mismatched monomials seen.
    """
    F = f.field
    if F.kind != "prime":
        raise ZooError("scaling search needs a prime field")
    q = F.size - 1
    gen, log = _discrete_log_table(F)
    best = {"found": False, "min_mismatch": None, "perm": None, "scales": None, "factor": None}
    A = np.arange(q, dtype=np.int64)
    for perm in permutations(range(3)):
        fp = Poly(F, {tuple(e[perm[i]] for i in range(3)): c for e, c in f.terms.items()})
        common = sorted(set(fp.terms) & set(g.terms))
        extra = len(set(fp.terms) ^ set(g.terms))
        if not common:
            continue
        r = np.array([log[F.div(g.terms[m], fp.terms[m])] for m in common], dtype=np.int64)
        eu = np.array([m[0] for m in common], dtype=np.int64)
        ev = np.array([m[1] for m in common], dtype=np.int64)
        R = (r[None, None, :] - A[:, None, None] * eu[None, None, :]
             - A[None, :, None] * ev[None, None, :]) % q
        agree = np.zeros(R.shape[:2], dtype=np.int64)
        for j in range(len(common)):
            agree = np.maximum(agree, (R == R[:, :, j:j + 1]).sum(axis=2))
        a_best, b_best = np.unravel_index(np.argmax(agree), agree.shape)
        mism = extra + len(common) - int(agree[a_best, b_best])
        if best["min_mismatch"] is None or mism < best["min_mismatch"]:
            best["min_mismatch"] = mism
        if mism == 0:
            su, sv = F.pow(gen, int(a_best)), F.pow(gen, int(b_best))
            lam_log = int(R[a_best, b_best, 0])
            lam = F.pow(gen, lam_log)
            h = fp.linear_change([[su, 0, 0], [0, sv, 0], [0, 0, 1]]).scale_raw(lam)
            if h == g:
                best.update(found=True, perm=perm, scales=(su, sv, F.one), factor=lam)
                return best
    return best


def _coeffs(line):
    F = line.field
    return [line.terms.get(e, F.zero) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]


def line_points(line):
    """Two raw points spanning the line."""
    F = line.field
    c = _coeffs(line)
    return linalg.nullspace([c], F)


def line_intersection(l1, l2):
    F = l1.field
    rows = [_coeffs(l) for l in (l1, l2)]
    N = linalg.nullspace(rows, F)
    if len(N) != 1:
        raise ZooError("lines coincide")
    return tuple(N[0])


def intersection_multiplicities(f, line):
    """Multiplicities of the points of f = 0 on the line, with residue degrees.

    Returns a sorted list of (residue_degree, multiplicity) pairs, one per
    closed point of the intersection.
    """
    F = f.field
    P, Q = line_points(line)
    r = restrict_to_line(f, P, Q)
    if not r:
        raise ZooError("line is a component of the curve")
    out = []
    at_inf = f.degree() - upoly.degree(r)
    if at_inf:
        out.append((1, at_inf))
    if upoly.degree(r) > 0:
        for fac, mult in upoly.factor(r, F, random.Random(0)):
            out.append((upoly.degree(fac), mult))
    return sorted(out)


def restriction_squarefree(f, line):
    """The line meets the curve in deg f distinct points."""
    P, Q = line_points(line)
    r = restrict_to_line(f, P, Q)
    if not r:
        return False
    if upoly.degree(r) < f.degree() - 1:
        return False
    return all(m == 1 for _, m in intersection_multiplicities(f, line))


def no_cusp_on(ideal, line):
    """No point of the projective scheme lies on the line: ideal + line is irrelevant-primary."""
    J = IdealBasis(list(ideal.gb()) + [line], "grevlex", ideal.field, 3)
    return J.krull_dim() <= 0


def build_C66(F=None):
    """Kummer pullback of the Fermat cubic along t11, t12, t21."""
    F = F or default_field()
    K = constants(F)
    xi = K.omega
    fd = build_fermat_data(F, xi)
    t11, t12, t13 = fd.lines[0]
    t21 = fd.lines[1][0]
    lines = LinearTriple(t11, t12, t21)
    f = kummer_order2_pullback(fd.cubic, lines)
    images = kummer_map_images(lines)
    # t13 pulls back to -omega * (u + gamma v)(u - gamma v)
    l1 = _lin(F, 1, K.gamma, 0)
    l2 = _lin(F, 1, F.neg(K.gamma), 0)
    t13_back = t13.substitute(images)
    split_ok = t13_back == (l1 * l2).scale_raw(F.neg(xi))
    q = images[1]
    u, v, w = Poly.gens(F)
    torus_ok = f == (u * u * v * v * l1 * l2).scale_raw(F.neg(xi)) + q ** 3
    rec = CurveRecipe("C66", F, f, {"lines": "t11, t12, t21", "xi": xi},
                      {"degree": 6, "cusps": 6},
                      {"fermat": fd, "l1": l1, "l2": l2, "q": q, "kummer_images": images,
                       "kummer_lines": lines, "t13_splits": split_ok, "torus_identity": torus_ok,
                       "constants": K})
    return rec


def c66_display_comparison(rec):
    """Try every root of unity the display could mean, with permutations and scalings."""
    F = rec.field
    z = constants(F).zeta12
    results = []
    for k in (2, 4, 8, 10):      # primitive sixth and cube roots
        xi = F.pow(z, k)
        res = match_up_to_scaling(rec.curve, display_C66(F, xi))
        res["xi"] = xi
        res["xi_order"] = 6 if k in (2, 10) else 3
        results.append(res)
        if res["found"]:
            break
    found = any(r["found"] for r in results)
    return {"found": found, "attempts": results,
            "min_mismatch": min(r["min_mismatch"] for r in results if r["min_mismatch"] is not None)}


def cusp_images_are_flexes(rec, points):
    """Each cusp of C66 maps under the cover to one of p11, p12, p21."""
    fd = rec.extras["fermat"]
    targets = [fd.points[0][0], fd.points[0][1], fd.points[1][0]]
    images = rec.extras["kummer_images"]
    hit = set()
    for P in points:
        Kf = P.field
        img = ProjPoint.normalized(Kf, [g.change_field(Kf).evaluate_raw(P.coords) if Kf != g.field
                                        else g.evaluate_raw(P.coords) for g in images])
        match = None
        for idx, T in enumerate(targets):
            if img == ProjPoint.normalized(Kf, [Kf.embed(c) for c in T]):
                match = idx
        if match is None:
            return False, hit
        hit.add(match)
    return hit == {0, 1, 2}, hit


def build_C120bar(corrupt=False):
    """The stored degree-12 equation over F_457; corrupt=True perturbs one coefficient."""
    F = make_field("prime", DEFAULT_PRIME)
    f = parse(C120BAR_TEXT, F)
    if corrupt:
        f = f + Poly.monomial(F, (12, 0, 0), 1)
    return CurveRecipe("C120bar", F, f, {"corrupt": corrupt},
                       {"degree": 12, "cusps": 32, "gen_degrees": [8, 7, 7, 7, 7],
                        "syz_degrees": [9, 9, 9, 9], "alexander": 0, "m": 0})


def build_C121(F=None, line3=None, c66=None):
    """Kummer pullback of C66 along the two bitangents and a third line (default 5u + w)."""
    F = F or default_field()
    c66 = c66 or build_C66(F)
    K = c66.extras["constants"]
    l1, l2 = c66.extras["l1"], c66.extras["l2"]
    line3 = line3 if line3 is not None else _lin(F, 5, 0, 1)
    f66 = c66.curve
    loc66 = c66.extras.get("locus") or singular_locus(f66)
    if not restriction_squarefree(f66, line3):
        raise NonGenericLine("third line is not transverse to C66")
    for l in (l1, l2):
        if F.is_zero(f66.evaluate_raw(line_intersection(line3, l))):
            raise NonGenericLine("third line meets C66 on a bitangent")
    if not no_cusp_on(loc66.ideal, line3):
        raise NonGenericLine("third line passes through a cusp")
    lines = LinearTriple(l1, l2, line3)
    f = kummer_order2_pullback(f66, lines)
    images = kummer_map_images(lines)
    x, y, z = Poly.gens(F)
    ut, vt = images[0], images[1]
    qt = c66.extras["q"].substitute(images)
    h1 = (ut * vt * x * y).scale_raw(K.gamma)
    one = Poly.const(F, 1)
    qtr = QtrTriple(h1, qt, one, f, TORUS)
    return CurveRecipe("C121", F, f, {"line3": str(line3)},
                       {"degree": 12, "cusps": 32, "gen_degrees": [8, 7, 7, 6],
                        "syz_degrees": [10, 9, 9], "alexander": 2, "m": 1},
                       {"qtr": qtr, "c66": c66, "kummer_lines": lines, "constants": K})


def build_C68sub(F=None, seed=None):
    """Torus-family sextic from (f1, f2, f3) = (u^2+v^2+w^2, u, v); a seed draws random inputs instead."""
    F = F or default_field()
    u, v, w = Poly.gens(F)
    if seed is None:
        f1, f2, f3 = u * u + v * v + w * w, u, v
    else:
        rng = random.Random(seed)
        f1, f2, f3 = random_form(F, 2, rng), random_form(F, 1, rng), random_form(F, 1, rng)
    fam = torus_family(1, f1, f2, f3, F)
    return CurveRecipe("C68sub", F, fam.f, {"f1": str(f1), "f2": str(f2), "f3": str(f3), "seed": seed},
                       {"degree": 6, "cusps": 8, "gen_degrees": [4, 3, 3], "syz_degrees": [5, 5],
                        "alexander": 4, "m": 2},
                       {"family": fam, "qtrs": fam.qtrs()},
                       ["slot reading (f1, f2, f3) = (u^2+v^2+w^2, u, v) chosen to fit the degree constraints"])


def transverse_lines(c68, seed, tries=50):
    F = c68.field
    f = c68.curve
    loc = c68.extras.get("locus") or singular_locus(f)
    rng = random.Random(seed)
    for _ in range(tries):
        ls = [_lin(F, F.random(rng), F.random(rng), F.random(rng)) for _ in range(3)]
        try:
            lines = LinearTriple(*ls)
        except Exception:
            continue
        if not all(restriction_squarefree(f, l) and no_cusp_on(loc.ideal, l) for l in ls):
            continue
        vertices = [line_intersection(ls[a], ls[b]) for a, b in ((0, 1), (0, 2), (1, 2))]
        if any(F.is_zero(f.evaluate_raw(P)) for P in vertices):
            continue
        return lines
    raise NonTransverseLines("no transverse triple of lines found; try another seed")


def build_C122(F=None, seed=0, c68=None):
    """Kummer pullback of the torus sextic along three seeded transverse lines."""
    F = F or default_field()
    c68 = c68 or build_C68sub(F)
    lines = transverse_lines(c68, seed)
    f = kummer_order2_pullback(c68.curve, lines)
    images = kummer_map_images(lines)
    one = Poly.const(F, 1)
    qtrs = [QtrTriple(t.h1.substitute(images), t.h2.substitute(images), one, f, TORUS)
            for t in c68.extras["qtrs"]]
    return CurveRecipe("C122", F, f, {"seed": seed, "lines": [str(l) for l in lines]},
                       {"degree": 12, "cusps": 32, "gen_degrees": [8, 6, 6], "syz_degrees": [10, 10],
                        "alexander": 4, "m": 2},
                       {"qtrs": qtrs, "c68": c68, "kummer_lines": lines})


# -- analysis --------------------------------------------------------------------


@dataclass
class CurveAnalysis:
    recipe: CurveRecipe
    locus: object
    points: list
    betti: object
    alexander: object
    min_gens: list


def analyze(rec, max_ext_degree=8, seed=0):
    """Certify cusps, resolve the cusp ideal and compute deg Delta by both routes."""
    f = rec.curve
    locus = rec.extras.get("locus") or singular_locus(f, seed)
    rec.extras["locus"] = locus
    assert_only_cusps(f, max_ext_degree, seed, locus=locus)
    points = [r.point for r in locus.reports]
    gens = minimal_generators(locus.ideal)
    B = betti_table(locus.ideal, gens=gens)
    alex = alexander_degree(locus, f.degree(), betti=B) if f.degree() % 6 == 0 else None
    return CurveAnalysis(rec, locus, points, B, alex, gens)


@dataclass
class JacobianCheck:
    m: int
    length: int
    quotient_dim_11: int
    codim_12: int
    gen_degrees: list
    syz_degrees: list

    def checks(self):
        s = self.syz_degrees
        all_degrees = list(self.gen_degrees) + list(s)
        return {
            "length_64": self.length == 64,
            "quotient_dim_11": self.quotient_dim_11 == 64 - self.m,
            "max_degree_14": max(all_degrees) <= 14,
            "none_at_13": 13 not in s,
            "m_at_14": s.count(14) == self.m,
            "codim_12": self.codim_12 == 64,
        }

    def ok(self):
        return all(self.checks().values())

    def as_dict(self):
        return {"m": self.m, "length": self.length, "quotient_dim_11": self.quotient_dim_11,
                "codim_12": self.codim_12, "gen_degrees": list(self.gen_degrees),
                "syz_degrees": list(self.syz_degrees), "checks": self.checks()}


def jacobian_syzygy_check(rec, m, locus=None):
    """Resolution and graded dimensions of the saturated Jacobian ideal of a degree-12 curve."""
    locus = locus or rec.extras.get("locus") or singular_locus(rec.curve)
    J = locus.jacobian_saturated
    B = betti_table(J)
    return JacobianCheck(m, scheme_length(J), J.quotient_dim(11), J.quotient_dim(12),
                         B.gen_degrees, B.syz_degrees)


RECIPES = {
    "C66": build_C66,
    "C120bar": build_C120bar,
    "C121": build_C121,
    "C68sub": build_C68sub,
    "C122": build_C122,
}
