"""Degree of the Alexander polynomial of a cuspidal curve of degree 6k.

The degree is twice the cokernel dimension of evaluation of degree-(5k-3)
forms at the cusps.  It is computed from the Groebner staircase of the cusp
ideal and, independently, from how many minimal syzygies sit in degree 5k.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import graded_dim
from .resolution import BettiTable, betti_table, hilbert_function


class AlexanderError(ValueError):
    pass


class RouteMismatch(AlexanderError):
    pass


class WrongDegreeForm(AlexanderError):
    pass


@dataclass
class AlexanderResult:
    k: int
    num_cusps: int
    dim_I_at_5k_minus_3: int
    degree_via_hilbert: int
    degree_via_betti: int
    betti: BettiTable = None
    assumptions: list = field(default_factory=lambda: ["curve irreducible (by construction)"])

    @property
    def m(self):
        return self.degree_via_hilbert // 2

    @property
    def degree(self):
        return self.degree_via_hilbert

    def as_dict(self):
        return {"k": self.k, "num_cusps": self.num_cusps,
                "dim_I_at_5k_minus_3": self.dim_I_at_5k_minus_3,
                "degree_via_hilbert": self.degree_via_hilbert,
                "degree_via_betti": self.degree_via_betti, "m": self.m,
                "betti": self.betti.as_dict() if self.betti else None,
                "assumptions": list(self.assumptions)}


def degree_from_hilbert(dim_I, k, num_cusps):
    """2 * dim coker(S_{5k-3} -> k^Sigma), given dim I_{5k-3}."""
    d = 5 * k - 3
    return 2 * (dim_I - (graded_dim(d) - num_cusps))


def degree_from_betti(B, k):
    return 2 * sum(1 for b in B.syz_degrees if b == 5 * k)


def alexander_degree(locus, curve_degree, betti=None):
    """Both routes to deg Delta for a certified cuspidal curve; they must agree."""
    if curve_degree % 6:
        raise WrongDegreeForm("degree %d is not a multiple of 6; the polynomial is trivial" % curve_degree)
    k = curve_degree // 6
    I = locus.ideal
    n = locus.count
    dim_I = hilbert_function(I, 5 * k - 3)
    B = betti if betti is not None else betti_table(I)
    via_h = degree_from_hilbert(dim_I, k, n)
    via_b = degree_from_betti(B, k)
    if via_h != via_b:
        raise RouteMismatch("staircase gives %d, syzygies give %d" % (via_h, via_b))
    return AlexanderResult(k, n, dim_I, via_h, via_b, B)


def cusps_on_conic(ideal):
    """True if some conic passes through every point of the scheme."""
    return hilbert_function(ideal, 2) > 0


# -- combinatorial candidates ------------------------------------------------------


def _admissible(B, k, n):
    a, b = B.gen_degrees, B.syz_degrees
    return (sum(a) == sum(b)
            and B.square_identity_value() == 2 * n
            and all(x <= 5 * k for x in b)
            and n <= 3 * k * min(a)
            and B.positionwise_ok())


def betti_candidates(k, num_cusps):
    """Every Hilbert-Burch degree pattern allowed for num_cusps cusps on a degree-6k curve.

    Sorted descending, a_i < b_i for i <= t, and sum(b - a) over the first t
    pairs is a_{t+1}; the square sums then decide.  Since each difference is
    at least one, t <= a_{t+1} < 5k, which makes the search finite.
    """
    n = num_cusps
    top = 5 * k
    amin = max(1, -(-n // (3 * k)))
    out = []

    # pairs (a_i, b_i) chosen in order with both sequences nonincreasing
    def rec(a, b, s1, s2):
        if a and s1 >= amin and s1 <= a[-1] and s2 - s1 * s1 == 2 * n:
            B = BettiTable(a + [s1], b)
            if _admissible(B, k, n):
                out.append(B)
        if s1 >= top - 1:
            return
        bmax = b[-1] if b else top
        for bi in range(bmax, amin, -1):
            amax = min(bi - 1, a[-1] if a else top - 1)
            for ai in range(amax, amin - 1, -1):
                if s1 + bi - ai > top - 1:
                    continue
                rec(a + [ai], b + [bi], s1 + bi - ai, s2 + bi * bi - ai * ai)

    rec([], [], 0, 0)
    uniq = sorted(set(out), key=lambda B: (B.t, B.key()))
    return uniq


def difference_counts(B, values):
    """For each j: #{b_i = j} - #{a_i = j}."""
    return {j: B.syz_degrees.count(j) - B.gen_degrees.count(j) for j in values}


def moment_equations(k, num_cusps):
    """Solve for D_j = #{b_i = j} - #{a_i = j} from the three moment identities.

    sum D_j = -1, sum j D_j = 0 and sum j^2 D_j = 2 #Sigma, with j running over
    the possible degrees ceil(#Sigma / 3k) .. 5k.  Only determined when that
    range has exactly three values; otherwise None.
    """
    amin = -(-num_cusps // (3 * k))
    js = list(range(amin, 5 * k + 1))
    if len(js) != 3:
        return None
    A = [[Fraction(1)] * 3, [Fraction(j) for j in js], [Fraction(j * j) for j in js]]
    rhs = [Fraction(-1), Fraction(0), Fraction(2 * num_cusps)]
    # Gaussian elimination on the 3x3 Vandermonde system
    M = [row + [r] for row, r in zip(A, rhs)]
    for c in range(3):
        piv = next(r for r in range(c, 3) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        M[c] = [x / M[c][c] for x in M[c]]
        for r in range(3):
            if r != c and M[r][c] != 0:
                M[r] = [x - M[r][c] * y for x, y in zip(M[r], M[c])]
    sol = {j: M[i][3] for i, j in enumerate(js)}
    if any(x.denominator != 1 for x in sol.values()):
        return {}
    return {j: int(x) for j, x in sol.items()}
