"""Acceptance criteria, one test each.  Every test builds its inputs from scratch and checks its time budget."""

import time

import pytest

from cuspidal_lab import zoo
from cuspidal_lab.alexander import betti_candidates, cusps_on_conic, difference_counts, moment_equations
from cuspidal_lab.mordell import dimension_audit, twist_orbit, verify_qtr
from cuspidal_lab.poly import graded_dim
from cuspidal_lab.replay import Context
from cuspidal_lab.resolution import betti_table, hilbert_function
from cuspidal_lab.singular import (assert_only_cusps, brute_force_singular_points, evaluation_rank,
                                   rational_points_of, singular_locus)

import test_fields
import test_groebner
import test_poly
import test_resolution
import test_singular

criterion = pytest.mark.criterion


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.seconds, "took %.1f s, budget %d s" % (self.elapsed, self.seconds)


@criterion(1, "stored degree-12 equation: 32 cusps, all A2, Tjurina total 64")
def test_c120bar_cusps():
    with Budget(60):
        rec = zoo.build_C120bar()
        locus = singular_locus(rec.curve)
        assert_only_cusps(rec.curve, locus=locus)
    assert locus.count == 32
    assert all(r.type == "A2" for r in locus.reports)
    assert locus.tjurina_total == 64


@criterion(2, "stored degree-12 equation: dim I_7 = 4, Betti table, Alexander degree 0 both ways")
def test_c120bar_ideal():
    with Budget(60):
        A = zoo.analyze(zoo.build_C120bar())
    assert hilbert_function(A.locus.ideal, 7) == 4
    assert A.betti.key() == ((8, 7, 7, 7, 7), (9, 9, 9, 9))
    assert A.alexander.degree_via_hilbert == A.alexander.degree_via_betti == 0


@criterion(3, "C121 from the Fermat pipeline: 32 cusps, Betti table, degree 2, QTR and twist orbit 6")
def test_c121():
    with Budget(120):
        ctx = Context()
        rec = ctx.recipe("C121")
        A = ctx.analysis("C121")
        check = verify_qtr(rec.extras["qtr"])
        orbit = twist_orbit(rec.extras["qtr"], zoo.constants(rec.field).zeta6)
    assert A.locus.count == 32
    assert A.betti.key() == ((8, 7, 7, 6), (10, 9, 9))
    assert A.alexander.degree_via_hilbert == A.alexander.degree_via_betti == 2
    assert check.valid and not check.residual
    assert len(orbit) == 6


@criterion(4, "C66 matches the displayed sextic up to scalar, 6 cusps, not on a conic")
def test_c66():
    with Budget(30):
        rec = zoo.build_C66()
        locus = assert_only_cusps(rec.curve)
        comparison = zoo.c66_display_comparison(rec)
    assert locus.count == 6
    assert hilbert_function(locus.ideal, 2) == 0 and not cusps_on_conic(locus.ideal)
    assert comparison["found"], "no match; fewest mismatched monomials %d" % comparison["min_mismatch"]


@criterion(5, "torus sextic: identities, 8 cusps, Betti table, the two candidates and their moments")
def test_c68sub():
    with Budget(30):
        rec = zoo.build_C68sub()
        A = zoo.analyze(rec)
        cands = betti_candidates(1, 8)
    fam = rec.extras["family"]
    assert fam.f == fam.v1 * fam.v1 - fam.w1 ** 3 == fam.v2 * fam.v2 - fam.w2 ** 3
    assert A.locus.count == 8
    assert A.betti.key() == ((4, 3, 3), (5, 5))
    assert sorted(B.key() for B in cands) == [((4, 3, 3), (5, 5)), ((4, 4, 3, 3), (5, 5, 4))]
    # D_5 = r = 2, D_4 = A_4 = -1, D_3 = A_3 = -2
    assert moment_equations(1, 8) == {3: -2, 4: -1, 5: 2}
    assert all(difference_counts(B, [3, 4, 5]) == {3: -2, 4: -1, 5: 2} for B in cands)


@criterion(6, "C122 from the torus sextic: 32 cusps, Betti table, degree 4, both QTRs")
def test_c122():
    with Budget(120):
        rec = zoo.build_C122(seed=0)
        A = zoo.analyze(rec)
        checks = [verify_qtr(t) for t in rec.extras["qtrs"]]
    assert A.locus.count == 32
    assert A.betti.key() == ((8, 6, 6), (10, 10))
    assert A.alexander.degree_via_hilbert == A.alexander.degree_via_betti == 4
    assert len(checks) == 2 and all(c.valid for c in checks)


@criterion(7, "the three degree-12 curves have Alexander degrees exactly {0, 2, 4}")
def test_zariski_triple():
    ctx = Context()
    degrees, combinatorics = [], set()
    for name in ("C120bar", "C121", "C122"):
        A = ctx.analysis(name)
        degrees.append(A.alexander.degree)
        combinatorics.add((A.recipe.curve.degree(), A.locus.count,
                           all(r.type == "A2" for r in A.locus.reports)))
    assert sorted(degrees) == [0, 2, 4]
    assert combinatorics == {(12, 32, True)}


@criterion(8, "saturated Jacobian ideals: length 64, dims at 11 and 12, syzygies at 13 and 14")
def test_jacobian():
    with Budget(300):
        ctx = Context()
        results = {name: zoo.jacobian_syzygy_check(ctx.recipe(name), m, ctx.analysis(name).locus)
                   for name, m in (("C120bar", 0), ("C121", 1), ("C122", 2))}
    failed = {name: [k for k, ok in jc.checks().items() if not ok] for name, jc in results.items()}
    assert not any(failed.values()), {n: (f, results[n].syz_degrees) for n, f in failed.items() if f}


@criterion(9, "oracles: brute-force scan, evaluation rank, Hilbert function from Betti numbers")
def test_oracles():
    ctx = Context()
    for name in ("C120bar", "C121", "C122", "C66", "C68sub"):
        A = ctx.analysis(name)
        with Budget(120):
            scan = brute_force_singular_points(A.recipe.curve)
        assert scan == rational_points_of(A.points), name
        I = A.locus.ideal
        top = max(g.degree() for g in I.gb()) + 3
        assert all(A.betti.quotient_dim(d) == I.quotient_dim(d) for d in range(top + 1)), name
    A = ctx.analysis("C120bar")
    assert graded_dim(7) - evaluation_rank(A.points, 7) == hilbert_function(A.locus.ideal, 7) == 4


@criterion(10, "dimension audits for k, d = 1..5 and m = 0, 1, 2")
def test_dimension_audit():
    with Budget(1):
        rows = [r for k in range(1, 6) for r in dimension_audit(k, k)]
    assert len(rows) == 5 * 6
    assert all(r["holds"] for r in rows), [r for r in rows if not r["holds"]]


@criterion(11, "property suites: GB closure and uniqueness, field axioms, Euler, Betti identities, invariance")
def test_property_suites():
    with Budget(120):
        test_groebner.test_spoly_closure()
        test_groebner.test_reduced_basis_is_unique_under_shuffles()
        for F in test_fields.FIELDS:
            test_fields.test_field_axioms(F)
        test_poly.test_euler_relation()
        test_resolution.test_betti_identities_for_points()
        for name in sorted(test_singular.CURVES):
            test_singular.test_classification_is_invariant_under_coordinate_change(name)
        ctx = Context()
        expected = {"C120bar": (36, 64), "C121": (28, 64), "C122": (20, 64), "C68sub": (10, 16)}
        for name, (s, sq) in expected.items():
            B = betti_table(ctx.analysis(name).locus.ideal)
            assert sum(B.gen_degrees) == sum(B.syz_degrees) == s
            assert B.square_identity_value() == sq == 2 * ctx.analysis(name).locus.count
