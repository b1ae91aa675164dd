"""Numbered end-to-end checks over the whole toolkit.

Each test records one PASS/FAIL line in CRITERIA_RESULTS; conftest echoes
the list after the run so the verdicts are readable in one block.
"""

import math
import random
from fractions import Fraction

from helpers import brute_force_transversal

from spheretrans import (
    Hypergraph,
    LemmaId,
    boundary,
    cross_boundary,
    cs_sphere,
    cyclic_boundary,
    edge_link_sphere,
    enumerate_pair_poset,
    exact_transversal,
    explicit_cs_transversal,
    f_vector,
    facet_hypergraph,
    gf2_betti,
    is_closed_pseudomanifold,
    is_cs,
    is_cs_k_neighborly,
    is_k_neighborly,
    is_transversal,
    neighborly_antichain,
    relative_squeezed_ball,
    sew,
    sewing_antichain,
    sphere_betti_profile,
    squeezed_ball,
    stacked_sphere,
    verify_lemma,
)

CRITERIA_RESULTS: list[str] = []

# every sphere a criterion constructs lands here; the last criterion sweeps it
SPHERES: list = []

SOLVER_BUDGET = 120.0


def _record(num: int, ok: bool, detail: str) -> bool:
    line = f"criterion {num:02d} {'PASS' if ok else 'FAIL'}  {detail}"
    CRITERIA_RESULTS.append(line)
    print(line)
    return ok


def _exact_tau(delta, budget=SOLVER_BUDGET):
    cert = exact_transversal(facet_hypergraph(delta), time_budget=budget)
    assert cert.optimal, "solver exhausted its budget"
    return cert.upper_bound


def test_criterion_01_base_case_is_the_cross_polytope(cs_cache):
    bad = []
    for d in range(2, 6):
        sphere = cs_sphere(d, d + 1, cache=cs_cache)
        SPHERES.append((f"cs_sphere({d},{d + 1})", sphere))
        if sphere != cross_boundary(d + 1):
            bad.append(d)
    detail = "cs_sphere(d, d+1) == cross_boundary(d+1) for d = 2..5"
    assert _record(1, not bad, detail if not bad else f"mismatch at d = {bad}")


def test_criterion_02_three_sphere_structural_suite(cs_cache):
    bad = []
    for n in range(4, 13):
        sphere = cs_sphere(3, n, cache=cs_cache)
        SPHERES.append((f"cs_sphere(3,{n})", sphere))
        fv = f_vector(sphere)
        checks = (
            is_cs(sphere)
            and is_cs_k_neighborly(sphere, 2)
            and is_closed_pseudomanifold(sphere).passed
            and fv.euler_characteristic == 0
            and gf2_betti(sphere) == (1, 0, 0, 1)
            and fv[0] == 2 * n
            and fv[3] == fv[1] - fv[0]
        )
        if not checks:
            bad.append(n)
    detail = "n = 4..12: cs, cs-2-neighborly, pseudomanifold, euler 0, betti (1,0,0,1), f0 = 2n, f3 = f1 - f0"
    assert _record(2, not bad, detail if not bad else f"failed at n = {bad}")


def test_criterion_03_higher_dimensional_suites(cs_cache):
    bad = []
    for d, n_top in ((4, 10), (5, 9)):
        for n in range(d + 1, n_top + 1):
            sphere = cs_sphere(d, n, cache=cs_cache)
            SPHERES.append((f"cs_sphere({d},{n})", sphere))
            checks = (
                is_cs(sphere)
                and is_cs_k_neighborly(sphere, (d + 1) // 2)
                and is_closed_pseudomanifold(sphere).passed
                and gf2_betti(sphere) == sphere_betti_profile(d)
            )
            if not checks:
                bad.append((d, n))
    detail = "d = 4 (n <= 10) and d = 5 (n <= 9): cs, cs-ceil(d/2)-neighborly, sphere betti profile"
    assert _record(3, not bad, detail if not bad else f"failed at {bad}")


def test_criterion_04_explicit_transversals_are_valid(cs_cache):
    bad = []
    for d, n_lo, n_hi in ((3, 4, 14), (4, 5, 12)):
        for n in range(n_lo, n_hi + 1):
            h = facet_hypergraph(cs_sphere(d, n, cache=cs_cache))
            if not is_transversal(h, explicit_cs_transversal(d, n)):
                bad.append((d, n))
    detail = "explicit_cs_transversal hits every facet for d=3, n=4..14 and d=4, n=5..12"
    assert _record(4, not bad, detail if not bad else f"not a transversal at {bad}")


def test_criterion_05_exact_ratio_windows(cs_cache):
    windows = {
        3: (range(6, 11), Fraction(40, 100), Fraction(60, 100)),
        4: (range(6, 10), Fraction(33, 100), Fraction(55, 100)),
    }
    bad = []
    for d, (ns, lo, hi) in windows.items():
        for n in ns:
            tau = _exact_tau(cs_sphere(d, n, cache=cs_cache))
            ratio = Fraction(tau, 2 * n)
            if not (lo <= ratio <= hi and tau <= len(explicit_cs_transversal(d, n))):
                bad.append(f"d={d} n={n} tau={tau} ratio={ratio}")
    detail = "tau/2n within [0.40, 0.60] (d=3, n=6..10) and [0.33, 0.55] (d=4, n=6..9), tau <= |explicit transversal|"
    assert _record(5, not bad, detail if not bad else "outside window: " + "; ".join(bad))


def test_criterion_06_cyclic_transversal_is_two():
    bad = []
    for n in range(7, 13):
        sphere = cyclic_boundary(5, n)
        SPHERES.append((f"cyclic_boundary(5,{n})", sphere))
        tau = _exact_tau(sphere)
        if tau != 2:
            bad.append((n, tau))
    detail = "tau(cyclic_boundary(5, n)) == 2 for n = 7..12"
    assert _record(6, not bad, detail if not bad else f"unexpected tau at {bad}")


def _boundary_face_family_size(k: int, n: int) -> int:
    """Window-by-window count of the six generated face families."""
    total = 0
    for i in range(1, n // 2 - k + 2):
        total += len(enumerate_pair_poset(k - 2, i + 2, n - i))
        total += len(enumerate_pair_poset(k - 2, i + 2, n - i - 2))
        total += len(enumerate_pair_poset(k - 2, i + 2, n - i - 1))
        total += len(enumerate_pair_poset(k - 2, i + 2, n - i - 2))
    total += len(enumerate_pair_poset(k - 2, 2, n - 2))
    total += len(enumerate_pair_poset(k - 1, n // 2 - k + 3, (n + 1) // 2 + k))
    return total


def test_criterion_07_relative_squeezed_boundary_facets():
    bad = []
    for n in range(13, 17):
        report = verify_lemma(LemmaId.RSQ_FACETS, 3, n)
        expected = _boundary_face_family_size(3, n)
        if not (report.passed and not report.failures and report.candidates_checked == expected):
            bad.append((n, report.candidates_checked, expected, len(report.failures)))
    detail = "k=3, n=13..16: all generated faces are boundary facets; counts match the windowed enumeration"
    assert _record(7, not bad, detail if not bad else f"failed at {bad}")


def test_criterion_08_relative_squeezed_spheres_are_two_neighborly():
    bad = []
    for n in range(13, 17):
        sphere = boundary(relative_squeezed_ball(neighborly_antichain(3, n)))
        SPHERES.append((f"boundary(relative_squeezed_ball(A({n})))", sphere))
        if f_vector(sphere)[1] != n * (n - 1) // 2:
            bad.append(n)
    detail = "boundary(relative_squeezed_ball) has f1 = C(n,2) for k=3, n=13..16"
    assert _record(8, not bad, detail if not bad else f"missing edges at n = {bad}")


def test_criterion_09_pair_poset_transversal_bound():
    bad = []
    for k, n_lo, n_hi in ((2, 4, 16), (3, 6, 14)):
        for n in range(n_lo, n_hi + 1):
            report = verify_lemma(LemmaId.BDL, k, n)
            if not report.passed:
                bad.append(
                    f"k={k} n={n} tau={report.details['tau_upper']} < bound {report.details['bound']}"
                )
    detail = "exact tau of the realized pair poset >= ceil(n/2)-k+1 for k=2, n<=16 and k=3, n<=14"
    assert _record(9, not bad, detail if not bad else "bound missed: " + "; ".join(bad))


def test_criterion_10_punctured_sphere_facets(cs_cache):
    bad = []
    for k, ns in ((2, range(6, 10)), (3, range(8, 11))):
        for n in ns:
            report = verify_lemma(LemmaId.PN_FACETS, k, n, cache=cs_cache)
            if not (report.passed and not report.failures):
                bad.append((k, n))
    detail = "every generated set is a facet of the sphere minus both removable balls (k=2, n=6..9; k=3, n=8..10)"
    assert _record(10, not bad, detail if not bad else f"failed at {bad}")


def test_criterion_11_even_dimension_facets(cs_cache):
    bad = []
    for n in range(7, 10):
        report = verify_lemma(LemmaId.EVEN_FACETS, 2, n, m=n + 1, cache=cs_cache)
        if not (report.passed and not report.failures):
            bad.append(n)
    detail = "k=2, n=7..9, m=n+1: each generated face and its negation is a facet of the punctured even sphere"
    assert _record(11, not bad, detail if not bad else f"failed at n = {bad}")


def test_criterion_12_ball_facets_and_containment_chain(cs_cache):
    bad = []
    for n in range(7, 10):
        report = verify_lemma(LemmaId.BALL_FACET, 2, n, cache=cs_cache)
        if not (report.passed and not report.failures):
            bad.append(("ball-facet", n))
    for n in range(8, 11):
        report = verify_lemma(LemmaId.CHAIN, 3, n, cache=cs_cache)
        if not report.passed:
            bad.append(("chain", n))
    detail = "ball-facet membership (k=2, n=7..9) and the nested-ball containment chain (k=3, n=8..10)"
    assert _record(12, not bad, detail if not bad else f"failed at {bad}")


def test_criterion_13_sewing_keeps_neighborliness_and_ratio():
    reported = []
    bad = []
    soft_floor = 1.5 - math.sqrt(1.5)
    for n in range(8, 11):
        ball = squeezed_ball(sewing_antichain(2, n))
        sphere = sew(cyclic_boundary(4, n), ball, n + 1)
        SPHERES.append((f"sew(cyclic_boundary(4,{n}))", sphere))
        tau = _exact_tau(sphere)
        mu = Fraction(tau, n + 1)
        ok = (
            sphere.vertex_count == n + 1
            and is_k_neighborly(sphere, 2)
            and is_closed_pseudomanifold(sphere).passed
            and gf2_betti(sphere) == (1, 0, 0, 1)
            and mu >= Fraction(1, 4)
        )
        if not ok:
            bad.append(n)
        reported.append(f"n={n} mu={mu}{'' if mu >= soft_floor else ' (below soft floor)'}")
    detail = (
        "sewn spheres (n=8..10) are 2-neighborly 3-spheres on n+1 vertices with mu >= 1/4; "
        + ", ".join(reported)
    )
    assert _record(13, not bad, detail if not bad else f"failed at n = {bad}; " + ", ".join(reported))


def test_criterion_14_solver_agrees_with_brute_force(cs_cache):
    rng = random.Random(20260822)
    bases = [
        facet_hypergraph(cs_sphere(3, 7, cache=cs_cache)),
        facet_hypergraph(cs_sphere(4, 7, cache=cs_cache)),
        facet_hypergraph(cyclic_boundary(4, 10)),
        facet_hypergraph(cyclic_boundary(5, 10)),
        facet_hypergraph(stacked_sphere(4, 12)),
        facet_hypergraph(sew(cyclic_boundary(4, 8), squeezed_ball(sewing_antichain(2, 8)), 9)),
        facet_hypergraph(boundary(relative_squeezed_ball(neighborly_antichain(3, 13)))),
        Hypergraph(range(1, 11), [p.face() for p in enumerate_pair_poset(2, 1, 10)]),
    ]
    mismatches = 0
    for trial in range(200):
        base = bases[rng.randrange(len(bases))]
        size = rng.randint(1, min(16, len(base.vertices)))
        chosen = sorted(rng.sample(base.vertices, size))
        induced = [e for e in base.edges if set(e) <= set(chosen)]
        h = Hypergraph(chosen, induced)
        cert = exact_transversal(h, time_budget=60.0)
        want, _ = brute_force_transversal(chosen, induced)
        if not (cert.optimal and cert.upper_bound == want and is_transversal(h, cert.hitting_set)):
            mismatches += 1
    detail = "exact solver matches brute-force minimum on 200 random induced sub-hypergraphs (<= 16 vertices)"
    assert _record(14, mismatches == 0, detail if not mismatches else f"{mismatches} mismatches")


def test_criterion_15_facet_counts_respect_the_cyclic_bound(cs_cache):
    pool = list(SPHERES)
    pool.extend(
        [
            ("stacked_sphere(3,7)", stacked_sphere(3, 7)),
            ("stacked_sphere(4,12)", stacked_sphere(4, 12)),
            ("cyclic_boundary(4,10)", cyclic_boundary(4, 10)),
            ("cyclic_boundary(6,12)", cyclic_boundary(6, 12)),
            ("edge_link_sphere(2,6,(-8,-7))", edge_link_sphere(2, 6, (-8, -7), cache=cs_cache)),
            ("edge_link_sphere(2,6,(7,8))", edge_link_sphere(2, 6, (7, 8), cache=cs_cache)),
        ]
    )
    pool.extend((f"cross_boundary({d})", cross_boundary(d)) for d in range(2, 6))
    bad = []
    for label, sphere in pool:
        bound = len(cyclic_boundary(sphere.dimension + 1, sphere.vertex_count))
        if len(sphere) > bound:
            bad.append(label)
    detail = f"facet count <= cyclic upper bound for all {len(pool)} spheres built by this suite"
    assert _record(15, not bad, detail if not bad else f"bound exceeded by {bad}")
