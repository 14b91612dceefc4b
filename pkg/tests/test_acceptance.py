"""Acceptance criteria, one test each, at the stated sizes.

Each test records a PASS/FAIL line; the lines are repeated in a summary
section at the end of the pytest run.
"""

import time
from collections import Counter

import pytest

from ctm_ramsey.corpus import run_corpus
from ctm_ramsey.extraction import (
    Regime,
    extract_ctm,
    extract_ctm_perturbed,
    extract_triples_vs_matching,
)
from ctm_ramsey.extremal import (
    gen_affine4,
    gen_ctm_lower_bound,
    gen_triples_vs_matching_sharp,
    verify_affine4_structurally,
    verify_ctm_lower_bound_structurally,
    verify_triples_vs_matching_sharp_structurally,
)
from ctm_ramsey.graph import Color, components, maximum_matching, random_coloring, white_profile, with_random_white
from ctm_ramsey.packing import (
    find_mono_triangle_matching,
    find_mono_triangle_matching_perturbed,
    has_connected_matching,
    oracle_has_ctm,
    verify_ctm,
)
from ctm_ramsey.router import route_square_path, validate_route


def _mono_ok(g, tm, n):
    if len(tm) < n:
        return False
    seen = set()
    for a, b, c in tm.triangles:
        if not g.color(a, b) == g.color(a, c) == g.color(b, c) == tm.color or seen & {a, b, c}:
            return False
        seen |= {a, b, c}
    return True


def test_c1_upper_bound_totality(record_acceptance):
    start = time.perf_counter()
    bad = []
    for n in (2, 3, 4, 5):
        for seed in range(1000):
            g = random_coloring(7 * n - 2, seed)
            w, _ = extract_ctm(g, n)
            if not verify_ctm(g, w, n):
                bad.append((n, seed))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= 300
    record_acceptance("C1 upper-bound totality", ok, f"4000 runs, {len(bad)} failures, {elapsed:.1f}s")
    assert ok


def test_c2_lower_bound_certification(record_acceptance):
    oracle_clean = all(
        oracle_has_ctm(gen_ctm_lower_bound(n), c, n) is None for n in (2, 3) for c in (Color.RED, Color.BLUE)
    )
    slowest, certified = 0.0, True
    for n in range(2, 21):
        g = gen_ctm_lower_bound(n)
        start = time.perf_counter()
        certified &= verify_ctm_lower_bound_structurally(g, n)
        slowest = max(slowest, time.perf_counter() - start)
    ok = oracle_clean and certified and slowest < 1.0
    record_acceptance("C2 lower-bound certification", ok, f"oracle n=2,3 clean={oracle_clean}, n=2..20 slowest {slowest:.3f}s")
    assert ok


def test_c3_triples_vs_matching(record_acceptance):
    bad = []
    for n in range(1, 6):
        for m in range(1, n + 1):
            for seed in range(500):
                g = random_coloring(3 * n + m - 1, seed)
                res = extract_triples_vs_matching(g, None, n, m)
                if res.red_ctm is not None:
                    good = res.red_ctm.color == Color.RED and verify_ctm(g, res.red_ctm, n)
                else:
                    mm = res.blue_matching
                    ends = [v for e in mm.edges for v in e]
                    good = len(mm) == m and len(set(ends)) == 2 * m and all(g.color(u, v) == Color.BLUE for u, v in mm.edges)
                if not good:
                    bad.append((n, m, seed))
            sharp = gen_triples_vs_matching_sharp(n, m)
            if len(maximum_matching(sharp, Color.BLUE)) != m - 1:
                bad.append(("sharp-matching", n, m))
            if not verify_triples_vs_matching_sharp_structurally(sharp, n, m):
                bad.append(("sharp-structural", n, m))
            if n <= 3 and oracle_has_ctm(sharp, Color.RED, n) is not None:
                bad.append(("sharp-oracle", n, m))
    record_acceptance("C3 triples versus matching", not bad, f"15 (n,m) pairs x 500, failures {bad[:3]}")
    assert not bad


def test_c4_perturbed_totality(record_acceptance):
    bad = []
    for n, t in ((3, 1), (3, 2), (5, 3)):
        for seed in range(500):
            g = with_random_white(random_coloring(7 * n - 2 + 7 * t, seed), t, seed)
            if white_profile(g).max_white_degree >= t:
                bad.append(("white", n, t, seed))
                continue
            w, _ = extract_ctm_perturbed(g, n, t)
            if not verify_ctm(g, w, n):
                bad.append((n, t, seed))
    for n in (2, 3, 4):
        for seed in range(200):
            g = random_coloring(7 * n - 2, seed)
            w0, _ = extract_ctm(g, n)
            w1, _ = extract_ctm_perturbed(g, n, 0)
            if not (verify_ctm(g, w0, n) and verify_ctm(g, w1, n)):
                bad.append(("t=0", n, seed))
    record_acceptance("C4 perturbed totality", not bad, f"1500 perturbed + 600 t=0 runs, failures {bad[:3]}")
    assert not bad


def test_c5_mono_finders(record_acceptance):
    bad = []
    for n in (2, 3):
        for seed in range(500):
            g = random_coloring(5 * n, seed)
            if not _mono_ok(g, find_mono_triangle_matching(g, n), n):
                bad.append((n, seed))
    stats = Counter()
    for n, t in ((2, 1), (3, 1), (3, 2), (5, 3)):
        for seed in range(500):
            g = with_random_white(random_coloring(6 * n - 2 + 5 * t, seed), t, seed)
            if not _mono_ok(g, find_mono_triangle_matching_perturbed(g, n, t, stats=stats), n):
                bad.append(("perturbed", n, t, seed))
    ok = not bad and stats["exact"] == 0
    record_acceptance("C5 mono-nK3 finders", ok, f"failures {bad[:3]}, exact fallbacks in perturbed runs {stats['exact']}")
    assert ok


def test_c6_affine(record_acceptance):
    ok = True
    for n in (2, 5, 8):
        g = gen_affine4(n)
        ok &= verify_affine4_structurally(g, n)
        for c in range(4):
            ok &= components(g, c).sizes() == [2 * n - 1] * 3
            ok &= not has_connected_matching(g, c, n)
    record_acceptance("C6 affine 4-coloring", ok, "n in {2,5,8}")
    assert ok


def test_c7_router_exhaustive(record_acceptance):
    failures, checked = [], 0
    for m in range(2, 7):
        for p in range(4, 3 * m + 1):
            for v1 in range(m):
                for v2 in range(m):
                    route = route_square_path(m, p, v1, v2)
                    problem = validate_route(route, m, p, v1, v2)
                    if problem is None and len(route.missing_diagonals) != p % 3:
                        problem = "diagonal count"
                    if problem:
                        failures.append((m, p, v1, v2, problem))
                    checked += 1
    record_acceptance("C7 router exhaustive", not failures, f"{checked} routes, {len(failures)} failures")
    assert not failures


@pytest.mark.slow
def test_c8_case_coverage(record_acceptance):
    report = run_corpus([2, 3, 4, 5], 500, 0)
    print(report.render())
    required = [r.value for r in Regime if r is not Regime.RED_CONNECTED]
    missing = [r for r in required if report.regimes[r] == 0]
    hits = " ".join(f"{r}={report.regimes[r]}" for r in required)
    record_acceptance("C8 case coverage", not missing, hits)
    assert not missing
