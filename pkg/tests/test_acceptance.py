"""Acceptance criteria, one test per criterion, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""
import time

from antimagic.constructions import (build_chi_equal_sequence, label_complete,
                                     label_corona, label_necklace,
                                     label_union_complete_bipartite,
                                     label_union_cycles_even,
                                     label_union_cycles_odd,
                                     label_union_paths, label_union_stars)
from antimagic.graphs import (NecklaceSpec, build_complete,
                              build_union_cycles, build_union_paths,
                              build_union_stars, build_necklace)
from antimagic.magic import (construct_mr, construct_mrs,
                             find_mr_by_backtracking, mr_exists, mrs_exists,
                             verify_mr, verify_mrs)
from antimagic.solve import ALL_PRUNES, chi_la_exact
from antimagic.verify import (bipartite_two_color_obstruction,
                              chromatic_number_exact, induced_weights,
                              is_local_antimagic, pendant_lower_bound)
from conftest import random_valid_necklace_specs
from naive_oracle import naive_chi_la


def _check(report, exact=None, at_most=None):
    ok, violation = is_local_antimagic(report.graph, report.labeling.labels)
    assert ok, f"invalid labeling: {violation}"
    if exact is not None:
        assert report.num_colors == exact, (report.construction,
                                            report.num_colors, exact)
    if at_most is not None:
        assert report.num_colors <= at_most


def test_criterion_1_constructions_validity_grid():
    t0 = time.time()
    for r in range(1, 7):
        for n in range(3, 13):
            _check(label_union_paths(r, n), at_most=2 * r + 2)
    for r in range(1, 7):
        for n in (4, 6, 8, 10, 12):
            _check(label_union_cycles_even(r, n), exact=3)
    for r in range(1, 7):
        for n in (3, 5, 7, 9):
            _check(label_union_cycles_odd(r, n), at_most=r + 2)
    for r in range(1, 6):
        for n in range(2, 10):
            expected = r * n + 1 if (n % 2 == 0 or r % 2 == 1) else r * n + 2
            _check(label_union_stars(r, n), exact=expected)
    for n in range(3, 51):
        _check(label_complete(n), exact=n)
    bip = 0
    for r in range(1, 121):
        for m in range(1, 121):
            if m * r > 120:
                break
            for n in range(m + 1, 121):
                if m * n * r > 120:
                    break
                if mrs_exists(m, n, r):
                    _check(label_union_complete_bipartite(r, m, n), exact=2)
                    bip += 1
    assert bip >= 40
    for spec in random_valid_necklace_specs(200, seed=12345):
        _check(label_necklace(spec), at_most=6)
    elapsed = time.time() - t0
    assert elapsed < 10.0, f"grid took {elapsed:.1f}s"
    print(f"\nPASS criterion 1: constructions validity grid ({elapsed:.1f}s)")


def test_criterion_2_figure_reproduction():
    t0 = time.time()
    assert label_union_cycles_even(2, 6).num_colors == 3
    assert label_union_stars(3, 3).num_colors == 10
    assert label_union_complete_bipartite(3, 2, 4).num_colors == 2
    neck = build_necklace(NecklaceSpec((4, 4, 4), ((2, 2), (2, 2), (2, 2))))
    assert bipartite_two_color_obstruction(neck)  # certifies >= 3
    res = chi_la_exact(neck)
    assert res.status == "exact" and res.chi_la == 3
    print(f"\nPASS criterion 2: figure reproduction ({time.time()-t0:.1f}s)")


def test_criterion_3_oracle_cross_checks():
    t0 = time.time()
    checks = []
    for n in range(3, 8):
        checks.append((build_union_cycles(1, n), 3))
    for n in range(3, 7):
        checks.append((build_union_paths(1, n), 3))
    checks.append((build_complete(3), 3))
    checks.append((build_complete(4), 4))
    for n in range(2, 6):
        checks.append((build_union_stars(1, n), n + 1))
    for g, expected in checks:
        t1 = time.time()
        res = chi_la_exact(g)
        assert res.status == "exact" and res.chi_la == expected
        assert time.time() - t1 <= 60.0
    print(f"\nPASS criterion 3: oracle cross-checks ({time.time()-t0:.1f}s)")


def test_criterion_4_magic_rectangle_suite():
    t0 = time.time()
    for a in range(2, 51):
        for b in range(2, 101):
            if a * b > 100:
                break
            if mr_exists(a, b):
                assert verify_mr(construct_mr(a, b, 0)), (a, b)
    for a in range(1, 121):
        for b in range(1, 121):
            if a * b > 120:
                break
            for c in range(1, 121):
                if a * b * c > 120:
                    break
                if mrs_exists(a, b, c):
                    assert verify_mrs(construct_mrs(a, b, c)), (a, b, c)
    for a in range(2, 9):
        for b in range(2, 9):
            if a * b > 16:
                continue
            found = find_mr_by_backtracking(a, b) is not None
            assert found == mr_exists(a, b), (a, b)
    elapsed = time.time() - t0
    assert elapsed < 30.0, f"magic suite took {elapsed:.1f}s"
    print(f"\nPASS criterion 4: magic rectangle suite ({elapsed:.1f}s)")


def test_criterion_5_corona_and_join():
    t0 = time.time()
    base = label_union_cycles_odd(1, 3)
    corona = label_corona(base.graph, base.labeling, 3)
    assert corona.num_colors <= 12
    assert pendant_lower_bound(corona.graph) == 10
    k24 = label_union_complete_bipartite(1, 4, 2)
    seq = build_chi_equal_sequence(k24.graph, k24.labeling, [2, 2])
    assert [r.num_colors for r in seq] == [2, 3, 4]
    for r in seq:
        assert chromatic_number_exact(r.graph) == r.num_colors
    print(f"\nPASS criterion 5: corona and join ({time.time()-t0:.1f}s)")


def test_criterion_6_property_suites():
    t0 = time.time()
    # bijection + properness across one representative of each construction
    reports = [
        label_union_paths(3, 5),
        label_union_cycles_even(2, 6),
        label_union_cycles_odd(2, 5),
        label_union_stars(2, 4),
        label_complete(6),
        label_union_complete_bipartite(2, 2, 4),
        label_necklace(NecklaceSpec((4, 5, 4))),
    ]
    for rep in reports:
        ok, _ = is_local_antimagic(rep.graph, rep.labeling.labels)
        assert ok
        assert induced_weights(rep.graph,
                               rep.labeling.labels).num_colors == rep.num_colors
    # solver determinism across worker counts
    g = build_union_cycles(1, 6)
    base = chi_la_exact(g, workers=1)
    for w in (2, 4):
        got = chi_la_exact(g, workers=w)
        assert (got.chi_la, got.witness) == (base.chi_la, base.witness)
    # prune soundness against naive |E|! enumeration
    small = [build_union_paths(1, 4), build_union_cycles(1, 5),
             build_union_stars(1, 4), build_complete(4)]
    for g in small:
        expected = naive_chi_la(g)
        for dropped in ALL_PRUNES:
            assert chi_la_exact(g, prunes=ALL_PRUNES - {dropped}).chi_la == expected
    print(f"\nPASS criterion 6: property suites ({time.time()-t0:.1f}s)")
