"""End-to-end acceptance checks.

Each test prints one `ACCEPTANCE <n>: PASS` (or FAIL) line; run with
`pytest -s tests/test_acceptance.py` to see them.  The heaviest fixtures
(the two verification sweeps) are shared at module scope.
"""

import functools

import pytest

from monomial_digraphs.field import field_for_order, gcd_bar
from monomial_digraphs.digraph import build_monomial, count_cycles_by_length
from monomial_digraphs import invariants
from monomial_digraphs.iso import (explicit_iso, power_map, verify_mapping,
                                   conjugate_classes, iso_search, extract_g)
from monomial_digraphs.sweep import sweep

from test_digraph import fig1_arc_ids

ODD_Q_LE_9 = (3, 5, 7, 9)
ALL_Q_LE_9 = (2, 3, 4, 5, 7, 8, 9)


def acceptance(number):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {number}: FAIL")
                raise
            print(f"ACCEPTANCE {number}: PASS")
        return wrapper
    return deco


@functools.lru_cache(maxsize=None)
def build(q, m, n):
    return build_monomial(field_for_order(q), m, n)


@functools.lru_cache(maxsize=None)
def census(q, m, n, motif):
    return invariants.motif_census(build(q, m, n), motif)


@pytest.fixture(scope="module")
def main_sweep():
    sink = []
    reports = sweep(2, 13, iso_sink=sink)
    return reports, sink


@acceptance(1)
def test_acceptance_1_sweep_2_13(main_sweep):
    reports, _ = main_sweep
    assert [r.q for r in reports] == [2, 3, 4, 5, 7, 8, 9, 11, 13]
    for r in reports:
        assert r.counterexamples == []
        assert r.undecided == 0


@acceptance(2)
def test_acceptance_2_m1_sweep_3_27():
    reports = sweep(3, 27, m1_only=True)
    assert [r.q for r in reports] == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27]
    for r in reports:
        assert r.counterexamples == []
        assert r.undecided == 0


@acceptance(3)
def test_acceptance_3_two_cycle_formula():
    for q in ODD_Q_LE_9:
        for m in range(1, q):
            for n in range(1, q):
                brute = invariants.two_cycle_count(build(q, m, n))
                assert brute == q * (q - 1) * (2 + gcd_bar(m - n, q)) // 2


@acceptance(4)
def test_acceptance_4_loop_formula():
    for q in ODD_Q_LE_9:
        for m in range(1, q):
            for n in range(1, q):
                total, distinct = invariants.count_loops(build(q, m, n))
                assert total == q
                assert distinct == (q - 1) // gcd_bar(m + n, q)


@acceptance(5)
def test_acceptance_5_golden_arc_list():
    assert sorted(build(3, 1, 2).arcs()) == fig1_arc_ids()


@acceptance(6)
def test_acceptance_6_q11_independence_triples():
    def pattern(n1, n2):
        r = invariants.necessary_filter((11, 1, n1), (11, 1, n2))
        return (r.condition_i, r.condition_ii, r.condition_iii)

    assert pattern(1, 3) == (True, True, False)
    assert pattern(2, 4) == (True, False, True)
    assert pattern(2, 10) == (False, True, True)


@acceptance(7)
def test_acceptance_7_q17_pair():
    assert invariants.gcd_profile(17, 1, 4) == invariants.gcd_profile(17, 1, 12)
    cert = iso_search(build(17, 1, 4), build(17, 1, 12))
    assert cert.verdict == "NonIso"
    assert census(17, 1, 4, "K") != census(17, 1, 12, "K")
    F17 = field_for_order(17)
    r5 = invariants.trinomial_root_count(F17, 5)
    r13 = invariants.trinomial_root_count(F17, 13)
    assert r5 != r13
    # independent oracle: integer arithmetic mod 17
    assert r5 == sum(1 for x in range(17)
                     if (pow(x, 5, 17) - 2 * x + 1) % 17 == 0)
    assert r13 == sum(1 for x in range(17)
                      if (pow(x, 13, 17) - 2 * x + 1) % 17 == 0)


@acceptance(8)
def test_acceptance_8_reverse_pair_counterexample():
    for q in (5, 9):
        a = build(q, (q - 1) // 2, q - 1)
        b = build(q, q - 1, (q - 1) // 2)
        assert count_cycles_by_length(a, 6) == count_cycles_by_length(b, 6)
        r = invariants.necessary_filter(a.params, b.params)
        assert not r.passed
        assert not r.condition_i


@acceptance(9)
def test_acceptance_9_mapping_structure(main_sweep):
    _, sink = main_sweep
    checked = 0
    for rec in sink:
        q = rec["q"]
        m, n = rec["source"]
        if q % 2 == 0 or m == n:
            continue
        s = extract_g(rec["mapping"], field_for_order(q))
        assert s.fixes_origin
        assert s.preserves_zero_column
        assert s.is_permutation
        assert s.odd_degree_only
        checked += 1
    assert checked > 0


@acceptance(10)
def test_acceptance_10_explicit_isomorphisms():
    for q in ALL_Q_LE_9:
        F = field_for_order(q)

        def check(m1, n1, m2, n2):
            k = explicit_iso(q, m1, n1, m2, n2)
            assert k is not None
            assert verify_mapping(build(q, m2, n2), build(q, m1, n1),
                                  power_map(F, k))

        for cls in conjugate_classes(q):
            members = list(cls.members)
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    check(*members[i], *members[j])
        for m in range(1, q):
            for n in range(1, q):
                if gcd_bar(m, q) == gcd_bar(n, q):
                    check(m, m, n, n)
                if (m + n) % (q - 1) == 0:
                    check(m, n, n, m)


@acceptance(11)
def test_acceptance_11_census_invariance():
    for q in ALL_Q_LE_9:
        for cls in conjugate_classes(q):
            rm, rn = cls.canonical_rep
            for m, n in cls.members:
                for motif in ("K", "directed-K22"):
                    assert census(q, m, n, motif) == census(q, rm, rn, motif)
        pairs = [(m, n) for m in range(1, q) for n in range(1, q)]
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                f = invariants.necessary_filter((q, *pairs[i]), (q, *pairs[j]))
                if f.passed:
                    assert (census(q, *pairs[i], "directed-K22")
                            == census(q, *pairs[j], "directed-K22"))
