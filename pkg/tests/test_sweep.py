import json

from monomial_digraphs.sweep import (SweepReport, ProfileCache, prime_powers,
                                     sweep, sweep_one)


def test_prime_powers():
    assert prime_powers(2, 13) == [2, 3, 4, 5, 7, 8, 9, 11, 13]
    assert prime_powers(10, 10) == []
    assert prime_powers(25, 27) == [25, 27]


def test_sweep_q2():
    r = sweep_one(2)
    # the sole parameter pair is (1, 1)
    assert r.class_count == 1
    assert r.cross_class_pairs == 0
    assert r.counterexamples == [] and r.undecided == 0


def test_sweep_q3():
    r = sweep_one(3)
    assert r.class_count == 4
    assert r.within_class_checks == 0   # units mod 2 = {1}: all singletons
    assert r.cross_class_pairs == 6
    assert r.resolved_by_invariant + r.resolved_by_search == 6
    assert r.counterexamples == [] and r.undecided == 0


def test_sweep_q5_accounting():
    r = sweep_one(5)
    assert r.class_count == 10
    # 16 pairs in 10 classes: 6 classes of size 2, checked memberwise
    assert r.within_class_checks == 6
    assert r.cross_class_pairs == 45
    assert (r.resolved_by_invariant + r.resolved_by_search
            + r.undecided + len(r.counterexamples)) == 45
    assert r.counterexamples == [] and r.undecided == 0


def test_sweep_m1_only_skips_even_q():
    reports = sweep(3, 9, m1_only=True)
    assert [r.q for r in reports] == [3, 5, 7, 9]
    for r in reports:
        assert r.class_count == r.q - 1
        assert r.within_class_checks == 0
        assert r.counterexamples == [] and r.undecided == 0


def test_iso_sink_collects_within_class_maps():
    sink = []
    sweep_one(5, iso_sink=sink)
    assert len(sink) == 6
    for rec in sink:
        assert rec["q"] == 5 and len(rec["mapping"]) == 25


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = ProfileCache(str(path))
    r1 = sweep_one(8, cache=cache)
    cache.close()

    # profiles are cached only for pairs that survive the gcd filter,
    # e.g. the reverse pair (1,2)/(1,4) at q = 8
    cache2 = ProfileCache(str(path))
    assert cache2.get(8, 1, 2) is not None
    r2 = sweep_one(8, cache=cache2)
    cache2.close()

    d1, d2 = r1.as_dict(), r2.as_dict()
    d1.pop("wall_time")
    d2.pop("wall_time")
    assert d1 == d2


def test_cache_tolerates_corrupt_trailing_line(tmp_path, capsys):
    path = tmp_path / "cache.jsonl"
    cache = ProfileCache(str(path))
    sweep_one(8, cache=cache)
    cache.close()
    n_entries = len(cache.entries)
    assert n_entries > 0

    with open(path, "a", encoding="utf-8") as fh:
        fh.write('{"q": 8, "m": 1, "tru')    # simulated torn write

    cache2 = ProfileCache(str(path))
    assert len(cache2.entries) == n_entries
    cache2.close()
    assert "corrupt trailing" in capsys.readouterr().err


def test_reports_deterministic_up_to_wall_time():
    a = sweep_one(7).as_dict()
    b = sweep_one(7).as_dict()
    a.pop("wall_time")
    b.pop("wall_time")
    assert a == b
    assert json.dumps(a) == json.dumps(b)


def test_report_dict_key_order():
    keys = list(SweepReport(q=2).as_dict())
    assert keys == ["q", "class_count", "within_class_checks",
                    "cross_class_pairs", "resolved_by_invariant",
                    "resolved_by_search", "undecided", "counterexamples",
                    "wall_time"]
