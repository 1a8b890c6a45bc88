import math

import pytest

import oracles
from wajsberg import (
    CensusCapError,
    chain,
    find_isomorphism,
    iso_classes,
    labeled_census,
    multiplicative_partitions,
    pi,
    signature,
)
from wajsberg.enumeration import CAP_ENV_VAR


def test_multiplicative_partition_examples():
    assert multiplicative_partitions(8) == [(2, 2, 2), (2, 4)]
    assert multiplicative_partitions(6) == [(2, 3)]
    assert multiplicative_partitions(12) == [(2, 2, 3), (2, 6), (3, 4)]
    assert (pi(4), pi(6), pi(8), pi(9), pi(12)) == (1, 1, 2, 1, 3)


def test_multiplicative_partitions_match_brute_force():
    for n in range(2, 97):
        assert set(multiplicative_partitions(n)) == oracles.unordered_partitions(n)


def test_primes_have_no_partitions():
    for p in (2, 3, 5, 7, 11, 13, 31):
        assert multiplicative_partitions(p) == []
        assert len(iso_classes(p)) == 1


def test_multiplicative_partitions_rejects_small_n():
    with pytest.raises(ValueError):
        multiplicative_partitions(1)


def test_iso_class_examples():
    assert [str(s) for s, _ in iso_classes(8)] == ["{8}", "{2,2,2}", "{2,4}"]
    assert [str(s) for s, _ in iso_classes(9)] == ["{9}", "{3,3}"]
    assert [str(s) for s, _ in iso_classes(7)] == ["{7}"]
    assert [len(iso_classes(n)) for n in range(2, 10)] == [1, 1, 2, 1, 2, 1, 3, 2]
    assert len(iso_classes(1)) == 1


def test_iso_class_representatives():
    for n in range(2, 13):
        reps = iso_classes(n)
        assert len(reps) == pi(n) + 1
        for sig, W in reps:
            assert W.n == n and signature(W) == sig
        for i in range(len(reps)):
            for j in range(i):
                assert find_isomorphism(reps[i][1], reps[j][1]) is None


@pytest.mark.parametrize(
    "n, formula, distinct, discrepancy",
    [(4, 3, 2, True), (6, 25, 25, False), (8, 1441, 841, True), (9, 5041, 2521, True)],
)
def test_census_counts(n, formula, distinct, discrepancy):
    r = labeled_census(n)
    assert r.formula_total == formula
    assert r.bijection_count == r.pi_n * math.factorial(n - 2)
    assert r.distinct_labeled_total == distinct
    assert r.discrepancy is discrepancy
    assert r.iso_classes == r.pi_n + 1
    total = 1 + sum(math.factorial(n - 2) // a for a in r.per_class_aut_order.values())
    assert total == r.distinct_labeled_total


def test_census_prime_order():
    r = labeled_census(5)
    assert r.pi_n == 0 and r.iso_classes == 1
    assert r.distinct_labeled_total == r.formula_total == 1
    assert not r.discrepancy and "only the chain" in r.narrative


def test_census_report_serialises():
    r = labeled_census(6)
    d = r.to_dict()
    assert d["signatures"] == [[6], [2, 3]]
    assert d["per_class_aut_order"] == {"{2,3}": 1}
    assert "distinct labeled tables: 25" in r.to_text()


def test_census_tables_are_valid_and_keep_their_signature():
    r = labeled_census(6, keep_tables=True)
    (cls,) = r.classes
    assert len(cls.tables) == 24
    for W in cls.tables:
        assert signature(W) == cls.signature


def test_census_cap(monkeypatch):
    with pytest.raises(CensusCapError):
        labeled_census(10)
    with pytest.raises(CensusCapError):
        labeled_census(11, cap=20)
    monkeypatch.setenv(CAP_ENV_VAR, "4")
    with pytest.raises(CensusCapError, match="above the census limit 4"):
        labeled_census(6)
    monkeypatch.setenv(CAP_ENV_VAR, "nine")
    with pytest.raises(CensusCapError):
        labeled_census(6)
    with pytest.raises(ValueError):
        labeled_census(1)


def test_census_allow_large_reaches_ten():
    r = labeled_census(10, allow_large=True)
    assert r.pi_n == 1 and r.formula_total == math.factorial(8) + 1
    assert r.distinct_labeled_total == r.formula_total
