import pytest

from cliquebound.records import ConsistencyRecord, not_applicable


def test_applicable_record_needs_verdict():
    with pytest.raises(ValueError):
        ConsistencyRecord("p", "s", 0, 0, applicable=True, passed=None)


def test_inapplicable_record_must_not_carry_verdict():
    with pytest.raises(ValueError):
        ConsistencyRecord("p", "s", 0, 0, applicable=False, passed=True)


def test_failed_property():
    ok = ConsistencyRecord("p", "s", 1, 2, applicable=True, passed=True)
    bad = ConsistencyRecord("p", "s", 3, 2, applicable=True, passed=False)
    skipped = not_applicable("p", "s")
    assert not ok.failed
    assert bad.failed
    assert not skipped.failed


def test_not_applicable_helper():
    rec = not_applicable("some_bound", "n=3", reason="hypothesis fails")
    assert rec.predicate == "some_bound"
    assert not rec.applicable
    assert rec.passed is None
