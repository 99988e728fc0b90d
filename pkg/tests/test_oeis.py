import io
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibhess.oeis import Match, OeisEntry, ingest_stripped, load, parse_line

FIXTURE = Path(__file__).parent / "data" / "oeis_fixture.txt"


@pytest.fixture(scope="module")
def index():
    return load(FIXTURE)


def test_parse_examples():
    assert parse_line("A000045 ,0,1,1,2,3,5,8,13,") == OeisEntry("A000045", (0, 1, 1, 2, 3, 5, 8, 13))
    assert parse_line("# comment") is None
    with pytest.raises(ValueError):
        parse_line("A00004 1,2,3")


def test_malformed_lines_are_counted():
    src = io.StringIO("# comment\nA000045 ,0,1,1,2,3,5,8,13,\nA00004 1,2,3\n\nA000012 ,1,1,1,1,\n")
    idx = ingest_stripped(src)
    assert idx.malformed == 1
    assert idx.ids() == {"A000045", "A000012"}


def test_fixture_loads(index):
    assert 15 <= len(index) <= 25
    assert index.malformed == 0


def test_fibonacci_lookup(index):
    assert index.lookup([1, 1, 2, 3, 5, 8]) == [Match("A000045", 1, False)]
    assert index.lookup([-1, -1, -2, -3, -5, -8]) == [Match("A000045", 1, True)]


def test_negated_product_row(index):
    hits = index.lookup([-1, -3, -16], min_match=3)
    assert Match("A999001", 0, True) in hits
    assert all(m.negated for m in hits)


def test_absent_and_errors(index):
    assert index.lookup([9, 9, 9, 9]) == []
    with pytest.raises(ValueError):
        index.lookup([1, 2, 3])
    with pytest.raises(ValueError):
        index.lookup([1, 2], min_match=0)


def test_short_patterns_still_scan(index):
    assert Match("A000045", 4, False) in index.lookup([3, 5], min_match=2)


@given(st.lists(st.integers(-40, 40), min_size=4, max_size=7))
def test_negation_symmetry(seq):
    idx = load(FIXTURE)
    plain = idx.lookup(seq)
    flipped = idx.lookup([-x for x in seq])
    assert sorted((m.id, m.offset, not m.negated) for m in plain) == sorted(
        (m.id, m.offset, m.negated) for m in flipped
    )


def test_fixture_sequences_find_themselves(index):
    for entry in index.entries:
        if len(entry.terms) >= 4:
            assert any(m.id == entry.id and not m.negated for m in index.lookup(entry.terms[:4]))


def test_ingest_is_idempotent():
    text = FIXTURE.read_text()
    a, b = ingest_stripped(io.StringIO(text)), ingest_stripped(io.StringIO(text))
    assert set(a.entries) == set(b.entries)
