import pytest

from scurve.census import (
    CensusError,
    CensusStore,
    build_census,
    census_counts,
    dumps_census,
    enumerate_curves,
    first_occurrence_words,
    load_census,
    loads_census,
    save_census,
)
from scurve.curve import canonical_code, parse_signed_code
from scurve.splice import is_reduced


def test_counts_small():
    assert census_counts(build_census(5)) == {0: 1, 1: 1, 2: 2, 3: 6, 4: 19, 5: 76}


def test_n6_count(census6):
    assert len(census6.codes[6]) == 376


def test_reduced_counts():
    assert [len(enumerate_curves(n, reduced_only=True)) for n in range(1, 7)] == [0, 0, 1, 1, 2, 5]


def test_reduced_filter_matches_full(census6):
    for n in range(1, 7):
        full = [c for c in census6.codes[n] if is_reduced(parse_signed_code(c))]
        assert full == enumerate_curves(n, reduced_only=True)


def test_prefilter_is_only_a_speedup():
    for n in range(1, 6):
        assert enumerate_curves(n, prefilter=False) == enumerate_curves(n)


def test_codes_are_canonical_and_unique(census6):
    for n, code in census6.curves():
        assert canonical_code(parse_signed_code(code)) == code
    for codes in census6.codes.values():
        assert len(set(codes)) == len(codes)


def test_word_count():
    # (2n-1)!! first-occurrence words
    assert sum(1 for _ in first_occurrence_words(4)) == 105


def test_jobs_do_not_change_output():
    assert enumerate_curves(5, jobs=2) == enumerate_curves(5, jobs=1)


def test_roundtrip(tmp_path, census6):
    path = tmp_path / "c.txt"
    save_census(census6, path)
    again = load_census(path)
    assert again == census6
    assert dumps_census(again) == path.read_text()


def test_file_shape():
    text = dumps_census(build_census(1))
    assert text == "# census v1\n# filter=all\n# generator=scurve-census-1\n# n=0\n\n# n=1\n1+ 1+\n"


@pytest.mark.parametrize("text, message", [
    ("", "header"),
    ("# census v1\n1+ 1+\n", "before any"),
    ("# census v1\n# n=1\n1+ 1+ 2+ 2+\n", "crossings"),
    ("# census v1\n# n=3\n1+ 2+ 3+ 1+ 2+ 3+\n", "non-spherical"),
    ("# census v1\n# bogus=1\n", "unknown header"),
    ("# census v1\n# n=2\n1+ 1+ 2+ 2+\n1+ 1+ 2+ 2+\n", "sorted or duplicated"),
])
def test_load_rejects(text, message):
    with pytest.raises(CensusError, match=message):
        loads_census(text)


def test_store_equality_ignores_generator():
    a = CensusStore({1: ["1+ 1+"]})
    b = CensusStore({1: ["1+ 1+"]}, generator="other")
    assert a == b
