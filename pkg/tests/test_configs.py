import pytest

from conftest import TORUS25, TREFOIL
from scurve.census import CensusStore
from scurve.configs import (
    ConfigError,
    build_u3_core,
    d5_pairs,
    filter_classes_by_cyclic_triple,
    load_configs,
    loads_configs,
    match_configuration,
    orbit_inconsistent_classes,
    shared_letters,
    shipped_u3_core_text,
    theorem1_search,
    verify_lemma,
)
from scurve.curve import mirror, parse_signed_code
from scurve.gons import classify_face, load_alias_table
from scurve.realize import joint_realizations

LISTS = {
    (2, "aed"): "2abced 2abecd 2abedc 2acbed 2acebd 2acedb 2aedbc 2aedcb",
    (4, "aed"): "4abced 4abedc 4acbed 4acebd 4acedb 4aecbd 4aedcb",
    (4, "cde"): "4abcde 4abdec 4acbde 4acdbe 4acdeb 4adbec 4adecb 4aecbd",
    (4, "bdc"): "4abdec 4abedc 4acbde 4acbed 4acebd 4adcbe 4adecb 4aecbd 4aedcb",
}


@pytest.mark.parametrize("key", list(LISTS))
def test_cyclic_triple_lists(key):
    got = [c.label for c in filter_classes_by_cyclic_triple(*key)]
    assert got == LISTS[key].split()


def test_triple_predicate_orbit_constancy():
    # constant for type 2 and the type-4 d case, not for the other two type-4 cases
    assert orbit_inconsistent_classes(2, "aed") == []
    assert orbit_inconsistent_classes(4, "cde") == []
    assert orbit_inconsistent_classes(4, "aed") != []


def test_bad_triple():
    with pytest.raises(ConfigError):
        filter_classes_by_cyclic_triple(2, "aae")


def test_core_shape():
    core = build_u3_core()
    assert len(core) == 32
    by_case = {}
    for m in core.members:
        by_case[m.provenance] = by_case.get(m.provenance, 0) + 1
    assert by_case == {"type2/e": 8, "type4/e": 7, "type4/d": 8, "type4/c": 9}
    assert {m.gon5[0] for m in core.members} == {"2", "4"}


def test_core_file_is_reproducible():
    assert build_u3_core().dumps() == shipped_u3_core_text()


def test_config_file_roundtrip(tmp_path):
    p = tmp_path / "set.txt"
    p.write_text(build_u3_core().dumps())
    again = load_configs(p)
    assert again.name == "U3-core"
    assert again.keys() == build_u3_core().keys()


@pytest.mark.parametrize("line", ["D share=a 5gon=2abced", "D 5gon=2abced", "D share=e 5gon=1abced"])
def test_config_rejects(line):
    with pytest.raises(ConfigError):
        loads_configs(line)


def test_no_matches_on_small_curves():
    for code in (TREFOIL, TORUS25):
        curve = parse_signed_code(code)
        for cfg in build_u3_core().members:
            assert match_configuration(curve, cfg) == []


@pytest.fixture(scope="module")
def joint():
    aliases = load_alias_table()
    rows = []
    for real, shared in joint_realizations(3, 5):
        f3, f5 = real.polygon_face(0), real.polygon_face(1)
        c3, c5 = classify_face(f3, aliases), classify_face(f5)
        rows.append((real.curve, c3, c5, shared_letters(f5, real.side_edges[shared], c5)))
    return rows


def test_each_config_is_matched_by_a_built_curve(joint):
    for cfg in build_u3_core().members:
        hit = next(curve for curve, c3, c5, letters in joint
                   if c3.alias == "D" and c5.label == cfg.gon5 and cfg.shared_side in letters)
        assert match_configuration(hit, cfg)
        assert match_configuration(mirror(hit), cfg)


def test_u3_local_on_every_built_curve(joint):
    aliases = load_alias_table()
    keys = build_u3_core().keys()
    seen = 0
    for curve, c3, _, _ in joint:
        if c3.alias != "D":
            continue
        for _, _, _, c5, letters in d5_pairs(curve, aliases):
            seen += 1
            assert any((s, c5.label) in keys for s in letters)
            if c5.type_number == 2:
                assert "e" in letters
    assert seen > 0


def test_unknown_lemma(census6):
    with pytest.raises(ConfigError):
        verify_lemma(census6, "nope")


def test_vacuous_flag():
    store = CensusStore({1: ["1+ 1+"]})
    r = verify_lemma(store, "u3-local")
    assert r.passed and r.vacuous and r.status == "vacuously consistent"


def test_failure_is_reported():
    store = CensusStore({1: ["1+ 1+"]})
    r = verify_lemma(store, "bound", cap=0, red=None)
    # a reducible curve has reductivity 0, within any cap
    assert r.passed
    torus = CensusStore({5: ["1+ 2- 3+ 4- 5+ 1+ 2- 3+ 4- 5+"]})
    r = verify_lemma(torus, "bound", cap=0)
    assert not r.passed and r.counterexamples


def test_theorem1_small(census6):
    report = theorem1_search(census6)
    assert report.witnesses == []
    assert report.lines() == ["thm1: none up to 6"]
