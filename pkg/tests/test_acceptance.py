"""Acceptance criteria 1-11.

Each test records one line; ``conftest.pytest_terminal_summary`` prints them
after the run, and ``python tests/test_acceptance.py`` prints them directly.
"""

import time
from collections import Counter

import pytest

from oracles import chord_interleaving_nugatory, curve_map_form, spherical_curves
from scurve.census import CensusStore, build_census, enumerate_curves
from scurve.configs import build_u3_core, filter_classes_by_cyclic_triple, theorem1_search, verify_lemma
from scurve.curve import faces, parse_signed_code
from scurve.gons import (
    PHI,
    RHO,
    act_sequence,
    enumerate_gon_classes,
    named_element,
    pentagon_conformance,
    sequence_classes,
)
from scurve.splice import hs_inverse, is_reduced, nugatory_crossings, reductivity, reductivity_naive

RESULTS: dict[int, tuple[bool, str]] = {}


def record(k: int, ok: bool, detail: str):
    RESULTS[k] = (ok, detail)
    assert ok, f"criterion {k}: {detail}"


def summary_lines():
    return [f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}" for k, (ok, detail) in sorted(RESULTS.items())]


@pytest.fixture(scope="module")
def census7():
    return build_census(7)


def _slice(store, max_n, reduced=False):
    codes = {n: [c for c in store.codes[n] if not reduced or is_reduced(parse_signed_code(c))]
             for n in store.codes if n <= max_n}
    return CensusStore(codes, "reduced" if reduced else "all")


def test_c01_gon_atlas_counts():
    enumerate_gon_classes.cache_clear()
    sequence_classes.cache_clear()
    t0 = time.perf_counter()
    counts = {n: len(enumerate_gon_classes(n)) for n in (3, 4, 5)}
    split = Counter(c.type_number for c in enumerate_gon_classes(5))
    took = time.perf_counter() - t0
    ok = counts == {3: 4, 4: 13, 5: 56} and split == {1: 8, 2: 16, 3: 16, 4: 16} and took < 1
    record(1, ok, f"counts {counts}, 5-gon split {dict(sorted(split.items()))}, {took:.2f}s")


def test_c02_orbit_list_conformance():
    rows = pentagon_conformance()
    status = Counter(r.status for r in rows)
    flagged = [r.note for r in rows if r.status == "misprint"]
    ok = status == {"match": 55, "misprint": 1} and "acdba" in flagged[0]
    record(2, ok, f"{status['match']} classes match, flagged: {'; '.join(flagged)}")


def test_c03_worked_symmetry_identities():
    got = (act_sequence(named_element(RHO, False), "abced"),
           act_sequence(named_element(PHI[1], True), "abced"),
           act_sequence(named_element(PHI[2], True), "abced"))
    record(3, got == ("aebcd", "acbde", "aebcd"), f"rho, gamma.phi1, gamma.phi2 of abced -> {', '.join(got)}")


def test_c04_cyclic_order_filters():
    t0 = time.perf_counter()
    sizes = [len(filter_classes_by_cyclic_triple(t, tr)) for t, tr in ((2, "aed"), (4, "aed"), (4, "cde"), (4, "bdc"))]
    core = build_u3_core()
    took = time.perf_counter() - t0
    type4e = {c.label for c in filter_classes_by_cyclic_triple(4, "aed")}
    ok = (sizes == [8, 7, 8, 9] and len(core) == 32 and {m.gon5[0] for m in core.members} == {"2", "4"}
          and type4e == {"4abced", "4abedc", "4acbed", "4acebd", "4acedb", "4aecbd", "4aedcb"} and took < 1)
    record(4, ok, f"list sizes {sizes}, U3-core {len(core)} members, {took:.2f}s")


def test_c05_reductivity_bound(census7):
    report = verify_lemma(_slice(census7, 6), "bound")
    record(5, report.passed and report.hypothesis_met == 480,
           f"{report.checked} nontrivial curves n<=6, {report.notes[0]}, no exceeds-cap")


def test_c06_ast_lemma(census7):
    report = verify_lemma(_slice(census7, 6, reduced=True), "ast")
    record(6, report.passed and report.checked == 9,
           f"{report.checked} reduced nontrivial curves n<=6, {len(report.counterexamples)} counterexamples")


def test_c07_implications(census7):
    store = _slice(census7, 6)
    reports = [verify_lemma(store, lemma) for lemma in ("abc-implication", "4a-implication")]
    detail = "; ".join(f"{r.lemma} {r.status} (hypothesis met by {r.hypothesis_met})" for r in reports)
    record(7, all(r.passed for r in reports), detail)


def test_c08_u3_local(census7):
    r6 = verify_lemma(_slice(census7, 6), "u3-local")
    r7 = verify_lemma(census7, "u3-local")
    record(8, r6.passed and r7.passed,
           f"n<=6 {r6.status} ({r6.hypothesis_met} D/5-gon pairs); n<=7 {r7.status} ({r7.hypothesis_met} pairs)")


def test_c09_oracle_equivalences(census7):
    dual = all({curve_map_form(parse_signed_code(c)) for c in enumerate_curves(n)} == spherical_curves(n)
               for n in range(6))
    nug = all(set(nugatory_crossings(c)) == chord_interleaving_nugatory(c.word)
              for c in (parse_signed_code(code) for _, code in census7.curves()))
    small = [parse_signed_code(c) for n in range(1, 5) for c in enumerate_curves(n)]
    bfs = all(reductivity(c).value == reductivity_naive(c) for c in small)
    record(9, dual and nug and bfs,
           f"dual generator n<=5 {dual}, nugatory tests on {sum(census7.codes[n].__len__() for n in census7.codes)} curves {nug}, "
           f"BFS vs naive on {len(small)} curves {bfs}")


def test_c10_worked_small_cases(census7):
    tref = parse_signed_code("a+ b- c+ a+ b- c+")
    sizes = sorted(f.size for f in faces(tref))
    one = parse_signed_code("a+ a+")
    ok = (len(faces(tref)) == 5 and sizes == [2, 2, 2, 3, 3] and is_reduced(tref)
          and reductivity(tref).value == 1 and not is_reduced(one) and reductivity(one).value == 0)
    splices = 0
    for n, code in _slice(census7, 6).curves():
        curve = parse_signed_code(code)
        for x in curve.crossings:
            out = hs_inverse(curve, x)
            splices += 1
            ok &= out.n == n - 1 and out.genus == 0 and len(out.word) == 2 * (n - 1)
    record(10, ok, f"trefoil F=5 faces {sizes} reduced reductivity 1; a+ a+ reductivity 0; "
                   f"{splices} splices keep one spherical component")


def test_c11_theorem1_search(census7):
    t0 = time.perf_counter()
    report = theorem1_search(_slice(census7, 7, reduced=True))
    took = time.perf_counter() - t0
    ok = report.max_n == 7 and all(is_reduced(parse_signed_code(c)) for c, _ in report.witnesses)
    record(11, ok, f"{report.lines()[0]} ({took:.1f}s)")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
