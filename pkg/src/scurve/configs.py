"""Gon-adjacency configurations and census-wide lemma checks.

The type-D 3-gon is derived rather than assumed: a 3-gon glued to a 5-gon
is closed up into real curves in every possible way (see
:mod:`scurve.realize`), both faces are classified, and the one 3-gon class
whose 5-gon neighbours reproduce the shipped U3-core lists is D.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .census import CensusStore
from .curve import CurveMap, FacePolygon, faces, mirror, parse_signed_code
from .gons import (
    LETTERS,
    GonClass,
    classify_face,
    class_by_label,
    enumerate_gon_classes,
    face_labelings,
    load_alias_table,
    unverified_aliases,
)
from .splice import ReductivityResult, is_reduced, reductivity

log = logging.getLogger(__name__)

LEMMAS = ("ast", "abc-implication", "4a-implication", "bound", "u3-local")

# (5-gon type, shared side, cyclic triple the 5-gon sequence must contain)
U3_CASES = (
    (2, "e", "aed"),
    (4, "e", "aed"),
    (4, "d", "cde"),
    (4, "c", "bdc"),
)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Configuration:
    gon3: str
    shared_side: str
    gon5: str
    provenance: str = ""

    def __post_init__(self):
        cls = class_by_label(self.gon5)
        if cls.n != 5:
            raise ConfigError(f"{self.gon5} is not a 5-gon class")
        if (cls.type_number, self.shared_side) not in {(t, s) for t, s, _ in U3_CASES}:
            raise ConfigError(f"type {cls.type_number} cannot share side {self.shared_side}")

    def line(self) -> str:
        return f"{self.gon3} share={self.shared_side} 5gon={self.gon5}"


@dataclass
class ConfigurationSet:
    name: str
    members: list[Configuration] = field(default_factory=list)

    def __len__(self):
        return len(self.members)

    def keys(self) -> set[tuple[str, str]]:
        return {(c.shared_side, c.gon5) for c in self.members}

    def dumps(self) -> str:
        return f"# name={self.name}\n" + "".join(c.line() + "\n" for c in self.members)


def loads_configs(text: str, name: str = "user") -> ConfigurationSet:
    out = ConfigurationSet(name)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("# name="):
            out.name = line[len("# name="):].strip()
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            fields = dict(p.split("=", 1) for p in parts[1:])
            out.members.append(Configuration(parts[0], fields["share"], fields["5gon"]))
        except (ValueError, KeyError) as exc:
            raise ConfigError(f"line {lineno}: cannot parse {raw!r} ({exc})") from None
    return out


def load_configs(path: str | Path) -> ConfigurationSet:
    return loads_configs(Path(path).read_text(encoding="utf-8"), Path(path).stem)


def contains_cyclic(seq: str, triple: Sequence[str]) -> bool:
    x, y, z = (seq.index(t) for t in triple)
    return (x < y < z) or (y < z < x) or (z < x < y)


def filter_classes_by_cyclic_triple(type_number: int, triple: Sequence[str]) -> list[GonClass]:
    """5-gon classes of a type whose standard representative has ``triple`` in cyclic order.

    The representative is the lexicographically least standard sequence of
    the class; the predicate is not orbit-constant for every type (see
    :func:`orbit_inconsistent_classes`).
    """
    if len(set(triple)) != 3 or not set(triple) <= set(LETTERS[:5]):
        raise ConfigError(f"bad triple {triple!r}")
    return [c for c in enumerate_gon_classes(5)
            if c.type_number == type_number and contains_cyclic(c.sequence, triple)]


def orbit_inconsistent_classes(type_number: int, triple: Sequence[str]) -> list[GonClass]:
    """Classes whose member sequences disagree on the triple predicate."""
    from .gons import class_orbit

    out = []
    for c in enumerate_gon_classes(5):
        if c.type_number != type_number:
            continue
        values = {contains_cyclic(s, triple) for s in class_orbit(c)}
        if len(values) > 1:
            out.append(c)
    return out


def build_u3_core(gon3: str = "D") -> ConfigurationSet:
    out = ConfigurationSet("U3-core")
    for t, side, triple in U3_CASES:
        for cls in filter_classes_by_cyclic_triple(t, triple):
            out.members.append(Configuration(gon3, side, cls.label, f"type{t}/{side}"))
    return out


def shipped_u3_core_text() -> str:
    return (resources.files("scurve") / "data" / "u3_core.txt").read_text(encoding="utf-8")


# ---------------------------------------------------------------------------
# type-D derivation


def shared_letters(face5: FacePolygon, edge: int, cls: GonClass) -> set[str]:
    """Letters the edge can carry under labelings that realize ``cls``."""
    return {lab.letter_of(edge) for lab in face_labelings(face5) if lab.sequence == cls.sequence}


@dataclass
class TypeDDerivation:
    label: str
    # per 3-gon class: {(5-gon type, shared letter): {5-gon class labels}}
    table: dict[str, dict[tuple[int, str], set[str]]]
    type_candidates: list[str]
    list_candidates: list[str]

    def diagnostics(self) -> list[str]:
        lines = []
        for c3, rows in sorted(self.table.items()):
            cells = " ".join(f"{t}{s}:{len(v)}" for (t, s), v in sorted(rows.items()))
            lines.append(f"{c3}: {cells}")
        lines.append(f"type-compatible candidates: {' '.join(self.type_candidates) or 'none'}")
        lines.append(f"list-compatible candidates: {' '.join(self.list_candidates) or 'none'}")
        return lines


@lru_cache(maxsize=2)
def _joint_table(mirrored: bool) -> dict[str, dict[tuple[int, str], frozenset[str]]]:
    from .realize import joint_realizations

    table: dict[str, dict[tuple[int, str], set[str]]] = defaultdict(lambda: defaultdict(set))
    for real, shared in joint_realizations(3, 5):
        curve = real.curve
        f3, f5 = real.polygon_face(0), real.polygon_face(1)
        edge = real.side_edges[shared]
        if mirrored:
            curve, f3, f5 = _mirrored_faces(curve, f3, f5)
        c3, c5 = classify_face(f3), classify_face(f5)
        for letter in shared_letters(f5, edge, c5):
            table[c3.label][(c5.type_number, letter)].add(c5.label)
    return {k: {kk: frozenset(vv) for kk, vv in v.items()} for k, v in table.items()}


def _mirrored_faces(curve, f3, f5):
    m = mirror(curve)
    by_sides = {frozenset(f.sides): f for f in faces(m)}
    return m, by_sides[frozenset(f3.sides)], by_sides[frozenset(f5.sides)]


def derive_type_d_alias(mirrored: bool = False) -> TypeDDerivation:
    """Find the 3-gon class whose 5-gon neighbours are exactly the U3-core cases.

    First filter: sharing a side must be possible only with type-2 5-gons
    through side e and type-4 5-gons through sides e, d and c.  Second
    filter: for each of those four cases the 5-gon classes that occur must be
    exactly the U3-core lists.  Anything but one survivor is fatal.
    """
    table = {k: {kk: set(vv) for kk, vv in v.items()} for k, v in _joint_table(mirrored).items()}
    wanted = {(t, s) for t, s, _ in U3_CASES}
    type_candidates = sorted(c for c, rows in table.items() if set(rows) == wanted)
    core = defaultdict(set)
    for m in build_u3_core().members:
        core[(class_by_label(m.gon5).type_number, m.shared_side)].add(m.gon5)
    list_candidates = [c for c in type_candidates if table[c] == dict(core)]
    label = list_candidates[0] if len(list_candidates) == 1 else ""
    result = TypeDDerivation(label, table, type_candidates, list_candidates)
    if not label:
        raise ConfigError("type-D derivation is not unique:\n" + "\n".join(result.diagnostics()))
    return result


# ---------------------------------------------------------------------------
# matching


@dataclass(frozen=True)
class Match:
    face3: int
    face5: int
    edge: int


def _classified_faces(curve: CurveMap, aliases: dict):
    out = []
    for i, f in enumerate(faces(curve)):
        if f.polygonal and f.size >= 2:
            out.append((i, f, classify_face(f, aliases)))
    return out


def _alias_class(aliases: dict, n: int, letter: str) -> str | None:
    for (k, label), value in aliases.items():
        if k == n and value == letter:
            return label
    return None


def match_configuration(curve: CurveMap, config: Configuration,
                        aliases: dict | None = None) -> list[Match]:
    aliases = load_alias_table() if aliases is None else aliases
    target3 = _alias_class(aliases, 3, config.gon3) or config.gon3
    target5 = class_by_label(config.gon5)
    found = _classified_faces(curve, aliases)
    out = []
    for i3, f3, c3 in found:
        if f3.size != 3 or c3.label != target3:
            continue
        for i5, f5, c5 in found:
            if f5.size != 5 or c5.label != target5.label:
                continue
            for edge in sorted(set(f3.sides) & set(f5.sides)):
                if config.shared_side in shared_letters(f5, edge, c5):
                    out.append(Match(i3, i5, edge))
    return out


def d5_pairs(curve: CurveMap, aliases: dict):
    """Every (D 3-gon, 5-gon, shared edge) adjacency with the 5-gon's class and letters."""
    d_label = _alias_class(aliases, 3, "D")
    found = _classified_faces(curve, aliases)
    for i3, f3, c3 in found:
        if f3.size != 3 or c3.label != d_label:
            continue
        for i5, f5, c5 in found:
            if f5.size != 5:
                continue
            for edge in sorted(set(f3.sides) & set(f5.sides)):
                yield i3, i5, edge, c5, shared_letters(f5, edge, c5)


# ---------------------------------------------------------------------------
# census verification


@dataclass
class LemmaReport:
    lemma: str
    checked: int = 0
    hypothesis_met: int = 0
    counterexamples: list[str] = field(default_factory=list)
    conditional: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def vacuous(self) -> bool:
        return self.passed and self.hypothesis_met == 0

    @property
    def status(self) -> str:
        if not self.passed:
            return "fail"
        if self.vacuous:
            return "vacuously consistent"
        return "pass (conditional on alias table)" if self.conditional else "pass"

    def lines(self) -> list[str]:
        out = [f"{self.lemma}: {self.status} checked={self.checked} hypothesis={self.hypothesis_met}"]
        out += [f"  counterexample {c}" for c in self.counterexamples]
        out += [f"  note: {n}" for n in self.notes]
        return out


def _reductivity_of(code: str, cap: int) -> ReductivityResult:
    return reductivity(parse_signed_code(code), cap)


def reductivities(codes: Sequence[str], cap: int = 4, jobs: int = 1) -> dict[str, ReductivityResult]:
    nontrivial = [c for c in codes if c]
    if jobs > 1 and len(nontrivial) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_reductivity_of, nontrivial, [cap] * len(nontrivial), chunksize=8))
    else:
        values = [_reductivity_of(c, cap) for c in nontrivial]
    return dict(zip(nontrivial, values))


def _implication(report: LemmaReport, codes, has_hypothesis, red, cap):
    for code in codes:
        if not code:
            continue
        report.checked += 1
        if has_hypothesis(code):
            report.hypothesis_met += 1
            r = red[code]
            if r.value is None or r.value > 3:
                report.counterexamples.append(f"{code} reductivity={r}")


def verify_lemma(store: CensusStore, lemma: str, cap: int = 4, aliases: dict | None = None,
                 unverified: set | None = None, jobs: int = 1,
                 red: dict[str, ReductivityResult] | None = None,
                 core: ConfigurationSet | None = None) -> LemmaReport:
    if lemma not in LEMMAS:
        raise ConfigError(f"unknown lemma {lemma!r}; expected one of {', '.join(LEMMAS)}")
    if aliases is None:
        aliases = load_alias_table()
        unverified = unverified_aliases() if unverified is None else unverified
    unverified = unverified or set()
    codes = [code for _, code in store.curves()]
    report = LemmaReport(lemma)
    curves = {code: parse_signed_code(code) for code in codes}

    def classes(code, n):
        return {c.label for _, f, c in _classified_faces(curves[code], aliases) if f.size == n}

    def two_gon(code):
        return any(f.polygonal and f.size == 2 for f in faces(curves[code]))

    if lemma in ("bound", "abc-implication", "4a-implication") and red is None:
        red = reductivities(codes, cap, jobs)

    if lemma == "ast":
        for code in codes:
            curve = curves[code]
            if curve.n == 0 or not is_reduced(curve):
                continue
            report.checked += 1
            report.hypothesis_met += 1
            if not any(f.polygonal and f.size in (2, 3) for f in faces(curve)):
                report.counterexamples.append(code)
    elif lemma == "bound":
        for code in codes:
            if not code:
                continue
            report.checked += 1
            report.hypothesis_met += 1
            if red[code].value is None:
                report.counterexamples.append(f"{code} reductivity={red[code]}")
        values = [r.value for r in red.values() if r.value is not None]
        if values:
            report.notes.append(f"largest reductivity seen: {max(values)}")
    elif lemma == "abc-implication":
        d_label = _alias_class(aliases, 3, "D")
        abc = {_alias_class(aliases, 3, x) for x in "ABC"} - {None}
        others = {c.label for c in enumerate_gon_classes(3)} - {d_label}
        if abc == others and d_label is not None and (3, d_label) not in unverified:
            report.notes.append("A, B, C used only as the set of non-D 3-gon classes")
        else:
            report.conditional = any((3, label) in unverified for label in abc | {d_label})
        _implication(report, codes, lambda c: two_gon(c) or bool(classes(c, 3) & abc), red, cap)
    elif lemma == "4a-implication":
        target = _alias_class(aliases, 4, "4a")
        if target is None:
            raise ConfigError("alias table has no 4a entry")
        _implication(report, codes, lambda c: target in classes(c, 4), red, cap)
        # the check is alias-free when it holds for every candidate class
        robust = True
        for cls in enumerate_gon_classes(4):
            probe = LemmaReport(lemma)
            _implication(probe, codes, lambda c, lab=cls.label: lab in classes(c, 4), red, cap)
            robust &= probe.passed
        if robust:
            report.notes.append("holds whichever 4-gon class carries the 4a alias")
        else:
            report.conditional = (4, target) in unverified
    elif lemma == "u3-local":
        core_set = build_u3_core() if core is None else core
        keys = core_set.keys()
        if core is not None:
            report.notes.append(f"configuration set {core_set.name} ({len(core_set)} members)")
        for code in codes:
            report.checked += 1
            for _, _, edge, c5, letters in d5_pairs(curves[code], aliases):
                report.hypothesis_met += 1
                if not any((s, c5.label) in keys for s in letters):
                    report.counterexamples.append(f"{code} edge={edge} 5gon={c5.label} sides={''.join(sorted(letters))}")
                elif c5.type_number == 2 and "e" not in letters:
                    report.counterexamples.append(f"{code} type-2 5-gon shares side {''.join(sorted(letters))}")
        d_label = _alias_class(aliases, 3, "D")
        report.conditional = (3, d_label) in unverified
    return report


@dataclass
class Theorem1Report:
    max_n: int
    witnesses: list[tuple[str, ReductivityResult]]

    @property
    def min_n(self) -> int | None:
        return min((parse_signed_code(c).n for c, _ in self.witnesses), default=None)

    def lines(self) -> list[str]:
        if not self.witnesses:
            return [f"thm1: none up to {self.max_n}"]
        out = [f"thm1: {len(self.witnesses)} witnesses, smallest n={self.min_n}"]
        out += [f"  witness {code} reductivity={r}" for code, r in self.witnesses]
        return out


def is_theorem1_witness(curve: CurveMap, d_label: str) -> bool:
    if curve.n == 0 or not is_reduced(curve):
        return False
    for f in faces(curve):
        if f.size == 2:
            return False
        if f.size == 3 and f.polygonal and classify_face(f).label != d_label:
            return False
    return True


def theorem1_search(store: CensusStore, aliases: dict | None = None, cap: int = 4) -> Theorem1Report:
    aliases = load_alias_table() if aliases is None else aliases
    d_label = _alias_class(aliases, 3, "D")
    if d_label is None:
        raise ConfigError("alias table has no D entry")
    witnesses = []
    for _, code in store.curves():
        curve = parse_signed_code(code)
        if is_theorem1_witness(curve, d_label):
            witnesses.append((code, reductivity(curve, cap)))
    return Theorem1Report(store.max_n, witnesses)


def summarize(reports: Iterable[LemmaReport]) -> tuple[int, int, int]:
    """(pass, fail, vacuous); a vacuous check counts as a pass as well."""
    reports = list(reports)
    return (sum(r.passed for r in reports), sum(not r.passed for r in reports),
            sum(r.vacuous for r in reports))
