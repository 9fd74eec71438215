"""Typed n-gons: side-direction patterns and visit-sequence classes.

A polygonal face with sides labeled ``a, b, c, ...`` in cyclic order gets a
bit per side (1 when the curve runs along the side in label direction) and
a cyclic visit sequence (the order in which the curve meets the sides).
The curve is always oriented so that side ``a`` carries bit 1.

Symmetries act on patterns as follows: rotations move bits, reflections
move and flip them, and reversing the curve (``gamma``) flips every bit and
reverses visit sequences.  A dihedral element belongs to a pattern's group
when it fixes the pattern outright (no ``gamma``) or maps it to its
complement (paired with ``gamma``).
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Sequence

from .curve import CurveMap, FacePolygon

LETTERS = string.ascii_lowercase


class GonError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetryElement:
    """A dihedral relabeling of the sides, optionally composed with curve reversal."""

    perm: tuple[int, ...]
    reflection: bool
    gamma: bool

    @property
    def n(self) -> int:
        return len(self.perm)

    def letter_map(self) -> dict[str, str]:
        return {LETTERS[i]: LETTERS[j] for i, j in enumerate(self.perm)}


@dataclass(frozen=True)
class DirectionPattern:
    bits: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class GonClass:
    n: int
    type_number: int
    sequence: str
    alias: str | None = None

    @property
    def label(self) -> str:
        return f"{self.type_number}{self.sequence}"

    def __str__(self):
        return self.label


def dihedral(n: int) -> list[tuple[tuple[int, ...], bool]]:
    """Rotations ``i -> i+k`` and reflections ``i -> k-i`` on side positions."""
    out = []
    for k in range(n):
        out.append((tuple((i + k) % n for i in range(n)), False))
    for k in range(n):
        out.append((tuple((k - i) % n for i in range(n)), True))
    return out


def act_bits(perm: Sequence[int], reflection: bool, bits: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(bits)
    for i, b in enumerate(bits):
        out[perm[i]] = b ^ reflection
    return tuple(out)


def _complement(bits):
    return tuple(1 - b for b in bits)


def pattern_orbit(bits: Sequence[int]) -> frozenset[tuple[int, ...]]:
    orbit = set()
    for perm, refl in dihedral(len(bits)):
        moved = act_bits(perm, refl, bits)
        orbit.add(moved)
        orbit.add(_complement(moved))
    return frozenset(orbit)


def aligned_pattern(bits: Sequence[int]) -> tuple[int, ...]:
    """Preferred labeling of a pattern class: the greatest member read from ``a``.

    For pentagons this picks exactly the labelings whose reflection symmetry
    fixes side e, b, d for the second, third and fourth class.
    """
    return max(pattern_orbit(bits))


@lru_cache(maxsize=None)
def orientation_types(n: int) -> tuple[DirectionPattern, ...]:
    """One aligned pattern per orientation type, listed by type number."""
    if n < 2:
        raise GonError("gons need at least two sides")
    reps = {aligned_pattern(bits) for bits in itertools.product((0, 1), repeat=n)}
    return tuple(DirectionPattern(b) for b in sorted(reps, reverse=True))


def type_number(bits: Sequence[int]) -> int:
    al = aligned_pattern(bits)
    for k, pat in enumerate(orientation_types(len(bits)), start=1):
        if pat.bits == al:
            return k
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def pattern_group(pattern: DirectionPattern) -> tuple[SymmetryElement, ...]:
    out = []
    for perm, refl in dihedral(pattern.n):
        moved = act_bits(perm, refl, pattern.bits)
        if moved == pattern.bits:
            out.append(SymmetryElement(perm, refl, False))
        elif _complement(moved) == pattern.bits:
            out.append(SymmetryElement(perm, refl, True))
    return tuple(out)


def normalize(seq: str) -> str:
    """Rotate a cyclic sequence so that it starts at ``a``."""
    i = seq.index("a")
    return seq[i:] + seq[:i]


def act_sequence(g: SymmetryElement, seq: str) -> str:
    """Relabel letterwise, reverse when ``gamma`` is set, renormalize."""
    moved = "".join(LETTERS[g.perm[LETTERS.index(x)]] for x in seq)
    if g.gamma:
        moved = moved[::-1]
    return normalize(moved)


def standard_sequences(n: int) -> list[str]:
    return ["a" + "".join(p) for p in itertools.permutations(LETTERS[1:n])]


@lru_cache(maxsize=None)
def sequence_classes(pattern: DirectionPattern) -> tuple[tuple[str, ...], ...]:
    """Orbits of standard sequences under the pattern's group, sorted by minimum."""
    group = pattern_group(pattern)
    seen = set()
    orbits = []
    for s in standard_sequences(pattern.n):
        if s in seen:
            continue
        orbit = tuple(sorted({act_sequence(g, s) for g in group}))
        seen.update(orbit)
        orbits.append(orbit)
    return tuple(sorted(orbits))


@lru_cache(maxsize=None)
def enumerate_gon_classes(n: int) -> tuple[GonClass, ...]:
    out = []
    for t, pat in enumerate(orientation_types(n), start=1):
        for orbit in sequence_classes(pat):
            out.append(GonClass(n, t, orbit[0]))
    return tuple(out)


def class_by_label(label: str) -> GonClass:
    t, seq = int(label[0]), label[1:]
    n = len(seq)
    for cls in enumerate_gon_classes(n):
        if cls.type_number == t and cls.sequence == seq:
            return cls
    raise GonError(f"no gon class labeled {label!r}")


def class_orbit(cls: GonClass) -> tuple[str, ...]:
    pat = orientation_types(cls.n)[cls.type_number - 1]
    for orbit in sequence_classes(pat):
        if orbit[0] == cls.sequence:
            return orbit
    raise GonError(f"unknown class {cls.label}")


# Named pentagon symmetries, as permutations of the letters a..e.
RHO = "bcdea"
PHI = {1: "aedcb", 2: "dcbae", 3: "cbaed", 4: "baedc"}


def named_element(images: str, gamma: bool) -> SymmetryElement:
    perm = tuple(LETTERS.index(x) for x in images)
    n = len(perm)
    reflection = perm != tuple((i + perm[0]) % n for i in range(n))
    return SymmetryElement(perm, reflection, gamma)


@dataclass(frozen=True)
class Labeling:
    """One way of naming a face's sides; ``edges[j]`` is the edge given letter j."""

    sequence: str
    edges: tuple[int, ...]
    gamma: bool

    def letter_of(self, edge: int) -> str:
        return LETTERS[self.edges.index(edge)]


def face_labelings(face: FacePolygon) -> list[Labeling]:
    """All labelings of a polygonal face that realize its aligned pattern."""
    if not face.polygonal:
        raise GonError("gon classification needs a polygonal face")
    n = face.size
    target = aligned_pattern(face.directions)
    out = []
    for start in range(n):
        for step in (1, -1):
            idx = [(start + step * j) % n for j in range(n)]
            bits = tuple(face.directions[i] if step == 1 else 1 - face.directions[i] for i in idx)
            for gamma in (False, True):
                b = _complement(bits) if gamma else bits
                if b != target:
                    continue
                edges = tuple(face.sides[i] for i in idx)
                # the traversal meets edges in increasing index order
                order = sorted(range(n), key=lambda j: edges[j])
                seq = "".join(LETTERS[j] for j in order)
                if gamma:
                    seq = seq[::-1]
                out.append(Labeling(normalize(seq), edges, gamma))
    return out


def classify_face(face: FacePolygon, aliases: dict | None = None) -> GonClass:
    labelings = face_labelings(face)
    seq = min(lab.sequence for lab in labelings)
    cls = GonClass(face.size, type_number(face.directions), seq)
    if aliases:
        cls = GonClass(cls.n, cls.type_number, cls.sequence, aliases.get((cls.n, cls.label)))
    return cls


def classify_gon(curve: CurveMap, face: FacePolygon, aliases: dict | None = None) -> GonClass:
    # the curve argument documents provenance; the face carries everything needed
    return classify_face(face, aliases)


@dataclass(frozen=True)
class GonFragment:
    """Partial chord diagram of a gon.

    ``points`` are the 2n chord endpoints in curve order, named by corner
    (corner ``i`` joins sides ``i-1`` and ``i``); the arc from point ``2k``
    to point ``2k+1`` is side ``sides[k]`` and holds no other endpoint.
    """

    points: tuple[int, ...]
    sides: str

    @property
    def n(self) -> int:
        return len(self.sides)

    def chords(self) -> list[tuple[int, int]]:
        where: dict[int, list[int]] = {}
        for i, c in enumerate(self.points):
            where.setdefault(c, []).append(i)
        return [tuple(where[c]) for c in sorted(where)]

    def canonical(self) -> tuple[int, ...]:
        """Shape up to rotating by whole sides, reversal and corner renaming."""
        m = len(self.points)
        best = None
        for shift in range(0, m, 2):
            for rev in (False, True):
                pts = self.points[shift:] + self.points[:shift]
                if rev:
                    pts = pts[::-1]
                names: dict[int, int] = {}
                form = tuple(names.setdefault(c, len(names)) for c in pts)
                if best is None or form < best:
                    best = form
        return best


def gon_chord_presentation(cls: GonClass) -> GonFragment:
    bits = orientation_types(cls.n)[cls.type_number - 1].bits
    n = cls.n
    points = []
    for x in cls.sequence:
        j = LETTERS.index(x)
        start, end = j, (j + 1) % n
        if not bits[j]:
            start, end = end, start
        points += [start, end]
    return GonFragment(tuple(points), cls.sequence)


def _printed_lists_path():
    return resources.files("scurve") / "data" / "pentagon_classes.txt"


@lru_cache(maxsize=None)
def published_pentagon_lists() -> dict[int, tuple[tuple[str, ...], ...]]:
    """The printed class lists for the four pentagon types, verbatim."""
    out = {}
    for line in _printed_lists_path().read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, body = line.partition(":")
        classes = tuple(tuple(s.strip() for s in item.split("=")) for item in body.split(","))
        out[int(key)] = classes
    return out


@dataclass(frozen=True)
class ConformanceRow:
    type_number: int
    printed: tuple[str, ...]
    computed: tuple[str, ...] | None
    status: str  # "match", "misprint" or "mismatch"
    note: str = ""


def pentagon_conformance() -> list[ConformanceRow]:
    """Compare computed pentagon orbits with the printed lists, class by class.

    A printed member that is not a standard sequence is reported as a
    misprint when the rest of its class lies inside one computed orbit of
    the same size.
    """
    valid = set(standard_sequences(5))
    rows = []
    for t, printed in published_pentagon_lists().items():
        orbits = {frozenset(o): o for o in sequence_classes(orientation_types(5)[t - 1])}
        for cls in printed:
            members = frozenset(cls)
            if members in orbits:
                rows.append(ConformanceRow(t, cls, orbits[members], "match"))
                continue
            good = {s for s in cls if s in valid}
            bad = [s for s in cls if s not in valid]
            hosts = [o for o in orbits.values() if good <= set(o) and len(o) == len(cls)]
            if bad and len(hosts) == 1:
                fix = sorted(set(hosts[0]) - good)
                note = f"{'/'.join(bad)} is not a standard sequence; orbit computes {'/'.join(fix)}"
                rows.append(ConformanceRow(t, cls, hosts[0], "misprint", note))
            else:
                rows.append(ConformanceRow(t, cls, None, "mismatch"))
    return rows


@dataclass(frozen=True)
class TypeAssignment:
    type_number: int
    pattern: DirectionPattern
    fixed_letters: str
    matches_printed_list: bool
    misprints: int


def type_assignment(n: int) -> list[TypeAssignment]:
    """Type numbers with their aligned patterns, validated for pentagons.

    For ``n = 5`` each aligned pattern's orbit partition must reproduce the
    printed list with the same type number (misprints excepted) and its
    reflection must be the named one; anything else is an error.
    """
    if n not in (3, 4, 5):
        raise GonError("type assignment is defined for 3-, 4- and 5-gons")
    out = []
    conformance = pentagon_conformance() if n == 5 else []
    for t, pat in enumerate(orientation_types(n), start=1):
        group = pattern_group(pat)
        fixed = "".join(sorted({LETTERS[i] for g in group if g.reflection
                                for i in range(n) if g.perm[i] == i}))
        ok, misprints = True, 0
        if n == 5:
            rows = [r for r in conformance if r.type_number == t]
            ok = all(r.status in ("match", "misprint") for r in rows)
            misprints = sum(r.status == "misprint" for r in rows)
            covered = {s for r in rows if r.computed for s in r.computed}
            ok = ok and covered == set(standard_sequences(5))
            named = named_element(PHI[t], True)
            ok = ok and named in group
            if t == 1:
                ok = ok and named_element(RHO, False) in group
            if not ok:
                raise GonError(f"pentagon type {t}: computed orbits do not reproduce the printed list")
        out.append(TypeAssignment(t, pat, fixed, ok, misprints))
    return out


def load_alias_table(path: str | Path | None = None) -> dict[tuple[int, str], str]:
    """Read ``alias.<n>gon.<label> = <letter>`` lines."""
    if path is None:
        text = (resources.files("scurve") / "data" / "aliases.conf").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    table = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        parts = key.strip().split(".")
        if not sep or len(parts) != 3 or parts[0] != "alias" or not parts[1].endswith("gon"):
            raise GonError(f"alias table line {lineno}: cannot parse {line!r}")
        n = int(parts[1][:-3])
        table[(n, parts[2])] = value.strip()
    for n in {k[0] for k in table}:
        letters = [v for k, v in table.items() if k[0] == n]
        if len(letters) != len(set(letters)):
            raise GonError(f"alias table maps two {n}-gon classes to one letter")
    return table


def unverified_aliases(path: str | Path | None = None) -> set[tuple[int, str]]:
    """Entries flagged ``# unverified`` in the alias table."""
    if path is None:
        text = (resources.files("scurve") / "data" / "aliases.conf").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    out = set()
    for line in text.splitlines():
        body, _, comment = line.partition("#")
        if "unverified" in comment and "=" in body:
            key = body.split("=")[0].strip().split(".")
            out.add((int(key[1][:-3]), key[2]))
    return out


def alias(cls: GonClass, table: dict[tuple[int, str], str]) -> str | None:
    return table.get((cls.n, cls.label))
