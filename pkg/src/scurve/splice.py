"""Inverse-half-twisted splices, reducibility and reductivity."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .curve import (
    TRIVIAL,
    CurveMap,
    canonical_code,
    faces,
    parse_signed_code,
)


class SpliceError(ValueError):
    pass


def nugatory_by_chords(curve: CurveMap) -> frozenset[str]:
    pos = curve.positions
    out = set()
    for c, (p, q) in pos.items():
        if not any((p < x < q) != (p < y < q) for d, (x, y) in pos.items() if d != c):
            out.add(c)
    return frozenset(out)


def nugatory_by_faces(curve: CurveMap) -> frozenset[str]:
    out = set()
    for face in faces(curve):
        seen = set()
        for c in face.corners:
            if c in seen:
                out.add(c)
            seen.add(c)
    return frozenset(out)


def nugatory_crossings(curve: CurveMap) -> frozenset[str]:
    """Crossings met by a circle that meets the curve nowhere else."""
    by_chords = nugatory_by_chords(curve)
    by_faces = nugatory_by_faces(curve)
    if by_chords != by_faces:
        raise AssertionError(f"nugatory tests disagree on {curve!r}: {by_chords} vs {by_faces}")
    return by_chords


def is_reducible(curve: CurveMap) -> bool:
    return curve.n > 0 and bool(nugatory_crossings(curve))


def is_reduced(curve: CurveMap) -> bool:
    # the trivial curve counts as reduced: no crossing exists to be cut off
    return not is_reducible(curve)


def _components(pairing, ends):
    """Number of closed components after joining segment ends by ``pairing``."""
    parent = {s: s for s in ends.values()}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for d1, d2 in pairing:
        parent[find(ends[d1])] = find(ends[d2])
    return len({find(s) for s in parent})


def hs_inverse(curve: CurveMap, crossing: str) -> CurveMap:
    """Splice ``crossing`` so that the curve stays a single closed curve.

    In the word model both occurrences of the crossing are deleted and the
    subword between them is reversed.
    """
    if crossing not in curve.positions:
        raise SpliceError(f"unknown crossing {crossing!r}")
    m = len(curve.word)
    p, q = curve.positions[crossing]
    inner = list(range(p + 1, q))
    outer = [(q + 1 + k) % m for k in range(m - (q - p) - 1)]
    # segment "inner" runs from dart 2p+1 to 2q, "outer" from 2q+1 to 2p
    ends = {2 * p + 1: "inner", 2 * q: "inner", 2 * q + 1: "outer", 2 * p: "outer"}
    rot = curve.rotations[curve.index[crossing]]
    single = []
    for shift in (0, 1):
        pairing = [(rot[shift], rot[(shift + 1) % 4]), (rot[(shift + 2) % 4], rot[(shift + 3) % 4])]
        if _components(pairing, ends) == 1:
            single.append(pairing)
    if len(single) != 1:
        raise AssertionError(f"{len(single)} connected smoothings at {crossing!r}")
    joined = {}
    for d1, d2 in single[0]:
        joined[d1], joined[d2] = d2, d1
    # the connected smoothing joins the two incoming ends: inner is run backwards
    assert joined[2 * p] == 2 * q
    visits = [(curve.word[i], 2 * i, 2 * i + 1) for i in outer]
    visits += [(curve.word[i], 2 * i + 1, 2 * i) for i in reversed(inner)]
    if not visits:
        return TRIVIAL
    rotation = {c: r for c, r in zip(curve.crossings, curve.rotations) if c != crossing}
    return CurveMap.from_visits(visits, rotation)


@dataclass(frozen=True)
class ReductivityResult:
    """``value`` is None when no reducible curve appears within ``cap`` splices."""

    value: int | None
    cap: int
    witness: tuple[str, ...] = field(default=())

    @property
    def exceeds_cap(self) -> bool:
        return self.value is None

    def __str__(self):
        if self.value is None:
            return f"exceeds-cap({self.cap})"
        return str(self.value)


@lru_cache(maxsize=None)
def _children(code: str) -> tuple[tuple[str, str], ...]:
    curve = parse_signed_code(code)
    return tuple((c, canonical_code(hs_inverse(curve, c))) for c in curve.crossings)


@lru_cache(maxsize=None)
def _reducible_code(code: str) -> bool:
    return is_reducible(parse_signed_code(code))


def reductivity(curve: CurveMap, cap: int = 4) -> ReductivityResult:
    """Breadth-first search for the fewest splices reaching a reducible curve.

    Nodes are canonical codes, so the witness labels refer to the canonical
    form of the curve at each step (crossings ``1..n`` in first-visit order).
    """
    if curve.n == 0:
        raise SpliceError("reductivity is undefined for the trivial curve")
    root = canonical_code(curve)
    level = {root: ()}
    seen = {root}
    for depth in range(cap + 1):
        hits = [path for code, path in level.items() if code and _reducible_code(code)]
        if hits:
            return ReductivityResult(depth, cap, min(hits, key=_path_key))
        if depth == cap:
            break
        nxt: dict[str, tuple[str, ...]] = {}
        for code, path in level.items():
            if not code:
                continue  # trivial curve: dead end
            for label, child in _children(code):
                if child in seen and child not in nxt:
                    continue
                cand = path + (label,)
                if child not in nxt or _path_key(cand) < _path_key(nxt[child]):
                    nxt[child] = cand
        seen.update(nxt)
        level = nxt
        if not level:
            break
    return ReductivityResult(None, cap)


def _path_key(path):
    return tuple(int(x) for x in path)


def apply_witness(curve: CurveMap, witness) -> CurveMap:
    """Replay a witness path, re-canonicalizing before each splice."""
    current = parse_signed_code(canonical_code(curve))
    for label in witness:
        current = parse_signed_code(canonical_code(hs_inverse(current, label)))
    return current


def reductivity_naive(curve: CurveMap, cap: int = 4) -> int | None:
    """Exhaustive splice search without deduplication; exponential."""

    def search(c: CurveMap, budget: int) -> int | None:
        if c.n == 0:
            return None
        if is_reducible(c):
            return 0
        if budget == 0:
            return None
        best = None
        for x in c.crossings:
            r = search(hs_inverse(c, x), budget - 1)
            if r is not None and (best is None or r + 1 < best):
                best = r + 1
        return best

    return search(curve, cap)
