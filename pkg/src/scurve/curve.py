"""Spherical curves as combinatorial maps.

A curve with ``n`` crossings is stored by its traversal word (the crossing
label met at each of the ``2n`` traversal positions) together with a
rotation system: for every crossing, the counterclockwise cyclic order of
its four darts.

Dart numbering is positional.  At traversal position ``i`` the curve
arrives on dart ``2*i`` and leaves on dart ``2*i + 1``; edge ``i`` runs from
dart ``2*i + 1`` to dart ``2*(i + 1)``.

Sign convention for the serialized code: with first visit ``(in1, out1)``
and second visit ``(in2, out2)`` at a crossing, ``+`` means the
counterclockwise rotation is ``(in1, in2, out1, out2)`` and ``-`` means
``(in1, out2, out1, in2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

_TOKEN = re.compile(r"^([A-Za-z0-9_]+)([+-])$")


class CodeError(ValueError):
    """Raised for malformed or non-spherical signed Gauss codes."""


@dataclass(frozen=True)
class SignedGaussCode:
    """A double-occurrence word with one sign per crossing."""

    tokens: tuple[tuple[str, str], ...]

    def __post_init__(self):
        seen: dict[str, list[str]] = {}
        for label, sign in self.tokens:
            if sign not in "+-" or len(sign) != 1:
                raise CodeError(f"bad sign {sign!r} on crossing {label!r}")
            seen.setdefault(label, []).append(sign)
        for label, signs in seen.items():
            if len(signs) != 2:
                raise CodeError(f"crossing {label!r} occurs {len(signs)} times, expected 2")
            if signs[0] != signs[1]:
                raise CodeError(f"sign mismatch on crossing {label!r}")

    @classmethod
    def parse(cls, text: str) -> "SignedGaussCode":
        tokens = []
        for raw in text.split():
            m = _TOKEN.match(raw)
            if m is None:
                raise CodeError(f"malformed token {raw!r}")
            tokens.append((m.group(1), m.group(2)))
        return cls(tuple(tokens))

    @property
    def word(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.tokens)

    @property
    def signs(self) -> dict[str, str]:
        return {label: sign for label, sign in self.tokens}

    def __str__(self) -> str:
        return " ".join(f"{label}{sign}" for label, sign in self.tokens)


def _alpha(m: int) -> list[int]:
    """Edge involution on the ``2m`` darts of a curve with ``m`` positions."""
    alpha = [0] * (2 * m)
    for i in range(m):
        j = (i + 1) % m
        alpha[2 * i + 1] = 2 * j
        alpha[2 * j] = 2 * i + 1
    return alpha


def _rotation(p: int, q: int, plus: bool) -> tuple[int, int, int, int]:
    if plus:
        return (2 * p, 2 * q, 2 * p + 1, 2 * q + 1)
    return (2 * p, 2 * q + 1, 2 * p + 1, 2 * q)


def _face_orbits(sigma: Sequence[int], alpha: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(sigma)
    orbits = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = sigma[alpha[d]]
        orbits.append(orbit)
    return orbits


def count_faces(word: Sequence[int], plus: Sequence[bool]) -> int:
    """Face count of the map given by an integer word and per-crossing signs.

    Hot path of the census: no objects are built.
    """
    m = len(word)
    if m == 0:
        return 2
    first = [-1] * (m // 2)
    sigma = [0] * (2 * m)
    for i, c in enumerate(word):
        p = first[c]
        if p < 0:
            first[c] = i
            continue
        q = i
        if plus[c]:
            sigma[2 * p] = 2 * q
            sigma[2 * q] = 2 * p + 1
            sigma[2 * p + 1] = 2 * q + 1
            sigma[2 * q + 1] = 2 * p
        else:
            sigma[2 * p] = 2 * q + 1
            sigma[2 * q + 1] = 2 * p + 1
            sigma[2 * p + 1] = 2 * q
            sigma[2 * q] = 2 * p
    seen = bytearray(2 * m)
    faces = 0
    last = 2 * m - 1
    for start in range(2 * m):
        if seen[start]:
            continue
        faces += 1
        d = start
        while not seen[d]:
            seen[d] = 1
            # alpha inlined: odd darts step forward, even darts step back
            if d & 1:
                a = d + 1 if d != last else 0
            else:
                a = d - 1 if d else last
            d = sigma[a]
    return faces


@dataclass(frozen=True)
class FacePolygon:
    """One complementary region, traced as a cyclic list of sides.

    ``corners[i]`` is the crossing where side ``i`` starts in the tracing
    direction; ``directions[i]`` is 1 when the curve runs along side ``i``
    in the tracing direction.
    """

    size: int
    sides: tuple[int, ...]
    corners: tuple[str, ...]
    directions: tuple[int, ...]
    polygonal: bool


@dataclass(frozen=True)
class ChordDiagram:
    points: tuple[str, ...]
    chords: tuple[tuple[str, int, int], ...]

    @cached_property
    def chord_map(self) -> dict[str, tuple[int, int]]:
        return {label: (p, q) for label, p, q in self.chords}

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _, _ in self.chords)


@dataclass(frozen=True, eq=False)
class CurveMap:
    """A spherical curve: traversal word plus rotation system.

    ``rotations[k]`` is the counterclockwise dart order at crossing
    ``crossings[k]``; crossings are listed in first-visit order.
    """

    word: tuple[str, ...]
    crossings: tuple[str, ...]
    rotations: tuple[tuple[int, int, int, int], ...]

    @classmethod
    def from_code(cls, code: SignedGaussCode | str, check: bool = True) -> "CurveMap":
        if isinstance(code, str):
            code = SignedGaussCode.parse(code)
        signs = code.signs
        word = code.word
        first: dict[str, int] = {}
        rot: dict[str, tuple[int, int, int, int]] = {}
        for i, label in enumerate(word):
            if label in first:
                rot[label] = _rotation(first[label], i, signs[label] == "+")
            else:
                first[label] = i
        crossings = tuple(first)
        curve = cls(word, crossings, tuple(rot[c] for c in crossings))
        if check and curve.genus != 0:
            raise CodeError(f"non-spherical code (genus {curve.genus}): {code}")
        return curve

    @classmethod
    def from_visits(cls, visits: Sequence[tuple[str, object, object]],
                    rotation: dict[str, tuple]) -> "CurveMap":
        """Build a curve from a traversal expressed in foreign dart names.

        ``visits`` lists ``(crossing, in_dart, out_dart)`` in traversal order
        and ``rotation`` gives each crossing's counterclockwise order in the
        same dart names.  Signs are recomputed from the rotations.
        """
        firsts: dict[str, tuple] = {}
        seconds: dict[str, tuple] = {}
        for label, din, dout in visits:
            if label in firsts:
                if label in seconds:
                    raise CodeError(f"crossing {label!r} visited more than twice")
                seconds[label] = (din, dout)
            else:
                firsts[label] = (din, dout)
        signs = {}
        for label, (in1, out1) in firsts.items():
            in2, out2 = seconds[label]
            signs[label] = _sign_from_rotation(rotation[label], in1, out1, in2, out2)
        code = SignedGaussCode(tuple((label, signs[label]) for label, _, _ in visits))
        return cls.from_code(code)

    @property
    def n(self) -> int:
        return len(self.crossings)

    @cached_property
    def index(self) -> dict[str, int]:
        return {c: k for k, c in enumerate(self.crossings)}

    @cached_property
    def positions(self) -> dict[str, tuple[int, int]]:
        pos: dict[str, list[int]] = {}
        for i, label in enumerate(self.word):
            pos.setdefault(label, []).append(i)
        return {label: (p[0], p[1]) for label, p in pos.items()}

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        sigma = [0] * (2 * len(self.word))
        for rot in self.rotations:
            for k in range(4):
                sigma[rot[k]] = rot[(k + 1) % 4]
        return tuple(sigma)

    @cached_property
    def alpha(self) -> tuple[int, ...]:
        return tuple(_alpha(len(self.word)))

    @cached_property
    def signs(self) -> dict[str, str]:
        out = {}
        for label, rot in zip(self.crossings, self.rotations):
            p, q = self.positions[label]
            out[label] = _sign_from_rotation(rot, 2 * p, 2 * p + 1, 2 * q, 2 * q + 1)
        return out

    @cached_property
    def face_orbits(self) -> list[list[int]]:
        if not self.word:
            return []
        return _face_orbits(self.sigma, self.alpha)

    @property
    def genus(self) -> int:
        if not self.word:
            return 0
        v, e, f = self.n, 2 * self.n, len(self.face_orbits)
        return (2 - v + e - f) // 2

    def vertex_of(self, dart: int) -> str:
        return self.word[dart // 2]

    def code(self) -> SignedGaussCode:
        signs = self.signs
        return SignedGaussCode(tuple((label, signs[label]) for label in self.word))

    def __eq__(self, other):
        if not isinstance(other, CurveMap):
            return NotImplemented
        return (self.word, self.rotations) == (other.word, other.rotations)

    def __hash__(self):
        return hash((self.word, self.rotations))

    def __repr__(self):
        return f"CurveMap({emit_signed_code(self)!r})"


def _sign_from_rotation(rot, in1, out1, in2, out2) -> str:
    k = rot.index(in1)
    nxt, opp = rot[(k + 1) % 4], rot[(k + 2) % 4]
    if opp != out1:
        raise CodeError("traversal is not straight-through at a crossing")
    if nxt == in2:
        return "+"
    if nxt == out2:
        return "-"
    raise CodeError("inconsistent rotation")


TRIVIAL = CurveMap((), (), ())


def parse_signed_code(text: str) -> CurveMap:
    return CurveMap.from_code(SignedGaussCode.parse(text))


def emit_signed_code(curve: CurveMap) -> str:
    return str(curve.code())


def genus(curve: CurveMap) -> int:
    return curve.genus


def faces(curve: CurveMap) -> list[FacePolygon]:
    out = []
    for orbit in curve.face_orbits:
        sides = tuple(d // 2 if d & 1 else (d // 2 - 1) % len(curve.word) for d in orbit)
        corners = tuple(curve.vertex_of(d) for d in orbit)
        # an odd dart is an outgoing half-edge: the curve leaves the corner along it
        directions = tuple(d & 1 for d in orbit)
        polygonal = len(set(sides)) == len(sides) and len(set(corners)) == len(corners)
        out.append(FacePolygon(len(orbit), sides, corners, directions, polygonal))
    return out


def chord_diagram(curve: CurveMap) -> ChordDiagram:
    pos = curve.positions
    return ChordDiagram(curve.word, tuple((c, *pos[c]) for c in curve.crossings))


def interleaves(diagram: ChordDiagram, c1: str, c2: str) -> bool:
    chords = diagram.chord_map
    for c in (c1, c2):
        if c not in chords:
            raise KeyError(f"unknown crossing {c!r}")
    if c1 == c2:
        raise ValueError("interleavement needs two distinct chords")
    p, q = chords[c1]
    inside = sum(p < x < q for x in chords[c2])
    return inside == 1


def mirror(curve: CurveMap) -> CurveMap:
    return CurveMap(curve.word, curve.crossings,
                    tuple(tuple(reversed(rot)) for rot in curve.rotations))


def _variant_tokens(word_idx, partner, nxt, start, step, bound=None):
    """Token tuple of one traversal variant, or None once it exceeds ``bound``.

    Tokens are ``2*label + (0 for '+', 1 for '-')`` with labels numbered
    1, 2, ... in first-visit order.
    """
    m = len(word_idx)
    relabel = {}
    out = []
    tight = bound is not None
    for k in range(m):
        i = (start + step * k) % m
        c = word_idx[i]
        tok = relabel.get(c)
        if tok is None:
            lab = len(relabel) + 1
            j = partner[i]
            if step == 1:
                plus = nxt[2 * i] == 2 * j
            else:
                plus = nxt[2 * i + 1] == 2 * j + 1
            tok = 2 * lab + (0 if plus else 1)
            relabel[c] = tok
        if tight:
            b = bound[k]
            if tok > b:
                return None
            if tok < b:
                tight = False
        out.append(tok)
    return out


def _variants_setup(curve: CurveMap):
    m = len(curve.word)
    idx = curve.index
    word_idx = [idx[c] for c in curve.word]
    partner = [0] * m
    for p, q in curve.positions.values():
        partner[p], partner[q] = q, p
    sigma = curve.sigma
    inv = [0] * len(sigma)
    for d, e in enumerate(sigma):
        inv[e] = d
    return word_idx, partner, sigma, inv


def canonical_tokens(curve: CurveMap) -> tuple[int, ...]:
    if not curve.word:
        return ()
    word_idx, partner, sigma, inv = _variants_setup(curve)
    best = None
    m = len(word_idx)
    for nxt in (sigma, inv):
        for step in (1, -1):
            for start in range(m):
                toks = _variant_tokens(word_idx, partner, nxt, start, step, best)
                if toks is not None:
                    best = toks
    return tuple(best)


def is_canonical_tokens(curve: CurveMap, toks: Sequence[int]) -> bool:
    """True iff ``toks`` (the curve's own start-0 code) is the canonical minimum."""
    word_idx, partner, sigma, inv = _variants_setup(curve)
    m = len(word_idx)
    bound = list(toks)
    for nxt in (sigma, inv):
        for step in (1, -1):
            for start in range(m):
                t = _variant_tokens(word_idx, partner, nxt, start, step, bound)
                if t is not None and t != bound:
                    return False
    return True


def tokens_to_code(toks: Iterable[int]) -> str:
    return " ".join(f"{t // 2}{'+-'[t & 1]}" for t in toks)


def canonical_code(curve: CurveMap) -> str:
    return tokens_to_code(canonical_tokens(curve))


def canonical_curve(curve: CurveMap) -> CurveMap:
    return parse_signed_code(canonical_code(curve))


def is_equivalent(c1: CurveMap, c2: CurveMap) -> bool:
    return c1.n == c2.n and canonical_code(c1) == canonical_code(c2)
