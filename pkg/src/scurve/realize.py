"""Build concrete spherical curves around prescribed polygons.

A polygon complex (one polygon, or two polygons glued along a side) is
drawn with straight sides.  Its complement on the sphere is a disk; every
strand leaving the complex ends on that disk's boundary, and outer arcs are
drawn as straight chords of a model disk, crossing each other wherever
their endpoints interleave.  The result is always a genuine spherical curve
whose faces include the given polygons.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .curve import CurveMap, FacePolygon, faces
from .gons import LETTERS, GonClass, orientation_types


@dataclass(frozen=True)
class Line:
    """A straight strand through the complex, from ray ``ends[0]`` to ray ``ends[1]``."""

    ends: tuple[int, int]
    corners: tuple[int, ...]
    sides: tuple[tuple[int, int], ...]


class PolygonComplex:
    def __init__(self, coords: Sequence[tuple[float, float]], polygons: Sequence[Sequence[int]]):
        self.coords = [tuple(map(float, p)) for p in coords]
        self.polygons = [tuple(p) for p in polygons]
        owners: dict[tuple[int, int], int] = {}
        for poly in self.polygons:
            for i, u in enumerate(poly):
                key = _side(u, poly[(i + 1) % len(poly)])
                owners[key] = owners.get(key, 0) + 1
        self.side_owners = owners
        self._build()

    def _dir(self, u, w):
        (x0, y0), (x1, y1) = self.coords[u], self.coords[w]
        return (x1 - x0, y1 - y0)

    def _build(self):
        incident: dict[int, list[int]] = {}
        for u, w in self.side_owners:
            incident.setdefault(u, []).append(w)
            incident.setdefault(w, []).append(u)
        # half-edges: ("s", u, w) leaves corner u along side uw; ("r", k) is ray k
        self.rays: list[tuple[int, tuple[float, float]]] = []
        straight: dict[tuple, tuple] = {}
        rotation: dict[int, tuple] = {}
        for u, nbrs in incident.items():
            shared = [w for w in nbrs if self.side_owners[_side(u, w)] == 2]
            plain = [w for w in nbrs if self.side_owners[_side(u, w)] == 1]
            hes = []
            if len(nbrs) == 2:
                pairs = [[("s", u, w)] for w in nbrs]
            elif len(nbrs) == 3 and len(shared) == 1:
                pairs = [[("s", u, shared[0])], [("s", u, plain[0]), ("s", u, plain[1])]]
            else:
                raise ValueError(f"unsupported corner {u}")
            for pair in pairs:
                if len(pair) == 1:
                    dx, dy = self._dir(u, pair[0][2])
                    k = len(self.rays)
                    self.rays.append((u, (-dx, -dy)))
                    pair.append(("r", k))
                a, b = pair
                straight[a], straight[b] = b, a
                hes += pair
            rotation[u] = tuple(sorted(hes, key=lambda h: _angle(self._he_dir(h))))
        self.straight = straight
        self.rotation = rotation
        self.lines = self._trace_lines()

    def _he_dir(self, he):
        if he[0] == "s":
            return self._dir(he[1], he[2])
        return self.rays[he[1]][1]

    def _trace_lines(self) -> list[Line]:
        lines, used = [], set()
        for k, (u, _) in enumerate(self.rays):
            if k in used:
                continue
            corners, sides = [u], []
            he = self.straight[("r", k)]
            while True:
                _, a, b = he
                sides.append((a, b))
                corners.append(b)
                he = self.straight[("s", b, a)]
                if he[0] == "r":
                    break
            used.update((k, he[1]))
            lines.append(Line((k, he[1]), tuple(corners), tuple(sides)))
        return lines

    @cached_property
    def ray_order(self) -> list[int]:
        """Rays in counterclockwise order around the complex."""
        cx = sum(x for x, _ in self.coords) / len(self.coords)
        cy = sum(y for _, y in self.coords) / len(self.coords)
        eps = 1e-3

        def key(k):
            u, (dx, dy) = self.rays[k]
            x, y = self.coords[u]
            norm = math.hypot(dx, dy)
            return math.atan2(y + eps * dy / norm - cy, x + eps * dx / norm - cx)

        return sorted(range(len(self.rays)), key=key)

    def line_of_side(self, u: int, w: int) -> tuple[int, bool]:
        """Index of the line through side uw and whether it runs from u to w."""
        for i, line in enumerate(self.lines):
            for a, b in line.sides:
                if (a, b) == (u, w):
                    return i, True
                if (a, b) == (w, u):
                    return i, False
        raise KeyError((u, w))


def _side(u, w):
    return (u, w) if u < w else (w, u)


def _angle(v):
    return math.atan2(v[1], v[0]) % (2 * math.pi)


def _chord_crossings(points, chords):
    """Interior crossings of straight chords; returns params along each chord."""
    hits = {i: [] for i in range(len(chords))}
    for i, j in itertools.combinations(range(len(chords)), 2):
        (p, q), (r, s) = [(points[a], points[b]) for a, b in (chords[i], chords[j])]
        d1 = (q[0] - p[0], q[1] - p[1])
        d2 = (s[0] - r[0], s[1] - r[1])
        den = d1[0] * d2[1] - d1[1] * d2[0]
        if abs(den) < 1e-12:
            continue
        t = ((r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0]) / den
        u = ((r[0] - p[0]) * d1[1] - (r[1] - p[1]) * d1[0]) / den
        if 1e-9 < t < 1 - 1e-9 and 1e-9 < u < 1 - 1e-9:
            hits[i].append((t, j))
            hits[j].append((u, i))
    return hits


@dataclass
class Realization:
    curve: CurveMap
    side_edges: dict[tuple[int, int], int]
    complex: PolygonComplex

    def polygon_face(self, k: int) -> FacePolygon:
        poly = self.complex.polygons[k]
        edges = {self.side_edges[_side(poly[i], poly[(i + 1) % len(poly)])] for i in range(len(poly))}
        for face in faces(self.curve):
            if face.size == len(poly) and set(face.sides) == edges:
                return face
        raise AssertionError("polygon is not a face of the realized curve")


def realize(cx: PolygonComplex, forward: Sequence[bool], successor: Sequence[int]) -> Realization:
    """Close up the complex's lines into one curve.

    ``forward[i]`` orients line ``i`` from ``ends[0]`` to ``ends[1]``;
    ``successor[i]`` is the line entered after leaving line ``i``.  The
    successor map must be a single cycle.
    """
    nl = len(cx.lines)
    seen, i = set(), 0
    while i not in seen:
        seen.add(i)
        i = successor[i]
    if len(seen) != nl:
        raise ValueError("successor map is not a single cycle")

    def in_out(i):
        a, b = cx.lines[i].ends
        return (a, b) if forward[i] else (b, a)

    # model disk for the outside: boundary order is reversed there
    order = cx.ray_order
    m = len(order)
    slot = {k: j for j, k in enumerate(order)}
    points = {}
    for k in order:
        j = slot[k]
        theta = -2 * math.pi * (j + 0.5 + 0.2 * math.sin(1.7 * j + 0.3)) / m
        points[k] = (math.cos(theta), math.sin(theta))
    chords = [(in_out(i)[1], in_out(successor[i])[0]) for i in range(nl)]
    hits = _chord_crossings(points, chords)

    rotation: dict[str, tuple] = {f"p{u}": rot for u, rot in cx.rotation.items()}
    for i, lst in hits.items():
        for _, j in lst:
            if i < j:
                name = f"x{i}_{j}"
                di = _vec(points, chords[i])
                dj = _vec(points, chords[j])
                hes = [(("c", i, 1), di), (("c", i, 0), (-di[0], -di[1])),
                       (("c", j, 1), dj), (("c", j, 0), (-dj[0], -dj[1]))]
                rotation[name] = tuple(h for h, v in sorted(hes, key=lambda hv: _angle(hv[1])))

    visits = []
    side_edges = {}
    i = 0
    for _ in range(nl):
        line = cx.lines[i]
        corners = line.corners if forward[i] else line.corners[::-1]
        sides = line.sides if forward[i] else tuple((b, a) for a, b in reversed(line.sides))
        ray_in, ray_out = in_out(i)
        arrive = ("r", ray_in)
        for k, u in enumerate(corners):
            if k < len(sides):
                leave = ("s", u, sides[k][1])
                side_edges[_side(u, sides[k][1])] = len(visits)
            else:
                leave = ("r", ray_out)
            visits.append((f"p{u}", arrive, leave))
            if k < len(sides):
                arrive = ("s", sides[k][1], u)
        chord_crossings = sorted(hits[i])
        for _, j in chord_crossings:
            name = f"x{min(i, j)}_{max(i, j)}"
            visits.append((name, ("c", i, 0), ("c", i, 1)))
        i = successor[i]
    # chord half-edges are shared by every crossing on that chord; disambiguate
    visits, rotation = _localize(visits, rotation)
    return Realization(CurveMap.from_visits(visits, rotation), side_edges, cx)


def _localize(visits, rotation):
    """Tag chord half-edges with their crossing so dart names are unique."""
    new_visits = []
    for name, din, dout in visits:
        if name.startswith("x"):
            din, dout = (name, din), (name, dout)
        new_visits.append((name, din, dout))
    new_rot = {}
    for name, rot in rotation.items():
        if name.startswith("x"):
            rot = tuple((name, h) for h in rot)
        new_rot[name] = rot
    return new_visits, new_rot


def _vec(points, chord):
    (x0, y0), (x1, y1) = points[chord[0]], points[chord[1]]
    return (x1 - x0, y1 - y0)


def regular_polygon(n: int, radius: float = 1.0, phase: float = 0.0):
    return [(radius * math.cos(phase + 2 * math.pi * k / n),
             radius * math.sin(phase + 2 * math.pi * k / n)) for k in range(n)]


def single_gon(n: int) -> PolygonComplex:
    return PolygonComplex(regular_polygon(n), [list(range(n))])


def glued_pair(n1: int, n2: int) -> PolygonComplex:
    """Polygon 0 (``n1`` sides, corners ``0..n1-1``) with polygon 1 glued outside side 0."""
    pts = regular_polygon(n1)
    (x0, y0), (x1, y1) = pts[0], pts[1]
    # second polygon: regular, built on the far side of segment 0-1
    mx, my = (x0 + x1) / 2, (y0 + y1) / 2
    side = math.hypot(x1 - x0, y1 - y0)
    r2 = side / (2 * math.sin(math.pi / n2))
    apothem = r2 * math.cos(math.pi / n2)
    norm = math.hypot(mx, my)
    cx, cy = mx + apothem * mx / norm, my + apothem * my / norm
    # counterclockwise about the new center, corner 0 comes right before corner 1
    start = math.atan2(y0 - cy, x0 - cx)
    extra = []
    for k in range(1, n2 - 1):
        ang = start + 2 * math.pi * k / n2
        extra.append((cx + r2 * math.cos(ang), cy + r2 * math.sin(ang)))
    coords = pts + extra
    poly1 = [0] + list(range(n1, n1 + n2 - 2)) + [1]
    return PolygonComplex(coords, [list(range(n1)), _ccw(coords, poly1)])


def _ccw(coords, poly):
    area = 0.0
    for i, u in enumerate(poly):
        (x0, y0), (x1, y1) = coords[u], coords[poly[(i + 1) % len(poly)]]
        area += x0 * y1 - x1 * y0
    return list(poly) if area > 0 else list(reversed(poly))


def realize_class(cls: GonClass) -> tuple[Realization, FacePolygon]:
    """A spherical curve with a face of class ``cls``.

    Sides are labeled counterclockwise, side ``j`` joining corners ``j`` and
    ``j+1``, and the curve runs along the side when the class pattern bit is 1.
    """
    n = cls.n
    if n < 3:
        # straight sides cannot bound a bigon
        raise ValueError("realize_class needs at least three sides")
    cx = single_gon(n)
    bits = orientation_types(n)[cls.type_number - 1].bits
    forward = [True] * len(cx.lines)
    line_of_letter = {}
    for j in range(n):
        i, along = cx.line_of_side(j, (j + 1) % n)
        forward[i] = along == bool(bits[j])
        line_of_letter[LETTERS[j]] = i
    seq = cls.sequence
    successor = [0] * len(cx.lines)
    for k, x in enumerate(seq):
        successor[line_of_letter[x]] = line_of_letter[seq[(k + 1) % n]]
    real = realize(cx, forward, successor)
    return real, real.polygon_face(0)


def single_cycles(k: int):
    """Successor maps on ``range(k)`` forming one cycle."""
    for perm in itertools.permutations(range(1, k)):
        cyc = (0,) + perm
        succ = [0] * k
        for i in range(k):
            succ[cyc[i]] = cyc[(i + 1) % k]
        yield succ


def joint_realizations(n1: int = 3, n2: int = 5):
    """Every way of closing up an ``n1``-gon glued to an ``n2``-gon.

    Yields ``(realization, shared_side)`` for all line orientations and all
    single-cycle outer connections; the glued side is corners ``(0, 1)``.
    """
    cx = glued_pair(n1, n2)
    for forward in itertools.product((True, False), repeat=len(cx.lines)):
        for succ in single_cycles(len(cx.lines)):
            yield realize(cx, forward, succ), (0, 1)
