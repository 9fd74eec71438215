"""Exhaustive census of spherical curves by crossing number.

Words are generated in first-occurrence form, every sign vector with the
first crossing signed ``+`` is tried (mirroring flips all signs, and the
canonical code always starts with ``1+``), genus-0 maps are kept, and a map
survives only when its own code is already the canonical one.  Each curve
is therefore emitted exactly once.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .curve import (
    CodeError,
    CurveMap,
    canonical_code,
    count_faces,
    is_canonical_tokens,
    parse_signed_code,
    tokens_to_code,
)

log = logging.getLogger(__name__)

FORMAT_VERSION = "v1"
GENERATOR = "scurve-census-1"


class CensusError(ValueError):
    pass


def first_occurrence_words(n: int, prefix_partner: int | None = None) -> Iterator[list[int]]:
    """All double-occurrence words on ``n`` letters whose letters first appear in order.

    ``prefix_partner`` fixes the second position of letter 0, which splits
    the work into ``2n - 1`` disjoint shards.
    """
    m = 2 * n
    word = [-1] * m

    def fill(label: int):
        if label == n:
            yield list(word)
            return
        i = word.index(-1)
        word[i] = label
        for j in range(i + 1, m):
            if word[j] != -1:
                continue
            if label == 0 and prefix_partner is not None and j != prefix_partner:
                continue
            word[j] = label
            yield from fill(label + 1)
            word[j] = -1
        word[i] = -1

    if n == 0:
        yield []
        return
    yield from fill(0)


def interleave_counts(word: list[int]) -> list[int]:
    n = len(word) // 2
    first = [-1] * n
    spans = [None] * n
    for i, c in enumerate(word):
        if first[c] < 0:
            first[c] = i
        else:
            spans[c] = (first[c], i)
    counts = [0] * n
    for a in range(n):
        p, q = spans[a]
        for b in range(a + 1, n):
            x, y = spans[b]
            if (p < x < q) != (p < y < q):
                counts[a] += 1
                counts[b] += 1
    return counts


def _curve_from_ints(word: list[int], plus: tuple[bool, ...]) -> CurveMap:
    labels = tuple(str(c + 1) for c in word)
    first = {}
    rots = {}
    for i, c in enumerate(word):
        if c in first:
            p = first[c]
            rots[c] = (2 * p, 2 * i, 2 * p + 1, 2 * i + 1) if plus[c] else (2 * p, 2 * i + 1, 2 * p + 1, 2 * i)
        else:
            first[c] = i
    order = list(first)
    return CurveMap(labels, tuple(str(c + 1) for c in order), tuple(rots[c] for c in order))


def _shard(n: int, reduced_only: bool, prefilter: bool, partner: int | None) -> list[str]:
    out = []
    for word in first_occurrence_words(n, partner):
        if prefilter or reduced_only:
            counts = interleave_counts(word)
            # Gauss: on the sphere every chord crosses an even number of chords
            if prefilter and any(k & 1 for k in counts):
                continue
            if reduced_only and 0 in counts:
                continue
        for rest in itertools.product((True, False), repeat=n - 1):
            plus = (True,) + rest
            if count_faces(word, plus) != n + 2:
                continue
            toks = [2 * (c + 1) + (0 if plus[c] else 1) for c in word]
            curve = _curve_from_ints(word, plus)
            if is_canonical_tokens(curve, toks):
                out.append(tokens_to_code(toks))
    return out


def enumerate_curves(n: int, reduced_only: bool = False, jobs: int = 1,
                     prefilter: bool = True) -> list[str]:
    """Canonical codes of all spherical curves with ``n`` crossings, sorted.

    ``prefilter`` drops words violating Gauss's even-interleaving condition
    before the sign search; it is a necessary condition only, and the genus
    test still decides every survivor.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [""]
    if n == 1:
        shards = [None]
    else:
        shards = list(range(1, 2 * n))
    if jobs > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_shard, *zip(*[(n, reduced_only, prefilter, s) for s in shards])))
    else:
        parts = [_shard(n, reduced_only, prefilter, s) for s in shards]
    merged: set[str] = set()
    for part in parts:
        merged.update(part)
    return sorted(merged)


@dataclass
class CensusStore:
    codes: dict[int, list[str]] = field(default_factory=dict)
    filter: str = "all"
    generator: str = GENERATOR

    @property
    def max_n(self) -> int:
        return max(self.codes) if self.codes else -1

    def curves(self, n: int | None = None) -> Iterator[tuple[int, str]]:
        for k in sorted(self.codes):
            if n is None or k == n:
                for code in self.codes[k]:
                    yield k, code

    def __eq__(self, other):
        return (isinstance(other, CensusStore) and self.codes == other.codes
                and self.filter == other.filter)


def build_census(max_n: int, reduced_only: bool = False, jobs: int = 1,
                 min_n: int = 0) -> CensusStore:
    store = CensusStore(filter="reduced" if reduced_only else "all")
    for n in range(min_n, max_n + 1):
        store.codes[n] = enumerate_curves(n, reduced_only, jobs)
        log.info("n=%d: %d curves", n, len(store.codes[n]))
    return store


def census_counts(store: CensusStore) -> dict[int, int]:
    return {n: len(codes) for n, codes in sorted(store.codes.items())}


def dumps_census(store: CensusStore) -> str:
    lines = [f"# census {FORMAT_VERSION}", f"# filter={store.filter}", f"# generator={store.generator}"]
    for n in sorted(store.codes):
        lines.append(f"# n={n}")
        lines.extend(sorted(store.codes[n]))
    return "\n".join(lines) + "\n"


def save_census(store: CensusStore, path: str | Path) -> None:
    Path(path).write_text(dumps_census(store), encoding="utf-8")


def loads_census(text: str, validate: bool = True) -> CensusStore:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != f"# census {FORMAT_VERSION}":
        raise CensusError("missing or unsupported census header")
    store = CensusStore()
    current = None
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            if key == "filter":
                if value not in ("all", "reduced"):
                    raise CensusError(f"line {lineno}: unknown filter {value!r}")
                store.filter = value
            elif key == "generator":
                store.generator = value
            elif key == "n":
                current = int(value)
                store.codes[current] = []
            else:
                raise CensusError(f"line {lineno}: unknown header {line!r}")
            continue
        if current is None:
            raise CensusError(f"line {lineno}: code before any '# n=' header")
        if validate:
            try:
                curve = parse_signed_code(line)
            except CodeError as exc:
                raise CensusError(f"line {lineno}: {exc}") from None
            if curve.n != current:
                raise CensusError(f"line {lineno}: expected {current} crossings")
            if canonical_code(curve) != line:
                raise CensusError(f"line {lineno}: non-canonical code {line!r}")
        store.codes[current].append(line)
    for n, codes in store.codes.items():
        if codes != sorted(codes) or len(set(codes)) != len(codes):
            raise CensusError(f"n={n}: codes not sorted or duplicated")
    return store


def load_census(path: str | Path, validate: bool = True) -> CensusStore:
    return loads_census(Path(path).read_text(encoding="utf-8"), validate)
