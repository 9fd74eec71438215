"""Independent reference implementations used only by the tests.

Nothing here imports the package's canonical form or sign convention: curves
are generated as raw rotation systems (one orientation bit per crossing) and
compared with a textbook map-isomorphism canonical form.
"""

from __future__ import annotations

import itertools


def double_occurrence_words(n):
    """Words in which letters first appear in the order 0, 1, ..., n-1."""
    if n == 0:
        yield ()
        return
    m = 2 * n

    def rec(word, used):
        if len(word) == m:
            yield tuple(word)
            return
        counts = {c: word.count(c) for c in range(used)}
        for c in range(used):
            if counts[c] == 1:
                yield from rec(word + [c], used)
        if used < n:
            yield from rec(word + [used], used + 1)

    yield from rec([], 0)


def rotation_system(word, bits):
    """(sigma, alpha) on darts ('i'|'o', position); bits pick each crossing's handedness."""
    m = len(word)
    where = {}
    for i, c in enumerate(word):
        where.setdefault(c, []).append(i)
    sigma = {}
    for c, (p, q) in where.items():
        if bits[c]:
            cyc = [("i", p), ("i", q), ("o", p), ("o", q)]
        else:
            cyc = [("i", p), ("o", q), ("o", p), ("i", q)]
        for k in range(4):
            sigma[cyc[k]] = cyc[(k + 1) % 4]
    alpha = {}
    for i in range(m):
        alpha[("o", i)] = ("i", (i + 1) % m)
        alpha[("i", (i + 1) % m)] = ("o", i)
    return sigma, alpha


def face_count(sigma, alpha):
    seen, count = set(), 0
    for d in sigma:
        if d in seen:
            continue
        count += 1
        while d not in seen:
            seen.add(d)
            d = sigma[alpha[d]]
    return count


def map_canonical_form(sigma, alpha):
    """Least BFS code over all roots and both orientations (reflection included)."""
    inverse = {v: k for k, v in sigma.items()}
    best = None
    for rot in (sigma, inverse):
        for root in sigma:
            label = {root: 0}
            order = [root]
            k = 0
            while k < len(order):
                d = order[k]
                for e in (rot[d], alpha[d]):
                    if e not in label:
                        label[e] = len(order)
                        order.append(e)
                k += 1
            code = tuple(x for d in order for x in (label[rot[d]], label[alpha[d]]))
            if best is None or code < best:
                best = code
    return best


def spherical_curves(n):
    """Canonical forms of all spherical curves with n crossings."""
    if n == 0:
        return {()}
    out = set()
    for word in double_occurrence_words(n):
        for bits in itertools.product((True, False), repeat=n):
            sigma, alpha = rotation_system(word, bits)
            # Euler: V - E + F = 2 on the sphere with V = n, E = 2n
            if face_count(sigma, alpha) == n + 2:
                out.add(map_canonical_form(sigma, alpha))
    return out


def curve_map_form(curve):
    """Oracle canonical form of a package ``CurveMap`` via its raw permutations."""
    if curve.n == 0:
        return ()
    sigma = dict(enumerate(curve.sigma))
    alpha = dict(enumerate(curve.alpha))
    return map_canonical_form(sigma, alpha)


def chord_interleaving_nugatory(word):
    """Crossings whose chord crosses no other chord, by brute force."""
    pos = {}
    for i, c in enumerate(word):
        pos.setdefault(c, []).append(i)
    out = set()
    for c, (p, q) in pos.items():
        alone = True
        for d, (x, y) in pos.items():
            if d != c and ((p < x < q) ^ (p < y < q)):
                alone = False
        if alone:
            out.add(c)
    return out
