"""Deliberately naive re-derivations used to cross-check the package.

Every function here recomputes a quantity from first principles with no
propagation, no heuristics, and no shared code with the implementation
under test.  They are exponential and meant for tiny inputs only.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from sgc.core import NEG, POS, SignedGraph


def gap(p: int, x: int, y: int) -> int:
    """Circular distance written independently of the library."""
    return min((x - y) % p, (y - x) % p)


def edge_ok(p: int, q: int, sign, x: int, y: int) -> bool:
    """The single-edge coloring constraint on the p-point circle."""
    if sign is POS:
        return gap(p, x, y) >= q
    assert p % 2 == 0, "negative edges need an even circle"
    return gap(p, x, (y + p // 2) % p) >= q


def brute_feasible(g: SignedGraph, p: int, q: int, pins=()) -> tuple | None:
    """First valid (p,q)-coloring in lexicographic order, or None.

    Depth-first over vertices 0..n-1, checking each new color only against
    already-assigned neighbors.  Complete: a pruned prefix has no valid
    completion, so the set of colorings explored is exactly the full one.
    """
    pinned = {}
    for vtx, col in pins:
        if vtx in pinned and pinned[vtx] != col:
            return None
        pinned[vtx] = col
    # Edges checked once both endpoints are colored.
    checks = [[] for _ in range(g.n)]
    for e in g.edges:
        a, b = min(e.u, e.v), max(e.u, e.v)
        checks[b].append((a, e.sign))
    colors = [0] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            return True
        choices = (pinned[v],) if v in pinned else range(p)
        for c in choices:
            if all(edge_ok(p, q, s, colors[u] if u != v else c, c) for u, s in checks[v]):
                colors[v] = c
                if place(v + 1):
                    return True
        return False

    return tuple(colors) if place(0) else None


def product_feasible(g: SignedGraph, p: int, q: int) -> bool:
    """Unpruned scan of all p^n assignments; the meta-check for brute_feasible."""
    edges = [(e.u, e.v, e.sign) for e in g.edges]
    for colors in itertools.product(range(p), repeat=g.n):
        if all(edge_ok(p, q, s, colors[u], colors[v]) for u, v, s in edges):
            return True
    return False


def oracle_zset(g: SignedGraph, u: int, v: int, p: int, q: int) -> tuple[int, ...]:
    """Every terminal gap realized by a valid coloring, by full p^n enumeration."""
    edges = [(e.u, e.v, e.sign) for e in g.edges]
    half = p // 2
    found = [False] * (half + 1)
    for colors in itertools.product(range(p), repeat=g.n):
        ok = True
        for a, b, s in edges:
            if not edge_ok(p, q, s, colors[a], colors[b]):
                ok = False
                break
        if ok:
            found[gap(p, colors[u], colors[v])] = True
    return tuple(d for d in range(half + 1) if found[d])


def oracle_candidates(n: int) -> list[Fraction]:
    """All values chi_c can take on n vertices, enumerated by denominator.

    A value is possible iff its even-numerator normal form has numerator
    at most 2n; this scans reduced fractions and applies that test, which
    is a different route than enumerating even numerators directly.
    """
    vals = set()
    for b in range(1, 2 * n + 1):
        for a in range(2 * b, 2 * n * b + 1):
            v = Fraction(a, b)
            num = v.numerator if v.numerator % 2 == 0 else 2 * v.numerator
            if num <= 2 * n:
                vals.add(v)
    return sorted(vals)


def oracle_chi(g: SignedGraph) -> Fraction:
    """Smallest feasible candidate value by ascending brute-force scan."""
    if not g.edges:
        return Fraction(1)
    assert not any(e.is_loop and e.sign is POS for e in g.edges)
    for v in oracle_candidates(g.n):
        num, den = v.numerator, v.denominator
        if num % 2:
            num, den = 2 * num, 2 * den
        if brute_feasible(g, num, den) is not None:
            return v
    raise AssertionError("no candidate value feasible; the ladder is incomplete")


def oracle_girth_types(g: SignedGraph) -> dict[tuple[int, int], int | None]:
    """Shortest closed-walk lengths by (negative parity, length parity).

    Exact-length dynamic programming: walk[L][(v, s)] says whether some walk
    of length exactly L from the start reaches v with negative-edge parity s.
    Lengths run to 4n, past the diameter of the four-fold parity lift.
    """
    steps = [[] for _ in range(g.n)]
    for e in g.edges:
        t = 0 if e.sign is POS else 1
        steps[e.u].append((e.v, t))
        if e.u != e.v:
            steps[e.v].append((e.u, t))
    best: dict[tuple[int, int], int | None] = {(i, j): None for i in (0, 1) for j in (0, 1)}
    for start in range(g.n):
        reach = {(start, 0)}
        for length in range(1, 4 * g.n + 1):
            reach = {(y, s ^ t) for (x, s) in reach for (y, t) in steps[x]}
            for s in (0, 1):
                if (start, s) in reach:
                    key = (s, length % 2)
                    if best[key] is None or length < best[key]:
                        best[key] = length
    return best


def oracle_balanced(g: SignedGraph) -> bool:
    """Try all 2^n switchings; balanced iff one makes every edge positive."""
    for bits in range(1 << g.n):
        ok = True
        for e in g.edges:
            flipped = bool((bits >> e.u) & 1) != bool((bits >> e.v) & 1)
            sign = -e.sign if flipped else e.sign
            if sign is NEG:
                ok = False
                break
        if ok:
            return True
    return False


def oracle_chromatic(n: int, pairs: set[tuple[int, int]]) -> int:
    """Chromatic number of a simple graph by trying all k^n maps."""
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for colors in itertools.product(range(k), repeat=n):
            if all(colors[a] != colors[b] for a, b in pairs):
                return k
    raise AssertionError("n colors always suffice")


def oracle_chi_plus(g: SignedGraph) -> int:
    """Minimum over all 2^n switchings of the positive part's chromatic number."""
    assert not g.has_positive_loop()
    if g.n == 0:
        return 0
    best = g.n
    for bits in range(1 << g.n):
        pairs = set()
        for e in g.edges:
            if e.is_loop:
                continue
            flipped = bool((bits >> e.u) & 1) != bool((bits >> e.v) & 1)
            sign = -e.sign if flipped else e.sign
            if sign is POS:
                pairs.add((min(e.u, e.v), max(e.u, e.v)))
        best = min(best, oracle_chromatic(g.n, pairs))
    return best
