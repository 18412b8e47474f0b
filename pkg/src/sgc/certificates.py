"""Optimality certificates for circular colorings.

A coloring at the exact chi_c admits a "tight cycle": a directed closed
walk whose every step advances the color by exactly 1 (positive edge) or
by exactly 1 relative to the antipode (negative edge).  Counting s positive
and t negative steps around the cycle forces r = 2(s+t)/(2a+t) for a
non-negative integer a, which pins the value to a small rational.

Conversely, a coloring whose tight digraph is acyclic is not optimal:
repeatedly advancing a sink vertex clears all tight steps, after which the
whole coloring can be scaled down to a strictly smaller circumference.

Everything here is exact Fraction arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arith import frac_antipode, frac_circ_dist, rational_point
from .core import POS, SignedGraph
from .solver import Coloring

Arc = tuple[int, int, int]  # (from vertex, to vertex, edge index)


class CorruptCertificateError(ValueError):
    """The proposed tight cycle does not certify anything."""


class NotRefinableError(ValueError):
    """The coloring carries a tight cycle, so no refinement exists."""


@dataclass(frozen=True)
class RationalColoring:
    """An exact circular coloring: points of the circle of circumference r."""

    r: Fraction
    colors: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.r, Fraction) or self.r <= 0:
            raise ValueError(f"circumference must be a positive Fraction, got {self.r!r}")
        for v, x in enumerate(self.colors):
            if not isinstance(x, Fraction) or not 0 <= x < self.r:
                raise ValueError(f"vertex {v}: point {x!r} not in [0, {self.r})")

    @classmethod
    def from_coloring(cls, c: Coloring) -> "RationalColoring":
        return cls(Fraction(c.p, c.q), tuple(Fraction(x, c.q) for x in c.colors))

    def to_coloring(self, p: int, q: int) -> Coloring:
        """Back onto the integer grid {0..p-1}, scaled by q; exact or error."""
        if Fraction(p, q) != self.r:
            raise ValueError(f"{p}/{q} != circumference {self.r}")
        colors = []
        for v, x in enumerate(self.colors):
            scaled = x * q
            if scaled.denominator != 1:
                raise ValueError(f"vertex {v}: {x} is not on the 1/{q} grid")
            colors.append(int(scaled))
        return Coloring(p, q, tuple(colors))


def verify_rational(g: SignedGraph, c: RationalColoring) -> bool:
    """Check an exact circular coloring against every edge."""
    if len(c.colors) != g.n:
        raise ValueError(f"coloring has {len(c.colors)} entries for {g.n} vertices")
    r = c.r
    for e in g.edges:
        a, b = c.colors[e.u], c.colors[e.v]
        if e.sign is POS:
            if frac_circ_dist(a, b, r) < 1:
                return False
        else:
            if frac_circ_dist(a, frac_antipode(b, r), r) < 1:
                return False
    return True


@dataclass(frozen=True)
class TightDigraph:
    """All tight steps of a coloring; arcs carry their originating edge."""

    n: int
    arcs: tuple[Arc, ...]


def _forward_gap(g: SignedGraph, c: RationalColoring, u: int, w: int, edge_idx: int) -> Fraction:
    """Clockwise gap from u's color to the target point at w along this edge.

    The target is w's color for a positive edge, its antipode for a negative
    one; the gap is >= 1 for every side of every edge of a verifying
    coloring, and == 1 exactly when the step (u, w) is tight.
    """
    e = g.edges[edge_idx]
    target = c.colors[w] if e.sign is POS else frac_antipode(c.colors[w], c.r)
    return rational_point(target - c.colors[u], c.r)


def tight_digraph(g: SignedGraph, c: RationalColoring) -> TightDigraph:
    """The digraph of tight steps; rejects non-verifying colorings."""
    if not verify_rational(g, c):
        raise ValueError("coloring does not verify; tight digraph undefined")
    arcs = []
    for idx, e in enumerate(g.edges):
        if e.is_loop:
            if _forward_gap(g, c, e.u, e.u, idx) == 1:
                arcs.append((e.u, e.u, idx))
            continue
        if _forward_gap(g, c, e.u, e.v, idx) == 1:
            arcs.append((e.u, e.v, idx))
        if _forward_gap(g, c, e.v, e.u, idx) == 1:
            arcs.append((e.v, e.u, idx))
    return TightDigraph(g.n, tuple(arcs))


def find_tight_cycle(d: TightDigraph) -> Optional[tuple[Arc, ...]]:
    """First directed cycle in deterministic DFS order, or None.

    Roots are tried in ascending vertex order; out-arcs are explored sorted
    by (target, edge index).  A back-arc closes the reported cycle.
    """
    out: list[list[Arc]] = [[] for _ in range(d.n)]
    for arc in d.arcs:
        out[arc[0]].append(arc)
    for lst in out:
        lst.sort(key=lambda a: (a[1], a[2]))
    color = [0] * d.n  # 0 unseen, 1 on stack, 2 done
    for root in range(d.n):
        if color[root] or not out[root]:
            continue
        chain = [root]
        pos = {root: 0}
        arc_path: list[Arc] = []
        iters = [iter(out[root])]
        color[root] = 1
        while iters:
            arc = next(iters[-1], None)
            if arc is None:
                v = chain.pop()
                color[v] = 2
                del pos[v]
                iters.pop()
                if arc_path:
                    arc_path.pop()
                continue
            y = arc[1]
            if color[y] == 1:
                return tuple(arc_path[pos[y]:] + [arc])
            if color[y] == 0:
                color[y] = 1
                pos[y] = len(chain)
                chain.append(y)
                arc_path.append(arc)
                iters.append(iter(out[y]))
    return None


@dataclass(frozen=True)
class TightCycleCertificate:
    """A verified tight cycle with its step counts and certified value.

    s positive steps and t negative steps around a closed tight walk force
    s - (r/2 - 1)t = r*a for a non-negative integer a, hence
    r = 2(s+t)/(2a+t).
    """

    cycle: tuple[Arc, ...]
    s: int
    t: int
    a: int
    r: Fraction


def cert_value(g: SignedGraph, c: RationalColoring, cycle: Sequence[Arc]) -> TightCycleCertificate:
    """Validate a tight cycle and extract the value it certifies.

    Raises CorruptCertificateError when the arcs do not form a closed tight
    walk under c, or when the step counts fail the integrality and
    non-negativity conditions.
    """
    cycle = tuple(cycle)
    if not cycle:
        raise CorruptCertificateError("empty cycle")
    if not verify_rational(g, c):
        raise ValueError("coloring does not verify; nothing to certify")
    s = t = 0
    for i, (u, v, idx) in enumerate(cycle):
        if not 0 <= idx < g.m:
            raise CorruptCertificateError(f"arc {i}: no edge {idx}")
        e = g.edges[idx]
        if {u, v} != {e.u, e.v}:
            raise CorruptCertificateError(f"arc {i}: edge {idx} does not join {u} and {v}")
        nxt = cycle[(i + 1) % len(cycle)]
        if v != nxt[0]:
            raise CorruptCertificateError(f"arc {i} ends at {v}, arc {i+1} starts at {nxt[0]}")
        if _forward_gap(g, c, u, v, idx) != 1:
            raise CorruptCertificateError(f"arc {i}: step ({u},{v}) is not tight")
        if e.sign is POS:
            s += 1
        else:
            t += 1
    r = c.r
    a = (s - (r / 2 - 1) * t) / r
    if a.denominator != 1:
        raise CorruptCertificateError(f"step counts s={s}, t={t} give non-integral a={a}")
    a = int(a)
    if a < 0:
        raise CorruptCertificateError(f"negative a={a}")
    if 2 * a + t < 1:
        raise CorruptCertificateError("degenerate cycle: 2a + t = 0 certifies nothing")
    certified = Fraction(2 * (s + t), 2 * a + t)
    assert certified == r, "internal error: tight cycle value mismatch"
    return TightCycleCertificate(cycle, s, t, a, certified)


def _constraint_sides(g: SignedGraph) -> list[tuple[int, int, int]]:
    """Both directed sides (u, w, edge index) of every non-loop edge."""
    sides = []
    for idx, e in enumerate(g.edges):
        if e.is_loop:
            continue
        sides.append((e.u, e.v, idx))
        sides.append((e.v, e.u, idx))
    return sides


def refine(g: SignedGraph, c: RationalColoring) -> RationalColoring:
    """Strictly improve a non-optimal coloring.

    Requires the tight digraph of c to be acyclic (a tight cycle raises
    NotRefinableError: the value is already optimal for this coloring's
    certificate).  Phase 1 repeatedly picks the lowest-index sink that has
    an incoming tight step and advances its color by half its minimum
    outgoing slack, which removes at least one tight step and creates none.
    Phase 2, with no tight steps left, scales everything by 1/(1+eps) where
    2*eps is the global minimum slack, yielding a verifying coloring at a
    strictly smaller circumference.
    """
    if not verify_rational(g, c):
        raise ValueError("coloring does not verify; nothing to refine")
    sides = _constraint_sides(g)
    neg_loop_slacks = [
        c.r / 2 - 1 for e in g.edges if e.is_loop and e.sign is not POS
    ]
    if not sides and not neg_loop_slacks:
        raise ValueError("no edge constraints: refinement undefined")

    d = tight_digraph(g, c)
    if find_tight_cycle(d) is not None:
        raise NotRefinableError("tight cycle present: coloring is optimal")

    colors = list(c.colors)
    r = c.r

    def gap(u, w, idx):
        e = g.edges[idx]
        target = colors[w] if e.sign is POS else rational_point(colors[w] + r / 2, r)
        return rational_point(target - colors[u], r)

    arcs = {(u, w, idx) for (u, w, idx) in sides if gap(u, w, idx) == 1}
    while arcs:
        has_out = {u for (u, _, _) in arcs}
        sinks = sorted({w for (_, w, _) in arcs} - has_out)
        assert sinks, "internal error: acyclic tight digraph without a sink"
        v = sinks[0]
        out_slacks = [gap(u, w, idx) - 1 for (u, w, idx) in sides if u == v]
        assert all(s > 0 for s in out_slacks), "internal error: sink with a tight out-step"
        eps = min(out_slacks) / 2
        colors[v] = rational_point(colors[v] + eps, r)
        new_arcs = {(u, w, idx) for (u, w, idx) in sides if gap(u, w, idx) == 1}
        if len(new_arcs) >= len(arcs):
            raise RuntimeError(
                "internal error: refinement stalled (tight step count did not drop)"
            )
        arcs = new_arcs

    slacks = [gap(u, w, idx) - 1 for (u, w, idx) in sides] + neg_loop_slacks
    eps = min(slacks) / 2
    assert eps > 0, "internal error: zero slack after clearing all tight steps"
    scale = 1 + eps
    refined = RationalColoring(r / scale, tuple(x / scale for x in colors))
    assert verify_rational(g, refined), "internal error: refined coloring invalid"
    return refined
