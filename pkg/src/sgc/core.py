"""Signed graphs and their structural invariants.

A signed graph is a multigraph (loops and parallel edges allowed) with a
sign on every edge.  Edges are stored in a stable order; the index of an
edge in that order is its identity, which switching and equivalence tests
rely on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple


class CapacityError(Exception):
    """An exact enumeration was requested beyond the supported size."""


class UncolorableError(Exception):
    """The signed graph admits no circular coloring at all (positive loop)."""


class StructuralMismatchError(ValueError):
    """Two signed graphs do not share the same underlying edge list."""


class Sign(Enum):
    POSITIVE = 1
    NEGATIVE = -1

    def __mul__(self, other: "Sign") -> "Sign":
        return Sign(self.value * other.value)

    def __neg__(self) -> "Sign":
        return Sign(-self.value)

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"

    def __repr__(self):
        return f"Sign.{self.name}"


POS = Sign.POSITIVE
NEG = Sign.NEGATIVE

_SIGN_OF = {
    POS: POS, NEG: NEG,
    1: POS, -1: NEG,
    "+": POS, "-": NEG,
}


class Edge(NamedTuple):
    u: int
    v: int
    sign: Sign

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class SignedGraph:
    """n vertices (0..n-1) and a stable-order tuple of signed edges."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        for idx, e in enumerate(self.edges):
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ValueError(f"edge {idx} endpoints {e.u},{e.v} out of range for n={self.n}")
            if not isinstance(e.sign, Sign):
                raise ValueError(f"edge {idx} has non-Sign sign {e.sign!r}")

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[tuple]) -> "SignedGraph":
        """Build from (u, v, sign) triples; sign may be Sign, +-1, or '+'/'-'."""
        edges = []
        for u, v, s in triples:
            try:
                sign = _SIGN_OF[s]
            except (KeyError, TypeError):
                raise ValueError(f"bad sign {s!r} on edge ({u},{v})") from None
            edges.append(Edge(u, v, sign))
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_positive_loop(self) -> bool:
        return any(e.is_loop and e.sign is POS for e in self.edges)

    def degrees(self) -> list[int]:
        """Edge-multiplicity degrees; a loop contributes 2 to its vertex."""
        deg = [0] * self.n
        for e in self.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        return deg

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """adj[v] = list of (neighbor, edge index); loops appear once."""
        adj = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            adj[e.u].append((e.v, idx))
            if e.u != e.v:
                adj[e.v].append((e.u, idx))
        return adj

    def underlying_pairs(self) -> tuple[tuple[int, int], ...]:
        """Unordered endpoint pairs in edge order (the sign-free skeleton)."""
        return tuple((min(e.u, e.v), max(e.u, e.v)) for e in self.edges)

    def components(self) -> list[list[int]]:
        """Vertex sets of the connected components, each sorted, in order of
        smallest vertex."""
        seen = [False] * self.n
        adj = self.adjacency()
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y, _ in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def switch(g: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in s.

    Loops never change sign (both endpoints move together).
    """
    sset = set(s)
    for v in sset:
        if not 0 <= v < g.n:
            raise ValueError(f"switching set contains non-vertex {v}")
    edges = tuple(
        Edge(e.u, e.v, -e.sign) if (e.u in sset) != (e.v in sset) else e
        for e in g.edges
    )
    return SignedGraph(g.n, edges)


def is_balanced(g: SignedGraph) -> tuple[bool, frozenset[int] | None]:
    """Whether some switching makes every edge positive.

    Returns (True, s) with a switching set s that does it, or (False, None).
    A negative loop is an immediate obstruction; positive loops are harmless.
    """
    label = [0] * g.n
    seen = [False] * g.n
    adj = [[] for _ in range(g.n)]
    for e in g.edges:
        if e.is_loop:
            if e.sign is NEG:
                return False, None
            continue
        t = 0 if e.sign is POS else 1
        adj[e.u].append((e.v, t))
        adj[e.v].append((e.u, t))
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, t in adj[x]:
                want = label[x] ^ t
                if not seen[y]:
                    seen[y] = True
                    label[y] = want
                    queue.append(y)
                elif label[y] != want:
                    return False, None
    return True, frozenset(v for v in range(g.n) if label[v])


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """Whether g2 is a switching of g1 (same underlying edge list, by index)."""
    if g1.n != g2.n or g1.underlying_pairs() != g2.underlying_pairs():
        raise StructuralMismatchError("graphs differ in vertices or underlying edges")
    product = SignedGraph(
        g1.n,
        tuple(
            Edge(e1.u, e1.v, e1.sign * e2.sign)
            for e1, e2 in zip(g1.edges, g2.edges)
        ),
    )
    return is_balanced(product)[0]


@dataclass(frozen=True)
class GirthTypeTable:
    """Shortest closed-walk length per (negative-edge parity, length parity).

    entry[(i, j)] is the minimum length of a closed walk containing an edge,
    with i = parity of negative edges used and j = parity of the length, or
    None when no such walk exists.
    """

    entry: tuple[tuple[tuple[int, int], int | None], ...]

    def __getitem__(self, key: tuple[int, int]) -> int | None:
        for k, v in self.entry:
            if k == key:
                return v
        raise KeyError(key)

    def as_dict(self) -> dict[tuple[int, int], int | None]:
        return dict(self.entry)


def girth_types(g: SignedGraph) -> GirthTypeTable:
    """Minimum closed-walk lengths by sign and length parity.

    Works on the 4-fold parity lift: BFS from (v, 0, 0) over states
    (vertex, negative parity, length parity); a closed walk of type (i, j)
    through v corresponds to one final edge step into (v, i, j).
    """
    adj = [[] for _ in range(g.n)]
    for e in g.edges:
        t = 0 if e.sign is POS else 1
        adj[e.u].append((e.v, t))
        if e.u != e.v:
            adj[e.v].append((e.u, t))
    best: dict[tuple[int, int], int | None] = {(i, j): None for i in (0, 1) for j in (0, 1)}
    for start in range(g.n):
        if not adj[start]:
            continue
        dist = {(start, 0, 0): 0}
        queue = deque([(start, 0, 0)])
        while queue:
            x, a, b = queue.popleft()
            d = dist[(x, a, b)]
            for y, t in adj[x]:
                state = (y, a ^ t, b ^ 1)
                if state not in dist:
                    dist[state] = d + 1
                    queue.append(state)
        # Close the walk with one extra step w -> start.
        for w, t in adj[start]:
            for a in (0, 1):
                for b in (0, 1):
                    dw = dist.get((w, a, b))
                    if dw is None:
                        continue
                    key = (a ^ t, (b ^ 1))
                    length = dw + 1
                    if best[key] is None or length < best[key]:
                        best[key] = length
    return GirthTypeTable(tuple(sorted(best.items())))


def degeneracy(g: SignedGraph) -> tuple[int, list[int]]:
    """Smallest d such that every subgraph has a vertex of degree <= d.

    Degrees count edge multiplicity; loops count 2.  Returns (d, order)
    where order is the elimination order (min-degree first, ties to the
    lowest index); reversed, it is a greedy-colorable order.
    """
    if g.n == 0:
        return 0, []
    deg = g.degrees()
    alive = [True] * g.n
    adj = g.adjacency()
    order = []
    d = 0
    for _ in range(g.n):
        v = min((x for x in range(g.n) if alive[x]), key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        alive[v] = False
        for y, _idx in adj[v]:
            if alive[y]:
                deg[y] -= 1
    return d, order


def _chromatic_number(n: int, neighbors: list[set[int]]) -> int:
    """Exact chromatic number of a simple graph by branch and bound."""
    if n == 0:
        return 0
    if all(not nb for nb in neighbors):
        return 1
    # Order vertices by descending degree for earlier pruning.
    order = sorted(range(n), key=lambda v: (-len(neighbors[v]), v))
    colors = [-1] * n
    best = n

    def run(i: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if i == n:
            best = used
            return
        v = order[i]
        taken = {colors[w] for w in neighbors[v] if colors[w] >= 0}
        # Colors 0..used-1 reuse an old class; color `used` opens a new one
        # and is only worth trying while used+1 can still beat `best`.
        for c in range(min(used + 1, best - 1)):
            if c in taken:
                continue
            colors[v] = c
            run(i + 1, max(used, c + 1))
            colors[v] = -1

    run(0, 0)
    return best


def chi_plus(g: SignedGraph) -> int:
    """Minimum over all switchings of the chromatic number of the positive
    part.

    Exact enumeration of the 2^(n-c) essentially distinct switchings (one
    vertex per component held fixed); guarded by CapacityError above n-c=12.
    A positive loop survives every switching, so no proper coloring exists.
    """
    if g.has_positive_loop():
        raise UncolorableError("positive loop: no proper coloring of the positive part")
    if g.n == 0:
        return 0
    comps = g.components()
    free = [v for comp in comps for v in comp[1:]]
    if len(free) > 12:
        raise CapacityError(f"2^{len(free)} switchings is beyond the exact enumeration guard")
    best = g.n + 1
    for bits in range(1 << len(free)):
        sset = {free[i] for i in range(len(free)) if (bits >> i) & 1}
        neighbors = [set() for _ in range(g.n)]
        for e in g.edges:
            if e.is_loop:
                continue
            flipped = (e.u in sset) != (e.v in sset)
            sign = -e.sign if flipped else e.sign
            if sign is POS:
                neighbors[e.u].add(e.v)
                neighbors[e.v].add(e.u)
        best = min(best, _chromatic_number(g.n, neighbors))
        if best == 1:
            break
    return best
