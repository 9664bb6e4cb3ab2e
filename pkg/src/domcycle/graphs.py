"""Small simple graphs with bitmask adjacency.

Vertices are 0..n-1.  Row v is an int whose bit u is set iff uv is an edge,
which makes neighborhood intersection, subset tests and popcounts single
integer operations for every graph size this library cares about.
"""
from __future__ import annotations

import math
from typing import Iterable, Iterator

INFINITE = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable undirected simple graph."""

    __slots__ = ("rows", "_hash")

    rows: tuple[int, ...]

    def __init__(self, rows: Iterable[int]):
        rows = tuple(rows)
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} mentions a vertex >= {n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash(rows))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.rows,))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows)

    # -- basics ------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))

    def vertices(self) -> range:
        return range(len(self.rows))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v, row in enumerate(self.rows):
            out.extend((v, u) for u in bits(row) if u > v)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- derived graphs ------------------------------------------------------

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(rows)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            if not rows[u] >> v & 1:
                raise ValueError(f"({u},{v}) is not an edge")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(rows)

    def induced(self, subset: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to 0..k-1 in ascending vertex order."""
        keep = sorted(set(subset))
        for v in keep:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in bits(self.rows[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph(rows)

    def remove_vertices(self, subset: Iterable[int]) -> "Graph":
        gone = set(subset)
        return self.induced(v for v in self.vertices() if v not in gone)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Apply a permutation: vertex v becomes perm[v]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            for u in bits(row):
                rows[perm[v]] |= 1 << perm[u]
        return Graph(rows)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph((~row & full & ~(1 << v)) for v, row in enumerate(self.rows))

    # -- connectivity and metric ---------------------------------------------

    def component_mask(self, start: int, allowed: int | None = None) -> int:
        """Bitmask of the component of ``start`` inside ``allowed`` vertices."""
        if allowed is None:
            allowed = (1 << self.n) - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_mask(0) == (1 << self.n) - 1

    def components(self) -> list[list[int]]:
        left = (1 << self.n) - 1
        out = []
        while left:
            start = (left & -left).bit_length() - 1
            comp = self.component_mask(start, left)
            out.append(list(bits(comp)))
            left &= ~comp
        return out

    def distance(self, u: int, v: int) -> float:
        """BFS distance; INFINITE when u and v are in different components."""
        if u == v:
            return 0
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for w in bits(frontier):
                nxt |= self.rows[w]
            frontier = nxt & ~seen
            if frontier >> v & 1:
                return d
            seen |= frontier
        return INFINITE

    def eccentricity(self, v: int) -> float:
        seen = 1 << v
        frontier = seen
        d = 0
        while True:
            nxt = 0
            for w in bits(frontier):
                nxt |= self.rows[w]
            frontier = nxt & ~seen
            if not frontier:
                break
            d += 1
            seen |= frontier
        if seen != (1 << self.n) - 1:
            return INFINITE
        return d

    def diameter(self) -> float:
        if self.n == 0:
            return 0
        return max(self.eccentricity(v) for v in self.vertices())

    def has_triangle(self) -> bool:
        return any(self.rows[u] & self.rows[v] for u, v in self.edges())

    def is_clique_on(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        need = mask_of(vs)
        return all(self.rows[v] & need == need & ~(1 << v) for v in vs)


# -- binary operations --------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g on 0..g.n-1, then h shifted up by g.n."""
    rows = list(g.rows) + [row << g.n for row in h.rows]
    return Graph(rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [row | hmask for row in g.rows]
    rows += [(row << g.n) | gmask for row in h.rows]
    return Graph(rows)


def union_of_copies(g: Graph, count: int) -> Graph:
    if count < 0:
        raise ValueError("count must be >= 0")
    out = Graph.from_edges(0, [])
    for _ in range(count):
        out = disjoint_union(out, g)
    return out


# -- cycles as vertex tuples ---------------------------------------------------


def check_cycle(g: Graph, cycle: tuple[int, ...]) -> None:
    """Raise ValueError unless ``cycle`` is a valid simple cycle of g."""
    k = len(cycle)
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if len(set(cycle)) != k:
        raise ValueError("cycle repeats a vertex")
    for v in cycle:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    for i, v in enumerate(cycle):
        u = cycle[(i + 1) % k]
        if not g.has_edge(v, u):
            raise ValueError(f"({v},{u}) is not an edge")


def is_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    try:
        check_cycle(g, cycle)
    except ValueError:
        return False
    return True


def cycle_successor(cycle: tuple[int, ...], v: int) -> int:
    """The vertex after v in the cycle's stored orientation."""
    i = cycle.index(v)
    return cycle[(i + 1) % len(cycle)]


def normalize_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical representative under rotation and reflection.

    Rotate so the smallest vertex comes first, then pick the direction whose
    second vertex is smaller.
    """
    k = len(cycle)
    i = cycle.index(min(cycle))
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return fwd if fwd[1] <= rev[1] else rev


def is_dominating(g: Graph, cycle: tuple[int, ...]) -> bool:
    """True iff every edge of g has an endpoint on the cycle."""
    check_cycle(g, cycle)
    on = mask_of(cycle)
    off = ~on & ((1 << g.n) - 1)
    return all(not g.rows[v] & off for v in bits(off))
