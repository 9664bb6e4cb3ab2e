"""graph6 serialization and isomorph-free generation of small graphs.

Two generation pipelines, both deduplicating through the canonical form:

* edge augmentation: level ``m`` holds one canonical representative per
  isomorphism class with ``m`` edges; children add one edge.  Complete for
  arbitrary filter predicates (applied on yield), and the stream order is
  (edge count, canonical encoding).
* vertex augmentation: for hereditary targets (connected, H-free) a graph on
  k+1 vertices always arises from one on k vertices by deleting a non-cut
  vertex, so levels grow by attaching a new vertex to every nonempty
  neighborhood subset, rejecting H-copies through the new vertex early.
  Much faster when the forbidden family bites hard.

Streams yield graphs in canonical labelling, deterministically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .graphs import Graph, bits
from .iso import canonical_form, has_induced_covering, induced_copy
from .cycles import is_two_connected

GENERATION_CAP = 10  # internal generator refuses larger n; import graph6 instead

# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def write_graph6(g: Graph) -> str:
    """Standard graph6 line (without trailing newline) for g."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph6 writer supports at most 258047 vertices here")
    out = head
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def read_graph6(line: str) -> Graph:
    """Parse one graph6 line.  ValueError pinpoints the offending byte."""
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ValueError("empty graph6 line")
    data = s.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ValueError(f"invalid graph6 byte {b} at offset {off}")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 >68-billion-vertex form not supported")
        if len(data) < 4:
            raise ValueError("truncated graph6 vertex count at offset 1")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
        body_off = 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_off = 1
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(
            f"graph6 body for n={n} needs {need} bytes, got {len(body)}"
            f" (starting at offset {body_off})"
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6]
            bit = byte - 63 >> (5 - k % 6) & 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    tail = (6 - k % 6) % 6
    if tail and (body[-1] - 63) & ((1 << tail) - 1):
        raise ValueError(f"graph6 padding bits not zero at offset {body_off + len(body) - 1}")
    return Graph(rows)


def read_graph6_file(path: str) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield read_graph6(line)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None


def write_graph6_file(path: str, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(write_graph6(g) + "\n")
            count += 1
    return count


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------


def _canonical(g: Graph) -> tuple[bytes, Graph]:
    cf = canonical_form(g)
    return cf.encoding, g.relabel(cf.relabeling)


def _levels_by_edges(n: int) -> Iterator[list[tuple[bytes, Graph]]]:
    """All isomorphism classes on n vertices, one level per edge count."""
    level = dict([_canonical(Graph.from_edges(n, []))])
    while level:
        yield sorted(level.items())
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    enc, cg = _canonical(g.add_edges([(u, v)]))
                    if enc not in nxt:
                        nxt[enc] = cg
        level = nxt


def _grow_by_vertices(n: int, h_free: tuple[Graph, ...]) -> list[Graph]:
    """Connected graphs on exactly n vertices avoiding every member of
    ``h_free`` as an induced subgraph, via vertex augmentation.
    """
    level = {_canonical(Graph.from_edges(1, []))[0]: Graph.from_edges(1, [])}
    for k in range(2, n + 1):
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            grown_rows = list(g.rows) + [0]
            for nbrs in range(1, 1 << (k - 1)):
                rows = list(grown_rows)
                rows[k - 1] = nbrs
                for u in bits(nbrs):
                    rows[u] |= 1 << (k - 1)
                child = Graph(rows)
                if any(has_induced_covering(child, h, k - 1) for h in h_free):
                    continue
                enc, cg = _canonical(child)
                if enc not in nxt:
                    nxt[enc] = cg
        level = nxt
    return sorted(level.values(), key=lambda g: (g.m, write_graph6(g)))


@dataclass
class GraphStream:
    """Deterministic stream of canonical-labelled graphs on ``n`` vertices.

    ``cursor`` tracks (edge count, index within that edge count) of the last
    yielded graph, so long scans can be resumed with ``generate(resume=...)``.
    """

    n: int
    connected: bool = False
    two_connected: bool = False
    h_free: tuple[Graph, ...] = ()
    method: str = "auto"
    resume: tuple[int, int] | None = None
    cursor: tuple[int, int] | None = field(default=None, init=False)

    def _passes(self, g: Graph) -> bool:
        if self.two_connected and not is_two_connected(g):
            return False
        if self.connected and not self.two_connected and not g.is_connected():
            return False
        for h in self.h_free:
            if induced_copy(g, h) is not None:
                return False
        return True

    def _chosen_method(self) -> str:
        if self.method != "auto":
            return self.method
        # vertex augmentation only reaches connected graphs, so it is an
        # option exactly when a connectivity filter is requested anyway
        if self.connected or self.two_connected:
            return "vertex"
        return "edge"

    def __iter__(self) -> Iterator[Graph]:
        if self.n > GENERATION_CAP:
            raise ValueError(
                f"internal generation capped at {GENERATION_CAP} vertices; "
                "read a graph6 file for larger corpora"
            )
        if self.n < 1:
            raise ValueError("generation needs n >= 1")
        method = self._chosen_method()
        if method == "edge":
            graphs: Iterable[tuple[bytes, Graph]] = (
                item for lvl in _levels_by_edges(self.n) for item in lvl
            )
            post = self._passes
        elif method == "vertex":
            if not (self.connected or self.two_connected):
                raise ValueError("vertex augmentation only generates connected graphs")
            graphs = (
                (write_graph6(g).encode("ascii"), g)
                for g in _grow_by_vertices(self.n, self.h_free)
            )
            # H-freeness is enforced during growth; only connectivity level remains
            post = (lambda g: not self.two_connected or is_two_connected(g))
        else:
            raise ValueError(f"unknown method {self.method!r}")

        index_within = 0
        last_m: int | None = None
        for _, g in graphs:
            m = g.m
            if m != last_m:
                last_m = m
                index_within = 0
            else:
                index_within += 1
            here = (m, index_within)
            if self.resume is not None and here <= self.resume:
                continue
            if post(g):
                self.cursor = here
                yield g


def generate(
    n: int,
    *,
    connected: bool = False,
    two_connected: bool = False,
    h_free: Iterable[Graph] = (),
    method: str = "auto",
    resume: tuple[int, int] | None = None,
) -> GraphStream:
    return GraphStream(
        n=n,
        connected=connected,
        two_connected=two_connected,
        h_free=tuple(h_free),
        method=method,
        resume=resume,
    )
