"""Induced-subgraph containment, canonical labelling and isomorphism.

The canonical form is computed by iterative color refinement plus
individualization, taking the lexicographically least adjacency encoding
over all discrete refinements.  Twin vertices (same neighborhood besides
each other) are collapsed when picking branch vertices, which keeps cliques
and other highly symmetric graphs from branching factorially; swapping twins
is an automorphism, so the least encoding is unaffected.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, bits


# ---------------------------------------------------------------------------
# induced containment
# ---------------------------------------------------------------------------


def _placement_order(h: Graph) -> list[int]:
    """Vertices of h ordered so each one touches an earlier one when possible.

    Deterministic: components in order of their smallest vertex, smallest
    candidate first within a component.
    """
    order: list[int] = []
    placed = 0
    for _ in range(h.n):
        nxt = None
        for v in h.vertices():
            if placed >> v & 1:
                continue
            if h.rows[v] & placed:
                nxt = v
                break
        if nxt is None:
            nxt = next(v for v in h.vertices() if not placed >> v & 1)
        order.append(nxt)
        placed |= 1 << nxt
    return order


def induced_copy(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """An induced embedding of h into g, or None.

    The result maps h-vertex i to g-vertex result[i]; it is the
    lexicographically least embedding along the deterministic search order.
    """
    if h.n > g.n:
        return None
    order = _placement_order(h)
    gdeg = [g.degree(v) for v in g.vertices()]
    hdeg = [h.degree(v) for v in h.vertices()]
    image = [-1] * h.n
    used = 0

    def place(k: int) -> bool:
        nonlocal used
        if k == h.n:
            return True
        hv = order[k]
        want = h.rows[hv]
        for gv in g.vertices():
            if used >> gv & 1 or gdeg[gv] < hdeg[hv]:
                continue
            ok = True
            for prev in order[:k]:
                if bool(want >> prev & 1) != bool(g.rows[gv] >> image[prev] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[hv] = gv
            used |= 1 << gv
            if place(k + 1):
                return True
            used ^= 1 << gv
        image[hv] = -1
        return False

    if place(0):
        return tuple(image)
    return None


def contains_induced(g: Graph, h: Graph) -> bool:
    return induced_copy(g, h) is not None


def has_induced_covering(g: Graph, h: Graph, vertex: int) -> bool:
    """True iff g has an induced copy of h whose image includes ``vertex``.

    Used by incremental generation: when g-minus-``vertex`` is known h-free,
    this decides h-freeness of g without re-searching old copies.
    """
    if h.n > g.n:
        return False
    order = _placement_order(h)
    gdeg = [g.degree(v) for v in g.vertices()]
    hdeg = [h.degree(v) for v in h.vertices()]

    for slot in range(h.n):
        # force order[slot] -> vertex
        image = [-1] * h.n
        used = 0

        def place(k: int) -> bool:
            nonlocal used
            if k == h.n:
                return True
            hv = order[k]
            if k == slot:
                candidates = (vertex,)
            else:
                candidates = (v for v in g.vertices() if v != vertex)
            want = h.rows[hv]
            for gv in candidates:
                if used >> gv & 1 or gdeg[gv] < hdeg[hv]:
                    continue
                ok = True
                for prev in order[:k]:
                    if bool(want >> prev & 1) != bool(g.rows[gv] >> image[prev] & 1):
                        ok = False
                        break
                if not ok:
                    continue
                image[hv] = gv
                used |= 1 << gv
                if place(k + 1):
                    return True
                used ^= 1 << gv
            image[hv] = -1
            return False

        if place(0):
            return True
    return False


def is_free(g: Graph, forbidden: "Graph | tuple[Graph, ...] | list[Graph]") -> bool:
    """True iff g contains no member of ``forbidden`` as an induced subgraph."""
    members = (forbidden,) if isinstance(forbidden, Graph) else tuple(forbidden)
    for h in members:
        if h.n < 3 or not h.is_connected():
            raise ValueError("forbidden members must be connected with >= 3 vertices")
    return all(induced_copy(g, h) is None for h in members)


def family_refines(first: tuple[Graph, ...], second: tuple[Graph, ...]) -> bool:
    """True iff every member of ``second`` induced-contains some member of
    ``first``   (so freeness w.r.t. ``first`` implies freeness w.r.t. ``second``).
    """
    return all(any(contains_induced(h2, h1) for h1 in first) for h2 in second)


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """encoding: graph6 bytes of the relabelled graph; relabeling[old] = new."""

    encoding: bytes
    relabeling: tuple[int, ...]


def _refine(g: Graph, colors: tuple[int, ...]) -> tuple[int, ...]:
    n = g.n
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.rows[v]))))
            for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = tuple(ranking[s] for s in sig)
        if new == colors:
            return colors
        colors = new


def _encode_by_colors(g: Graph, colors: tuple[int, ...]) -> tuple[bytes, tuple[int, ...]]:
    """Encoding for a discrete coloring: relabel v -> colors[v]."""
    from .enumeration import write_graph6  # local import to avoid a cycle

    relab = colors  # discrete: colors is already a permutation
    return write_graph6(g.relabel(relab)).encode("ascii"), relab


def _twin_classes(g: Graph, cell: list[int]) -> list[int]:
    """One representative per twin class inside ``cell`` (sorted ascending)."""
    reps: list[int] = []
    for v in cell:
        dup = False
        for r in reps:
            mask = ~((1 << v) | (1 << r))
            if g.rows[v] & mask == g.rows[r] & mask:
                dup = True
                break
        if not dup:
            reps.append(v)
    return reps


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    if n == 0:
        from .enumeration import write_graph6

        return CanonicalForm(write_graph6(g).encode("ascii"), ())
    best: list[tuple[bytes, tuple[int, ...]] | None] = [None]

    def search(colors: tuple[int, ...]) -> None:
        colors = _refine(g, colors)
        if len(set(colors)) == n:
            cand = _encode_by_colors(g, colors)
            if best[0] is None or cand[0] < best[0][0]:
                best[0] = cand
            return
        # first non-singleton cell by color value
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = sorted(v for v in range(n) if colors[v] == target)
        for v in _twin_classes(g, cell):
            branched = tuple(
                (c, 0 if u == v else 1) for u, c in enumerate(colors)
            )
            ranking = {s: i for i, s in enumerate(sorted(set(branched)))}
            search(tuple(ranking[s] for s in branched))

    search(_refine(g, tuple(g.degree(v) for v in g.vertices())))
    assert best[0] is not None
    return CanonicalForm(best[0][0], best[0][1])


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_form(g).relabeling)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g).encoding == canonical_form(h).encoding


# ---------------------------------------------------------------------------
# connected induced subgraph enumeration
# ---------------------------------------------------------------------------


def connected_vertex_sets(g: Graph, max_size: int) -> Iterator[tuple[int, ...]]:
    """All vertex sets (size 1..max_size) inducing connected subgraphs.

    Each set appears exactly once, as an ascending tuple.  Enumeration is the
    usual rooted extension: sets with minimum vertex r are grown from {r}
    using only vertices > r, excluding ones already branched on at the same
    level.
    """
    if max_size < 1:
        return
    n = g.n
    for root in range(n):
        above = ~((1 << (root + 1)) - 1)

        def grow(members: int, border: int, banned: int) -> Iterator[tuple[int, ...]]:
            yield tuple(bits(members))
            if members.bit_count() >= max_size:
                return
            cand = border & ~banned
            veto = banned
            for v in bits(cand):
                nxt = members | 1 << v
                nb = (border | g.rows[v]) & above & ~nxt & ~(1 << v)
                yield from grow(nxt, nb, veto)
                veto |= 1 << v

        yield from grow(1 << root, g.rows[root] & above, 0)


def connected_induced_subgraphs(g: Graph, max_size: int) -> Iterator[tuple[tuple[int, ...], Graph]]:
    for vs in connected_vertex_sets(g, max_size):
        yield vs, g.induced(vs)


# ---------------------------------------------------------------------------
# join split of connected P4-free graphs
# ---------------------------------------------------------------------------


class PreconditionError(ValueError):
    """A structural routine was handed a graph outside its hypothesis class."""


def _co_components(g: Graph, inside: tuple[int, ...]) -> list[tuple[int, ...]]:
    sub = g.induced(inside)
    comps = sub.complement().components()
    return [tuple(inside[i] for i in comp) for comp in comps]


def p4free_join_split(g: Graph, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split V(g) into (A, B), both of size >= k, with every A-B edge present.

    Preconditions (checked, PreconditionError otherwise): g is P4-free,
    k-connected, and has at least 2k vertices.  For k <= 2 the preconditions
    guarantee a split exists (decompose along complement components, group
    the units); for k >= 3 a split can fail to exist even so — the octahedron
    at k = 3 has only size-2 units — and then PreconditionError is raised
    after an exhaustive bipartition search confirms it.
    """
    from .zoo import path as _path
    from .cycles import is_k_connected

    if k < 1:
        raise ValueError("k must be >= 1")
    witness = induced_copy(g, _path(4))
    if witness is not None:
        raise PreconditionError(f"graph has an induced P4 on {witness}")
    if g.n < 2 * k:
        raise PreconditionError(f"need at least {2 * k} vertices, have {g.n}")
    if not is_k_connected(g, k):
        raise PreconditionError(f"graph is not {k}-connected")

    # decompose into units: co-components, recursively, until each unit's
    # complement (inside the unit) is connected.  Any grouping of units into
    # two sides yields a complete join between the sides.
    units: list[tuple[int, ...]] = []
    stack: list[tuple[int, ...]] = [tuple(g.vertices())]
    while stack:
        part = stack.pop()
        if len(part) == 1:
            units.append(part)
            continue
        cos = _co_components(g, part)
        if len(cos) == 1:
            units.append(part)
        else:
            stack.extend(cos)
    units.sort()

    # subset-sum over unit sizes for a group totalling in [k, n-k]
    target_lo, target_hi = k, g.n - k
    best: tuple[int, ...] | None = None
    reachable: dict[int, int] = {0: 0}  # total -> chosen-units bitmask
    for idx, unit in enumerate(units):
        size = len(unit)
        for total, chosen in list(reachable.items()):
            t = total + size
            if t not in reachable:
                reachable[t] = chosen | 1 << idx
    for total, chosen in sorted(reachable.items()):
        if target_lo <= total <= target_hi:
            best = tuple(
                v for idx, unit in enumerate(units) if chosen >> idx & 1 for v in unit
            )
            break
    if best is None:
        # unit grouping can miss splits only when k >= 3; search all
        # bipartitions before declaring none exists
        full = (1 << g.n) - 1
        for pick in range(1, full):
            side = tuple(v for v in g.vertices() if pick >> v & 1)
            rest = tuple(v for v in g.vertices() if not pick >> v & 1)
            if len(side) < k or len(rest) < k:
                continue
            if all(g.rows[a] >> b & 1 for a in side for b in rest):
                best = side
                break
    if best is None:
        raise PreconditionError("no complete-join split exists")
    aside = set(best)
    bside = tuple(v for v in g.vertices() if v not in aside)
    return tuple(sorted(best)), bside
