"""Connectivity, Hamiltonicity, longest cycles, dominating cycles.

All searches are exact backtracking with pruning, metered by a node-expansion
budget; running out of budget raises ResourceExhausted, which is distinct
from any "no such cycle" answer.

Pruning used by the Hamilton search, all standard:
  * every unvisited vertex must stay reachable from the path end,
  * every unvisited vertex needs >= 2 usable connections,
  * twin vertices (identical neighborhoods besides each other) are visited
    in ascending index order; a twin swap is an automorphism, so this loses
    no cycles while collapsing the factorial branching inside cliques.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graphs import Graph, bits, is_dominating, mask_of, normalize_cycle

DEFAULT_BUDGET = 100_000_000


class ResourceExhausted(RuntimeError):
    """A cycle search ran past its node-expansion budget."""


@dataclass
class SearchBudget:
    limit: int = DEFAULT_BUDGET
    used: int = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise ResourceExhausted(f"search budget of {self.limit} expansions exceeded")


def _budget(budget: SearchBudget | None) -> SearchBudget:
    return budget if budget is not None else SearchBudget()


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------


def is_two_connected(g: Graph) -> bool:
    """n >= 3, connected, and no cut vertex."""
    n = g.n
    if n < 3 or not g.is_connected():
        return False
    full = (1 << n) - 1
    for v in range(n):
        allowed = full & ~(1 << v)
        start = (allowed & -allowed).bit_length() - 1
        if g.component_mask(start, allowed) != allowed:
            return False
    return True


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return True
    if g.n <= k:
        return False
    if not g.is_connected():
        return False
    full = (1 << g.n) - 1
    for cut in itertools.combinations(range(g.n), k - 1):
        allowed = full & ~mask_of(cut)
        start = (allowed & -allowed).bit_length() - 1
        if g.component_mask(start, allowed) != allowed:
            return False
    return True


# ---------------------------------------------------------------------------
# twin classes (shared by the searches)
# ---------------------------------------------------------------------------


def _twin_class_masks(g: Graph) -> list[int]:
    """mask[v] = bitmask of the twin class of v (true or false twins)."""
    n = g.n
    masks = [0] * n
    for v in range(n):
        if masks[v]:
            continue
        cls = 1 << v
        for u in range(v + 1, n):
            strip = ~((1 << v) | (1 << u))
            if g.rows[v] & strip == g.rows[u] & strip:
                cls |= 1 << u
        for u in bits(cls):
            masks[u] = cls
    return masks


# ---------------------------------------------------------------------------
# Hamilton cycles
# ---------------------------------------------------------------------------


def hamiltonian_cycle(g: Graph, budget: SearchBudget | None = None) -> tuple[int, ...] | None:
    """A Hamilton cycle (normalized), or None.  Exact."""
    n = g.n
    if n < 3:
        return None
    for v in range(n):
        if g.degree(v) < 2:
            return None
    if not g.is_connected():
        return None
    bud = _budget(budget)
    twins = _twin_class_masks(g)
    full = (1 << n) - 1
    rows = g.rows
    path = [0]

    def extend(endpoint: int, visited: int) -> bool:
        bud.spend()
        if visited == full:
            return bool(rows[endpoint] & 1)
        unvisited = full & ~visited
        # reachability: everything unvisited, and vertex 0, must be reachable
        # from the endpoint through unvisited vertices
        seen = 1 << endpoint
        frontier = seen
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= rows[w]
            frontier = nxt & (unvisited | 1) & ~seen
            seen |= frontier
        if unvisited & ~seen or not seen & 1:
            return False
        # starvation: unvisited vertices need >= 2 usable connections
        usable = unvisited | (1 << endpoint) | 1
        for w in bits(unvisited):
            if (rows[w] & usable).bit_count() < 2:
                return False
        for w in bits(rows[endpoint] & unvisited):
            low = twins[w] & unvisited
            if low & (low - 1) and (low & -low) != 1 << w:
                continue  # a smaller unvisited twin must come first
            path.append(w)
            if extend(w, visited | 1 << w):
                return True
            path.pop()
        return False

    if extend(0, 1):
        return normalize_cycle(tuple(path))
    return None


def is_hamiltonian(g: Graph, budget: SearchBudget | None = None) -> bool:
    return hamiltonian_cycle(g, budget) is not None


# ---------------------------------------------------------------------------
# longest cycles
# ---------------------------------------------------------------------------


def longest_cycle(g: Graph, budget: SearchBudget | None = None) -> tuple[int, ...] | None:
    """A longest cycle of g (normalized), or None when g is acyclic.  Exact.

    A Hamilton check runs first; if it succeeds the answer is immediate, and
    if not the branch-and-bound can stop as soon as it reaches n-1 vertices.
    """
    n = g.n
    bud = _budget(budget)
    ham = hamiltonian_cycle(g, bud)
    if ham is not None:
        return ham
    cap = n - 1  # not Hamiltonian, so no cycle can beat this
    rows = g.rows
    twins = _twin_class_masks(g)
    best_len = 0
    best: tuple[int, ...] | None = None
    path: list[int] = []

    def extend(start: int, endpoint: int, visited: int, allowed: int) -> bool:
        """Returns True when the cap was reached and search should stop."""
        nonlocal best_len, best
        bud.spend()
        if len(path) >= 3 and rows[endpoint] >> start & 1 and len(path) > best_len:
            best_len = len(path)
            best = tuple(path)
            if best_len == cap:
                return True
        # bound: current length + what is still reachable from the endpoint
        unvisited = allowed & ~visited
        seen = 1 << endpoint
        frontier = seen
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= rows[w]
            frontier = nxt & unvisited & ~seen
            seen |= frontier
        if len(path) + (seen & unvisited).bit_count() <= best_len:
            return False
        for w in bits(rows[endpoint] & unvisited):
            low = twins[w] & unvisited
            if low & (low - 1) and (low & -low) != 1 << w:
                continue  # visit twin classes smallest-first
            path.append(w)
            if extend(start, w, visited | 1 << w, allowed):
                return True
            path.pop()
        return False

    for start in range(n - 2):
        # cycles whose smallest vertex is ``start``
        allowed = ~((1 << (start + 1)) - 1) & ((1 << n) - 1)
        path = [start]
        if extend(start, start, 1 << start, allowed | 1 << start):
            break
    if best is None:
        return None
    return normalize_cycle(best)


def circumference(g: Graph, budget: SearchBudget | None = None) -> int:
    cyc = longest_cycle(g, budget)
    return len(cyc) if cyc else 0


def cycles_of_length(g: Graph, length: int,
                     budget: SearchBudget | None = None) -> list[tuple[int, ...]]:
    """All simple cycles with exactly ``length`` vertices, each once
    (deduplicated by rotation/reflection), in deterministic order.
    """
    n = g.n
    if length < 3 or length > n:
        return []
    bud = _budget(budget)
    rows = g.rows
    out: list[tuple[int, ...]] = []
    path: list[int] = []

    def extend(start: int, endpoint: int, visited: int, allowed: int) -> None:
        bud.spend()
        if len(path) == length:
            if rows[endpoint] >> start & 1 and path[1] < path[-1]:
                out.append(tuple(path))
            return
        unvisited = allowed & ~visited
        seen = 1 << endpoint
        frontier = seen
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= rows[w]
            frontier = nxt & unvisited & ~seen
            seen |= frontier
        if len(path) + (seen & unvisited).bit_count() < length:
            return
        for w in bits(rows[endpoint] & unvisited):
            path.append(w)
            extend(start, w, visited | 1 << w, allowed)
            path.pop()

    for start in range(n - 2):
        allowed = ~((1 << (start + 1)) - 1) & ((1 << n) - 1)
        path = [start]
        extend(start, start, 1 << start, allowed | 1 << start)
    return out


def all_longest_cycles(g: Graph, budget: SearchBudget | None = None) -> list[tuple[int, ...]]:
    c = circumference(g, budget)
    if c == 0:
        return []
    return cycles_of_length(g, c, budget)


def every_longest_cycle_dominating(
    g: Graph, budget: SearchBudget | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """(True, None) if every longest cycle is dominating, else (False, bad cycle)."""
    for cyc in all_longest_cycles(g, budget):
        if not is_dominating(g, cyc):
            return False, cyc
    return True, None


def some_longest_cycle_dominating(
    g: Graph, budget: SearchBudget | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """(True, cycle) if some longest cycle is dominating, else (False, None).

    Acyclic graphs count as False (there is no longest cycle to exhibit).
    """
    for cyc in all_longest_cycles(g, budget):
        if is_dominating(g, cyc):
            return True, cyc
    return False, None


# ---------------------------------------------------------------------------
# dominating cycles
# ---------------------------------------------------------------------------


def _independent_sets_of_size(g: Graph, size: int):
    """Independent sets as bitmasks, lexicographically by ascending members."""
    n = g.n

    def grow(mask: int, start: int, left: int):
        if left == 0:
            yield mask
            return
        for v in range(start, n - left + 1):
            if g.rows[v] & mask:
                continue
            yield from grow(mask | 1 << v, v + 1, left - 1)

    yield from grow(0, 0, size)


def dominating_cycle(g: Graph, budget: SearchBudget | None = None) -> tuple[int, ...] | None:
    """A dominating cycle of maximum possible length, or None.

    A cycle C is dominating iff V - V(C) is independent, so the search walks
    independent sets I by ascending size (= cycle length descending) and asks
    whether G - I is Hamiltonian.  First hit wins; the enumeration order makes
    the answer deterministic.
    """
    n = g.n
    if n < 3:
        return None
    bud = _budget(budget)
    full = (1 << n) - 1
    for drop in range(0, n - 2):
        for imask in _independent_sets_of_size(g, drop):
            bud.spend()
            keepmask = full & ~imask
            # cheap kill: a Hamilton cycle of g - I needs degree >= 2 everywhere
            if any((g.rows[v] & keepmask).bit_count() < 2 for v in bits(keepmask)):
                continue
            keep = list(bits(keepmask))
            sub = g.induced(keep)
            if not is_two_connected(sub):
                continue  # Hamiltonian graphs are 2-connected
            cyc = hamiltonian_cycle(sub, bud)
            if cyc is not None:
                return normalize_cycle(tuple(keep[v] for v in cyc))
    return None


def has_dominating_cycle(g: Graph, budget: SearchBudget | None = None) -> bool:
    return dominating_cycle(g, budget) is not None


# ---------------------------------------------------------------------------
# assorted structure checks used by the verification harness
# ---------------------------------------------------------------------------


def complete_multipartite_parts(g: Graph) -> list[list[int]] | None:
    """The parts when g is complete multipartite, else None.

    g is complete multipartite iff non-adjacency is transitive, i.e. every
    connected component of the complement is a clique of the complement.
    """
    comp = g.complement()
    parts = comp.components()
    for part in parts:
        if not comp.is_clique_on(part):
            return None
    return parts


def is_complete_multipartite(g: Graph) -> bool:
    return complete_multipartite_parts(g) is not None


def neighborhood_on_cycle(g: Graph, cycle: tuple[int, ...], component: list[int]) -> set[int]:
    """Cycle vertices adjacent to at least one vertex of ``component``."""
    cmask = mask_of(component)
    return {c for c in cycle if g.rows[c] & cmask}


def successor_disjointness(
    g: Graph, cycle: tuple[int, ...], known_circumference: int | None = None
) -> tuple[bool, tuple[int, int] | None]:
    """Check N(H;C) and its successor set are disjoint for every component H
    of g - V(C).  Returns (ok, witness) where witness is (vertex, successor)
    for the first failure.

    Precondition: ``cycle`` must be a longest cycle of g (ValueError if not);
    pass ``known_circumference`` to skip recomputing it.
    """
    from .graphs import check_cycle

    check_cycle(g, cycle)
    circ = known_circumference if known_circumference is not None else circumference(g)
    if len(cycle) != circ:
        raise ValueError("cycle is not a longest cycle")
    k = len(cycle)
    succ = {cycle[i]: cycle[(i + 1) % k] for i in range(k)}
    onmask = mask_of(cycle)
    rest = g.remove_vertices(cycle)
    outside = [v for v in g.vertices() if not onmask >> v & 1]
    for comp in rest.components():
        comp_orig = [outside[v] for v in comp]
        attach = neighborhood_on_cycle(g, cycle, comp_orig)
        succs = {succ[c] for c in attach}
        bad = attach & succs
        if bad:
            v = min(bad)
            prev = next(c for c in attach if succ[c] == v)
            return False, (prev, v)
    return True, None
