"""Constructors for the named small graphs and the counterexample families.

Every constructor documents its vertex numbering; all of them are
deterministic, so tests can freeze exact edge lists.
"""
from __future__ import annotations

import importlib.resources

from .graphs import Graph, disjoint_union, join, union_of_copies

# ---------------------------------------------------------------------------
# named small graphs
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be >= 0")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """P_n: vertices 0..n-1 in path order."""
    if n < 1:
        raise ValueError("a path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def spider(*legs: int) -> Graph:
    """Center 0; leg paths appended one after another, inner vertex first."""
    if any(l < 1 for l in legs):
        raise ValueError("spider legs must have length >= 1")
    edges = []
    nxt = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def claw() -> Graph:
    """K_{1,3}: center 0, leaves 1..3."""
    return spider(1, 1, 1)


def subdivided_claw() -> Graph:
    """Claw with every edge subdivided once: center 0, legs 1-2, 3-4, 5-6."""
    return spider(2, 2, 2)


def almost_subdivided_claw() -> Graph:
    """Claw with two edges subdivided: center 0, legs 1-2, 3-4 and leaf 5."""
    return spider(2, 2, 1)


def triangle_with_legs(*legs: int) -> Graph:
    """Triangle 0,1,2 with a pendant path of legs[i] vertices hanging off
    triangle vertex i (vertices numbered leg by leg after the triangle).

    Leg lengths count the vertices strictly beyond the triangle and must be
    >= 1; use ``complete(3)`` for the bare triangle.
    """
    if any(l < 1 for l in legs):
        raise ValueError("leg lengths must be >= 1")
    if len(legs) > 3:
        raise ValueError("at most three legs")
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for anchor, leg in enumerate(legs):
        prev = anchor
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def z_graph(n: int) -> Graph:
    """Z_n: triangle plus an n-vertex pendant path at triangle vertex 0."""
    if n < 1:
        raise ValueError("Z_n needs n >= 1")
    return triangle_with_legs(n)


def b_graph(m: int, n: int) -> Graph:
    """B_{m,n}: triangle plus pendant paths of m and n vertices at vertices 0, 1."""
    if m < 1 or n < 1:
        raise ValueError("B_{m,n} needs m, n >= 1")
    return triangle_with_legs(m, n)


def n_graph(l: int, m: int, n: int) -> Graph:
    """N_{l,m,n}: triangle plus pendant paths of l, m, n vertices at 0, 1, 2."""
    if l < 1 or m < 1 or n < 1:
        raise ValueError("N_{l,m,n} needs l, m, n >= 1")
    return triangle_with_legs(l, m, n)


def w_graph() -> Graph:
    """W = K_1 + 3K_2: hub 0, pendant-pair edges (1,2), (3,4), (5,6)."""
    return join(complete(1), union_of_copies(complete(2), 3))


def w_star() -> Graph:
    """W* = K_1 + (K_1 u 2K_2): hub 0, lone vertex 1, pairs (2,3), (4,5)."""
    return join(complete(1), disjoint_union(complete(1), union_of_copies(complete(2), 2)))


def k4_minus() -> Graph:
    """K_4 on 0..3 minus the edge (2,3)."""
    return complete(4).remove_edges([(2, 3)])


_NAMED = {
    "K13": lambda l, m, n: claw(),
    "K13s": lambda l, m, n: subdivided_claw(),
    "K13ss": lambda l, m, n: almost_subdivided_claw(),
    "P": lambda l, m, n: path(_need(n, "P needs --n")),
    "Z": lambda l, m, n: z_graph(_need(n, "Z needs --n")),
    "B": lambda l, m, n: b_graph(_need(m, "B needs --m"), _need(n, "B needs --n")),
    "N": lambda l, m, n: n_graph(
        _need(l, "N needs --l"), _need(m, "N needs --m"), _need(n, "N needs --n")
    ),
    "W": lambda l, m, n: w_graph(),
    "Ws": lambda l, m, n: w_star(),
    "K4m": lambda l, m, n: k4_minus(),
}

NAMED_GRAPHS = tuple(sorted(_NAMED))


def _need(value: int | None, message: str) -> int:
    if value is None:
        raise ValueError(message)
    return value


def make_named(name: str, l: int | None = None, m: int | None = None,
               n: int | None = None) -> Graph:
    """Build a named graph by its short CLI name (see NAMED_GRAPHS)."""
    try:
        builder = _NAMED[name]
    except KeyError:
        raise ValueError(f"unknown graph name {name!r}; choose from {NAMED_GRAPHS}")
    return builder(l, m, n)


# ---------------------------------------------------------------------------
# forbidden pairs
# ---------------------------------------------------------------------------


def forbidden_pairs() -> dict[str, tuple[Graph, Graph]]:
    """The eight named forbidden pairs, keyed by their CLI set names."""
    return {
        "H1": (claw(), z_graph(4)),
        "H2": (claw(), b_graph(1, 2)),
        "H3": (claw(), n_graph(1, 1, 1)),
        "H4": (path(4), w_graph()),
        "H5": (subdivided_claw(), z_graph(1)),
        "H6": (path(5), w_star()),
        "H7": (path(5), k4_minus()),
        "H5P": (almost_subdivided_claw(), z_graph(1)),
    }


# ---------------------------------------------------------------------------
# families without dominating cycles
# ---------------------------------------------------------------------------


def theta_family(s: int) -> Graph:
    """A_s, s >= 2: two hub vertices 0 and 1 joined by three internally
    disjoint paths with s interior vertices each (3s+2 vertices total).

    Interior vertices of branch b are 2+b*s .. 1+(b+1)*s, in path order
    from hub 0 to hub 1.
    """
    if s < 2:
        raise ValueError("A_s needs s >= 2")
    edges = []
    for b in range(3):
        inner = list(range(2 + b * s, 2 + (b + 1) * s))
        edges.append((0, inner[0]))
        edges.extend(zip(inner, inner[1:]))
        edges.append((inner[-1], 1))
    return Graph.from_edges(3 * s + 2, edges)


def matching_join_family(s: int) -> Graph:
    """A'_s = 2K_1 + sK_2, s >= 3: hubs 0, 1; pair j is (2+2j, 3+2j)."""
    if s < 3:
        raise ValueError("A'_s needs s >= 3")
    return join(Graph.from_edges(2, []), union_of_copies(complete(2), s))


def clique_join_family(s: int) -> Graph:
    """A''_s = K_2 + (2K_2 u K_s), s >= 2: join edge (0,1); pairs (2,3),
    (4,5); clique vertices 6..s+5.
    """
    if s < 2:
        raise ValueError("A''_s needs s >= 2")
    inner = disjoint_union(union_of_copies(complete(2), 2), complete(s))
    return join(complete(2), inner)


def two_triangle_family(s: int) -> Graph:
    """A1_s, s >= 2: triangles {0,1,2} and {3,4,5} joined by three disjoint
    paths with s interior vertices each; path b runs from b to b+3 through
    interiors 6+b*s .. 5+(b+1)*s (3s+6 vertices total).
    """
    if s < 2:
        raise ValueError("A1_s needs s >= 2")
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    for b in range(3):
        inner = list(range(6 + b * s, 6 + (b + 1) * s))
        edges.append((b, inner[0]))
        edges.extend(zip(inner, inner[1:]))
        edges.append((inner[-1], b + 3))
    return Graph.from_edges(3 * s + 6, edges)


def three_clique_ring_family(s: int) -> Graph:
    """A2_s, s >= 4: cliques K_s on [i*s, (i+1)*s) for i = 0,1,2, with
    u_i = i*s and v_i = i*s+1 and ring edges u_i u_{i+1}, v_i v_{i+1}.
    """
    if s < 4:
        raise ValueError("A2_s needs s >= 4")
    g = union_of_copies(complete(s), 3)
    ring = []
    for i in range(3):
        j = (i + 1) % 3
        ring.append((i * s, j * s))
        ring.append((i * s + 1, j * s + 1))
    return g.add_edges(ring)


def three_clique_ring_reduced_family(s: int) -> Graph:
    """A3_s = A2_s minus the three in-clique edges u_i v_i."""
    if s < 4:
        raise ValueError("A3_s needs s >= 4")
    return three_clique_ring_family(s).remove_edges([(i * s, i * s + 1) for i in range(3)])


def subdivided_clique_join_family(s: int) -> Graph:
    """A4_s, s >= 2: K_2 + (K_2 u K_s) with its join edge subdivided twice.

    Join pair {0,1}; pair (2,3); clique 4..s+3; the path replacing the edge
    (0,1) is 0, s+4, s+5, 1.
    """
    if s < 2:
        raise ValueError("A4_s needs s >= 2")
    base = join(complete(2), disjoint_union(complete(2), complete(s)))
    g = base.remove_edges([(0, 1)])
    g = disjoint_union(g, Graph.from_edges(2, [(0, 1)]))
    return g.add_edges([(0, s + 4), (s + 5, 1)])


def double_star_family(s: int) -> Graph:
    """A5_s, s >= 3: hubs 0, 1 with the edge (0,1); rung j is the edge
    (2+2j, 3+2j) with 0 adjacent to 2+2j and 1 adjacent to 3+2j.
    Triangle-free, 2s+2 vertices.
    """
    if s < 3:
        raise ValueError("A5_s needs s >= 3")
    edges = [(0, 1)]
    for j in range(s):
        a, b = 2 + 2 * j, 3 + 2 * j
        edges += [(a, b), (0, a), (1, b)]
    return Graph.from_edges(2 * s + 2, edges)


def clique_bridge_family(s: int, sp: int, t: int) -> Graph:
    """F_{s,s',t}: disjoint K_s (0..s-1) and K_{s'} (s..s+s'-1) connected by
    2t+1 vertex-disjoint triangles; triangle i uses clique vertices i and
    s+i plus the fresh middle vertex s+s'+i.

    Requires s' >= s >= 3 and 1 <= t <= (s-1)/2.
    """
    if s < 3 or sp < s:
        raise ValueError("F_{s,s',t} needs s' >= s >= 3")
    if t < 1 or 2 * t > s - 1:
        raise ValueError("F_{s,s',t} needs 1 <= t <= (s-1)/2")
    g = disjoint_union(complete(s), complete(sp))
    g = disjoint_union(g, Graph.from_edges(2 * t + 1, []))
    extra = []
    for i in range(2 * t + 1):
        mid = s + sp + i
        extra += [(i, s + i), (i, mid), (s + i, mid)]
    return g.add_edges(extra)


# ---------------------------------------------------------------------------
# sporadic fixtures
# ---------------------------------------------------------------------------

_FIXTURE_CACHE: dict[str, Graph] | None = None


def _load_fixture() -> dict[str, Graph]:
    global _FIXTURE_CACHE
    if _FIXTURE_CACHE is None:
        text = (
            importlib.resources.files("domcycle.data")
            .joinpath("sporadic_fixture.txt")
            .read_text()
        )
        graphs: dict[str, Graph] = {}
        name = None
        n = 0
        edges: list[tuple[int, int]] = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "graph":
                if name is not None:
                    graphs[name] = Graph.from_edges(n, edges)
                name, n, edges = parts[1], int(parts[2]), []
            elif parts[0] == "edge":
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError(f"bad fixture line: {line!r}")
        if name is not None:
            graphs[name] = Graph.from_edges(n, edges)
        _FIXTURE_CACHE = graphs
    return _FIXTURE_CACHE


def sporadic(i: int) -> Graph:
    """The fixture graph F_i, i in 1..4."""
    if i not in (1, 2, 3, 4):
        raise ValueError("sporadic index must be 1..4")
    return _load_fixture()[f"F{i}"]


# ---------------------------------------------------------------------------
# family dispatch (CLI names)
# ---------------------------------------------------------------------------

FAMILY_BUILDERS = {
    "A": theta_family,
    "Ap": matching_join_family,
    "App": clique_join_family,
    "A1": two_triangle_family,
    "A2": three_clique_ring_family,
    "A3": three_clique_ring_reduced_family,
    "A4": subdivided_clique_join_family,
    "A5": double_star_family,
}

FAMILY_MIN_S = {"A": 2, "Ap": 3, "App": 2, "A1": 2, "A2": 4, "A3": 4, "A4": 2, "A5": 3}

FAMILY_ORDER_FORMULA = {
    "A": lambda s: 3 * s + 2,
    "Ap": lambda s: 2 * s + 2,
    "App": lambda s: s + 6,
    "A1": lambda s: 3 * s + 6,
    "A2": lambda s: 3 * s,
    "A3": lambda s: 3 * s,
    "A4": lambda s: s + 6,
    "A5": lambda s: 2 * s + 2,
}


def make_family(family: str, s: int | None = None, sp: int | None = None,
                t: int | None = None) -> Graph:
    """Build a family member by CLI name: A, Ap, App, A1..A5, Fsst, F1..F4."""
    if family in FAMILY_BUILDERS:
        if s is None:
            raise ValueError(f"family {family} needs --s")
        return FAMILY_BUILDERS[family](s)
    if family == "Fsst":
        if s is None or sp is None or t is None:
            raise ValueError("family Fsst needs --s, --sp and --t")
        return clique_bridge_family(s, sp, t)
    if family in ("F1", "F2", "F3", "F4"):
        return sporadic(int(family[1]))
    raise ValueError(f"unknown family {family!r}")
