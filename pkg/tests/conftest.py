"""Shared helpers: tiny brute-force oracles the fast code is tested against."""
from __future__ import annotations

import itertools
import random

import pytest

from domcycle.graphs import Graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def brute_force_induced_embedding(g: Graph, h: Graph):
    """Slow reference: try every |V(h)|-subset and every bijection."""
    hn, gn = h.n, g.n
    if hn > gn:
        return None
    for subset in itertools.combinations(range(gn), hn):
        for perm in itertools.permutations(subset):
            ok = True
            for a in range(hn):
                for b in range(a + 1, hn):
                    if h.has_edge(a, b) != g.has_edge(perm[a], perm[b]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return perm
    return None


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    return brute_force_induced_embedding(g, h) is not None


def all_cycles_brute(g: Graph) -> set[tuple[int, ...]]:
    """Every cycle of g as a normalized vertex tuple, by sheer enumeration."""
    from domcycle.graphs import normalize_cycle

    out = set()
    n = g.n
    for k in range(3, n + 1):
        for subset in itertools.combinations(range(n), k):
            first = subset[0]
            for perm in itertools.permutations(subset[1:]):
                cyc = (first,) + perm
                if all(
                    g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)
                ):
                    out.add(normalize_cycle(cyc))
    return out


@pytest.fixture
def rng():
    return random.Random(20260815)


# acceptance-gate bookkeeping: test_acceptance.py records one line per
# criterion and the summary hook echoes them after the run, pass or fail
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
