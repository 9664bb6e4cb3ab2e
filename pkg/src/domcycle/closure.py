"""Neighborhood-completion closure of claw-free graphs.

A vertex is eligible when its neighborhood induces a connected, incomplete
graph; completing it (adding all missing edges inside the neighborhood)
preserves claw-freeness and the circumference, and iterating to a fixpoint
yields the same graph no matter the completion order.  The default order is
lowest eligible vertex first; ``closure_order_independent`` samples random
orders to check the fixpoint really is order-free.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph, bits
from .iso import induced_copy
from .zoo import claw

TraceStep = tuple[int, tuple[tuple[int, int], ...]]


def _require_claw_free(g: Graph) -> None:
    witness = induced_copy(g, claw())
    if witness is not None:
        raise ValueError(f"graph is not claw-free: induced claw on {witness}")


def eligible_vertices(g: Graph) -> list[int]:
    """Vertices whose neighborhood induces a connected non-complete graph.

    Precondition: g is claw-free (ValueError with a witness otherwise).
    """
    _require_claw_free(g)
    return _eligible_unchecked(g)


def _eligible_unchecked(g: Graph) -> list[int]:
    out = []
    for v in g.vertices():
        nb = list(bits(g.rows[v]))
        if len(nb) < 2:
            continue
        sub = g.induced(nb)
        if sub.is_connected() and sub.m < sub.n * (sub.n - 1) // 2:
            out.append(v)
    return out


def _complete_neighborhood(g: Graph, v: int) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    nb = list(bits(g.rows[v]))
    missing = tuple(
        (a, b) for i, a in enumerate(nb) for b in nb[i + 1:] if not g.has_edge(a, b)
    )
    return g.add_edges(missing), missing


@dataclass(frozen=True)
class ClosureResult:
    graph: Graph
    trace: tuple[TraceStep, ...]

    @property
    def added_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for _, edges in self.trace for e in edges)


def closure(g: Graph) -> ClosureResult:
    """Complete eligible neighborhoods, lowest vertex first, to a fixpoint.

    Precondition: g is claw-free.  The trace records each completed vertex
    with the edges its completion added.
    """
    _require_claw_free(g)
    steps: list[TraceStep] = []
    cur = g
    while True:
        elig = _eligible_unchecked(cur)
        if not elig:
            break
        v = elig[0]
        cur, added = _complete_neighborhood(cur, v)
        if __debug__:
            assert induced_copy(cur, claw()) is None, "completion created a claw"
        steps.append((v, added))
    return ClosureResult(cur, tuple(steps))


def closure_order_independent(g: Graph, trials: int = 20, seed: int = 0) -> bool:
    """Run the closure ``trials`` times with random eligible-vertex choices
    and report whether every run reaches the same edge set as ``closure(g)``.
    """
    reference = closure(g).graph
    rng = random.Random(seed)
    for _ in range(trials):
        cur = g
        while True:
            elig = _eligible_unchecked(cur)
            if not elig:
                break
            v = elig[rng.randrange(len(elig))]
            cur, _ = _complete_neighborhood(cur, v)
        if cur != reference:
            return False
    return True
