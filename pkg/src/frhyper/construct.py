"""Recursive growth of linear hypergraphs, i.e. universally good FR codes.

Three linearity-preserving edits are supported: appending a hyperedge,
appending a fresh vertex together with a hyperedge through it, and replacing
a hyperedge by a proper superset (raising one packet's replication).  The
grower starts from a single hyperedge over ``rho_min`` vertices, adds one
vertex per step until the target vertex count, then densifies with extra
hyperedges until the target edge count.  Every intermediate state is linear,
so every intermediate FR code is universally good, and each earlier state is
an adaptation of each later one (drop the new nodes and packets).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import (
    IdOutOfRangeError,
    LinearityViolationError,
    NotASupersetError,
    TargetInfeasibleError,
    ValidationError,
)
from .model import FRCode, Hypergraph, hypergraph_to_fr, is_linear

GREEDY = "greedy"
RANDOM = "random"


@dataclass(frozen=True)
class TraceStep:
    """One accepted operation, snapshotting the state after it."""

    step: int
    operation: str  # "initial" | "add-vertex" | "add-edge" | "extend-edge"
    edge: tuple[int, ...]
    vertex: int | None
    floor_relaxed: bool
    hypergraph: Hypergraph


class ConstructionState:
    """A growing linear hypergraph; single-owner, mutated sequentially.

    ``history`` holds one row per accepted operation (the initial hyperedge
    included), each with a snapshot, so construction traces can be printed
    or replayed as adaptation chains.
    """

    def __init__(self, rho_min: int = 2, strategy: str = GREEDY, seed: int | None = None):
        if rho_min < 2:
            raise ValidationError("rho_min must be at least 2")
        if strategy not in (GREEDY, RANDOM):
            raise ValidationError(f"unknown strategy {strategy!r}")
        self.rho_min = rho_min
        self.strategy = strategy
        self.rng = random.Random(seed)
        self.num_vertices = rho_min
        self.edges: list[frozenset[int]] = [frozenset(range(1, rho_min + 1))]
        self.history: list[TraceStep] = []
        self._record("initial", self.edges[0], None, False)

    @classmethod
    def from_hypergraph(
        cls,
        h: Hypergraph,
        rho_min: int = 2,
        strategy: str = GREEDY,
        seed: int | None = None,
    ) -> "ConstructionState":
        """Resume construction from an existing linear hypergraph.

        Isolated vertices are allowed (they are growth capacity); empty
        hyperedges are not.
        """
        if not is_linear(h):
            raise ValidationError("seed hypergraph is not linear")
        if not all(h.edges):
            raise ValidationError("seed hypergraph has an empty hyperedge")
        state = cls.__new__(cls)
        if rho_min < 2:
            raise ValidationError("rho_min must be at least 2")
        if strategy not in (GREEDY, RANDOM):
            raise ValidationError(f"unknown strategy {strategy!r}")
        state.rho_min = rho_min
        state.strategy = strategy
        state.rng = random.Random(seed)
        state.num_vertices = h.num_vertices
        state.edges = list(h.edges)
        state.history = []
        state._record("initial", frozenset(), None, False)
        return state

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def hypergraph(self) -> Hypergraph:
        return Hypergraph(num_vertices=self.num_vertices, edges=tuple(self.edges))

    @property
    def code(self) -> FRCode:
        return hypergraph_to_fr(self.hypergraph)

    def degrees(self) -> list[int]:
        counts = [0] * (self.num_vertices + 1)
        for e in self.edges:
            for v in e:
                counts[v] += 1
        return counts

    def _record(self, operation: str, edge: frozenset[int], vertex: int | None,
                floor_relaxed: bool) -> None:
        self.history.append(
            TraceStep(
                step=len(self.history) + 1,
                operation=operation,
                edge=tuple(sorted(edge)),
                vertex=vertex,
                floor_relaxed=floor_relaxed,
                hypergraph=self.hypergraph,
            )
        )

    def _offender(self, candidate: frozenset[int], skip: int | None = None) -> int | None:
        """Index (1-based) of an existing edge sharing >= 2 vertices, if any."""
        for idx, e in enumerate(self.edges, 1):
            if idx == skip:
                continue
            if len(candidate & e) > 1:
                return idx
        return None


def add_hyperedge(state: ConstructionState, edge: Iterable[int]) -> ConstructionState:
    """Append a hyperedge; legal exactly when it meets every existing
    hyperedge in at most one vertex."""
    candidate = frozenset(edge)
    if len(candidate) < 2:
        raise ValidationError("a new hyperedge needs at least 2 vertices")
    for v in candidate:
        if not 1 <= v <= state.num_vertices:
            raise IdOutOfRangeError("vertex", v, state.num_vertices)
    offender = state._offender(candidate)
    if offender is not None:
        raise LinearityViolationError(offender, len(candidate & state.edges[offender - 1]))
    state.edges.append(candidate)
    state._record("add-edge", candidate, None, len(candidate) < state.rho_min)
    return state


def add_vertex_with_edge(state: ConstructionState, base: Iterable[int]) -> ConstructionState:
    """Append a fresh vertex and the hyperedge base + {new vertex}.

    Legal exactly when the base meets every existing hyperedge in at most
    one vertex (the fresh vertex cannot create overlap).  A singleton base
    therefore always succeeds.
    """
    base_set = frozenset(base)
    if not base_set:
        raise ValidationError("base must contain at least one existing vertex")
    for v in base_set:
        if not 1 <= v <= state.num_vertices:
            raise IdOutOfRangeError("vertex", v, state.num_vertices)
    offender = state._offender(base_set)
    if offender is not None:
        raise LinearityViolationError(offender, len(base_set & state.edges[offender - 1]))
    new_vertex = state.num_vertices + 1
    state.num_vertices = new_vertex
    candidate = base_set | {new_vertex}
    state.edges.append(candidate)
    state._record("add-vertex", candidate, new_vertex, len(candidate) < state.rho_min)
    return state


def extend_hyperedge(
    state: ConstructionState, target: int, superset: Iterable[int]
) -> ConstructionState:
    """Replace hyperedge ``target`` (1-based) by a proper superset.

    In FR terms this raises the replication factor of one packet.  Legal
    exactly when the superset meets every other hyperedge in at most one
    vertex.
    """
    if not 1 <= target <= state.num_edges:
        raise IdOutOfRangeError("hyperedge", target, state.num_edges)
    new_edge = frozenset(superset)
    for v in new_edge:
        if not 1 <= v <= state.num_vertices:
            raise IdOutOfRangeError("vertex", v, state.num_vertices)
    current = state.edges[target - 1]
    if not (current < new_edge):
        raise NotASupersetError(target)
    offender = state._offender(new_edge, skip=target)
    if offender is not None:
        raise LinearityViolationError(offender, len(new_edge & state.edges[offender - 1]))
    state.edges[target - 1] = new_edge
    state._record("extend-edge", new_edge, None, False)
    return state


def _base_passes(state: ConstructionState, base: tuple[int, ...]) -> bool:
    return state._offender(frozenset(base)) is None


def _pick_base(state: ConstructionState) -> tuple[int, ...]:
    """Choose the base for the next vertex addition.

    Greedy: the rho_min - 1 lowest-degree vertices (ties by index) whose
    edge passes; random: uniform among all passing bases of that size.
    When no base of the full size passes, fall back to the single
    lowest-degree vertex, which always passes but relaxes the rho_min floor.
    """
    degs = state.degrees()
    by_preference = sorted(range(1, state.num_vertices + 1), key=lambda v: (degs[v], v))
    want = state.rho_min - 1
    if want <= state.num_vertices:
        if state.strategy == GREEDY:
            for combo in combinations(by_preference, want):
                if _base_passes(state, combo):
                    return combo
        else:
            eligible = [
                combo
                for combo in combinations(range(1, state.num_vertices + 1), want)
                if _base_passes(state, combo)
            ]
            if eligible:
                return state.rng.choice(eligible)
    return (by_preference[0],)


def grow_to(state: ConstructionState, n: int) -> ConstructionState:
    """Add vertices (one hyperedge each) until exactly n vertices."""
    if n < state.num_vertices:
        raise ValidationError(
            f"cannot shrink: state has {state.num_vertices} vertices, target {n}"
        )
    while state.num_vertices < n:
        add_vertex_with_edge(state, _pick_base(state))
    return state


def _densify_step(state: ConstructionState) -> bool:
    """Add one extra hyperedge of the smallest legal size >= rho_min.

    Candidates are enumerated smallest size first, lexicographically; the
    greedy strategy takes the first legal candidate, the random strategy a
    uniform legal candidate of that smallest size.  Returns False when no
    legal candidate of any size exists.
    """
    vertices = range(1, state.num_vertices + 1)
    for size in range(state.rho_min, state.num_vertices + 1):
        if state.strategy == GREEDY:
            for combo in combinations(vertices, size):
                candidate = frozenset(combo)
                if state._offender(candidate) is None:
                    add_hyperedge(state, candidate)
                    return True
        else:
            eligible = [
                frozenset(combo)
                for combo in combinations(vertices, size)
                if state._offender(frozenset(combo)) is None
            ]
            if eligible:
                add_hyperedge(state, state.rng.choice(eligible))
                return True
    return False


def densify_to(state: ConstructionState, theta: int) -> ConstructionState:
    """Add hyperedges until exactly ``theta``; raises when linearity blocks
    the target, reporting the best achieved count."""
    while state.num_edges < theta:
        if not _densify_step(state):
            raise TargetInfeasibleError(theta, state.num_edges)
    return state


def algorithm1(
    n: int,
    rho_min: int = 2,
    *,
    strategy: str = GREEDY,
    seed: int | None = None,
    theta: int | None = None,
) -> ConstructionState:
    """Grow a linear hypergraph on n vertices, optionally to theta edges.

    Growth emits n - rho_min + 1 hyperedges; a larger ``theta`` is reached
    by densification.  The corresponding FR code is universally good, and
    every prefix state is an adaptation of every later state.
    """
    if rho_min < 2:
        raise ValidationError("rho_min must be at least 2")
    if n < rho_min:
        raise ValidationError(f"need n >= rho_min, got n={n}, rho_min={rho_min}")
    grown_edges = n - rho_min + 1
    if theta is not None and theta < grown_edges:
        raise ValidationError(
            f"growth alone emits {grown_edges} hyperedges; theta={theta} is below that"
        )
    state = ConstructionState(rho_min=rho_min, strategy=strategy, seed=seed)
    grow_to(state, n)
    if theta is not None:
        densify_to(state, theta)
    return state


def format_trace(state: ConstructionState) -> str:
    """Render the history as aligned step rows with the FR-code view."""
    lines = []
    for row in state.history:
        try:
            code = hypergraph_to_fr(row.hypergraph)
            nodes = " ".join(
                "U%d={%s}" % (i, ",".join(f"P{p}" for p in sorted(u)))
                for i, u in enumerate(code.nodes, 1)
            )
        except ValidationError:
            nodes = "(not FR-equivalent)"
        edge = "{%s}" % ",".join(f"v{v}" for v in row.edge) if row.edge else "-"
        note = "  [rho_min floor relaxed]" if row.floor_relaxed else ""
        lines.append(
            f"step {row.step}: {row.operation:<11} edge={edge:<16} | {nodes}{note}"
        )
    return "\n".join(lines) + "\n"
