"""FR codes and hypergraphs as two views of one incidence structure.

An FR code places theta replicated packets on n storage nodes; the same
incidence structure read transposed is a hypergraph whose vertices are the
nodes and whose j-th hyperedge is the set of nodes holding packet j.  Node
capacities alpha_i become vertex degrees and replication factors rho_j become
hyperedge sizes, so every structural statement about one view translates to
the other.  This module owns both representations, the conversions, duality,
and the structural classification flags.

All ids are 1-based in every public surface.  Values are immutable after
construction and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicatePacketError,
    EmptyEdgeError,
    EmptyNodeError,
    IdOutOfRangeError,
    IsolatedVertexError,
    OrphanPacketError,
    ValidationError,
)


def _canonical_sets(groups: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(g) for g in groups)


@dataclass(frozen=True)
class FRCode:
    """An FR code: n node contents over packets 1..theta.

    Invariants (enforced on construction): n >= 1, theta >= 1, every node
    non-empty, every packet id within 1..theta, and every packet stored on
    at least one node.  The storage vector alpha and replication vector rho
    are derived, never stored.
    """

    nodes: tuple[frozenset[int], ...]
    theta: int

    def __post_init__(self):
        if len(self.nodes) < 1:
            raise ValidationError("an FR code needs at least one node")
        if self.theta < 1:
            raise ValidationError("an FR code needs at least one packet")
        seen: set[int] = set()
        for i, content in enumerate(self.nodes, start=1):
            if not content:
                raise EmptyNodeError(i)
            for p in content:
                if not 1 <= p <= self.theta:
                    raise IdOutOfRangeError("packet", p, self.theta)
            seen.update(content)
        for j in range(1, self.theta + 1):
            if j not in seen:
                raise OrphanPacketError(j)

    @property
    def n(self) -> int:
        return len(self.nodes)

    @cached_property
    def alpha_vec(self) -> tuple[int, ...]:
        """Per-node storage: alpha_i = |U_i|."""
        return tuple(len(u) for u in self.nodes)

    @cached_property
    def rho_vec(self) -> tuple[int, ...]:
        """Per-packet replication: rho_j = number of nodes holding packet j."""
        counts = [0] * self.theta
        for u in self.nodes:
            for p in u:
                counts[p - 1] += 1
        return tuple(counts)

    @property
    def alpha(self) -> int:
        return max(self.alpha_vec)

    @property
    def rho(self) -> int:
        return max(self.rho_vec)

    @cached_property
    def node_masks(self) -> tuple[int, ...]:
        """Node contents as packet bitmasks (bit j-1 = packet j)."""
        return tuple(
            sum(1 << (p - 1) for p in u) for u in self.nodes
        )

    def holders(self, packet: int) -> frozenset[int]:
        """Ids of the nodes storing ``packet``."""
        if not 1 <= packet <= self.theta:
            raise IdOutOfRangeError("packet", packet, self.theta)
        return frozenset(i for i, u in enumerate(self.nodes, 1) if packet in u)

    def sorted_nodes(self) -> tuple[tuple[int, ...], ...]:
        """Canonical form: each node as an ascending tuple, node order kept."""
        return tuple(tuple(sorted(u)) for u in self.nodes)


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph: ``num_vertices`` vertices and an ordered hyperedge list.

    A raw hypergraph may contain empty hyperedges and isolated vertices;
    only the FR-equivalent subclass (every edge non-empty, every vertex
    covered) converts to an FR code.  Duplicate hyperedges are permitted:
    nothing in the FR model forbids two packets living on the same node set.
    """

    num_vertices: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.num_vertices < 1:
            raise ValidationError("a hypergraph needs at least one vertex")
        for e in self.edges:
            for v in e:
                if not 1 <= v <= self.num_vertices:
                    raise IdOutOfRangeError("vertex", v, self.num_vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edges_at(self, vertex: int) -> tuple[int, ...]:
        """Indices (1-based) of the hyperedges containing ``vertex``."""
        if not 1 <= vertex <= self.num_vertices:
            raise IdOutOfRangeError("vertex", vertex, self.num_vertices)
        return tuple(j for j, e in enumerate(self.edges, 1) if vertex in e)

    def degree(self, vertex: int) -> int:
        return len(self.edges_at(vertex))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        counts = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                counts[v - 1] += 1
        return tuple(counts)

    def is_fr_equivalent(self) -> bool:
        """True when every edge is non-empty and every vertex is covered."""
        return all(self.edges) and all(d > 0 for d in self.degrees)

    def sorted_edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(e)) for e in self.edges)


@dataclass(frozen=True)
class DualMap:
    """Bijection from hyperedge index to dual-vertex index (identity here)."""

    forward: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.forward) != list(range(1, len(self.forward) + 1)):
            raise ValidationError("dual map must be a bijection on 1..|edges|")


@dataclass(frozen=True)
class ClassificationFlags:
    """Structural flags of a hypergraph (mutually independent)."""

    uniform: bool
    edge_size: int | None
    regular: bool
    degree: int | None
    linear: bool
    intersecting: bool
    connected: bool


def validate_fr(candidate: Sequence[Iterable[int]], theta: int) -> FRCode:
    """Validate raw node-content lists into an FR code.

    Unlike the FRCode constructor this accepts arbitrary iterables and
    reports duplicated packet ids inside a node instead of silently
    collapsing them.
    """
    groups = []
    for i, raw in enumerate(candidate, start=1):
        items = list(raw)
        uniq = set(items)
        if len(uniq) != len(items):
            dup = next(p for p in items if items.count(p) > 1)
            raise DuplicatePacketError(i, dup)
        groups.append(uniq)
    return FRCode(nodes=_canonical_sets(groups), theta=theta)


def fr_to_hypergraph(code: FRCode) -> Hypergraph:
    """Transpose an FR code into its hypergraph view.

    Vertex i stands for node U_i and hyperedge j collects the nodes holding
    packet j, so vertex degrees equal alpha and edge sizes equal rho.
    """
    edges = tuple(
        frozenset(i for i, u in enumerate(code.nodes, 1) if j in u)
        for j in range(1, code.theta + 1)
    )
    return Hypergraph(num_vertices=code.n, edges=edges)


def hypergraph_to_fr(h: Hypergraph) -> FRCode:
    """Transpose an FR-equivalent hypergraph back into an FR code.

    Exact inverse of :func:`fr_to_hypergraph`; raises when the existence
    conditions fail (an empty hyperedge or an isolated vertex).
    """
    for j, e in enumerate(h.edges, 1):
        if not e:
            raise EmptyEdgeError(j)
    contents: list[set[int]] = [set() for _ in range(h.num_vertices)]
    for j, e in enumerate(h.edges, 1):
        for v in e:
            contents[v - 1].add(j)
    for i, u in enumerate(contents, 1):
        if not u:
            raise IsolatedVertexError(i)
    return FRCode(nodes=_canonical_sets(contents), theta=h.num_edges)


def dual(h: Hypergraph) -> tuple[Hypergraph, DualMap]:
    """Incidence-transpose a hypergraph.

    The dual has one vertex per original hyperedge and one hyperedge per
    original vertex; dual edge j collects the indices of the original edges
    containing vertex j.  Requires no empty edges and no isolated vertices,
    and then ``dual(dual(h)) == h`` exactly.
    """
    for j, e in enumerate(h.edges, 1):
        if not e:
            raise EmptyEdgeError(j)
    for i, d in enumerate(h.degrees, 1):
        if d == 0:
            raise IsolatedVertexError(i)
    dual_edges = tuple(
        frozenset(i for i, e in enumerate(h.edges, 1) if j in e)
        for j in range(1, h.num_vertices + 1)
    )
    mapping = DualMap(forward=tuple(range(1, h.num_edges + 1)))
    return Hypergraph(num_vertices=h.num_edges, edges=dual_edges), mapping


def is_linear(h: Hypergraph) -> bool:
    """True when every pair of hyperedges shares at most one vertex."""
    return all(
        len(a & b) <= 1 for a, b in combinations(h.edges, 2)
    )


def is_connected(h: Hypergraph) -> bool:
    """Connectivity of the co-occurrence graph.

    Vertices u, w are adjacent when some hyperedge contains both; h is
    connected when that graph on all of V is connected.  A single-vertex
    hypergraph counts as connected; an isolated vertex disconnects it.
    """
    if h.num_vertices == 1:
        return True
    neighbours: list[set[int]] = [set() for _ in range(h.num_vertices + 1)]
    for e in h.edges:
        members = sorted(e)
        for a, b in combinations(members, 2):
            neighbours[a].add(b)
            neighbours[b].add(a)
    seen = {1}
    frontier = [1]
    while frontier:
        v = frontier.pop()
        for w in neighbours[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == h.num_vertices


def classify(h: Hypergraph) -> ClassificationFlags:
    """Compute the uniform/regular/linear/intersecting/connected flags."""
    sizes = {len(e) for e in h.edges}
    uniform = len(sizes) == 1
    degs = set(h.degrees)
    regular = len(degs) == 1
    intersecting = all(a & b for a, b in combinations(h.edges, 2))
    return ClassificationFlags(
        uniform=uniform,
        edge_size=sizes.pop() if uniform else None,
        regular=regular,
        degree=degs.pop() if regular else None,
        linear=is_linear(h),
        intersecting=intersecting,
        connected=is_connected(h),
    )


def is_universally_good(code: FRCode) -> bool:
    """True when any two nodes share at most one packet.

    Equivalent to linearity of the code's hypergraph view: two nodes sharing
    packets j, j' force hyperedges j and j' to share two vertices, and
    conversely.
    """
    return all(
        len(a & b) <= 1 for a, b in combinations(code.nodes, 2)
    )
