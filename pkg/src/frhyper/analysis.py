"""Exact storage metrics of an FR code, all by subset enumeration.

M(k) is the file size guaranteed by ANY k nodes, i.e. the minimum over all
k-subsets of the union of their contents.  Repair degree is an exact minimum
set cover, minimum distance an exact smallest failure set.  Nothing here is
approximated; the enumeration guards in :mod:`frhyper.guards` bound runtime
instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    EmptyNodeAfterAdaptError,
    FileTooLargeError,
    IdOutOfRangeError,
    IrreparableNodeError,
    KOutOfRangeError,
    OrphanPacketAfterAdaptError,
)
from .guards import guard_nodes, guard_subsets
from .model import FRCode


@dataclass(frozen=True)
class AdaptationSpec:
    """Node ids to drop (T) and packet ids to strip (S)."""

    removed_nodes: frozenset[int]
    removed_packets: frozenset[int]


@dataclass(frozen=True)
class AnalysisReport:
    """M(k) table plus the derived degrees for one stated file size."""

    file_size_table: dict[int, int]
    file_size: int
    reconstruction_degree: int
    repair_degrees: tuple[int, ...]
    max_repair_degree: int
    min_distance: int


def max_file_size(code: FRCode, k: int, *, force: bool = False) -> int:
    """M(k): minimum union size over all k-subsets of nodes."""
    if not 1 <= k <= code.n:
        raise KOutOfRangeError(k, code.n)
    guard_nodes(code.n, force)
    guard_subsets(comb(code.n, k), force)
    masks = code.node_masks
    best = code.theta
    for subset in combinations(masks, k):
        union = 0
        for m in subset:
            union |= m
        size = union.bit_count()
        if size < best:
            best = size
            if best == 0:
                break
    return best


def file_size_table(code: FRCode, *, force: bool = False) -> dict[int, int]:
    """M(k) for every k = 1..n."""
    guard_nodes(code.n, force)
    guard_subsets(2 ** code.n, force)
    return {k: max_file_size(code, k, force=True) for k in range(1, code.n + 1)}


def reconstruction_degree(code: FRCode, file_size: int, *, force: bool = False) -> int:
    """Smallest k whose guaranteed union M(k) reaches ``file_size``."""
    if file_size > code.theta:
        raise FileTooLargeError(file_size, code.theta)
    if file_size < 1:
        raise FileTooLargeError(file_size, code.theta)
    for k in range(1, code.n + 1):
        if max_file_size(code, k, force=force) >= file_size:
            return k
    raise AssertionError("unreachable: M(n) = theta >= file_size")


def repair_degree(
    code: FRCode, failed: int, *, force: bool = False
) -> tuple[int, frozenset[int]]:
    """Exact minimum number of helper nodes covering the failed node.

    Returns the cover size and one witness helper set (the lexicographically
    first among the smallest covers).  Each helper contributes exactly the
    packets it shares with the failed node; only the helper count is modelled.
    """
    if not 1 <= failed <= code.n:
        raise IdOutOfRangeError("node", failed, code.n)
    guard_nodes(code.n, force)
    target = code.node_masks[failed - 1]
    others = [(i, code.node_masks[i - 1]) for i in range(1, code.n + 1) if i != failed]
    reachable = 0
    for _, m in others:
        reachable |= m
    missing = target & ~reachable
    if missing:
        raise IrreparableNodeError(failed, missing.bit_length())
    for size in range(1, len(others) + 1):
        for chosen in combinations(others, size):
            union = 0
            for _, m in chosen:
                union |= m
            if target & ~union == 0:
                return size, frozenset(i for i, _ in chosen)
    raise AssertionError("unreachable: all other nodes jointly cover the target")


def repair_degrees(code: FRCode, *, force: bool = False) -> tuple[int, ...]:
    """The vector d_i of per-node repair degrees."""
    return tuple(
        repair_degree(code, i, force=force)[0] for i in range(1, code.n + 1)
    )


def min_distance(code: FRCode, file_size: int, *, force: bool = False) -> int:
    """Smallest number of node failures after which the survivors hold
    fewer than ``file_size`` distinct packets.

    Enumerates failure sets in ascending size with early exit; always at
    most n since losing every node loses every packet.
    """
    if not 1 <= file_size <= code.theta:
        raise FileTooLargeError(file_size, code.theta)
    guard_nodes(code.n, force)
    guard_subsets(2 ** code.n, force)
    masks = code.node_masks
    indices = range(code.n)
    for size in range(1, code.n):
        for failed in combinations(indices, size):
            failed_set = set(failed)
            union = 0
            for i in indices:
                if i not in failed_set:
                    union |= masks[i]
            if union.bit_count() < file_size:
                return size
    return code.n


def adapt(code: FRCode, spec: AdaptationSpec) -> FRCode:
    """Drop the nodes in T, strip the packets in S, renumber densely.

    Remaining nodes and packets keep their relative order.  Raises when a
    surviving node would become empty or a surviving packet would lose its
    last copy, i.e. when the adaptation is not admissible.
    """
    for i in spec.removed_nodes:
        if not 1 <= i <= code.n:
            raise IdOutOfRangeError("node", i, code.n)
    for j in spec.removed_packets:
        if not 1 <= j <= code.theta:
            raise IdOutOfRangeError("packet", j, code.theta)
    kept_nodes = [i for i in range(1, code.n + 1) if i not in spec.removed_nodes]
    kept_packets = [j for j in range(1, code.theta + 1) if j not in spec.removed_packets]
    if not kept_nodes:
        raise EmptyNodeAfterAdaptError()
    if not kept_packets:
        raise OrphanPacketAfterAdaptError()
    renumber = {old: new for new, old in enumerate(kept_packets, start=1)}
    contents = []
    for i in kept_nodes:
        kept = {renumber[p] for p in code.nodes[i - 1] if p in renumber}
        if not kept:
            raise EmptyNodeAfterAdaptError(i)
        contents.append(frozenset(kept))
    present = set().union(*contents)
    for old in kept_packets:
        if renumber[old] not in present:
            raise OrphanPacketAfterAdaptError(old)
    return FRCode(nodes=tuple(contents), theta=len(kept_packets))


def is_adaptation_of(
    smaller: FRCode, larger: FRCode, *, force: bool = False
) -> tuple[bool, AdaptationSpec | None]:
    """Search for a removal spec mapping ``larger`` exactly onto ``smaller``.

    Exhaustive over all choices of |T| = n - n' nodes and |S| = theta -
    theta' packets; returns the first witness found.
    """
    drop_n = larger.n - smaller.n
    drop_t = larger.theta - smaller.theta
    if drop_n < 0 or drop_t < 0:
        return False, None
    guard_subsets(comb(larger.n, drop_n) * comb(larger.theta, drop_t), force)
    node_ids = range(1, larger.n + 1)
    packet_ids = range(1, larger.theta + 1)
    for t_set in combinations(node_ids, drop_n):
        for s_set in combinations(packet_ids, drop_t):
            spec = AdaptationSpec(frozenset(t_set), frozenset(s_set))
            try:
                candidate = adapt(larger, spec)
            except (EmptyNodeAfterAdaptError, OrphanPacketAfterAdaptError):
                continue
            if candidate == smaller:
                return True, spec
    return False, None


def analyze(
    code: FRCode,
    *,
    k: int | None = None,
    file_size: int | None = None,
    force: bool = False,
) -> AnalysisReport:
    """Full metric report relative to one file size.

    When ``file_size`` is omitted it defaults to M(k) for the given k.
    """
    table = file_size_table(code, force=force)
    if file_size is None:
        if k is None:
            raise KOutOfRangeError(0, code.n)
        if not 1 <= k <= code.n:
            raise KOutOfRangeError(k, code.n)
        file_size = table[k]
    degrees = repair_degrees(code, force=force)
    return AnalysisReport(
        file_size_table=table,
        file_size=file_size,
        reconstruction_degree=reconstruction_degree(code, file_size, force=force),
        repair_degrees=degrees,
        max_repair_degree=max(degrees),
        min_distance=min_distance(code, file_size, force=force),
    )
