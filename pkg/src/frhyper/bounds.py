"""Existence checks, constructive realization, and the bound suite.

Existence of an FR code with prescribed storage and replication vectors is
decided by double counting plus a dominance condition; ``realize`` then
builds a witness incidence structure by greedy descending-degree placement
with backtracking.  ``check_bounds`` evaluates every structural bound with
its applicability gate, using integers and fractions only; no float ever
enters a comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb

from . import analysis
from .errors import (
    IrreparableNodeError,
    KOutOfRangeError,
    OddThetaError,
    UnrealizableError,
    ValidationError,
)
from .guards import guard_subsets
from .model import FRCode, classify, fr_to_hypergraph


class ExistenceVerdict(Enum):
    NECESSARY_FAIL = "necessary-fail"
    SUFFICIENT_PASS = "sufficient-pass"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class DegreeSequencePair:
    """Prescribed node capacities (alpha) and replication factors (rho).

    Entries must be >= 1.  The range conditions alpha_i <= theta and
    rho_j <= n are not enforced here: they surface through the dominance
    condition (its m = 1 and m = n cases), keeping out-of-range inputs
    expressible so ``existence_check`` can grade them.
    """

    alpha_vec: tuple[int, ...]
    rho_vec: tuple[int, ...]

    def __post_init__(self):
        if not self.alpha_vec or not self.rho_vec:
            raise ValidationError("degree sequences must be non-empty")
        if any(a < 1 for a in self.alpha_vec):
            raise ValidationError("every node capacity must be >= 1")
        if any(r < 1 for r in self.rho_vec):
            raise ValidationError("every replication factor must be >= 1")

    @property
    def n(self) -> int:
        return len(self.alpha_vec)

    @property
    def theta(self) -> int:
        return len(self.rho_vec)


def _dominance_holds(alpha_desc: list[int], rho: list[int], upto: int) -> bool:
    """sum_{i<=m} alpha_i <= sum_j min(rho_j, m) for every m in 1..upto."""
    prefix = 0
    for m in range(1, upto + 1):
        prefix += alpha_desc[m - 1]
        if prefix > sum(min(r, m) for r in rho):
            return False
    return True


def existence_check(seq: DegreeSequencePair) -> ExistenceVerdict:
    """Grade a degree-sequence pair.

    NECESSARY_FAIL when the replica counts disagree (no code can exist);
    SUFFICIENT_PASS when additionally the dominance condition holds for
    every m up to n (a code then exists, and ``realize`` builds one);
    INDETERMINATE otherwise.

    The m = n case of the dominance condition is equivalent, under equal
    sums, to every rho_j <= n; without it a pair such as alpha=(2,2),
    rho=(3,1) would grade as sufficient yet be unrealizable.
    """
    if sum(seq.alpha_vec) != sum(seq.rho_vec):
        return ExistenceVerdict.NECESSARY_FAIL
    alpha_desc = sorted(seq.alpha_vec, reverse=True)
    if _dominance_holds(alpha_desc, list(seq.rho_vec), seq.n):
        return ExistenceVerdict.SUFFICIENT_PASS
    return ExistenceVerdict.INDETERMINATE


def realize(seq: DegreeSequencePair) -> FRCode:
    """Build an FR code whose derived vectors equal ``seq`` exactly.

    Packets are placed one at a time in descending replication order, each
    onto the nodes with the most remaining capacity first; infeasible
    branches are cut by the dominance condition on the remaining margins and
    the search backtracks, so the result is deterministic and the search is
    exhaustive.  Raises when no 0/1 incidence matrix has these margins.
    """
    if sum(seq.alpha_vec) != sum(seq.rho_vec):
        raise UnrealizableError("replica counts disagree")
    n = seq.n
    order = sorted(range(seq.theta), key=lambda j: (-seq.rho_vec[j], j))
    remaining = list(seq.alpha_vec)
    placement: dict[int, tuple[int, ...]] = {}

    def feasible(depth: int) -> bool:
        rest = [seq.rho_vec[j] for j in order[depth:]]
        caps = sorted(remaining, reverse=True)
        if sum(caps) != sum(rest):
            return False
        if caps and caps[0] > len(rest):
            return False
        return _dominance_holds(caps, rest, n)

    def place(depth: int) -> bool:
        if depth == seq.theta:
            return all(r == 0 for r in remaining)
        j = order[depth]
        need = seq.rho_vec[j]
        open_nodes = sorted(
            (i for i in range(n) if remaining[i] > 0),
            key=lambda i: (-remaining[i], i),
        )
        if len(open_nodes) < need:
            return False
        for chosen in combinations(open_nodes, need):
            for i in chosen:
                remaining[i] -= 1
            if feasible(depth + 1) and place(depth + 1):
                placement[j] = chosen
                return True
            for i in chosen:
                remaining[i] += 1
        return False

    if not place(0):
        raise UnrealizableError()
    contents: list[set[int]] = [set() for _ in range(n)]
    for j, nodes in placement.items():
        for i in nodes:
            contents[i].add(j + 1)
    return FRCode(nodes=tuple(frozenset(c) for c in contents), theta=seq.theta)


@dataclass(frozen=True)
class BoundEntry:
    """One evaluated bound, normalised to the form lhs <= rhs."""

    bound: str
    applicable: bool
    reason: str | None
    lhs: Fraction | None
    rhs: Fraction | None
    satisfied: bool | None
    tight: bool | None


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[BoundEntry, ...]

    def entry(self, bound: str) -> BoundEntry:
        for e in self.entries:
            if e.bound == bound:
                return e
        raise KeyError(bound)

    def violations(self) -> tuple[BoundEntry, ...]:
        return tuple(e for e in self.entries if e.applicable and not e.satisfied)

    def all_satisfied(self) -> bool:
        return not self.violations()


def _entry(bound: str, lhs, rhs) -> BoundEntry:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    return BoundEntry(
        bound=bound,
        applicable=True,
        reason=None,
        lhs=lhs,
        rhs=rhs,
        satisfied=lhs <= rhs,
        tight=lhs == rhs,
    )


def _gated(bound: str, reason: str) -> BoundEntry:
    return BoundEntry(
        bound=bound,
        applicable=False,
        reason=reason,
        lhs=None,
        rhs=None,
        satisfied=None,
        tight=None,
    )


def _is_antichain(code: FRCode) -> bool:
    """No node content contained in another's (pairwise non-containment)."""
    return not any(
        a <= b or b <= a for a, b in combinations(code.nodes, 2)
    )


def check_bounds(code: FRCode, k: int | None = None, *, force: bool = False) -> BoundReport:
    """Evaluate every structural bound with its applicability gate.

    Gates: the ``uniform-*`` entries need a replication-uniform and
    connected code (the total-storage one additionally rho >= 2 for its
    denominator); the antichain entries need pairwise non-containment of
    node contents; the pair-count and edge-count entries need a linear
    (universally good) code; ``regular-node-count`` needs linear plus
    storage-regular with alpha >= 2; ``uniform-packet-count`` linear plus
    replication-uniform with rho >= 2; ``file-size-lower`` is evaluated
    only when k is supplied and the code is linear.
    """
    n, theta = code.n, code.theta
    alpha_sum = sum(code.alpha_vec)
    flags = classify(fr_to_hypergraph(code))
    linear = flags.linear
    rho_uniform = len(set(code.rho_vec)) == 1
    alpha_regular = len(set(code.alpha_vec)) == 1
    rho = code.rho
    alpha = code.alpha
    entries: list[BoundEntry] = []

    if rho_uniform and flags.connected:
        entries.append(_entry("uniform-divisibility", alpha_sum % rho, 0))
        if rho >= 2:
            entries.append(
                _entry("uniform-total-storage", Fraction(rho * (n - 1), rho - 1), alpha_sum)
            )
        else:
            entries.append(_gated("uniform-total-storage", "rho < 2"))
        entries.append(_entry("uniform-max-capacity", alpha, Fraction(alpha_sum, rho)))
    else:
        reason = "not replication-uniform" if not rho_uniform else "not connected"
        for name in ("uniform-divisibility", "uniform-total-storage", "uniform-max-capacity"):
            entries.append(_gated(name, reason))

    if _is_antichain(code):
        lym = sum(Fraction(1, comb(theta, a)) for a in code.alpha_vec)
        entries.append(_entry("lym-sum", lym, 1))
        entries.append(_entry("antichain-node-count", n, comb(theta, theta // 2)))
    else:
        for name in ("lym-sum", "antichain-node-count"):
            entries.append(_gated(name, "some node content contains another"))

    if linear:
        entries.append(
            _entry("replication-pair-count", sum(comb(r, 2) for r in code.rho_vec), comb(n, 2))
        )
        entries.append(
            _entry("storage-pair-count", sum(comb(a, 2) for a in code.alpha_vec), comb(theta, 2))
        )
        entries.append(_entry("linear-edge-count", alpha_sum - comb(n, 2), theta))
    else:
        for name in ("replication-pair-count", "storage-pair-count", "linear-edge-count"):
            entries.append(_gated(name, "not linear"))

    if linear and alpha_regular and alpha >= 2:
        entries.append(
            _entry("regular-node-count", n, Fraction(theta * (theta - 1), alpha * (alpha - 1)))
        )
    else:
        reason = (
            "not linear" if not linear
            else "not storage-regular" if not alpha_regular
            else "alpha < 2"
        )
        entries.append(_gated("regular-node-count", reason))

    if linear and rho_uniform and rho >= 2:
        entries.append(
            _entry("uniform-packet-count", theta, Fraction(n * (n - 1), rho * (rho - 1)))
        )
    else:
        reason = (
            "not linear" if not linear
            else "not replication-uniform" if not rho_uniform
            else "rho < 2"
        )
        entries.append(_gated("uniform-packet-count", reason))

    if k is not None:
        if not 1 <= k <= n:
            raise KOutOfRangeError(k, n)
        if linear:
            lower = universally_good_lower_bound(code, k)
            mk = analysis.max_file_size(code, k, force=force)
            entries.append(_entry("file-size-lower", lower, mk))
        else:
            entries.append(_gated("file-size-lower", "not linear"))

    return BoundReport(entries=tuple(entries))


def universally_good_lower_bound(code: FRCode, k: int) -> int:
    """Sum of the k smallest capacities minus C(k,2).

    Every universally good code guarantees at least this file size from any
    k nodes: the pairwise overlaps of k nodes cost at most C(k,2) packets.
    """
    if not 1 <= k <= code.n:
        raise KOutOfRangeError(k, code.n)
    return sum(sorted(code.alpha_vec)[:k]) - comb(k, 2)


def file_size_upper_bound(code: FRCode, k: int) -> int:
    """Sum of the k largest capacities: no k nodes hold more than this."""
    if not 1 <= k <= code.n:
        raise KOutOfRangeError(k, code.n)
    return sum(sorted(code.alpha_vec, reverse=True)[:k])


@dataclass(frozen=True)
class PacketPairing:
    """A partition of packets 1..theta into ordered pairs (j, j')."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        used = [p for pair in self.pairs for p in pair]
        if len(set(used)) != len(used):
            raise ValidationError("pairing reuses a packet id")


@dataclass(frozen=True)
class PairingBoundResult:
    hypothesis_holds: bool
    total: Fraction | None
    satisfied: bool | None


def check_pairing_bound(code: FRCode, pairing: PacketPairing) -> PairingBoundResult:
    """Evaluate the paired-holder bound.

    With F_j the holders of the first packet of pair j and F_j' those of the
    second, the hypothesis demands F_i and F_j' disjoint exactly when i = j.
    When it holds, sum_j 1/C(|F_j|+|F_j'|, |F_j|) is evaluated exactly and
    compared against 1.
    """
    if code.theta % 2 != 0:
        raise OddThetaError(code.theta)
    m = code.theta // 2
    if len(pairing.pairs) != m:
        raise ValidationError(f"pairing must contain exactly {m} pairs")
    used = {p for pair in pairing.pairs for p in pair}
    if used != set(range(1, code.theta + 1)):
        raise ValidationError("pairing must partition 1..theta")
    first = [code.holders(a) for a, _ in pairing.pairs]
    second = [code.holders(b) for _, b in pairing.pairs]
    for i in range(m):
        for j in range(m):
            disjoint = not (first[i] & second[j])
            if disjoint != (i == j):
                return PairingBoundResult(False, None, None)
    total = sum(
        Fraction(1, comb(len(first[j]) + len(second[j]), len(first[j])))
        for j in range(m)
    )
    return PairingBoundResult(True, total, total <= 1)


def find_valid_pairing(code: FRCode) -> PacketPairing | None:
    """Exhaustive search for a pairing satisfying the disjointness
    hypothesis; intended for theta <= 12."""
    if code.theta % 2 != 0:
        raise OddThetaError(code.theta)
    m = code.theta // 2
    count = 2 ** m
    for odd in range(1, code.theta, 2):
        count *= odd
    guard_subsets(count, False)

    def matchings(pool: tuple[int, ...]):
        if not pool:
            yield ()
            return
        a = pool[0]
        for idx in range(1, len(pool)):
            b = pool[idx]
            rest = pool[1:idx] + pool[idx + 1:]
            for tail in matchings(rest):
                yield ((a, b),) + tail
                yield ((b, a),) + tail

    for pairs in matchings(tuple(range(1, code.theta + 1))):
        candidate = PacketPairing(pairs=pairs)
        if check_pairing_bound(code, candidate).hypothesis_holds:
            return candidate
    return None


@dataclass(frozen=True)
class DistanceBounds:
    """Distance bounds versus the observed exact minimum distance."""

    singleton_like: int
    locally_repairable: int | None
    observed: int
    within_singleton: bool


def distance_bounds(code: FRCode, k: int, *, force: bool = False) -> DistanceBounds:
    """Evaluate n - ceil(M(k)/alpha) + 1 and its locally-repairable
    refinement against the brute-force minimum distance."""
    if not 1 <= k <= code.n:
        raise KOutOfRangeError(k, code.n)
    mk = analysis.max_file_size(code, k, force=force)
    alpha = code.alpha
    singleton = code.n - (-(-mk // alpha)) + 1
    locally: int | None
    if code.n < 2:
        locally = None
    else:
        try:
            d = max(analysis.repair_degrees(code, force=force))
            locally = code.n - (-(-mk // alpha)) - (-(-mk // (d * alpha))) + 2
        except IrreparableNodeError:
            locally = None
    observed = analysis.min_distance(code, mk, force=force)
    return DistanceBounds(
        singleton_like=singleton,
        locally_repairable=locally,
        observed=observed,
        within_singleton=observed <= singleton,
    )


@dataclass(frozen=True)
class GfrBoundResult:
    applicable: bool
    reason: str | None
    lhs: int | None
    rhs: int | None
    satisfied: bool | None
    tight: bool | None


def gfr_bound_check(code: FRCode, k: int, *, force: bool = False) -> GfrBoundResult:
    """Compare M(k) against the repair-degree bound sum d_i^asc - C(k,2).

    Informational: the bound is reported as evaluated, with repair degrees
    sorted ascending.  A single-node code has no repair and is gated.
    """
    if not 1 <= k <= code.n:
        raise KOutOfRangeError(k, code.n)
    if code.n < 2:
        return GfrBoundResult(False, "no repair possible", None, None, None, None)
    degrees = sorted(analysis.repair_degrees(code, force=force))
    rhs = sum(degrees[:k]) - comb(k, 2)
    lhs = analysis.max_file_size(code, k, force=force)
    return GfrBoundResult(True, None, lhs, rhs, lhs >= rhs, lhs == rhs)


def flexible_bounds(code: FRCode, k: int, *, force: bool = False) -> tuple[int, int, int]:
    """(lower, M(k), upper) file-size bracket.

    The upper side (k largest capacities) holds for every code; the lower
    side equals :func:`universally_good_lower_bound` and is guaranteed only
    for linear codes.
    """
    return (
        universally_good_lower_bound(code, k),
        analysis.max_file_size(code, k, force=force),
        file_size_upper_bound(code, k),
    )
