"""Exception hierarchy shared by all frhyper modules."""

from __future__ import annotations


class FrcError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(FrcError):
    """A structure violates the FR-code / hypergraph invariants."""


class EmptyNodeError(ValidationError):
    def __init__(self, node: int):
        self.node = node
        super().__init__(f"node {node} stores no packets")


class OrphanPacketError(ValidationError):
    def __init__(self, packet: int):
        self.packet = packet
        super().__init__(f"packet {packet} is stored on no node")


class IdOutOfRangeError(ValidationError):
    def __init__(self, what: str, value: int, upper: int):
        self.value = value
        super().__init__(f"{what} id {value} outside 1..{upper}")


class DuplicatePacketError(ValidationError):
    def __init__(self, node: int, packet: int):
        self.node = node
        self.packet = packet
        super().__init__(f"packet {packet} listed twice on node {node}")


class EmptyEdgeError(ValidationError):
    def __init__(self, edge: int):
        self.edge = edge
        super().__init__(f"hyperedge {edge} is empty")


class IsolatedVertexError(ValidationError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} lies on no hyperedge")


class AnalysisError(FrcError):
    """A metric query was malformed or has no answer."""


class KOutOfRangeError(AnalysisError):
    def __init__(self, k: int, n: int):
        self.k = k
        super().__init__(f"k={k} outside 1..{n}")


class FileTooLargeError(AnalysisError):
    def __init__(self, file_size: int, theta: int):
        self.file_size = file_size
        super().__init__(f"file size {file_size} exceeds packet count {theta}")


class IrreparableNodeError(AnalysisError):
    def __init__(self, node: int, packet: int):
        self.node = node
        self.packet = packet
        super().__init__(
            f"node {node} cannot be repaired: packet {packet} has no other copy"
        )


class AdaptationError(FrcError):
    """Requested node/packet removal does not leave a valid FR code."""


class EmptyNodeAfterAdaptError(AdaptationError):
    def __init__(self, node: int | None = None):
        self.node = node
        msg = "adaptation leaves no nodes" if node is None else \
            f"adaptation empties node {node}"
        super().__init__(msg)


class OrphanPacketAfterAdaptError(AdaptationError):
    def __init__(self, packet: int | None = None):
        self.packet = packet
        msg = "adaptation leaves no packets" if packet is None else \
            f"adaptation orphans packet {packet}"
        super().__init__(msg)


class UnrealizableError(FrcError):
    def __init__(self, reason: str = "no 0/1 incidence matrix has these margins"):
        super().__init__(reason)


class OddThetaError(FrcError):
    def __init__(self, theta: int):
        self.theta = theta
        super().__init__(f"packet pairing needs an even packet count, got {theta}")


class ConstructionError(FrcError):
    """An incremental edit or a growth target is impossible."""


class LinearityViolationError(ConstructionError):
    def __init__(self, offender: int, overlap: int):
        self.offender = offender
        self.overlap = overlap
        super().__init__(
            f"edit shares {overlap} vertices with hyperedge {offender} (limit 1)"
        )


class NotASupersetError(ConstructionError):
    def __init__(self, target: int):
        self.target = target
        super().__init__(f"replacement is not a proper superset of hyperedge {target}")


class TargetInfeasibleError(ConstructionError):
    def __init__(self, requested: int, achieved: int):
        self.requested = requested
        self.achieved = achieved
        super().__init__(
            f"cannot reach {requested} hyperedges without breaking linearity "
            f"(best achieved: {achieved})"
        )


class ParseError(FrcError):
    """A document does not follow the FRC text grammar."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class GuardExceededError(FrcError):
    """An exact enumeration was refused because the instance is too large."""

    def __init__(self, detail: str):
        super().__init__(
            f"{detail}; pass force=True (CLI: --force or FRC_GUARD_OVERRIDE=1) "
            "to enumerate anyway"
        )
