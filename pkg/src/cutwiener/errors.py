"""Exception types raised across the package.

Every error derives from :class:`WienerError`, which is a ``ValueError`` so
callers that only care about "bad input" can catch that.
"""

INT64_MAX = 2**63 - 1


class WienerError(ValueError):
    pass


class VertexOutOfRange(WienerError):
    pass


class EdgeIndexOutOfRange(WienerError):
    pass


class SelfLoop(WienerError):
    pass


class DuplicateEdge(WienerError):
    pass


class Disconnected(WienerError):
    pass


class SizeCapExceeded(WienerError):
    pass


class ArithmeticOverflow(WienerError):
    pass


class ParseError(WienerError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotTwoComponents(WienerError):
    def __init__(self, count, edge_ids=()):
        super().__init__(f"removing edges {sorted(edge_ids)} leaves {count} component(s), expected 2")
        self.count = count


class CutEdgeInsideSide(WienerError):
    """A cut edge has both endpoints on the same side of the split."""

    def __init__(self, edge_id):
        super().__init__(f"edge {edge_id} does not cross its cut")
        self.edge_id = edge_id


class EmptySet(WienerError):
    pass


class InducedSubgraphDisconnected(WienerError):
    pass


class CoverageMismatch(WienerError):
    def __init__(self, edge_id, count, expected):
        super().__init__(f"edge {edge_id} appears in {count} cut(s), expected {expected}")
        self.edge_id = edge_id
        self.count = count
        self.expected = expected


class InvalidPartition(WienerError):
    def __init__(self, report):
        super().__init__(f"invalid cut partition: {report.summary()}")
        self.report = report


class InvalidFamily(InvalidPartition):
    pass


class NotDivisibleByScale(WienerError):
    pass


class PreconditionFailed(WienerError):
    def __init__(self, report):
        super().__init__(f"conditions (i)/(ii) do not hold: {report.summary()}")
        self.report = report


class NotPartialCube(WienerError):
    def __init__(self, reason):
        super().__init__(f"not a partial cube: {reason}")
        self.reason = reason


class EvenOrTooSmall(WienerError):
    pass


class DimensionOutOfRange(WienerError):
    pass


class SizeOutOfRange(WienerError):
    pass


class EmptySystem(WienerError):
    pass


class CellsNotConnected(WienerError):
    pass


def checked_add(total, term):
    total += term
    if total > INT64_MAX:
        raise ArithmeticOverflow(f"Wiener sum exceeds signed 64-bit range ({total})")
    return total
