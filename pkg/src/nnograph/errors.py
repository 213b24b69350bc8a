"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for every error raised by this package."""

    kind = "GraphError"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        out = {"error": self.kind, "message": self.message}
        if self.details:
            out["details"] = self.details
        return out


class ParseError(GraphError):
    kind = "ParseError"


class DuplicateEdge(ParseError):
    kind = "DuplicateEdge"


class SelfLoop(ParseError):
    kind = "SelfLoop"


class MalformedLine(ParseError):
    kind = "MalformedLine"


class OddCycle(GraphError):
    kind = "OddCycle"

    def __init__(self, cycle):
        super().__init__("graph contains an odd cycle", cycle=list(cycle))
        self.cycle = list(cycle)


class Disconnected(GraphError):
    kind = "Disconnected"


class NotBipartite(GraphError):
    kind = "NotBipartite"


class StructureViolation(GraphError):
    kind = "StructureViolation"


class InvalidDecomposition(GraphError):
    kind = "InvalidDecomposition"


class NotMember(GraphError):
    kind = "NotMember"


class TooLarge(GraphError):
    kind = "TooLarge"


class InvalidSpec(GraphError):
    kind = "InvalidSpec"


class NoSatellites(GraphError):
    kind = "NoSatellites"


class NotAPermutation(GraphError):
    kind = "NotAPermutation"


class UnsupportedPattern(GraphError):
    kind = "UnsupportedPattern"


class Acyclic(GraphError):
    kind = "Acyclic"


class InvalidTerminals(GraphError):
    kind = "InvalidTerminals"
