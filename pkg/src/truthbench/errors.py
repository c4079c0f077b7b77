"""Exception hierarchy shared by every module of the workbench."""


class TruthbenchError(Exception):
    """Base class. ``exit_code`` is what the CLI returns when it escapes."""

    exit_code = 3


class ParseError(TruthbenchError):
    exit_code = 7

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class SignatureError(TruthbenchError):
    exit_code = 7


class SubstitutionError(TruthbenchError):
    """Open term substituted where a closed one is required, or variable capture."""


class ArityError(TruthbenchError):
    """Formula has the wrong set of free variables for the requested operation."""


class ResourceError(TruthbenchError):
    """A configured budget (domain size, big-natural size, search ceiling) was hit."""

    exit_code = 8


class DomainError(TruthbenchError):
    """A constant does not denote an element of the structure."""


class FragmentError(TruthbenchError):
    """An unbounded quantifier reached the bounded-quantifier evaluator."""


class DepthError(TruthbenchError):
    """A level oracle was queried above the depth it decides."""


class ReachExceeded(DepthError):
    """Query deeper than the constructed reach of the tower."""


class ProofStructureError(TruthbenchError):
    """Malformed proof tree; ``path`` locates the node (child indices from the root)."""

    def __init__(self, message, path=()):
        self.path = tuple(path)
        super().__init__(f"{message} at node {'/'.join(map(str, self.path)) or 'root'}")


class ArtifactError(TruthbenchError):
    exit_code = 5


class VersionMismatch(ArtifactError):
    exit_code = 6


class UnknownCommand(TruthbenchError):
    exit_code = 4
