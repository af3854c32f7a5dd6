"""Exception types shared across the workbench."""


class QuerycanvasError(Exception):
    """Base class for all workbench errors."""

    code = "error"

    def to_document(self) -> dict:
        return {"error": {"code": self.code, "message": str(self)}}


class GraphFormatError(QuerycanvasError):
    """Malformed graph or query document."""

    code = "graph-format"

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, offset {offset})"
        super().__init__(message)
        self.line = line
        self.offset = offset


class DanglingEndpointError(GraphFormatError):
    """A relationship references a node id that does not exist."""

    code = "dangling-endpoint"

    def __init__(self, rel_id: str, endpoint: str):
        super().__init__(f"relationship {rel_id!r} references missing node {endpoint!r}")
        self.rel_id = rel_id
        self.endpoint = endpoint


class EmptyQueryError(QuerycanvasError):
    """Translation of a query with no nodes was requested."""

    code = "empty-query"


class LabelConflictError(QuerycanvasError):
    """Pattern attachment node and anchor carry different labels."""

    code = "label-conflict"


class InstanceTooLargeError(QuerycanvasError):
    """Brute-force oracle invoked above its documented limits."""

    code = "instance-too-large"


class CypherSyntaxError(QuerycanvasError):
    """Statement text falls outside the emission grammar."""

    code = "cypher-syntax"

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class AuthenticationError(QuerycanvasError):
    """Remote store rejected the supplied credentials."""

    code = "authentication"


class NetworkError(QuerycanvasError):
    """Remote store endpoint could not be reached."""

    code = "network"

    def __init__(self, endpoint: str, detail: str):
        super().__init__(f"cannot reach {endpoint}: {detail}")
        self.endpoint = endpoint


class CapabilityError(QuerycanvasError):
    """Remote store answered in an unexpected protocol shape."""

    code = "capability"


class RemoteQueryError(QuerycanvasError):
    """Remote store reported a statement error; message surfaced verbatim."""

    code = "remote-query"

    def __init__(self, remote_code: str, message: str):
        super().__init__(message)
        self.remote_code = remote_code


class QueryTimeoutError(QuerycanvasError):
    """A statement exceeded the configured timeout."""

    code = "timeout"

    def __init__(self, statement: str, seconds: float):
        super().__init__(f"statement timed out after {seconds:g}s: {statement}")
        self.statement = statement


class ReadOnlyViolationError(QuerycanvasError):
    """A statement outside the allowed read grammar was about to be sent."""

    code = "read-only"


class JobInProgressError(QuerycanvasError):
    """A long-running job is already active for this session."""

    code = "job-in-progress"
