"""Exception types shared across the package."""


class QecError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(QecError):
    pass


class OutOfRangeError(QecError):
    pass


class BadParamsError(QecError):
    pass


class BadRootError(QecError):
    pass


class EmptySetError(QecError):
    pass


class DisconnectedError(QecError):
    """Operation requires a connected graph."""


class DisconnectedSubgraphError(QecError):
    """Operation requires the induced subgraph to be connected."""


class OrderTooLargeError(QecError):
    pass


class OrderOneError(QecError):
    """QEC and the exact QE test are undefined on a single vertex."""


class NotRegularError(QecError):
    pass


class UnsupportedFamilyError(QecError):
    pass


class NotQEError(QecError):
    """The graph admits no quadratic embedding."""


class DimensionMismatchError(QecError):
    pass


class Graph6Error(QecError):
    """Base class for graph6 codec errors."""


class BadHeaderError(Graph6Error):
    pass


class BadLengthError(Graph6Error):
    pass


class TrailingGarbageError(Graph6Error):
    pass


class CatalogParseError(Graph6Error):
    """Malformed catalog file; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
