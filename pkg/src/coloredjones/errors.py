"""Exception hierarchy shared by every module of the engine."""


class KnotEngineError(Exception):
    """Base class for all errors raised by coloredjones."""


class MalformedSyntax(KnotEngineError, ValueError):
    pass


class EdgeLabelCountError(KnotEngineError, ValueError):
    pass


class OrientationError(KnotEngineError, ValueError):
    pass


class DisconnectedDiagram(KnotEngineError, ValueError):
    pass


class MultiComponentInput(KnotEngineError, ValueError):
    pass


class WidthLimitExceeded(KnotEngineError):
    """The contraction boundary grew past the configured cut-width cap."""

    def __init__(self, width: int, cap: int) -> None:
        super().__init__(f"contraction width {width} exceeds cap {cap}")
        self.width = width
        self.cap = cap


class ValueShapeError(KnotEngineError, ArithmeticError):
    pass


class SchemaError(KnotEngineError, ValueError):
    pass


class ValidationError(KnotEngineError, ValueError):
    pass
