"""Exception hierarchy shared by every module."""


class SigmaColorError(Exception):
    """Base class for all library errors."""


class InstanceTooLarge(SigmaColorError):
    def __init__(self, what, size, cap, unit="vertices"):
        super().__init__(f"{what}: instance has {size} {unit}, cap is {cap}")
        self.size = size
        self.cap = cap


class ParseError(SigmaColorError, ValueError):
    def __init__(self, message, line=None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class ValidationError(SigmaColorError, ValueError):
    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class NotAStarColoring(SigmaColorError, ValueError):
    pass


class ListExhausted(SigmaColorError):
    def __init__(self, vertex):
        super().__init__(f"no admissible color left for vertex {vertex}")
        self.vertex = vertex


class WrongDepth(SigmaColorError, ValueError):
    pass


class WrongRho(SigmaColorError, ValueError):
    pass


class NotASigmaClique(SigmaColorError, ValueError):
    pass


class CliqueTooSmall(SigmaColorError):
    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class TooFewVertices(SigmaColorError, ValueError):
    pass


class SamplingBudgetExhausted(SigmaColorError, RuntimeError):
    pass


class PathTooLong(SigmaColorError, ValueError):
    pass
