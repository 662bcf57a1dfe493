from typing import Any


class GrapheneZBError(Exception):
    pass


class InvalidConfig(GrapheneZBError, ValueError):
    pass


class NonConvergence(GrapheneZBError):
    def __init__(self, message: str, result: Any = None):
        super().__init__(message)
        self.result = result


class InvalidKernel(GrapheneZBError):
    pass


class IndexOverflow(GrapheneZBError, IndexError):
    pass


class Overflow(GrapheneZBError, OverflowError):
    pass


class NotConverged(GrapheneZBError):
    def __init__(self, message: str, result: Any = None):
        super().__init__(message)
        self.result = result


class GapRequired(GrapheneZBError, ValueError):
    pass


class DegenerateSpinor(GrapheneZBError, ValueError):
    pass


class NoSignChange(GrapheneZBError):
    def __init__(self, message: str, bracket: tuple[float, float] = (0.0, 0.0)):
        super().__init__(message)
        self.bracket = bracket


class NegativeVariance(GrapheneZBError):
    pass


class BaselineUndefined(GrapheneZBError, ValueError):
    pass


class CellFailure(GrapheneZBError):
    def __init__(self, message: str, cell: str):
        super().__init__(f"{cell}: {message}")
        self.cell = cell
