from dataclasses import dataclass
from .observable import Observable

@dataclass(frozen=True)
class LimitExpansion:
    """Leading short-time behaviour: value ~ constant + coefficient * t**order."""
    observable:  Observable
    constant:    float
    coefficient: float
    order:       int

    def __call__(self, t: float) -> float:
        return self.constant + self.coefficient * t ** self.order
