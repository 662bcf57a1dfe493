from dataclasses import dataclass
from typing import TYPE_CHECKING
from .observable import Observable

if TYPE_CHECKING:
    from graphene_zb.engine.engine_type import Method

@dataclass(frozen=True)
class ExpectationResult:
    """One observable at one time.

    ``value`` equals ``offset + spreading_part + zb_part``; ``offset`` is the
    constant d**2/2 of the second moments and zero otherwise.
    """
    observable:     Observable
    t:              float
    value:          float
    spreading_part: float
    zb_part:        float
    est_error:      float
    method:         "Method"
    offset:         float = 0.0
    converged:      bool  = True

    def to_dict(self) -> dict:
        return {
            "t_fs":           self.t,
            "value":          self.value,
            "spreading_part": self.spreading_part,
            "zb_part":        self.zb_part,
            "est_error":      self.est_error,
            "method":         str(self.method.value if hasattr(self.method, "value") else self.method),
        }
