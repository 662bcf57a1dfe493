from dataclasses import dataclass
from .observable import UncertaintyPair

@dataclass(frozen=True)
class LateVelocitySpread:
    """Windowed late-time velocity spread next to the two candidate limits.

    ``predicted`` is sqrt(v_F**2 - drift**2) with the long-time drift velocity;
    ``conjectured`` is v_F itself.
    """
    pair:        UncertaintyPair
    t_start:     float
    t_end:       float
    measured:    float
    drift:       float
    predicted:   float
    conjectured: float

    @property
    def discrepancy(self) -> float:
        return self.conjectured - self.predicted

    def to_dict(self) -> dict:
        return {
            "t_start_fs":  self.t_start,
            "t_end_fs":    self.t_end,
            "measured":    self.measured,
            "drift":       self.drift,
            "predicted":   self.predicted,
            "conjectured": self.conjectured,
        }
