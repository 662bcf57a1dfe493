from dataclasses import dataclass
from .observable import UncertaintyPair

@dataclass(frozen=True)
class UncertaintyPoint:
    """Position spread times momentum (units of hbar) or velocity spread (nm^2/fs)."""
    pair:            UncertaintyPair
    t:               float
    delta_pos:       float
    delta_conj:      float
    product:         float
    free_baseline:   float
    spreading_share: float
    zb_share:        float
    est_error:       float

    def to_dict(self) -> dict:
        return {
            "t_fs":          self.t,
            "product":       self.product,
            "delta_pos":     self.delta_pos,
            "delta_conj":    self.delta_conj,
            "free_baseline": self.free_baseline,
            "est_error":     self.est_error,
        }
