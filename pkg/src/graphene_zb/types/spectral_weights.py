from dataclasses import dataclass

@dataclass(frozen=True)
class SpectralWeights:
    p_plus:    float
    p_minus:   float
    delta_p:   float
    est_error: float = 0.0

    @classmethod
    def from_delta(cls, delta_p: float, est_error: float = 0.0) -> "SpectralWeights":
        p_plus = 0.5 + delta_p
        return cls(p_plus=p_plus, p_minus=1.0 - p_plus, delta_p=delta_p, est_error=est_error)

    def to_dict(self) -> dict:
        return {
            "p_plus":  self.p_plus,
            "p_minus": self.p_minus,
            "delta_p": self.delta_p,
        }
