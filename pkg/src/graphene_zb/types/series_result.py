from dataclasses import dataclass, field
from graphene_zb.errors import NotConverged

@dataclass(frozen=True)
class SeriesResult:
    value:               float
    terms_used:          int
    converged:           bool
    last_term_magnitude: float
    est_error:           float = 0.0
    shells:              tuple[float, ...] = field(default=(), repr=False, compare=False)

    def require(self) -> "SeriesResult":
        if not self.converged:
            raise NotConverged(
                f"series not converged after {self.terms_used} shells "
                f"(last shell {self.last_term_magnitude:.3e})",
                result=self)
        return self
