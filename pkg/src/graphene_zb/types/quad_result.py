from dataclasses import dataclass
from graphene_zb.errors import InvalidConfig, NonConvergence

@dataclass(frozen=True)
class QuadSettings:
    rel_tol:           float = 1e-8
    abs_tol:           float = 1e-12
    max_level:         int   = 12
    truncation_radius: float = 8.0
    nodes_per_panel:   int   = 10
    min_panels:        int   = 4
    max_panels:        int   = 128
    max_points:        int   = 1 << 24

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise InvalidConfig("quadrature tolerances must be positive")
        if self.max_level < 1:
            raise InvalidConfig(f"max_level must be >= 1, got {self.max_level}")
        if self.truncation_radius <= 0:
            raise InvalidConfig("truncation_radius must be positive")
        if self.nodes_per_panel < 2 or self.min_panels < 1:
            raise InvalidConfig("need at least 2 nodes per panel and 1 panel")

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadResult:
    value:       float
    est_error:   float
    evaluations: int
    converged:   bool

    def require(self) -> "QuadResult":
        if not self.converged:
            raise NonConvergence(
                f"quadrature budget exhausted: value={self.value!r} est_error={self.est_error!r}",
                result=self)
        return self
