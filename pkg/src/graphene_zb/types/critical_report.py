import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

class CriticalKind(str, Enum):
    MU1      = "mu1"
    MU2      = "mu2"
    MU2_STAR = "mu2_star"
    NU1      = "nu1"
    NU2      = "nu2"
    NU2_STAR = "nu2_star"

    @property
    def closed_form(self) -> bool:
        return self in (CriticalKind.MU1, CriticalKind.NU1)

    @property
    def uses_delta(self) -> bool:
        return self in (CriticalKind.NU1, CriticalKind.NU2, CriticalKind.NU2_STAR)

CriticalKindList = list(CriticalKind)


@dataclass(frozen=True)
class CriticalRoot:
    kind:       CriticalKind
    value:      float
    bracket:    Optional[tuple[float, float]] = None
    iterations: int   = 0
    residual:   float = 0.0
    diverged:   bool  = False

    @classmethod
    def divergent(cls, kind: CriticalKind, bracket: tuple[float, float]) -> "CriticalRoot":
        return cls(kind=kind, value=math.inf, bracket=bracket, diverged=True)


@dataclass(frozen=True)
class CriticalReport:
    """The six critical gap values (1/nm) of one packet configuration."""
    mu1:      CriticalRoot
    mu2:      CriticalRoot
    mu2_star: CriticalRoot
    nu1:      CriticalRoot
    nu2:      CriticalRoot
    nu2_star: CriticalRoot

    def roots(self) -> list[CriticalRoot]:
        return [self.mu1, self.mu2, self.mu2_star, self.nu1, self.nu2, self.nu2_star]

    def to_dict(self) -> dict:
        return {root.kind.value: root.value for root in self.roots()}
