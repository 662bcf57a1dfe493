from dataclasses import dataclass, field
from typing import Optional
import numpy as np
from graphene_zb.errors import InvalidConfig
from .packet_config import PacketConfig
from .quad_result import QuadSettings

@dataclass(frozen=True)
class RunConfig:
    packet:   PacketConfig
    t0:       float = 0.0
    t1:       float = 40.0
    steps:    int   = 401
    method:   str   = "quadrature"
    settings: QuadSettings = field(default_factory=QuadSettings)
    output:   Optional[str] = None

    def __post_init__(self):
        if not (self.t1 > self.t0 >= 0.0):
            raise InvalidConfig(f"time grid needs t1 > t0 >= 0, got t0={self.t0} t1={self.t1}")
        if self.steps < 2:
            raise InvalidConfig(f"time grid needs at least 2 steps, got {self.steps}")

    def times(self) -> list[float]:
        return [float(t) for t in np.linspace(self.t0, self.t1, self.steps)]
