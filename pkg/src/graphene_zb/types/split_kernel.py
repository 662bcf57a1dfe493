from dataclasses import dataclass
from typing import Union
import numpy as np

Real = Union[float, np.ndarray]

@dataclass(frozen=True)
class SplitKernel:
    spreading: Real
    zb:        Real

    @property
    def total(self) -> Real:
        return self.spreading + self.zb
