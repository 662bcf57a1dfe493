import math
from dataclasses import dataclass, replace
from typing import Optional
from graphene_zb.errors import InvalidConfig

@dataclass(frozen=True, kw_only=True)
class PacketConfig:
    """Gaussian packet and material parameters, lengths in nm, times in fs.

    ``b`` defaults to +sqrt(1 - a**2); an explicit (possibly negative) ``b``
    overrides it but must still satisfy a**2 + b**2 = 1.
    """
    d:            float
    alpha:        float
    beta:         float
    a:            float
    inv_lambda_c: float
    b:            Optional[float] = None
    v_f:          float           = 1.0

    def __post_init__(self):
        if not self.d > 0:
            raise InvalidConfig(f"packet width d must be positive, got {self.d}")
        if not self.v_f > 0:
            raise InvalidConfig(f"Fermi velocity must be positive, got {self.v_f}")
        if not self.inv_lambda_c >= 0:
            raise InvalidConfig(f"inv_lambda_c must be >= 0, got {self.inv_lambda_c}")
        if abs(self.a) > 1.0 + 1e-12:
            raise InvalidConfig(f"spinor amplitude |a| must not exceed 1, got {self.a}")

        if self.b is None:
            object.__setattr__(self, "b", math.sqrt(max(0.0, 1.0 - self.a * self.a)))

        norm = self.a * self.a + self.b * self.b
        if abs(norm - 1.0) > 1e-12:
            raise InvalidConfig(f"a^2 + b^2 must be 1, got {norm!r}")

    @property
    def gapless(self) -> bool:
        return self.inv_lambda_c == 0.0

    @property
    def lambda_c(self) -> float:
        if self.gapless:
            return math.inf
        return 1.0 / self.inv_lambda_c

    @property
    def spin_diff(self) -> float:
        """a^2 - b^2, weight of the diagonal operator entries."""
        return self.a * self.a - self.b * self.b

    @property
    def spin_mix(self) -> float:
        """2ab, weight of the off-diagonal operator entries."""
        return 2.0 * self.a * self.b

    def with_gap(self, inv_lambda_c: float) -> "PacketConfig":
        return replace(self, inv_lambda_c=inv_lambda_c)

    def to_dict(self) -> dict:
        return {
            "d_nm":                self.d,
            "alpha_inv_nm":        self.alpha,
            "beta_inv_nm":         self.beta,
            "a":                   self.a,
            "b":                   self.b,
            "inv_lambda_c_inv_nm": self.inv_lambda_c,
            "v_f_nm_per_fs":       self.v_f,
        }
