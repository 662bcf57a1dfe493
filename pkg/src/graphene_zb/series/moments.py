"""Exact packet moments of kx^p ky^q s^n, kept as sign and log-magnitude.

Under the packet weight kx and ky are independent Gaussians, and
<kx^j> = G_j(alpha d)/(2d)^j with H_j(ix) = i^j G_j(x). Expanding
s^n = (kx^2 + ky^2 + inv_lambda_c^2)^n twice with the binomial theorem gives

    <kx^p ky^q s^n> = sum_l C(n, l) inv_lambda_c^(2(n-l)) T_l(p, q)
    T_l(p, q)       = sum_m C(l, m) <kx^(2m+p)> <ky^(2(l-m)+q)>
"""
import math
from dataclasses import dataclass, field
from functools import lru_cache
import numpy as np
from scipy import special
from graphene_zb.special import HermiteTable
from graphene_zb.types import PacketConfig

Signed = tuple[float, float]

ZERO: Signed = (0.0, -math.inf)

def signed_log_sum(signs: np.ndarray, logs: np.ndarray) -> Signed:
    """Sum of sign*exp(log) returned as (sign, log|sum|)."""
    mask = (signs != 0.0) & np.isfinite(logs)
    if not mask.any():
        return ZERO
    top = float(logs[mask].max())
    total = math.fsum((signs[mask] * np.exp(logs[mask] - top)).tolist())
    if total == 0.0:
        return ZERO
    return math.copysign(1.0, total), math.log(abs(total)) + top


def _log_moments(center: float, d: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    table = HermiteTable.build(center * d, n_max=n)
    return table.sign, table.log_abs - np.arange(n + 1) * math.log(2.0 * d)


@dataclass
class MomentTable:
    cfg:     PacketConfig
    n_max:   int
    sign_a:  np.ndarray
    log_a:   np.ndarray
    sign_b:  np.ndarray
    log_b:   np.ndarray
    log_fac: np.ndarray
    _t:      dict = field(default_factory=dict, repr=False)
    _s:      dict = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, cfg: PacketConfig, n_max: int) -> "MomentTable":
        top = 2 * n_max + 2
        sign_a, log_a = _log_moments(cfg.alpha, cfg.d, top)
        sign_b, log_b = _log_moments(cfg.beta, cfg.d, top)
        log_fac = special.gammaln(np.arange(top + 3) + 1.0)
        return cls(cfg=cfg, n_max=n_max, sign_a=sign_a, log_a=log_a,
                   sign_b=sign_b, log_b=log_b, log_fac=log_fac)

    def _log_binomial(self, n: int) -> np.ndarray:
        k = np.arange(n + 1)
        return self.log_fac[n] - self.log_fac[k] - self.log_fac[n - k]

    def inner(self, ell: int, p: int, q: int) -> Signed:
        """T_ell(p, q)."""
        key = (ell, p, q)
        if key not in self._t:
            m = np.arange(ell + 1)
            ia, ib = 2 * m + p, 2 * (ell - m) + q
            self._t[key] = signed_log_sum(
                self.sign_a[ia] * self.sign_b[ib],
                self._log_binomial(ell) + self.log_a[ia] + self.log_b[ib])
        return self._t[key]

    def moment(self, n: int, p: int, q: int) -> Signed:
        """<kx^p ky^q s^n> as (sign, log|value|)."""
        key = (n, p, q)
        if key not in self._s:
            inner = [self.inner(ell, p, q) for ell in range(n + 1)]
            signs = np.array([s for s, _ in inner])
            logs = np.array([lg for _, lg in inner])
            lam2 = self.cfg.inv_lambda_c ** 2
            ell = np.arange(n + 1)
            if lam2 > 0.0:
                scale = (n - ell) * math.log(lam2)
            else:
                scale = np.where(ell == n, 0.0, -np.inf)
            self._s[key] = signed_log_sum(signs, self._log_binomial(n) + scale + logs)
        return self._s[key]


@lru_cache(maxsize=64)
def moment_table(cfg: PacketConfig, n_max: int) -> MomentTable:
    return MomentTable.build(cfg, n_max)
