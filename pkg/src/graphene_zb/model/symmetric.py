"""Integrands for the equal-weight packet alpha = 0, a = b = 1/sqrt(2).

They are written independently of the general kernels and serve as a cross
check of them.
"""
import math
import numpy as np
from graphene_zb.errors import InvalidConfig
from graphene_zb.types import Observable, PacketConfig

def _check(cfg: PacketConfig) -> None:
    if cfg.alpha != 0.0 or abs(cfg.a - cfg.b) > 1e-12 or abs(cfg.a - math.sqrt(0.5)) > 1e-12:
        raise InvalidConfig("symmetric integrands need alpha = 0 and a = b = 1/sqrt(2)")

def symmetric_kernel(obs: Observable, k, t: float, cfg: PacketConfig):
    _check(cfg)
    kx, ky = (np.asarray(c, dtype=float) for c in k)
    lam, tau = cfg.inv_lambda_c, cfg.v_f * t
    s = kx ** 2 + ky ** 2 + lam ** 2
    theta = tau * np.sqrt(s)
    obs = Observable(obs)

    if obs is Observable.X:
        return tau * kx ** 2 / s + np.sin(theta) * np.cos(theta) * (ky ** 2 + lam ** 2) / s ** 1.5
    if obs is Observable.Y:
        return lam * np.sin(theta) ** 2 / s
    if obs is Observable.VX:
        return cfg.v_f * (1.0 - 2.0 * np.sin(theta) ** 2 * (ky ** 2 + lam ** 2) / s)
    if obs is Observable.VY:
        return cfg.v_f * lam * np.sin(2.0 * theta) / np.sqrt(s)
    raise ValueError(f"no symmetric-packet integrand for {obs.value}")
