"""Reference averages for two packets with closed angular integrals.

Gapless packets with alpha = 0, a = 1, b = 0 reduce to one integral over the
scaled radius q = d |k| with modified Bessel weights; the equal-weight packet
alpha = 0, a = b = 1/sqrt(2) has its own simpler integrands.
"""
import logging
import math
import numpy as np
from graphene_zb.errors import InvalidConfig
from graphene_zb.model import symmetric_kernel
from graphene_zb.quadrature import integrate_halfline, integrate_packet_weighted, phase_swing
from graphene_zb.special import bessel_i_scaled
from graphene_zb.types import ExpectationResult, Observable, PacketConfig
from graphene_zb.engine.engine_type import Method

logger = logging.getLogger(__name__)

def _check_gapless(cfg: PacketConfig) -> None:
    if not cfg.gapless or cfg.alpha != 0.0 or abs(cfg.a - 1.0) > 1e-12:
        raise InvalidConfig("Bessel forms need inv_lambda_c = 0, alpha = 0, a = 1, b = 0")
    if cfg.beta <= 0.0:
        raise InvalidConfig(f"Bessel forms need beta > 0, got {cfg.beta}")

def _sin2_over_q2(q: np.ndarray, rate: float) -> np.ndarray:
    # 2 sin(rate q)^2 / q^2, finite at q = 0
    return 2.0 * rate ** 2 * np.sinc(rate * q / np.pi) ** 2


def gapless_expectation(self, obs: Observable, t: float, cfg: PacketConfig) -> ExpectationResult:
    obs = Observable(obs)
    _check_gapless(cfg)
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")

    d, beta = cfg.d, cfg.beta
    u = beta * d
    tau = cfg.v_f * t
    rate = tau / d
    settings = self.settings
    static = -math.expm1(-u * u)
    offset = 0.5 * d ** 2 if obs.is_second_moment else 0.0

    if obs is Observable.Y:
        return ExpectationResult(observable=obs, t=t, value=0.0, spreading_part=0.0, zb_part=0.0,
                                 est_error=0.0, method=Method.QUADRATURE)

    if obs is Observable.X:
        def g(q):
            return np.exp(-(q - u) ** 2) * bessel_i_scaled(1, 2.0 * u * q) * np.cos(2.0 * rate * q)
        result = integrate_halfline(g, settings, center=u, phase_rate=2.0 * rate)
        spreading = 0.0
        zb = static / (2.0 * beta) - d * result.value
        error = d * result.est_error
    elif obs is Observable.X2:
        def g(q):
            bessel = q * bessel_i_scaled(0, 2.0 * u * q) - bessel_i_scaled(1, 2.0 * u * q) / (2.0 * u)
            return _sin2_over_q2(q, rate) * np.exp(-(q - u) ** 2) * bessel
        result = integrate_halfline(g, settings, center=u, phase_rate=2.0 * rate)
        spreading = tau ** 2 * static / (2.0 * u * u)
        zb = d ** 2 * result.value
        error = d ** 2 * result.est_error
    elif obs is Observable.Y2:
        def g(q):
            return _sin2_over_q2(q, rate) * np.exp(-(q - u) ** 2) * bessel_i_scaled(1, 2.0 * u * q)
        result = integrate_halfline(g, settings, center=u, phase_rate=2.0 * rate)
        spreading = tau ** 2 * (1.0 - static / (2.0 * u * u))
        zb = d / (2.0 * beta) * result.value
        error = d / (2.0 * beta) * result.est_error
    else:
        raise ValueError(f"no Bessel form for {obs.value}")

    self._check(obs, t, result)
    return ExpectationResult(observable=obs, t=t, value=offset + spreading + zb,
                             spreading_part=spreading, zb_part=zb, est_error=error,
                             method=Method.QUADRATURE, offset=offset, converged=result.converged)


def symmetric_expectation(self, obs: Observable, t: float, cfg: PacketConfig) -> ExpectationResult:
    """Average of the equal-weight integrands; the parts are not separated."""
    obs = Observable(obs)
    result = integrate_packet_weighted(lambda k: symmetric_kernel(obs, k, t, cfg), cfg,
                                       self.settings, swing=phase_swing(t, cfg, self.settings))
    self._check(obs, t, result)
    return ExpectationResult(observable=obs, t=t, value=result.value, spreading_part=math.nan,
                             zb_part=math.nan, est_error=result.est_error,
                             method=Method.QUADRATURE, converged=result.converged)
