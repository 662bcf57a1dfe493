import logging
import math
from typing import Optional
import numpy as np
from graphene_zb.model import radial_terms, velocity_square
from graphene_zb.quadrature import integrate_radial_rows, required_panels
from graphene_zb.types import LateVelocitySpread, LimitExpansion, Observable, PacketConfig, QuadResult, UncertaintyPair
from .critical import j_integral
from .expectation import expectation

logger = logging.getLogger(__name__)

# late-time default, in units of d / v_F
LATE_TIME_SCALE = 1e3
_SAMPLES_PER_PERIOD = 4
# window samples sharing one radial node set
_WINDOW_CHUNK = 16

def short_time_limit(self, obs: Observable, cfg: PacketConfig) -> LimitExpansion:
    """Leading non-trivial power of each average as t -> 0."""
    obs = Observable(obs)
    v, sd, sm = cfg.v_f, cfg.spin_diff, cfg.spin_mix
    transverse = -sd * cfg.alpha + sm * cfg.inv_lambda_c

    if obs is Observable.X:
        return LimitExpansion(obs, constant=0.0, coefficient=sm * v, order=1)
    if obs is Observable.Y:
        return LimitExpansion(obs, constant=0.0, coefficient=v * v * transverse, order=2)
    if obs.is_second_moment:
        return LimitExpansion(obs, constant=0.5 * cfg.d ** 2, coefficient=v * v, order=2)
    if obs is Observable.VX:
        return LimitExpansion(obs, constant=sm * v, coefficient=2.0 * sd * cfg.beta * v * v, order=1)
    return LimitExpansion(obs, constant=0.0, coefficient=2.0 * v * v * transverse, order=1)


def _drift(self, obs: Observable, cfg: PacketConfig) -> float:
    lam, sd, sm = cfg.inv_lambda_c, cfg.spin_diff, cfg.spin_mix
    along_x = obs in (Observable.X, Observable.VX)
    mixed = j_integral(self, 2, 0, cfg) if along_x else j_integral(self, 1, 1, cfg)
    lam_term = 0.0
    if sd != 0.0 and lam != 0.0:
        lam_term = sd * lam * (j_integral(self, 1, 0, cfg) if along_x else j_integral(self, 0, 1, cfg))
    return cfg.v_f * cfg.d ** 2 / math.pi * (lam_term + sm * mixed)

def long_time_slope(self, obs: Observable, cfg: PacketConfig) -> float:
    """d<x>/dt (nm/fs) at late times, or the t^2 coefficient (nm^2/fs^2) of the second moments.

    For velocities this is the late-time drift itself.
    """
    obs = Observable(obs)
    if obs is Observable.X2:
        return cfg.v_f ** 2 * cfg.d ** 2 / math.pi * j_integral(self, 2, 0, cfg)
    if obs is Observable.Y2:
        return cfg.v_f ** 2 * cfg.d ** 2 / math.pi * j_integral(self, 0, 2, cfg)
    return _drift(self, obs, cfg)


def zb_period(cfg: PacketConfig) -> float:
    """Trembling period at the packet centre, pi / (v_F sqrt(|c|^2 + inv_lambda_c^2))."""
    energy = math.sqrt(cfg.alpha ** 2 + cfg.beta ** 2 + cfg.inv_lambda_c ** 2)
    return math.pi / (cfg.v_f * energy)

def _window_velocities(self, obs: Observable, times: list[float], cfg: PacketConfig) -> list[float]:
    """<v>(t) over a late window, batched on the radial rule when the 2D rule would not fit."""
    settings = self.settings
    if required_panels(times[0], cfg, settings) <= settings.max_panels:
        return [r.value for r in self._map(lambda t: expectation(self, obs, t, cfg), times)]

    chunks = [times[i:i + _WINDOW_CHUNK] for i in range(0, len(times), _WINDOW_CHUNK)]

    def average(chunk: list[float]) -> list[QuadResult]:
        return integrate_radial_rows([(t, radial_terms(obs, t, cfg)[1]) for t in chunk], cfg, settings)

    velocities = []
    for chunk, results in zip(chunks, self._map(average, chunks)):
        for t, result in zip(chunk, results):
            self._check(obs, t, result)
            velocities.append(result.value)
    return velocities

def late_velocity_spread(
        self,
        pair: UncertaintyPair,
        cfg: PacketConfig,
        t_late: Optional[float] = None,
        periods: int = 50
) -> LateVelocitySpread:
    """Velocity spread averaged over ``periods`` trembling periods from ``t_late`` on."""
    pair = UncertaintyPair(pair)
    if pair.is_momentum:
        raise ValueError(f"{pair.value} is not a velocity pair")
    if periods < 1:
        raise ValueError(f"periods must be >= 1, got {periods}")
    if t_late is None:
        t_late = LATE_TIME_SCALE * cfg.d / cfg.v_f

    t_end = t_late + periods * zb_period(cfg)
    times = np.linspace(t_late, t_end, periods * _SAMPLES_PER_PERIOD, endpoint=False).tolist()
    v2 = velocity_square(cfg)
    spreads = [math.sqrt(max(v2 - v * v, 0.0)) for v in _window_velocities(self, pair.velocity, times, cfg)]
    measured = math.fsum(spreads) / len(spreads)

    drift = long_time_slope(self, pair.velocity, cfg)
    predicted = math.sqrt(max(v2 - drift ** 2, 0.0))
    logger.info("late %s spread %.6g (drift prediction %.6g, v_F %.6g)",
                pair.value, measured, predicted, cfg.v_f)
    return LateVelocitySpread(pair=pair, t_start=t_late, t_end=t_end, measured=measured,
                              drift=drift, predicted=predicted, conjectured=cfg.v_f)
