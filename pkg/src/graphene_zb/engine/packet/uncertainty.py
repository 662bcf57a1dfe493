import logging
import math
from typing import Sequence
from graphene_zb.errors import BaselineUndefined, NegativeVariance
from graphene_zb.events import events
from graphene_zb.model import free_baseline, velocity_square
from graphene_zb.types import PacketConfig, UncertaintyPair, UncertaintyPoint
from .expectation import expectation

logger = logging.getLogger(__name__)

# rounding floor on the variance, relative to <x^2>
_VARIANCE_ULPS = 64 * 2.0 ** -52

def momentum_spread(cfg: PacketConfig) -> float:
    """Delta p_x = Delta p_y in units of hbar/nm; constant in time."""
    return 1.0 / (math.sqrt(2.0) * cfg.d)

def _shares(spreading: float, zb: float) -> tuple[float, float]:
    scale = abs(spreading) + abs(zb)
    if scale == 0.0:
        return 0.0, 0.0
    return spreading / scale, zb / scale


def uncertainty(self, pair: UncertaintyPair, t: float, cfg: PacketConfig) -> UncertaintyPoint:
    pair = UncertaintyPair(pair)
    first = expectation(self, pair.position, t, cfg)
    second = expectation(self, pair.second_moment, t, cfg)

    variance = second.value - first.value ** 2
    var_error = second.est_error + 2.0 * abs(first.value) * first.est_error
    if variance < 0.0:
        if -variance > max(var_error, _VARIANCE_ULPS * second.value):
            raise NegativeVariance(f"{pair.value} at t={t:g} fs: variance {variance:g} "
                                   f"below its error bar {var_error:g}")
        logger.debug("clamping variance %g to 0 for %s at t=%g", variance, pair.value, t)
        self._emit(events.VarianceClamped(pair=pair, t=t, variance=variance))
        variance = 0.0

    delta_pos = math.sqrt(variance)
    pos_error = var_error / (2.0 * delta_pos) if delta_pos > 0.0 else math.sqrt(var_error)

    if pair.is_momentum:
        delta_conj, conj_error = momentum_spread(cfg), 0.0
    else:
        velocity = expectation(self, pair.velocity, t, cfg)
        delta_conj = math.sqrt(max(velocity_square(cfg) - velocity.value ** 2, 0.0))
        conj_error = (abs(velocity.value) * velocity.est_error / delta_conj
                      if delta_conj > 0.0 else math.sqrt(velocity.est_error * cfg.v_f))

    try:
        baseline = free_baseline(pair, t, cfg)
    except BaselineUndefined:
        baseline = math.nan

    spreading_var = second.spreading_part - first.spreading_part ** 2
    zb_var = variance - 0.5 * cfg.d ** 2 - spreading_var
    spreading_share, zb_share = _shares(spreading_var, zb_var)

    return UncertaintyPoint(
        pair=pair, t=t,
        delta_pos=delta_pos,
        delta_conj=delta_conj,
        product=delta_pos * delta_conj,
        free_baseline=baseline,
        spreading_share=spreading_share,
        zb_share=zb_share,
        est_error=pos_error * delta_conj + delta_pos * conj_error)


def uncertainty_series(
        self,
        pair: UncertaintyPair,
        times: Sequence[float],
        cfg: PacketConfig
) -> list[UncertaintyPoint]:
    return self._map(lambda t: uncertainty(self, pair, t, cfg), times)
