import logging
import math
from dataclasses import replace
from typing import Sequence
import numpy as np
from graphene_zb.errors import GapRequired, NotConverged
from graphene_zb.events import events
from graphene_zb.model import kernel, radial_terms
from graphene_zb.quadrature import (
    integrate_packet_components,
    integrate_packet_radial,
    integrate_packet_weighted,
    phase_swing,
    required_panels,
)
from graphene_zb.series import SERIES
from graphene_zb.types import ExpectationResult, Observable, PacketConfig, QuadResult, SeriesResult
from graphene_zb.engine.engine_type import Method

logger = logging.getLogger(__name__)

# relative disagreement between the two paths reported as a discrepancy
DISCREPANCY_TOL = 1e-6

def _offset(obs: Observable, cfg: PacketConfig) -> float:
    return 0.5 * cfg.d ** 2 if obs.is_second_moment else 0.0


def split_average(self, obs: Observable, t: float, cfg: PacketConfig) -> tuple[QuadResult, QuadResult]:
    """(spreading, zb) packet averages of one kernel, without the constant offset."""
    settings = self.settings
    if required_panels(t, cfg, settings) > settings.max_panels:
        logger.debug("%s at t=%g: phase swing too large for the 2D rule, using the radial rule",
                     obs.value, t)
        spreading, total = integrate_packet_radial(list(radial_terms(obs, t, cfg)), t, cfg, settings)
        zb = QuadResult(value=total.value - spreading.value,
                        est_error=total.est_error + spreading.est_error,
                        evaluations=total.evaluations,
                        converged=total.converged and spreading.converged)
        return spreading, zb

    def stacked(k):
        split = kernel(obs, k, t, cfg)
        return np.stack(np.broadcast_arrays(split.spreading, split.zb))

    spreading, zb = integrate_packet_components(stacked, cfg, settings, swing=phase_swing(t, cfg, settings))
    return spreading, zb


def _by_quadrature(self, obs: Observable, t: float, cfg: PacketConfig) -> ExpectationResult:
    spreading, zb = split_average(self, obs, t, cfg)
    converged = spreading.converged and zb.converged
    error = spreading.est_error + zb.est_error
    self._check(obs, t, QuadResult(value=spreading.value + zb.value, est_error=error,
                                         evaluations=spreading.evaluations, converged=converged))
    offset = _offset(obs, cfg)
    return ExpectationResult(
        observable=obs, t=t,
        value=offset + spreading.value + zb.value,
        spreading_part=spreading.value,
        zb_part=zb.value,
        est_error=error,
        method=Method.QUADRATURE,
        offset=offset,
        converged=converged)


def _series(self, obs: Observable, t: float, cfg: PacketConfig) -> SeriesResult:
    result = SERIES[obs](t, cfg, self.series_tol, self.series_n_max)
    if not result.converged:
        self._emit(events.SeriesNotConverged(observable=obs, t=t, result=result))
    return result

def _by_series(self, obs: Observable, t: float, cfg: PacketConfig) -> ExpectationResult:
    result = _series(self, obs, t, cfg)
    if not result.converged and self.strict:
        raise NotConverged(f"series for {obs.value} at t={t:g} fs did not converge "
                           f"after {result.terms_used} shells", result=result)

    # spreading part by quadrature; it does not oscillate
    spreading = integrate_packet_weighted(lambda k: kernel(obs, k, t, cfg).spreading, cfg, self.settings)
    self._check(obs, t, spreading)
    offset = _offset(obs, cfg)
    return ExpectationResult(
        observable=obs, t=t,
        value=result.value,
        spreading_part=spreading.value,
        zb_part=result.value - offset - spreading.value,
        est_error=result.est_error + spreading.est_error,
        method=Method.SERIES,
        offset=offset,
        converged=result.converged and spreading.converged)

def _by_both(self, obs: Observable, t: float, cfg: PacketConfig) -> ExpectationResult:
    quad = _by_quadrature(self, obs, t, cfg)
    try:
        series = _series(self, obs, t, cfg)
    except GapRequired:
        logger.info("no series cross-check for %s: packet is gapless", obs.value)
        return replace(quad, method=Method.BOTH)

    error = quad.est_error
    if series.converged:
        gap = abs(quad.value - series.value)
        error = max(error, gap)
        if gap > DISCREPANCY_TOL * max(abs(quad.value), cfg.d) + quad.est_error + series.est_error:
            logger.warning("paths disagree for %s at t=%g: quadrature %.12g, series %.12g",
                           obs.value, t, quad.value, series.value)
            self._emit(events.PathDiscrepancy(observable=obs, t=t,
                                              quadrature=quad.value, series=series.value))
    else:
        logger.info("series for %s at t=%g not converged, keeping quadrature", obs.value, t)

    return replace(quad, est_error=error, method=Method.BOTH)


def expectation(
        self,
        obs: Observable,
        t: float,
        cfg: PacketConfig,
        method: Method = Method.QUADRATURE
) -> ExpectationResult:
    obs, method = Observable(obs), Method(method)
    if not (t >= 0.0 and math.isfinite(t)):
        raise ValueError(f"t must be finite and >= 0, got {t}")

    if method is Method.SERIES:
        return _by_series(self, obs, t, cfg)
    if method is Method.BOTH:
        return _by_both(self, obs, t, cfg)
    return _by_quadrature(self, obs, t, cfg)

def expectation_series(
        self,
        obs: Observable,
        times: Sequence[float],
        cfg: PacketConfig,
        method: Method = Method.QUADRATURE
) -> list[ExpectationResult]:
    return self._map(lambda t: expectation(self, obs, t, cfg, method), times)
