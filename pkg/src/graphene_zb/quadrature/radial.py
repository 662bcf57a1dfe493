"""Packet averages reduced to one radial integral.

Writing k = r (cos phi, sin phi) and doing the phi integral of
exp(2 d^2 r |c| cos(phi - phi0)) against the monomials 1, kx, ky, kx^2, ky^2,
kx ky leaves scaled modified Bessel functions of z = 2 d^2 r |c|, with
c = (alpha, beta) and phi0 its polar angle. This keeps late-time averages,
whose phase swings over many periods across the packet, one-dimensional.
"""
import logging
import math
from typing import Sequence
import numpy as np
from graphene_zb.model import Monomial, Term, radial_value
from graphene_zb.special import bessel_i_scaled
from graphene_zb.types import PacketConfig, QuadResult, QuadSettings
from .halfline import integrate_interval

logger = logging.getLogger(__name__)


def _angular(monomial: Monomial, z: np.ndarray, phi0: float, cache: dict) -> np.ndarray:
    def ive(nu: int) -> np.ndarray:
        if nu not in cache:
            cache[nu] = bessel_i_scaled(nu, z)
        return cache[nu]

    if monomial is Monomial.ONE:
        return 2.0 * math.pi * ive(0)
    if monomial is Monomial.X:
        return 2.0 * math.pi * math.cos(phi0) * ive(1)
    if monomial is Monomial.Y:
        return 2.0 * math.pi * math.sin(phi0) * ive(1)
    if monomial is Monomial.XX:
        return math.pi * (ive(0) + math.cos(2.0 * phi0) * ive(2))
    if monomial is Monomial.YY:
        return math.pi * (ive(0) - math.cos(2.0 * phi0) * ive(2))
    return math.pi * math.sin(2.0 * phi0) * ive(2)


def radial_range(cfg: PacketConfig, settings: QuadSettings) -> tuple[float, float]:
    c = math.hypot(cfg.alpha, cfg.beta)
    h = settings.truncation_radius / cfg.d
    return max(0.0, c - h), c + h

def radial_swing(t: float, cfg: PacketConfig, settings: QuadSettings) -> float:
    lo, hi = radial_range(cfg, settings)
    lam2 = cfg.inv_lambda_c ** 2
    return cfg.v_f * t * (math.sqrt(hi * hi + lam2) - math.sqrt(lo * lo + lam2))


def integrate_radial_rows(
        rows: Sequence[tuple[float, list[Term]]],
        cfg: PacketConfig,
        settings: QuadSettings = QuadSettings()
) -> list[QuadResult]:
    """Packet average of each (t, terms) row on one shared node set.

    The envelope and the angular Bessel factors do not depend on t, so a window
    of times costs one set of Bessel evaluations.
    """
    if not rows:
        return []
    c = math.hypot(cfg.alpha, cfg.beta)
    phi0 = math.atan2(cfg.beta, cfg.alpha)
    d2 = cfg.d ** 2
    lo, hi = radial_range(cfg, settings)

    def integrand(r: np.ndarray) -> np.ndarray:
        envelope = (d2 / math.pi) * r * np.exp(-d2 * (r - c) ** 2)
        z = 2.0 * d2 * c * r
        bessel, angular, radials = {}, {}, {}
        out = np.empty((len(rows), r.size))
        for i, (t, terms) in enumerate(rows):
            if radials and next(iter(radials))[1] != t:
                radials.clear()
            acc = np.zeros_like(r)
            for term in terms:
                if term.monomial not in angular:
                    angular[term.monomial] = (envelope * r ** term.monomial.degree
                                              * _angular(term.monomial, z, phi0, bessel))
                key = (term.radial, t)
                if key not in radials:
                    radials[key] = radial_value(term.radial, r, t, cfg)
                acc += term.coefficient * angular[term.monomial] * radials[key]
            out[i] = acc
        return out

    swing = radial_swing(max(t for t, _ in rows), cfg, settings)
    logger.debug("radial packet average of %d rows: r in [%g, %g], phase swing %g",
                 len(rows), lo, hi, swing)
    return integrate_interval(integrand, lo, hi, settings, swing=swing)

def integrate_packet_radial(
        components: list[list[Term]],
        t: float,
        cfg: PacketConfig,
        settings: QuadSettings = QuadSettings()
) -> list[QuadResult]:
    """Packet average of each term list at time t, one result per list."""
    return integrate_radial_rows([(t, terms) for terms in components], cfg, settings)
