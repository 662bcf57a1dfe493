"""Packet-contracted integrands of the Heisenberg position and velocity operators.

Every kernel takes ``k = (kx, ky)`` in 1/nm (floats or broadcastable numpy
arrays), a time ``t`` in fs and a :class:`PacketConfig`, and returns a
:class:`SplitKernel` whose parts are integrated against the normalised packet
weight ``(d**2/pi) * gaussian_weight``.
"""
import math
from typing import Callable
import numpy as np
from graphene_zb.errors import BaselineUndefined
from graphene_zb.types import Observable, PacketConfig, SplitKernel, UncertaintyPair

Wavevector = tuple

def phase(k: Wavevector, t: float, cfg: PacketConfig):
    kx, ky = k
    return cfg.v_f * t * np.sqrt(np.square(kx) + np.square(ky) + cfg.inv_lambda_c ** 2)

def gaussian_weight(k: Wavevector, cfg: PacketConfig):
    kx, ky = k
    return np.exp(-cfg.d ** 2 * (np.square(kx - cfg.alpha) + np.square(ky - cfg.beta)))


class _Terms:
    """Shared subexpressions of one kernel evaluation."""

    def __init__(self, k: Wavevector, t: float, cfg: PacketConfig):
        kx, ky = k
        self.kx = np.asarray(kx, dtype=float)
        self.ky = np.asarray(ky, dtype=float)
        self.lam = cfg.inv_lambda_c
        self.tau = cfg.v_f * t
        s = self.kx ** 2 + self.ky ** 2 + self.lam ** 2
        # gapless origin: integrable, measure zero, reported as 0
        self.origin = s == 0.0
        self.s = np.where(self.origin, 1.0, s)
        self.rs = np.sqrt(self.s)
        theta = self.tau * self.rs
        self.sin = np.sin(theta)
        self.cos = np.cos(theta)
        self.sin2 = self.sin ** 2
        self.sincos = self.sin * self.cos

    def finish(self, spreading, zb) -> SplitKernel:
        spreading = np.where(self.origin, 0.0, spreading)
        zb = np.where(self.origin, 0.0, zb)
        if spreading.ndim == 0:
            return SplitKernel(spreading=float(spreading), zb=float(zb))
        return SplitKernel(spreading=spreading, zb=zb)


def kernel_x(k: Wavevector, t: float, cfg: PacketConfig) -> SplitKernel:
    e = _Terms(k, t, cfg)
    sd, sm = cfg.spin_diff, cfg.spin_mix
    spreading = e.tau / e.s * (sd * e.lam * e.kx + sm * e.kx ** 2)
    zb = (sd / e.s * (e.ky * e.sin2 - e.lam * e.kx * e.sincos / e.rs)
          + sm * e.sincos * (e.ky ** 2 + e.lam ** 2) / e.s ** 1.5)
    return e.finish(spreading, zb)

def kernel_y(k: Wavevector, t: float, cfg: PacketConfig) -> SplitKernel:
    e = _Terms(k, t, cfg)
    sd, sm = cfg.spin_diff, cfg.spin_mix
    drift = sd * e.lam * e.ky + sm * e.kx * e.ky
    spreading = e.tau / e.s * drift
    zb = (e.sin2 / e.s * (-sd * e.kx + sm * e.lam)
          - e.sincos / e.s ** 1.5 * drift)
    return e.finish(spreading, zb)

def kernel_x2(k: Wavevector, t: float, cfg: PacketConfig) -> SplitKernel:
    """Second-moment kernel without the constant d**2/2."""
    e = _Terms(k, t, cfg)
    spreading = e.tau ** 2 * e.kx ** 2 / e.s
    zb = e.sin2 * (e.ky ** 2 + e.lam ** 2) / e.s ** 2
    return e.finish(spreading, zb)

def kernel_y2(k: Wavevector, t: float, cfg: PacketConfig) -> SplitKernel:
    kx, ky = k
    return kernel_x2((ky, kx), t, cfg)

def kernel_vx(k: Wavevector, t: float, cfg: PacketConfig) -> SplitKernel:
    """Time derivative of kernel_x; the spreading part is time independent."""
    e = _Terms(k, t, cfg)
    sd, sm = cfg.spin_diff, cfg.spin_mix
    total = cfg.v_f * (
        sd * (2.0 * e.lam * e.kx * e.sin2 / e.s + 2.0 * e.ky * e.sincos / e.rs)
        + sm * (2.0 * e.kx ** 2 * e.sin2 / e.s + e.cos ** 2 - e.sin2))
    spreading = cfg.v_f / e.s * (sd * e.lam * e.kx + sm * e.kx ** 2)
    return e.finish(spreading, total - spreading)

def kernel_vy(k: Wavevector, t: float, cfg: PacketConfig) -> SplitKernel:
    e = _Terms(k, t, cfg)
    sd, sm = cfg.spin_diff, cfg.spin_mix
    drift = sd * e.lam * e.ky + sm * e.kx * e.ky
    total = cfg.v_f * (
        2.0 * drift * e.sin2 / e.s
        + 2.0 * e.sincos / e.rs * (-sd * e.kx + sm * e.lam))
    spreading = cfg.v_f / e.s * drift
    return e.finish(spreading, total - spreading)


KERNELS: dict[Observable, Callable[[Wavevector, float, PacketConfig], SplitKernel]] = {
    Observable.X:  kernel_x,
    Observable.Y:  kernel_y,
    Observable.X2: kernel_x2,
    Observable.Y2: kernel_y2,
    Observable.VX: kernel_vx,
    Observable.VY: kernel_vy,
}

def kernel(obs: Observable, k: Wavevector, t: float, cfg: PacketConfig) -> SplitKernel:
    return KERNELS[Observable(obs)](k, t, cfg)

def velocity_square(cfg: PacketConfig) -> float:
    """Packet contraction of v_x(t)**2 and v_y(t)**2: v_F**2 times identity."""
    return cfg.v_f ** 2


def free_baseline(pair: UncertaintyPair, t: float, cfg: PacketConfig) -> float:
    """Same-packet uncertainty product for H = p**2/2M.

    Momentum pairs are dimensionless (units of hbar), velocity pairs nm**2/fs.
    """
    if cfg.gapless:
        raise BaselineUndefined("free baseline needs a finite mass (inv_lambda_c > 0)")

    pair = UncertaintyPair(pair)
    growth = cfg.lambda_c * cfg.v_f * t / (2.0 * cfg.d ** 2)
    if pair.is_momentum:
        return math.hypot(0.5, growth)
    return cfg.lambda_c * cfg.v_f * math.hypot(0.5, growth)
