"""Integrals against the normalised packet weight (d^2/pi) exp(-d^2 |k - (alpha, beta)|^2).

The substitution u = d (k - (alpha, beta)) turns the weight into exp(-|u|^2)/pi on
the box |u_i| <= truncation_radius, which is covered by a tensor product of
composite Gauss-Legendre rules.
"""
import math
from typing import Callable
import numpy as np
from graphene_zb.errors import InvalidKernel
from graphene_zb.types import PacketConfig, QuadResult, QuadSettings
from .rules import composite_nodes, panels_for_phase, refine

# nodes evaluated per chunk of the tensor grid
_CHUNK_POINTS = 1 << 18

Kernel = Callable[[tuple], object]

def _as_components(values, shape: tuple[int, int]) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.ndim <= 2:
        return np.broadcast_to(values, shape)[None]
    return np.broadcast_to(values, (values.shape[0],) + shape)

def tensor_sum(
        f: Kernel,
        cfg: PacketConfig,
        ux: np.ndarray,
        wx: np.ndarray,
        uy: np.ndarray,
        wy: np.ndarray
) -> np.ndarray:
    """Weighted sum over the grid ux x uy in packet-scaled units.

    Chunks are reduced with numpy and combined with math.fsum in chunk order,
    so the result does not depend on how callers schedule work.
    """
    ky = (cfg.beta + uy / cfg.d)[None, :]
    wy_gauss = wy * np.exp(-uy * uy)
    rows = max(1, _CHUNK_POINTS // len(uy))
    partials = []

    for start in range(0, len(ux), rows):
        u = ux[start:start + rows]
        kx = (cfg.alpha + u / cfg.d)[:, None]
        weight = (wx[start:start + rows] * np.exp(-u * u))[:, None] * wy_gauss[None, :] / math.pi
        values = _as_components(f((kx, ky)), weight.shape)
        if not np.all(np.isfinite(values)):
            raise InvalidKernel("kernel returned NaN or Inf at a quadrature node")
        partials.append((values * weight).sum(axis=(1, 2)))

    return np.array([math.fsum(p[c] for p in partials) for c in range(len(partials[0]))])


def phase_swing(t: float, cfg: PacketConfig, settings: QuadSettings) -> float:
    """Spread of the phase v_F t sqrt(k^2 + inv_lambda_c^2) over the truncated box."""
    h = settings.truncation_radius / cfg.d
    r_max = math.hypot(abs(cfg.alpha) + h, abs(cfg.beta) + h)
    r_min = math.hypot(max(0.0, abs(cfg.alpha) - h), max(0.0, abs(cfg.beta) - h))
    lam2 = cfg.inv_lambda_c ** 2
    return cfg.v_f * t * (math.sqrt(r_max ** 2 + lam2) - math.sqrt(r_min ** 2 + lam2))

def required_panels(t: float, cfg: PacketConfig, settings: QuadSettings) -> int:
    return panels_for_phase(phase_swing(t, cfg, settings), settings)


def integrate_packet_components(
        f: Kernel,
        cfg: PacketConfig,
        settings: QuadSettings = QuadSettings(),
        swing: float = 0.0
) -> list[QuadResult]:
    """Integrate a kernel returning one or more stacked components.

    ``swing`` is the phase spread of the integrand over the box (see
    :func:`phase_swing`); it sets the coarsest admissible panel count.
    """
    radius = settings.truncation_radius
    order = settings.nodes_per_panel

    def evaluate(panels: int) -> np.ndarray:
        u, w = composite_nodes(-radius, radius, panels, order)
        return tensor_sum(f, cfg, u, w, u, w)

    return refine(evaluate, lambda panels: (panels * order) ** 2,
                  panels_for_phase(swing, settings), settings)

def integrate_packet_weighted(
        f: Kernel,
        cfg: PacketConfig,
        settings: QuadSettings = QuadSettings(),
        swing: float = 0.0
) -> QuadResult:
    """(d^2/pi) * integral of exp(-d^2 |k - (alpha, beta)|^2) f(k) over the plane."""
    results = integrate_packet_components(f, cfg, settings, swing)
    if len(results) != 1:
        raise ValueError(f"kernel returned {len(results)} components, expected 1")
    return results[0]


def oracle_riemann(f: Kernel, cfg: PacketConfig, grid_n: int = 2048, radius: float = 8.0) -> float:
    """Midpoint-rule reference value on [alpha +- radius/d] x [beta +- radius/d]."""
    if grid_n < 64:
        raise ValueError(f"grid_n must be >= 64, got {grid_n}")
    h = 2.0 * radius / grid_n
    u = -radius + h * (np.arange(grid_n) + 0.5)
    w = np.full(grid_n, h)
    values = tensor_sum(f, cfg, u, w, u, w)
    if len(values) != 1:
        raise ValueError("oracle_riemann expects a single-component kernel")
    return float(values[0])
