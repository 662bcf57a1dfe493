import logging
import math
from typing import Callable
import numpy as np
from graphene_zb.errors import InvalidKernel
from graphene_zb.types import QuadResult, QuadSettings
from .rules import composite_nodes, panels_for_phase, refine

logger = logging.getLogger(__name__)

# relative size of the integrand at the cut below which truncation is accepted
TAIL_RATIO = 1e-16

def integrate_interval(
        g: Callable[[np.ndarray], object],
        lo: float,
        hi: float,
        settings: QuadSettings = QuadSettings(),
        swing: float = 0.0
) -> list[QuadResult]:
    """Integrate g over [lo, hi]; g may return stacked components of shape (C, N)."""
    order = settings.nodes_per_panel

    def evaluate(panels: int) -> np.ndarray:
        q, w = composite_nodes(lo, hi, panels, order)
        values = np.asarray(g(q), dtype=float)
        values = np.broadcast_to(values, q.shape)[None] if values.ndim <= 1 \
            else np.broadcast_to(values, (values.shape[0],) + q.shape)
        if not np.all(np.isfinite(values)):
            raise InvalidKernel("integrand returned NaN or Inf at a quadrature node")
        return np.array([math.fsum(row.tolist()) for row in values * w])

    return refine(evaluate, lambda panels: panels * order, panels_for_phase(swing, settings), settings)


def integrate_halfline(
        g: Callable[[np.ndarray], object],
        settings: QuadSettings = QuadSettings(),
        center: float = 0.0,
        phase_rate: float = 0.0
) -> QuadResult:
    """Integral of g over [0, inf) for integrands with a Gaussian envelope.

    The range is cut at ``center + truncation_radius``; ``phase_rate`` is the
    largest dphase/dq of any oscillating factor. A result whose integrand is
    not negligible at the cut is reported as unconverged.
    """
    q_max = max(center, 0.0) + settings.truncation_radius
    (result,) = integrate_interval(g, 0.0, q_max, settings, swing=phase_rate * q_max)

    samples = np.abs(np.asarray(g(np.linspace(0.0, q_max, 257)), dtype=float))
    peak = float(np.max(samples)) if samples.size else 0.0
    if peak > 0.0 and samples[-1] > TAIL_RATIO * peak:
        logger.warning("half-line integrand not negligible at q=%g: %g of peak",
                       q_max, samples[-1] / peak)
        return QuadResult(value=result.value, est_error=max(result.est_error, samples[-1] * q_max),
                          evaluations=result.evaluations, converged=False)
    return result
