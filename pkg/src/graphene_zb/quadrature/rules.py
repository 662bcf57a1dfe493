"""Composite Gauss-Legendre node families shared by the 1D and 2D rules."""
import logging
import math
from functools import lru_cache
from typing import Callable
import numpy as np
from graphene_zb.types import QuadResult, QuadSettings

logger = logging.getLogger(__name__)

@lru_cache(maxsize=None)
def _legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w

def composite_nodes(lo: float, hi: float, panels: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = _legendre(order)
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mids = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mids[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights

def panels_for_phase(swing: float, settings: QuadSettings) -> int:
    """Panels per axis needed before an oscillating integrand is trusted."""
    return max(settings.min_panels, int(math.ceil(2.0 * abs(swing) / math.pi)))


def refine(
        evaluate: Callable[[int], np.ndarray],
        points_per_level: Callable[[int], int],
        panels0: int,
        settings: QuadSettings
) -> list[QuadResult]:
    """Double the panel count until successive levels agree.

    ``evaluate(panels)`` returns one value per component. The error estimate is
    twice the change between the last two levels.
    """
    previous = None
    value = None
    error = None
    evaluations = 0

    for level in range(settings.max_level):
        panels = panels0 << level
        if points_per_level(panels) > settings.max_points:
            logger.warning("quadrature point budget reached at %d panels", panels)
            break

        value = np.atleast_1d(np.asarray(evaluate(panels), dtype=float))
        evaluations += points_per_level(panels)

        if previous is not None:
            error = 2.0 * np.abs(value - previous)
            if all(e <= settings.tolerance(v) for v, e in zip(value, error)):
                return [QuadResult(value=float(v), est_error=float(e),
                                   evaluations=evaluations, converged=True)
                        for v, e in zip(value, error)]
        previous = value

    if value is None:
        raise ValueError("quadrature settings leave no admissible refinement level")
    if error is None:
        error = np.full(value.shape, np.inf)

    logger.warning("quadrature did not converge: value=%s est_error=%s", value, error)
    return [QuadResult(value=float(v), est_error=float(e),
                       evaluations=evaluations, converged=False)
            for v, e in zip(value, error)]
