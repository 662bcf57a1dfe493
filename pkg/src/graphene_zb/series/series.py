"""Power series of the packet averages in (v_F t).

Each observable is a short sum of coefficient * monomial * g_k(s) (see
:func:`graphene_zb.model.radial_terms`). Expanding g_k term by term in s and
averaging s^n kx^p ky^q exactly gives one shell per power n; shells are summed
in index order until three in a row are negligible.
"""
import logging
import math
import numpy as np
from graphene_zb.errors import GapRequired
from graphene_zb.model import radial_terms
from graphene_zb.types import Observable, PacketConfig, SeriesResult
from .moments import moment_table, signed_log_sum

logger = logging.getLogger(__name__)

# shells in a row below tol * |partial sum| before stopping
QUIET_SHELLS = 3
# ulps of error carried by one shell from its inner sums
_SHELL_ULPS = 16.0
# log-magnitude beyond which a shell is treated as divergent
_LOG_LIMIT = 700.0

def _log_coefficient(k: int, n: int, log_two_tau: float, log_fac: np.ndarray) -> float:
    power = 2 * n + k
    log_pow = 0.0 if power == 0 else power * log_two_tau
    return log_pow - log_fac[power] - (0.0 if k == 0 else math.log(2.0))


def evaluate_series(
        obs: Observable,
        t: float,
        cfg: PacketConfig,
        tol: float = 1e-12,
        n_max: int = 150
) -> SeriesResult:
    obs = Observable(obs)
    if cfg.gapless:
        raise GapRequired("the series path expands in inv_lambda_c and needs a gap")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")

    _, terms = radial_terms(obs, t, cfg)
    table = moment_table(cfg, n_max)
    tau = cfg.v_f * t
    log_two_tau = math.log(2.0 * tau) if tau > 0 else -math.inf
    offset = 0.5 * cfg.d ** 2 if obs.is_second_moment else 0.0

    shells: list[float] = []
    quiet = 0
    largest = 0.0
    overflow = False

    for n in range(n_max + 1):
        signs, logs = [], []
        for term in terms:
            if term.coefficient == 0.0:
                continue
            p, q = term.monomial.powers
            sign, log_mom = table.moment(n, p, q)
            log_c = _log_coefficient(term.radial.series_index, n, log_two_tau, table.log_fac)
            signs.append(sign * math.copysign(1.0, term.coefficient))
            logs.append(math.log(abs(term.coefficient)) + log_c + log_mom)

        sign, log_shell = signed_log_sum(np.array(signs), np.array(logs))
        if log_shell > _LOG_LIMIT:
            overflow = True
            break
        shell = (-1.0) ** n * sign * math.exp(log_shell) if sign else 0.0
        shells.append(shell)
        largest = max(largest, abs(shell))

        partial = math.fsum(shells)
        quiet = quiet + 1 if abs(shell) <= tol * abs(partial) else 0
        if quiet >= QUIET_SHELLS:
            break

    value = math.fsum(shells)
    tail = math.fsum(abs(s) for s in shells[-QUIET_SHELLS:])
    rounding = largest * _SHELL_ULPS * np.finfo(float).eps
    converged = (not overflow and quiet >= QUIET_SHELLS
                 and rounding <= max(tol * abs(value), np.finfo(float).tiny))

    result = SeriesResult(value=value + offset, terms_used=len(shells) - 1,
                          converged=converged,
                          last_term_magnitude=abs(shells[-1]) if shells else 0.0,
                          est_error=tail + rounding,
                          shells=tuple(shells))
    if not converged:
        logger.info("series for %s at t=%g not converged after %d shells (largest shell %g)",
                    obs.value, t, len(shells), largest)
    return result


def series_x(t: float, cfg: PacketConfig, tol: float = 1e-12, n_max: int = 150) -> SeriesResult:
    return evaluate_series(Observable.X, t, cfg, tol, n_max)

def series_y(t: float, cfg: PacketConfig, tol: float = 1e-12, n_max: int = 150) -> SeriesResult:
    return evaluate_series(Observable.Y, t, cfg, tol, n_max)

def series_x2(t: float, cfg: PacketConfig, tol: float = 1e-12, n_max: int = 150) -> SeriesResult:
    return evaluate_series(Observable.X2, t, cfg, tol, n_max)

def series_y2(t: float, cfg: PacketConfig, tol: float = 1e-12, n_max: int = 150) -> SeriesResult:
    return evaluate_series(Observable.Y2, t, cfg, tol, n_max)

def series_vx(t: float, cfg: PacketConfig, tol: float = 1e-12, n_max: int = 150) -> SeriesResult:
    return evaluate_series(Observable.VX, t, cfg, tol, n_max)

def series_vy(t: float, cfg: PacketConfig, tol: float = 1e-12, n_max: int = 150) -> SeriesResult:
    return evaluate_series(Observable.VY, t, cfg, tol, n_max)

SERIES = {
    Observable.X:  series_x,
    Observable.Y:  series_y,
    Observable.X2: series_x2,
    Observable.Y2: series_y2,
    Observable.VX: series_vx,
    Observable.VY: series_vy,
}
