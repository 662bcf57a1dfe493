import logging
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Optional, Sequence, TypeVar
from graphene_zb.errors import InvalidConfig, NonConvergence
from graphene_zb.events import events
from graphene_zb.types import (
    CriticalKind,
    CriticalReport,
    CriticalRoot,
    ExpectationResult,
    LateVelocitySpread,
    LimitExpansion,
    Observable,
    PacketConfig,
    QuadResult,
    QuadSettings,
    SpectralWeights,
    UncertaintyPair,
    UncertaintyPoint,
)
from graphene_zb.engine.engine import Engine
from graphene_zb.engine.engine_type import Method
from graphene_zb.engine.packet.expectation import expectation
from graphene_zb.engine.packet.expectation import expectation_series
from graphene_zb.engine.packet.uncertainty import uncertainty
from graphene_zb.engine.packet.uncertainty import uncertainty_series
from graphene_zb.engine.packet.weights import packet_split_weights
from graphene_zb.engine.packet.critical import DEFAULT_BRACKET
from graphene_zb.engine.packet.critical import j_integral
from graphene_zb.engine.packet.critical import gamma_fn
from graphene_zb.engine.packet.critical import delta_fn
from graphene_zb.engine.packet.critical import gamma_sweep
from graphene_zb.engine.packet.critical import delta_sweep
from graphene_zb.engine.packet.critical import critical_closed
from graphene_zb.engine.packet.critical import solve_critical
from graphene_zb.engine.packet.critical import critical_root
from graphene_zb.engine.packet.critical import critical_report
from graphene_zb.engine.packet.limits import short_time_limit
from graphene_zb.engine.packet.limits import long_time_slope
from graphene_zb.engine.packet.limits import late_velocity_spread
from graphene_zb.engine.packet.gapless import gapless_expectation
from graphene_zb.engine.packet.gapless import symmetric_expectation

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "ZB_THREADS"

def threads_from_env(default: int = 1) -> int:
    """Worker count from ZB_THREADS; 0 means one per CPU."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        count = int(raw)
    except ValueError:
        raise InvalidConfig(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return _worker_count(count)

def _worker_count(count: int) -> int:
    if count < 0:
        raise InvalidConfig(f"thread count must be >= 0, got {count}")
    return count or (os.cpu_count() or 1)


class PacketEngine(Engine):
    settings: QuadSettings

    def __init__(
            self,
            settings: QuadSettings = QuadSettings(),
            series_tol: float = 1e-12,
            series_n_max: int = 150,
            threads: Optional[int] = None,
            emit_events: bool = False,
            strict: bool = False
    ):
        self.settings = settings
        self.series_tol = series_tol
        self.series_n_max = series_n_max
        self.threads = threads_from_env() if threads is None else _worker_count(threads)
        self.emit_events = emit_events
        self.strict = strict
        self._events_buffer = []
        self._events_lock = threading.Lock()
        self._pool: Optional[ThreadPoolExecutor] = None

    def __enter__(self):
        if self.threads > 1:
            self._pool = ThreadPoolExecutor(max_workers=self.threads, thread_name_prefix="zb")
        return self

    def __exit__(self, exc_type, exc, tb):
        self.close()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown(wait=True)
            self._pool = None

    def _emit(self, event: events.Event) -> None:
        if self.emit_events:
            with self._events_lock:
                self._events_buffer.append(event)

    def _check(self, obs: Optional[Observable], t: float, result: QuadResult) -> None:
        if result.converged:
            return
        self._emit(events.QuadratureNotConverged(observable=obs, t=t, result=result))
        if self.strict:
            label = obs.value if obs is not None else "integral"
            raise NonConvergence(f"{label} at t={t:g} fs did not converge "
                                 f"(est_error={result.est_error:g})", result=result)

    def _map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Apply fn to items, in input order, on the worker pool when there is one."""
        if self._pool is None:
            return [fn(item) for item in items]
        return list(self._pool.map(fn, items))

    def flush_events(self) -> list[events.Event]:
        with self._events_lock:
            flushed = self._events_buffer
            self._events_buffer = []
        return flushed

    def expectation(
            self,
            obs: Observable,
            t: float,
            cfg: PacketConfig,
            method: Method = Method.QUADRATURE
    ) -> ExpectationResult:
        return expectation(self, obs, t, cfg, method)

    def expectation_series(
            self,
            obs: Observable,
            times: Sequence[float],
            cfg: PacketConfig,
            method: Method = Method.QUADRATURE
    ) -> list[ExpectationResult]:
        return expectation_series(self, obs, times, cfg, method)

    def uncertainty(
            self,
            pair: UncertaintyPair,
            t: float,
            cfg: PacketConfig
    ) -> UncertaintyPoint:
        return uncertainty(self, pair, t, cfg)

    def uncertainty_series(
            self,
            pair: UncertaintyPair,
            times: Sequence[float],
            cfg: PacketConfig
    ) -> list[UncertaintyPoint]:
        return uncertainty_series(self, pair, times, cfg)

    def packet_split_weights(
            self,
            cfg: PacketConfig
    ) -> SpectralWeights:
        return packet_split_weights(self, cfg)

    def j_integral(
            self,
            m: int,
            n: int,
            cfg: PacketConfig
    ) -> float:
        return j_integral(self, m, n, cfg)

    def gamma_fn(
            self,
            x: float,
            cfg: PacketConfig
    ) -> float:
        return gamma_fn(self, x, cfg)

    def delta_fn(
            self,
            x: float,
            cfg: PacketConfig
    ) -> float:
        return delta_fn(self, x, cfg)

    def gamma_sweep(
            self,
            xs: Sequence[float],
            cfg: PacketConfig
    ) -> list[float]:
        return gamma_sweep(self, xs, cfg)

    def delta_sweep(
            self,
            xs: Sequence[float],
            cfg: PacketConfig
    ) -> list[float]:
        return delta_sweep(self, xs, cfg)

    def critical_closed(
            self,
            kind: CriticalKind,
            cfg: PacketConfig
    ) -> float:
        return critical_closed(self, kind, cfg)

    def solve_critical(
            self,
            kind: CriticalKind,
            cfg: PacketConfig,
            bracket: tuple[float, float] = DEFAULT_BRACKET,
            tol: float = 1e-10
    ) -> CriticalRoot:
        return solve_critical(self, kind, cfg, bracket, tol)

    def critical_root(
            self,
            kind: CriticalKind,
            cfg: PacketConfig
    ) -> CriticalRoot:
        return critical_root(self, kind, cfg)

    def critical_report(
            self,
            cfg: PacketConfig
    ) -> CriticalReport:
        return critical_report(self, cfg)

    def short_time_limit(
            self,
            obs: Observable,
            cfg: PacketConfig
    ) -> LimitExpansion:
        return short_time_limit(self, obs, cfg)

    def long_time_slope(
            self,
            obs: Observable,
            cfg: PacketConfig
    ) -> float:
        return long_time_slope(self, obs, cfg)

    def late_velocity_spread(
            self,
            pair: UncertaintyPair,
            cfg: PacketConfig,
            t_late: Optional[float] = None,
            periods: int = 50
    ) -> LateVelocitySpread:
        return late_velocity_spread(self, pair, cfg, t_late, periods)

    def gapless_expectation(
            self,
            obs: Observable,
            t: float,
            cfg: PacketConfig
    ) -> ExpectationResult:
        return gapless_expectation(self, obs, t, cfg)

    def symmetric_expectation(
            self,
            obs: Observable,
            t: float,
            cfg: PacketConfig
    ) -> ExpectationResult:
        return symmetric_expectation(self, obs, t, cfg)
