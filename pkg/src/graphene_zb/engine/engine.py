from abc import ABC
from abc import abstractmethod
from typing import Sequence
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
    SpectralWeights,
    UncertaintyPair,
    UncertaintyPoint,
)
from .engine_type import Method


class Engine(ABC):

    @abstractmethod
    def flush_events(self) -> list[events.Event]:
        pass

    @abstractmethod
    def close(self) -> None:
        pass

    @abstractmethod
    def expectation(
        self, obs: Observable, t: float, cfg: PacketConfig, method: Method
    ) -> ExpectationResult:
        pass

    @abstractmethod
    def expectation_series(
        self, obs: Observable, times: Sequence[float], cfg: PacketConfig, method: Method
    ) -> list[ExpectationResult]:
        pass

    @abstractmethod
    def uncertainty(
        self, pair: UncertaintyPair, t: float, cfg: PacketConfig
    ) -> UncertaintyPoint:
        pass

    @abstractmethod
    def uncertainty_series(
        self, pair: UncertaintyPair, times: Sequence[float], cfg: PacketConfig
    ) -> list[UncertaintyPoint]:
        pass

    @abstractmethod
    def packet_split_weights(
        self, cfg: PacketConfig
    ) -> SpectralWeights:
        pass

    @abstractmethod
    def j_integral(
        self, m: int, n: int, cfg: PacketConfig
    ) -> float:
        pass

    @abstractmethod
    def gamma_fn(
        self, x: float, cfg: PacketConfig
    ) -> float:
        pass

    @abstractmethod
    def delta_fn(
        self, x: float, cfg: PacketConfig
    ) -> float:
        pass

    @abstractmethod
    def gamma_sweep(
        self, xs: Sequence[float], cfg: PacketConfig
    ) -> list[float]:
        pass

    @abstractmethod
    def delta_sweep(
        self, xs: Sequence[float], cfg: PacketConfig
    ) -> list[float]:
        pass

    @abstractmethod
    def critical_closed(
        self, kind: CriticalKind, cfg: PacketConfig
    ) -> float:
        pass

    @abstractmethod
    def solve_critical(
        self, kind: CriticalKind, cfg: PacketConfig, bracket: tuple[float, float], tol: float
    ) -> CriticalRoot:
        pass

    @abstractmethod
    def critical_root(
        self, kind: CriticalKind, cfg: PacketConfig
    ) -> CriticalRoot:
        pass

    @abstractmethod
    def critical_report(
        self, cfg: PacketConfig
    ) -> CriticalReport:
        pass

    @abstractmethod
    def short_time_limit(
        self, obs: Observable, cfg: PacketConfig
    ) -> LimitExpansion:
        pass

    @abstractmethod
    def long_time_slope(
        self, obs: Observable, cfg: PacketConfig
    ) -> float:
        pass

    @abstractmethod
    def late_velocity_spread(
        self, pair: UncertaintyPair, cfg: PacketConfig, t_late: float, periods: int
    ) -> LateVelocitySpread:
        pass

    @abstractmethod
    def gapless_expectation(
        self, obs: Observable, t: float, cfg: PacketConfig
    ) -> ExpectationResult:
        pass

    @abstractmethod
    def symmetric_expectation(
        self, obs: Observable, t: float, cfg: PacketConfig
    ) -> ExpectationResult:
        pass
