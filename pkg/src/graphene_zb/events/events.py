from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Optional
from graphene_zb.types import CriticalKind, Observable, QuadResult, SeriesResult, UncertaintyPair

class EventType(str, Enum):
    QuadratureNotConverged = "QuadratureNotConverged"
    SeriesNotConverged = "SeriesNotConverged"
    PathDiscrepancy = "PathDiscrepancy"
    VarianceClamped = "VarianceClamped"
    BracketExpanded = "BracketExpanded"
    CriticalDiverged = "CriticalDiverged"

@dataclass
class Event(ABC):
    emitted_at: datetime = field(init=False, default_factory=datetime.now)

    @property
    @abstractmethod
    def event_type(self) -> EventType:
        pass

@dataclass
class QuadratureNotConverged(Event):
    observable: Optional[Observable]
    t: float
    result: QuadResult

    @property
    def event_type(self) -> EventType:
        return EventType.QuadratureNotConverged

@dataclass
class SeriesNotConverged(Event):
    observable: Observable
    t: float
    result: SeriesResult

    @property
    def event_type(self) -> EventType:
        return EventType.SeriesNotConverged

@dataclass
class PathDiscrepancy(Event):
    observable: Observable
    t: float
    quadrature: float
    series: float

    @property
    def event_type(self) -> EventType:
        return EventType.PathDiscrepancy

@dataclass
class VarianceClamped(Event):
    pair: UncertaintyPair
    t: float
    variance: float

    @property
    def event_type(self) -> EventType:
        return EventType.VarianceClamped

@dataclass
class BracketExpanded(Event):
    kind: CriticalKind
    bracket: tuple[float, float]

    @property
    def event_type(self) -> EventType:
        return EventType.BracketExpanded

@dataclass
class CriticalDiverged(Event):
    kind: CriticalKind

    @property
    def event_type(self) -> EventType:
        return EventType.CriticalDiverged
