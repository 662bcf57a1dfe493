from .packet_config import PacketConfig
from .split_kernel import SplitKernel
from .observable import Observable, ObservableList, UncertaintyPair, UncertaintyPairList
from .expectation_result import ExpectationResult
from .quad_result import QuadResult, QuadSettings
from .series_result import SeriesResult
from .uncertainty_point import UncertaintyPoint
from .spectral_weights import SpectralWeights
from .critical_report import CriticalKind, CriticalKindList, CriticalRoot, CriticalReport
from .limit_expansion import LimitExpansion
from .run_config import RunConfig
from .late_velocity_spread import LateVelocitySpread
