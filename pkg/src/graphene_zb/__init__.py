from .types import PacketConfig, Observable, UncertaintyPair
from .engine import Method, PacketEngine
