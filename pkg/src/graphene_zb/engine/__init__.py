from .engine_type import Method, MethodList
from .engine import Engine
from .packet import PacketEngine
