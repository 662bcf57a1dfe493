from .packet_engine import PacketEngine, threads_from_env, THREADS_ENV
