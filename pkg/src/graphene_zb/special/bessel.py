import numpy as np
from scipy import special
from graphene_zb.errors import Overflow

MAX_ARGUMENT = 700.0
ORDERS = (0, 1, 2)

def _check(nu: int, x) -> np.ndarray:
    if nu not in ORDERS:
        raise ValueError(f"modified Bessel order must be one of {ORDERS}, got {nu}")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("modified Bessel argument must be >= 0")
    return x

def bessel_i(nu: int, x):
    """I_nu(x) for x in [0, 700]."""
    x = _check(nu, x)
    if np.any(x > MAX_ARGUMENT):
        raise Overflow(f"I_{nu}(x) overflows for x > {MAX_ARGUMENT}")
    value = special.iv(nu, x)
    return float(value) if value.ndim == 0 else value

def bessel_i_scaled(nu: int, x):
    """exp(-x) I_nu(x); finite for every x >= 0."""
    x = _check(nu, x)
    value = special.ive(nu, x)
    return float(value) if value.ndim == 0 else value
