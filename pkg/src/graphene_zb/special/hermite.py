"""Physicists' Hermite polynomials at real and pure-imaginary arguments.

For the imaginary axis we work with the real polynomials G_n defined by
H_n(ix) = i**n G_n(x); they obey G_{n+1} = 2x G_n + 2n G_{n-1}.
"""
import math
from dataclasses import dataclass
import numpy as np
from graphene_zb.errors import IndexOverflow

N_MAX = 400

_RESCALE = 1e150
_LOG_RESCALE = math.log(_RESCALE)

def _check_index(n: int, n_max: int) -> None:
    if n < 0 or n > n_max:
        raise IndexOverflow(f"Hermite index {n} outside [0, {n_max}]")

def hermite(n: int, x: float, n_max: int = N_MAX) -> float:
    _check_index(n, n_max)
    prev, cur = 1.0, 2.0 * x
    if n == 0:
        return prev
    for j in range(1, n):
        prev, cur = cur, 2.0 * x * cur - 2.0 * j * prev
    return cur

def hermite_imag_scaled(n: int, x: float, n_max: int = N_MAX) -> float:
    """G_n(x) with H_n(ix) = i**n G_n(x)."""
    _check_index(n, n_max)
    prev, cur = 1.0, 2.0 * x
    if n == 0:
        return prev
    for j in range(1, n):
        prev, cur = cur, 2.0 * x * cur + 2.0 * j * prev
    return cur


@dataclass(frozen=True)
class HermiteTable:
    """G_0..G_N (or H_0..H_N) at one point, stored as sign and log|value|."""
    x:         float
    n_max:     int
    imaginary: bool
    sign:      np.ndarray
    log_abs:   np.ndarray

    @classmethod
    def build(cls, x: float, n_max: int = N_MAX, imaginary: bool = True, limit: int = N_MAX) -> "HermiteTable":
        _check_index(n_max, limit)
        c = 1.0 if imaginary else -1.0
        sign = np.zeros(n_max + 1)
        log_abs = np.full(n_max + 1, -np.inf)

        def store(j: int, value: float, offset: float) -> None:
            if value != 0.0:
                sign[j] = math.copysign(1.0, value)
                log_abs[j] = math.log(abs(value)) + offset

        prev, cur, offset = 1.0, 2.0 * x, 0.0
        store(0, prev, 0.0)
        if n_max >= 1:
            store(1, cur, 0.0)
        for j in range(1, n_max):
            nxt = 2.0 * x * cur + c * 2.0 * j * prev
            if abs(nxt) > _RESCALE:
                prev, cur, nxt = prev / _RESCALE, cur / _RESCALE, nxt / _RESCALE
                offset += _LOG_RESCALE
            store(j + 1, nxt, offset)
            prev, cur = cur, nxt

        sign.setflags(write=False)
        log_abs.setflags(write=False)
        return cls(x=x, n_max=n_max, imaginary=imaginary, sign=sign, log_abs=log_abs)

    def __getitem__(self, n: int) -> float:
        _check_index(n, self.n_max)
        if self.sign[n] == 0.0:
            return 0.0
        return float(self.sign[n] * math.exp(self.log_abs[n]))

    @property
    def values(self) -> np.ndarray:
        with np.errstate(over="ignore"):
            return self.sign * np.exp(self.log_abs)
