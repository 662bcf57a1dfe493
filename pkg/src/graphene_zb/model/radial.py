"""Kernels written as angular monomials times functions of |k| only.

With s = |k|**2 + inv_lambda_c**2 and theta = v_F t sqrt(s), every kernel of
:mod:`graphene_zb.model.kernels` is a short sum of ``coefficient * monomial(k)
* radial(|k|)``. The radial functions are

    g1 = sin(theta)cos(theta)/sqrt(s)
    g2 = sin(theta)**2/s
    g3 = (theta - sin(theta)cos(theta))/s**1.5
    g4 = (theta**2 - sin(theta)**2)/s**2
    h0 = cos(2 theta)
    inv_s = 1/s

and each g_k (and h0) is an entire function of s whose Taylor coefficients are
``(-1)**n (2 v_F t)**(2n+k) / (2 (2n+k)!)`` (``h0``: no factor 1/2), which is
what the series path integrates term by term.
"""
from dataclasses import dataclass
from enum import Enum
import numpy as np
from graphene_zb.types import Observable, PacketConfig

# small-theta branch limit for g3 and g4
_SMALL_THETA = 0.05

class Monomial(str, Enum):
    ONE = "1"
    X   = "x"
    Y   = "y"
    XX  = "xx"
    YY  = "yy"
    XY  = "xy"

    @property
    def powers(self) -> tuple[int, int]:
        return _POWERS[self]

    @property
    def degree(self) -> int:
        p, q = self.powers
        return p + q

    def __call__(self, kx, ky):
        p, q = self.powers
        return np.power(kx, p) * np.power(ky, q)

_POWERS = {
    Monomial.ONE: (0, 0),
    Monomial.X:   (1, 0),
    Monomial.Y:   (0, 1),
    Monomial.XX:  (2, 0),
    Monomial.YY:  (0, 2),
    Monomial.XY:  (1, 1),
}


class Radial(str, Enum):
    G1    = "g1"
    G2    = "g2"
    G3    = "g3"
    G4    = "g4"
    H0    = "h0"
    INV_S = "inv_s"

    @property
    def series_index(self) -> int:
        """k in the Taylor coefficient (2 v_F t)**(2n+k)/(2n+k)!."""
        if self is Radial.INV_S:
            raise ValueError("1/s has no Taylor expansion in s")
        return {Radial.G1: 1, Radial.G2: 2, Radial.G3: 3, Radial.G4: 4, Radial.H0: 0}[self]


@dataclass(frozen=True)
class Term:
    monomial:    Monomial
    coefficient: float
    radial:      Radial


def _f3(theta):
    # (theta - sin(theta)cos(theta))/theta**3
    th2 = theta * theta
    small = 2.0 / 3.0 - th2 * (2.0 / 15.0 - th2 * (4.0 / 315.0 - th2 * (2.0 / 2835.0)))
    safe = np.where(theta < _SMALL_THETA, 1.0, theta)
    direct = (safe - np.sin(safe) * np.cos(safe)) / safe ** 3
    return np.where(theta < _SMALL_THETA, small, direct)

def _f4(theta):
    # (theta**2 - sin(theta)**2)/theta**4
    th2 = theta * theta
    small = 1.0 / 3.0 - th2 * (2.0 / 45.0 - th2 * (1.0 / 315.0 - th2 * (2.0 / 14175.0)))
    safe = np.where(theta < _SMALL_THETA, 1.0, theta)
    direct = (safe ** 2 - np.sin(safe) ** 2) / safe ** 4
    return np.where(theta < _SMALL_THETA, small, direct)


def radial_value(radial: Radial, r, t: float, cfg: PacketConfig):
    """Evaluate one radial function at |k| = r (array or float)."""
    r = np.asarray(r, dtype=float)
    tau = cfg.v_f * t
    s = r * r + cfg.inv_lambda_c ** 2
    theta = tau * np.sqrt(s)
    radial = Radial(radial)

    if radial is Radial.G1:
        return tau * np.sinc(2.0 * theta / np.pi)
    if radial is Radial.G2:
        return tau * tau * np.sinc(theta / np.pi) ** 2
    if radial is Radial.G3:
        return tau ** 3 * _f3(theta)
    if radial is Radial.G4:
        return tau ** 4 * _f4(theta)
    if radial is Radial.H0:
        return np.cos(2.0 * theta)
    with np.errstate(divide="ignore"):
        return np.where(s == 0.0, 0.0, 1.0 / np.where(s == 0.0, 1.0, s))


def radial_terms(obs: Observable, t: float, cfg: PacketConfig) -> tuple[list[Term], list[Term]]:
    """(spreading terms, total terms) of one observable's kernel.

    The zitterbewegung part is the total minus the spreading part.
    """
    obs = Observable(obs)
    lam, sd, sm = cfg.inv_lambda_c, cfg.spin_diff, cfg.spin_mix
    tau, v = cfg.v_f * t, cfg.v_f
    M, R = Monomial, Radial

    if obs is Observable.X:
        spreading = [Term(M.X, tau * sd * lam, R.INV_S), Term(M.XX, tau * sm, R.INV_S)]
        total = [Term(M.X, sd * lam, R.G3), Term(M.Y, sd, R.G2),
                 Term(M.XX, sm, R.G3), Term(M.ONE, sm, R.G1)]
    elif obs is Observable.Y:
        spreading = [Term(M.Y, tau * sd * lam, R.INV_S), Term(M.XY, tau * sm, R.INV_S)]
        total = [Term(M.Y, sd * lam, R.G3), Term(M.X, -sd, R.G2),
                 Term(M.XY, sm, R.G3), Term(M.ONE, sm * lam, R.G2)]
    elif obs is Observable.X2:
        spreading = [Term(M.XX, tau * tau, R.INV_S)]
        total = [Term(M.ONE, 1.0, R.G2), Term(M.XX, 1.0, R.G4)]
    elif obs is Observable.Y2:
        spreading = [Term(M.YY, tau * tau, R.INV_S)]
        total = [Term(M.ONE, 1.0, R.G2), Term(M.YY, 1.0, R.G4)]
    elif obs is Observable.VX:
        spreading = [Term(M.X, v * sd * lam, R.INV_S), Term(M.XX, v * sm, R.INV_S)]
        total = [Term(M.X, 2.0 * v * sd * lam, R.G2), Term(M.Y, 2.0 * v * sd, R.G1),
                 Term(M.XX, 2.0 * v * sm, R.G2), Term(M.ONE, v * sm, R.H0)]
    else:
        spreading = [Term(M.Y, v * sd * lam, R.INV_S), Term(M.XY, v * sm, R.INV_S)]
        total = [Term(M.Y, 2.0 * v * sd * lam, R.G2), Term(M.X, -2.0 * v * sd, R.G1),
                 Term(M.XY, 2.0 * v * sm, R.G2), Term(M.ONE, 2.0 * v * sm * lam, R.G1)]

    return spreading, total


def evaluate_terms(terms: list[Term], k, t: float, cfg: PacketConfig):
    """Sum of coefficient * monomial(k) * radial(|k|) at the points k."""
    kx, ky = (np.asarray(c, dtype=float) for c in k)
    r = np.hypot(kx, ky)
    cache = {}
    total = np.zeros(np.broadcast(kx, ky).shape)
    for term in terms:
        if term.radial not in cache:
            cache[term.radial] = radial_value(term.radial, r, t, cfg)
        total = total + term.coefficient * term.monomial(kx, ky) * cache[term.radial]
    return total
