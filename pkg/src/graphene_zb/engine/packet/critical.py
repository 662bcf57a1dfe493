"""Critical gap values where the graphene uncertainty crosses the free one.

gamma and delta are the long-time ratios of the graphene to the free-particle
position spread growth along x and y. The plain roots (gamma = 1, delta = 1)
compare position-momentum products; the starred roots compare
position-velocity products, whose free counterpart carries 1/(2 x^2 d^2).
"""
import logging
import math
from dataclasses import replace
from typing import Sequence
import numpy as np
from scipy import optimize
from graphene_zb.errors import DegenerateSpinor, NoSignChange
from graphene_zb.events import events
from graphene_zb.quadrature import integrate_packet_weighted
from graphene_zb.types import CriticalKind, CriticalReport, CriticalRoot, PacketConfig

logger = logging.getLogger(__name__)

DEFAULT_BRACKET = (1e-3, 20.0)
# upper end beyond which a missing sign change counts as divergence
BRACKET_CAP = 2e3
_EXPANSION = 4.0
# tolerances for J; the root solver differentiates through them
_J_REL_TOL = 1e-11
_J_ABS_TOL = 1e-15

def _j_settings(self):
    s = self.settings
    return replace(s, rel_tol=min(s.rel_tol, _J_REL_TOL), abs_tol=min(s.abs_tol, _J_ABS_TOL))


def j_integral(self, m: int, n: int, cfg: PacketConfig) -> float:
    """Integral of exp(-d^2 |k - (alpha, beta)|^2) kx^m ky^n / (k^2 + inv_lambda_c^2) over the plane."""
    if m < 0 or n < 0 or m + n > 2:
        raise ValueError(f"J_{{m,n}} needs m, n >= 0 and m + n <= 2, got ({m}, {n})")
    if cfg.gapless and m + n == 0:
        raise ValueError("J_{0,0} diverges for a gapless packet")

    lam2 = cfg.inv_lambda_c ** 2

    def integrand(k):
        kx, ky = k
        s = kx ** 2 + ky ** 2 + lam2
        mono = np.power(kx, m) * np.power(ky, n)
        return np.where(s == 0.0, 0.0, mono / np.where(s == 0.0, 1.0, s))

    result = integrate_packet_weighted(integrand, cfg, _j_settings(self))
    self._check(None, 0.0, result)
    return math.pi / cfg.d ** 2 * result.value


def gamma_fn(self, x: float, cfg: PacketConfig) -> float:
    if not x > 0:
        raise ValueError(f"candidate inv_lambda_c must be positive, got {x}")
    trial = cfg.with_gap(x)
    d = cfg.d
    j10 = j_integral(self, 1, 0, trial)
    j20 = j_integral(self, 2, 0, trial)
    drift = cfg.spin_diff * x * j10 + cfg.spin_mix * j20
    return 2.0 * x ** 2 * d ** 4 / math.pi * (j20 - d ** 2 / math.pi * drift ** 2)

def delta_fn(self, x: float, cfg: PacketConfig) -> float:
    if not x > 0:
        raise ValueError(f"candidate inv_lambda_c must be positive, got {x}")
    trial = cfg.with_gap(x)
    d = cfg.d
    j01 = j_integral(self, 0, 1, trial)
    j02 = j_integral(self, 0, 2, trial)
    j11 = j_integral(self, 1, 1, trial)
    drift = cfg.spin_diff * x * j01 + cfg.spin_mix * j11
    return 2.0 * x ** 2 * d ** 4 / math.pi * (j02 - d ** 2 / math.pi * drift ** 2)

def gamma_sweep(self, xs: Sequence[float], cfg: PacketConfig) -> list[float]:
    return self._map(lambda x: gamma_fn(self, x, cfg), xs)

def delta_sweep(self, xs: Sequence[float], cfg: PacketConfig) -> list[float]:
    return self._map(lambda x: delta_fn(self, x, cfg), xs)


def critical_closed(self, kind: CriticalKind, cfg: PacketConfig) -> float:
    kind = CriticalKind(kind)
    if kind is CriticalKind.NU1:
        return 1.0 / (math.sqrt(2.0) * cfg.d)
    if kind is CriticalKind.MU1:
        mixing = 1.0 - cfg.spin_mix ** 2
        if mixing <= 1e-14:
            raise DegenerateSpinor("mu1 is infinite for a = b")
        return 1.0 / math.sqrt(2.0 * cfg.d ** 2 * mixing)
    raise ValueError(f"{kind.value} has no closed form")


def _target(self, kind: CriticalKind, cfg: PacketConfig):
    fn = delta_fn if kind.uses_delta else gamma_fn
    starred = kind in (CriticalKind.MU2_STAR, CriticalKind.NU2_STAR)

    def f(x: float) -> float:
        level = 1.0 / (2.0 * (x * cfg.d) ** 2) if starred else 1.0
        return fn(self, x, cfg) - level
    return f

def solve_critical(
        self,
        kind: CriticalKind,
        cfg: PacketConfig,
        bracket: tuple[float, float] = DEFAULT_BRACKET,
        tol: float = 1e-10
) -> CriticalRoot:
    kind = CriticalKind(kind)
    if kind.closed_form:
        raise ValueError(f"{kind.value} is closed form; use critical_closed")

    f = _target(self, kind, cfg)
    lo, hi = bracket
    f_lo, f_hi = f(lo), f(hi)
    while np.sign(f_lo) == np.sign(f_hi):
        if hi >= BRACKET_CAP:
            raise NoSignChange(f"{kind.value}: no sign change on [{lo:g}, {hi:g}]", bracket=(lo, hi))
        hi = min(hi * _EXPANSION, BRACKET_CAP)
        f_hi = f(hi)
        logger.info("%s: expanding bracket to [%g, %g]", kind.value, lo, hi)
        self._emit(events.BracketExpanded(kind=kind, bracket=(lo, hi)))

    root, info = optimize.brentq(f, lo, hi, xtol=tol, full_output=True)
    return CriticalRoot(kind=kind, value=float(root), bracket=(lo, hi),
                        iterations=info.iterations, residual=abs(f(root)))


def _closed_root(self, kind: CriticalKind, cfg: PacketConfig) -> CriticalRoot:
    try:
        return CriticalRoot(kind=kind, value=critical_closed(self, kind, cfg))
    except DegenerateSpinor:
        logger.info("%s diverges for a = b", kind.value)
        self._emit(events.CriticalDiverged(kind=kind))
        return CriticalRoot(kind=kind, value=math.inf, diverged=True)

def _divergent_root(self, kind: CriticalKind, cfg: PacketConfig) -> CriticalRoot:
    """mu2 (nu2) has no finite root when alpha (beta) vanishes."""
    try:
        return solve_critical(self, kind, cfg)
    except NoSignChange as e:
        centred = cfg.beta == 0.0 if kind.uses_delta else cfg.alpha == 0.0
        if not centred:
            raise
        logger.info("%s diverges: %s", kind.value, e)
        self._emit(events.CriticalDiverged(kind=kind))
        return CriticalRoot.divergent(kind, e.bracket)

def critical_root(self, kind: CriticalKind, cfg: PacketConfig) -> CriticalRoot:
    """One critical value, infinite where it is known to diverge."""
    kind = CriticalKind(kind)
    if kind.closed_form:
        return _closed_root(self, kind, cfg)
    if kind in (CriticalKind.MU2, CriticalKind.NU2):
        return _divergent_root(self, kind, cfg)
    return solve_critical(self, kind, cfg)

def critical_report(self, cfg: PacketConfig) -> CriticalReport:
    roots = self._map(lambda kind: critical_root(self, kind, cfg), list(CriticalKind))
    return CriticalReport(**{root.kind.value: root for root in roots})
