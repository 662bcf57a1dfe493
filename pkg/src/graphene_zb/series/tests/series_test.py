import math
import pytest
from graphene_zb.engine import PacketEngine
from graphene_zb.errors import GapRequired, IndexOverflow
from graphene_zb.series import (
    QUIET_SHELLS,
    SERIES,
    moment_table,
    series_vx,
    series_vy,
    series_x,
    series_x2,
    series_y,
    series_y2,
    signed_log_sum,
)
from graphene_zb.types import Observable, PacketConfig
import numpy as np


@pytest.fixture
def cfg():
    return PacketConfig(d=8.0, alpha=0.04, beta=1.2, a=0.9, inv_lambda_c=2.0)

@pytest.fixture
def engine():
    with PacketEngine() as engine:
        yield engine


def test_signed_log_sum():
    sign, log = signed_log_sum(np.array([1.0, -1.0]), np.array([math.log(3.0), 0.0]))
    assert sign == 1.0
    assert math.exp(log) == pytest.approx(2.0)
    assert signed_log_sum(np.array([1.0, -1.0]), np.array([0.0, 0.0]))[0] == 0.0

def test_moments(cfg: PacketConfig):
    table = moment_table(cfg, 10)
    sign, log = table.moment(0, 1, 0)
    assert sign * math.exp(log) == pytest.approx(cfg.alpha, rel=1e-12)
    sign, log = table.moment(1, 0, 0)
    mean_s = cfg.alpha ** 2 + cfg.beta ** 2 + 1 / cfg.d ** 2 + cfg.inv_lambda_c ** 2
    assert sign * math.exp(log) == pytest.approx(mean_s, rel=1e-12)


def test_values_at_time_zero(cfg: PacketConfig):
    assert series_x(0.0, cfg).value == 0.0
    assert series_y(0.0, cfg).value == 0.0
    assert series_x2(0.0, cfg).value == pytest.approx(cfg.d ** 2 / 2)
    assert series_y2(0.0, cfg).value == pytest.approx(cfg.d ** 2 / 2)
    assert series_vx(0.0, cfg).value == pytest.approx(cfg.spin_mix * cfg.v_f)
    assert series_vy(0.0, cfg).value == 0.0
    assert series_x(0.0, cfg).converged

def test_gap_is_required():
    gapless = PacketConfig(d=8.0, alpha=0.0, beta=1.2, a=1.0, inv_lambda_c=0.0)
    with pytest.raises(GapRequired):
        series_x(1.0, gapless)

def test_order_beyond_hermite_table(cfg: PacketConfig):
    with pytest.raises(IndexOverflow):
        series_x(1.0, cfg, n_max=250)

def test_centred_packet_has_equal_second_moments():
    centred = PacketConfig(d=8.0, alpha=0.0, beta=0.0, a=0.9, inv_lambda_c=2.0)
    for t in (0.3, 1.0):
        assert series_x2(t, centred).value == pytest.approx(series_y2(t, centred).value, rel=1e-12)


@pytest.mark.parametrize("obs", list(Observable))
@pytest.mark.parametrize("t", [0.1, 0.5, 1.0, 2.0])
def test_agrees_with_quadrature(obs: Observable, t: float, cfg: PacketConfig, engine: PacketEngine):
    series = SERIES[obs](t, cfg, tol=1e-10)
    if not series.converged:
        assert series.terms_used > 0
        return
    quad = engine.expectation(obs, t, cfg)
    assert series.value == pytest.approx(quad.value, abs=1e-6 * max(abs(quad.value), cfg.d))

def test_single_spinor_component(engine: PacketEngine):
    pure = PacketConfig(d=8.0, alpha=0.04, beta=1.2, a=1.0, inv_lambda_c=2.0)
    assert pure.spin_mix == 0.0
    series = series_x(0.5, pure, tol=1e-10)
    assert series.converged
    assert series.value == pytest.approx(engine.expectation(Observable.X, 0.5, pure).value, abs=1e-8)


@pytest.mark.parametrize("obs", [Observable.X2, Observable.Y2])
@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_shells_decay_monotonically_past_their_peak(obs: Observable, t: float, cfg: PacketConfig):
    result = SERIES[obs](t, cfg, tol=1e-12)
    assert result.terms_used > 0
    magnitudes = np.abs(np.array(result.shells))
    tail = magnitudes[int(np.argmax(magnitudes)):]
    assert len(tail) > QUIET_SHELLS
    assert np.all(np.diff(tail) < 0.0)

def test_longer_times_need_more_shells(cfg: PacketConfig):
    used = [series_x2(t, cfg).terms_used for t in (0.25, 0.5, 1.0, 2.0)]
    assert used == sorted(used)
    assert used[0] < used[-1]
