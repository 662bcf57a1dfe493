import math
import numpy as np
import pytest
import graphene_zb.engine.packet.uncertainty as uncertainty_module
from graphene_zb.engine import Method, PacketEngine
from graphene_zb.errors import NegativeVariance
from graphene_zb.events.events import SeriesNotConverged, VarianceClamped
from graphene_zb.quadrature import oracle_riemann
from graphene_zb.types import ExpectationResult, Observable, PacketConfig, UncertaintyPair


@pytest.fixture
def engine():
    with PacketEngine(emit_events=True) as engine:
        yield engine

@pytest.fixture
def cfg():
    return PacketConfig(d=8.0, alpha=0.04, beta=1.2, a=0.9, inv_lambda_c=2.0)

def random_configs(count: int, seed: int = 7) -> list[PacketConfig]:
    rng = np.random.default_rng(seed)
    return [PacketConfig(d=rng.uniform(3.0, 12.0), alpha=rng.uniform(-1.5, 1.5),
                         beta=rng.uniform(-1.5, 1.5), a=rng.uniform(-1.0, 1.0),
                         inv_lambda_c=rng.uniform(0.05, 5.0))
            for _ in range(count)]


@pytest.mark.parametrize("cfg", random_configs(20))
@pytest.mark.parametrize("pair", [UncertaintyPair.XP, UncertaintyPair.YP])
def test_minimum_uncertainty_at_time_zero(pair: UncertaintyPair, cfg: PacketConfig, engine: PacketEngine):
    point = engine.uncertainty(pair, 0.0, cfg)
    assert point.product == pytest.approx(0.5, abs=1e-9)
    assert point.free_baseline == pytest.approx(0.5)

def test_velocity_spread_identity(engine: PacketEngine, cfg: PacketConfig):
    point = engine.uncertainty(UncertaintyPair.XV, 2.0, cfg)
    velocity = engine.expectation(Observable.VX, 2.0, cfg).value
    assert velocity ** 2 + point.delta_conj ** 2 == pytest.approx(cfg.v_f ** 2, abs=1e-12)
    assert point.delta_conj <= cfg.v_f

def test_uncertainty_series_order(engine: PacketEngine, cfg: PacketConfig):
    times = [0.0, 5.0, 1.0]
    points = engine.uncertainty_series(UncertaintyPair.YP, times, cfg)
    assert [p.t for p in points] == times
    assert points[0].product < points[1].product

def test_gapless_baseline_is_undefined(engine: PacketEngine):
    gapless = PacketConfig(d=8.0, alpha=0.0, beta=1.2, a=1.0, inv_lambda_c=0.0)
    assert math.isnan(engine.uncertainty(UncertaintyPair.XP, 1.0, gapless).free_baseline)

def test_zitterbewegung_share_fades(engine: PacketEngine, cfg: PacketConfig):
    early = engine.uncertainty(UncertaintyPair.XP, 2.0, cfg)
    late = engine.uncertainty(UncertaintyPair.XP, 400.0, cfg)
    assert abs(late.zb_share) < abs(early.zb_share)
    assert late.spreading_share > 0.9


# the trembling term can pull the product below the free baseline by ~1.7e-7
ZB_DIP = 2.5e-7

def test_large_gap_beats_free_particle(engine: PacketEngine):
    wide = PacketConfig(d=8.0, alpha=0.04, beta=1.2, a=0.9, inv_lambda_c=6.0)
    points = engine.uncertainty_series(UncertaintyPair.XP, np.linspace(0.1, 40.0, 400).tolist(), wide)
    excess = np.array([p.product - p.free_baseline for p in points])
    assert len(points) == 400
    assert excess.min() > -ZB_DIP
    assert np.count_nonzero(excess <= 0.0) <= 5
    assert np.all(excess[np.array([p.t for p in points]) >= 10.0] > 0.0)

def test_large_gap_beats_free_particle_along_y(engine: PacketEngine):
    wide = PacketConfig(d=8.0, alpha=1.2, beta=0.04, a=0.9, inv_lambda_c=8.0)
    points = engine.uncertainty_series(UncertaintyPair.YP, np.linspace(0.1, 40.0, 400).tolist(), wide)
    excess = np.array([p.product - p.free_baseline for p in points])
    assert excess.min() > -ZB_DIP
    assert np.count_nonzero(excess > 0.0) >= 390

def test_small_gap_stays_below_free_particle_late(engine: PacketEngine):
    narrow = PacketConfig(d=8.0, alpha=0.04, beta=1.2, a=0.9, inv_lambda_c=0.14)
    for point in engine.uncertainty_series(UncertaintyPair.XP, np.linspace(30.0, 40.0, 50).tolist(), narrow):
        assert point.product <= point.free_baseline


def test_equal_weight_packet_is_balanced(engine: PacketEngine):
    sym = PacketConfig(d=8.0, alpha=0.0, beta=1.2, a=math.sqrt(0.5), inv_lambda_c=2.0)
    weights = engine.packet_split_weights(sym)
    assert weights.p_plus == pytest.approx(0.5, abs=1e-10)
    assert weights.p_minus == pytest.approx(0.5, abs=1e-10)

@pytest.mark.parametrize("cfg", random_configs(50, seed=3))
def test_weights_sum_to_one(cfg: PacketConfig, engine: PacketEngine):
    weights = engine.packet_split_weights(cfg)
    assert weights.p_plus + weights.p_minus == pytest.approx(1.0, abs=1e-10)

def test_heavy_gap_empties_negative_energies(engine: PacketEngine):
    pure = PacketConfig(d=8.0, alpha=0.04, beta=1.2, a=1.0, inv_lambda_c=1e3)
    assert engine.packet_split_weights(pure).delta_p == pytest.approx(0.5, abs=1e-5)

def test_weights_of_the_reference_packet(engine: PacketEngine, cfg: PacketConfig):
    delta = engine.packet_split_weights(cfg).delta_p
    assert 0.0 < delta < 0.5


def test_odd_j_integrals_vanish(engine: PacketEngine):
    on_axis = PacketConfig(d=8.0, alpha=0.0, beta=1.2, a=0.9, inv_lambda_c=2.0)
    off_axis = PacketConfig(d=8.0, alpha=1.2, beta=0.0, a=0.9, inv_lambda_c=2.0)
    assert engine.j_integral(1, 0, on_axis) == pytest.approx(0.0, abs=1e-14)
    assert engine.j_integral(0, 1, off_axis) == pytest.approx(0.0, abs=1e-14)

def test_j_integral_against_riemann(engine: PacketEngine, cfg: PacketConfig):
    lam2 = cfg.inv_lambda_c ** 2
    oracle = oracle_riemann(lambda k: k[0] ** 2 / (k[0] ** 2 + k[1] ** 2 + lam2), cfg, grid_n=512)
    assert engine.j_integral(2, 0, cfg) == pytest.approx(math.pi / cfg.d ** 2 * oracle, rel=1e-9)

def test_j_integral_order(engine: PacketEngine, cfg: PacketConfig):
    with pytest.raises(ValueError):
        engine.j_integral(2, 1, cfg)

def test_gamma_vanishes_for_small_gaps(engine: PacketEngine, cfg: PacketConfig):
    assert abs(engine.gamma_fn(1e-4, cfg)) < 1e-6
    assert engine.gamma_sweep([1e-4, 1.0], cfg)[1] == pytest.approx(engine.gamma_fn(1.0, cfg))


def test_unconverged_series_is_reported(engine: PacketEngine, cfg: PacketConfig):
    result = engine.expectation(Observable.X, 40.0, cfg, Method.SERIES)
    assert not result.converged
    reported = [e for e in engine.flush_events() if isinstance(e, SeriesNotConverged)]
    assert reported and reported[0].t == 40.0
    assert not reported[0].result.converged

def _fixed_moments(second: float, error: float):
    def fake(self, obs, t, cfg, method=Method.QUADRATURE):
        value = second if obs.is_second_moment else 1.0
        return ExpectationResult(observable=obs, t=t, value=value, spreading_part=0.0, zb_part=0.0,
                                 est_error=error if obs.is_second_moment else 0.0,
                                 method=Method.QUADRATURE)
    return fake

def test_rounding_level_negative_variance_is_clamped(engine: PacketEngine, cfg: PacketConfig, monkeypatch):
    monkeypatch.setattr(uncertainty_module, "expectation", _fixed_moments(1.0 - 1e-13, 1e-12))
    point = engine.uncertainty(UncertaintyPair.XP, 1.0, cfg)
    assert point.delta_pos == 0.0
    (clamped,) = [e for e in engine.flush_events() if isinstance(e, VarianceClamped)]
    assert clamped.pair is UncertaintyPair.XP
    assert clamped.variance == pytest.approx(-1e-13, rel=1e-3)

def test_large_negative_variance_is_an_error(engine: PacketEngine, cfg: PacketConfig, monkeypatch):
    monkeypatch.setattr(uncertainty_module, "expectation", _fixed_moments(1.0 - 1e-6, 1e-12))
    with pytest.raises(NegativeVariance):
        engine.uncertainty(UncertaintyPair.XP, 1.0, cfg)
