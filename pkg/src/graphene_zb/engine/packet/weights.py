import numpy as np
from graphene_zb.quadrature import integrate_packet_weighted
from graphene_zb.types import PacketConfig, SpectralWeights

def _imbalance(k, cfg: PacketConfig):
    kx, ky = (np.asarray(c, dtype=float) for c in k)
    lam = cfg.inv_lambda_c
    rs = np.sqrt(kx ** 2 + ky ** 2 + lam ** 2)
    numerator = cfg.spin_diff * lam + cfg.spin_mix * kx
    return 0.5 * np.where(rs == 0.0, 0.0, numerator / np.where(rs == 0.0, 1.0, rs))

def packet_split_weights(self, cfg: PacketConfig) -> SpectralWeights:
    """Positive- and negative-energy content of the packet."""
    result = integrate_packet_weighted(lambda k: _imbalance(k, cfg), cfg, self.settings)
    self._check(None, 0.0, result)
    return SpectralWeights.from_delta(result.value, est_error=result.est_error)
