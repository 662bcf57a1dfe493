"""Parameters of the published time-dependence panels.

Panels (a)-(c) of each figure differ only in the gap. The y-direction panels
use inv_lambda_c = 0.08 for (c).
"""
from graphene_zb.errors import InvalidConfig

_X_PACKET = {"d_nm": 8.0, "alpha_inv_nm": 0.04, "beta_inv_nm": 1.2, "a": 0.9}
_Y_PACKET = {"d_nm": 8.0, "alpha_inv_nm": 1.2, "beta_inv_nm": 0.04, "a": 0.9}
_GRID = {"t0_fs": 0.0, "t1_fs": 40.0, "steps": 401, "v_f_nm_per_fs": 1.0}

PRESETS: dict[str, dict] = {
    "fig1a": {**_X_PACKET, **_GRID, "inv_lambda_c_inv_nm": 6.0},
    "fig1b": {**_X_PACKET, **_GRID, "inv_lambda_c_inv_nm": 2.0},
    "fig1c": {**_X_PACKET, **_GRID, "inv_lambda_c_inv_nm": 0.14},
    "fig2a": {**_Y_PACKET, **_GRID, "inv_lambda_c_inv_nm": 8.0},
    "fig2b": {**_Y_PACKET, **_GRID, "inv_lambda_c_inv_nm": 2.0},
    "fig2c": {**_Y_PACKET, **_GRID, "inv_lambda_c_inv_nm": 0.08},
    "fig3a": {**_X_PACKET, **_GRID, "inv_lambda_c_inv_nm": 0.09},
    "fig3b": {**_X_PACKET, **_GRID, "inv_lambda_c_inv_nm": 0.14},
    "fig3c": {**_X_PACKET, **_GRID, "inv_lambda_c_inv_nm": 0.5},
}

PresetList = sorted(PRESETS)

def preset(name: str) -> dict:
    try:
        return dict(PRESETS[name])
    except KeyError:
        raise InvalidConfig(f"unknown preset {name!r}; choose from {', '.join(PresetList)}") from None
