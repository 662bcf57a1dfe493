"""``key = value`` run configuration files.

Blank lines and text after ``#`` are ignored; keys are case sensitive.
"""
from pathlib import Path
from typing import Mapping, Optional
from graphene_zb.errors import InvalidConfig
from graphene_zb.engine import Method
from graphene_zb.types import PacketConfig, QuadSettings, RunConfig

FLOAT_KEYS = (
    "d_nm",
    "alpha_inv_nm",
    "beta_inv_nm",
    "a",
    "b",
    "inv_lambda_c_inv_nm",
    "v_f_nm_per_fs",
    "t0_fs",
    "t1_fs",
    "rel_tol",
)
INT_KEYS = ("steps",)
STR_KEYS = ("method",)
CONFIG_KEYS = FLOAT_KEYS + INT_KEYS + STR_KEYS

REQUIRED_KEYS = ("d_nm", "alpha_inv_nm", "beta_inv_nm", "a", "inv_lambda_c_inv_nm")


def _convert(key: str, raw: str, where: str):
    try:
        if key in FLOAT_KEYS:
            return float(raw)
        if key in INT_KEYS:
            return int(raw)
    except ValueError:
        raise InvalidConfig(f"{where}: {key} expects a number, got {raw!r}") from None
    return raw

def parse_config(text: str, source: str = "<config>") -> dict:
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{lineno}"
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not key or not raw:
            raise InvalidConfig(f"{where}: expected 'key = value', got {line!r}")
        if key not in CONFIG_KEYS:
            raise InvalidConfig(f"{where}: unknown key {key!r}")
        if key in values:
            raise InvalidConfig(f"{where}: duplicate key {key!r}")
        values[key] = _convert(key, raw, where)
    return values

def load_config(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidConfig(f"cannot read config {path}: {e.strerror}") from None
    return parse_config(text, source=path)


def packet_from_values(values: Mapping) -> PacketConfig:
    missing = [key for key in REQUIRED_KEYS if key not in values]
    if missing:
        raise InvalidConfig(f"missing config keys: {', '.join(missing)}")
    return PacketConfig(
        d=values["d_nm"],
        alpha=values["alpha_inv_nm"],
        beta=values["beta_inv_nm"],
        a=values["a"],
        b=values.get("b"),
        inv_lambda_c=values["inv_lambda_c_inv_nm"],
        v_f=values.get("v_f_nm_per_fs", 1.0))

def run_from_values(values: Mapping, output: Optional[str] = None) -> RunConfig:
    method = values.get("method", Method.QUADRATURE.value)
    try:
        Method(method)
    except ValueError:
        raise InvalidConfig(f"unknown method {method!r}") from None

    settings = QuadSettings()
    if "rel_tol" in values:
        settings = QuadSettings(rel_tol=values["rel_tol"])

    defaults = RunConfig.__dataclass_fields__
    return RunConfig(
        packet=packet_from_values(values),
        t0=values.get("t0_fs", defaults["t0"].default),
        t1=values.get("t1_fs", defaults["t1"].default),
        steps=values.get("steps", defaults["steps"].default),
        method=method,
        settings=settings,
        output=output)
