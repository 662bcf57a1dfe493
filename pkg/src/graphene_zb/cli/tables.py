"""Critical-value tables over packet offsets 1.2/n and two spinor amplitudes.

Table I shifts alpha = 1.2/n at beta = 1.2 and lists the x-direction values;
Table II shifts beta = 1.2/n at alpha = 1.2 and lists the y-direction values.
n = inf means a zero offset.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, TextIO
from graphene_zb.engine import Engine
from graphene_zb.errors import CellFailure, GrapheneZBError
from graphene_zb.types import CriticalKind, PacketConfig
from .csvio import format_number, write_csv

logger = logging.getLogger(__name__)

TABLE_D = 8.0
TABLE_MOMENTUM = 1.2
TABLE_NS: tuple[Optional[int], ...] = (10, 20, 30, 40, 50, None)
TABLE_AS = (0.9, 0.7)
# gap of the nominal config; every J-integral overrides it
_NOMINAL_GAP = 1.0

TABLE_KINDS = {
    "I":  (CriticalKind.MU1, CriticalKind.MU2, CriticalKind.MU2_STAR),
    "II": (CriticalKind.NU1, CriticalKind.NU2, CriticalKind.NU2_STAR),
}

def n_label(n: Optional[int]) -> str:
    return "inf" if n is None else str(n)

def parse_n(raw: str) -> Optional[int]:
    if raw.strip().lower() in ("inf", "infinity"):
        return None
    n = int(raw)
    if n <= 0:
        raise ValueError(f"n must be positive or 'inf', got {raw!r}")
    return n

def table_config(which: str, a: float, n: Optional[int]) -> PacketConfig:
    shifted = 0.0 if n is None else TABLE_MOMENTUM / n
    if which == "I":
        alpha, beta = shifted, TABLE_MOMENTUM
    elif which == "II":
        alpha, beta = TABLE_MOMENTUM, shifted
    else:
        raise ValueError(f"unknown table {which!r}")
    return PacketConfig(d=TABLE_D, alpha=alpha, beta=beta, a=a, inv_lambda_c=_NOMINAL_GAP)

def table_for(kind: CriticalKind) -> str:
    return "II" if kind.uses_delta else "I"


@dataclass(frozen=True)
class TableRow:
    kind:   CriticalKind
    a:      float
    values: tuple[float, ...]


def cell_value(engine: Engine, kind: CriticalKind, a: float, n: Optional[int]) -> float:
    which = table_for(kind)
    try:
        return engine.critical_root(kind, table_config(which, a, n)).value
    except GrapheneZBError as e:
        raise CellFailure(str(e), cell=f"table {which} {kind.value} a={a} n={n_label(n)}") from e

def compute_table(engine: Engine, which: str) -> list[TableRow]:
    rows = []
    for kind in TABLE_KINDS[which]:
        for a in TABLE_AS:
            values = tuple(cell_value(engine, kind, a, n) for n in TABLE_NS)
            logger.info("table %s %s a=%g done", which, kind.value, a)
            rows.append(TableRow(kind=kind, a=a, values=values))
    return rows


def table_header() -> list[str]:
    return ["kind", "a"] + [f"n={n_label(n)}" for n in TABLE_NS]

def write_table_csv(stream: TextIO, rows: list[TableRow]) -> None:
    write_csv(stream, table_header(), ([row.kind.value, row.a, *row.values] for row in rows))

def _short(value: float) -> str:
    if math.isinf(value):
        return "inf"
    return format(value, ".3g")

def render_table(rows: list[TableRow]) -> str:
    fstr = "{:10} {:>5}" + " {:>8}" * len(TABLE_NS)
    lines = [fstr.format(*table_header())]
    for row in rows:
        lines.append(fstr.format(row.kind.value, format_number(row.a), *(_short(v) for v in row.values)))
    return "\n".join(lines) + "\n"
