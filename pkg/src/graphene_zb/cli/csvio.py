import csv
import io
import math
from typing import Iterable, Sequence, TextIO

def format_number(value) -> str:
    """12 significant digits, '.' separator, 'inf'/'-inf'/'nan' spelled out."""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return "nan"
    return format(value, ".12g")

def write_csv(stream: TextIO, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(v) for v in row])

def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    write_csv(buffer, header, rows)
    return buffer.getvalue()


def _parse(cell: str):
    try:
        return float(cell)
    except ValueError:
        return cell

def read_csv(path: str) -> tuple[list[str], list[list]]:
    """Header and rows of a CSV written by :func:`write_csv`; numeric cells become floats."""
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        header = next(reader)
        rows = [[_parse(cell) for cell in row] for row in reader]
    return header, rows
