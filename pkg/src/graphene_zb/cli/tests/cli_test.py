import math
import pytest
from graphene_zb.cli.config import load_config, parse_config, run_from_values
from graphene_zb.cli.csvio import format_number, read_csv, render_csv, write_csv
from graphene_zb.cli.main import EXIT_CONFIG, EXIT_NUMERICAL, EXIT_OK, main
from graphene_zb.cli.presets import PRESETS, preset
from graphene_zb.cli.tables import TableRow, compute_table, parse_n, render_table, table_config
from graphene_zb.engine import PacketEngine
from graphene_zb.errors import InvalidConfig, NonConvergence
from graphene_zb.types import CriticalKind

FIG1B = """\
# reference packet
d_nm = 8
alpha_inv_nm = 0.04
beta_inv_nm = 1.2
a = 0.9            # b follows from a
inv_lambda_c_inv_nm = 2
v_f_nm_per_fs = 1
t0_fs = 0
t1_fs = 2
steps = 5
"""

SYMMETRIC = """\
d_nm = 8
alpha_inv_nm = 0
beta_inv_nm = 1.2
a = 0.7071067811865476
b = 0.7071067811865476
inv_lambda_c_inv_nm = 2
"""


@pytest.fixture
def fig1b(tmp_path):
    path = tmp_path / "fig1b.cfg"
    path.write_text(FIG1B, encoding="utf-8")
    return str(path)


def test_parse_config():
    values = parse_config(FIG1B)
    assert values["d_nm"] == 8.0
    assert values["a"] == 0.9
    assert values["steps"] == 5
    run = run_from_values(values)
    assert run.packet.b == pytest.approx(math.sqrt(1 - 0.81))
    assert run.times() == pytest.approx([0.0, 0.5, 1.0, 1.5, 2.0])

@pytest.mark.parametrize("text", [
    "d_nm 8",
    "colour = blue",
    "d_nm = eight",
    "d_nm = 8\nd_nm = 9",
])
def test_malformed_config(text: str):
    with pytest.raises(InvalidConfig):
        parse_config(text)

def test_missing_keys():
    with pytest.raises(InvalidConfig):
        run_from_values(parse_config("d_nm = 8"))

def test_unreadable_config(tmp_path):
    with pytest.raises(InvalidConfig):
        load_config(str(tmp_path / "absent.cfg"))

@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_are_valid(name: str):
    run = run_from_values(preset(name))
    assert run.packet.d == 8.0
    assert run.times()[0] == 0.0

def test_unknown_preset():
    with pytest.raises(InvalidConfig):
        preset("fig9z")


def test_number_format():
    assert format_number(0.1 + 0.2) == "0.3"
    assert format_number(32.0) == "32"
    assert format_number(math.inf) == "inf"
    assert format_number(math.nan) == "nan"
    assert format_number(1.0 / 3.0) == "0.333333333333"

def test_csv_round_trip(tmp_path):
    path = tmp_path / "rows.csv"
    header = ["t_fs", "value", "method"]
    rows = [[0.0, 1.0 / 3.0, "quadrature"], [0.5, -2.5e-17, "series"], [1.0, math.inf, "both"]]
    with open(path, "w", newline="", encoding="utf-8") as f:
        write_csv(f, header, rows)
    read_header, read_rows = read_csv(str(path))
    assert read_header == header
    assert render_csv(read_header, read_rows) == path.read_text(encoding="utf-8")


def test_observe_position(fig1b: str, tmp_path):
    out = tmp_path / "x.csv"
    assert main(["observe", fig1b, "--observable", "x", "-o", str(out)]) == EXIT_OK
    header, rows = read_csv(str(out))
    assert header == ["t_fs", "value", "spreading_part", "zb_part", "est_error", "method"]
    assert len(rows) == 5
    assert rows[0][1] == pytest.approx(0.0, abs=1e-12)
    assert rows[0][5] == "quadrature"

def test_observe_second_moment(fig1b: str, tmp_path):
    out = tmp_path / "x2.csv"
    assert main(["observe", fig1b, "--observable", "X2", "--steps", "2", "-o", str(out)]) == EXIT_OK
    _, rows = read_csv(str(out))
    assert rows[0][1] == pytest.approx(32.0, rel=1e-9)
    assert len(rows) == 2

def test_preset_with_overrides(tmp_path):
    out = tmp_path / "y.csv"
    code = main(["observe", "--preset", "fig2b", "--observable", "Y", "--t1", "1", "--steps", "3",
                 "--method", "both", "-o", str(out)])
    assert code == EXIT_OK
    _, rows = read_csv(str(out))
    assert [r[0] for r in rows] == [0.0, 0.5, 1.0]
    assert rows[-1][5] == "both"

def test_uncertainty_starts_at_one_half(fig1b: str, tmp_path):
    out = tmp_path / "xp.csv"
    assert main(["uncertainty", fig1b, "--pair", "xp", "-o", str(out)]) == EXIT_OK
    header, rows = read_csv(str(out))
    assert header == ["t_fs", "product", "delta_pos", "delta_conj", "free_baseline", "est_error"]
    assert rows[0][1] == pytest.approx(0.5, abs=1e-9)

def test_weights_of_symmetric_packet(tmp_path):
    cfg, out = tmp_path / "sym.cfg", tmp_path / "w.csv"
    cfg.write_text(SYMMETRIC, encoding="utf-8")
    assert main(["weights", str(cfg), "-o", str(out)]) == EXIT_OK
    header, rows = read_csv(str(out))
    assert header == ["p_plus", "p_minus", "delta_p"]
    assert rows[0] == pytest.approx([0.5, 0.5, 0.0], abs=1e-10)

def test_closed_form_critical_value(tmp_path):
    out = tmp_path / "mu1.csv"
    assert main(["critical", "--which", "mu1", "--a", "0.9", "-o", str(out)]) == EXIT_OK
    _, rows = read_csv(str(out))
    assert rows[0][0] == "mu1"
    assert rows[0][3] == pytest.approx(0.143, abs=5e-4)

def test_sweep(tmp_path):
    out = tmp_path / "gamma.csv"
    args = ["sweep", "--which", "gamma", "--x0", "0.5", "--x1", "1.5", "--steps", "3", "-o", str(out)]
    assert main(args) == EXIT_OK
    header, rows = read_csv(str(out))
    assert header == ["x_inv_nm", "value"]
    assert [r[0] for r in rows] == [0.5, 1.0, 1.5]
    assert all(math.isfinite(r[1]) for r in rows)


def test_bad_config_exits_with_two(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("d_nm = -1\nalpha_inv_nm = 0\nbeta_inv_nm = 0\na = 1\ninv_lambda_c_inv_nm = 1\n")
    assert main(["observe", str(cfg)]) == EXIT_CONFIG

def test_no_config_exits_with_two():
    assert main(["observe"]) == EXIT_CONFIG

def test_numerical_failure_exits_with_three(fig1b: str, monkeypatch):
    def fail(self, *args, **kwargs):
        raise NonConvergence("budget exhausted")
    monkeypatch.setattr(PacketEngine, "expectation_series", fail)
    assert main(["observe", fig1b, "--strict"]) == EXIT_NUMERICAL

def test_output_is_deterministic_across_thread_counts(fig1b: str, tmp_path, monkeypatch):
    outputs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("ZB_THREADS", threads)
        out = tmp_path / f"run{threads}.csv"
        assert main(["uncertainty", fig1b, "--pair", "yv", "-o", str(out)]) == EXIT_OK
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_table_configs():
    first = table_config("I", 0.9, 10)
    assert (first.alpha, first.beta) == pytest.approx((0.12, 1.2))
    centred = table_config("II", 0.7, parse_n("inf"))
    assert (centred.alpha, centred.beta) == (1.2, 0.0)
    with pytest.raises(ValueError):
        parse_n("0")

def test_render_table():
    rows = [TableRow(kind=CriticalKind.MU2, a=0.9, values=(1.03, 2.24, 3.47, 4.69, 5.90, math.inf))]
    text = render_table(rows)
    assert text.splitlines()[0].split() == ["kind", "a", "n=10", "n=20", "n=30", "n=40", "n=50", "n=inf"]
    assert text.splitlines()[1].split() == ["mu2", "0.9", "1.03", "2.24", "3.47", "4.69", "5.9", "inf"]


@pytest.mark.parametrize("which, kind", [
    ("mu2star", "mu2_star"),
    ("mu2_star", "mu2_star"),
    ("nu2star", "nu2_star"),
    ("nu2_star", "nu2_star"),
])
def test_starred_kinds_accept_both_spellings(which: str, kind: str, tmp_path):
    out = tmp_path / "star.csv"
    assert main(["critical", "--which", which, "--n", "inf", "-o", str(out)]) == EXIT_OK
    _, rows = read_csv(str(out))
    assert rows[0][0] == kind
    assert rows[0][3] == pytest.approx(0.332, abs=3e-3)

@pytest.mark.parametrize("raw", ["-2", "many"])
def test_bad_thread_count_is_a_config_error(raw: str, fig1b: str, monkeypatch):
    monkeypatch.setenv("ZB_THREADS", raw)
    assert main(["weights", fig1b]) == EXIT_CONFIG

def test_internal_value_errors_are_not_config_errors(fig1b: str, monkeypatch):
    def broken(self, cfg):
        raise ValueError("internal")
    monkeypatch.setattr(PacketEngine, "packet_split_weights", broken)
    with pytest.raises(ValueError, match="internal"):
        main(["weights", fig1b])


PUBLISHED = {
    "I": {
        ("mu1", 0.9): (0.143, 0.143, 0.143, 0.143, 0.143, 0.143),
        ("mu1", 0.7): (4.42, 4.42, 4.42, 4.42, 4.42, 4.42),
        ("mu2", 0.9): (1.03, 2.24, 3.47, 4.69, 5.90, math.inf),
        ("mu2", 0.7): (0.90, 1.79, 2.68, 3.58, 4.47, math.inf),
        ("mu2_star", 0.9): (0.257, 0.303, 0.318, 0.324, 0.327, 0.332),
        ("mu2_star", 0.7): (0.256, 0.302, 0.317, 0.323, 0.326, 0.332),
    },
    "II": {
        ("nu1", 0.9): (0.088, 0.088, 0.088, 0.088, 0.088, 0.088),
        ("nu1", 0.7): (0.088, 0.088, 0.088, 0.088, 0.088, 0.088),
        ("nu2", 0.9): (2.23, 3.36, 4.48, 5.60, 6.73, math.inf),
        ("nu2", 0.7): (1.22, 2.05, 2.88, 3.73, 4.59, math.inf),
        ("nu2_star", 0.9): (0.309, 0.326, 0.329, 0.330, 0.331, 0.332),
        ("nu2_star", 0.7): (0.319, 0.328, 0.330, 0.331, 0.331, 0.332),
    },
}

@pytest.mark.parametrize("which", ["I", "II"])
def test_tables_reproduce_published_values(which: str):
    with PacketEngine() as engine:
        rows = compute_table(engine, which)
    assert {(row.kind.value, row.a) for row in rows} == set(PUBLISHED[which])
    for row in rows:
        for value, expected in zip(row.values, PUBLISHED[which][(row.kind.value, row.a)]):
            if math.isinf(expected):
                assert math.isinf(value)
            else:
                assert value == pytest.approx(expected, rel=0.02)
