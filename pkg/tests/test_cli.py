import csv
import io
import json
import math
from fractions import Fraction

import pytest

from hypspec.cli import SUITE_NAMES, CheckRecord, Report, RunConfig, cmd_classify, cmd_export, cmd_verify, main
from hypspec.cli.suites import validate_suites
from hypspec.utils.constants import DEFAULT_TOLERANCES
from hypspec.utils.errors import UsageError

LAMBDAS = ("1", "2", "3", "5/2")


@pytest.fixture
def config():
    return RunConfig(n_range=(5, 5), lambdas=LAMBDAS, j_max=2, grid=(-5.0, 5.0, 11))


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n_range": (2, 5)},
        {"n_range": (6, 5)},
        {"n_range": (3, 13)},
        {"j_max": 1},
        {"tolerances": {"ode_tol": -1e-3}},
        {"tolerances": {"ode_tol": math.nan}},
        {"tolerances": {"bogus_tol": 1e-3}},
        {"grid": (1.0, -1.0, 5)},
        {"grid": (-1.0, 1.0, 1)},
        {"output_format": "xml"},
        {"workers": 0},
        {"lambdas": ("-1",)},
        {"lambdas": ("abc",)},
        {"offsets": ("0.5.1",)},
    ],
)
def test_run_config_rejects(kwargs):
    with pytest.raises(UsageError):
        RunConfig(**kwargs)


def test_run_config_tolerances_merge():
    config = RunConfig(tolerances={"series_tol": 0.0})
    assert config.tol("series_tol") == 0.0
    assert config.tol("ode_tol") == DEFAULT_TOLERANCES["ode_tol"]


def test_cells_from_lambdas(config):
    assert config.cells() == [(5, Fraction(1)), (5, Fraction(2)), (5, Fraction(3)), (5, Fraction(5, 2))]
    assert config.cells(integer_offsets=True) == [(5, Fraction(1)), (5, Fraction(2)), (5, Fraction(3))]


def test_default_sweep():
    config = RunConfig(n_range=(4, 5))
    cells = config.cells()
    assert len(cells) == 22
    assert all(lam > 0 for _, lam in cells)
    assert (5, Fraction(1)) in cells and (5, Fraction(0)) not in cells
    assert (4, Fraction(1, 2)) in cells


def test_offsets_sweep():
    config = RunConfig(n_range=(5, 6), offsets=("-1", "1/2"))
    assert config.cells() == [
        (5, Fraction(1)), (5, Fraction(5, 2)), (6, Fraction(3, 2)), (6, Fraction(3)),
    ]


def test_empty_sweep():
    config = RunConfig(n_range=(5, 5), lambdas=())
    assert config.cells() == []
    report = cmd_classify(config)
    assert report.rows == []
    assert report.exit_status == 0


def test_classify_rows(config):
    report = cmd_classify(config)
    rows = {row["lambda"]: row for row in report.rows}
    assert list(rows) == list(LAMBDAS)

    assert rows["1"]["discrete_parity"] == "even"
    assert rows["1"]["theorem2"] is True
    assert rows["1"]["multiplicity_full"] == 2
    assert rows["1"]["offset"] == "-1"
    assert rows["1"]["rho"] == "2"

    assert rows["2"]["discrete_parity"] == "odd"
    assert rows["2"]["d_lambda_head"] == [1, 2, 3, 4]
    assert rows["2"]["multiplicity_full"] is None

    assert rows["3"]["even_discrete"] is True
    assert rows["3"]["even_in_L2"] is False

    assert rows["5/2"]["discrete_parity"] == "none"
    assert rows["5/2"]["d_lambda_head"] == []
    assert rows["5/2"]["multiplicity_full"] == 0


def test_classify_even_dimension():
    row = cmd_classify(RunConfig(n_range=(4, 4), lambdas=("5/2",))).rows[0]
    assert row["discrete_parity"] == "even"
    assert row["d_lambda_head"] == [2, 3, 4, 5]


def test_classify_parallel_matches_sequential(config):
    parallel = RunConfig(n_range=(5, 5), lambdas=LAMBDAS, j_max=2, workers=2)
    assert cmd_classify(parallel).rows == cmd_classify(config).rows


def test_classify_csv(config):
    text = cmd_classify(config).to_csv()
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0][:3] == ["n", "rho", "lambda"]
    assert len(rows) == 1 + len(LAMBDAS)


def test_report_json_round_trip(config):
    report = cmd_classify(config)
    text = report.to_json()
    assert text == cmd_classify(config).to_json()
    data = json.loads(text)
    assert data["version"] == "1"
    assert data["command"] == "classify"
    assert Report.from_json(text) == report


def test_report_rejects_unknown_version():
    with pytest.raises(ValueError):
        Report.from_dict({"version": "0", "command": "classify", "config": {}})


def test_check_records():
    assert CheckRecord.numerical("s", "c", {}, 1e-9, 1e-8).status == "pass"
    assert CheckRecord.numerical("s", "c", {}, 1e-9, 0.0).status == "fail"
    assert CheckRecord.numerical("s", "c", {}, 0.0, 0.0).status == "fail"
    assert CheckRecord.numerical("s", "c", {}, math.nan, 1.0).status == "fail"
    assert CheckRecord.exact("s", "c", {"lambda": Fraction(5, 2)}, True).parameters == {"lambda": "5/2"}
    assert CheckRecord.exact("s", "c", {}, True).tolerance is None
    assert CheckRecord.skipped("s", "c", {}, "why").status == "skipped"

    record = CheckRecord.error("s", {"n": 5}, "boom")
    assert CheckRecord.from_dict(json.loads(json.dumps(record.to_dict()))) == record


def test_validate_suites():
    assert validate_suites(["norms", "ode", "norms"]) == ["ode", "norms"]
    with pytest.raises(UsageError):
        validate_suites(["bogus"])


@pytest.mark.parametrize(
    ("suites", "lambdas"),
    [
        (["ode"], ("1",)),
        (["ladder", "specfun"], ("1",)),
        (["ladder", "parity", "asymptotics"], ("1", "3")),
        (["norms", "equivalence"], ("1", "2", "3")),
    ],
)
def test_verify_passes(suites, lambdas):
    config = RunConfig(n_range=(5, 5), lambdas=lambdas, j_max=2, grid=(-4.0, 4.0, 9))
    report = cmd_verify(config, suites)
    assert report.checks
    assert report.summary["failed"] == 0, [c for c in report.checks if c.status == "fail"]
    assert report.exit_status == 0
    assert report.config["suites"] == [name for name in SUITE_NAMES if name in suites]


def test_ode_suite_on_default_grid():
    # λ = ρ and λ = ρ + 1 in odd and even dimension
    config = RunConfig(n_range=(3, 5), offsets=("0", "1"))
    report = cmd_verify(config, ["ode"])
    assert {check.name for check in report.checks} >= {
        "residual_phi_plus",
        "residual_phi_reflected",
        "residual_phi_neg_lambda",
        "residual_second_kind_log",
    }
    assert report.summary["failed"] == 0, [c for c in report.checks if c.status == "fail"]
    assert report.exit_status == 0


def test_equivalence_suite_at_seven_dimensions():
    config = RunConfig(n_range=(7, 7), lambdas=("1", "2"), j_max=8, grid=(-4.0, 4.0, 9))
    report = cmd_verify(config, ["equivalence"])
    assert len(report.checks) == 8
    assert report.summary["failed"] == 0, [c for c in report.checks if c.status == "fail"]


def test_verify_report_round_trip():
    config = RunConfig(n_range=(5, 5), lambdas=("1",), j_max=2, grid=(-5.0, 5.0, 11))
    report = cmd_verify(config, ["parity"])
    assert Report.from_json(report.to_json()) == report
    assert "passed:" in report.to_text()


def test_zero_tolerance_fails_numerical_checks():
    tolerances = {name: 0.0 for name in DEFAULT_TOLERANCES}
    config = RunConfig(n_range=(5, 5), lambdas=("1",), j_max=2, grid=(-5.0, 5.0, 11), tolerances=tolerances)
    report = cmd_verify(config, ["parity"])
    numerical = [check for check in report.checks if check.tolerance is not None]
    assert numerical and all(check.status == "fail" for check in numerical)
    assert report.exit_status == 1


def test_main_classify_json(capsys):
    code = main(["classify", "--n", "5", "--lambda", "1", "5/2", "--format", "json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert [row["lambda"] for row in data["rows"]] == ["1", "5/2"]


def test_main_empty_lambda_list(capsys):
    code = main(["classify", "--n", "5", "--lambda", "--format", "csv"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1


def test_main_verify_failure_exit_code(capsys):
    code = main([
        "verify", "--suite", "parity", "--n", "5", "--lambda", "1", "--j-max", "2",
        "--grid", "-5", "5", "11", "--tol-parity", "0",
    ])
    assert code == 1
    assert "failed: " in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "bogus"],
        ["classify", "--j-max", "1"],
        ["classify", "--n", "5", "--n-range", "3", "6"],
        ["classify", "--n", "5", "--tol-ode", "-1"],
        ["classify", "--n", "5", "--grid", "0", "1", "2.5"],
        ["export", "--n", "5", "--lambda", "1"],
        [],
    ],
)
def test_main_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_main_version(capsys):
    assert main(["--version"]) == 0
    assert "hypspec" in capsys.readouterr().out


def test_export_table(tmp_path):
    config = RunConfig(n_range=(5, 5), lambdas=LAMBDAS, output_format="csv")
    path = cmd_export(config, "table", str(tmp_path / "out" / "table.csv"))
    with open(path, encoding="utf-8") as handle:
        assert len(handle.read().strip().splitlines()) == 1 + len(LAMBDAS)


def test_export_into_directory(tmp_path):
    config = RunConfig(n_range=(5, 5), lambdas=("1",), output_format="json")
    path = cmd_export(config, "table", str(tmp_path))
    assert path == str(tmp_path / "hypspec_table.json")
    with open(path, encoding="utf-8") as handle:
        assert Report.from_json(handle.read()).rows[0]["lambda"] == "1"


def test_export_unknown_kind(tmp_path):
    with pytest.raises(UsageError):
        cmd_export(RunConfig(n_range=(5, 5), lambdas=("1",)), "bogus", str(tmp_path))


def test_main_export_io_error(tmp_path, capsys):
    blocker = tmp_path / "file.txt"
    blocker.write_text("not a directory")
    code = main(["export", "--n", "5", "--lambda", "1", "--out", str(blocker / "table.json")])
    assert code == 3
    assert "[io]" in capsys.readouterr().err


def test_main_export_writes_file(tmp_path, capsys):
    out = tmp_path / "table.json"
    code = main(["export", "--n", "5", "--lambda", "1", "2", "--format", "json", "--out", str(out)])
    assert code == 0
    assert str(out) in capsys.readouterr().out
    assert len(json.loads(out.read_text())["rows"]) == 2
