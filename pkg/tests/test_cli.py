import csv
import json

import pytest

from pathideals.cli import load_ideal, main
from pathideals.families import cycle_ideal
from pathideals.monomial import MonomialIdeal
from pathideals.verify import (
    FAIL,
    PASS,
    Settings,
    run_grid,
    verify_colon_identity,
    verify_cycle_minus_two,
    verify_drop_last_variable,
    verify_near_full_cycle,
    verify_phi_upper_bound,
    verify_prefix_colon,
    verify_long_cycle_bounds,
)


def test_gen_prints_canonical_json(capsys):
    assert main(["gen", "--family", "cycle", "--n", "5", "--m", "3"]) == 0
    I = MonomialIdeal.from_json(capsys.readouterr().out)
    assert I == cycle_ideal(5, 3)


def test_depth_and_sdepth_commands(capsys, tmp_path):
    main(["depth", "--ideal", "cycle:5:4:2"])
    assert json.loads(capsys.readouterr().out)["depth"] == 2
    path = tmp_path / "i.json"
    path.write_text(cycle_ideal(4, 3).to_json())
    main(["sdepth", "--ideal", str(path), "--certify"])
    out = json.loads(capsys.readouterr().out)
    assert out["sdepth"] == 2 and out["validated_sdepth"] == 2


def test_load_ideal_u_family():
    I, _ = load_ideal("u:6:2")
    assert len(I) == 9


@pytest.mark.parametrize(
    "fn,args",
    [
        (verify_colon_identity, (4, 2, 3)),
        (verify_colon_identity, (5, 4, 4)),
        (verify_near_full_cycle, (4, 1)),
        (verify_near_full_cycle, (4, 3)),
        (verify_cycle_minus_two, (5, 2)),
        (verify_drop_last_variable, (5, 3, 1)),
        (verify_phi_upper_bound, (4, 3, 1)),
        (verify_prefix_colon, (6, 3, 2)),
        (verify_long_cycle_bounds, (5, 3, 2)),
    ],
)
def test_statement_checks_pass(fn, args):
    assert fn(*args, settings=Settings()).verdict == PASS


def test_prefix_colon_last_case_is_refuted():
    r = verify_prefix_colon(9, 2, 2)
    assert r.verdict == FAIL
    assert sorted(r.computed["colon"]) == sorted(["x2", "x4", "x9", "x5*x6", "x6*x7", "x7*x8"])


def test_budget_overrun_is_unknown_not_fail():
    tiny = Settings(lattice_budget=3, search_budget=1)
    r = verify_near_full_cycle(5, 1, settings=tiny)
    assert r.verdict == "unknown"


def test_grid_is_deterministic_and_writes_tables(tmp_path, capsys):
    a = run_grid("lem2.7", n_max=5, t_max=2)
    b = run_grid("lem2.7", n_max=5, t_max=2)
    assert [(r.statement, r.params, r.computed, r.verdict) for r in a] == [
        (r.statement, r.params, r.computed, r.verdict) for r in b
    ]
    out = tmp_path / "report.jsonl"
    code = main(["verify", "--statement", "lem2.7", "--n-max", "5", "--t-max", "2", "--out", str(out)])
    assert code == 0
    assert len(out.read_text().splitlines()) == len(a)
    rows = list(csv.DictReader(open(tmp_path / "report.csv")))
    assert list(rows[0]) == ["statement", "n", "m", "t", "expected", "computed_depth",
                             "computed_sdepth", "verdict", "millis"]


def test_verify_exit_code_on_failure(tmp_path):
    code = main(["verify", "--statement", "lem3.2", "--n-max", "5", "--t-max", "2",
                 "--out", str(tmp_path / "r.jsonl")])
    assert code == 1


def test_scan_reports_no_counterexample(capsys):
    assert main(["scan", "--conjecture", "d-minus-1", "--grid", "n=4..5,t=1..2"]) == 0
    assert "COUNTEREXAMPLE" not in capsys.readouterr().err
