from cli import main


def test_print_units(capsys):
    assert main(["--print-units"]) == 0
    out = capsys.readouterr().out
    assert "magnetic_convention=heaviside-lorentz" in out
    assert "constants=CODATA 2018" in out


def test_explain_signs(capsys):
    assert main(["--explain-signs"]) == 0
    out = capsys.readouterr().out
    assert "orientation=-1" in out
    assert "spin_label_weight=" in out


def test_sweep_to_files(tmp_path):
    csv_path = tmp_path / "sweep.csv"
    svg_path = tmp_path / "sweep.svg"
    code = main([
        "--preset", "setB",
        "--points", "5",
        "--out", str(csv_path),
        "--svg", str(svg_path),
        "--plot", "NegativityVsMass",
    ])
    assert code == 0
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("model,mass_kg,")
    assert len(lines) == 11
    svg = svg_path.read_text(encoding="utf-8")
    assert 'id="curve-I"' in svg and 'id="curve-II"' in svg


def test_sweep_to_stdout(capsys):
    assert main(["--points", "3", "--model", "I"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert all(line.startswith("I,") for line in lines[1:])


def test_same_run_same_bytes(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["--points", "9", "--out", str(first)]) == 0
    assert main(["--points", "9", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_bad_dx_exits_with_two(capsys):
    assert main(["--dx", "1"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "--dx (flag)" in err


def test_missing_config_file(tmp_path, capsys):
    assert main(["--config", str(tmp_path / "none.ini")]) == 2
    assert "error:" in capsys.readouterr().err


def test_report(capsys):
    assert main(["--points", "3", "--report"]) == 0
    err = capsys.readouterr().err
    assert "crossover_kg=" in err
    assert "threshold_model=I" in err
    assert "threshold_model=II" in err


def test_phase_scan(capsys, tmp_path):
    svg_path = tmp_path / "scan.svg"
    assert main(["--scan", "11", "--svg", str(svg_path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "phase_sum,log_negativity,reduced_coherence"
    assert len(lines) == 12
    assert 'id="curve-scan"' in svg_path.read_text(encoding="utf-8")
