import json

import pytest

import subshift_workbench as sw


def test_builtin_complexities():
    assert sw.Subshift.builtin("salo_schraudner").complexity(3) == 16
    assert sw.complexity_table(sw.Subshift.builtin("hallway"), 4) == [3 * n * n + 4 * n + 1 for n in range(1, 5)]
    assert set(sw.example_names()) >= {"full2", "hallway"}


def test_spec_round_trip_and_forbid():
    spec = '{"kind": "sft", "alphabet": ["0", "1"], "forbidden": ["11"]}'
    g = sw.Subshift.from_json(spec)
    assert g.language(2) == ["00", "01", "10"]
    assert not g.contains("0110")
    assert sw.Subshift.from_json(g.to_json()).complexity(6) == g.complexity(6)
    assert g.forbid(["00"]).complexity(5) == 2


def test_errors_are_raised():
    with pytest.raises(sw.SubshiftError, match="unknown key"):
        sw.Subshift.from_json('{"kind": "sft", "alphabet": ["0"], "extra": 1}')
    with pytest.raises(sw.SubshiftError, match="unknown-example"):
        sw.Subshift.builtin("nope")


def test_cli_round_trip(tmp_path):
    sw.export_example("hallway", str(tmp_path))
    code, report = sw.run("certify-free", "--spec", str(tmp_path / "spec.json"),
                          "--gen-a", str(tmp_path / "codes" / "phi_a.json"),
                          "--gen-b", str(tmp_path / "codes" / "phi_b.json"), "--depth", "3")
    assert code == 0
    assert report["results"]["free_to_depth"] is True
    assert list(report) == ["command", "inputs", "seed", "results", "violations", "elapsed_ms"]
    code, out, err = sw.run_cli(["verify-lemmas", "--suite", "removal", "--trials", "0"])
    assert code == 2 and "trials" in err
