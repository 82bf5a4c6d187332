from __future__ import annotations

import json

import pytest

import rafpref as rp
from rafpref import cli


def write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


@pytest.fixture
def additive_spec(tmp_path):
    return write_json(
        tmp_path / "additive.json", {"kind": "additive", "weights": [0.5, 0.5]}
    )


@pytest.fixture
def anti_spec(tmp_path):
    return write_json(tmp_path / "anti.json", {"kind": "anti_monotone"})


@pytest.fixture
def lex_spec(tmp_path):
    return write_json(
        tmp_path / "lex.json",
        {"kind": "lexicographic", "priority": ["a", "b"], "alts": ["a", "b"]},
    )


@pytest.fixture
def rafs_file(tmp_path):
    return write_json(
        tmp_path / "rafs.json",
        {
            "alts": ["a", "b"],
            "items": [
                {"label": "all", "values": [1.0, 1.0]},
                {"label": "none", "values": [0.0, 0.0]},
                {"label": "mixed", "values": [0.9, 0.1]},
            ],
        },
    )


@pytest.fixture
def menu_file(tmp_path):
    return write_json(
        tmp_path / "menu.json",
        {
            "alts": ["a", "b"],
            "items": [
                {"label": "left", "values": [0.9, 0.1]},
                {"label": "mid", "values": [0.5, 0.5]},
                {"label": "right", "values": [0.2, 0.9]},
            ],
        },
    )


class TestCheckAxioms:
    def test_clean_spec_exits_zero(self, additive_spec, tmp_path, capsys):
        out = tmp_path / "report.json"
        rc = cli.main(
            [
                "check-axioms",
                "--spec",
                additive_spec,
                "--pairs",
                "50",
                "--triples",
                "50",
                "--depth",
                "10",
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        payload = json.loads(out.read_text())
        assert payload["all_passed"] is True
        assert payload["order_axioms"]["all_passed"] is True
        assert payload["weak_dominance"]["verdict"] == "passed_sampled"
        assert payload["weak_continuity"]["verdict"] == "not_falsified"
        assert "not a verification" in payload["weak_continuity"]["note"]
        assert payload["config"]["seed"] == 0

    def test_anti_monotone_exits_two_with_witness(self, anti_spec, tmp_path):
        out = tmp_path / "report.json"
        rc = cli.main(
            [
                "check-axioms",
                "--spec",
                anti_spec,
                "--pairs",
                "20",
                "--triples",
                "20",
                "--depth",
                "5",
                "--out",
                str(out),
            ]
        )
        assert rc == 2
        payload = json.loads(out.read_text())
        assert payload["all_passed"] is False
        assert payload["weak_dominance"]["verdict"] == "falsified"
        witness = payload["weak_dominance"]["witness"]
        assert witness["first"]["values"] == [1.0] * 5
        assert witness["second"]["values"] == [0.0] * 5

    def test_lexicographic_continuity_witness(self, lex_spec, tmp_path):
        out = tmp_path / "report.json"
        rc = cli.main(
            ["check-axioms", "--spec", lex_spec, "--pairs", "20", "--triples", "20", "--depth", "10", "--out", str(out)]
        )
        assert rc == 2
        payload = json.loads(out.read_text())
        assert payload["weak_continuity"]["verdict"] == "falsified"
        assert payload["weak_continuity"]["witness"]["depth"] == 10

    def test_missing_file_exits_one(self, tmp_path, capsys):
        rc = cli.main(["check-axioms", "--spec", str(tmp_path / "nope.json")])
        assert rc == 1
        assert "error:" in capsys.readouterr().err

    def test_malformed_json_exits_one(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        rc = cli.main(["check-axioms", "--spec", str(bad)])
        assert rc == 1
        assert "malformed JSON" in capsys.readouterr().err

    def test_unknown_kind_exits_one(self, tmp_path, capsys):
        spec = write_json(tmp_path / "odd.json", {"kind": "mystery"})
        rc = cli.main(["check-axioms", "--spec", spec])
        assert rc == 1
        assert "unknown preference kind" in capsys.readouterr().err

    def test_unknown_flag_exits_one(self, additive_spec, capsys):
        rc = cli.main(["check-axioms", "--spec", additive_spec, "--frobnicate"])
        assert rc == 1


class TestBuildUtility:
    def test_csv_table(self, additive_spec, rafs_file, tmp_path, capsys):
        out = tmp_path / "table.csv"
        rc = cli.main(
            ["build-utility", "--spec", additive_spec, "--rafs", rafs_file, "--out", str(out)]
        )
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "label,a,b,u,lo,hi,oracle_calls"
        assert lines[1] == "all,1.0,1.0,1.0,1.0,1.0,2"
        assert lines[2] == "none,0.0,0.0,0.0,0.0,0.0,2"
        mixed = lines[3].split(",")
        assert abs(float(mixed[3]) - 0.5) <= 1e-6
        assert "not been screened" in capsys.readouterr().err

    def test_json_rows(self, additive_spec, rafs_file, tmp_path):
        out = tmp_path / "table.json"
        rc = cli.main(
            [
                "build-utility",
                "--spec",
                additive_spec,
                "--rafs",
                rafs_file,
                "--format",
                "json",
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        payload = json.loads(out.read_text())
        assert [row["label"] for row in payload["rows"]] == ["all", "none", "mixed"]
        assert payload["rows"][0]["u"] == 1.0

    def test_diagonal_violation_exits_three(self, anti_spec, rafs_file, capsys):
        rc = cli.main(["build-utility", "--spec", anti_spec, "--rafs", rafs_file])
        assert rc == 3
        err = capsys.readouterr().err
        assert "diagonal" in err
        assert "membership(1.0)=False" in err

    def test_weight_count_mismatch_exits_one(self, tmp_path, rafs_file, capsys):
        spec = write_json(
            tmp_path / "wide.json", {"kind": "additive", "weights": [0.25, 0.25, 0.25, 0.25]}
        )
        rc = cli.main(["build-utility", "--spec", spec, "--rafs", rafs_file])
        assert rc == 1


class TestValidate:
    def test_additive_exits_zero(self, additive_spec, tmp_path):
        out = tmp_path / "validate.json"
        rc = cli.main(
            ["validate", "--spec", additive_spec, "--pairs", "50", "--out", str(out)]
        )
        assert rc == 0
        payload = json.loads(out.read_text())
        assert payload["report"]["pairs_tested"] == 50
        assert payload["report"]["violations"] == []

    def test_lexicographic_with_loose_tol_flags_indeterminates(self, lex_spec, tmp_path):
        out = tmp_path / "validate.json"
        rc = cli.main(
            [
                "validate",
                "--spec",
                lex_spec,
                "--pairs",
                "200",
                "--tol",
                "0.05",
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        payload = json.loads(out.read_text())
        assert payload["report"]["indeterminate"] > 0
        assert payload["report"]["indeterminate_strict"] > 0

    def test_anti_monotone_exits_three(self, anti_spec, capsys):
        rc = cli.main(["validate", "--spec", anti_spec, "--pairs", "5"])
        assert rc == 3


class TestChoose:
    def test_best_mean_wins(self, additive_spec, menu_file, tmp_path):
        out = tmp_path / "choice.json"
        rc = cli.main(
            ["choose", "--spec", additive_spec, "--menu", menu_file, "--out", str(out)]
        )
        assert rc == 0
        payload = json.loads(out.read_text())
        assert payload["result"]["tournament"] == ["right"]
        assert payload["result"]["utility_band"] == ["right"]
        assert payload["result"]["agreed"] is True

    def test_lexicographic_band_artifact(self, tmp_path):
        spec = write_json(
            tmp_path / "lex.json", {"kind": "lexicographic", "priority": ["a", "b"]}
        )
        menu = write_json(
            tmp_path / "tied.json",
            {
                "alts": ["a", "b"],
                "items": [
                    {"label": "good_tail", "values": [0.5, 0.9]},
                    {"label": "poor_tail", "values": [0.5, 0.1]},
                ],
            },
        )
        out = tmp_path / "choice.json"
        rc = cli.main(["choose", "--spec", spec, "--menu", menu, "--out", str(out)])
        assert rc == 0
        payload = json.loads(out.read_text())
        assert payload["result"]["tournament"] == ["good_tail"]
        assert payload["result"]["band_artifacts"] == ["poor_tail"]
        assert payload["result"]["agreed"] is True

    def test_axiom_violation_exits_two(self, additive_spec, menu_file, capsys, monkeypatch):
        def broken_oracle(spec, alts):
            return rp.PreferenceOracle("broken", alts, lambda a, b: False)

        monkeypatch.setattr(cli, "build_oracle", broken_oracle)
        rc = cli.main(["choose", "--spec", additive_spec, "--menu", menu_file])
        assert rc == 2
        assert "incomparable" in capsys.readouterr().err

    def test_csv_format_is_rejected(self, additive_spec, menu_file, capsys):
        rc = cli.main(
            ["choose", "--spec", additive_spec, "--menu", menu_file, "--format", "csv"]
        )
        assert rc == 1


class TestDemoSequences:
    def test_worked_example_rows(self, capsys):
        rc = cli.main(
            [
                "demo-sequences",
                "--alts",
                "a,b,c",
                "--upper",
                "1.0,0.6,0.3",
                "--lower",
                "1.0,0.6,0.2",
                "--terms",
                "1,10",
            ]
        )
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("n,upper_a")
        first = lines[1].split(",")
        assert first[:7] == ["1", "1.0", "0.6", "0.3", "0.5", "0.45", "0.2"]
        assert first[7] == "True"
        tenth = lines[2].split(",")
        assert tenth[0] == "10"
        assert float(tenth[9]) <= float(tenth[10])  # dist_lower <= bound

    def test_labels_default_to_generated_names(self, tmp_path):
        out = tmp_path / "seq.json"
        rc = cli.main(
            [
                "demo-sequences",
                "--upper",
                "1.0,0.6,0.3",
                "--lower",
                "0.5,0.6,0.2",
                "--terms",
                "1",
                "--format",
                "json",
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        payload = json.loads(out.read_text())
        assert payload["alts"] == ["a", "b", "c"]

    def test_json_payload_carries_the_partition(self, tmp_path):
        out = tmp_path / "seq.json"
        rc = cli.main(
            [
                "demo-sequences",
                "--alts",
                "a,b",
                "--upper",
                "1.0,0.5",
                "--lower",
                "1.0,0.5",
                "--terms",
                "2",
                "--format",
                "json",
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        payload = json.loads(out.read_text())
        assert payload["partition"]["at_one"] == ["a"]
        assert payload["partition"]["tied_interior"] == ["b"]
        assert payload["terms"][0]["strictly_dominates"] is True

    def test_hypothesis_failure_exits_one(self, capsys):
        rc = cli.main(
            [
                "demo-sequences",
                "--alts",
                "a,b",
                "--upper",
                "0.4,0.5",
                "--lower",
                "0.6,0.5",
            ]
        )
        assert rc == 1
        assert "pointwise dominance fails" in capsys.readouterr().err

    def test_bad_values_exit_one(self, capsys):
        rc = cli.main(
            ["demo-sequences", "--alts", "a,b", "--upper", "1.0,oops", "--lower", "0.5,0.5"]
        )
        assert rc == 1


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv_tail",
        [
            ["check-axioms", "--pairs", "30", "--triples", "30", "--depth", "5"],
            ["validate", "--pairs", "30"],
        ],
    )
    def test_reports_are_byte_identical_across_runs(
        self, additive_spec, tmp_path, argv_tail
    ):
        first = tmp_path / "first.out"
        second = tmp_path / "second.out"
        base = [argv_tail[0], "--spec", additive_spec, "--seed", "42", *argv_tail[1:]]
        assert cli.main([*base, "--out", str(first)]) == cli.main(
            [*base, "--out", str(second)]
        )
        assert first.read_bytes() == second.read_bytes()

    def test_utility_tables_are_byte_identical(self, additive_spec, rafs_file, tmp_path):
        first = tmp_path / "first.csv"
        second = tmp_path / "second.csv"
        base = ["build-utility", "--spec", additive_spec, "--rafs", rafs_file]
        cli.main([*base, "--out", str(first)])
        cli.main([*base, "--out", str(second)])
        assert first.read_bytes() == second.read_bytes()
