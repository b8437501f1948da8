"""Tests for the command-line surface."""

import json
import pathlib
import subprocess
import sys

import pytest

from kgonal.cli import family_counts, main, packaged_golden_table, read_bfile, render_table

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN = pathlib.Path(__file__).parents[1] / "src" / "kgonal" / "data" / "unlabelled_golden.csv"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_order_prefix(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--k", "3", "--family", "unlabelled", "--order", "6"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["k"] == 3
        assert doc["family"] == "unlabelled"
        assert [entry["value"] for entry in doc["counts"]] == [
            "1", "1", "1", "2", "5", "12", "39",
        ]
        assert [entry["n"] for entry in doc["counts"]] == list(range(7))

    def test_single_index(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--k", "5", "--family", "labelled-rooted", "--n", "2"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["counts"] == [{"n": 2, "value": "9"}]

    def test_b_family(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--k", "4", "--family", "b", "--order", "2"
        )
        assert code == 0
        doc = json.loads(out)
        assert [entry["value"] for entry in doc["counts"]] == ["1", "1", "4"]

    def test_requires_exactly_one_size(self, capsys):
        code, _, err = run_cli(capsys, "count", "--k", "3", "--family", "b")
        assert code == 1
        assert "exactly one" in err
        code, _, err = run_cli(
            capsys, "count", "--k", "3", "--family", "b", "--n", "2", "--order", "4"
        )
        assert code == 1

    def test_rejects_small_k(self, capsys):
        code, _, err = run_cli(
            capsys, "count", "--k", "1", "--family", "b", "--order", "3"
        )
        assert code == 1
        assert "k" in err

    def test_values_round_trip(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--k", "4", "--family", "labelled-rooted", "--order", "25"
        )
        doc = json.loads(out)
        for entry, expected in zip(doc["counts"], family_counts(4, "labelled-rooted", 25)):
            assert int(entry["value"]) == expected


class TestFamilies:
    def test_edge_rooted_both_parities(self):
        assert family_counts(3, "edge-rooted-unlabelled", 3) == [1, 1, 2, 6]
        assert family_counts(4, "edge-rooted-unlabelled", 3) == [1, 1, 3, 12]

    def test_labelled_families(self):
        assert family_counts(3, "labelled-rooted", 2) == [1, 1, 5]
        assert family_counts(3, "labelled-oriented", 3) == [1, 1, 1, 7]
        assert family_counts(4, "labelled", 3) == [1, 1, 1, 7]

    def test_unlabelled_oriented(self):
        assert family_counts(3, "unlabelled-oriented", 4) == [1, 1, 1, 2, 7]

    def test_unlabelled_parity_dispatch(self):
        assert family_counts(3, "unlabelled", 5) == [1, 1, 1, 2, 5, 12]
        assert family_counts(4, "unlabelled", 5) == [1, 1, 1, 3, 8, 32]


class TestSeries:
    def test_matches_count_prefix(self, capsys):
        code, out_series, _ = run_cli(
            capsys, "series", "--k", "4", "--family", "unlabelled", "--order", "8"
        )
        assert code == 0
        code, out_count, _ = run_cli(
            capsys, "count", "--k", "4", "--family", "unlabelled", "--order", "8"
        )
        assert out_series == out_count


class TestTable:
    def test_golden_byte_match(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--k-min", "2", "--k-max", "12", "--order", "20"
        )
        assert code == 0
        assert out == GOLDEN.read_text()
        assert out == packaged_golden_table()

    def test_order_zero(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--order", "0")
        assert code == 0
        assert out == "n,k2,k3,k4,k5,k6,k7,k8,k9,k10,k11,k12\n0,1,1,1,1,1,1,1,1,1,1,1\n"

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--k-min", "3", "--k-max", "4", "--order", "3",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["columns"] == ["k3", "k4"]
        assert doc["rows"][3] == {"n": 3, "values": ["2", "3"]}

    def test_rejects_bad_range(self):
        with pytest.raises(Exception):
            render_table(5, 3, 4)

    def test_single_cell_k12(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--k", "12", "--family", "unlabelled", "--n", "6"
        )
        assert json.loads(out)["counts"] == [{"n": 6, "value": "15189"}]


class TestConstants:
    def test_report_p2(self, capsys):
        code, out, _ = run_cli(
            capsys, "constants", "--p", "2", "--series-order", "200", "--no-empirical"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["p"] == 2
        assert doc["xi"] == pytest.approx(0.177099522303, abs=1e-9)
        assert doc["beta"] == pytest.approx(5.646542616233, abs=1e-9)
        assert doc["alpha"] == pytest.approx(0.349261381742, abs=1e-6)
        assert doc["alpha_bar_empirical"] is None
        for key in ("alpha_bar", "alpha_bar_product_form", "alpha_bar_ratio_form"):
            assert key in doc

    def test_empirical_candidate(self, capsys):
        code, out, _ = run_cli(
            capsys, "constants", "--p", "2", "--series-order", "200"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["alpha_bar_empirical"] == pytest.approx(0.189630833046, abs=1e-4)

    def test_empirical_candidate_p3(self, capsys):
        # pins the probe exponent: the second amplitude sits in front of
        # n^{-5/2} at every p, not just p = 2
        code, out, _ = run_cli(
            capsys, "constants", "--p", "3", "--series-order", "200"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["alpha_bar_empirical"] == pytest.approx(
            doc["alpha_bar_product_form"], rel=1e-3
        )

    def test_rejects_bad_p(self, capsys):
        code, _, err = run_cli(capsys, "constants", "--p", "0")
        assert code == 1
        assert "p must be" in err


class TestUniversal:
    def test_decimals(self, capsys):
        code, out, _ = run_cli(capsys, "universal", "--m-max", "5")
        assert code == 0
        doc = json.loads(out)
        values = [entry["value"] for entry in doc["constants"]]
        assert values[0].startswith("0.36787944117144232160"[:20])
        assert values[1].startswith("-0.02489353418393197149")
        assert values[4].startswith("-0.000322126221836099322")
        forms = [entry["closed_form"] for entry in doc["constants"]]
        assert forms[1] == "-1/2*exp(-3)"
        assert forms[2] == "1/8*exp(-5) - 1/3*exp(-4)"

    def test_partial_sum(self, capsys):
        code, out, _ = run_cli(capsys, "universal", "--m-max", "10", "--p", "3")
        doc = json.loads(out)
        assert doc["xi_partial_sum"] == pytest.approx(0.119674100436, abs=1e-6)


class TestVerify:
    def test_quick_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--level", "quick")
        assert code == 0
        assert out.endswith("all checks passed\n")
        assert out.count("PASS") == 5

    def test_quick_with_oracle(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--level", "quick", "--oracle")
        assert code == 0
        assert "PASS exhaustive-oracle" in out


class TestCache:
    def test_writes_and_reuses(self, capsys, tmp_path):
        code, first, _ = run_cli(
            capsys, "--cache-dir", str(tmp_path),
            "count", "--k", "4", "--family", "b", "--order", "30",
        )
        assert code == 0
        assert (tmp_path / "b_k4.json").exists()
        code, second, _ = run_cli(
            capsys, "--cache-dir", str(tmp_path),
            "count", "--k", "4", "--family", "b", "--order", "30",
        )
        assert second == first

    def test_corrupt_cache_recomputed(self, capsys, tmp_path):
        (tmp_path / "b_k4.json").write_text("{not json at all")
        code, out, _ = run_cli(
            capsys, "--cache-dir", str(tmp_path),
            "count", "--k", "4", "--family", "b", "--order", "4",
        )
        assert code == 0
        assert [e["value"] for e in json.loads(out)["counts"]] == [
            "1", "1", "4", "19", "107",
        ]
        # the bad entry was replaced by a good one
        stored = json.loads((tmp_path / "b_k4.json").read_text())
        assert stored["coefficients"][:5] == ["1", "1", "4", "19", "107"]

    def test_env_variable(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("KGONAL_CACHE", str(tmp_path))
        code, _, _ = run_cli(
            capsys, "count", "--k", "5", "--family", "b", "--order", "10"
        )
        assert code == 0
        assert (tmp_path / "b_k5.json").exists()


class TestDeterminism:
    def test_identical_invocations(self, capsys):
        runs = [
            run_cli(capsys, "count", "--k", "6", "--family", "unlabelled", "--order", "12")[1]
            for _ in range(2)
        ]
        assert runs[0] == runs[1]
        runs = [
            run_cli(capsys, "constants", "--p", "3", "--series-order", "150",
                    "--no-empirical")[1]
            for _ in range(2)
        ]
        assert runs[0] == runs[1]

    def test_cache_does_not_change_output(self, capsys, tmp_path):
        without = run_cli(
            capsys, "count", "--k", "4", "--family", "unlabelled", "--order", "15"
        )[1]
        with_cache = run_cli(
            capsys, "--cache-dir", str(tmp_path),
            "count", "--k", "4", "--family", "unlabelled", "--order", "15",
        )[1]
        assert with_cache == without


class TestBfileParser:
    def test_parses_fixture(self):
        table = read_bfile(DATA / "bfiles" / "A000081.txt")
        assert table[0] == 0
        assert table[1] == 1
        assert table[9] == 286
        assert len(table) == 21

    def test_skips_comments_and_blanks(self, tmp_path):
        path = tmp_path / "seq.txt"
        path.write_text("# header\n\n0 1\n1 42\n# trailing\n")
        assert read_bfile(path) == {0: 1, 1: 42}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kgonal", "count", "--k", "3", "--family", "b", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["counts"] == [{"n": 3, "value": "10"}]
