"""Command-line interface: parsing, formats, exit codes, determinism."""

import json

import pytest

from orbitspectra.cli import format_edge_list, main, parse_edge_list
from orbitspectra.graphs import build_crown
from orbitspectra.spectral import distance_spectrum


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestEdgeListParsing:
    def test_k2(self):
        g = parse_edge_list("p 2\ne 0 1\n")
        assert g.vertex_count == 2 and g.edges() == [(0, 1)]

    def test_triangle_with_comments(self):
        g = parse_edge_list("# triangle\np 3\n\ne 0 1\ne 1 2\ne 2 0\n")
        assert g.edge_count == 3

    def test_self_loop_reports_line(self):
        with pytest.raises(ValueError, match="line 2: self-loop"):
            parse_edge_list("p 2\ne 0 0\n")

    def test_duplicate_edge_reports_line(self):
        with pytest.raises(ValueError, match="line 3: duplicate"):
            parse_edge_list("p 2\ne 0 1\ne 1 0\n")

    def test_edge_before_p(self):
        with pytest.raises(ValueError, match="before the 'p' line"):
            parse_edge_list("e 0 1\n")

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            parse_edge_list("p 2\ne 0 5\n")

    def test_unknown_directive(self):
        with pytest.raises(ValueError, match="unrecognized directive"):
            parse_edge_list("p 2\nq 0 1\n")

    def test_missing_p(self):
        with pytest.raises(ValueError, match="missing 'p"):
            parse_edge_list("# nothing\n")

    def test_round_trip_preserves_spectrum(self):
        g = build_crown(4)
        regenerated = parse_edge_list(format_edge_list(g))
        assert distance_spectrum(regenerated) == distance_spectrum(g)


class TestSpectrumCommand:
    def test_lcr5_json(self, capsys):
        status, out, _ = run(
            capsys, "spectrum", "--family", "lcr", "--n", "5", "--format", "json"
        )
        assert status == 0
        payload = json.loads(out)
        assert payload["distinct"] == [-6, -2, -1, 1, 33]
        assert payload["integral"] is True
        assert payload["order"] == 20

    def test_line_johnson_is_reported_not_integral(self, capsys):
        status, out, _ = run(
            capsys,
            "spectrum", "--family", "line-johnson", "--n", "6", "--k", "2",
            "--method", "char-poly",
        )
        assert status == 0
        assert "NOT distance integral" in out
        assert "residual:" in out

    def test_quotient_assisted_for_lcr(self, capsys):
        status, out, _ = run(
            capsys,
            "spectrum", "--family", "lcr", "--n", "4",
            "--method", "quotient-assisted", "--format", "json",
        )
        assert status == 0
        assert json.loads(out)["method"] == "quotient-assisted"

    def test_quotient_assisted_with_explicit_generators(self, capsys):
        # hexagon: the reflection fixing vertex 1 plus the full rotation
        status, out, _ = run(
            capsys,
            "spectrum", "--family", "cycle", "--n", "6",
            "--method", "quotient-assisted",
            "--stabilizer-gens", "(2 6)(3 5)",
            "--transitive-gens", "(1 2 3 4 5 6)",
        )
        assert status == 0
        assert "distinct: -4 -1 0 9" in out

    def test_bad_generator_notation_exits_two(self, capsys):
        status, _, err = run(
            capsys,
            "spectrum", "--family", "cycle", "--n", "6",
            "--method", "quotient-assisted",
            "--stabilizer-gens", "(2 6",
            "--transitive-gens", "(1 2 3 4 5 6)",
        )
        assert status == 2
        assert "malformed" in err

    def test_csv_flattens_eigenvalues(self, capsys):
        status, out, _ = run(
            capsys, "spectrum", "--family", "crown", "--n", "4", "--format", "csv"
        )
        assert status == 0
        lines = out.strip().splitlines()
        assert lines[0] == "graph,n,eigenvalue,multiplicity"
        assert lines[1] == "crown n=4,4,-4,3"

    def test_edge_list_input(self, capsys, tmp_path):
        path = tmp_path / "k2.edges"
        path.write_text("p 2\ne 0 1\n", encoding="utf-8")
        status, out, _ = run(capsys, "spectrum", "--input", str(path))
        assert status == 0
        assert "distinct: -1 1" in out

    def test_determinism(self, capsys):
        argv = ("spectrum", "--family", "lcr", "--n", "5", "--format", "json")
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        status, out, _ = run(
            capsys,
            "spectrum", "--family", "cycle", "--n", "6",
            "--format", "json", "--output", str(target),
        )
        assert status == 0 and out == ""
        assert json.loads(target.read_text())["distinct"] == [-4, -1, 0, 9]


class TestVerifyCommand:
    def test_range_passes(self, capsys):
        status, out, _ = run(capsys, "verify-lcr", "--n", "4..8")
        assert status == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        assert all("PASS" in line for line in lines)
        assert lines[0] == "n=4: PASS distinct eigenvalues -5 -1 1 19"

    def test_json_payload(self, capsys):
        status, out, _ = run(capsys, "verify-lcr", "--n", "4", "--format", "json")
        assert status == 0
        payload = json.loads(out)
        assert payload[0]["graph"] == "lcr n=4"
        assert all(check["pass"] for check in payload[0]["checks"])

    def test_precondition_failure_exits_one(self, capsys):
        status, out, _ = run(capsys, "verify-lcr", "--n", "3")
        assert status == 1
        assert "FAIL" in out


class TestQuotientCommand:
    def test_text_matches_closed_form(self, capsys):
        status, out, _ = run(capsys, "quotient", "--n", "4")
        assert status == 0
        assert "matches closed form: yes" in out
        assert "0 2 4 3 4 2 4" in out

    def test_json(self, capsys):
        status, out, _ = run(capsys, "quotient", "--n", "5", "--format", "json")
        assert status == 0
        payload = json.loads(out)
        assert payload["match"] is True
        assert payload["computed"][0] == ["0", "3", "6", "3", "6", "3", "12"]
        assert payload["cells"][0] == {"representative": "(1,2)", "size": 1}


class TestDistancesCommand:
    def test_text(self, capsys):
        status, out, _ = run(capsys, "distances", "--family", "cycle", "--n", "4")
        assert status == 0
        assert "0 1 2 1" in out

    def test_csv(self, capsys):
        status, out, _ = run(
            capsys, "distances", "--family", "cycle", "--n", "4", "--format", "csv"
        )
        assert status == 0
        assert out.splitlines()[0] == "u,v,distance"
        assert "0,2,2" in out


class TestCheckDrCommand:
    def test_lcr_is_refused_with_witness(self, capsys):
        status, out, _ = run(capsys, "check-dr", "--family", "lcr", "--n", "4")
        assert status == 0
        assert "distance-regular: no" in out
        assert "witness" in out

    def test_crown_with_intersection_array(self, capsys):
        status, out, _ = run(capsys, "check-dr", "--family", "crown", "--n", "4")
        assert status == 0
        assert "distance-regular: yes" in out
        assert "{3,2,1; 1,2,3}" in out


class TestUsageErrors:
    def test_family_needs_n(self, capsys):
        status, _, err = run(capsys, "spectrum", "--family", "lcr")
        assert status == 2
        assert "error" in err

    def test_missing_file(self, capsys):
        status, _, err = run(capsys, "spectrum", "--input", "/nonexistent.edges")
        assert status == 2

    def test_bad_range(self, capsys):
        status, _, err = run(capsys, "verify-lcr", "--n", "8..4")
        assert status == 2

    def test_two_sources_rejected(self, capsys):
        status, _, err = run(
            capsys, "spectrum", "--family", "lcr", "--n", "4", "--input", "x.edges"
        )
        assert status == 2

    def test_johnson_needs_k(self, capsys):
        status, _, err = run(capsys, "spectrum", "--family", "johnson", "--n", "6")
        assert status == 2

    def test_disconnected_input(self, capsys, tmp_path):
        path = tmp_path / "split.edges"
        path.write_text("p 4\ne 0 1\ne 2 3\n", encoding="utf-8")
        status, _, err = run(capsys, "spectrum", "--input", str(path))
        assert status == 2
        assert "disconnected" in err

    def test_quotient_assisted_unwired_family(self, capsys):
        status, _, err = run(
            capsys,
            "spectrum", "--family", "crown", "--n", "4",
            "--method", "quotient-assisted",
        )
        assert status == 2

    def test_single_graph_commands_reject_ranges(self, capsys):
        for argv in (
            ("spectrum", "--family", "crown", "--n", "3..5"),
            ("distances", "--family", "cycle", "--n", "4..6"),
            ("quotient", "--n", "4..6"),
        ):
            status, _, err = run(capsys, *argv)
            assert status == 2, argv

    def test_quotient_rejects_small_n(self, capsys):
        status, _, err = run(capsys, "quotient", "--n", "3")
        assert status == 2
        assert ">= 4" in err

    def test_check_dr_rejects_csv(self, capsys):
        status, _, err = run(
            capsys, "check-dr", "--family", "cycle", "--n", "6", "--format", "csv"
        )
        assert status == 2


class TestScanCommand:
    def test_csv_over_range(self, capsys):
        status, out, err = run(
            capsys, "scan", "--family", "crown", "--n", "3..5", "--format", "csv"
        )
        assert status == 0
        lines = out.strip().splitlines()
        assert lines[0] == "graph,n,eigenvalue,multiplicity"
        assert any(line.startswith("crown n=3,3,") for line in lines)
        assert any(line.startswith("crown n=5,5,") for line in lines)
        # timing goes to stderr so stdout stays deterministic
        assert "n=3:" in err and "s" in err

    def test_threads_do_not_change_results(self, capsys, monkeypatch):
        argv = ("scan", "--family", "cycle", "--n", "3..6", "--format", "json")
        _, sequential, _ = run(capsys, *argv)
        monkeypatch.setenv("ORBITSPECTRA_THREADS", "4")
        _, threaded, _ = run(capsys, *argv)
        assert sequential == threaded
