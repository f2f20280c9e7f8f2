"""CLI surface: ecg format round-trips, per-subcommand output lines, exit codes.

Everything runs in-process through run_cli so capsys sees stdout/stderr and
coverage extends into the command handlers.
"""

import pytest

from pc4.cli import parse_ecg, run_cli, serialize_ecg
from pc4.errors import InvalidSpec
from pc4.generate import GenSpec, generate
from pc4.graph import build_graph


def _put(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(serialize_ecg(g), encoding="ascii")
    return str(p)


def _put_text(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="ascii")
    return str(p)


# Properly colored C4 inside K4: cycle 0-1-2-3 alternates colors 1,3.
PC4_K4 = build_graph(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2), (0, 2, 3), (1, 3, 4)])

# Class 1 induces a 2K2 (edges 02,13 vs 03,12 pattern below), so the
# two-colored decomposition must refuse it.
TWO_K2 = build_graph(4, [(0, 1, 2), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 2)])

# Forces the removed-rib branch: vertex 3 is a rib adjacent to all of the
# spine in both color classes.
CASE2 = build_graph(4, [(0, 1, 1), (0, 2, 2), (0, 3, 1), (1, 2, 2), (1, 3, 1), (2, 3, 1)])

TRIANGLE = build_graph(3, [(0, 1, 1), (0, 2, 1), (1, 2, 2)])


# --------------------------------------------------------------- ecg format


class TestEcgFormat:
    def test_round_trip_preserves_graph(self):
        for spec in (GenSpec("star_order", 5), GenSpec("random", 6, seed=9)):
            g = generate(spec)
            h = parse_ecg(serialize_ecg(g))
            assert (h.n, h.edges, h.colors) == (g.n, g.edges, g.colors)

    def test_serializer_output_shape(self):
        text = serialize_ecg(TRIANGLE)
        assert text == "ecg 1\nn 3\ne 0 1 1\ne 0 2 1\ne 1 2 2\n"

    def test_comments_and_blank_lines_ignored(self):
        text = "# header comment\n\necg 1\n# mid\nn 3\n\ne 0 1 1\ne 0 2 1\ne 1 2 2\n"
        g = parse_ecg(text)
        assert (g.n, g.colors) == (3, (1, 1, 2))

    @pytest.mark.parametrize(
        "text,msg",
        [
            ("n 3\ne 0 1 1\n", "line 1: expected header 'ecg 1'"),
            ("ecg 2\n", "line 1: expected header 'ecg 1'"),
            ("ecg 1\ne 0 1 1\n", "line 2: edge before n line"),
            ("ecg 1\nn 3\nn 4\n", "line 3: malformed n line"),
            ("ecg 1\nn x\n", "line 2: n is not an integer"),
            ("ecg 1\nn 3\ne 0 1\n", "line 3: edge needs u v color"),
            ("ecg 1\nn 3\ne 0 1 red\n", "line 3: non-integer edge field"),
            ("ecg 1\nn 3\nq 0 1\n", "line 3: unknown record 'q'"),
            ("", "missing 'ecg 1' header"),
            ("ecg 1\n", "missing n line"),
        ],
    )
    def test_malformed_input_reports_line(self, text, msg):
        with pytest.raises(InvalidSpec) as ei:
            parse_ecg(text)
        assert str(ei.value) == msg


# ----------------------------------------------------------------- detect


class TestDetect:
    def test_pc_c4_witness_line(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", PC4_K4)
        assert run_cli(["detect", "--in", path, "--pattern", "pc-c4"]) == 0
        assert capsys.readouterr().out == "C4: 0 1 2 3 colors: 1 3 1 3\n"

    def test_pc_c4_absent_exits_1(self, tmp_path, capsys):
        g = build_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
        path = _put(tmp_path, "g.ecg", g)
        assert run_cli(["detect", "--in", path, "--pattern", "pc-c4"]) == 1
        assert capsys.readouterr().out == "none\n"

    def test_rainbow_c3(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("rainbow", 3)))
        assert run_cli(["detect", "--in", path, "--pattern", "rainbow-c3"]) == 0
        assert capsys.readouterr().out == "C3: 0 1 2 colors: 1 3 2\n"

    def test_rainbow_ck_needs_k(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("rainbow", 5)))
        assert run_cli(["detect", "--in", path, "--pattern", "rainbow-ck", "--k", "4"]) == 0
        assert capsys.readouterr().out == "C4: 0 1 2 3 colors: 1 5 8 3\n"
        assert run_cli(["detect", "--in", path, "--pattern", "rainbow-ck"]) == 2
        assert "--pattern rainbow-ck needs --k" in capsys.readouterr().err


# ---------------------------------------------------------------- classify


class TestClassify:
    def test_structure1_line(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("structure1", 5)))
        assert run_cli(["classify", "--in", path]) == 0
        assert capsys.readouterr().out == "structure1: vertex 0 color 1\n"

    def test_pc_c4_reported_before_structures(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", PC4_K4)
        assert run_cli(["classify", "--in", path, "--all"]) == 1
        assert capsys.readouterr().out == "pc-c4 present: C4: 0 1 2 3 colors: 1 3 1 3\n"

    def test_all_lists_every_match(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("structure3", 4)))
        assert run_cli(["classify", "--in", path, "--all"]) == 0
        assert capsys.readouterr().out == "structure3: center 0 palette 1,2,3 outer 4\n"

    def test_wrong_color_count_is_usage_error(self, tmp_path, capsys):
        g = build_graph(4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)])
        path = _put(tmp_path, "g.ecg", g)
        assert run_cli(["classify", "--in", path]) == 2
        assert "need exactly n = 4 colors" in capsys.readouterr().err


# --------------------------------------------------------------- decompose


class TestDecompose:
    def test_layered_prints_layers(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("layered", 5)))
        assert run_cli(["decompose", "--in", path, "--layered"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "layer 0: structure1: vertex 0 color 1 removes 0",
            "layer 1: structure1: vertex 1 color 2 removes 1",
            "layer 2: structure2: triangle 2 3 4 colors 3 5 4 removes 2,3,4",
        ]

    def test_layered_blocked_by_pc_c4(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", PC4_K4)
        assert run_cli(["decompose", "--in", path, "--layered"]) == 1
        assert capsys.readouterr().out.startswith("pc-c4 present: C4:")

    def test_gallai_tree_indentation(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("star_order", 4)))
        assert run_cli(["decompose", "--in", path, "--gallai"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "split: 0,1,2,3 cross-color 1",
            "  leaf: 0",
            "  split: 1,2,3 cross-color 2",
            "    leaf: 1",
            "    split: 2,3 cross-color 3",
            "      leaf: 2",
            "      leaf: 3",
        ]

    def test_gallai_refuses_rainbow_triangle(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("rainbow", 4)))
        assert run_cli(["decompose", "--in", path, "--gallai"]) == 1
        assert capsys.readouterr().out == "none\n"

    def test_two_colored_case1(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", TRIANGLE)
        assert run_cli(["decompose", "--in", path, "--two-colored"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "case 1",
            "spine: 0,1",
            "ribs: 2",
            "v1: ",
            "v2: 1",
            "u: 0",
        ]

    def test_two_colored_case2_nests_inner_split(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", CASE2)
        assert run_cli(["decompose", "--in", path, "--two-colored"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "case 2",
            "spine: 0,1,2",
            "ribs: 3",
            "removed: 3",
            "  case 1",
            "  spine: 0,1,2",
            "  ribs: ",
            "  v1: 0",
            "  v2: 2",
            "  u: 1",
        ]

    def test_two_colored_rejects_non_threshold_class(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", TWO_K2)
        assert run_cli(["decompose", "--in", path, "--two-colored"]) == 1
        assert capsys.readouterr().out == "none: color class 1 is not a threshold graph\n"

    def test_drawing_for_one_class(self, tmp_path, capsys):
        g = build_graph(4, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 3, 1)])
        path = _put(tmp_path, "g.ecg", g)
        assert run_cli(["decompose", "--in", path, "--drawing", "--color", "1"]) == 0
        assert capsys.readouterr().out == "class 1: spine 0,1 ribs 3,2 tails 2 isolated \n"

    def test_drawing_requires_color(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", TRIANGLE)
        assert run_cli(["decompose", "--in", path, "--drawing"]) == 2
        assert "--drawing needs --color" in capsys.readouterr().err

    def test_certificate_lists_singletons_and_pairs(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("structure3", 4)))
        assert run_cli(["decompose", "--in", path]) == 0
        lines = capsys.readouterr().out.splitlines()
        # 4 colors: 4 singleton classes + 6 unions.
        assert len(lines) == 10
        assert lines[0] == "class 1: spine 0 ribs 1 tails 1 isolated 2,3"
        assert lines[3] == "class 1+4: spine 1,2 ribs 0,3 tails 3 isolated "
        assert all(line.startswith("class ") for line in lines)

    def test_certificate_failure_names_classes_and_pattern(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("rainbow", 4)))
        assert run_cli(["decompose", "--in", path]) == 1
        assert capsys.readouterr().out == "not-threshold: classes 1,6 induced 2K2 on 0,1,2,3\n"


# ---------------------------------------------------------------- generate


class TestGenerate:
    def test_stdout_is_ecg(self, capsys):
        assert run_cli(["generate", "--kind", "star_order", "--n", "4"]) == 0
        assert capsys.readouterr().out == (
            "ecg 1\nn 4\ne 0 1 1\ne 0 2 1\ne 0 3 1\ne 1 2 2\ne 1 3 2\ne 2 3 3\n"
        )

    def test_out_file_round_trips(self, tmp_path, capsys):
        out = str(tmp_path / "g.ecg")
        code = run_cli(
            ["generate", "--kind", "random", "--n", "6", "--seed", "9", "--out", out]
        )
        assert code == 0
        assert capsys.readouterr().out == ""
        g = parse_ecg(open(out, encoding="ascii").read())
        want = generate(GenSpec("random", 6, seed=9))
        assert (g.edges, g.colors) == (want.edges, want.colors)

    def test_descriptor_splits_on_commas(self, tmp_path, capsys):
        out = str(tmp_path / "g.ecg")
        args = ["generate", "--kind", "layered", "--n", "7", "--out", out,
                "--descriptor", "structure2,structure1,structure2"]
        assert run_cli(args) == 0
        g = parse_ecg(open(out, encoding="ascii").read())
        want = generate(
            GenSpec("layered", 7, descriptor=("structure2", "structure1", "structure2"))
        )
        assert (g.edges, g.colors) == (want.edges, want.colors)

    def test_gallai_descriptor_parsed_as_ints(self, capsys):
        args = ["generate", "--kind", "gallai_g0", "--n", "5", "--descriptor", "1,1,1,1"]
        assert run_cli(args) == 0
        g = parse_ecg(capsys.readouterr().out)
        want = generate(GenSpec("gallai_g0", 5, descriptor=(1, 1, 1, 1)))
        assert (g.edges, g.colors) == (want.edges, want.colors)

    def test_unknown_kind_is_usage_error(self, capsys):
        assert run_cli(["generate", "--kind", "bogus", "--n", "4"]) == 2
        assert "invalid choice" in capsys.readouterr().err


# ------------------------------------------------------------------ bounds


class TestBounds:
    def test_kst_inexact(self, capsys):
        assert run_cli(["bounds", "--formula", "kst", "--args", "5", "2", "2"]) == 0
        assert capsys.readouterr().out == "kst.lower=8\nkst.upper=17/2\nkst.exact=false\n"

    def test_kst_exact(self, capsys):
        assert run_cli(["bounds", "--formula", "kst", "--args", "9", "2", "2"]) == 0
        assert capsys.readouterr().out == "kst.lower=18\nkst.upper=18\nkst.exact=true\n"

    def test_matching_with_tie(self, capsys):
        assert run_cli(["bounds", "--formula", "matching", "--args", "4", "2"]) == 0
        assert capsys.readouterr().out == (
            "matching.bound=3\nmatching.extremal=clique-plus-isolated,clique-join-independent\n"
        )

    def test_matching_single_extremal(self, capsys):
        assert run_cli(["bounds", "--formula", "matching", "--args", "7", "3"]) == 0
        assert capsys.readouterr().out == (
            "matching.bound=11\nmatching.extremal=clique-join-independent\n"
        )

    def test_wrong_arity_is_usage_error(self, capsys):
        assert run_cli(["bounds", "--formula", "kst", "--args", "5", "2"]) == 2
        assert "kst needs --args n a b" in capsys.readouterr().err


# ------------------------------------------------------------------ verify


class TestVerify:
    def test_holds_report_lines(self, capsys):
        assert run_cli(["verify", "--theorem", "t4", "--n", "4"]) == 0
        cap = capsys.readouterr()
        assert cap.out.splitlines() == [
            "holds (16 cases)",
            "report.theorem=t4",
            "report.n=4",
            "report.mode=default",
            "report.space=complete",
            "report.cases=16",
            "report.enumerated=16",
            "report.holds=true",
            "report.counterexamples=0",
        ]
        assert cap.err.startswith("# wall_time=")
        assert "jobs=1" in cap.err

    def test_counterexamples_exit_1(self, capsys):
        assert run_cli(["verify", "--theorem", "t1", "--n", "4", "--weakened"]) == 1
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "counterexamples: 15 (90 cases)"
        assert "report.extra.tightness_ok=true" in lines
        assert sum(1 for s in lines if s.startswith("report.cex.")) == 15

    def test_stdout_independent_of_jobs(self, capsys):
        assert run_cli(["verify", "--theorem", "t4", "--n", "4"]) == 0
        solo = capsys.readouterr().out
        assert run_cli(["verify", "--theorem", "t4", "--n", "4", "--jobs", "2"]) == 0
        assert capsys.readouterr().out == solo

    def test_over_budget_exit_3(self, capsys):
        assert run_cli(["verify", "--theorem", "t5", "--n", "6"]) == 3
        err = capsys.readouterr().err
        assert err == "infeasible: predicted 420693273 cases over budget 2000000\n"

    def test_unknown_theorem_exit_2(self, capsys):
        assert run_cli(["verify", "--theorem", "t3", "--n", "4"]) == 2
        assert "unknown theorem id 't3'" in capsys.readouterr().err


# ------------------------------------------------------------------- stats


class TestStats:
    def test_star_order_stats(self, tmp_path, capsys):
        path = _put(tmp_path, "g.ecg", generate(GenSpec("star_order", 4)))
        assert run_cli(["stats", "--in", path]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "stats.n=4",
            "stats.edges=6",
            "stats.colors=3",
            "stats.color_degree=1,2,3,3",
            "stats.saturated_color_degree=1,1,1,1",
        ]


# -------------------------------------------------------------- exit codes


class TestExitCodes:
    def test_missing_file(self, capsys):
        assert run_cli(["detect", "--in", "no-such.ecg", "--pattern", "pc-c4"]) == 2
        assert "no such file: no-such.ecg" in capsys.readouterr().err

    def test_malformed_file_reports_line(self, tmp_path, capsys):
        path = _put_text(tmp_path, "bad.ecg", "ecg 1\nn 3\nq 0 1\n")
        assert run_cli(["detect", "--in", path, "--pattern", "pc-c4"]) == 2
        assert "line 3: unknown record 'q'" in capsys.readouterr().err

    def test_unknown_subcommand(self, capsys):
        assert run_cli(["nonsense"]) == 2
        assert "invalid choice" in capsys.readouterr().err

    def test_no_arguments(self, capsys):
        assert run_cli([]) == 2
        capsys.readouterr()
