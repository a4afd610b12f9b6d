import pytest

from symact.fileio import parse_report, parse_report_tree

from cli_corpus import CASES, ERROR_CASES, golden_dot_path, golden_path, run_case


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_golden_byte_equality(case, tmp_path):
    dot = tmp_path / "out.dot" if case.has_dot else None
    code, stdout, stderr = run_case(case, dot)
    assert code == case.exit_code
    assert stderr == ""
    assert stdout == golden_path(case).read_text()
    if dot is not None:
        assert dot.read_text() == golden_dot_path(case).read_text()


@pytest.mark.parametrize("case", ERROR_CASES, ids=lambda c: c.name)
def test_error_exit_codes(case):
    code, stdout, stderr = run_case(case)
    assert code == 2
    assert stdout == ""
    assert stderr.startswith("error:")


def test_parse_error_reports_location():
    case = next(c for c in ERROR_CASES if c.name == "err-broken-table")
    _, _, stderr = run_case(case)
    assert "line 5" in stderr


def test_tree_format_matches_text_format():
    pairs = [
        ("completion-capped", "completion-capped-tree"),
        ("orbit-cat-capped", "orbit-cat-capped-tree"),
        ("dynamics-rho", "dynamics-rho-tree"),
    ]
    by_name = {c.name: c for c in CASES}
    for text_name, tree_name in pairs:
        text_report = parse_report(golden_path(by_name[text_name]).read_text())
        tree_report = parse_report_tree(golden_path(by_name[tree_name]).read_text())
        assert text_report == tree_report


def test_reports_parse_back():
    for case in CASES:
        content = golden_path(case).read_text()
        if case.name.endswith("-tree"):
            report = parse_report_tree(content)
        else:
            report = parse_report(content)
        assert report.command


def test_runs_are_deterministic(tmp_path):
    case = next(c for c in CASES if c.name == "orbit-cat-capped")
    first = run_case(case, tmp_path / "a.dot")
    second = run_case(case, tmp_path / "b.dot")
    assert first[1] == second[1]
    assert (tmp_path / "a.dot").read_text() == (tmp_path / "b.dot").read_text()


def test_every_subcommand_is_covered():
    commands = {case.argv[0] for case in CASES}
    assert commands == {
        "completion",
        "rinv",
        "linv",
        "restrict",
        "induce",
        "coinduce",
        "fixed",
        "equiv",
        "orbit-cat",
        "xfunctor",
        "dynamics",
        "oracle",
    }
