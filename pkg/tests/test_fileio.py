import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symact.errors import MonoidMismatch, ParseError
from symact.fileio import (
    Matrix,
    Report,
    Tokens,
    Workspace,
    parse_family_text,
    parse_graph_text,
    parse_map_text,
    parse_monoid_text,
    parse_mset_text,
    parse_report,
    parse_report_tree,
    render_graph_text,
    render_monoid_text,
    render_mset_text,
    render_report,
    render_report_tree,
)
from symact.fixtures import cyclic, monogenic, rho_graph, sym3
from symact.mset import validate_mset


def test_parse_monoid_with_names():
    text = "# comment\nsize 2\nidentity 0\ntable\n0 1\n1 1\nnames 1 a\n"
    monoid, names = parse_monoid_text(text)
    assert monoid.table == ((0, 1), (1, 1))
    assert names == ("1", "a")


def test_monoid_render_parse_roundtrip():
    for monoid in (cyclic(3), monogenic(1, 2), sym3()):
        back, names = parse_monoid_text(render_monoid_text(monoid))
        assert back.table == monoid.table
        assert back.identity == monoid.identity
        assert names is None


def test_parse_monoid_errors_carry_location():
    with pytest.raises(ParseError) as info:
        parse_monoid_text("size 2\nidentity 0\ntable\n0 1\n1\n")
    assert "line 5" in str(info.value)
    assert info.value.line == 5

    with pytest.raises(ParseError) as info:
        parse_monoid_text("size 2\nidentity 0\ntable\n0 x\n1 0\n")
    assert info.value.line == 4 and info.value.column == 3

    with pytest.raises(ParseError) as info:
        parse_monoid_text("identity 0\ntable\n0\n")
    assert "missing required key 'size'" in str(info.value)

    with pytest.raises(ParseError) as info:
        parse_monoid_text("size 1\nsize 1\n")
    assert "duplicate key" in str(info.value)

    with pytest.raises(ParseError) as info:
        parse_monoid_text("flavor sweet\n")
    assert "unknown key" in str(info.value)

    with pytest.raises(ParseError):
        parse_monoid_text("0 1\n")  # value row outside a block


def test_parse_mset():
    spec = parse_mset_text("monoid m.mon\nsize 2\naction\n0 1\n0 0\n")
    assert spec.monoid_ref == "m.mon"
    assert spec.action == ((0, 1), (0, 0))
    bare = parse_mset_text("size 1\naction\n0\n")
    assert bare.monoid_ref is None


def test_mset_render_parse_roundtrip():
    mset = validate_mset(monogenic(1, 1), 2, ((0, 1), (0, 0)))
    spec = parse_mset_text(render_mset_text(mset, monoid_ref="m.mon"))
    assert spec.size == 2 and spec.action == ((0, 1), (0, 0))
    assert spec.monoid_ref == "m.mon"


def test_parse_map():
    spec = parse_map_text("source a.mset\ntarget b.mset\nmapping 0 0\n")
    assert spec.source_ref == "a.mset"
    assert spec.target_ref == "b.mset"
    assert spec.mapping == (0, 0)


def test_parse_family():
    spec = parse_family_text("submonoid 0 1\nsubgroups full\nsubmonoid 0\nsubgroup 0\n")
    assert spec.entries == (((0, 1), "full"), ((0,), ((0,),)))
    with pytest.raises(ParseError):
        parse_family_text("subgroup 0\n")
    with pytest.raises(ParseError):
        parse_family_text("submonoid 0\n")
    with pytest.raises(ParseError):
        parse_family_text("submonoid 0\nsubgroups full\nsubgroup 0\n")


def test_parse_graph():
    fg = parse_graph_text("size 5\nstep 1 2 0 2 3\n")
    assert fg.step == (1, 2, 0, 2, 3)
    back = parse_graph_text(render_graph_text(rho_graph()))
    assert back.step == rho_graph().step
    with pytest.raises(ParseError) as info:
        parse_graph_text("size 3\nstep 0 1\n")
    assert "expects 3 values" in str(info.value)


def test_report_text_roundtrip():
    report = Report(
        "demo",
        (
            ("count", Tokens(("3",))),
            ("flags", Tokens(("yes", "no"))),
            ("table", Matrix(((0, 1), (2, -3)))),
            ("empty", Matrix(())),
        ),
        ("first note", "second note"),
    )
    assert parse_report(render_report(report)) == report


def test_report_tree_roundtrip():
    report = Report("demo", (("table", Matrix(((1,),))), ("word", Tokens(("x",)))), ("n",))
    assert parse_report_tree(render_report_tree(report)) == report
    with pytest.raises(ParseError):
        parse_report_tree("{not json")


def test_report_requires_header():
    with pytest.raises(ParseError):
        parse_report("count 3\n")


TOKEN = st.text(
    alphabet="abcdefghijklmnopqrstuvwxyz0123456789-_.", min_size=1, max_size=6
)
KEY = st.from_regex(r"[a-z][a-z0-9_-]{0,5}", fullmatch=True).filter(
    lambda k: k not in ("note", "report")
)
ENTRY = st.tuples(
    KEY,
    st.one_of(
        st.builds(Tokens, st.lists(TOKEN, min_size=1, max_size=4).map(tuple)),
        st.builds(
            Matrix,
            st.lists(
                st.lists(st.integers(-99, 99), min_size=1, max_size=4).map(tuple),
                max_size=3,
            ).map(tuple),
        ),
    ),
)


@settings(max_examples=80, deadline=None)
@given(
    st.from_regex(r"[a-z][a-z0-9_-]{0,8}", fullmatch=True),
    st.lists(ENTRY, max_size=5).map(tuple),
    st.lists(st.lists(TOKEN, min_size=1, max_size=3).map(" ".join), max_size=2).map(tuple),
)
def test_report_roundtrips_hold_generally(command, entries, notes):
    report = Report(command, entries, notes)
    assert parse_report(render_report(report)) == report
    assert parse_report_tree(render_report_tree(report)) == report


def test_workspace_resolves_references(data_dir):
    ws = Workspace()
    mset, names = ws.load_mset(data_dir / "absorbing_pair.mset")
    assert mset.action == ((0, 1), (0, 0))
    assert names == ("x", "y")
    monoid, _ = ws.load_monoid(data_dir / "semilattice.mon")
    assert mset.monoid.table == monoid.table


def test_workspace_caches_by_path(data_dir):
    ws = Workspace()
    first, _ = ws.load_mset(data_dir / "absorbing_pair.mset")
    second, _ = ws.load_mset(data_dir / "absorbing_pair.mset")
    assert first is second
    assert ws.load_graph(data_dir / "rho.graph") is ws.load_graph(data_dir / "rho.graph")


def test_workspace_rejects_monoid_mismatch(data_dir):
    ws = Workspace()
    capped, _ = ws.load_monoid(data_dir / "capped.mon")
    with pytest.raises(MonoidMismatch):
        ws.load_mset(data_dir / "absorbing_pair.mset", capped)


def test_workspace_loads_map_and_family(data_dir):
    ws = Workspace()
    collapse, _, _ = ws.load_map(data_dir / "collapse.map")
    assert collapse.mapping == (0, 0)
    monoid, _ = ws.load_monoid(data_dir / "semilattice.mon")
    family = ws.load_family(data_dir / "full_family.fam", monoid)
    assert len(family.entries) == 1
    assert family.entries[0].submonoid.elements == (0, 1)


def test_workspace_missing_file_is_parse_error():
    ws = Workspace()
    with pytest.raises(ParseError):
        ws.load_monoid("/nonexistent/m.mon")
