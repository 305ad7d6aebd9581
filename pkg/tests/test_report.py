"""Delimited tables, step narration, and the rendered figures."""
from conftest import NIXON_SCRIPT
from pathlogic.report import belief_table, format_steps, write_report
from pathlogic.session import Session


def nixon_after_choice():
    s = Session.new("MIS")
    for t in NIXON_SCRIPT:
        s.submit_input(t)
    s.resolve_choice([2])
    return s


def test_belief_table_columns():
    s = nixon_after_choice()
    lines = belief_table(s, active_only=False).splitlines()
    assert lines[0].split("\t") == ["index", "status", "formula", "from",
                                    "to", "entrenchment", "category"]
    rows = {int(l.split("\t")[0]): l.split("\t") for l in lines[1:]}
    assert len(rows) == 7
    assert rows[2][1] == "disbel"
    assert rows[4][3] == "{AristotelianSyllogism, 3, 1}"
    assert rows[1][5] == "0.5" and rows[1][6] == "aPosteriori"
    active = belief_table(s, active_only=True).splitlines()
    assert len(active) == 1 + 4


def test_belief_table_custom_delimiter():
    s = Session.new("DMA")
    s.submit_input("Science(Doc1)")
    text = belief_table(s, delimiter=",")
    assert text.splitlines()[1].startswith("1,bel,Science(Doc1)")


def test_format_steps_narrates_the_whole_event():
    s = Session.new("MIS")
    reports = [s.submit_input(t) for t in NIXON_SCRIPT]
    lines = format_steps(reports[-1])
    assert any(l.startswith("6 entered") for l in lines)
    assert any(l.startswith("choice required") for l in lines)
    s.resolve_choice([2])
    lines = format_steps(s.event_log[-1])
    joined = "\n".join(lines)
    assert "choice  [2]" in joined
    assert "retracted [2, 6, 7]" in joined
    assert "link remove  hasProperty: R -> ~P#2" in joined


def test_write_report_produces_files(tmp_path):
    s = nixon_after_choice()
    paths = write_report(s, tmp_path, "nixon")
    names = [p.name for p in paths]
    assert names == ["nixon.tsv", "nixon_graph.png", "nixon_timeline.png"]
    for p in paths:
        assert p.exists() and p.stat().st_size > 0
    assert "P^p#1(Nixon)" in (tmp_path / "nixon.tsv").read_text()


def test_write_report_empty_session(tmp_path):
    s = Session.new("DMA")
    paths = write_report(s, tmp_path, "empty")
    for p in paths:
        assert p.exists() and p.stat().st_size > 0
