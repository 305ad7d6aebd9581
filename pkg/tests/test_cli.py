"""REPL scripting and the click entry points."""
import io
import json

from click.testing import CliRunner

from conftest import NIXON_SCRIPT
from pathlogic.cli import main, run_repl
from pathlogic.session import Session


def script(lines, session=None):
    session = session or Session.new("DMA")
    out = io.StringIO()
    final = run_repl(session, io.StringIO("\n".join(lines) + "\n"), out)
    return final, out.getvalue()


def test_input_and_beliefs():
    _, text = script([
        "input forall x.(Science(x) -> TopLevel(x))",
        "input Science(Doc1)",
        "beliefs",
        "quit",
    ])
    assert "entered 1" in text or "1" in text
    assert "Science(Doc1)" in text
    assert "TopLevel(Doc1)" in text


def test_conflict_choices_and_choose():
    s = Session.new("MIS")
    lines = [f"input {t}" for t in NIXON_SCRIPT]
    lines += ["choices", "choose 2", "quit"]
    _, text = script(lines, s)
    assert "resolve with: choose" in text
    assert "contradiction 7" in text
    assert "entrenchment 0.5" in text
    assert s.pending is None
    assert not s.beliefs.entry(2).active


def test_query_and_graph():
    _, text = script([
        "input forall x.(Science(x) -> TopLevel(x))",
        "input Science(Doc1)",
        "query TopLevel",
        "graph",
        "quit",
    ])
    assert "  Doc1" in text
    assert "DMA graph:" in text
    assert "Doc1 -> Science  [element]" in text


def test_error_lines_keep_the_session_alive():
    _, text = script([
        "input Science(",
        "input Science(Doc1)",
        "bogus",
        "choose 1",
        "quit",
    ])
    assert "error SyntaxError:" in text
    assert "unknown command 'bogus'" in text
    assert "error NotPending:" in text


def test_save_load_round_trip(tmp_path):
    path = tmp_path / "session.json"
    s, text = script([
        "input Science(Doc1)",
        f"save {path}",
        "quit",
    ])
    assert f"saved {path}" in text
    doc = json.loads(path.read_text())
    assert doc["inputs"] == ["Science(Doc1)"]
    s2, text2 = script([f"load {path}", "beliefs", "quit"],
                       Session.new("MIS"))
    assert "loaded DMA session" in text2
    assert s2.mode == "DMA"
    assert "Science(Doc1)" in text2


def test_auto_toggle():
    s, text = script(["auto on", "quit"])
    assert "auto chooser on" in text
    assert s.auto is True


def test_cli_report_command(tmp_path):
    session_file = tmp_path / "s.json"
    s = Session.new("DMA")
    s.submit_input("Science(Doc1)")
    session_file.write_text(json.dumps(s.export_file()))
    runner = CliRunner()
    res = runner.invoke(main, ["report", "--load", str(session_file),
                               "--out", str(tmp_path / "rep"), "--stem", "doc"])
    assert res.exit_code == 0, res.output
    assert (tmp_path / "rep" / "doc.tsv").exists()
    assert (tmp_path / "rep" / "doc_graph.png").exists()
    assert (tmp_path / "rep" / "doc_timeline.png").exists()


def test_cli_repl_command_streams_stdin():
    runner = CliRunner()
    res = runner.invoke(main, ["repl", "--mode", "mis"],
                        input="input B^k(Tweety)\nquit\n")
    assert res.exit_code == 0
    assert "MIS session" in res.output
    assert "B^k(Tweety)" in res.output
