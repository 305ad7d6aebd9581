"""Command line interface: an interactive REPL over one session, a report
writer, and the HTTP service runner.

REPL verbs:

    input <formula>      submit one formula
    choices              show the pending revision choice
    choose <i,...>       resolve it with the chosen culprit indexes
    beliefs [--all]      delimited belief table (active only by default)
    graph [--dot]        graph summary, or DOT text
    query <a,b,..> [and|or]  constants classified under the names
    save <file> / load <file>  event-sourced session file
    auto on|off          toggle the automatic revision chooser
    report <dir> [stem]  write the delimited table and figures
    help / quit
"""
from __future__ import annotations

import json
import shlex
import sys

import click

from .errors import PathLogicError
from .events import EventReport
from .session import Session, import_file

PROMPT = "> "


def _print_steps(out, report: EventReport) -> None:
    from .report import format_steps
    for line in format_steps(report):
        print(f"  {line}", file=out)


def _graph_summary(session: Session) -> str:
    snap = session.graph_snapshot()
    counts: dict[str, int] = {}
    for n in snap["nodes"]:
        counts[n["kind"]] = counts.get(n["kind"], 0) + 1
    for l in snap["links"]:
        counts[l["kind"]] = counts.get(l["kind"], 0) + 1
    nodes = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    lines = [f"{snap['mode']} graph: {nodes}"]
    for l in snap["links"]:
        lines.append(f"  {l['source']} -> {l['target']}  [{l['kind']}]")
    return "\n".join(lines)


def _parse_indexes(args: list[str]) -> list[int]:
    out = []
    for a in args:
        for piece in a.split(","):
            if piece.strip():
                out.append(int(piece.strip()))
    return out


def run_repl(session: Session, in_stream, out) -> Session:
    """Drive one session from a text stream; returns the live session
    (``load`` swaps it)."""
    print(f"{session.mode} session {session.id}; 'help' lists commands.",
          file=out)
    while True:
        print(PROMPT, end="", file=out, flush=True)
        line = in_stream.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        verb, _, rest = line.partition(" ")
        verb = verb.lower()
        rest = rest.strip()
        try:
            if verb in ("quit", "exit"):
                break
            elif verb == "help":
                print(__doc__.split("REPL verbs:", 1)[1].rstrip(), file=out)
            elif verb == "input":
                report = session.submit_input(rest)
                _print_steps(out, report)
                if session.pending:
                    print("  resolve with: choose <i,...>", file=out)
            elif verb == "choices":
                pending = session.pending_wire()
                if pending is None:
                    print("  nothing pending", file=out)
                else:
                    print(f"  contradiction {pending['contradiction']}; culprits:",
                          file=out)
                    for c in pending["culprits"]:
                        print(f"    {c['index']}  {c['formula']}  "
                              f"(entrenchment {c['entrenchment']})", file=out)
            elif verb == "choose":
                report = session.resolve_choice(_parse_indexes(shlex.split(rest)))
                _print_steps(out, report)
            elif verb == "beliefs":
                from .report import belief_table
                print(belief_table(session, active_only=rest != "--all"),
                      end="", file=out)
            elif verb == "graph":
                if rest == "--dot":
                    print(session.graph_dot(), end="", file=out)
                else:
                    print(_graph_summary(session), file=out)
            elif verb == "query":
                args = shlex.split(rest)
                if not args:
                    print("  usage: query <name,name,...> [and|or]", file=out)
                    continue
                op = args[1] if len(args) > 1 else "or"
                names = [n for n in args[0].split(",") if n]
                members = session.query_members(names, op)
                print("  " + (", ".join(members) if members else "(none)"),
                      file=out)
            elif verb == "save":
                path = shlex.split(rest)[0]
                with open(path, "w", encoding="utf-8") as fh:
                    json.dump(session.export_file(), fh, indent=2)
                print(f"  saved {path}", file=out)
            elif verb == "load":
                path = shlex.split(rest)[0]
                with open(path, encoding="utf-8") as fh:
                    doc = json.load(fh)
                session = import_file(doc)
                print(f"  loaded {session.mode} session from {path}", file=out)
            elif verb == "auto":
                if rest not in ("on", "off"):
                    print("  usage: auto on|off", file=out)
                    continue
                session.set_auto(rest == "on")
                print(f"  auto chooser {rest}", file=out)
            elif verb == "report":
                from .report import write_report
                args = shlex.split(rest)
                if not args:
                    print("  usage: report <dir> [stem]", file=out)
                    continue
                stem = args[1] if len(args) > 1 else "session"
                for p in write_report(session, args[0], stem):
                    print(f"  wrote {p}", file=out)
            else:
                print(f"  unknown command {verb!r}; try 'help'", file=out)
        except (PathLogicError, OSError, ValueError,
                json.JSONDecodeError) as err:
            if isinstance(err, PathLogicError):
                print(f"  error {err.code}: {err.message}", file=out)
            else:
                print(f"  error: {err}", file=out)
    return session


@click.group()
def main():
    """Dynamic reasoning sessions: REPL, reports, HTTP service."""


@main.command()
@click.option("--mode", default="DMA", show_default=True,
              type=click.Choice(["DMA", "MIS"], case_sensitive=False))
@click.option("--auto", is_flag=True, help="start with the automatic chooser")
@click.option("--load", "load_path", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="resume from a saved session file")
def repl(mode, auto, load_path):
    """Interactive session shell."""
    if load_path:
        with open(load_path, encoding="utf-8") as fh:
            session = import_file(json.load(fh))
    else:
        session = Session.new(mode, auto=auto)
    run_repl(session, sys.stdin, sys.stdout)


@main.command()
@click.option("--load", "load_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="session file to report on")
@click.option("--out", "out_dir", default="report", show_default=True,
              help="output directory")
@click.option("--stem", default="session", show_default=True)
def report(load_path, out_dir, stem):
    """Write the delimited belief table and figures for a saved session."""
    from .report import write_report
    with open(load_path, encoding="utf-8") as fh:
        session = import_file(json.load(fh))
    for p in write_report(session, out_dir, stem):
        click.echo(f"wrote {p}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP session service."""
    import uvicorn

    from .service import app
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
