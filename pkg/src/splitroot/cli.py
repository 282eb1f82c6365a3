"""Command line front end.

Verbs operate on graphs read from edge-list or graph6 files.  A graph6
file holding several lines is treated as a batch: every line is handled
independently, one JSON (or graph6, for square) line is printed per
input line, and the exit code is the maximum over the lines.

Exit codes: 0 success or affirmative decision, 1 malformed input,
2 violated precondition (disconnected input, size guards, bad cap),
3 negative decision, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .classes import CLASS_IDS, recognize, split_partition
from .cliques import maximal_cliques
from .errors import GraphFormatError, InternalVerificationError, PreconditionError
from .formats import parse, serialise, sniff_format
from .graphs import bits
from .oracle import mine_obstructions, oracle_find_root
from .roots import find_root, verify_root

EXIT_OK = 0
EXIT_FORMAT = 1
EXIT_PRECONDITION = 2
EXIT_NEGATIVE = 3
EXIT_INTERNAL = 4


def _jdump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True)


def _error_line(code: int, exc: Exception) -> str:
    return _jdump({"error": {"code": code, "message": str(exc)}})


def _run_one(task: tuple[str, str, str, dict]) -> tuple[int, str]:
    """Process one graph text for a verb; returns (exit code, output)."""
    verb, text, fmt, opts = task
    try:
        g = parse(text, fmt)
        if verb == "square":
            return EXIT_OK, serialise(g.square(), fmt).rstrip("\n")
        if verb == "cliques":
            cap = opts["cap"] if opts["cap"] is not None else max(g.n, 1)
            fam = maximal_cliques(g, cap)
            doc = {
                "cliques": fam.vertex_lists(),
                "intersection": (
                    sorted(bits(fam.intersection)) if fam.complete else None
                ),
                "complete": fam.complete,
            }
            return EXIT_OK, _jdump(doc)
        if verb == "recognize":
            part = split_partition(g)
            if part is None:
                doc = {"member": False, "witness": {"kind": "not-split"}}
                return EXIT_NEGATIVE, _jdump(doc)
            ok, wit = recognize(g, part, opts["cls"])
            code = EXIT_OK if ok else EXIT_NEGATIVE
            return code, _jdump({"member": ok, "witness": wit})
        if verb == "root":
            cert = find_root(g, opts["cls"])
            code = EXIT_OK if cert.decision else EXIT_NEGATIVE
            return code, _jdump(cert.to_json_dict())
        if verb == "oracle-root":
            h = oracle_find_root(g, opts["cls"])
            doc = {
                "found": h is not None,
                "root_edges": (
                    [[u, v] for u, v in h.edges()] if h is not None else None
                ),
            }
            return (EXIT_OK if h is not None else EXIT_NEGATIVE), _jdump(doc)
        raise AssertionError(f"unhandled verb {verb}")
    except GraphFormatError as exc:
        return EXIT_FORMAT, _error_line(EXIT_FORMAT, exc)
    except InternalVerificationError as exc:
        return EXIT_INTERNAL, _error_line(EXIT_INTERNAL, exc)
    except PreconditionError as exc:
        return EXIT_PRECONDITION, _error_line(EXIT_PRECONDITION, exc)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _resolve_format(path: str, override: Optional[str]) -> str:
    if override:
        return override
    if path == "-":
        return "edgelist"
    return sniff_format(path)


def _resolve_jobs(requested: Optional[int]) -> int:
    if requested is not None:
        return max(1, requested)
    env = os.environ.get("SPLITROOT_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _graph_verb(args: argparse.Namespace, opts: dict) -> int:
    try:
        text = _read_text(args.path)
    except OSError as exc:
        print(_error_line(EXIT_FORMAT, exc))
        return EXIT_FORMAT
    fmt = _resolve_format(args.path, args.format)
    if fmt == "graph6":
        chunks = [ln for ln in text.splitlines() if ln.strip()]
        if not chunks:
            print(_error_line(EXIT_FORMAT, GraphFormatError("empty graph6 input")))
            return EXIT_FORMAT
    else:
        chunks = [text]
    tasks = [(args.verb, chunk, fmt, opts) for chunk in chunks]
    jobs = _resolve_jobs(getattr(args, "jobs", None))
    if len(tasks) > 1 and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=8))
    else:
        results = [_run_one(t) for t in tasks]
    code = EXIT_OK
    for line_code, line in results:
        print(line)
        code = max(code, line_code)
    return code


def _single_graph(path: str, override: Optional[str]):
    text = _read_text(path)
    fmt = _resolve_format(path, override)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"{path}: expected exactly one graph")
        text = lines[0]
    return parse(text, fmt)


def _verify_verb(args: argparse.Namespace) -> int:
    try:
        g = _single_graph(args.path, args.format)
        h = _single_graph(args.root_path, args.format)
        ok = verify_root(h, g)
        print(_jdump({"verified": ok}))
        return EXIT_OK if ok else EXIT_NEGATIVE
    except (GraphFormatError, OSError) as exc:
        print(_error_line(EXIT_FORMAT, exc))
        return EXIT_FORMAT
    except PreconditionError as exc:
        print(_error_line(EXIT_PRECONDITION, exc))
        return EXIT_PRECONDITION


def _mine_verb(args: argparse.Namespace) -> int:
    try:
        report = mine_obstructions(args.cls, args.max_n, _resolve_jobs(args.jobs))
        print(_jdump(report.to_json_dict()))
        return EXIT_OK
    except InternalVerificationError as exc:
        print(_error_line(EXIT_INTERNAL, exc))
        return EXIT_INTERNAL
    except PreconditionError as exc:
        print(_error_line(EXIT_PRECONDITION, exc))
        return EXIT_PRECONDITION


def _add_input(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("path", help="input file, or - for stdin")
    sp.add_argument(
        "--format",
        choices=("edgelist", "graph6"),
        default=None,
        help="input format (default: by file extension, edgelist for stdin)",
    )
    sp.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="workers for batch graph6 input (default: SPLITROOT_JOBS or 1)",
    )


def _add_class(sp: argparse.ArgumentParser) -> None:
    sp.add_argument(
        "--class",
        dest="cls",
        required=True,
        choices=CLASS_IDS,
        help="target root class",
    )


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="splitroot",
        description="Square roots of graphs inside split-graph classes.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("square", help="print the square of the input graph")
    _add_input(sp)

    sp = sub.add_parser("cliques", help="list maximal cliques up to a cap")
    _add_input(sp)
    sp.add_argument(
        "--cap",
        type=int,
        default=None,
        help="clique budget (default: number of vertices)",
    )

    sp = sub.add_parser("recognize", help="test split-class membership")
    _add_input(sp)
    _add_class(sp)

    sp = sub.add_parser("root", help="decide and construct a square root")
    _add_input(sp)
    _add_class(sp)

    sp = sub.add_parser("verify", help="check that a claimed root squares to the graph")
    sp.add_argument("path", help="target graph file")
    sp.add_argument(
        "--root", dest="root_path", required=True, help="claimed root graph file"
    )
    sp.add_argument(
        "--format", choices=("edgelist", "graph6"), default=None,
        help="format for both files (default: by extension)",
    )

    sp = sub.add_parser("oracle-root", help="exhaustive root search (small graphs)")
    _add_input(sp)
    _add_class(sp)

    sp = sub.add_parser("mine", help="enumerate minimal rootless gate-passing graphs")
    _add_class(sp)
    sp.add_argument("--max-n", dest="max_n", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=None)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.verb == "verify":
        return _verify_verb(args)
    if args.verb == "mine":
        return _mine_verb(args)
    opts = {
        "cap": getattr(args, "cap", None),
        "cls": getattr(args, "cls", None),
    }
    return _graph_verb(args, opts)


if __name__ == "__main__":
    sys.exit(main())
