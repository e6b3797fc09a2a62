"""Command-line interface.

    linkdomain check PROFILE [--mode strong|weak] [--format native|soc]
                             [--witness] [--json] [--graph-out FILE]
    linkdomain gen --model ic --candidates M --votes N [--seed S] [--out FILE]
    linkdomain gen --model edges --graph FILE [--out FILE]
    linkdomain oracle PROFILE [--mode strong|weak] [--cap N] [--format native|soc]

Exit codes: 0 linked / verdicts agree, 1 not linked, 2 error,
3 oracle disagreement (a bug detector). check and oracle are decision
procedures; shell pipelines can branch on the code without parsing output.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import LinkDomainError
from .generate import gen_edge_realizing, gen_impartial_culture
from .graph import ConnectivityGraph, Mode, build_graph, export_dot
from .model import Election, default_names
from .oracle import DEFAULT_CAP, brute_force_linked
from .profiles import parse_native, parse_preflib_soc, write_native
from .recognize import RecognitionResult, recognize, verify_witness


def _load_election(path: str, fmt: str) -> Election:
    data = Path(path).read_bytes()
    return parse_native(data) if fmt == "native" else parse_preflib_soc(data)


def _check_pipeline(election: Election, mode: Mode) -> tuple[RecognitionResult, ConnectivityGraph | None, float]:
    start = time.perf_counter()
    if election.m == 1:
        result = RecognitionResult(linked=True, witness=(0,))
        graph = None
    else:
        graph = build_graph(election, mode)
        result = recognize(graph)
    return result, graph, (time.perf_counter() - start) * 1000.0


def cmd_check(args: argparse.Namespace) -> int:
    election = _load_election(args.path, args.format)
    mode = Mode(args.mode)
    result, graph, elapsed_ms = _check_pipeline(election, mode)
    names = election.names
    edge_count = len(graph.edges) if graph is not None else 0

    if args.graph_out:
        dot_graph = graph if graph is not None else ConnectivityGraph(1, [])
        Path(args.graph_out).write_text(export_dot(dot_graph, names), encoding="utf-8")

    if args.json:
        report = {
            "input": args.path,
            "mode": mode.value,
            "m": election.m,
            "n": election.n,
            "edges": edge_count,
            "verdict": result.verdict,
            "witness": [names[c] for c in result.witness] if result.witness else None,
            "elapsed_ms": round(elapsed_ms, 3),
        }
        print(json.dumps(report))
    else:
        print(f"input:      {args.path}")
        print(f"mode:       {mode.value}")
        print(f"candidates: {election.m}")
        print(f"votes:      {election.n}")
        print(f"edges:      {edge_count}")
        if result.linked:
            print("verdict:    LINKED")
            print("witness:    " + " > ".join(names[c] for c in result.witness))
            if args.witness and graph is not None:
                ok = verify_witness(graph, result.witness)
                print(f"witness check: {'valid' if ok else 'INVALID'}")
        else:
            print("verdict:    NOT LINKED")
            cert = result.certificate
            print(f"seeds tried: {len(cert)}")
            print(f"max stuck set size: {cert.max_stuck_size} of {election.m}")
        print(f"elapsed:    {elapsed_ms:.2f} ms")
    return 0 if result.linked else 1


def _read_graph_file(path: str) -> tuple[ConnectivityGraph, tuple[str, ...]]:
    """Edge-list ('u v' per line, 0-based) or the DOT subset export_dot emits."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = [line.strip() for line in text.splitlines()]
    lines = [line for line in stripped if line and not line.startswith("#")]
    if lines and lines[0].startswith("graph"):
        return _parse_dot(lines, path)

    edges = []
    for line in lines:
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise LinkDomainError(f"{path}: expected 'u v' edge lines, got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if not edges:
        raise LinkDomainError(f"{path}: no edges; cannot infer the vertex count")
    m = max(max(u, v) for u, v in edges) + 1
    return ConnectivityGraph(m, edges), default_names(m)


def _parse_dot(lines: list[str], path: str) -> tuple[ConnectivityGraph, tuple[str, ...]]:
    ids: dict[str, int] = {}
    pairs: list[tuple[str, str]] = []

    def intern(name: str) -> int:
        return ids.setdefault(name, len(ids))

    for line in lines[1:]:
        if line in ("}", "{"):
            continue
        body = line.rstrip(";").strip()
        if "--" in body:
            left, _, right = body.partition("--")
            pairs.append((_unquote(left), _unquote(right)))
        elif body:
            intern(_unquote(body))
    for left, right in pairs:
        intern(left)
        intern(right)
    if not ids:
        raise LinkDomainError(f"{path}: DOT graph declares no vertices")
    names = tuple(ids)
    edges = [(ids[left], ids[right]) for left, right in pairs]
    return ConnectivityGraph(len(ids), edges), names


def _unquote(token: str) -> str:
    token = token.strip()
    if token.startswith('"') and token.endswith('"') and len(token) >= 2:
        token = token[1:-1].replace('\\"', '"').replace("\\\\", "\\")
    return token


def cmd_gen(args: argparse.Namespace) -> int:
    if args.model == "ic":
        if args.candidates is None or args.votes is None:
            raise LinkDomainError("--model ic needs --candidates and --votes")
        if args.candidates < 1:
            raise LinkDomainError("--candidates must be at least 1")
        if args.votes < 0:
            raise LinkDomainError("--votes must be non-negative")
        election = gen_impartial_culture(args.candidates, args.votes, args.seed)
    else:
        if args.graph is None:
            raise LinkDomainError("--model edges needs --graph")
        graph, names = _read_graph_file(args.graph)
        election = gen_edge_realizing(graph, names)

    text = write_native(election)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    election = _load_election(args.path, args.format)
    if election.m > args.cap:
        raise LinkDomainError(
            f"profile has {election.m} candidates, oracle capped at {args.cap}"
        )
    result, graph, _ = _check_pipeline(election, Mode(args.mode))
    if graph is None:
        graph = ConnectivityGraph(1, [])
    oracle_verdict, _ = brute_force_linked(graph, cap=args.cap)
    if result.linked == oracle_verdict:
        print(f"AGREE: {'linked' if result.linked else 'not linked'}")
        return 0
    print(
        f"DISAGREEMENT: recognize says {result.verdict}, "
        f"brute force says {'linked' if oracle_verdict else 'not-linked'}"
    )
    return 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkdomain",
        description="Decide whether a preference profile is a linked domain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="recognize a profile, print witness or certificate")
    check.add_argument("path")
    check.add_argument("--mode", choices=["strong", "weak"], default="strong")
    check.add_argument("--format", choices=["native", "soc"], default="native")
    check.add_argument("--witness", action="store_true", help="re-verify the witness independently")
    check.add_argument("--json", action="store_true", help="single-line JSON report")
    check.add_argument("--graph-out", metavar="FILE", help="write the connectivity graph as DOT")
    check.set_defaults(func=cmd_check)

    gen = sub.add_parser("gen", help="generate a profile fixture")
    gen.add_argument("--model", choices=["ic", "edges"], required=True)
    gen.add_argument("--candidates", type=int)
    gen.add_argument("--votes", type=int)
    gen.add_argument("--graph", metavar="FILE", help="edge list ('u v' lines) or DOT file")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", metavar="FILE", help="write here instead of stdout")
    gen.set_defaults(func=cmd_gen)

    oracle = sub.add_parser("oracle", help="compare recognition against brute force")
    oracle.add_argument("path")
    oracle.add_argument("--mode", choices=["strong", "weak"], default="strong")
    oracle.add_argument("--cap", type=int, default=DEFAULT_CAP)
    oracle.add_argument("--format", choices=["native", "soc"], default="native")
    oracle.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LinkDomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
