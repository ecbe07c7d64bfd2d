"""Command-line front end.

Subcommands ``gen``, ``wiener``, ``theta``, ``check`` and ``verify``.  Exit
status: 0 success or affirmative verdict, 1 negative verdict, 2 usage, parse or
precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import io
from .cuts import (
    CutPartition,
    ScaledCutFamily,
    condition_iii_implied,
    verify_ipartition,
    wiener_cut,
    wiener_from_partition,
    wiener_scaled,
)
from .errors import CutEdgeInsideSide, NotPartialCube, NotTwoComponents, WienerError
from .generators import (
    HexSystem,
    benzenoid,
    cartesian_product,
    circumcoronene,
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    path,
    random_tree,
    star,
)
from .graph import all_pairs, wiener_brute
from .theta import is_partial_cube, theta_classes

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CommandError(Exception):
    pass


@dataclass
class RunReport:
    method: str
    value: int | None
    classes: int | None
    vertices: int
    edges: int
    fallback: str | None = None
    seconds: float | None = None
    distance_seconds: float | None = None
    cut_phase_seconds: float | None = None

    def as_dict(self, timing: bool) -> dict:
        out = {
            "method": self.method,
            "value": self.value,
            "classes": self.classes,
            "vertices": self.vertices,
            "edges": self.edges,
            "fallback": self.fallback,
        }
        if timing:
            out["seconds"] = self.seconds
            out["distance_seconds"] = self.distance_seconds
            out["cut_phase_seconds"] = self.cut_phase_seconds
        return out


def _load_graph(path_arg):
    return io.parse_edge_list(io.read_text(path_arg))


def _emit(line=""):
    sys.stdout.write(line + "\n")


# --- gen ---------------------------------------------------------------------------


def _need_param(args):
    if args.param is None:
        raise CommandError(f"--family {args.family} requires --param")
    return args.param


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "hypercube":
        g = hypercube(_need_param(args))
    elif fam == "path":
        g = path(_need_param(args))
    elif fam == "cycle":
        g = cycle(_need_param(args))
    elif fam == "star":
        g = star(_need_param(args))
    elif fam == "complete":
        g = complete(_need_param(args))
    elif fam == "complete-bipartite":
        if args.param2 is None:
            raise CommandError("--family complete-bipartite requires --param and --param2")
        g = complete_bipartite(_need_param(args), args.param2)
    elif fam == "circumcoronene":
        g = circumcoronene(_need_param(args))
    elif fam == "tree":
        g = random_tree(_need_param(args), args.seed)
    elif fam == "product":
        if not args.inputs or len(args.inputs) < 2:
            raise CommandError("--family product requires --inputs A B [C ...]")
        g = _load_graph(args.inputs[0])
        for other in args.inputs[1:]:
            g = cartesian_product(g, _load_graph(other))
    elif fam == "benzenoid":
        if not args.cells:
            raise CommandError("--family benzenoid requires --cells FILE")
        cells = []
        for lineno, line in io.data_lines(io.read_text(args.cells)):
            qr = line.split()
            if len(qr) != 2:
                raise io.ParseError(lineno, "cell line must be 'q r'")
            try:
                cells.append((int(qr[0]), int(qr[1])))
            except ValueError:
                raise io.ParseError(lineno, f"bad cell coordinates {line!r}") from None
        g = benzenoid(HexSystem.of(cells))
    else:  # pragma: no cover - argparse restricts choices
        raise CommandError(f"unknown family {fam}")
    sys.stdout.write(io.format_edge_list(g))
    return EXIT_OK


# --- wiener ------------------------------------------------------------------------------


def cmd_wiener(args) -> int:
    g = _load_graph(args.graph)
    start = time.perf_counter()
    report = RunReport(method="brute", value=None, classes=None, vertices=g.n, edges=g.m)
    if args.method in ("auto", "cut"):
        d = all_pairs(g)
        t_dist = time.perf_counter()
        report.distance_seconds = t_dist - start
        try:
            value, partition, _ = wiener_cut(g, d)
        except NotPartialCube as exc:
            if args.method == "cut":
                raise
            report.fallback = str(exc.reason).split()[0]
        else:
            report.method = "cut"
            report.value = value
            report.classes = partition.k
            report.cut_phase_seconds = time.perf_counter() - t_dist
    if report.value is None:
        report.value = wiener_brute(g, threads=args.threads)
    report.seconds = time.perf_counter() - start

    timing = not args.no_timing
    if args.json:
        _emit(json.dumps(report.as_dict(timing), separators=(",", ":")))
    else:
        _emit(f"method: {report.method}")
        if report.fallback:
            _emit(f"fallback: not a partial cube ({report.fallback}), used brute force")
        _emit(f"vertices: {report.vertices}")
        _emit(f"edges: {report.edges}")
        if report.classes is not None:
            _emit(f"classes: {report.classes}")
        if timing:
            _emit(f"seconds: {report.seconds:.6f}")
            if report.cut_phase_seconds is not None:
                _emit(f"distance_seconds: {report.distance_seconds:.6f}")
                _emit(f"cut_phase_seconds: {report.cut_phase_seconds:.6f}")
    _emit(str(report.value))
    return EXIT_OK


# --- theta / check --------------------------------------------------------------------


def cmd_theta(args) -> int:
    g = _load_graph(args.graph)
    p = theta_classes(g, all_pairs(g))
    if args.json:
        _emit(json.dumps({"k": p.k, "classes": [list(c) for c in p.classes]}, separators=(",", ":")))
    else:
        for i, members in enumerate(p.classes):
            _emit(f"F{i}: " + " ".join(map(str, members)))
    return EXIT_OK


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    rec = is_partial_cube(g, all_pairs(g))
    if args.json:
        body = {"partial_cube": bool(rec)}
        if rec:
            body.update(rec.certificate.to_dict())
        else:
            body["reason"] = str(rec.reason)
        _emit(json.dumps(body, separators=(",", ":")))
        return EXIT_OK if rec else EXIT_NO
    if not rec:
        _emit("partial cube: no")
        _emit(f"reason: {rec.reason}")
        return EXIT_NO
    cert = rec.certificate
    _emit("partial cube: yes")
    _emit(f"k: {cert.k}")
    _emit(f"label length: {len(cert.labels[0]) if cert.labels else 0}")
    if args.certificate:
        _emit(json.dumps(cert.to_dict(), separators=(",", ":")))
    return EXIT_OK


# --- verify ----------------------------------------------------------------------------


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    edge_sets = io.parse_partition(io.read_text(args.partition), g.m)
    if args.scale < 1:
        raise CommandError("--scale must be a positive integer")
    try:
        if args.scale == 1:
            fam = CutPartition.from_edge_sets(g, edge_sets)
        else:
            fam = ScaledCutFamily.from_edge_sets(g, edge_sets, args.scale)
    except (NotTwoComponents, CutEdgeInsideSide) as exc:
        _emit("verdict: invalid")
        _emit(f"counterexample: {exc}")
        return EXIT_NO
    d = all_pairs(g)
    report = verify_ipartition(g, d, fam, check_iii=args.check_iii)
    _emit(f"cuts: {len(fam.cuts)}")
    _emit(f"scale: {fam.scale}")
    if not report:
        _emit("verdict: invalid")
        _emit(f"counterexample: {report.counterexample}")
        return EXIT_NO
    _emit("verdict: valid")
    if args.check_iii:
        redundancy = condition_iii_implied(g, d, fam)
        _emit(
            f"condition (iii): {redundancy.pairs_checked} cross pairs, "
            f"{len(redundancy.violations)} violation(s)"
        )
        if not redundancy:
            for cut, u, v, lo, hi in redundancy.violations[:10]:
                _emit(f"violation: cut {cut} vertices {u} {v} crossings {lo}..{hi}")
            return EXIT_NO
    if fam.scale == 1:
        value = wiener_from_partition(g, fam, d)
    else:
        value = wiener_scaled(g, fam, d)
    _emit(str(value))
    return EXIT_OK


# --- entry point --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker threads for per-source BFS")
    common.add_argument("--json", action="store_true", help="single-line JSON report")
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock figures")

    parser = argparse.ArgumentParser(prog="cutwiener", description="Wiener index by the cut method")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit a generated graph as an edge list")
    p.add_argument(
        "--family",
        required=True,
        choices=[
            "hypercube", "path", "cycle", "star", "complete", "complete-bipartite",
            "circumcoronene", "tree", "product", "benzenoid",
        ],
    )
    p.add_argument("--param", type=int)
    p.add_argument("--param2", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inputs", nargs="+")
    p.add_argument("--cells")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("wiener", parents=[common], help="compute the Wiener index")
    p.add_argument("graph", help="edge-list file, '-' for stdin")
    p.add_argument("--method", choices=["auto", "brute", "cut"], default="auto")
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("theta", parents=[common], help="list the edge classes")
    p.add_argument("graph")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("check", parents=[common], help="recognize partial cubes")
    p.add_argument("graph")
    p.add_argument("--certificate", action="store_true", help="print the label certificate as JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[common], help="validate a cut partition or scaled family")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--scale", type=int, default=1)
    p.add_argument("--check-iii", action="store_true", help="also check condition (iii) exhaustively")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (WienerError, CommandError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
