"""
Command line front end.

    berge-coloring gen clique:5x3 | berge-coloring color --algo dfs --k 5

Exit codes: 0 valid / found, 1 invalid / absent, 2 usage or parse error,
3 search budget exceeded.
"""
import argparse
from concurrent.futures import ThreadPoolExecutor
import json
import logging
import math
import sys
import time
from typing import List, NamedTuple, Optional, Tuple

from berge_coloring.bounds import bound_for, path_bound
from berge_coloring.budget import Budget
from berge_coloring.coloring import MODES, STRONG, validate
from berge_coloring.colorers import BergePathColorer, ExactColorer, PeelColorer
from berge_coloring.constructions import (
    complete_r_graph,
    disjoint_union,
    expansion,
    fano,
    projective_plane,
    random_hypergraph,
    skplus_lower_bound,
    steiner_triple,
    suspension,
)
from berge_coloring.detect import (
    contains_berge,
    contains_berge_cycle,
    contains_berge_path,
    verify_witness,
)
from berge_coloring.exact import exact_strong_chromatic
from berge_coloring.exceptions import (
    BergeColoringFatalException,
    BergePatternFound,
    BudgetExceededError,
    CertificateException,
    UnsupportedParameterError,
    UsageException,
)
from berge_coloring.formats import (
    dumps_coloring,
    dumps_witness,
    loads_coloring,
    loads_witness,
    read_hgr,
    read_text,
    sniff,
    write_hgr,
    write_text,
)
from berge_coloring.hypergraph import Hypergraph
from berge_coloring.oracles import run_oracle
from berge_coloring.patterns import parse_pattern
from berge_coloring.version import __version__

logger = logging.getLogger("berge_coloring")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class RunManifest(NamedTuple):
    subcommand: str
    source: str
    params: dict
    outputs: Tuple[str, ...]
    exit_status: int

    def header(self) -> str:
        return json.dumps(self._asdict(), sort_keys=True)


def _manifest(args: argparse.Namespace, source: str, exit_status: int) -> RunManifest:
    params = {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in ("func", "command", "input", "spec", "output", "verbose")
        and value is not None
    }
    output = getattr(args, "output", None)
    outputs = (output,) if output not in (None, "-") else ("-",)
    return RunManifest(args.command, source, params, outputs, exit_status)


def _budget_options(args: argparse.Namespace) -> Optional[dict]:
    if args.max_nodes is None:
        return None
    return {"max_nodes": args.max_nodes}


def build_from_spec(spec: str, seed: int = 0) -> Hypergraph:
    """
    Builds a hypergraph from a generator spec:

    clique:NxR[*C]        C disjoint copies of the complete R-graph on N
    fano                  the Fano plane
    plane:q               projective plane of prime order q
    skplus:q              the S_k^+-free construction over plane:q
    sts:n                 Bose Steiner triple system, n = 3 mod 6
    expansion:PATTERN@r   r-expansion of a pattern graph
    suspension:PATTERN@r  r-suspension of a pattern graph
    random:n,m,r[,uniform]

    >>> build_from_spec("clique:5x3*2").m
    20

    :raises berge_coloring.exceptions.UnsupportedParameterError: For specs
        that can't be understood
    """
    name, _, params = spec.strip().partition(":")
    try:
        if name == "clique":
            shape, _, copies = params.partition("*")
            n, r = (int(x) for x in shape.split("x"))
            one = complete_r_graph(n, r)
            return disjoint_union([one] * int(copies)) if copies else one
        if name == "fano" and not params:
            return fano()
        if name == "plane":
            return projective_plane(int(params)).to_hypergraph()
        if name == "skplus":
            return skplus_lower_bound(int(params)).hypergraph
        if name == "sts":
            return steiner_triple(int(params))
        if name in ("expansion", "suspension"):
            pattern, _, r = params.rpartition("@")
            build = expansion if name == "expansion" else suspension
            return build(parse_pattern(pattern), int(r))
        if name == "random":
            fields = params.split(",")
            uniform = fields[3:] == ["uniform"]
            if len(fields) != 3 and not uniform:
                raise ValueError(params)
            n, m, r = (int(x) for x in fields[:3])
            return random_hypergraph(n, m, r, uniform=uniform, seed=seed)
    except ValueError:
        raise UnsupportedParameterError(f"Bad generator spec {spec!r}")
    raise UnsupportedParameterError(f"Unknown generator spec {spec!r}")


def cmd_gen(args: argparse.Namespace) -> int:
    h = build_from_spec(args.spec, args.seed)
    manifest = _manifest(args, args.spec, EXIT_OK)
    comments = [manifest.header(), f"generated by {args.spec} (seed {args.seed})"]
    write_hgr(h, args.output, comments)
    logger.info(f"Generated {h} from {args.spec}")
    return EXIT_OK


def _colorer(args: argparse.Namespace):
    options = _budget_options(args)
    if args.algo == "dfs":
        if args.k is None:
            raise UsageException("--algo dfs needs --k")
        return BergePathColorer(args.k, args.mode, budget_options=options)
    if args.algo == "peel":
        if args.mode != STRONG:
            raise UsageException("--algo peel produces strong colorings only")
        if args.threshold is None:
            raise UsageException("--algo peel needs --threshold")
        return PeelColorer(args.threshold, args.pattern, budget_options=options)
    return ExactColorer(args.mode, budget_options=options)


def cmd_color(args: argparse.Namespace) -> int:
    h = read_hgr(args.input)
    colorer = _colorer(args)
    try:
        coloring = colorer.color(h)
    except BergePatternFound as e:
        print(f"not colorable as assumed: {e}", file=sys.stderr)
        if args.witness:
            manifest = _manifest(args, args.input, EXIT_NEGATIVE)
            write_text(
                args.witness, dumps_witness(e.witness, e.pattern, [manifest.header()])
            )
        return EXIT_NEGATIVE
    except CertificateException as e:
        print(f"not colorable as assumed: {e}", file=sys.stderr)
        return EXIT_NEGATIVE

    manifest = _manifest(args, args.input, EXIT_OK)
    write_text(args.output, dumps_coloring(coloring, [manifest.header()]))
    print(
        f"palette {coloring.palette_size} ({coloring.mode}, {args.algo}) on {h}",
        file=sys.stderr,
    )
    return EXIT_OK


def _detect(h: Hypergraph, spec: str, budget: Budget):
    name, _, param = spec.strip().partition(":")
    if name == "path":
        return contains_berge_path(h, int(param), budget)
    if name == "cycle":
        return contains_berge_cycle(h, int(param), budget)
    return contains_berge(h, parse_pattern(spec), budget)


def cmd_detect(args: argparse.Namespace) -> int:
    h = read_hgr(args.input)
    parse_pattern(args.pattern)
    witness = _detect(h, args.pattern, Budget(options=_budget_options(args)))
    if witness is None:
        print("absent")
        return EXIT_NEGATIVE

    manifest = _manifest(args, args.input, EXIT_OK)
    text = dumps_witness(witness, args.pattern, [manifest.header()])
    write_text(args.output, text)
    return EXIT_OK


def _verify_coloring(args, h: Hypergraph, text: str) -> int:
    coloring = loads_coloring(text)
    result = validate(h, coloring)
    if not result:
        print(f"invalid: hyperedge {result.edge_index} {list(result.edge)}")
        return EXIT_NEGATIVE
    if args.palette is not None and coloring.palette_size > args.palette:
        print(f"invalid: {coloring.palette_size} colors exceed {args.palette}")
        return EXIT_NEGATIVE
    if args.oracle:
        report = run_oracle("chromatic", h, mode=coloring.mode)
        print(
            f"oracle: optimum {report.value}, {report.enumerated} partitions "
            f"in {report.elapsed:.3f}s"
        )
    print(f"valid {coloring.mode} coloring with {coloring.palette_size} colors")
    return EXIT_OK


def _verify_witness(args, h: Hypergraph, text: str) -> int:
    parsed = loads_witness(text)
    spec = args.pattern or parsed.pattern
    if spec is None:
        raise UsageException("The witness names no pattern; pass --pattern")
    f = parse_pattern(spec)
    if args.oracle:
        report = run_oracle("berge", h, pattern=f)
        print(
            f"oracle: containment {report.value}, {report.enumerated} "
            f"assignments in {report.elapsed:.3f}s"
        )
    if not verify_witness(h, f, parsed.witness):
        print(f"invalid: not a Berge copy of {spec}")
        return EXIT_NEGATIVE
    print(f"valid Berge copy of {spec}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    h = read_hgr(args.input)
    text = read_text(args.certificate)
    kind = sniff(text)
    if kind == "col":
        return _verify_coloring(args, h, text)
    if kind == "bw":
        return _verify_witness(args, h, text)
    raise UsageException(f"{args.certificate} is neither a coloring nor a witness")


def _bench_instance(family: str, size: int, k: int, mode: str) -> str:
    name, _, params = family.partition(":")
    if name != "clique":
        raise UsageException(f"Unknown bench family {family!r}")
    n, r = (int(x) for x in params.split("x"))
    copies = max(1, size // (n + math.comb(n, r)))
    h = disjoint_union([complete_r_graph(n, r)] * copies)

    start = time.perf_counter()
    coloring = BergePathColorer(k if k is not None else n, mode).color(h)
    elapsed = time.perf_counter() - start
    return f"{h.n + h.m}\t{h.n}\t{h.m}\t{coloring.palette_size}\t{elapsed:.6f}\n"


def cmd_bench(args: argparse.Namespace) -> int:
    """Colors disjoint clique families of growing size, one row per size."""
    sizes = [int(s) for s in args.sizes.split(",")]
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        rows = list(
            pool.map(
                lambda size: _bench_instance(args.family, size, args.k, args.mode),
                sizes,
            )
        )
    manifest = _manifest(args, args.family, EXIT_OK)
    header = f"# {manifest.header()}\nsize\tn\tm\tpalette\tseconds\n"
    write_text(args.output, header + "".join(rows))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    b = bound_for(args.spec, args.r, args.mode)
    lower = "" if b.lower is None else b.lower
    print("pattern\tr\tmode\tlower\tupper")
    print(f"{b.pattern}\t{b.r}\t{b.mode}\t{lower}\t{b.upper}")
    return EXIT_OK


def explore(
    n: int,
    m: int,
    r: int,
    k: int,
    samples: int,
    seed: int = 0,
    max_nodes: int = None,
) -> Tuple[int, int]:
    """
    Samples random hypergraphs with edges of size 2..r and returns how many
    had no Berge path of k edges and the largest strong chromatic number
    among those.
    """
    free = 0
    worst = 0
    for i in range(samples):
        h = random_hypergraph(n, m, r, seed=seed + i)
        budget = Budget(options={"max_nodes": max_nodes} if max_nodes else None)
        if contains_berge_path(h, k, budget) is not None:
            continue
        free += 1
        worst = max(worst, exact_strong_chromatic(h, budget).value)
    return free, worst


def cmd_explore(args: argparse.Namespace) -> int:
    rows: List[str] = []
    for k in (int(x) for x in args.k.split(",")):
        free, worst = explore(
            args.n, args.m, args.r, k, args.samples, args.seed, args.max_nodes
        )
        rows.append(
            f"{k}\t{args.samples}\t{free}\t{worst}\t{path_bound(k, args.r)}\n"
        )
    manifest = _manifest(args, f"random:{args.n},{args.m},{args.r}", EXIT_OK)
    header = f"# {manifest.header()}\nk\tsamples\tfree\tmax_strong\tproved_bound\n"
    write_text(args.output, header + "".join(rows))
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berge-coloring",
        description="Colorings and Berge patterns of hypergraphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="write a generated hypergraph")
    gen.add_argument("spec")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", default="-")
    gen.set_defaults(func=cmd_gen)

    color = commands.add_parser("color", help="color a hypergraph")
    color.add_argument("input", nargs="?", default="-")
    color.add_argument("--mode", choices=MODES, default=STRONG)
    color.add_argument("--algo", choices=("dfs", "peel", "exact"), default="dfs")
    color.add_argument("--k", type=int)
    color.add_argument("--threshold", type=int)
    color.add_argument("--pattern", help="pattern to certify a failed peel")
    color.add_argument("--witness", help="where to write a failure witness")
    color.add_argument("--max-nodes", type=int)
    color.add_argument("-o", "--output", default="-")
    color.set_defaults(func=cmd_color)

    detect = commands.add_parser("detect", help="look for a Berge copy")
    detect.add_argument("input", nargs="?", default="-")
    detect.add_argument("--pattern", required=True)
    detect.add_argument("--max-nodes", type=int)
    detect.add_argument("-o", "--output", default="-")
    detect.set_defaults(func=cmd_detect)

    verify = commands.add_parser("verify", help="check a coloring or witness")
    verify.add_argument("input")
    verify.add_argument("certificate")
    verify.add_argument("--pattern", help="overrides the witness header")
    verify.add_argument("--palette", type=int, help="largest palette allowed")
    verify.add_argument("--oracle", action="store_true")
    verify.set_defaults(func=cmd_verify)

    bench = commands.add_parser("bench", help="time the DFS colorer")
    bench.add_argument("family", help="clique:NxR")
    bench.add_argument("--sizes", default="10000,100000,1000000")
    bench.add_argument("--k", type=int)
    bench.add_argument("--mode", choices=MODES, default=STRONG)
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("-o", "--output", default="-")
    bench.set_defaults(func=cmd_bench)

    bound = commands.add_parser("bound", help="print a proved bound")
    bound.add_argument("spec")
    bound.add_argument("--r", type=int, default=3)
    bound.add_argument("--mode", choices=MODES, default=STRONG)
    bound.set_defaults(func=cmd_bound)

    explore_ = commands.add_parser("explore", help="sample Berge-path-free inputs")
    explore_.add_argument("--n", type=int, default=8)
    explore_.add_argument("--m", type=int, default=8)
    explore_.add_argument("--r", type=int, default=4)
    explore_.add_argument("--k", default="3,4")
    explore_.add_argument("--samples", type=int, default=50)
    explore_.add_argument("--seed", type=int, default=0)
    explore_.add_argument("--max-nodes", type=int)
    explore_.add_argument("-o", "--output", default="-")
    explore_.set_defaults(func=cmd_explore)

    return parser


def main(argv: List[str] = None) -> int:
    args = _parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.func(args)
    except UsageException as e:
        logger.error(str(e))
        return EXIT_USAGE
    except BudgetExceededError as e:
        logger.error(str(e))
        return EXIT_BUDGET
    except BergeColoringFatalException as e:
        logger.error(str(e))
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
