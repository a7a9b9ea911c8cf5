"""Command-line entry point.

Exit status: 0 for success or a positive verdict, 1 for a negative verdict,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from . import generators
from .atoms import (
    C4,
    P4,
    TRIANGLE,
    certify_lower_bound,
    classify_tr3,
    dump_catalog,
    generate_catalog,
    min_catalog,
)
from .chain import NotChainGraphError, dump_certificate, chain_transitivity
from .exact import (
    PartitionError,
    dump_partition,
    grundy_exact,
    load_partition,
    transitivity_exact,
    validate_transitive,
)
from .graph import GraphFormatError, dump_graph, read_graph, write_graph
from .isomorphism import find_subgraph
from .reduction import (
    ReductionError,
    build_elimination_order,
    build_reduction,
    coloring_to_partition,
    dump_edge_order,
    dump_labels,
    load_edge_order,
    verify_elimination,
)

OK, NEGATIVE, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _print_blocks(p) -> None:
    for i, block in enumerate(p.blocks, start=1):
        print(f"V{i} = " + " ".join(map(str, block)))


def _emit_witness(args, p) -> None:
    _print_blocks(p)
    if getattr(args, "out", None):
        _write(args.out, dump_partition(p))
        print(f"witness = {args.out}")


def cmd_exact(args) -> int:
    g = read_graph(args.graph)
    res = transitivity_exact(g, limit=args.limit, bound=args.bound)
    print(f"Tr = {res.value}")
    _emit_witness(args, res.witness)
    return OK


def cmd_grundy(args) -> int:
    g = read_graph(args.graph)
    res = grundy_exact(g, bound=args.bound)
    print(f"Grundy = {res.value}")
    _emit_witness(args, res.witness)
    return OK


def cmd_chain(args) -> int:
    g = read_graph(args.graph)
    try:
        res = chain_transitivity(g)
    except NotChainGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    print(f"Tr = {res.value}")
    cert = res.certificate
    if cert is None:
        print("certificate = none")
    else:
        print(f"t = {cert.t}")
        print(f"kind = {cert.kind.value}")
        print("X_t = " + " ".join(map(str, cert.x_block)))
        print("Y_t = " + " ".join(map(str, cert.y_block)))
        if args.cert:
            _write(args.cert, dump_certificate(cert))
            print(f"certificate = {args.cert}")
    _emit_witness(args, res.witness)
    return OK


def cmd_atoms_gen(args) -> int:
    cat = generate_catalog(args.t, bound=args.bound)
    small = min_catalog(cat)
    os.makedirs(args.outdir, exist_ok=True)
    path = os.path.join(args.outdir, f"atoms{args.t}.txt")
    min_path = os.path.join(args.outdir, f"atoms{args.t}_min.txt")
    _write(path, dump_catalog(cat))
    _write(min_path, dump_catalog(small))
    print(f"count = {len(cat)}")
    print(f"min_count = {len(small)}")
    print(f"file = {path}")
    print(f"min_file = {min_path}")
    return OK


def cmd_atoms_check(args) -> int:
    g = read_graph(args.graph)
    if args.induced:
        if args.t != 3:
            print("error: --induced applies to t = 3 only", file=sys.stderr)
            return USAGE
        for name, h in (("K3", TRIANGLE), ("P4", P4), ("C4", C4)):
            emb = find_subgraph(h, g, induced=True)
            if emb is not None:
                print("contains t-atom: yes")
                print(f"induced pattern = {name}")
                print("embedding = " + " ".join(map(str, emb)))
                return OK
        print("contains t-atom: no")
        return NEGATIVE
    cert = certify_lower_bound(g, args.t, bound=args.bound)
    if cert is None:
        print("contains t-atom: no")
        return NEGATIVE
    print("contains t-atom: yes")
    atom = cert.atom
    print(f"atom = {atom.graph.n} " + " ".join(f"{u}-{v}" for u, v in atom.graph.edges()))
    print("embedding = " + " ".join(map(str, cert.embedding)))
    _emit_witness(args, cert.partition)
    return OK


def cmd_classify(args) -> int:
    g = read_graph(args.graph)
    print(classify_tr3(g, induced=args.induced))
    return OK


def _load_coloring(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split()]
    except ValueError:
        raise ReductionError("malformed coloring file") from None


def cmd_reduce(args) -> int:
    g = read_graph(args.graph)
    inst = build_reduction(g)
    os.makedirs(args.outdir, exist_ok=True)
    gp_path = os.path.join(args.outdir, "gprime.el")
    write_graph(inst.g_prime, gp_path)
    _write(os.path.join(args.outdir, "labels.txt"), dump_labels(inst))
    _write(os.path.join(args.outdir, "peo.txt"), dump_edge_order(build_elimination_order(inst)))
    print(f"vertices = {inst.g_prime.n}")
    print(f"edges = {inst.g_prime.m}")
    print(f"k = {inst.k}")
    if args.coloring:
        p = coloring_to_partition(inst, _load_coloring(_read(args.coloring)))
        part_path = os.path.join(args.outdir, "partition.txt")
        _write(part_path, dump_partition(p))
        print(f"witness = {part_path}")
    return OK


def cmd_validate(args) -> int:
    g = read_graph(args.graph)
    verdict = validate_transitive(g, load_partition(_read(args.partition)))
    if verdict:
        print("VALID")
        return OK
    i, j, v = verdict.violation
    print(f"INVALID {i} {j} {v}")
    return NEGATIVE


def cmd_peo_verify(args) -> int:
    g = read_graph(args.graph)
    verdict = verify_elimination(g, load_edge_order(_read(args.order)))
    if verdict:
        print("PEO VALID")
        return OK
    print(f"PEO INVALID {verdict.index} {verdict.reason}")
    return NEGATIVE


GEN_KINDS = {
    "gnp": (2, lambda a, rng: generators.gnp(int(a[0]), float(a[1]), rng)),
    "tree": (1, lambda a, rng: generators.random_tree(int(a[0]), rng)),
    "chain": (2, lambda a, rng: generators.random_chain_graph(int(a[0]), int(a[1]), rng)),
    "complete": (1, lambda a, rng: generators.complete(int(a[0]))),
    "path": (1, lambda a, rng: generators.path(int(a[0]))),
    "cycle": (1, lambda a, rng: generators.cycle(int(a[0]))),
    "biclique": (2, lambda a, rng: generators.complete_bipartite(int(a[0]), int(a[1]))),
    "biclique-minus": (1, lambda a, rng: generators.biclique_minus_edge(int(a[0]))),
}


def cmd_gen(args) -> int:
    arity, make = GEN_KINDS[args.kind]
    if len(args.params) != arity:
        print(f"error: {args.kind} takes {arity} parameter(s)", file=sys.stderr)
        return USAGE
    g = make(args.params, random.Random(args.seed))
    if args.out:
        write_graph(g, args.out)
    else:
        sys.stdout.write(dump_graph(g))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="transitivity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("exact", help="exact transitivity by branch and bound")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=None, help="cap on the number of blocks")
    p.add_argument("--bound", type=int, default=16, help="maximum vertex count")
    p.add_argument("--out", help="write the witness partition here")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("grundy", help="exact Grundy number")
    p.add_argument("graph")
    p.add_argument("--bound", type=int, default=16, help="maximum vertex count")
    p.add_argument("--out")
    p.set_defaults(func=cmd_grundy)

    p = sub.add_parser("chain", help="linear-time transitivity of a bipartite chain graph")
    p.add_argument("graph")
    p.add_argument("--out")
    p.add_argument("--cert", help="write the biclique certificate here")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("atoms-gen", help="write the t-atom catalog and its minimal subset")
    p.add_argument("t", type=int)
    p.add_argument("outdir")
    p.add_argument("--bound", type=int, default=5, help="largest t accepted")
    p.set_defaults(func=cmd_atoms_gen)

    p = sub.add_parser("atoms-check", help="test whether the graph contains a t-atom")
    p.add_argument("graph")
    p.add_argument("t", type=int)
    p.add_argument("--bound", type=int, default=5, help="largest t accepted")
    p.add_argument("--induced", action="store_true", help="t = 3 only: induced K3/P4/C4 screening")
    p.add_argument("--out")
    p.set_defaults(func=cmd_atoms_check)

    p = sub.add_parser("classify", help="Tr<3, Tr=3 or Tr>=4 by subgraph containment")
    p.add_argument("graph")
    p.add_argument("--induced", action="store_true", help="use induced K3/P4/C4 for the Tr>=3 test")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", help="build the 3-coloring reduction instance")
    p.add_argument("graph")
    p.add_argument("outdir")
    p.add_argument("--coloring", help="file with one color (1-3) per source vertex")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("validate", help="check a transitive partition")
    p.add_argument("graph")
    p.add_argument("partition")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("peo-verify", help="check a perfect edge elimination ordering")
    p.add_argument("graph")
    p.add_argument("order")
    p.set_defaults(func=cmd_peo_verify)

    p = sub.add_parser("gen", help="write a named or seeded random graph")
    p.add_argument("kind", choices=sorted(GEN_KINDS))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, PartitionError, ReductionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
