"""Command-line front end: ``mixedmoore <subcommand> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 I/O error.
"""
from __future__ import annotations

import argparse
import sys

from . import io
from .construction import biaffine, g_qt, kautz_mixed
from .errors import MalformedFile, MixedMooreError
from .gf import field_new, shift_sets
from .graph import diameter, is_mixed_moore, is_mixed_regular
from .moore import best_upper_bound, feasibility_table, format_table, table_csv
from .symmetry import orbits, refine, transitivity_certificate

OK, MISMATCH, INVALID, IO_ERROR = 0, 1, 2, 3


def _fmt(xs):
    return "{" + ",".join(str(x) for x in xs) + "}"


def _add_family_args(p, required=True):
    p.add_argument("--family", choices=["gqt", "biaffine", "kautz"], required=required)
    p.add_argument("--q", type=int, help="field order (gqt, biaffine)")
    p.add_argument("--t", type=int, default=0, help="shift parameter (gqt)")
    p.add_argument("--d", type=int, help="Kautz degree (kautz)")


def _build(args):
    """Returns (graph, list of summary lines)."""
    if args.family == "kautz":
        if args.d is None:
            raise SystemExit("error: --d is required for --family kautz")
        return kautz_mixed(args.d), [f"family=kautz d={args.d}"]
    if args.q is None:
        raise SystemExit(f"error: --q is required for --family {args.family}")
    F = field_new(args.q)
    if args.family == "biaffine":
        return biaffine(F), [f"family=biaffine q={F.q} p={F.p} n={F.n} modulus={F.modulus}"]
    sets = shift_sets(F, args.t)
    info = [
        f"family=gqt q={F.q} t={args.t} p={F.p} n={F.n} modulus={F.modulus}",
        f"M={_fmt(sets.M)} T1={_fmt(sets.T1)} T2={_fmt(sets.T2)} S={_fmt(sets.S)} -S={_fmt(sets.negS)}",
    ]
    return g_qt(F, args.t, sets), info


def _summary(G):
    reg = is_mixed_regular(G)
    degs = f"r={reg[1]} z={reg[0]}" if reg else "not mixed-regular"
    return f"order={G.order} {degs} edges={len(G.edges)} arcs={len(G.arcs)}"


def _render(G, fmt):
    return io.to_dot(G) if fmt == "dot" else io.dumps(G)


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_gen(args):
    G, info = _build(args)
    text = _render(G, args.format)
    # with no --out the graph itself goes to stdout, so the summary moves to stderr
    report = sys.stdout if args.out else sys.stderr
    _emit(text, args.out)
    for line in info + [_summary(G)]:
        print(line, file=report)
    return OK


def cmd_verify(args):
    G = io.read_mg1(args.file)
    reg = is_mixed_regular(G)
    diam = diameter(G)
    moore = is_mixed_moore(G)
    disjoint = not any((i, j) in G.arcs or (j, i) in G.arcs for i, j in G.edges)
    print(f"order={G.order}")
    print(f"mixed-regular={'yes' if reg else 'no'}" + (f" z={reg[0]} r={reg[1]}" if reg else ""))
    print(f"diameter={diam}")
    print(f"edges/arcs disjoint={'yes' if disjoint else 'no'}")
    print(f"mixed Moore={'yes' if moore else 'no'} (bound={moore.bound})")

    failures = []
    if not disjoint:
        failures.append("edges and arcs overlap")
    expected = [
        ("diameter", args.expect_diameter, diam),
        ("order", args.expect_order, G.order),
        ("z", args.expect_z, reg[0] if reg else None),
        ("r", args.expect_r, reg[1] if reg else None),
    ]
    for name, want, got in expected:
        if want is not None and want != got:
            failures.append(f"{name}: expected {want}, got {got}")
    if args.expect_moore and not moore:
        failures.append("not a mixed Moore graph")
    for f in failures:
        print(f"FAIL {f}")
    print("PASS" if not failures else f"{len(failures)} check(s) failed")
    return OK if not failures else MISMATCH


def cmd_bounds(args):
    rep = best_upper_bound(args.z, args.r)
    if args.csv:
        print("z,r,moore,after_bosak,after_parity")
        print(f"{rep.z},{rep.r},{rep.moore},{rep.after_bosak},{rep.after_parity}")
    else:
        print(rep.chain())
        for step in rep.steps:
            print(f"  {step}")
    return OK


def cmd_table(args):
    rows = feasibility_table(args.max_n)
    print(table_csv(rows) if args.format == "csv" else format_table(rows), end="" if args.format == "csv" else "\n")
    return OK


def cmd_certify(args):
    F = field_new(args.q)
    G = g_qt(F, 0)
    cert = transitivity_certificate(F, G)
    lines = [f"{w} {f.tag}" for w, f in cert]
    if args.out:
        _emit("\n".join(lines) + "\n", args.out)
    elif args.verbose:
        print("\n".join(lines))
    print(f"{len(cert)}/{G.order} targets certified")
    return OK


def cmd_orbits(args):
    if args.input:
        G = io.read_mg1(args.input)
    elif args.family:
        G, _ = _build(args)
    else:
        raise SystemExit("error: give --in FILE or --family ...")
    cells = refine(G)
    print(f"refinement cells: {len(cells)} sizes={[len(c) for c in cells]}")
    if args.exact:
        orb = orbits(G)
        print(f"orbits: {len(orb)} sizes={[len(o) for o in orb]}")
        print("vertex-transitive" if len(orb) == 1 else "not vertex-transitive")
    return OK


def cmd_export(args):
    G = io.read_mg1(args.input)
    _emit(_render(G, args.format), args.out)
    return OK


def build_parser():
    parser = argparse.ArgumentParser(prog="mixedmoore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="construct a graph")
    _add_family_args(p)
    p.add_argument("--format", choices=["mg1", "dot"], default="mg1")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="recompute the invariants of an mg1 file")
    p.add_argument("file")
    p.add_argument("--expect-diameter", type=int)
    p.add_argument("--expect-z", type=int)
    p.add_argument("--expect-r", type=int)
    p.add_argument("--expect-order", type=int)
    p.add_argument("--expect-moore", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="Moore / Bosak / parity bound chain")
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="feasible mixed Moore parameters")
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("certify", help="vertex-transitivity certificate for G_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("orbits", help="refinement cells and (optionally) exact orbits")
    _add_family_args(p, required=False)
    p.add_argument("--in", dest="input")
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("export", help="convert an mg1 file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=["mg1", "dot"], default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        print(exc, file=sys.stderr)
        return INVALID
    except MalformedFile as exc:
        print(f"error: MalformedFile: {exc}", file=sys.stderr)
        return INVALID
    except MixedMooreError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
