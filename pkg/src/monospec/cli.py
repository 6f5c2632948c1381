"""Command-line front end.

Exit codes: 0 success, 1 input error (parse failure, cap exceeded, bad flags),
2 integrity failure (independent routes disagree: a bug, never bad input).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import dot as dot_mod
from .congruence import sl_reflection
from .core import SUBSET_CAP, format_monoid_table, parse_monoid_table, render_set
from .errors import InputError, IntegrityError
from .presentation import parse_presentation, sl_of_presentation
from .semilattice import monotone_map, left_adjoint, right_adjoint
from .spectrum import (
    canonical_key,
    homs_to_I,
    primes_bruteforce,
    spec_monoid,
    spec_presentation,
    render_support,
    theta,
)
from .topology import format_opens, ideal_opens
from .verify import mutation_detected, run_all


def _load(path: str, kind: str | None):
    if kind is None:
        suffix = Path(path).suffix
        if suffix == ".mon":
            kind = "mon"
        elif suffix == ".pres":
            kind = "pres"
        else:
            raise InputError(f"cannot infer input kind from {path!r}; pass --kind")
    text = Path(path).read_text()
    if kind == "mon":
        return "mon", parse_monoid_table(text)
    return "pres", parse_presentation(text)


def _reflection(kind, obj, cap):
    if kind == "mon":
        L, _ = sl_reflection(obj)
        return L
    L, _ = sl_of_presentation(obj, cap=cap)
    return L


def cmd_spec(args) -> int:
    kind, obj = _load(args.input, args.kind)
    vias = args.via.split(",") if args.via else ["alpha"]
    if "all" in vias:
        vias = ["brute", "hom", "alpha"]
    results = {}
    if kind == "pres":
        P = obj
        L, _, S, supports = spec_presentation(P, cap=args.cap)
        labels = {p: render_support(P, s) for p, s in zip(S.points, supports)}
        if "alpha" in vias:
            results["alpha"] = list(S.points)
        if "brute" in vias:
            results["brute"] = list(primes_bruteforce(L.monoid, cap=args.cap).points)
        if "hom" in vias:
            results["hom"] = sorted((theta(f) for f in homs_to_I(L.monoid, cap=args.cap)),
                                    key=canonical_key)
        render = lambda p: labels.get(p, render_set(L.monoid, p))
    else:
        M = obj
        if "alpha" in vias:
            results["alpha"] = list(spec_monoid(M, cap=args.cap).points)
        if "brute" in vias:
            results["brute"] = list(primes_bruteforce(M, cap=args.cap).points)
        if "hom" in vias:
            results["hom"] = sorted((theta(f) for f in homs_to_I(M, cap=args.cap)),
                                    key=canonical_key)
        render = lambda p: render_set(M, p)
    if not results:
        raise InputError(f"no valid route in --via {args.via!r}")
    for via in ("brute", "hom", "alpha"):
        if via in results:
            pts = results[via]
            print(f"spec via {via}: {len(pts)} primes")
            for p in pts:
                print("  " + render(p))
    values = list(results.values())
    if len(values) > 1:
        agree = all(v == values[0] for v in values[1:])
        print(f"routes agree: {'yes' if agree else 'NO'}")
        if not agree:
            raise IntegrityError("independent spectrum routes disagree")
    return 0


def cmd_sl(args) -> int:
    kind, obj = _load(args.input, args.kind)
    if kind == "mon":
        L, q = sl_reflection(obj)
        print(format_monoid_table(L.monoid), end="")
        print("projection: " + " ".join(
            f"{obj.names[x]}->{L.names[q.images[x]]}" for x in obj.elements()))
    else:
        L, gens = sl_of_presentation(obj, cap=args.cap)
        print(format_monoid_table(L.monoid), end="")
        print("generators: " + " ".join(
            f"{g}->{L.names[i]}" for g, i in zip(obj.generators, gens)))
    return 0


def cmd_dot(args) -> int:
    kind, obj = _load(args.input, args.kind)
    L = _reflection(kind, obj, args.cap)
    if args.spec:
        from .semilattice import from_monoid
        from .spectrum import spectrum_monoid

        S = primes_bruteforce(L.monoid, cap=args.cap)
        L = from_monoid(spectrum_monoid(S))
        print(dot_mod.hasse_dot(L, graph_name="spec"), end="")
    else:
        print(dot_mod.hasse_dot(L), end="")
    return 0


def cmd_topology(args) -> int:
    kind, obj = _load(args.input, args.kind)
    L = _reflection(kind, obj, args.cap)
    T = ideal_opens(L, cap=args.cap)
    print(format_opens(T, names=L.names), end="")
    return 0


def cmd_adjoint(args) -> int:
    from .semilattice import from_monoid

    _, src = _load(args.source, "mon")
    _, tgt = _load(args.target, "mon")
    Ls, Lt = from_monoid(src), from_monoid(tgt)
    name_index = {n: i for i, n in enumerate(Lt.names)}
    try:
        images = [name_index[n] for n in args.images]
    except KeyError as e:
        raise InputError(f"unknown target element {e.args[0]!r}")
    f = monotone_map(Ls, Lt, images)
    g = left_adjoint(f) if args.left else right_adjoint(f)
    kind = "left" if args.left else "right"
    print(f"{kind} adjoint:")
    for y in g.source.elements():
        print(f"  {g.source.names[y]} -> {g.target.names[g.images[y]]}")
    return 0


def cmd_verify(args) -> int:
    if args.mutate:
        detected = mutation_detected(args.seed)
        print("mutation detected" if detected else "mutation NOT detected")
        return 0 if detected else 2
    results = run_all(seed=args.seed, quick=args.quick)
    all_ok = True
    for name, fails, total in results:
        status = "PASS" if fails == 0 else "FAIL"
        print(f"{status} {name} ({total - fails}/{total})")
        if fails:
            all_ok = False
    return 0 if all_ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monospec",
                                     description="Exact spectra of commutative monoids")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="input file (.mon table or .pres presentation)")
            p.add_argument("--kind", choices=["mon", "pres"], help="override extension inference")
        p.add_argument("--cap", type=int, default=SUBSET_CAP, help="size cap for enumerations")

    p = sub.add_parser("spec", help="compute the prime spectrum")
    add_common(p)
    p.add_argument("--via", default="alpha",
                   help="comma list of routes: brute, hom, alpha, all")
    p.set_defaults(func=cmd_spec)

    p = sub.add_parser("sl", help="idempotent reflection as a table")
    add_common(p)
    p.set_defaults(func=cmd_sl)

    p = sub.add_parser("dot", help="Hasse diagram as DOT")
    add_common(p)
    p.add_argument("--spec", action="store_true", help="diagram of the spectrum instead")
    p.add_argument("--hasse", action="store_true", help="diagram of the order (default)")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("topology", help="ideal opens of the reflection")
    add_common(p)
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("adjoint", help="adjoint of a semilattice map")
    p.add_argument("source", help=".mon file with an idempotent table")
    p.add_argument("target", help=".mon file with an idempotent table")
    p.add_argument("--images", nargs="+", required=True,
                   help="target element names, one per source element in order")
    p.add_argument("--left", action="store_true", help="left adjoint instead of right")
    p.add_argument("--cap", type=int, default=SUBSET_CAP)
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("verify", help="run the property suites over a seeded corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="smaller corpus")
    p.add_argument("--mutate", action="store_true",
                   help="sanity mode: inject a table mutation, expect detection")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except IntegrityError as e:
        print(f"integrity failure: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
