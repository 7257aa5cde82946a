"""Command-line front end.

Every subcommand writes deterministic, machine-readable output to stdout
and one-line diagnostics to stderr.  Exit codes: 0 success, 1 failed
--check, 2 parse or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bb, cup, generic_ideals, orders, triples, weights
from .staircases import enumerate_staircases
from .triples import Triple


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


# flags whose values may start with '-' (negative weights, '-' encodings);
# a following bare token is merged so `--lambda -3,1` parses
_VALUE_FLAGS = ("--lambda", "--u", "--v", "--w", "--t", "--t2", "--triple")


def _merge_value_flags(argv):
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _parse_pair(text, name):
    pieces = text.split(",")
    if len(pieces) != 2:
        raise ValueError(f"bad {name} {text!r}: expected 'a,b'")
    try:
        return (int(pieces[0]), int(pieces[1]))
    except ValueError:
        raise ValueError(f"bad {name} {text!r}: entries must be integers") from None


def _build_parser():
    parser = _Parser(prog="hilbcells")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cells")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="csv")

    p = sub.add_parser("betti")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("hasse")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", choices=("dominance", "mu", "nu", "lambda"), required=True)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--diff-against", choices=("dominance",), default=None)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("triple-hasse")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("pairing")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--format", choices=("ascii", "csv", "json"), default="ascii")

    p = sub.add_parser("cup")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--t2", required=True)

    p = sub.add_parser("generic-staircase")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--u", default=None)
    p.add_argument("--v", default=None)
    p.add_argument("--explicit", action="store_true")
    p.add_argument("--punctual", action="store_true")

    p = sub.add_parser("phi")
    p.add_argument("--w", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--triple", required=True)

    p = sub.add_parser("toric-bb")
    p.add_argument("--polytope", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _cmd_cells(args, out):
    items = triples.basis(args.n, args.k) if args.k is not None else triples.enumerate_triples(args.n)
    if args.format == "json":
        payload = [dict(t.to_json_obj(), degree=t.degree) for t in items]
        out.write(json.dumps(payload) + "\n")
    else:
        out.write("triple,degree\n")
        for t in items:
            out.write(f'"{t.encode()}",{t.degree}\n')
    return 0


def _cmd_betti(args, out):
    out.write(",".join(str(b) for b in triples.betti(args.n)) + "\n")
    return 0


def _cmd_hasse(args, out):
    lam = _parse_pair(args.lam, "lambda") if args.lam is not None else None
    if args.order == "lambda" and lam is None:
        raise ValueError("--order lambda requires --lambda")
    if args.diff_against is not None:
        if args.order == "dominance":
            raise ValueError("--diff-against needs a weight order")
        base = orders.dominance_covers(args.m)
        extra = orders.refinement_extra_edges(args.m, args.order, lam)
        if args.format == "dot":
            extras = tuple((a, b, args.order) for a, b in extra.edges)
            out.write(base.to_dot(extras=extras) + "\n")
        else:
            out.write(
                json.dumps(
                    {
                        "dominance": [[str(a), str(b)] for a, b in base.edges],
                        "extra": [[str(a), str(b)] for a, b in extra.edges],
                    }
                )
                + "\n"
            )
        return 0
    if args.order == "dominance":
        covers = orders.dominance_covers(args.m)
    else:
        covers = orders.xi_covers(args.m, args.order, lam)
    out.write((covers.to_dot() if args.format == "dot" else covers.to_json()) + "\n")
    return 0


def _cmd_triple_hasse(args, out):
    lam = _parse_pair(args.lam, "lambda")
    orders.check_lambda_weight(lam)
    carrier = triples.basis(args.n, args.k)
    covers = orders.cover_relations(
        carrier,
        lambda a, b: triples.triple_compare(lam, a, b) is orders.OrderResult.LESS,
    )
    out.write((covers.to_dot() if args.format == "dot" else covers.to_json()) + "\n")
    return 0


def _cmd_pairing(args, out):
    lam = _parse_pair(args.lam, "lambda")
    mask = cup.pairing_mask(args.n, args.k, lam)
    if args.format == "csv":
        out.write(mask.to_csv() + "\n")
    elif args.format == "json":
        out.write(mask.to_json() + "\n")
    else:
        for i, t in enumerate(mask.rows):
            out.write(f"# row {i}: {t.encode()}\n")
        out.write(mask.to_ascii() + "\n")
    if args.check:
        verdict = cup.check_upper_triangular(mask)
        out.write(verdict.describe() + "\n")
        if not verdict.ok:
            return 1
    return 0


def _cmd_cup(args, out):
    t = Triple.parse(args.t)
    u = Triple.parse(args.t2)
    if t.total != args.n or u.total != args.n:
        raise ValueError(
            f"triple sizes {t.total} and {u.total} do not match --n {args.n}"
        )
    out.write(("MAY_BE_NONZERO" if cup.may_be_nonzero(t, u) else "MUST_VANISH") + "\n")
    return 0


def _cmd_generic_staircase(args, out):
    if args.punctual:
        if args.v is None:
            raise ValueError("--punctual requires --v")
        v = _parse_pair(args.v, "weight")
        out.write(generic_ideals.generic_punctual(v, args.n).encode() + "\n")
        return 0
    if args.u is None:
        raise ValueError("generic-staircase requires --u (or --punctual with --v)")
    u = _parse_pair(args.u, "weight")
    if args.explicit:
        result = generic_ideals.generic_staircase_explicit(u, args.n)
    else:
        result = generic_ideals.generic_staircase(u, args.n)
    out.write(result.encode() + "\n")
    return 0


def _cmd_phi(args, out):
    try:
        w = weights.Weight3.parse(args.w)
    except ValueError as exc:
        raise ValueError(f"bad weight {args.w!r}: {exc}") from None
    t = Triple.parse(args.triple)
    out.write(str(weights.phi(w, args.d, t)) + "\n")
    return 0


def _cmd_toric_bb(args, out):
    with open(args.polytope, "r", encoding="utf-8") as handle:
        polygon = bb.LatticePolygon.from_json(handle.read())
    lam = _parse_pair(args.lam, "lambda")
    table = bb.toric_phi(polygon, lam)
    order = table.sorted_by_phi()
    mask = table.allowed_mask()
    source, sink = bb.source_and_sink(polygon, lam)
    if args.format == "json":
        payload = {
            "table": [{"vertex": list(v), "phi": p} for v, p in order],
            "mask": [[1 if x else 0 for x in row] for row in mask],
            "source": list(source),
            "sink": list(sink),
        }
        out.write(json.dumps(payload) + "\n")
        return 0
    for v, p in order:
        out.write(f"{v[0]},{v[1]}\t{p}\n")
    for row in mask:
        out.write("".join("1" if x else "0" for x in row) + "\n")
    out.write(f"source: {source[0]},{source[1]}\n")
    out.write(f"sink: {sink[0]},{sink[1]}\n")
    return 0


_COMMANDS = {
    "cells": _cmd_cells,
    "betti": _cmd_betti,
    "hasse": _cmd_hasse,
    "triple-hasse": _cmd_triple_hasse,
    "pairing": _cmd_pairing,
    "cup": _cmd_cup,
    "generic-staircase": _cmd_generic_staircase,
    "phi": _cmd_phi,
    "toric-bb": _cmd_toric_bb,
}


def run(argv, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_value_flags(list(argv)))
        return _COMMANDS[args.command](args, out)
    except _CliError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
