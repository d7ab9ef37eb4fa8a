"""Command line front end.

Subcommands: afunction, rs, domino, hollow, gkdim, assocvar, sweep.
Output is plain text by default or JSON with ``--format json``; JSON
objects carry ``input``, ``result`` and ``version`` keys and keep
rationals exact as strings like ``"31/10"``.  ``--batch FILE`` reads one
payload per line and emits one JSON object per line in input order.

Exit codes: 0 success, 2 usage error (bad flags, unparseable payload,
arity mismatch), 3 domain error (e.g. not a Harish-Chandra weight),
surfaced with a machine-readable ``error`` field in JSON mode.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .afunction import a_value, a_value_symbol
from .domino import hollow, pq_tableaux
from .gkdim import gk_report, parse_weight
from .hermitian import FAMILIES, HermitianGroup, is_hc_weight, orbit_index
from .signed_perms import group_elements, mirror_left, mirror_right, parse_window
from .tableaux import rs_insert

USAGE_EXIT = 2
DOMAIN_EXIT = 3


def _cell_width() -> int:
    try:
        return int(os.environ.get("WEYLGK_WIDTH", "0"))
    except ValueError:
        return 0


def _run_afunction(args, w):
    value = a_value(args.type, w)
    result = {"a": value}
    if args.type in ("B", "C", "D"):
        result["a_symbol"] = a_value_symbol(args.type, w)
    return {"type": args.type, "window": list(w.window)}, result, str(value)


def _run_rs(args, seq):
    if args.mirror == "left":
        seq = mirror_left(seq)
    elif args.mirror == "right":
        seq = mirror_right(seq)
    tab = rs_insert(seq)
    inp = {"sequence": [str(v) for v in seq], "mirror": args.mirror}
    result = {
        "rows": [[str(v) for v in row] for row in tab.rows],
        "shape": list(tab.shape.parts),
    }
    text = tab.render() + "\nshape: " + ",".join(str(p) for p in tab.shape.parts)
    return inp, result, text


def _run_domino(args, w):
    p, q = pq_tableaux(w.window)
    width = _cell_width()
    inp = {"window": list(w.window)}
    result = {
        "p": {str(lbl): [list(c) for c in p.domino(lbl)] for lbl in p.labels()},
        "q": {str(lbl): [list(c) for c in q.domino(lbl)] for lbl in q.labels()},
        "shape": list(p.shape.parts),
    }
    text = (
        "P:\n" + p.render(width) + "\nQ:\n" + q.render(width)
        + "\nshape: " + ",".join(str(v) for v in p.shape.parts)
    )
    return inp, result, text


def _run_hollow(args, w):
    h = hollow(pq_tableaux(w.window)[0])
    inp = {"window": list(w.window)}
    result = {"cells": [[r, c, lbl] for (r, c), lbl in h.cells.items()]}
    return inp, result, h.render(_cell_width())


def _run_gkdim(args, lam):
    report = gk_report(args.type, lam)
    inp = {"type": args.type, "weight": [str(v) for v in lam]}
    return inp, report, str(report["gkdim"])


def _run_assocvar(args, lam):
    group = args.hermitian_group
    inp = {"group": group.label, "weight": [str(v) for v in lam]}
    if len(lam) != group.weight_length:
        raise UsageError(
            f"{group.label} takes {group.weight_length} coordinates, got {len(lam)}"
        )
    if not is_hc_weight(group, lam):
        raise DomainError("not a Harish-Chandra weight", inp, {"is_hc": False})
    res = orbit_index(group, lam)
    result = {
        "is_hc": True,
        "k": res.k,
        "orbit_dim": res.orbit_dim,
        "gkdim": res.gk_dimension,
    }
    return inp, result, f"k={res.k} orbit_dim={res.orbit_dim} gkdim={res.gk_dimension}"


class UsageError(Exception):
    pass


class DomainError(Exception):
    def __init__(self, message, inp=None, extra=None):
        super().__init__(message)
        self.inp = inp or {}
        self.extra = extra or {}


RUNNERS = {
    "afunction": (_run_afunction, parse_window, "window"),
    "rs": (_run_rs, parse_weight, "sequence"),
    "domino": (_run_domino, parse_window, "window"),
    "hollow": (_run_hollow, parse_window, "window"),
    "gkdim": (_run_gkdim, parse_weight, "weight"),
    "assocvar": (_run_assocvar, parse_weight, "weight"),
}


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylgk",
        description=(
            "a-functions on classical Weyl groups, GK dimensions of highest"
            " weight modules, associated varieties of Hermitian-type"
            " Harish-Chandra modules; all arithmetic exact"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, payload_flag: str, payload_help: str):
        p.add_argument(f"--{payload_flag}", help=payload_help)
        p.add_argument(
            "--batch",
            metavar="FILE",
            help="read one payload per line; emits one JSON object per line",
        )
        p.add_argument(
            "--format", choices=("text", "json"), default="text", dest="fmt"
        )

    p = sub.add_parser("afunction", help="a-function value of a group element")
    p.add_argument("--type", choices=("A", "B", "C", "D"), required=True)
    common(p, "window", 'one-line window, e.g. "3,4,-1,5,2"')

    p = sub.add_parser("rs", help="row insertion tableau of a sequence")
    p.add_argument(
        "--mirror",
        choices=("none", "left", "right"),
        default="none",
        help="double the sequence with its reversed negation first",
    )
    common(p, "sequence", 'comma-separated rationals, e.g. "3.1,2,-1/2"')

    p = sub.add_parser("domino", help="insertion and recording domino tableaux")
    common(p, "window", "signed window with distinct absolute values")

    p = sub.add_parser("hollow", help="even boxes of the insertion tableau")
    common(p, "window", "signed window with distinct absolute values")

    p = sub.add_parser("gkdim", help="GK dimension of a highest weight module")
    p.add_argument("--type", choices=("A", "B", "C", "D"), required=True)
    common(p, "weight", 'rational weight, e.g. "3.1,2.3,1.1,-4"')

    p = sub.add_parser("assocvar", help="associated variety of a HC module")
    p.add_argument("--group", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, help="family parameter n")
    p.add_argument("--k", type=int, help="k for su(k, n-k)")
    common(p, "weight", "rational weight (8 coordinates for e6/e7)")

    p = sub.add_parser("sweep", help="a-values over a whole classical Weyl group")
    p.add_argument("--type", choices=("A", "B", "C", "D"), required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument(
        "--check",
        action="store_true",
        help="also compute the symbol-route value and fail on disagreement",
    )
    p.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")

    return parser


def _run_sweep(args) -> int:
    mismatches = 0
    for w in group_elements(args.type, args.rank):
        value = a_value(args.type, w)
        record = {"window": list(w.window), "a": value}
        if args.check and args.type in ("B", "C", "D"):
            sym = a_value_symbol(args.type, w)
            record["a_symbol"] = sym
            if sym != value:
                mismatches += 1
        if args.fmt == "json":
            sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            line = ",".join(str(v) for v in w.window) + f"\t{value}"
            if "a_symbol" in record:
                line += f"\t{record['a_symbol']}"
            sys.stdout.write(line + "\n")
    if mismatches:
        sys.stderr.write(f"error: {mismatches} symbol disagreements\n")
        return DOMAIN_EXIT
    return 0


def _json_out(inp: dict, result: dict) -> str:
    return json.dumps(
        {"input": inp, "result": result, "version": __version__}, sort_keys=True
    )


def _dispatch(args, payload: str, as_json: bool) -> tuple[int, str]:
    """Run one payload; returns (exit code, output line).

    UsageError propagates (single mode turns it into exit 2); anything
    the runners reject becomes an inline domain error.
    """
    runner, payload_parser, _ = RUNNERS[args.command]
    try:
        parsed = payload_parser(payload)
        inp, result, text = runner(args, parsed)
    except DomainError as exc:
        obj = dict(exc.extra)
        obj["error"] = str(exc)
        if as_json:
            return DOMAIN_EXIT, _json_out(exc.inp or {"payload": payload}, obj)
        return DOMAIN_EXIT, f"error: {exc}"
    except (ValueError, TypeError) as exc:
        if as_json:
            return DOMAIN_EXIT, _json_out({"payload": payload}, {"error": str(exc)})
        return DOMAIN_EXIT, f"error: {exc}"
    return 0, _json_out(inp, result) if as_json else text


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)

    if args.command == "sweep":
        try:
            return _run_sweep(args)
        except ValueError as exc:  # rank guard, bad type
            parser.error(str(exc))

    if args.command == "assocvar":
        try:
            if args.group in ("e6", "e7"):
                args.hermitian_group = HermitianGroup(args.group)
            elif args.n is None:
                raise UsageError(f"--n is required for group {args.group}")
            else:
                args.hermitian_group = HermitianGroup(
                    args.group, n=args.n, k=args.k if args.k is not None else 0
                )
        except (UsageError, ValueError) as exc:
            parser.error(str(exc))

    _, payload_parser, flag = RUNNERS[args.command]
    payload = getattr(args, flag)

    if args.batch:
        try:
            with open(args.batch, "r", encoding="utf-8") as fh:
                lines = [ln.strip() for ln in fh]
        except OSError as exc:
            parser.error(f"cannot read batch file: {exc}")
        status = 0
        for line in lines:
            if not line:
                continue
            try:
                code, out = _dispatch(args, line, as_json=True)
            except UsageError as exc:
                code, out = DOMAIN_EXIT, _json_out(
                    {"payload": line}, {"error": str(exc)}
                )
            sys.stdout.write(out + "\n")
            status = status or code
        return status

    if payload is None:
        parser.error(f"--{flag} (or --batch) is required")
    try:
        parsed_probe = payload_parser(payload)
    except ValueError as exc:
        parser.error(str(exc))
    del parsed_probe
    try:
        code, out = _dispatch(args, payload, as_json=args.fmt == "json")
    except UsageError as exc:
        parser.error(str(exc))
    stream = sys.stdout if code == 0 or args.fmt == "json" else sys.stderr
    stream.write(out + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
