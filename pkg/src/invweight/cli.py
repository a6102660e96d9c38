"""Command-line front end.

Exit codes: 0 success / criterion satisfied / no witnesses, 1 criterion
violated or non-extendable isometries found, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .conv import FnR, eta, eta_change_of_basis, nonzero_ideals
from .criterion import criterion_check
from .mobius import ideal_lattice, mobius_poset, mobius_zero_closed
from .oracle import DEFAULT_SWEEP_BUDGET, BudgetExceeded, verify_extension_theorem
from .ring import RingParseError, parse_ring
from .scalar import render_rational
from .weights import WeightError, hamming, homogeneous, load_weight, weight_to_json

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _label(e):
    return ",".join(str(k) for k in e)


def _scalar_json(v):
    return {"re": render_rational(v.re), "im": render_rational(v.im)}


def _scalar_text(v):
    return str(v)


def _dump_json(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _ring(args):
    if args.ring is None:
        raise UsageError("--ring is required")
    try:
        return parse_ring(args.ring)
    except RingParseError as exc:
        raise UsageError(f"cannot parse ring {args.ring!r}: {exc}") from None


def _weight(args):
    sources = [s for s in (args.weight, args.hamming, args.homogeneous) if s]
    if len(sources) != 1:
        raise UsageError("give exactly one of --weight FILE, --hamming, --homogeneous")
    if args.weight:
        try:
            w = load_weight(args.weight)
        except (OSError, json.JSONDecodeError, WeightError, RingParseError) as exc:
            raise UsageError(f"cannot load weight {args.weight!r}: {exc}") from None
        if w.name is None:
            w.name = args.weight
        if args.ring is not None:
            R = _ring(args)
            if R != w.ring:
                raise UsageError(f"--ring {R} does not match the weight file's ring {w.ring}")
        return w
    R = _ring(args)
    return hamming(R) if args.hamming else homogeneous(R)


def fnr_csv(f: FnR) -> str:
    rows = [["index", "element", "re", "im"]]
    R = f.ring
    for i, v in enumerate(f.table):
        rows.append([i, R.render(i), render_rational(v.re), render_rational(v.im)])
    return _csv(rows)


# subcommands ---------------------------------------------------------------

def cmd_ring_info(args):
    R = _ring(args)
    ideals = []
    for e in R.ideal_reps():
        ideals.append({
            "exponent": list(e),
            "representative": R.render(R.rep(e)),
            "orbit_size": R.orbit_size(e),
            "ideal_size": R.ideal_size(e),
            "orth": list(R.orth(e)),
        })
    info = {
        "ring": R.name,
        "components": [{"name": c.name, "kind": c.kind, "p": c.p, "d": c.d, "q": c.q}
                       for c in R.components],
        "size": R.size,
        "unit_count": R.unit_count,
        "units": [R.render(u) for u in R.units],
        "ideals": ideals,
        "socle": list(R.socle_rep()),
    }
    if args.format == "json":
        return _dump_json(info), EXIT_OK
    if args.format == "csv":
        rows = [["exponent", "representative", "orbit_size", "ideal_size", "orth"]]
        rows += [[_label(i["exponent"]), i["representative"], i["orbit_size"], i["ideal_size"],
                  _label(i["orth"])] for i in ideals]
        return _csv(rows), EXIT_OK
    lines = [f"ring        {R.name}",
             f"components  {', '.join(f'{c.name} (p={c.p}, d={c.d})' for c in R.components)}",
             f"size        {R.size}",
             f"units       {R.unit_count}: {' '.join(info['units'])}",
             f"socle       ({_label(R.socle_rep())})",
             f"ideals      {len(ideals)}",
             "  exponent  rep  orbit  |Re|  orth"]
    for i in ideals:
        lines.append(f"  ({_label(i['exponent'])})  {i['representative']}  {i['orbit_size']}  "
                     f"{i['ideal_size']}  ({_label(i['orth'])})")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_mobius(args):
    R = _ring(args)
    P = ideal_lattice(R)
    table = mobius_poset(P)
    labels = list(R.ideal_reps())
    if args.format == "json":
        data = {
            "ring": R.name,
            "ideals": [list(e) for e in labels],
            "mu_zero": {_label(e): mobius_zero_closed(R, e) for e in labels},
            "mu": [[table(x, y) for y in labels] for x in labels],
        }
        return _dump_json(data), EXIT_OK
    rows = [["ideal", "mu_zero"] + [_label(y) for y in labels]]
    for x in labels:
        rows.append([_label(x), mobius_zero_closed(R, x)] + [table(x, y) for y in labels])
    return _csv(rows), EXIT_OK


def cmd_weight(args):
    w = _weight(args)
    if args.format == "json":
        data = weight_to_json(w)
        data["table"] = [_scalar_json(v) for v in w.to_fnr().table]
        return _dump_json(data), EXIT_OK
    if args.format == "csv":
        return fnr_csv(w.to_fnr()), EXIT_OK
    R = w.ring
    lines = [f"weight {w.name or ''} on {R.name}".rstrip()]
    for e in R.ideal_reps():
        lines.append(f"  ({_label(e)})  {_scalar_text(w.value(e))}")
    return "\n".join(lines) + "\n", EXIT_OK


def criterion_json(report):
    return {
        "ring": report.ring,
        "weight": report.weight,
        "entries": [{"x": list(e.x), "value": _scalar_json(e.value), "pass": e.passed}
                    for e in report.entries],
        "pass": report.passed,
    }


def cmd_criterion(args):
    report = criterion_check(_weight(args))
    code = EXIT_OK if report.passed else EXIT_FINDINGS
    if args.format == "json":
        return _dump_json(criterion_json(report)), code
    if args.format == "csv":
        rows = [["x", "re", "im", "pass"]]
        rows += [[_label(e.x), render_rational(e.value.re), render_rational(e.value.im),
                  str(e.passed).lower()] for e in report.entries]
        return _csv(rows), code
    lines = [f"criterion for {report.weight or 'weight'} on {report.ring}"]
    for e in report.entries:
        lines.append(f"  x=({_label(e.x)})  value={_scalar_text(e.value)}  "
                     f"{'nonzero' if e.passed else 'ZERO'}")
    lines.append("criterion satisfied" if report.passed else "criterion violated")
    return "\n".join(lines) + "\n", code


def oracle_json(report):
    return {
        "ring": report.ring,
        "weight": report.weight,
        "n": report.n,
        "codes_examined": report.codes_examined,
        "isometries_found": report.isometries_found,
        "extendable": report.extendable,
        "witnesses": [w.as_dict() for w in report.witnesses],
        "skipped": list(report.skipped),
    }


def cmd_oracle(args):
    w = _weight(args)
    if args.n < 1:
        raise UsageError("--n must be positive")
    try:
        report = verify_extension_theorem(w.ring, w, args.n, max_codes=args.max_codes,
                                          max_maps=args.max_maps, budget=args.budget)
    except BudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    code = EXIT_OK if report.passed else EXIT_FINDINGS
    if args.format == "json":
        return _dump_json(oracle_json(report)), code
    lines = [f"extension sweep: {report.weight} on {report.ring}, n={report.n}",
             f"  codes examined    {report.codes_examined}",
             f"  isometries found  {report.isometries_found}",
             f"  extendable        {report.extendable}",
             f"  witnesses         {len(report.witnesses)}"]
    for wit in report.witnesses:
        d = wit.as_dict()
        maps = ", ".join(f"{g} -> {i}" for g, i in zip(d["generators"], d["images"]))
        lines.append(f"    {maps}  (|C|={d['code_size']}, injective={str(d['injective']).lower()})")
    for s in report.skipped:
        lines.append(f"  skipped: {s}")
    return "\n".join(lines) + "\n", code


def cmd_eta(args):
    R = _ring(args)
    if args.x is not None:
        try:
            x = R.check_exponent(tuple(int(k) for k in args.x.split(",")))
        except ValueError as exc:
            raise UsageError(f"bad --x {args.x!r}: {exc}") from None
        if x == R.zero_ideal:
            raise UsageError("eta is not defined at the zero ideal")
        return fnr_csv(eta(R, x)), EXIT_OK
    labels = nonzero_ideals(R)
    rows = [["eta \\ epsilon"] + [_label(t) for t in labels]]
    for x, row in zip(labels, eta_change_of_basis(R)):
        rows.append([_label(x)] + [str(v) for v in row])
    return _csv(rows), EXIT_OK


# parser ---------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    parser = _Parser(prog="invweight",
                     description="Exact invariant-weight computations over products of chain rings.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    ring_help = "ring description, e.g. Z4, Z2*Z4, F2x2 (components joined by '*')"

    def common(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", "-o", metavar="PATH", help="write the report here instead of stdout")

    def weight_source(p):
        g = p.add_argument_group("weight source (exactly one)")
        g.add_argument("--weight", metavar="FILE", help="JSON weight file")
        g.add_argument("--hamming", action="store_true", help="Hamming weight")
        g.add_argument("--homogeneous", action="store_true", help="normalised homogeneous weight")

    p = sub.add_parser("ring", help="ring size, units, ideal representatives, orbits, socle")
    p.add_argument("--ring", required=True, help=ring_help)
    common(p, ["text", "json", "csv"], "text")
    p.set_defaults(func=cmd_ring_info)

    p = sub.add_parser("mobius", help="Moebius table of the principal-ideal lattice (CSV)")
    p.add_argument("--ring", required=True, help=ring_help)
    common(p, ["csv", "json"], "csv")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("weight", help="expand a weight to all ring elements")
    p.add_argument("--ring", help=ring_help + " (optional with --weight)")
    weight_source(p)
    common(p, ["csv", "json", "text"], "csv")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("criterion", help="evaluate the extension criterion for a weight")
    p.add_argument("--ring", help=ring_help + " (optional with --weight)")
    weight_source(p)
    common(p, ["text", "json", "csv"], "text")
    p.set_defaults(func=cmd_criterion)

    p = sub.add_parser("oracle", help="brute-force search for non-extendable isometries")
    p.add_argument("--ring", help=ring_help + " (optional with --weight)")
    weight_source(p)
    p.add_argument("--n", type=int, default=1, help="code length (default 1)")
    p.add_argument("--max-codes", type=int, default=None, help="examine at most this many codes")
    p.add_argument("--max-maps", type=int, default=None,
                   help="skip codes with more isometries than this")
    p.add_argument("--budget", type=int, default=DEFAULT_SWEEP_BUDGET,
                   help=f"upper bound on |R|^n (default {DEFAULT_SWEEP_BUDGET})")
    common(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("eta", help="eta change-of-basis matrix, or one eta_x as a function table")
    p.add_argument("--ring", required=True, help=ring_help)
    p.add_argument("--x", metavar="E", help="comma-joined exponent vector, e.g. 1,0")
    common(p, ["csv"], "csv")
    p.set_defaults(func=cmd_eta)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        text, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
