"""Command-line front end.

    sbk verify-algebra osp22
    sbk cocycle-space osp12_u1 --format json
    sbk check-r osp22 h1 --param x=1 --param y=2
    sbk cybe osp22 e6 --param y=3
    sbk equiv --all --samples 8 --seed 7
    sbk normal-step osp22 case22 --param X=1 ...
    sbk report --format json

Exit status: 0 when every check passes (skips allowed), 1 when any fails,
2 for usage or input errors.  ``SBK_SEED`` sets the default seed.
"""

from __future__ import annotations

import argparse
import datetime
import logging
import sys
from pathlib import Path

from . import catalog, suite
from .autos import EmptyWitnessDomain, fermionic_normal_step, r_blocks, verify_equivalence
from .cybe import ad_invariant, schouten_square
from .linsolve import coboundary_solve, cocycle_space, rank
from .sampling import default_seed
from .serialize import (FormatError, catalog_to_dict, cocycle_basis_to_dict, dumps,
                        load_algebra, load_rmatrix, rmatrix_to_dict, tensor3_to_list)
from .superkernel import AlgebraError, format_rational, verify_lie_superalgebra

FORMAT_VERSION = "1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --- helpers --------------------------------------------------------------------

def _resolve_algebra(name: str):
    if Path(name).suffix == ".json" or Path(name).is_file():
        return load_algebra(name)
    try:
        return catalog.algebra(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _params(pairs) -> dict:
    out = {}
    for item in pairs or ():
        if "=" not in item:
            raise UsageError(f"--param expects name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _subject(alg_name: str, ident: str):
    """``(label, template, fixed)``: a catalog template, or ``fixed`` points read
    from an r-matrix file."""
    if Path(ident).suffix == ".json" or Path(ident).is_file():
        r = load_rmatrix(ident)
        if r.alg.name != alg_name and not Path(alg_name).is_file():
            raise UsageError(f"{ident} is an r-matrix of {r.alg.name}, not {alg_name}")
        return ident, None, [({}, r)]
    try:
        t = catalog.r_template(ident)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if t.algebra != alg_name:
        raise UsageError(f"template {ident!r} belongs to {t.algebra}, not {alg_name}")
    return ident, t, None


def _points(t, values, use_grid, seed):
    from .sampling import grid, make_rng

    if values:
        return [(values, t.evaluate(values))]
    if use_grid:
        pts = (v for v in grid(t.params) if not t.excluded(v))
    else:
        pts = suite.template_points(t, make_rng(seed))
    return [(v, t.evaluate(v)) for v in pts]


def _fmt_point(values) -> str:
    if not values:
        return "-"
    return ",".join(f"{k}={v}" for k, v in sorted(values.items()))


def _check(id, claim, verdict, details=None, reference=""):
    return suite.Check(id, claim, reference, verdict, details or {})


def _report(command, seed, checks, fmt, out=None) -> int:
    out = out or sys.stdout
    checks = sorted(checks, key=lambda c: c.id)
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for c in checks:
        counts[c.verdict] = counts.get(c.verdict, 0) + 1
    if fmt == "json":
        body = {"format_version": FORMAT_VERSION, "command": command, "seed": seed,
                "checks": [c.to_dict() for c in checks], "summary": counts,
                "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat()}
        out.write(dumps(body))
    else:
        width = max((len(c.id) for c in checks), default=0)
        for c in checks:
            line = f"{c.verdict.upper():7} {c.id:{width}}  {c.claim}"
            if c.verdict == "skipped" and c.details.get("reason"):
                line += f"  [{c.details['reason']}]"
            out.write(line + "\n")
        out.write(f"seed {seed}: {counts['pass']} passed, {counts['fail']} failed, "
                  f"{counts['skipped']} skipped\n")
    return EXIT_FAIL if counts["fail"] else EXIT_OK


# --- subcommands ----------------------------------------------------------------

def cmd_verify_algebra(args):
    alg = _resolve_algebra(args.algebra)
    rep = verify_lie_superalgebra(alg)
    checks = []
    for axiom, bad in rep.violations.items():
        checks.append(_check(f"{alg.name}:{axiom}", f"{axiom} holds for {alg.name}",
                             "fail" if bad else "pass",
                             {"violations": [list(t) for t in bad[:20]], "count": len(bad)}))
    return checks


def cmd_cocycle_space(args):
    alg = _resolve_algebra(args.algebra)
    space = cocycle_space(alg)
    checks = [_check(f"{alg.name}:dimension", f"cocycle space of {alg.name}", "pass",
                     {"dimension": space.dimension, "equations": space.equations,
                      "unknowns": space.unknowns})]
    for n, f in enumerate(space.basis):
        r = coboundary_solve(alg, f)
        details = {"cocycle": [[alg.generator_names[i], alg.generator_names[j],
                                alg.generator_names[k], format_rational(v)]
                               for i, j, k, v in f.entries]}
        if r is not None:
            details["r"] = rmatrix_to_dict(r)["entries"]
        checks.append(_check(f"{alg.name}:basis-{n:02d}", "basis cocycle is a coboundary",
                             "pass" if r is not None else "fail", details))
    if args.export:
        Path(args.export).write_text(dumps(cocycle_basis_to_dict(alg, space)))
    return checks


def cmd_check_r(args):
    label, t, fixed = _subject(args.algebra, args.id)
    values = _params(args.param)
    pairs = fixed or _points(t, values, args.grid, args.seed)
    checks = []
    for n, (point, r) in enumerate(pairs):
        res = suite.check_r(r.alg, r)
        checks.append(_check(f"{label}@{n:03d}", f"{label} at {_fmt_point(point)}",
                             "pass" if suite.bialgebra_ok(res) else "fail",
                             {"point": {k: str(v) for k, v in point.items()}, **res}))
    return checks


def cmd_cybe(args):
    label, t, fixed = _subject(args.algebra, args.id)
    pairs = fixed or _points(t, _params(args.param), False, args.seed)
    checks = []
    for n, (point, r) in enumerate(pairs):
        T = schouten_square(r.alg, r)
        cybe = T.is_zero()
        verdict = "pass"
        if args.expect is not None:
            verdict = "pass" if cybe == (args.expect == "yes") else "fail"
        checks.append(_check(f"{label}@{n:03d}", f"CYBE for {label} at {_fmt_point(point)}: "
                             f"{'holds' if cybe else 'fails'}",
                             verdict, {"point": {k: str(v) for k, v in point.items()},
                                       "cybe": cybe, "ad_invariant": ad_invariant(r.alg, T),
                                       "schouten": tensor3_to_list(T)}))
    return checks


def cmd_equiv(args):
    if args.all:
        witnesses = catalog.witness_list()
    elif args.witness:
        try:
            witnesses = [catalog.witness(args.witness)]
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    else:
        raise UsageError("give a witness id or --all")
    checks = []
    for w in witnesses:
        rep = verify_equivalence(w, args.samples, args.seed)
        details = rep.to_dict()
        details.update(origin=w.origin, note=w.note)
        checks.append(_check(w.id, f"{w.source} ~ {w.target}", rep.verdict, details))
    return checks


def cmd_normal_step(args):
    label, t, fixed = _subject(args.algebra, args.id)
    pairs = fixed or _points(t, _params(args.param), False, args.seed)
    checks = []
    for n, (point, r) in enumerate(pairs):
        out, change, note = fermionic_normal_step(r.alg, r)
        vv, _, ww = r_blocks(r.alg, out)
        ok = rank(vv) >= rank(ww)
        checks.append(_check(f"{label}@{n:03d}", f"fermionic normalization of {label}",
                             "pass" if ok else "fail",
                             {"point": {k: str(v) for k, v in point.items()},
                              "note": note or "", "rank_VV": rank(vv), "rank_WW": rank(ww),
                              "r": rmatrix_to_dict(out)["entries"],
                              "change": [[format_rational(x) for x in row] for row in change.A]}))
    return checks


def cmd_report(args):
    return suite.run_suite(seed=args.seed, samples=args.samples)


def cmd_export(args):
    if args.what == "catalog":
        data = catalog_to_dict()
    elif args.what == "witnesses":
        data = [w.to_dict() for w in catalog.witness_list()]
    else:
        try:
            data = catalog.r_template(args.name).to_dict()
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    sys.stdout.write(dumps(data))
    return None


# --- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None,
                        help="random seed (default: $SBK_SEED or 42)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="sbk", description="Exact checks for Lie super-bialgebra "
                                "structures on osp(2|2) and osp(1|2)+u(1).")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-algebra", parents=[common], help="Lie superalgebra axioms")
    s.add_argument("algebra", help="osp22, osp12_u1 or an algebra JSON file")
    s.set_defaults(func=cmd_verify_algebra)

    s = sub.add_parser("cocycle-space", parents=[common], help="cocycle space and coboundaries")
    s.add_argument("algebra")
    s.add_argument("--export", metavar="FILE", help="write the basis as JSON")
    s.set_defaults(func=cmd_cocycle_space)

    for name, func, text in (("check-r", cmd_check_r, "bialgebra axioms of an r-matrix"),
                             ("cybe", cmd_cybe, "classical Yang-Baxter equation"),
                             ("normal-step", cmd_normal_step, "normalize the fermionic blocks")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("algebra")
        s.add_argument("id", help="catalog template id or r-matrix JSON file")
        s.add_argument("--param", action="append", metavar="NAME=VALUE")
        if name == "check-r":
            s.add_argument("--grid", action="store_true",
                           help="use the {0,1,2} grid even for rational families")
        if name == "cybe":
            s.add_argument("--expect", choices=("yes", "no"),
                           help="fail unless the CYBE status matches")
        s.set_defaults(func=func)

    s = sub.add_parser("equiv", parents=[common], help="verify equivalence witnesses")
    s.add_argument("witness", nargs="?")
    s.add_argument("--all", action="store_true")
    s.add_argument("--samples", type=int, default=suite.DEFAULT_SAMPLES)
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("report", parents=[common], help="run the acceptance suite")
    s.add_argument("--samples", type=int, default=suite.DEFAULT_SAMPLES)
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("export", parents=[common], help="dump catalog data as JSON")
    s.add_argument("what", choices=("catalog", "witnesses", "template"))
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.seed is None:
        args.seed = default_seed()
    if getattr(args, "samples", 5) < 3:
        print("error: --samples must be at least 3", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "export" and args.what == "template" and not args.name:
        print("error: export template needs a template id", file=sys.stderr)
        return EXIT_USAGE
    try:
        checks = args.func(args)
    except (UsageError, FormatError, EmptyWitnessDomain, AlgebraError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if checks is None:
        return EXIT_OK
    return _report(["sbk"] + argv, args.seed, checks, args.format)


if __name__ == "__main__":
    sys.exit(main())
