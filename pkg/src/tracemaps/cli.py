"""Command line entry point: ``tracemaps <subcommand> [flags]``.

JSON output carries ``"schema": 1``.  Exit status is 0 on success, 2 on a
usage error and 1 when a computation raises one of the package errors (its
class name goes to stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from fractions import Fraction

from . import fibfamily, gaplabel, ising, kicked, spectra, tracemap
from .errors import BadFlagValue, RuleSyntaxError, TraceMapError, UnknownSubcommand, UsageError
from .quadfield import QuadExact
from .words import det, format_rule, gen_fibonacci, parse_rule, substitution_matrix

SCHEMA = 1
SUBCOMMANDS = ("derive", "classify", "invariant-scan", "gaplabel", "idos", "ising", "kick", "orbit")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadFlagValue(message)


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    return "" if v is None else str(v)


def _rule(text: str):
    try:
        return parse_rule(text)
    except RuleSyntaxError as exc:
        raise BadFlagValue(str(exc)) from None


def _quad(q: QuadExact) -> dict:
    r, s = q.sqrt_form()
    return {"a": str(q.a), "b": str(q.b), "sqrt_form": [str(r), str(s)], "value": float(q)}


# --- subcommands -------------------------------------------------------------------


def cmd_derive(args):
    rho = _rule(args.rule)
    F = tracemap.derive(rho)
    c = tracemap.classify(rho)
    return {
        "rule": format_rule(rho),
        "fx": str(F.fx),
        "fy": str(F.fy),
        "fz": str(F.fz),
        "P": str(c.witness),
        "class": c.kind.value,
    }


def cmd_classify(args):
    rho = _rule(args.rule)
    c = tracemap.classify(rho)
    R = substitution_matrix(rho)
    return {
        "rule": format_rule(rho),
        "class": c.kind.value,
        "P": str(c.witness),
        "substitution_matrix": [list(r) for r in R],
        "det": det(R),
    }


def _scan_one(kl):
    k, l = kl
    p = fibfamily.FibParams(k, l)
    F = fibfamily.closed_form_map(p)
    P = fibfamily.closed_form_transformation(p)
    name = fibfamily.known_invariant(k, l)
    verified = None
    if name == "H":
        verified = tracemap.check_invariant(F, fibfamily.invariant_H(l))
    elif name == "H~":
        verified = tracemap.check_invariant(F, fibfamily.invariant_H_tilde(l))
    return {"k": k, "l": l, "P": str(P), "invariant": name, "verified": verified}


def cmd_invariant_scan(args):
    if args.kmin > args.kmax or args.lmin > args.lmax:
        raise BadFlagValue("empty (k, l) range")
    grid = [(k, l) for k in range(args.kmin, args.kmax + 1) for l in range(args.lmin, args.lmax + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(_scan_one, grid))
    else:
        rows = [_scan_one(kl) for kl in grid]
    return {"rows": rows}


_TEST_RE = re.compile(r"^\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)?$")


def cmd_gaplabel(args):
    k, l = args.k, args.l
    mod = gaplabel.frequency_module(k, l)
    pd = gaplabel.perron_data(k, l)
    out = {
        "k": k,
        "l": l,
        "D": mod.D,
        "discriminant": l * l + 4 * k,
        "lambda": _quad(pd.lam),
        "v1": [_quad(v) for v in pd.v1],
        "v2": [_quad(v) for v in pd.v2],
        "congruences": [{"c": c, "modulus": m} for c, m in mod.congruences],
        "M1": gaplabel.m1(gen_fibonacci(k, l)),
        "M2": gaplabel.m2(gen_fibonacci(k, l)),
    }
    if fibfamily.integer_eigenvalue_condition(fibfamily.FibParams(k, l)) is not None:
        out["note"] = "rational Perron root: module taken as written, may be larger than needed"
    tests = []
    for t in args.test or []:
        m = _TEST_RE.match(t)
        if m is None:
            raise BadFlagValue(f"--test expects (mu,nu[,p]), got {t!r}")
        mu_t, nu_t = int(m.group(1)), int(m.group(2))
        p = int(m.group(3)) if m.group(3) is not None else 0
        value = QuadExact(mu_t, nu_t, k, l) / (mod.D * Fraction(k) ** p)
        tests.append(
            {"mu": mu_t, "nu": nu_t, "p": p, "value": _quad(value), "member": gaplabel.module_contains(mod, value)}
        )
    if tests:
        out["tests"] = tests
    return out


def cmd_idos(args):
    chain = spectra.TightBindingChain(args.v1, args.v2, args.k, args.l, args.n)
    stair = spectra.band_structure(chain, resolution=args.grid)
    if args.k == 1:
        spectra.assign_labels(stair, args.l, args.n)
    rows = []
    for b in stair.bands:
        rows.append({"E_low": b.lo, "E_high": b.hi, "type": "band", "idos_num": b.count, "idos_den": stair.L})
    for g in stair.gaps + stair.closed_gaps:
        mu, nu = g.label if g.label else (None, None)
        rows.append(
            {
                "E_low": g.lo,
                "E_high": g.hi,
                "type": "closed" if g.closed else "gap",
                "idos_num": g.m,
                "idos_den": g.L,
                "mu": mu,
                "nu": nu,
            }
        )
    rows.sort(key=lambda r: (r["E_low"], r["type"] == "band"))
    return {"length": stair.L, "bands": len(stair.bands), "rows": rows}


IDOS_HEADER = ("E_low", "E_high", "type", "idos_num", "idos_den", "mu", "nu")


def cmd_ising(args):
    p = ising.IsingParams(args.K0, args.K1, args.h0, args.h1, args.k, args.l)
    gens, prev = [], None
    for g in ising.iterate_free_energy(p, args.n):
        gens.append(
            {
                "n": g.n,
                "N": g.N,
                "x_mantissa": g.x.mantissa,
                "x_exponent": g.x.exponent,
                "log_Z": g.log_Z,
                "F": g.F,
                "delta": None if prev is None else abs(g.F - prev),
            }
        )
        prev = g.F
    return {"params": asdict(p), "generations": gens, "F": prev, "delta": gens[-1]["delta"]}


def _kicks(args):
    try:
        k0 = kicked.Kick.normalized(args.a0, (args.n0x, args.n0y, args.n0z))
        k1 = kicked.Kick.normalized(args.a1, (args.n1x, args.n1y, args.n1z))
    except ValueError as exc:
        raise BadFlagValue(str(exc)) from None
    return k0, k1


def _orbit_rows(orb):
    return [
        {"n": i, "x": x, "y": y, "z": z, "I": tracemap.fricke_value(x, y, z)}
        for i, (x, y, z) in enumerate(orb.points)
    ]


def cmd_kick(args):
    k0, k1 = _kicks(args)
    orb = kicked.orbit((args.k, args.l), kicked.initial_traces(k0, k1), args.steps)
    return {"I0": kicked.invariant_value(k0, k1), "rows": _orbit_rows(orb)}


def cmd_orbit(args):
    if args.rule:
        F = tracemap.derive(_rule(args.rule))
    else:
        F = (args.k, args.l)
    orb = kicked.orbit(F, args.start, args.steps)
    return {"I0": orb.I0, "rows": _orbit_rows(orb)}


ORBIT_HEADER = ("n", "x", "y", "z", "I")

# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # shared flags, accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS, help="output format")
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="output file (default stdout)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for sweeps")
    ap = _Parser(prog="tracemaps", description="Trace maps of two-letter substitutions.", parents=[common])
    _add = ap.add_subparsers(dest="cmd", parser_class=_Parser).add_parser

    class sub:  # noqa: N801
        @staticmethod
        def add_parser(name, **kw):
            return _add(name, parents=[common], **kw)

    p = sub.add_parser("derive", help="trace map and transformation polynomial of a rule")
    p.add_argument("--rule", required=True, help='e.g. "a->b;b->ba"; A, B are inverses')
    p.set_defaults(func=cmd_derive, kind="json")

    p = sub.add_parser("classify", help="classify a rule by its transformation polynomial")
    p.add_argument("--rule", required=True)
    p.set_defaults(func=cmd_classify, kind="json")

    p = sub.add_parser("invariant-scan", help="closed forms and family invariants over a (k, l) box")
    for f in ("--kmin", "--kmax", "--lmin", "--lmax"):
        p.add_argument(f, type=int, required=True)
    p.set_defaults(func=cmd_invariant_scan, kind="json")

    p = sub.add_parser("gaplabel", help="Perron data and frequency module of a (k, l) chain")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--test", action="append", help='membership query "(mu,nu,p)"')
    p.set_defaults(func=cmd_gaplabel, kind="json")

    p = sub.add_parser("idos", help="bands, gaps and IDOS of a periodic approximant")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v1", type=float, default=0.0)
    p.add_argument("--v2", type=float, default=2.0)
    p.add_argument("--grid", type=int, default=10_000)
    p.set_defaults(func=cmd_idos, kind="csv", header=IDOS_HEADER)

    p = sub.add_parser("ising", help="free energy of a modulated Ising chain per generation")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--K0", type=float, required=True)
    p.add_argument("--K1", type=float, required=True)
    p.add_argument("--h0", type=float, default=0.0)
    p.add_argument("--h1", type=float, default=0.0)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_ising, kind="json")

    p = sub.add_parser("kick", help="trace orbit of a pair of SU(2) kicks")
    for name in ("0", "1"):
        p.add_argument(f"--a{name}", type=float, required=True)
        p.add_argument(f"--n{name}x", type=float, default=0.0)
        p.add_argument(f"--n{name}y", type=float, default=0.0)
        p.add_argument(f"--n{name}z", type=float, default=1.0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--steps", type=int, default=100)
    p.set_defaults(func=cmd_kick, kind="csv", header=ORBIT_HEADER)

    p = sub.add_parser("orbit", help="iterate a trace map from a starting point")
    p.add_argument("--rule", default=None)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--start", type=float, nargs=3, required=True, metavar=("X", "Y", "Z"))
    p.add_argument("--steps", type=int, default=100)
    p.set_defaults(func=cmd_orbit, kind="csv", header=ORBIT_HEADER)
    return ap


def _render(args, result) -> str:
    fmt = args.format or args.kind
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, "command": args.cmd, **result}, indent=2) + "\n"
    header = getattr(args, "header", None)
    if header is None:
        raise BadFlagValue(f"{args.cmd} has no CSV form")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in result["rows"]:
        w.writerow([_fmt(row.get(h)) for h in header])
    return buf.getvalue()


def main(argv=None) -> int:
    ap = build_parser()
    try:
        if argv is None:
            argv = sys.argv[1:]
        if argv and not argv[0].startswith("-") and argv[0] not in SUBCOMMANDS:
            raise UnknownSubcommand(f"unknown subcommand {argv[0]!r}; choose from {', '.join(SUBCOMMANDS)}")
        args = ap.parse_args(argv)
        if args.cmd is None:
            raise UnknownSubcommand("no subcommand given")
        for name, default in (("format", None), ("output", None), ("jobs", 1)):
            if not hasattr(args, name):
                setattr(args, name, default)
        if args.jobs < 1:
            raise BadFlagValue("--jobs must be >= 1")
        text = _render(args, args.func(args))
    except UsageError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except TraceMapError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # argument values the computation rejects (window, generation, ...)
        print(f"BadFlagValue: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
