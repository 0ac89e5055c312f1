"""Command-line front end: ``python -m ascover <command> ...``.

Exit status: 0 on success, 1 when a sweep finds a failing curve, 2 on usage
or parameter errors.  Output is JSON lines by default and is byte-identical
for identical arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from math import comb

from . import covers, ec, maximal
from . import genus3 as g3
from .gf2 import ReducibleModulusError, make_field
from .quotients import quotients_of, verify_isogeny

EXHAUSTIVE_BUDGET = 10 ** 8
MAX_SCAN_DEGREE = 13


class UsageError(Exception):
    pass


# ---------- helpers


def _field(args):
    modulus = None
    if getattr(args, "modulus", None):
        try:
            modulus = int(args.modulus, 16)
        except ValueError:
            raise UsageError("invalid hex modulus %r" % args.modulus) from None
    try:
        return make_field(args.n, modulus)
    except ReducibleModulusError as exc:
        raise UsageError(str(exc)) from None


def _curve(k, args):
    """Curve from ``--curve tag:...`` or ``--family F --params k=v,...``."""
    text = args.curve
    if text is None:
        if not (args.family and args.params is not None):
            raise UsageError("give --curve or both --family and --params")
        text = "%s:%s" % (args.family, args.params)
    tag = text.split(":", 1)[0]
    try:
        if tag == "ord" or (tag == "ss" and "l=" in text):
            return ec.parse_curve(k, text)
        return g3.parse(k, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _genus3(k, args):
    C = _curve(k, args)
    if isinstance(C, (ec.WeierstrassOrd, ec.SupersingularEC)):
        raise UsageError("this command needs a genus-3 curve")
    bad = g3.validate(C)
    if bad:
        raise UsageError("invalid %s parameters: %s" % (C.family, "; ".join(bad)))
    return C


def _triple(k, args) -> covers.TripleInvariants:
    if args.curves:
        parts = [p for p in args.curves.split(";") if p.strip()]
        if len(parts) != 3:
            raise UsageError("--curves needs three ';'-separated curves")
        try:
            Es = [ec.parse_curve(k, p) for p in parts]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not all(isinstance(E, ec.WeierstrassOrd) for E in Es):
            raise UsageError("cover criteria need ordinary curves")
        return covers.triple_invariants(*Es)
    if None in (args.j1, args.j2, args.j3):
        raise UsageError("give --j1 --j2 --j3 (and --sgn) or --curves")
    try:
        js = tuple(k.parse(v) for v in (args.j1, args.j2, args.j3))
        bits = [int(b) for b in args.sgn.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(bits) != 3 or any(b not in (0, 1) for b in bits):
        raise UsageError("--sgn expects three bits, e.g. 0,1,0")
    try:
        return covers.TripleInvariants(k, js, tuple(k.r0 if b else 0 for b in bits))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(rows, fmt, out, columns=None):
    if fmt == "json-lines":
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")
    elif fmt == "csv":
        columns = columns or sorted({c for r in rows for c in r})
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore",
                           lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({c: ("" if row.get(c) is None else row.get(c))
                        for c in columns})
        out.write(buf.getvalue())
    else:
        for row in rows:
            out.write("  ".join("%s=%s" % (key, row[key]) for key in sorted(row)) + "\n")


# ---------- commands


def cmd_field_info(args, out):
    k = _field(args)
    _emit([k.describe()], args.format, out)
    return 0


def cmd_count(args, out):
    k = _field(args)
    C = _curve(k, args)
    if isinstance(C, (ec.WeierstrassOrd, ec.SupersingularEC)):
        n = ec.count_points(C)
        row = {"curve": C.to_str(), "count": n, "trace": k.q + 1 - n}
    else:
        bad = g3.validate(C)
        if bad:
            raise UsageError("invalid %s parameters: %s" % (C.family, "; ".join(bad)))
        if C.family in g3.QUARTIC_FAMILIES and k.n > MAX_SCAN_DEGREE:
            raise UsageError("quartic scans are capped at n <= %d" % MAX_SCAN_DEGREE)
        row = {"curve": g3.to_str(C), "count": g3.count_points(C)}
    _emit([row], args.format, out)
    return 0


def cmd_quotients(args, out):
    k = _field(args)
    C = _genus3(k, args)
    rows = []
    for i, E in enumerate(quotients_of(C), 1):
        row = {"index": i, "curve": E.to_str(), "trace": ec.trace_of(E)}
        if isinstance(E, ec.WeierstrassOrd):
            row.update(j=k.hex(ec.j_invariant(E)), sgn=k.hex(ec.signature(E)))
        rows.append(row)
    _emit(rows, args.format, out)
    return 0


def cmd_verify_isogeny(args, out):
    k = _field(args)
    C = _genus3(k, args)
    if C.family in g3.QUARTIC_FAMILIES and k.n > MAX_SCAN_DEGREE:
        raise UsageError("quartic scans are capped at n <= %d" % MAX_SCAN_DEGREE)
    rep = verify_isogeny(C)
    _emit([rep.to_dict()], args.format, out)
    return 0 if rep.ok else 1


def _cover_rows(k, t, construct_only=False):
    rows = []
    for kind, fn, cond in (("hyperelliptic", covers.exists_hyp_cover, covers.hyp_condition),
                           ("non-hyperelliptic", covers.exists_nonhyp_cover,
                            covers.nonhyp_condition)):
        if k.q == 2:
            w, exists = None, False if kind == "non-hyperelliptic" else cond(t)
        else:
            w = fn(t)
            exists = w is not None
        row = {"kind": kind, "exists": exists,
               "witness": w.to_dict() if w else None}
        if not construct_only:
            row.update(Ta=k.hex(t.Ta), Tb=None if t.Tb is None else k.hex(t.Tb),
                       sgn_sum=k.hex(t.sgn_sum))
        rows.append(row)
    return rows


def cmd_cover_exists(args, out):
    k = _field(args)
    _emit(_cover_rows(k, _triple(k, args)), args.format, out)
    return 0


def cmd_cover_construct(args, out):
    k = _field(args)
    rows = [r for r in _cover_rows(k, _triple(k, args), True) if r["exists"]]
    _emit(rows, args.format, out)
    return 0


def cmd_ss_cover_search(args, out):
    k = _field(args)
    try:
        traces = [int(v) for v in args.traces.split(",")]
        w = covers.exists_ss_cover(k, traces, args.max_tuples)
    except covers.SearchExhausted as exc:
        _emit([{"traces": args.traces, "status": "search-exhausted",
                "message": str(exc)}], args.format, out)
        return 0
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    row = {"traces": sorted(traces), "status": "found" if w else "none",
           "witness": w.to_dict() if w else None}
    _emit([row], args.format, out)
    return 0


def cmd_maximal(args, out):
    if args.n % 2 == 0 or args.n < 3:
        raise UsageError("maximal constructions need odd n >= 3")
    if args.n > MAX_SCAN_DEGREE and not args.no_count:
        raise UsageError("witness scans are capped at n <= %d (use --no-count)"
                         % MAX_SCAN_DEGREE)
    build = maximal.construct_defect0 if args.defect == 0 else maximal.construct_defect3
    try:
        rep = build(args.n, count_witness=not args.no_count)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit([rep.to_dict()], args.format, out)
    return 0


NQ3_COLUMNS = ["n", "q", "m", "class", "status", "nq3_lo", "nq3_hi", "witness"]


def cmd_nq3_table(args, out):
    if args.n_max > MAX_SCAN_DEGREE and not args.no_count:
        raise UsageError("witness scans are capped at n <= %d (use --no-count)"
                         % MAX_SCAN_DEGREE)
    rows = [maximal.nq3(n, count_witness=not args.no_count).to_dict()
            for n in range(1, args.n_max + 1, 2)]
    for row in rows:
        row["class"] = row["m_mod8"]
    _emit(rows, args.format, out, NQ3_COLUMNS)
    return 0


def cmd_m_seq(args, out):
    try:
        entries = maximal.m_sequence(args.count)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [{"n": e.n, "degree": e.degree, "m_n": e.m_n,
             "eps_half": int(e.eps_half), "residue4": e.residue4} for e in entries]
    _emit(rows, args.format, out)
    if args.tally:
        tally = maximal.residue_tallies(entries)
        row = {"tally": "mod4"}
        row.update(("mod4_%d" % r, c) for r, c in tally.items())
        _emit([row], args.format, out)
    return 0


def _family_size(k, family) -> int:
    q = k.q
    if family == "hypa":
        return (q - 1) * 2 * (q - 2)
    if family == "hypb":
        return (q - 1) * 2 * (q // 2) * (q // 2 - 1)
    if family == "ss":
        return q * q * comb(q - 1, 2) // 3
    return 2 * q ** 3


def cmd_sweep(args, out):
    k = _field(args)
    family = args.family
    if family not in g3.FAMILIES:
        raise UsageError("unknown family %r" % family)
    per_curve = k.q if family in ("hypa", "hypb") else k.q ** 2 + k.q + 1
    size = _family_size(k, family)
    exhaustive = args.exhaustive or (args.samples is None
                                     and size * per_curve <= EXHAUSTIVE_BUDGET)
    if exhaustive:
        curves = g3.enumerate_family(k, family)
    else:
        rng = random.Random(args.seed)
        curves = (g3.random_curve(k, family, rng) for _ in range(args.samples or 500))
    passes, failures = 0, []
    for C in curves:
        rep = verify_isogeny(C)
        if rep.ok:
            passes += 1
        else:
            failures.append(rep.to_dict())
        if args.verbose:
            _emit([rep.to_dict()], "json-lines", out)
    checked = passes + len(failures)
    row = {"family": family, "n": k.n, "mode": "exhaustive" if exhaustive else "sampled",
           "seed": None if exhaustive else args.seed, "checked": checked,
           "passes": passes, "failures": len(failures),
           "coverage": 1.0 if exhaustive else round(min(1.0, checked / size), 6)}
    _emit([row], args.format, out)
    for f in failures:
        _emit([f], "json-lines", out)
    return 1 if failures else 0


# ---------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ascover", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--format", choices=("json-lines", "csv", "pretty"),
                        default="json-lines")
        return sp

    def field_args(sp, need_n=True):
        sp.add_argument("--n", type=int, required=need_n, help="extension degree")
        sp.add_argument("--modulus", help="irreducible modulus as hex bitmask")

    def curve_args(sp):
        sp.add_argument("--curve", help="serialized curve, e.g. hypa:a=1,r=0,t=2")
        sp.add_argument("--family", help="genus-3 family tag")
        sp.add_argument("--params", help="k=v,... in hex")

    def triple_args(sp):
        for j in ("--j1", "--j2", "--j3"):
            sp.add_argument(j, help="j-invariant (hex)")
        sp.add_argument("--sgn", default="0,0,0", help="signature bits, e.g. 0,1,1")
        sp.add_argument("--curves", help="three ';'-separated ord:... curves")

    sp = add("field-info", cmd_field_info, "describe GF(2^n)")
    field_args(sp)
    for name, fn, help_ in (("count", cmd_count, "count rational points"),
                            ("quotients", cmd_quotients, "elliptic quotients"),
                            ("verify-isogeny", cmd_verify_isogeny,
                             "check #C = q + 1 - sum of quotient traces")):
        sp = add(name, fn, help_)
        field_args(sp)
        curve_args(sp)
    for name, fn, help_ in (("cover-exists", cmd_cover_exists, "decide cover existence"),
                            ("cover-construct", cmd_cover_construct, "build witnesses")):
        sp = add(name, fn, help_)
        field_args(sp)
        triple_args(sp)
    sp = add("ss-cover-search", cmd_ss_cover_search, "search the SS family")
    field_args(sp)
    sp.add_argument("--traces", required=True, help="three traces, e.g. --traces=-16,0,16")
    sp.add_argument("--max-tuples", type=int, default=None)
    sp = add("maximal", cmd_maximal, "defect-0 / defect-3 construction")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--defect", type=int, choices=(0, 3), default=0)
    sp.add_argument("--no-count", action="store_true", help="skip the witness scan")
    sp = add("nq3-table", cmd_nq3_table, "N_q(3) for odd n up to --n-max")
    sp.add_argument("--n-max", type=int, default=MAX_SCAN_DEGREE)
    sp.add_argument("--no-count", action="store_true", help="skip the witness scans")
    sp = add("m-seq", cmd_m_seq, "the sequence floor(2^n sqrt 2)")
    sp.add_argument("--count", type=int, default=64)
    sp.add_argument("--tally", action="store_true", help="append residue tallies")
    sp = add("sweep", cmd_sweep, "verify the isogeny identity over a family")
    field_args(sp)
    sp.add_argument("--family", required=True, choices=sorted(g3.FAMILIES))
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--verbose", action="store_true", help="one line per curve")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write("ascover %s: error: %s\n" % (args.command, exc))
        return 2
    except ValueError as exc:
        sys.stderr.write("ascover %s: error: %s\n" % (args.command, exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
