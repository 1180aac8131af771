"""Command-line front end.

Subcommands: minpoly, mr, bezout, plcp, annihilator, reverse-lc, bench.
Results go to stdout (optionally as JSON), diagnostics to stderr; exit
status is 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time

from . import annihilator as ann
from . import bezout as bz
from . import plcp as plcp_mod
from . import reverse as rev
from .lfsr import (
    minimal_realisation,
    mr_gf2_bits,
    mr_scan,
    normalize_monic,
    run,
    verify_identity,
)
from .oracle import brute_min_annihilator, ext_euclid
from .poly import PairedPoly, Poly, format_poly, parse_poly, pretty_poly
from .ring import DomainError, domain_from_string
from .sequence import SequenceView, parse_sequence


def _add_common(p, seq=True):
    p.add_argument("--ring", default="gf2", help="gf2 | gfp:<p> | int | gfp_poly:<p>")
    p.add_argument("--epsilon", default=None, help="initial-state constant (default 0)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    if seq:
        p.add_argument("--seq", required=True, help="comma-separated terms, s1 first")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="seqmin",
        description="Exact minimal polynomials, realisations and Bezout identities.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minpoly", help="minimal polynomial of a sequence")
    _add_common(p)
    p.add_argument("--monic", action="store_true", help="normalize monic (fields)")

    p = sub.add_parser("mr", help="minimal realisation with Bezout coefficients")
    _add_common(p)
    p.add_argument("--monic", action="store_true", help="normalize monic (fields)")
    p.add_argument("--trace", action="store_true", help="print the per-step table")

    p = sub.add_parser("bezout", help="Bezout pair for u, u2 with u monic")
    _add_common(p, seq=False)
    p.add_argument("--u", required=True, help="monic polynomial, ascending coeffs")
    p.add_argument("--u2", required=True, help="second polynomial")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against extended Euclid (fields only)")
    p.add_argument("--count-mults", action="store_true",
                   help="report the multiplication count")

    p = sub.add_parser("plcp", help="perfect linear-complexity-profile report")
    p.add_argument("--ring", default="gf2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seq", help="sequence to test")
    p.add_argument("--exhaustive", type=int, metavar="N",
                   help="verify profile/stability equivalence over GF(2)^N")

    p = sub.add_parser("annihilator", help="least-degree nonvanishing annihilator")
    _add_common(p)
    p.add_argument("--extend", action="store_true",
                   help="use the one-term sequence extension")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check degree by brute force (small fields)")

    p = sub.add_parser("reverse-lc", help="complexity of the reversed sequence")
    _add_common(p)
    p.add_argument("--classify", action="store_true",
                   help="check the n = 2*LC dichotomy")

    p = sub.add_parser("bench", help="timing scan over random binary sequences")
    p.add_argument("--sizes", default="4096,8192,16384,32768,65536,131072",
                   help="comma-separated lengths")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--count-mults", action="store_true",
                   help="also report generic-engine multiplication counts")
    return ap


def _dom(args):
    return domain_from_string(args.ring)


def _eps(dom, args):
    if getattr(args, "epsilon", None) is None:
        return None
    return dom.parse(args.epsilon)


def _jpoly(f: Poly):
    return [c if not isinstance(c, tuple) else list(c) for c in f.coeffs]


def _jpair(p: PairedPoly):
    return [_jpoly(p.f), _jpoly(p.f2)]


def _jval(v):
    return list(v) if isinstance(v, tuple) else v


def _result_json(res, profile, verified):
    return {
        "mu": _jpoly(res.mu.f),
        "mu2": _jpoly(res.mu.f2),
        "mu_prime": _jpair(res.mu_prime),
        "bez_numu": _jpair(res.bez_numu),
        "bez_fg": _jpair(res.bez_fg),
        "nabla": _jval(res.nabla),
        "lc_profile": profile,
        "verified": verified,
    }


def _verify(res) -> bool:
    ok1 = verify_identity(res.bez_numu, res.mu, res.nabla)
    ok2 = verify_identity(
        res.bez_fg, PairedPoly(res.mu.f, res.mu_prime.f), res.nabla
    )
    return ok1 and ok2


def cmd_minpoly(args):
    dom = _dom(args)
    s = parse_sequence(dom, args.seq)
    res = minimal_realisation(s, _eps(dom, args))
    if args.monic:
        res = normalize_monic(res)
    verified = _verify(res)
    if args.json:
        print(json.dumps({"mu": _jpoly(res.mu.f), "verified": verified}))
    else:
        print("mu = %s" % pretty_poly(res.mu.f))
        print("LC = %d" % res.mu.f.degree())
    return 0 if verified else 1


def cmd_mr(args):
    dom = _dom(args)
    s = parse_sequence(dom, args.seq)
    eps = _eps(dom, args)
    res = minimal_realisation(s, eps)
    if args.monic:
        res = normalize_monic(res)
    verified = _verify(res)
    profile = [snap.mu.f.degree() for snap in mr_scan(s, eps)]
    if args.trace:
        _print_trace(s, eps)
    if args.json:
        print(json.dumps(_result_json(res, profile, verified)))
    else:
        print("mu      = (%s, %s)" % (pretty_poly(res.mu.f), pretty_poly(res.mu.f2)))
        print("mu'     = (%s, %s)"
              % (pretty_poly(res.mu_prime.f), pretty_poly(res.mu_prime.f2)))
        print("bez_numu= (%s, %s)"
              % (pretty_poly(res.bez_numu.f), pretty_poly(res.bez_numu.f2)))
        print("bez_fg  = (%s, %s)"
              % (pretty_poly(res.bez_fg.f), pretty_poly(res.bez_fg.f2)))
        print("nabla   = %s" % dom.format(res.nabla))
        print("profile = %s" % profile)
        print("verified: %s" % verified)
    return 0 if verified else 1


def _print_trace(s, eps):
    dom = s.dom
    print("  j | delta | e | mu ; mu2 | mu' ; mu2'")
    for snap in mr_scan(s, eps):
        print(" %2d | %5s | %2d | %s ; %s | %s ; %s" % (
            snap.j, dom.format(snap.delta), snap.e,
            pretty_poly(snap.mu.f), pretty_poly(snap.mu.f2),
            pretty_poly(snap.mu_prime.f), pretty_poly(snap.mu_prime.f2)))


def cmd_bezout(args):
    dom = _dom(args)
    u = parse_poly(dom, args.u)
    u2 = parse_poly(dom, args.u2)
    res = bz.bezout_pair(u, u2, count_mults=args.count_mults)
    from .poly import mul
    recomputed = mul(res.f.f, u) + mul(res.f.f2, u2)
    verified = recomputed == res.g
    oracle_ok = True
    if args.oracle:
        if not dom.is_field:
            print("oracle cross-check needs a field", file=sys.stderr)
            return 2
        g, a, a2 = ext_euclid(u, u2)
        oracle_ok = res.g == g.scale(res.nabla) or res.g == g.scale(
            dom.neg(res.nabla)
        )
        verified = verified and oracle_ok
    if args.json:
        out = {
            "f": _jpair(res.f),
            "nabla": _jval(res.nabla),
            "g": _jpoly(res.g),
            "verified": verified,
        }
        if args.count_mults:
            out["mults"] = res.mults
        print(json.dumps(out))
    else:
        print("f     = (%s, %s)" % (pretty_poly(res.f.f), pretty_poly(res.f.f2)))
        print("nabla = %s" % dom.format(res.nabla))
        print("g     = %s" % pretty_poly(res.g))
        if args.count_mults:
            print("mults = %d" % res.mults)
        print("verified: %s" % verified)
    return 0 if verified else 1


def cmd_plcp(args):
    dom = domain_from_string(args.ring)
    if args.exhaustive is not None:
        ok = plcp_mod.check_stable_theorem(args.exhaustive)
        counts = plcp_mod.count_plcp(2, args.exhaustive)
        if args.json:
            print(json.dumps({"n": args.exhaustive, "equivalent": ok,
                              "plcp_count": counts}))
        else:
            print("n = %d: profile/stability equivalent: %s (count %d)"
                  % (args.exhaustive, ok, counts))
        return 0 if ok else 1
    if not args.seq:
        print("--seq or --exhaustive required", file=sys.stderr)
        return 2
    s = parse_sequence(dom, args.seq)
    report = plcp_mod.is_plcp(s)
    if args.json:
        print(json.dumps({
            "is_plcp": report.is_plcp,
            "profile": list(report.profile),
            "odd_discrepancies": [_jval(d) for d in report.odd_discrepancies],
            "exponents": list(report.exponent_trace),
        }))
    else:
        print("PLCP: %s" % report.is_plcp)
        print("profile = %s" % list(report.profile))
    return 0


def cmd_annihilator(args):
    dom = _dom(args)
    s = parse_sequence(dom, args.seq)
    eps = _eps(dom, args)
    if args.extend:
        res = ann.extend_by_jump(s, eps)
        pair, extra = res.mu_ext, {"s_next": _jval(res.s_next)}
    else:
        pair, extra = ann.min_nonvanishing(s, eps), {}
    degree = ann.lc_bullet(s, eps)
    oracle_ok = True
    if args.oracle:
        d, _, _ = brute_min_annihilator(s, require_nonzero_constant=True)
        oracle_ok = pair.f.degree() == d
    if args.json:
        out = {"mu_bullet": _jpair(pair), "degree": degree, "verified": oracle_ok}
        out.update(extra)
        print(json.dumps(out))
    else:
        print("mu_bullet = (%s, %s)" % (pretty_poly(pair.f), pretty_poly(pair.f2)))
        print("degree    = %d" % degree)
        for k, v in extra.items():
            print("%s = %s" % (k, v))
        if args.oracle:
            print("oracle agreement: %s" % oracle_ok)
    return 0 if oracle_ok else 1


def cmd_reverse_lc(args):
    dom = _dom(args)
    s = parse_sequence(dom, args.seq)
    eps = _eps(dom, args)
    if args.classify:
        res = rev.iy_classify(s, eps)
        if args.json:
            print(json.dumps({"lc": res.lc, "rev_lc": res.rev_lc,
                              "verified": res.verdict}))
        else:
            print("LC = %d, reversed LC = %d, dichotomy holds: %s"
                  % (res.lc, res.rev_lc, res.verdict))
        return 0 if res.verdict else 1
    lc = rev.reverse_lc(s, eps)
    if args.json:
        print(json.dumps({"rev_lc": lc}))
    else:
        print("reversed LC = %d" % lc)
    return 0


def cmd_bench(args):
    rng = random.Random(args.seed)
    sizes = [int(t) for t in args.sizes.split(",")]
    rows = []
    for n in sizes:
        bits = rng.getrandbits(n)
        t0 = time.perf_counter()
        mr_gf2_bits(bits, n)
        dt = time.perf_counter() - t0
        row = {"n": n, "seconds": dt}
        if args.count_mults:
            dom = domain_from_string("gf2")
            small = min(n, 2048)  # generic engine is for counting, keep it modest
            s = SequenceView(dom, [(bits >> i) & 1 for i in range(small)])
            st = run(s, count_mults=True)
            row["mults"] = st.mults
            row["mults_n"] = small
        rows.append(row)
    alpha = _fit_exponent(rows)
    if args.json:
        print(json.dumps({"rows": rows, "alpha": alpha}))
    else:
        for row in rows:
            line = "n = %7d  %8.4f s" % (row["n"], row["seconds"])
            if "mults" in row:
                line += "  (%d mults at n=%d)" % (row["mults"], row["mults_n"])
            print(line)
        print("fitted exponent alpha = %.3f" % alpha)
    return 0


def _fit_exponent(rows):
    """Least-squares slope of log(time) against log(n)."""
    pts = [(math.log(r["n"]), math.log(max(r["seconds"], 1e-9))) for r in rows]
    n = len(pts)
    mx = sum(x for x, _ in pts) / n
    my = sum(y for _, y in pts) / n
    num = sum((x - mx) * (y - my) for x, y in pts)
    den = sum((x - mx) ** 2 for x, y in pts)
    return num / den if den else float("nan")


_COMMANDS = {
    "minpoly": cmd_minpoly,
    "mr": cmd_mr,
    "bezout": cmd_bezout,
    "plcp": cmd_plcp,
    "annihilator": cmd_annihilator,
    "reverse-lc": cmd_reverse_lc,
    "bench": cmd_bench,
}


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        code = _COMMANDS[args.command](args)
    except (DomainError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
