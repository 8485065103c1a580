"""Command line interface: ``gorbetti <group> <command> ...``.

Exit status is 0 on success, 1 when a check or experiment reports a
failure, 2 on usage or input errors.  Diagnostics go to stderr prefixed
with ``E_USAGE:``, ``E_INPUT:`` or ``E_CHECK:``.
"""

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

from . import binomial_core as bc
from . import hvector as hv
from .linalg import DEFAULT_MODULUS, make_field
from .pfaffian import DEFAULT_PROFILES, codim3_experiment, generic_linear, maximal_pfaffians
from .polyring import (
    Ideal,
    artinian_check,
    colon_piece,
    default_degree_cap,
    hilbert_function,
    minimal_generators_by_degree,
    parse_ideal,
    parse_polynomial,
)
from .resolution import compare_with_extremal, koszul_betti, render_diagram, structural_checks

ENV_CHAR = "GORBETTI_CHAR"

EXAMPLE1_HVECTOR = (1, 4, 9, 13, 13, 9, 4, 1)
EXAMPLE1_MINGENS = {2: 1, 3: 3, 4: 4, 5: 1, 6: 1}
EXAMPLE1_TOTALS = (1, 10, 18, 10, 1)
EXAMPLE1_DIAGRAM = """\
1  -  -  -  -
-  1  -  -  -
-  3  4  1  -
-  4  5  1  -
-  1  5  4  -
-  1  4  3  -
-  -  -  1  -
-  -  -  -  1
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # code prefix first so the diagnostic stream stays machine-parseable
        print(f"E_USAGE: {message}", file=sys.stderr)
        self.print_usage(sys.stderr)
        sys.exit(2)


def example1_text():
    return resources.files("gorbetti").joinpath("data/example1.ideal").read_text()


def _field(args):
    char = args.char
    if char is None:
        char = int(os.environ.get(ENV_CHAR, DEFAULT_MODULUS))
    try:
        return make_field(char)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_ideal(args):
    path = Path(args.file)
    if not path.exists():
        raise UsageError(f"no such file: {path}")
    return parse_ideal(path.read_text(), _field(args))


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _join(xs):
    return " ".join(str(x) for x in xs)


# macaulay ------------------------------------------------------------------


def cmd_macaulay_rep(args):
    rep = bc.macaulay_rep(args.h, args.j)
    groups = bc.grouped_rep(rep).groups
    payload = {
        "kind": "macaulay_rep",
        "value": rep.value,
        "degree": rep.degree,
        "terms": [list(t) for t in rep.terms],
        "groups": [list(g) for g in groups],
    }
    _emit(args, payload, str(rep))
    return 0


def cmd_macaulay_bound(args):
    b = bc.macaulay_bound(args.h, args.j)
    _emit(args, {"kind": "macaulay_bound", "h": args.h, "j": args.j, "bound": b}, str(b))
    return 0


def _read_sequence(items):
    if len(items) == 1 and Path(items[0]).is_file():
        text = Path(items[0]).read_text()
        items = text.replace(",", " ").split()
    else:
        items = " ".join(items).replace(",", " ").split()
    try:
        return [int(x) for x in items]
    except ValueError:
        raise UsageError(f"not a sequence of integers: {' '.join(items)}") from None


def cmd_osequence_check(args):
    seq = _read_sequence(args.seq)
    if not seq:
        raise UsageError("empty sequence")
    ok = bc.is_o_sequence(seq)
    _emit(args, {"kind": "osequence", "sequence": seq, "o_sequence": ok}, "true" if ok else "false")
    return 0


# gorenstein ----------------------------------------------------------------


def cmd_nu0(args):
    v = hv.nu0(args.g, args.p)
    _emit(args, {"kind": "nu0", "g": args.g, "p": args.p, "nu0": v}, str(v))
    return 0


def cmd_extremal(args):
    g, p = args.g, args.p
    h = hv.extremal_hvector(g, p)
    degrees = hv.extremal_degree_sequence(g, p)
    betti = hv.pure_resolution_betti(degrees)
    payload = {
        "kind": "extremal",
        "g": g,
        "p": p,
        "hvector": list(h.entries),
        "multiplicity": hv.extremal_multiplicity(g, p),
        "nu0": hv.nu0(g, p),
        "degrees": list(degrees),
        "betti": list(betti),
    }
    text = (
        f"h-vector: {h}\n"
        f"multiplicity: {payload['multiplicity']}\n"
        f"nu0: {payload['nu0']}\n"
        f"shifts: {_join(degrees)}\n"
        f"betti: {_join(betti)}\n"
    )
    _emit(args, payload, text)
    return 0


def cmd_forbidden(args):
    forb, nonuni = hv.forbidden_nu(args.g, args.p)
    payload = {
        "kind": "forbidden",
        "g": args.g,
        "p": args.p,
        "nu0": hv.nu0(args.g, args.p),
        "forbidden": sorted(forb),
        "nonunimodal_required": sorted(nonuni),
    }
    text = f"forbidden: {_join(sorted(forb)) or '-'}\nnonunimodal: {_join(sorted(nonuni)) or '-'}\n"
    _emit(args, payload, text)
    return 0


def cmd_enumerate(args):
    g, p = args.g, args.p
    top = hv.nu0(g, p)
    ext = hv.extremal_hvector(g, p)
    emin = hv.extremal_multiplicity(g, p)
    vectors = list(hv.enumerate_symmetric_osequences(g, p, args.smax, node_limit=args.node_limit))
    bad = [
        h for h in vectors
        if h.nu_p > top
        or (h.nu_p == top and h != ext)
        or h.multiplicity < emin
        or (h.multiplicity == emin and h != ext)
    ]
    payload = {
        "kind": "enumerate",
        "g": g,
        "p": p,
        "sigma_max": args.smax,
        "nu0": top,
        "extremal_multiplicity": emin,
        "count": len(vectors),
        "vectors": [{"hvector": list(h.entries), "nu_p": h.nu_p, "multiplicity": h.multiplicity} for h in vectors],
        "violations": [list(h.entries) for h in bad],
    }
    lines = [f"{h}    nu_p={h.nu_p} e={h.multiplicity}" for h in vectors]
    lines.append(f"count: {len(vectors)}  nu0: {top}  e(g,p): {emin}  violations: {len(bad)}")
    _emit(args, payload, "\n".join(lines))
    if bad:
        print(f"E_CHECK: {len(bad)} h-vectors violate the degree-p generator bound", file=sys.stderr)
        return 1
    return 0


def cmd_certificate(args):
    cert = hv.certificate(args.g, args.p, args.j, args.h)
    payload = {"kind": "certificate", **cert.to_dict()}
    if cert.trivial:
        text = f"trivial: h={cert.h} <= j={cert.j}, growth bound equals h\nverdict: {cert.verdict}\n"
    else:
        lines = [
            f"rep: {cert.grouped.source}",
            "groups (k, j, i): " + "  ".join(str(g) for g in cert.grouped.groups),
            f"k <= g-2: {cert.k_ok}",
            f"(g-1)/(p-1) > (k+1)/(j+1): {cert.ratio_ok}",
            "F: " + "  ".join(str(f) for f in cert.f_values),
            "A: " + ("  ".join(str(a) for a in cert.a_values) or "-"),
            "B: " + ("  ".join(str(b) for b in cert.b_values) or "-"),
            f"growth bound: {cert.growth_bound} (target {cert.target})",
            f"verdict: {cert.verdict}",
        ]
        text = "\n".join(lines) + "\n"
    _emit(args, payload, text)
    if not cert.verdict:
        print("E_CHECK: inequality chain failed", file=sys.stderr)
        return 1
    return 0


def cmd_monotonic(args):
    ok, bad = hv.growth_monotonic_scan(args.hmax, args.jmin, args.jmax)
    payload = {"kind": "monotonic", "h_max": args.hmax, "j_min": args.jmin, "j_max": args.jmax,
               "non_increasing": ok, "counterexample": list(bad) if bad else None}
    text = "true" if ok else f"false: bound({bad[0]}, {bad[1] + 1}) > bound({bad[0]}, {bad[1]})"
    _emit(args, payload, text)
    return 0


# ideal ---------------------------------------------------------------------


def _default_dmax(ideal):
    chk = artinian_check(ideal)
    return chk.socle_degree + 1 if chk.artinian else default_degree_cap(ideal)


def cmd_ideal_hf(args):
    ideal = _load_ideal(args)
    dmax = args.dmax if args.dmax is not None else _default_dmax(ideal)
    h = hilbert_function(ideal, dmax)
    _emit(args, {"kind": "hilbert", "d_max": dmax, "values": h}, _join(h))
    return 0


def cmd_ideal_mingens(args):
    ideal = _load_ideal(args)
    counts = minimal_generators_by_degree(ideal)
    payload = {"kind": "mingens", "counts": {str(d): c for d, c in counts.items()}, "total": sum(counts.values())}
    text = "\n".join(f"{d}: {c}" for d, c in counts.items()) + f"\ntotal: {sum(counts.values())}\n"
    _emit(args, payload, text)
    return 0


def cmd_ideal_betti(args):
    ideal = _load_ideal(args)
    table = koszul_betti(ideal, j_max=args.jmax, d_cap=args.dcap)
    checks = structural_checks(table, expect_gorenstein=table.totals[-1] == 1)
    payload = {"kind": "betti", "table": table.to_dict(), "checks": checks}
    text = f"totals: {_join(table.totals)}\n{render_diagram(table)}"
    if checks["failures"]:
        text += "failed checks: " + ", ".join(checks["failures"]) + "\n"
    _emit(args, payload, text)
    return 0


def cmd_ideal_colon(args):
    ideal = _load_ideal(args)
    f = parse_polynomial(args.by, ideal.ring)
    dmax = args.dmax if args.dmax is not None else _default_dmax(ideal)
    pieces = []
    lines = []
    for d in range(dmax + 1):
        basis = [ideal.ring.from_vector(d, row) for row in colon_piece(ideal, f, d).basis()]
        pieces.append({"degree": d, "dim": len(basis), "basis": [str(b) for b in basis]})
        lines.append(f"degree {d}: dim {len(basis)}")
        lines.extend(f"  {b}" for b in basis)
    _emit(args, {"kind": "colon", "by": str(f), "pieces": pieces}, "\n".join(lines))
    return 0


# pfaffian ------------------------------------------------------------------


def cmd_pfaffian_demo(args):
    nu = args.nu
    if nu < 3 or nu % 2 == 0:
        raise UsageError("NU must be odd and >= 3")
    M = generic_linear(nu, seed=args.seed)
    gens = maximal_pfaffians(M)
    ideal = Ideal(M.ring, gens)
    table = koszul_betti(ideal)
    p = min(f.degree for f in gens)
    payload = {
        "kind": "pfaffian_demo",
        "nu": nu,
        "p": p,
        "generators": [str(f) for f in gens],
        "betti_totals": list(table.totals),
    }
    text = "\n".join(f"f{t + 1} = {f}" for t, f in enumerate(gens))
    text += f"\np: {p}  2p+1: {2 * p + 1}\ntotals: {_join(table.totals)}\n{render_diagram(table)}"
    _emit(args, payload, text)
    return 0


def cmd_pfaffian_experiment(args):
    report = codim3_experiment(args.trials, DEFAULT_PROFILES, seed=args.seed)
    s = report["summary"]
    _emit(args, {"kind": "experiment", **report},
          f"trials: {s['trials']}  skipped: {s['skipped']}  violations: {s['violations']}")
    if s["violations"]:
        print(f"E_CHECK: {s['violations']} trials violate nu <= 2p+1 or the resolution shape", file=sys.stderr)
        return 1
    return 0


# worked examples -----------------------------------------------------------


def _example1_run(field):
    ideal = parse_ideal(example1_text(), field)
    chk = artinian_check(ideal)
    h = tuple(hilbert_function(ideal, chk.socle_degree))
    mingens = minimal_generators_by_degree(ideal)
    table = koszul_betti(ideal)
    return ideal, h, mingens, table


def cmd_example1(args):
    field = _field(args)
    ideal, h, mingens, table = _example1_run(field)
    other = make_field(0 if field.characteristic else DEFAULT_MODULUS)
    _, h2, mingens2, table2 = _example1_run(other)
    diagram = render_diagram(table)
    checks = structural_checks(table, expect_gorenstein=True)
    e = sum(h)

    x = ideal.ring.gens()
    J = Ideal(ideal.ring, [x[0] ** 2, x[1] ** 4, x[2] ** 3, x[3] ** 4])
    colon_ok = all(colon_piece(J, x[0] * x[1] - x[2] * x[3], d) == ideal.piece(d) for d in range(9))

    results = {
        "hvector": h == EXAMPLE1_HVECTOR,
        "multiplicity": e == 54,
        "mingens": mingens == EXAMPLE1_MINGENS,
        "betti_totals": table.totals == EXAMPLE1_TOTALS,
        "diagram": diagram == EXAMPLE1_DIAGRAM,
        "structure": not checks["failures"],
        "colon": colon_ok,
        "fields_agree": (h, mingens, table.entries) == (h2, mingens2, table2.entries),
    }
    ext = compare_with_extremal(table, 2)
    payload = {
        "kind": "example1",
        "characteristic": field.characteristic,
        "hvector": list(h),
        "multiplicity": e,
        "extremal_multiplicity": hv.extremal_multiplicity(4, 2),
        "nu0": hv.nu0(4, 2),
        "mingens": {str(d): c for d, c in mingens.items()},
        "table": table.to_dict(),
        "extremal_comparison": [{"beta": b, "extremal": x_, "le": le} for b, x_, le in ext],
        "checks": results,
    }
    lines = [
        f"field: {'Q' if field.characteristic == 0 else 'F_%d' % field.characteristic}",
        f"h-vector: {_join(h)}",
        f"multiplicity: {e}  (extremal e(4,2) = {hv.extremal_multiplicity(4, 2)})",
        f"degree-2 generators: {mingens.get(2, 0)}  (nu0(4,2) = {hv.nu0(4, 2)})",
        "minimal generators by degree: " + "  ".join(f"{d}:{c}" for d, c in mingens.items()),
        f"betti totals: {_join(table.totals)}  (extremal: {_join(b for _, b, _ in ext)})",
        "diagram:",
        diagram.rstrip("\n"),
    ]
    lines += [f"check {k}: {'ok' if v else 'FAIL'}" for k, v in results.items()]
    _emit(args, payload, "\n".join(lines))
    failed = [k for k, v in results.items() if not v]
    if failed:
        print("E_CHECK: example1 mismatches: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


# parser --------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps subcommand defaults from overwriting root-level flags
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--char", type=int, default=argparse.SUPPRESS,
                        help=f"coefficient field: prime q or 0 for rationals (default ${ENV_CHAR} or {DEFAULT_MODULUS})")

    parser = _Parser(prog="gorbetti", description=__doc__.splitlines()[0], parents=[common])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def sub(group, name, func, **kw):
        p = group.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    mac = groups.add_parser("macaulay", help="Macaulay representations and growth bounds").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name, func in (("rep", cmd_macaulay_rep), ("bound", cmd_macaulay_bound)):
        p = sub(mac, name, func)
        p.add_argument("h", type=int)
        p.add_argument("j", type=int)

    oseq = groups.add_parser("osequence", help="O-sequence test").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = sub(oseq, "check", cmd_osequence_check)
    p.add_argument("seq", nargs="+", help="a file, or the entries inline")

    gor = groups.add_parser("gorenstein", help="Gorenstein h-vector tools").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name, func in (("nu0", cmd_nu0), ("extremal", cmd_extremal), ("forbidden", cmd_forbidden)):
        p = sub(gor, name, func)
        p.add_argument("g", type=int)
        p.add_argument("p", type=int)
    p = sub(gor, "enumerate", cmd_enumerate)
    p.add_argument("g", type=int)
    p.add_argument("p", type=int)
    p.add_argument("smax", type=int)
    p.add_argument("--node-limit", type=int, default=hv.DEFAULT_NODE_LIMIT)
    p = sub(gor, "certificate", cmd_certificate)
    for a in ("g", "p", "j", "h"):
        p.add_argument(a, type=int)
    p = sub(gor, "monotonic", cmd_monotonic)
    for a in ("hmax", "jmin", "jmax"):
        p.add_argument(a, type=int)

    ide = groups.add_parser("ideal", help="computations with an ideal file").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = sub(ide, "hf", cmd_ideal_hf)
    p.add_argument("file")
    p.add_argument("--dmax", type=int)
    p = sub(ide, "betti", cmd_ideal_betti)
    p.add_argument("file")
    p.add_argument("--jmax", type=int)
    p.add_argument("--dcap", type=int)
    p = sub(ide, "mingens", cmd_ideal_mingens)
    p.add_argument("file")
    p = sub(ide, "colon", cmd_ideal_colon)
    p.add_argument("file")
    p.add_argument("--by", required=True)
    p.add_argument("--dmax", type=int)

    pf = groups.add_parser("pfaffian", help="maximal pfaffian ideals in three variables").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = sub(pf, "demo", cmd_pfaffian_demo)
    p.add_argument("nu", type=int)
    p.add_argument("--seed", type=int, default=0)
    p = sub(pf, "experiment", cmd_pfaffian_experiment)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    pap = groups.add_parser("paper", help="reproduce worked examples").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    sub(pap, "example1", cmd_example1)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    args.json = getattr(args, "json", False)
    args.char = getattr(args, "char", None)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"E_USAGE: {exc}", file=sys.stderr)
        return 2
    except (ValueError, hv.SearchLimitExceeded) as exc:
        print(f"E_INPUT: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
