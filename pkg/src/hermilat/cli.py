"""Command-line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 invalid input or
cap violation (one diagnostic line on stderr).
"""
import argparse
import json
import os
import sys

from . import io
from .errors import CapError, HermilatError
from .field import FROBENIUS_HALF, IDENTITY, make_field, verify_involution
from .lattice import check_laws, expand_laws
from .ring import MatrixRing, regularity_report
from .subspace_lattice import lattice_of_space, polarity_subalgebra_search
from .suite import default_grid, enumerate_spaces, grid_from_json, run_suite, sample_spaces

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INVALID = 0, 1, 2


class CheckFailed(Exception):
    pass


def _emit(obj, out=None):
    text = io.dumps(obj)
    if out:
        io.write_text(out, text)
    else:
        sys.stdout.write(text)


def _load_space(args):
    return io.load_space(io.read_json(args.spec), force_cap=args.force_cap)


def _field_args(p):
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--involution", choices=(IDENTITY, FROBENIUS_HALF), default=IDENTITY)


def cmd_field_info(args):
    F = make_field(args.p, args.k, involution=args.involution, force_cap=args.force_cap)
    info = F.to_json()
    info.update({
        "q": F.q,
        "primitive": F.primitive,
        "fixed_points": len(F.fixed_points()),
        "involution_ok": verify_involution(F) is None,
    })
    _emit(info, args.out)
    return EXIT_OK


def cmd_space_check(args):
    V = _load_space(args)
    c = V.classification
    _emit({"space": V.to_json(), "classification": c.to_json()}, args.out)
    if not c.nondegenerate or c.orthosymmetric is False:
        raise CheckFailed("space is degenerate or not orthosymmetric")
    return EXIT_OK


def _lattice_from_spec(args):
    obj = io.read_json(args.spec)
    if "gram" in obj:
        return lattice_of_space(io.load_space(obj, force_cap=args.force_cap), force_cap=args.force_cap)
    return io.load_lattice(obj)


def cmd_lattice_build(args):
    L = _lattice_from_spec(args)
    _emit(L.to_json(), args.out)
    if args.dot:
        io.write_text(args.dot, io.lattice_to_dot(L))
    return EXIT_OK


def cmd_lattice_verify(args):
    L = _lattice_from_spec(args)
    laws = expand_laws(args.laws.split(","))
    res = check_laws(L, laws, seed=args.seed)
    report = {"size": L.size, "laws": {k: r.to_json() for k, r in res.items()}}
    if any(r.mode == "sampled" for r in res.values()):
        report["seed"] = args.seed
        print(f"seed={args.seed}", file=sys.stderr)
    _emit(report, args.out)
    failed = [k for k, r in res.items() if not r.passed]
    if failed:
        raise CheckFailed(f"law(s) failed: {', '.join(failed)}; witness {list(res[failed[0]].witness or ())}")
    return EXIT_OK


def cmd_ring_build(args):
    V = _load_space(args)
    R = MatrixRing(V, force_cap=args.force_cap)
    rep = regularity_report(R, force_cap=args.force_cap)
    _emit({"space": V.to_json(), "size": R.size, "regularity": rep.to_json()}, args.out)
    return EXIT_OK


def cmd_verify_suite(args):
    print(f"seed={args.seed}", file=sys.stderr)
    grid = grid_from_json(io.read_json(args.spec)) if args.spec else default_grid(args.seed)
    report = run_suite(grid, seed=args.seed)
    _emit(report.to_json(timings=args.timings), args.out)
    for r in sorted(report.records, key=lambda r: r.id):
        print(f"{r.id} {r.anchor}: {r.status}", file=sys.stderr)
    if not report.passed:
        raise CheckFailed("verification suite has failing checks")
    return EXIT_OK


def cmd_enumerate(args):
    F = make_field(args.p, args.k, involution=args.involution, force_cap=args.force_cap)
    if args.mode == "sample":
        print(f"seed={args.seed}", file=sys.stderr)
        spaces = sample_spaces(F, args.dim, args.count, args.seed)
    else:
        spaces = enumerate_spaces(F, args.dim)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for i, V in enumerate(spaces):
            if args.mode == "exhaustive" and args.count is not None and i >= args.count:
                break
            out.write(json.dumps(V.to_json(), sort_keys=True) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_explore_polarity(args):
    V = _load_space(args)
    res = polarity_subalgebra_search(V, args.budget, force_cap=args.force_cap)
    _emit(res.to_json(), args.out)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write JSON output to this file")
    common.add_argument("--force-cap", action="store_true", help="lift size caps (with a warning)")

    parser = argparse.ArgumentParser(prog="hermilat", description="Finite forms, *-rings and subspace lattices")
    sub = parser.add_subparsers(dest="group", required=True)

    field = sub.add_parser("field").add_subparsers(dest="verb", required=True)
    p = field.add_parser("info", parents=[common])
    _field_args(p)
    p.set_defaults(fn=cmd_field_info)

    space = sub.add_parser("space").add_subparsers(dest="verb", required=True)
    p = space.add_parser("check", parents=[common])
    p.add_argument("--spec", required=True)
    p.set_defaults(fn=cmd_space_check)

    lattice = sub.add_parser("lattice").add_subparsers(dest="verb", required=True)
    p = lattice.add_parser("build", parents=[common])
    p.add_argument("--spec", required=True, help="space JSON or lattice JSON")
    p.add_argument("--dot", help="also write the Hasse diagram as DOT")
    p.set_defaults(fn=cmd_lattice_build)
    p = lattice.add_parser("verify", parents=[common])
    p.add_argument("--spec", required=True, help="space JSON or lattice JSON")
    p.add_argument("--laws", default="all", help="comma-separated laws or aliases (mil, cmil, mol, polarity-cml, all)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_lattice_verify)

    ring = sub.add_parser("ring").add_subparsers(dest="verb", required=True)
    p = ring.add_parser("build", parents=[common])
    p.add_argument("--spec", required=True)
    p.set_defaults(fn=cmd_ring_build)

    verify = sub.add_parser("verify").add_subparsers(dest="verb", required=True)
    p = verify.add_parser("suite", parents=[common])
    p.add_argument("--spec", help='grid JSON {"spaces": [...]}; default grid otherwise')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true", help="include wall times (output no longer byte-stable)")
    p.set_defaults(fn=cmd_verify_suite)

    p = sub.add_parser("enumerate", parents=[common])
    _field_args(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int)
    p.set_defaults(fn=cmd_enumerate)

    explore = sub.add_parser("explore").add_subparsers(dest="verb", required=True)
    p = explore.add_parser("polarity-subalgebras", parents=[common])
    p.add_argument("--spec", required=True)
    p.add_argument("--budget", type=int, default=10**4)
    p.set_defaults(fn=cmd_explore_polarity)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    if getattr(args, "mode", None) == "sample" and args.count is None:
        args.count = 10
    saved = os.environ.get("HERMILAT_CAP_OVERRIDE")
    if args.force_cap:
        os.environ["HERMILAT_CAP_OVERRIDE"] = "1"
    try:
        return args.fn(args)
    except CheckFailed as exc:
        print(f"check-failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except CapError as exc:
        print(f"cap-error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (HermilatError, ValueError, KeyError, TypeError) as exc:
        msg = str(exc).replace("\n", " ")
        print(f"invalid-input: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        if saved is None:
            os.environ.pop("HERMILAT_CAP_OVERRIDE", None)
        else:
            os.environ["HERMILAT_CAP_OVERRIDE"] = saved


if __name__ == "__main__":
    sys.exit(main())
