"""Command-line front end.

Every command prints one JSON document on standard output.  Exit status
is 0 when all flags pass, 1 when some flag fails and 2 for malformed
input.
"""

import argparse
import sys

from . import io
from .report import SCHEMA_VERSION, Report
from .twovec import ComposabilityError, StructureError
from .ratmat import ShapeError

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(out, reports, args):
    payload = {"schema": SCHEMA_VERSION}
    payload.update(out)
    payload["reports"] = [r.to_json() for r in reports]
    payload["passed"] = all(r.passed for r in reports)
    if getattr(args, "no_timing", False):
        for r in payload["reports"]:
            r.pop("timing", None)
    sys.stdout.write(io.dump(payload) + "\n")
    return EXIT_PASS if payload["passed"] else EXIT_FAIL


def _expect(obj, kind):
    got = obj.get("kind") if isinstance(obj, dict) else None
    if got != kind:
        raise InputError(f"expected a {kind!r} record, found {got!r}")
    return obj


def _leibniz(path, need_e=False):
    L, e = io.leibniz_from_json(_expect(io.load(path), "leibniz2"))
    if need_e and e is None:
        raise InputError(f"{path} has no central object 'e'")
    return L, e


# ---------------------------------------------------------------------
# commands

def cmd_check(args):
    from .leibniz2 import central_defects, check_leibniz2
    from .rack2 import check_linear_2rack
    if args.structure == "leibniz2":
        L, e = _leibniz(args.file)
        rep = check_leibniz2(L)
        if e is not None:
            for name, defect in central_defects(L.bracket, e).items():
                rep.set(f"central_{name}", defect.is_zero())
        return _emit({}, [rep], args)
    R = io.rack_from_json(_expect(io.load(args.file), "rack2"))
    return _emit({}, [check_linear_2rack(R)], args)


def _build(kind, path):
    from .zte import from_central_leibniz, from_linear_2rack
    if kind == "leibniz2":
        L, e = _leibniz(path, need_e=True)
        return from_central_leibniz(L, e)
    return from_linear_2rack(io.rack_from_json(_expect(io.load(path), "rack2")))


def cmd_build_zte(args):
    sol = _build(args.source, args.file)
    rec = io.zte_to_json(sol)
    if args.out:
        io.dump(rec, args.out)
    rep = Report("build")
    rep.set("built", True)
    return _emit({} if args.out else {"solution": rec}, [rep], args)


def cmd_verify_zte(args):
    from .zte import verify_zte
    sol = io.zte_from_json(_expect(io.load(args.file), "zte"))
    return _emit({}, [verify_zte(sol)], args)


def cmd_verify_ybe(args):
    from .ratmat import inverse
    from .zte import ybe_defect
    from .report import column_violations
    dim, m = io.ybe_from_json(_expect(io.load(args.file), "ybe"))
    rep = Report("ybe")
    defect = ybe_defect(m, dim)
    rep.set("ybe", defect.is_zero(), column_violations("ybe", defect, [dim] * 3))
    rep.set("invertible", inverse(m) is not None)
    return _emit({}, [rep], args)


def cmd_decat(args):
    from .zte import decategorify_solution, from_central_leibniz, from_linear_2rack
    obj = io.load(args.file)
    structure = None
    if args.source == "leibniz2":
        L, e = io.leibniz_from_json(_expect(obj, "leibniz2"))
        if e is None:
            raise InputError(f"{args.file} has no central object 'e'")
        sol = from_central_leibniz(L, e)
        structure = ("leibniz", L, e)
    elif args.source == "rack2":
        R = io.rack_from_json(_expect(obj, "rack2"))
        sol = from_linear_2rack(R)
        structure = ("rack", R)
    else:
        sol = io.zte_from_json(_expect(obj, "zte"))
        if args.square:
            raise InputError("--square needs the underlying structure, not a bare solution")
    ybe, rep = decategorify_solution(sol, structure if args.square else None)
    return _emit({"ybe": io.ybe_to_json(ybe.dim, ybe.Bbar)}, [rep], args)


def cmd_split(args):
    from .split import (is_leibniz_section, leibniz_section_report, make_splitting,
                        rack_from_splitting, solutions_coincide, splitting_report)
    from .rack2 import check_linear_2rack
    L, e = _leibniz(args.structure, need_e=True)
    sec = io.load(args.section)
    sigma0 = io.mat_from_json(sec.get("sigma0", sec) if isinstance(sec, dict) else sec)
    sp = make_splitting(L, e, sigma0)
    if not sp.is_homomorphism:
        return _emit({}, [splitting_report(sp)], args)
    R = rack_from_splitting(sp)
    reports = [check_linear_2rack(R)]
    if is_leibniz_section(sp):
        reports.append(solutions_coincide(sp))
    else:
        info = leibniz_section_report(sp)
        info.kind = "leibniz_section"
        out = solutions_coincide(sp)
        # informative only: the coincidence is not claimed for such sections
        out.notes["not_a_leibniz_section"] = info.failed()
        return _emit({"rack": io.rack_to_json(R), "coincidence": out.to_json()}, reports, args)
    return _emit({"rack": io.rack_to_json(R)}, reports, args)


def cmd_finrack(args):
    from . import finrack as fr
    obj = io.load(args.file)
    if args.action == "check":
        X = io.fincat_from_json(obj.get("category", obj))
        lhd = io.bifunctor_from_json(obj["lhd"]) if "lhd" in obj else None
        if lhd is None:
            raise InputError("missing 'lhd' table")
        inv = io.bifunctor_from_json(obj["lhd_inv"]) if "lhd_inv" in obj else None
        if "R" in obj:
            if inv is None:
                raise InputError("a semistrict check needs the 'lhd_inv' table")
            R = {(x, y, z): m for x, y, z, m in obj["R"]}
            return _emit({}, [fr.check_semistrict_2rack(X, lhd, R, inv)], args)
        return _emit({}, [fr.check_strict_2rack(X, lhd, inv)], args)
    cm = io.crossed_module_from_json(obj.get("crossed_module", obj))
    G2 = fr.two_group_from_crossed_module(cm)
    if args.action == "build-2group":
        return _emit({"two_group": io.two_group_to_json(G2)}, [G2.report()], args)
    P, lhd, inv = fr.conjugation_rack(G2, G2.cat, fr.translation_action(G2))
    rep = fr.check_strict_2rack(P, lhd, inv)
    return _emit({"category": io.fincat_to_json(P), "lhd": io.bifunctor_to_json(lhd),
                  "lhd_inv": io.bifunctor_to_json(inv)}, [rep], args)


def cmd_forge(args):
    from . import forge
    if args.action == "fixture":
        obj = forge.load_fixture(args.name)
        rec = _fixture_json(args.name, obj)
    else:
        try:
            dims = tuple(int(x) for x in args.dims.split(","))
        except ValueError:
            raise InputError(f"bad --dims {args.dims!r}") from None
        if len(dims) != 2:
            raise InputError("--dims takes two integers")
        if args.kind == "leibniz2":
            s = forge.sample_central_leibniz(args.seed, *dims, bound=args.bound)
            rec = io.leibniz_to_json(s.L, s.e)
        else:
            R, _ = forge.sample_linear_2rack(args.seed, *dims, bound=args.bound)
            rec = io.rack_to_json(R)
    if args.out:
        io.dump(rec, args.out)
    rep = Report("forge")
    rep.set("generated", True)
    return _emit({} if args.out else {"structure": rec}, [rep], args)


def _fixture_json(name, obj):
    from .rack2 import Linear2Rack
    if isinstance(obj, Linear2Rack):
        return io.rack_to_json(obj)
    if isinstance(obj, tuple) and len(obj) == 2:
        return io.leibniz_to_json(*obj)
    if isinstance(obj, tuple):
        X, lhd, inv = obj
        return {"kind": "finrack", "category": io.fincat_to_json(X), "lhd": io.bifunctor_to_json(lhd),
                "lhd_inv": io.bifunctor_to_json(inv)}
    return io.leibniz_to_json(obj)


# ---------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="ztekit", description="Tetrahedron-equation structure checker")
    p.add_argument("--no-timing", action="store_true", help="omit timing fields from reports")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check a Leibniz 2-algebra or linear 2-rack")
    c.add_argument("structure", choices=["leibniz2", "rack2"])
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("build-zte", help="build a tetrahedron solution")
    c.add_argument("--from", dest="source", choices=["leibniz2", "rack2"], required=True)
    c.add_argument("file")
    c.add_argument("--out")
    c.set_defaults(func=cmd_build_zte)

    c = sub.add_parser("verify-zte", help="verify a tetrahedron solution")
    c.add_argument("file")
    c.set_defaults(func=cmd_verify_zte)

    c = sub.add_parser("verify-ybe", help="verify a Yang-Baxter operator")
    c.add_argument("file")
    c.set_defaults(func=cmd_verify_ybe)

    c = sub.add_parser("decat", help="decategorify a solution")
    c.add_argument("--from", dest="source", choices=["leibniz2", "rack2", "zte"], required=True)
    c.add_argument("file")
    c.add_argument("--square", action="store_true", help="compare with the flat formula")
    c.set_defaults(func=cmd_decat)

    c = sub.add_parser("split", help="rack from a splitting, plus coincidence")
    c.add_argument("--structure", required=True)
    c.add_argument("--section", required=True)
    c.set_defaults(func=cmd_split)

    c = sub.add_parser("finrack", help="finite 2-racks and 2-groups")
    c.add_argument("action", choices=["check", "build-2group", "conjugation"])
    c.add_argument("file")
    c.set_defaults(func=cmd_finrack)

    c = sub.add_parser("forge", help="sample structures or emit fixtures")
    fs = c.add_subparsers(dest="action", required=True)
    s = fs.add_parser("sample")
    s.add_argument("--kind", choices=["leibniz2", "rack2"], default="leibniz2")
    s.add_argument("--dims", default="2,1")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=3)
    s.add_argument("--out")
    f = fs.add_parser("fixture")
    f.add_argument("name", choices=["FIX-A", "FIX-B", "FIX-C", "FIX-D", "FIX-E", "FIX-F"])
    f.add_argument("--out")
    c.set_defaults(func=cmd_forge)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, io.FormatError, ShapeError, ComposabilityError, KeyError) as exc:
        print(f"ztekit: malformed input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (StructureError, ValueError) as exc:
        print(f"ztekit: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RuntimeError as exc:          # sampling exhausted
        print(f"ztekit: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
