"""torbord command line.

A complex argument is a path, ``-`` for stdin, or inline compact text such
as ``"4: 1 2, 3"``.  Exit status: 0 ok, 1 verification mismatch, 2 input
error, 3 range error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bier as bier_mod
from . import bordism, charnum, enumeration, gamma, oracle
from .errors import InputError, InternalMismatch, RangeError, TorbordError
from .simplicial import SimplicialComplex, doubly_ghost_vertices, f_vector, loads, to_json, to_text
from .symfun import format_partition, parse_partition, partitions, todd_coefficients
from .vectors import alpha, mu_vector

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_RANGE = 0, 1, 2, 3
RANGE_CODES = {"E_RANGE", "E_M_TOO_LARGE"}


# -- input / output helpers ------------------------------------------------


def load_complex(arg: str) -> SimplicialComplex:
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    return loads(text)


def jsonable(obj):
    """Fractions become "p/q" strings, partition keys become "2,1"."""
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {
            (format_partition(k) if isinstance(k, tuple) else str(k)): jsonable(v) for k, v in obj.items()
        }
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def emit(obj, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(jsonable(obj)) + "\n")
        return
    if isinstance(obj, dict):
        for k, v in jsonable(obj).items():
            out.write(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}\n")
    else:
        out.write(f"{jsonable(obj)}\n")


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError:
        raise InputError("E_PARTITION", f"cannot parse partition {text!r}") from None


def _table(args, K, single, table):
    if args.partition is not None:
        I = _partition_arg(args.partition)
        return {I: single(K, I)}
    return table(K)


# -- reports -----------------------------------------------------------------


def analysis(K: SimplicialComplex) -> dict:
    """Everything the analyze command prints, in a fixed key order."""
    rep = charnum.report(K)
    cls = bordism.decompose(K)
    gen = bordism.is_polynomial_generator(K)
    notes = []
    ghosts = doubly_ghost_vertices(K)
    if ghosts:
        notes.append(f"doubly ghost vertices {list(ghosts)}: X_K is (CP^1)^{K.m - 1}")
    return {
        "complex": to_json(K),
        "f": f_vector(K),
        "alpha": alpha(K),
        "mu": mu_vector(K),
        "h_bier": bier_mod.h_vector_bier(K),
        "chern": rep.chern,
        "milnor": rep.milnor,
        "pontryagin": rep.pontryagin,
        "sw_real": rep.sw_real,
        "sw_complex": rep.sw_complex,
        "chi_y": rep.chi_y,
        "euler_X": rep.euler_X,
        "todd": rep.todd,
        "signature": rep.signature,
        "immersion": vars(rep.immersion),
        "bordism": {
            "reduced": {f"X{k}": v for k, v in cls.reduced.items()},
            "generator": gen.is_generator,
            "real_null": bordism.null_bordant_real(K),
            "oriented_null": bordism.null_bordant_oriented_complex(K),
        },
        "notes": notes,
    }


# -- commands ------------------------------------------------------------------


def cmd_analyze(args):
    emit(analysis(load_complex(args.file)), args.json)


def cmd_chern(args):
    K = load_complex(args.file)
    emit(_table(args, K, charnum.chern_number, charnum.all_chern_numbers), args.json)


def cmd_milnor(args):
    emit({"milnor": charnum.milnor_number(load_complex(args.file))}, args.json)


def cmd_pontryagin(args):
    K = load_complex(args.file)
    if K.m % 2 == 0:
        raise InputError("E_DIMENSION", f"m={K.m} is even: no Pontryagin numbers")
    emit(_table(args, K, charnum.pontryagin_number, charnum.all_pontryagin_numbers), args.json)


def cmd_sw(args):
    K = load_complex(args.file)
    if args.complex:
        emit(_table(args, K, charnum.sw_number_complex, charnum.all_sw_numbers_complex), args.json)
    else:
        emit(_table(args, K, charnum.sw_number_real, charnum.all_sw_numbers_real), args.json)


def cmd_chi_y(args):
    cy = charnum.chi_y(load_complex(args.file))
    out = {"coefficients": cy.coefficients}
    if args.verbose:
        out.update(from_alpha=cy.from_alpha, from_h=cy.from_h)
    out.update(euler=cy.euler, todd=cy.todd, signature=cy.signature)
    emit(out, args.json)


def cmd_signature(args):
    emit({"signature": charnum.signature(load_complex(args.file))}, args.json)


def cmd_immersion(args):
    out = {}
    if args.file is not None or args.m is not None:
        m = load_complex(args.file).m if args.file is not None else args.m
        out["bounds"] = vars(charnum.immersion_bounds(m))
    if args.sharp is not None:
        fam = charnum.sharp_immersion_family(args.sharp)
        out["sharp"] = {
            "n": fam.n,
            "factors": [to_text(K) for K in fam.factors],
            "vertex_counts": fam.vertex_counts,
            "bound": fam.bound,
        }
    if not out:
        raise InputError("E_PARSE", "give a complex, --m, or --sharp")
    emit(out, args.json)


def cmd_gamma(args):
    m = args.m
    parts = [_partition_arg(args.partition)] if args.partition is not None else partitions(m - 1)
    rows = {}
    for I in parts:
        g = gamma.gamma_vector(m, I)
        prod = tuple(gamma.product_chern(m, j, I) for j in range(m))
        rows[I] = {
            "gamma": g,
            "product_chern": prod,
            "mod2_agree": all((a - b) % 2 == 0 for a, b in zip(g, prod)),
        }
    if args.json:
        emit(rows, True)
        return
    for I, row in rows.items():
        flag = "ok" if row["mod2_agree"] else "DIFFER"
        print(f"{format_partition(I):>12}  gamma={list(row['gamma'])}  product={list(row['product_chern'])}  mod2 {flag}")


def cmd_todd(args):
    if args.n < 1:
        raise RangeError("E_RANGE", "n must be positive")
    emit(todd_coefficients(args.n), args.json)


def cmd_dual(args):
    print(json.dumps(to_json(load_complex(args.file).dual)))


def cmd_bier(args):
    B = bier_mod.bier_sphere(load_complex(args.file))
    print(json.dumps(to_json(B.complex)))


def cmd_fan_check(args):
    K = load_complex(args.file)
    dets = bier_mod.facet_cone_dets(K)
    bad = [(pair, d) for pair, d in dets if d not in (1, -1)]
    emit({"facets": len(dets), "unimodular": not bad}, args.json)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_bordism_compare(args):
    K1, K2 = load_complex(args.file1), load_complex(args.file2)
    if K1.m != K2.m:
        emit({"bordant": False, "reason": "different m"}, args.json)
        return
    emit(
        {
            "bordant": bordism.bordant_unitary(K1, K2),
            "f_criterion": bordism.f_criterion(K1, K2),
            "h_criterion": bordism.h_criterion(K1, K2),
        },
        args.json,
    )


def cmd_bordism_decompose(args):
    cls = bordism.decompose(load_complex(args.file))
    emit({"raw": cls.raw, "reduced": {f"X{k}": v for k, v in cls.reduced.items()}}, args.json)


def cmd_bordism_generator(args):
    cert = bordism.is_polynomial_generator(load_complex(args.file))
    emit(vars(cert), args.json)


def cmd_bordism_null(args):
    K = load_complex(args.file)
    if args.real:
        emit({"real_null": bordism.null_bordant_real(K)}, args.json)
    else:
        emit({"oriented_null": bordism.null_bordant_oriented_complex(K)}, args.json)


def cmd_oracle(args):
    K = load_complex(args.file)
    checks = tuple(c.strip() for c in args.check.split(",") if c.strip())
    unknown = set(checks) - set(oracle.CHECKS)
    if unknown:
        raise InputError("E_PARSE", f"unknown checks {sorted(unknown)}; choose from {oracle.CHECKS}")
    if K.m > oracle.ORACLE_MAX_M:
        raise RangeError("E_RANGE", f"oracle supports m <= {oracle.ORACLE_MAX_M}")
    rep = oracle.verify(K, checks)
    emit(
        {
            "checked": rep.checked,
            "mismatches": [vars(mm) for mm in rep.mismatches],
        },
        args.json,
    )
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_enumerate(args):
    m = args.m
    if args.sample is None and not 2 <= m <= enumeration.EXHAUSTIVE_MAX_M:
        raise RangeError("E_RANGE", f"exhaustive mode needs 2 <= m <= {enumeration.EXHAUSTIVE_MAX_M}")
    if args.sample is not None and not 2 <= m <= enumeration.SAMPLE_MAX_M:
        raise RangeError("E_RANGE", f"sampling mode needs 2 <= m <= {enumeration.SAMPLE_MAX_M}")
    records = enumeration.run(m, args.find, args.sample, args.seed, args.workers, args.timing)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            n = enumeration.write_jsonl(records, fh)
        print(f"{n} records -> {args.out}", file=sys.stderr)
    else:
        enumeration.write_jsonl(records, sys.stdout)


# -- parser ----------------------------------------------------------------------


def _add_table_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--partition", help='comma-separated partition, e.g. "2,1"')
    g.add_argument("--all", action="store_true", help="every partition (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torbord", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if file:
            p.add_argument("file", help="path, '-' for stdin, or inline 'm: 1 2, 3'")
        p.set_defaults(func=func)
        return p

    add("analyze", cmd_analyze, "full invariant report")
    _add_table_flags(add("chern", cmd_chern, "Chern numbers c_I[X_K]"))
    add("milnor", cmd_milnor, "Milnor number s_{m-1}[X_K]")
    _add_table_flags(add("pontryagin", cmd_pontryagin, "Pontryagin numbers (odd m)"))
    p = add("sw", cmd_sw, "Stiefel-Whitney numbers")
    _add_table_flags(p)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--real", action="store_true", help="of the real locus (default)")
    kind.add_argument("--complex", action="store_true", help="of X_K itself")
    p = add("chi-y", cmd_chi_y, "chi_y genus")
    p.add_argument("-v", "--verbose", action="store_true", help="show both computation routes")
    add("signature", cmd_signature, "signature of X_K")

    p = add("immersion", cmd_immersion, "immersion lower bounds", file=False)
    p.add_argument("file", nargs="?")
    p.add_argument("--m", type=int)
    p.add_argument("--sharp", type=int, metavar="N", help="product family realizing 2N - alpha(N)")

    p = add("gamma", cmd_gamma, "gamma vectors with a mod-2 product check", file=False)
    p.add_argument("--m", type=int, required=True)
    _add_table_flags(p)
    p = add("todd", cmd_todd, "Todd polynomial coefficients", file=False)
    p.add_argument("--n", type=int, required=True)

    add("dual", cmd_dual, "Alexander dual as JSON")
    add("bier", cmd_bier, "Bier sphere as JSON on 2m vertices")
    fan = sub.add_parser("fan", help="canonical fan")
    fan_sub = fan.add_subparsers(dest="fan_command", required=True)
    p = fan_sub.add_parser("check", parents=[common], help="unimodularity of every facet cone")
    p.add_argument("file")
    p.set_defaults(func=cmd_fan_check)

    bord = sub.add_parser("bordism", help="bordism classes")
    bsub = bord.add_subparsers(dest="bordism_command", required=True)
    p = bsub.add_parser("compare", parents=[common], help="unitary bordism equality")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_bordism_compare)
    for name, func, help_ in (
        ("decompose", cmd_bordism_decompose, "coordinates in the X_j basis"),
        ("generator", cmd_bordism_generator, "polynomial generator test"),
    ):
        p = bsub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
        p.set_defaults(func=func)
    p = bsub.add_parser("null", parents=[common], help="null-bordance of X_K^R or oriented X_K")
    p.add_argument("file")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--real", action="store_true")
    which.add_argument("--oriented", action="store_true")
    p.set_defaults(func=cmd_bordism_null)

    p = add("oracle", cmd_oracle, "compare closed forms with the ring oracle")
    p.add_argument("--check", default=",".join(oracle.CHECKS))

    p = add("enumerate", cmd_enumerate, "batch search, JSONL output", file=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--find", choices=enumeration.FINDS, required=True)
    p.add_argument("--sample", type=int, help="random sample size instead of exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="add per-record seconds (breaks byte equality)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except InternalMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except TorbordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE if isinstance(exc, RangeError) or exc.code in RANGE_CODES else EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
