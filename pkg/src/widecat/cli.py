"""Command-line front end.

Every command prints deterministic text, or JSON with ``--json`` (top-level
``"schema": 1``).  Exit status is 0 on success, 1 on a domain error (the
error's name is printed) and 2 on malformed input (with line and column).
Run ``widecat formats`` for the input grammar.
"""

import argparse
import json
import sys

from . import literals
from .derived import homology, koszul, support_of_complex
from .exactarith import IntegerRing
from .freemod import minimal_free_resolution, free_resolution, fitting0, annihilator
from .pidoracle import FinAbGroup, closure_tower, snake_closure_checks, verify_witnesses
from .polyring import ParseError, PolyRing, ideal_op, normal_form, radical_member
from .spectrum import support_of, parse_specz
from .widelat import (
    CoproductWideSubcatZ,
    ZModuleDescriptor,
    complexes_with_homology_in,
    from_datum,
    wide_from_homology,
    inflate_from_quotient,
    member,
    member_coproduct_z,
    restrict_to_quotient,
    wide_generated_by,
)

SCHEMA = 1
MAX_BOUND = 256


class CommandError(ValueError):
    name = "invalid-input"


def _poly_ring(ring, what):
    if not isinstance(ring, PolyRing):
        raise CommandError(f"{what} needs a polynomial ring")
    return ring


def _polys(text, ring):
    return literals._shifted(lambda: literals.parse_poly_list(text, ring), text, 0)


def _ideal(text, ring):
    if isinstance(ring, IntegerRing):
        gens = [literals.parse_element(e, ring, text, s) for s, e in literals.split_top(text, ",") if e.strip()]
        return ring.ideal(gens)
    return ring.ideal(_polys(text, ring))


def _gens(I):
    return [str(g) for g in I.visible_gens()]


def _locus(L):
    return str(L)


# -- commands ----------------------------------------------------------------------
# each returns (text_lines, json_payload)

def cmd_gb(args):
    ring = _poly_ring(literals.parse_ring(args.ring), "gb")
    I = ring.ideal(_polys(args.polys, ring))
    gens = [str(g) for g in I.gens]
    return gens or ["0"], {"ring": str(ring), "basis": gens}


def cmd_nf(args):
    ring = _poly_ring(literals.parse_ring(args.ring), "nf")
    I = ring.ideal(_polys(args.ideal, ring))
    f = literals.parse_element(args.poly, ring)
    r = normal_form(f, I)
    return [str(r)], {"ring": str(ring), "normal_form": str(r)}


def cmd_ideal(args):
    ring = literals.parse_ring(args.ring)
    A = _ideal(args.a, ring)
    op = args.op
    if op == "radical-member":
        f = literals.parse_element(args.b, ring)
        if isinstance(ring, IntegerRing):
            res = A.radical_contains(ring.ideal([f]))
        else:
            res = radical_member(f, A)
        return [str(res).lower()], {"op": op, "result": res}
    if op == "contains":
        f = literals.parse_element(args.b, ring)
        res = A.contains(f)
        return [str(res).lower()], {"op": op, "result": res}
    if op == "quotient":
        _poly_ring(ring, "quotient")
        R = ideal_op("quotient", A, literals.parse_element(args.b, ring))
    else:
        B = _ideal(args.b, ring)
        if isinstance(ring, IntegerRing):
            R = {"sum": A.sum, "product": A.product, "intersection": A.intersection}[op](B)
        else:
            R = ideal_op(op, A, B)
    gens = _gens(R)
    return ["(" + ", ".join(gens) + ")"], {"op": op, "generators": gens}


def cmd_syz(args):
    ring = literals.parse_ring(args.ring)
    rows = literals.parse_matrix(args.matrix, ring)
    if not rows:
        raise CommandError("empty matrix")
    ncols = len(rows[0])
    syz = ring.syzygies(rows, ncols)
    out = [[v[i] for v in syz] for i in range(ncols)] if syz else []
    text = literals.format_matrix(out)
    return [text], {"syzygies": [[str(a) for a in r] for r in out]}


def cmd_resolve(args):
    ring = literals.parse_ring(args.ring)
    M = literals.parse_module(args.module, ring)
    if M.is_graded():
        res = minimal_free_resolution(M, args.cap)
    else:
        res = free_resolution(M, args.cap)
    pd = -1 if res.ranks == [0] else res.length
    lines = [f"ranks: {res.ranks}", f"minimal: {str(res.minimal).lower()}", f"pd: {pd}"]
    for k, m in enumerate(res.maps):
        lines.append(f"d{k + 1}: {literals.format_matrix(m)}")
    payload = {
        "ranks": res.ranks,
        "minimal": res.minimal,
        "pd": pd,
        "maps": [[[str(a) for a in r] for r in m] for m in res.maps],
    }
    return lines, payload


def cmd_supp(args):
    ring = literals.parse_ring(args.ring)
    M = literals.parse_module(args.module, ring)
    L = support_of(M)
    ann = annihilator(M)
    fit = fitting0(M)
    lines = [f"support: {_locus(L)}", f"annihilator: {ann}", f"fitting0: {fit}"]
    return lines, {"support": _gens(L.ideal), "annihilator": _gens(ann), "fitting0": _gens(fit)}


def _complex_report(X):
    lines, hom = [], {}
    for n in X.degrees():
        H = homology(X, n)
        s = literals.format_module(H)
        hom[str(n)] = s
        lines.append(f"H{n}: {s}")
    L = support_of_complex(X)
    lines.append(f"support: {_locus(L)}")
    return lines, {"homology": hom, "support": _gens(L.ideal)}


def cmd_homology(args):
    ring = literals.parse_ring(args.ring)
    X = literals.parse_complex(args.complex, ring)
    if args.degree is not None:
        H = homology(X, args.degree)
        s = literals.format_module(H)
        return [s], {"degree": args.degree, "homology": s}
    return _complex_report(X)


def cmd_koszul(args):
    ring = literals.parse_ring(args.ring)
    if isinstance(ring, IntegerRing):
        elems = [literals.parse_element(e, ring, args.elements, s) for s, e in literals.split_top(args.elements, ",")]
    else:
        elems = _polys(args.elements, ring)
    X = koszul(elems, ring)
    ranks = [X.rank(n) for n in range(len(elems) + 1)]
    lines = [f"ranks: {ranks}"]
    diffs = {}
    for n in range(1, len(elems) + 1):
        d = X.d(n)
        diffs[str(n)] = [[str(a) for a in r] for r in d]
        lines.append(f"d{n}: {literals.format_matrix(d)}")
    hl, hp = _complex_report(X)
    return lines + hl, {"ranks": ranks, "diffs": diffs, **hp}


def _wide(args):
    ring = literals.parse_ring(args.ring) if args.ring else None
    ring, mods = literals.parse_wide(args.wide, ring)
    return wide_generated_by(mods, ring)


def cmd_classify(args):
    W = _wide(args)
    lines = [f"ring: {W.ring}", f"datum: {_locus(W.datum)}"]
    for M in W.generators:
        lines.append(f"generator {literals.format_module(M)}: support {_locus(support_of(M))}")
    return lines, {
        "ring": str(W.ring),
        "datum": _gens(W.datum.ideal),
        "generators": [literals.format_module(M) for M in W.generators],
    }


def cmd_member(args):
    W = _wide(args)
    M = literals.parse_module(args.module, W.ring)
    res = member(M, W)
    return [str(res).lower()], {"member": res, "support": _gens(support_of(M).ideal), "datum": _gens(W.datum.ideal)}


def cmd_fg(args):
    W = _wide(args)
    T = complexes_with_homology_in(W)
    back = wide_from_homology(T)
    ok = back == W
    lines = [
        f"datum: {_locus(W.datum)}",
        f"thick: {len(T.generators)} complex generator(s), datum {_locus(T.datum)}",
        f"wide again: datum {_locus(back.datum)}",
        f"roundtrip: {str(ok).lower()}",
    ]
    return lines, {
        "datum": _gens(W.datum.ideal),
        "thick_datum": _gens(T.datum.ideal),
        "wide_again_datum": _gens(back.datum.ideal),
        "roundtrip": ok,
    }


def cmd_uv(args):
    ring = _poly_ring(literals.parse_ring(args.ring), "uv")
    quotient = ring.quotient(_polys(args.quotient, ring))
    _, mods = literals.parse_wide(args.wide, quotient)
    W = wide_generated_by(mods, quotient)
    U = inflate_from_quotient(W, ring)
    V = restrict_to_quotient(U, quotient)
    ok = V == W
    lines = [
        f"quotient: {quotient}",
        f"datum: {_locus(W.datum)}",
        f"inflated: {_locus(U.datum)}",
        f"restricted: {_locus(V.datum)}",
        f"roundtrip: {str(ok).lower()}",
    ]
    return lines, {
        "quotient": str(quotient),
        "datum": _gens(W.datum.ideal),
        "inflated": _gens(U.datum.ideal),
        "restricted": _gens(V.datum.ideal),
        "roundtrip": ok,
    }


def _group_list(text):
    out = []
    for start, piece in literals.split_top(text, ","):
        if not piece.strip():
            continue
        try:
            out.append(FinAbGroup.parse(piece))
        except ValueError as exc:
            raise ParseError(str(exc), text, start) from None
    return out


def cmd_oracle(args):
    if not 1 <= args.bound <= MAX_BOUND:
        raise CommandError(f"bound must lie in 1..{MAX_BOUND}")
    gens = _group_list(args.gens)
    report = closure_tower(gens, args.bound, args.modulus)
    bad = verify_witnesses(report)
    payload = report.to_json()
    payload["witnesses_verified"] = not bad
    lines = [
        f"generators: {', '.join(payload['generators']) or '(none)'}",
        f"bound: {report.bound}",
        f"modulus: {report.modulus}",
        f"tower sizes: {payload['tower_sizes']}",
        f"stabilized: {str(report.stabilized).lower()}",
        f"closure size: {len(report.closure)}",
        f"predicted size: {len(report.predicted)}",
        f"equal: {str(report.equal).lower()}",
        f"witnesses verified: {str(not bad).lower()}",
    ]
    if report.missing:
        lines.append("missing: " + ", ".join(payload["missing"]))
    if report.extra:
        lines.append("extra: " + ", ".join(payload["extra"]))
    if args.snake:
        snake = snake_closure_checks(report, args.snake, level=1, seed=args.seed)
        lines.append(f"snake checks: {snake.samples}, violations: {len(snake.violations)}")
        payload["snake"] = {"samples": snake.samples, "violations": len(snake.violations)}
    if args.verbose:
        for k, D in enumerate(payload["tower"]):
            lines.append(f"D{k}: " + "; ".join(D))
    return lines, payload


def cmd_specz(args):
    op = args.op
    if op == "coproduct-member":
        M = ZModuleDescriptor.parse(args.a)
        A = CoproductWideSubcatZ(parse_specz(args.b))
        res = member_coproduct_z(M, A)
        return [str(res).lower()], {"op": op, "support": str(M.point_support()), "result": res}
    A = parse_specz(args.a)
    if op == "complement":
        R = A.complement()
        return [str(R)], {"op": op, "result": str(R)}
    if op == "contains":
        try:
            p = int(args.b)
        except (TypeError, ValueError):
            raise ParseError("expected a prime or 0 for the generic point", args.b or "", 0) from None
        res = A.member(p)
        return [str(res).lower()], {"op": op, "result": res}
    if args.b is None:
        raise CommandError(f"{op} needs two sets")
    B = parse_specz(args.b)
    if op == "subset":
        res = A.issubset(B)
        return [str(res).lower()], {"op": op, "result": res}
    R = A.union(B) if op == "union" else A.intersect(B)
    return [str(R)], {"op": op, "result": str(R)}


def cmd_formats(args):
    return literals.__doc__.strip("\n").splitlines(), {"formats": literals.__doc__.strip()}


# -- parser ------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="widecat",
        description="Wide subcategories of finitely presented modules, decided by supports.",
        epilog="Rings: 'QQ[x,y] grevlex', 'Fp(7)[x,y] lex', 'QQ[x,y]/(y^2)', 'ZZ', 'ZZ/12'. "
        "See 'widecat formats' for the full grammar.",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("gb", cmd_gb, "reduced Groebner basis")
    sp.add_argument("--ring", required=True)
    sp.add_argument("polys")

    sp = add("nf", cmd_nf, "normal form modulo an ideal")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--ideal", required=True)
    sp.add_argument("poly")

    sp = add("ideal", cmd_ideal, "ideal arithmetic and membership")
    sp.add_argument("--ring", required=True)
    sp.add_argument("op", choices=["sum", "product", "intersection", "quotient", "contains", "radical-member"])
    sp.add_argument("a", help="ideal generators")
    sp.add_argument("b", help="ideal generators, or one element for quotient/contains/radical-member")

    sp = add("syz", cmd_syz, "syzygies of the columns of a matrix")
    sp.add_argument("--ring", required=True)
    sp.add_argument("matrix")

    sp = add("resolve", cmd_resolve, "free resolution (minimal when graded)")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--module", required=True)
    sp.add_argument("--cap", type=int, default=16)

    sp = add("supp", cmd_supp, "support, annihilator and Fitting ideal")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--module", required=True)

    sp = add("homology", cmd_homology, "homology of a free complex")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--complex", required=True)
    sp.add_argument("--degree", type=int)

    sp = add("koszul", cmd_koszul, "Koszul complex of a sequence")
    sp.add_argument("--ring", required=True)
    sp.add_argument("elements")

    sp = add("classify", cmd_classify, "classifying locus of a wide subcategory")
    sp.add_argument("--ring")
    sp.add_argument("--wide", required=True)

    sp = add("member", cmd_member, "membership in a wide subcategory")
    sp.add_argument("--ring")
    sp.add_argument("--module", required=True)
    sp.add_argument("--wide", required=True)

    sp = add("fg", cmd_fg, "module-to-complex roundtrip of a wide subcategory")
    sp.add_argument("--ring")
    sp.add_argument("--wide", required=True)

    sp = add("uv", cmd_uv, "inflate from R/a to R and restrict back")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--quotient", required=True, help="generators of a")
    sp.add_argument("--wide", required=True, help="modules over R/a")

    sp = add("oracle", cmd_oracle, "brute-force closure tower over finite abelian groups")
    sp.add_argument("--gens", required=True, help="e.g. 'Z/2, Z/3'")
    sp.add_argument("--bound", type=int, default=64)
    sp.add_argument("--modulus", type=int, default=0)
    sp.add_argument("--snake", type=int, default=0, help="random kernel/cokernel samples")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--verbose", action="store_true")

    sp = add("specz", cmd_specz, "point sets of Spec ZZ")
    sp.add_argument("op", choices=["union", "intersect", "complement", "subset", "contains", "coproduct-member"])
    sp.add_argument("a")
    sp.add_argument("b", nargs="?")

    add("formats", cmd_formats, "print the input grammar")
    return p


def _emit(lines, payload, as_json, out):
    if as_json:
        out.write(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    as_json = getattr(args, "json", False)
    try:
        lines, payload = args.fn(args)
    except ParseError as exc:
        _fail(as_json, out, err, "parse-error", str(exc), line=exc.line, column=exc.column)
        return 2
    except RecursionError:
        _fail(as_json, out, err, "parse-error", "input nested too deeply")
        return 2
    except (ValueError, ArithmeticError, ZeroDivisionError) as exc:
        name = getattr(exc, "name", None) or ("division-by-zero" if isinstance(exc, ZeroDivisionError) else "invalid-input")
        _fail(as_json, out, err, name, str(exc))
        return 1
    _emit(lines, {"command": args.command, **payload}, as_json, out)
    return 0


def _fail(as_json, out, err, name, message, **extra):
    if as_json:
        out.write(json.dumps({"schema": SCHEMA, "error": name, "message": message, **extra}, sort_keys=True) + "\n")
    else:
        err.write(f"error: {name}: {message}\n")


def main():
    sys.exit(run(sys.argv[1:]))
