"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 precondition violation,
4 cap exceeded, 5 internal verification failure.  Results go to stdout
(text by default, JSON with --format json); warnings go to stderr and
never into the result document.
"""

from __future__ import annotations

import argparse
import sys

from cellres import ioformats
from cellres.complexes import VERTEX_CAP, taylor_complex
from cellres.decompose import (
    associated_primes,
    decompose_brute,
    decompose_minimal,
    decompose_scarf,
)
from cellres.errors import (
    CapExceededError,
    ParseError,
    PreconditionError,
    VerificationError,
)
from cellres.ioformats import (
    SCHEMA_VERSION,
    dumps,
    ideal_str,
    irreducible_str,
    monomial_str,
)
from cellres.monomial import Monomial
from cellres.residue import VERDICT_EXACT, duality_check
from cellres.resolution import betti_ranks, build_complex, is_minimal, is_resolution, verify_chain
from cellres.scarf import scarf_complex, scarf_pairs, star_ideal
from cellres.staircase import ascii_staircase, staircase_data, svg_staircase

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4
EXIT_INTERNAL = 5


def _read_source(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path!r}: {exc.strerror}") from None


def _load_ideal(args):
    M, names, warnings = ioformats.parse_ideal(_read_source(args.ideal))
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return M, names


def _load_complex(src, M, cap):
    if src == "scarf":
        return scarf_complex(M, cap)
    if src == "taylor":
        return taylor_complex(M, cap)
    X, _ = ioformats.parse_complex(_read_source(src))
    return X


def _faces_line(X, k):
    return " ".join("{" + ",".join(map(str, sorted(f.vertices))) + "}" for f in X.grade(k))


def _complex_text(X, names, title):
    lines = [f"{title}: dim {X.dim}, {len(X.grade(1))} vertices, "
             f"{sum(len(X.grade(k)) for k in range(1, X.num_grades))} nonempty faces"]
    for k in range(1, X.num_grades):
        lines.append(f"  dim {k - 1}: {_faces_line(X, k)}")
    lines.append("facets: " + " ".join(
        "{" + ",".join(map(str, sorted(f.vertices))) + "}" for f in X.facets()))
    return lines


def _cmd_check(args):
    M, names = _load_ideal(args)
    doc = {
        "ideal": ioformats.ideal_doc(M, names),
        "artinian": M.is_artinian(),
        "generic": M.is_generic(),
        "strongly_generic": M.is_strongly_generic(),
    }
    text = "\n".join([
        "variables: " + ", ".join(names),
        "generators: " + ", ".join(monomial_str(g, names) for g in M.gens),
        f"artinian: {_yn(M.is_artinian())}",
        f"generic: {_yn(M.is_generic())}",
        f"strongly generic: {_yn(M.is_strongly_generic())}",
    ])
    return doc, text + "\n"


def _yn(b):
    return "yes" if b else "no"


def _cmd_scarf(args):
    M, names = _load_ideal(args)
    if args.star:
        pairs = scarf_pairs(M, args.ghost_exponent, args.cap_vertices)
        gh = star_ideal(M, args.ghost_exponent)
        X = scarf_complex(gh.star, args.cap_vertices)
        doc = {
            "complex": ioformats.complex_doc(X, names),
            "ghost_exponent": gh.ghost_exponent,
            "pairs": ioformats.pairs_doc(pairs, names, M.nvars),
        }
        lines = _complex_text(X, names, f"ghosted scarf complex of {ideal_str(M, names)}")
        lines.append("pairs:")
        for p in pairs:
            kvars = "{" + ",".join(names[i] for i in sorted(p.K)) + "}"
            tau = "{" + ",".join(map(str, sorted(p.tau))) + "}"
            lines.append(f"  K={kvars} tau={tau} annihilator={irreducible_str(p.annihilator(), names)}")
        return doc, "\n".join(lines) + "\n"
    X = scarf_complex(M, args.cap_vertices)
    doc = {"complex": ioformats.complex_doc(X, names)}
    return doc, "\n".join(_complex_text(X, names, f"scarf complex of {ideal_str(M, names)}")) + "\n"


def _cmd_taylor(args):
    M, names = _load_ideal(args)
    X = taylor_complex(M, args.cap_vertices)
    doc = {"complex": ioformats.complex_doc(X, names)}
    return doc, "\n".join(_complex_text(X, names, f"taylor complex of {ideal_str(M, names)}")) + "\n"


def _cmd_resolve(args):
    M, names = _load_ideal(args)
    X = _load_complex(args.complex, M, args.cap_vertices)
    F = build_complex(X, M)
    chain_ok = verify_chain(F)
    resolves = is_resolution(X, args.cap_vertices)
    minimal = is_minimal(F)
    doc = {
        "chain_ok": chain_ok,
        "is_resolution": resolves,
        "is_minimal": minimal,
        "ranks": list(F.ranks),
        "differentials": [
            [{"row": e.row, "col": e.col, "sign": e.sign, "quotient": list(e.quotient.exps)}
             for e in diff]
            for diff in F.diffs
        ],
    }
    lines = [
        f"chain check: {_yn(chain_ok)}",
        f"resolution: {_yn(resolves)}",
        f"minimal: {_yn(minimal)}",
        "ranks: " + ", ".join(map(str, F.ranks)),
    ]
    if resolves and minimal:
        lines.append("betti ranks: " + ", ".join(map(str, betti_ranks(F, args.cap_vertices))))
    return doc, "\n".join(lines) + "\n"


def _cmd_decompose(args):
    M, names = _load_ideal(args)
    if args.method == "scarf":
        dec = decompose_scarf(M, args.ghost_exponent, args.cap_vertices)
    elif args.method == "minimal":
        if not args.complex:
            raise PreconditionError("--method minimal needs --complex")
        X = _load_complex(args.complex, M, args.cap_vertices)
        dec = decompose_minimal(M, X, args.cap_vertices)
    else:
        dec = decompose_brute(M)
    doc = ioformats.decomposition_doc(dec, names)
    text = "\n".join([
        f"method: {dec.method}",
        "components: " + (", ".join(irreducible_str(c, names) for c in dec.components) or "(none)"),
        f"verified: {_yn(doc['verified'])}",
    ])
    return doc, text + "\n"


def _cmd_ass(args):
    M, names = _load_ideal(args)
    primes = sorted(associated_primes(M), key=lambda s: (len(s), sorted(s)))
    doc = {"associated_primes": [sorted(K) for K in primes]}
    pretty = ["(" + ", ".join(names[i] for i in sorted(K)) + ")" for K in primes]
    doc["pretty"] = pretty
    return doc, "associated primes: " + ", ".join(pretty) + "\n"


def _cmd_residue(args):
    M, names = _load_ideal(args)
    src = args.complex
    if src is None:
        src = "scarf" if M.is_generic() else "taylor"
    X = _load_complex(src, M, args.cap_vertices)
    report = duality_check(M, X, args.cap_vertices)
    current = report.current
    doc = {
        "complex_source": src,
        "current": ioformats.residue_doc(current, names),
        "duality": ioformats.duality_doc(report, names),
    }
    lines = [f"complex: {src}"]
    for e in current.entries:
        kvars = "{" + ",".join(names[i] for i in sorted(e.K)) + "}"
        tau = "{" + ",".join(map(str, sorted(e.tau))) + "}"
        lines.append(f"entry K={kvars} tau={tau} {ioformats.dbar_factors_str(e, names)} "
                     f"ann={irreducible_str(e.annihilator, names)} "
                     f"status={e.status}" + (f" rule={e.rule}" if e.rule else ""))
    lines.append(f"verdict: {report.verdict}")
    lines.append(f"lower: {ideal_str(report.lower, names)}")
    lines.append(f"upper: {ideal_str(report.upper, names)}")
    return doc, "\n".join(lines) + "\n"


def _cmd_staircase(args):
    M, names = _load_ideal(args)
    if args.format == "svg":
        return None, svg_staircase(M, names)
    if args.format == "json":
        data = staircase_data(M)
        data["pretty_inner"] = [monomial_str(Monomial(p), names) for p in data["inner_corners"]]
        data["pretty_outer"] = [monomial_str(Monomial(p), names) for p in data["outer_corners"]]
        return data, None
    return None, ascii_staircase(M, names)


def _cmd_verify(args):
    M, names = _load_ideal(args)
    checks = []

    def run(name, fn):
        try:
            detail = fn()
            checks.append({"name": name, "passed": True, "detail": detail})
        except (PreconditionError, CapExceededError, VerificationError) as exc:
            checks.append({"name": name, "passed": False, "detail": str(exc)})

    def check_brute():
        dec = decompose_brute(M)
        return f"{len(dec.components)} components; intersection and irredundancy verified"

    run("brute-decomposition", check_brute)

    if M.is_generic():
        def check_scarf():
            a = decompose_scarf(M, cap=args.cap_vertices)
            b = decompose_brute(M)
            if set(a.components) != set(b.components):
                raise VerificationError("scarf and brute-force decompositions differ")
            return f"{len(a.components)} components agree"
        run("scarf-equals-brute", check_scarf)

        if M.is_artinian():
            def check_minimal():
                dec = decompose_minimal(M, scarf_complex(M, args.cap_vertices), args.cap_vertices)
                if set(dec.components) != set(decompose_brute(M).components):
                    raise VerificationError("minimal-resolution decomposition differs from brute force")
                return f"{len(dec.components)} components agree"
            run("minimal-equals-brute", check_minimal)

        def check_duality():
            report = duality_check(M, scarf_complex(M, args.cap_vertices), args.cap_vertices)
            if report.verdict != VERDICT_EXACT:
                raise VerificationError(f"verdict {report.verdict}")
            return "annihilator bounds both equal the ideal"
        run("duality-exact", check_duality)

    if M.num_gens <= 10:
        def check_taylor():
            X = taylor_complex(M, args.cap_vertices)
            if not verify_chain(build_complex(X, M)):
                raise VerificationError("composition of differentials is nonzero")
            if not is_resolution(X, args.cap_vertices):
                raise VerificationError("restricted subcomplex with nonzero homology")
            return "chain condition and exactness verified"
        run("taylor-resolution", check_taylor)
    else:
        checks.append({"name": "taylor-resolution", "passed": True,
                       "detail": "skipped: more than 10 generators"})

    all_passed = all(c["passed"] for c in checks)
    doc = {"checks": checks, "all_passed": all_passed}
    lines = [("ok " if c["passed"] else "FAIL ") + f"{c['name']}: {c['detail']}" for c in checks]
    lines.append("all checks passed" if all_passed else "some checks FAILED")
    return doc, "\n".join(lines) + "\n", (EXIT_OK if all_passed else EXIT_INTERNAL)


def _parser():
    p = argparse.ArgumentParser(
        prog="cellres",
        description="Cellular resolutions of monomial ideals: Scarf complexes, "
                    "irreducible decompositions, and symbolic residue currents.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("ideal", help="ideal file (text or JSON), or '-' for stdin")
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--cap-vertices", type=int, default=VERTEX_CAP, metavar="N",
                        help="refuse subset enumerations past N vertices")
        return sp

    common(sub.add_parser("check", help="parse an ideal and report basic properties"))
    sp = common(sub.add_parser("scarf", help="Scarf complex (optionally of the ghosted ideal)"))
    sp.add_argument("--star", action="store_true", help="ghost the ideal and report (K, tau) pairs")
    sp.add_argument("--ghost-exponent", type=int, default=None, metavar="D")
    common(sub.add_parser("taylor", help="full-simplex complex on the generators"))
    sp = common(sub.add_parser("resolve", help="build the free complex and test exactness/minimality"))
    sp.add_argument("--complex", required=True, metavar="SRC",
                    help="'scarf', 'taylor', or a complex JSON file")
    sp = common(sub.add_parser("decompose", help="irredundant irreducible decomposition"))
    sp.add_argument("--method", choices=("scarf", "minimal", "brute"), default="brute")
    sp.add_argument("--complex", metavar="SRC", help="required for --method minimal")
    sp.add_argument("--ghost-exponent", type=int, default=None, metavar="D")
    common(sub.add_parser("ass", help="associated primes"))
    sp = common(sub.add_parser("residue", help="symbolic residue current with classification"))
    sp.add_argument("--complex", metavar="SRC", default=None,
                    help="'scarf', 'taylor', or a file; default: scarf if generic, else taylor")
    common(sub.add_parser("staircase", help="staircase diagram (2 variables)"),
           formats=("text", "svg", "json"))
    common(sub.add_parser("verify", help="cross-check decompositions and resolutions"))
    return p


_HANDLERS = {
    "check": _cmd_check,
    "scarf": _cmd_scarf,
    "taylor": _cmd_taylor,
    "resolve": _cmd_resolve,
    "decompose": _cmd_decompose,
    "ass": _cmd_ass,
    "residue": _cmd_residue,
    "staircase": _cmd_staircase,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        result = _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    doc, text = result[0], result[1]
    code = result[2] if len(result) > 2 else EXIT_OK
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": args.command}
        payload.update(doc or {})
        sys.stdout.write(dumps(payload))
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
