"""Command-line interface.

One subcommand per library operation, with plain text, JSON, or DOT output.
Exit codes: 0 success, 2 invalid input, 3 size cap exceeded, 4 monomial not
in basis.  The environment variable HESSKIT_MAX_N (or --max-n) overrides the
enumeration size cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, polyalg, regnilp, springer
from .core import (
    ConstraintViolation,
    Filling,
    HessenbergFunction,
    Monomial,
    NotInBasis,
    NotPermissible,
    SizeLimitExceeded,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_NOT_IN_BASIS = 4


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


def _parse_word(text: str, n: int) -> tuple[int, ...]:
    """Accept ``2413``, ``2,4,1,3``, or row-separated ``24/13``."""
    text = text.replace("/", ",") if "," in text else text.replace("/", "")
    if "," in text:
        word = tuple(int(part) for part in text.split(",") if part)
    else:
        word = tuple(int(ch) for ch in text)
    if len(word) != n:
        raise ValueError(f"word {text!r} has {len(word)} entries, expected {n}")
    return word


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, sort_keys=True))


def _filling_record(h: HessenbergFunction, filling: Filling) -> tuple[str, str, str]:
    pairs = core.dimension_pairs(h, filling)
    pair_text = ",".join(f"({a},{b})" for a, b in pairs.sorted()) or "-"
    return str(filling), pair_text, str(core.phi(h, filling))


def cmd_fillings(args) -> int:
    h = HessenbergFunction(_parse_ints(args.h))
    fillings = core.enumerate_fillings(h, _parse_ints(args.mu), max_n=args.max_n)
    if args.format == "json":
        records = []
        for f in fillings:
            pairs = core.dimension_pairs(h, f)
            records.append(
                {
                    "filling": f.to_json(),
                    "pairs": pairs.to_json(),
                    "monomial": core.phi(h, f).to_json(),
                }
            )
        _emit_json(records)
    else:
        for f in fillings:
            _emit("\t".join(_filling_record(h, f)))
    return EXIT_OK


def cmd_betti(args) -> int:
    h = HessenbergFunction(_parse_ints(args.h))
    betti = core.betti_numbers(h, _parse_ints(args.mu), max_n=args.max_n)
    if args.format == "json":
        _emit_json({"betti": list(betti)})
        return EXIT_OK
    _emit(",".join(str(b) for b in betti))
    terms = []
    for k, b in enumerate(betti):
        if not b:
            continue
        if k == 0:
            terms.append(str(b))
        elif b == 1:
            terms.append(f"t^{2 * k}")
        else:
            terms.append(f"{b}*t^{2 * k}")
    _emit(" + ".join(terms) if terms else "0")
    return EXIT_OK


def cmd_tree(args) -> int:
    needs_mu = args.kind in ("gp", "modified-gp")
    if needs_mu and args.mu is None:
        raise ValueError(f"--kind {args.kind} requires --mu")
    if not needs_mu and args.h is None:
        raise ValueError(f"--kind {args.kind} requires --h")
    if needs_mu:
        mu = _parse_ints(args.mu)
        builder = springer.build_gp_tree if args.kind == "gp" else springer.build_modified_gp_tree
        tree = builder(mu, max_n=args.max_n)
    else:
        h = HessenbergFunction(_parse_ints(args.h))
        builder = regnilp.build_h_tree if args.kind == "h" else regnilp.build_h_tableau_tree
        tree = builder(h, max_n=args.max_n)
    if args.format == "json":
        _emit_json(tree.to_json())
    else:
        _emit(tree.to_dot())
    return EXIT_OK


def cmd_ideal(args) -> int:
    h = HessenbergFunction(_parse_ints(args.h))
    generators = polyalg.jh_generators(h)
    if args.format == "json":
        _emit_json([g.to_json() for g in generators])
    else:
        for g in generators:
            _emit(str(g))
    return EXIT_OK


def _sorted_monomials(monomials) -> list[Monomial]:
    return sorted(monomials)


def cmd_basis(args) -> int:
    if (args.h is None) == (args.mu is None):
        raise ValueError("exactly one of --h and --mu is required")
    if args.h is not None:
        h = HessenbergFunction(_parse_ints(args.h))
        core._check_cap(h.n, args.max_n, "basis enumeration")
        basis = regnilp.b_h_basis(h)
    else:
        basis = springer.garsia_procesi_basis(_parse_ints(args.mu), max_n=args.max_n)
    ordered = _sorted_monomials(basis)
    if args.format == "json":
        _emit_json([m.to_json() for m in ordered])
    else:
        for m in ordered:
            _emit(str(m))
    return EXIT_OK


def cmd_phi(args) -> int:
    h = HessenbergFunction(_parse_ints(args.h))
    mu = _parse_ints(args.mu)
    filling = Filling.from_word(mu, _parse_word(args.filling, sum(mu)))
    pairs = core.dimension_pairs(h, filling)
    monomial = core.phi(h, filling)
    if args.format == "json":
        _emit_json({"pairs": pairs.to_json(), "monomial": monomial.to_json()})
    else:
        _emit("pairs: " + (",".join(f"({a},{b})" for a, b in pairs.sorted()) or "-"))
        _emit(str(monomial))
    return EXIT_OK


def cmd_psi(args) -> int:
    mu = _parse_ints(args.mu)
    monomial = Monomial.parse(args.monomial, sum(mu))
    filling = springer.psi(mu, monomial)
    if args.format == "json":
        _emit_json(filling.to_json())
    else:
        _emit(str(filling))
    return EXIT_OK


def cmd_psih(args) -> int:
    h = HessenbergFunction(_parse_ints(args.h))
    monomial = Monomial.parse(args.monomial, h.n)
    filling = regnilp.psi_h(h, monomial)
    if args.format == "json":
        _emit_json(filling.to_json())
    else:
        _emit(str(filling))
    return EXIT_OK


def _verify_one(h: HessenbergFunction, max_n: int | None) -> regnilp.VerifyReport:
    return regnilp.verify_counts(h, max_n=max_n)


def cmd_verify(args) -> int:
    if (args.h is None) == (args.all_n is None):
        raise ValueError("exactly one of --h and --all-n is required")
    if args.h is not None:
        h = HessenbergFunction(_parse_ints(args.h))
        report = _verify_one(h, args.max_n)
        if args.format == "json":
            _emit_json(
                {
                    "h": list(h.values),
                    "fillings": report.fillings,
                    "leaves": report.leaves,
                    "prod_nu": report.prod_nu,
                    "prod_beta": report.prod_beta,
                    "a_equals_b": report.a_equals_b,
                    "ok": report.ok(),
                }
            )
        else:
            _emit(f"h={h}")
            _emit(f"fillings: {report.fillings}")
            _emit(f"leaves: {report.leaves}")
            _emit(f"prod_nu: {report.prod_nu}")
            _emit(f"prod_beta: {report.prod_beta}")
            _emit(f"a_equals_b: {'true' if report.a_equals_b else 'false'}")
            _emit("OK" if report.ok() else "FAIL")
        return EXIT_OK
    n = args.all_n
    core._check_cap(n, args.max_n, "identity sweep")
    checked = 0
    failures = []
    for h in core.hessenberg_functions(n):
        checked += 1
        report = _verify_one(h, args.max_n)
        multisets_equal = sorted(core.nu_tuple(h)) == sorted(core.degree_tuple(h))
        if not (report.ok() and multisets_equal):
            failures.append(str(h))
            _emit(f"FAIL h={h}: {report}")
    _emit(f"{checked} functions checked, {len(failures)} failures")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hesskit",
        description="Filling combinatorics and polynomial algebra "
        "for Hessenberg and Springer varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("plain", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--max-n", type=int, default=None, help="override the size cap")

    p = sub.add_parser("fillings", help="list permissible fillings with pairs and monomials")
    p.add_argument("--h", required=True, help="Hessenberg values, e.g. 1,3,3")
    p.add_argument("--mu", required=True, help="shape row lengths, e.g. 2,1")
    common(p)
    p.set_defaults(func=cmd_fillings)

    p = sub.add_parser("betti", help="even Betti numbers from filling counts")
    p.add_argument("--h", required=True)
    p.add_argument("--mu", required=True)
    common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("tree", help="serialize one of the four tree constructions")
    p.add_argument("--kind", required=True, choices=("gp", "modified-gp", "h", "h-tableau"))
    p.add_argument("--h")
    p.add_argument("--mu")
    common(p, formats=("dot", "json"))
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("ideal", help="generators of the ideal attached to h")
    p.add_argument("--h", required=True)
    common(p)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("basis", help="monomial basis (staircase for --h, tree leaves for --mu)")
    p.add_argument("--h")
    p.add_argument("--mu")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("phi", help="dimension pairs and monomial image of a filling")
    p.add_argument("--h", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--filling", required=True, help="row-reading word, e.g. 3214 or 2,4/1,3")
    common(p)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("psi", help="filling for a basis monomial (minimal h)")
    p.add_argument("--mu", required=True)
    p.add_argument("--monomial", required=True, help="e.g. x3*x4^2")
    common(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("psih", help="one-row filling for a staircase basis monomial")
    p.add_argument("--h", required=True)
    p.add_argument("--monomial", required=True)
    common(p)
    p.set_defaults(func=cmd_psih)

    p = sub.add_parser("verify", help="check the counting identities")
    p.add_argument("--h")
    p.add_argument("--all-n", type=int, default=None, dest="all_n")
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotInBasis as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_BASIS
    except (ConstraintViolation, NotPermissible, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
