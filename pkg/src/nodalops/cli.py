"""Command dispatch for the nodalops tool.

Exit codes: 0 success/member, 1 refuted/non-member/replay mismatch,
2 invalid input, 3 I/O failure, 4 search bound exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .certfile import (
    CertificateFormatError,
    certificate_to_document,
    load_document,
    replay_document,
    save_certificate,
)
from .curves import CurveError, CurveRing, nodal_cubic
from .exprparse import ParseError, parse_operator, parse_poly
from .polynomials import Poly
from .obstructions import (
    BoundExhaustedError,
    ideal_escape_witness,
    refute_bialgebroid,
    refute_local_projectivity,
    square_escape_witness,
)
from .sampling import random_da_operator, random_ideal_element

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_BOUND = 4

SUITE_SAMPLES = 500


class CliInputError(ValueError):
    pass


def _add_curve_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--preset", choices=["nodal-cubic"], help="use a built-in curve")
    sp.add_argument(
        "--factors",
        nargs="+",
        metavar="POLY",
        help="curve factors as polynomial expressions in t, e.g. --factors 't-1' 't+1'",
    )
    sp.add_argument(
        "--strict-irreducible",
        action="store_true",
        help="reject factors that are provably reducible (degree <= 3 root test)",
    )


def _resolve_curve(args: argparse.Namespace) -> CurveRing:
    if args.preset == "nodal-cubic":
        return nodal_cubic()
    if args.factors:
        polys = [parse_poly(text) for text in args.factors]
        return CurveRing(polys, strict_irreducible=args.strict_irreducible)
    raise CliInputError("no curve given: use --preset nodal-cubic or --factors ...")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nodalops",
        description=(
            "Exact computations with differential operators on curve rings "
            "A = k + f*k[t], including replayable refutation certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="print the canonical normal form of an operator")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("apply", help="apply an operator to a polynomial")
    p.add_argument("expr")
    p.add_argument("poly")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("member", help="decide membership in A, D_A, or an ideal power")
    _add_curve_flags(p)
    p.add_argument("what", choices=["A", "DA", "ideal"])
    p.add_argument("args", nargs="+", metavar="[N] EXPR")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser(
        "lemma",
        help="exercise one of the three operator-ring properties "
        "(1: D(I) stays in I; 2: an operator killing constants escapes I^2; "
        "3: an operator maps I^2 outside I^2)",
    )
    _add_curve_flags(p)
    p.add_argument("which", type=int, choices=[1, 2, 3])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("refute", help="emit a replayable refutation certificate")
    _add_curve_flags(p)
    p.add_argument("target", choices=["locproj", "bialgebroid"])
    p.add_argument("--out", help="certificate path (stdout JSON if omitted)")
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("verify", help="replay a certificate file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    return parser


def cmd_normalize(args: argparse.Namespace) -> int:
    print(parse_operator(args.expr))
    return EXIT_OK


def cmd_apply(args: argparse.Namespace) -> int:
    op = parse_operator(args.expr)
    poly = parse_poly(args.poly)
    print(op.apply(poly))
    return EXIT_OK


def cmd_member(args: argparse.Namespace) -> int:
    curve = _resolve_curve(args)
    if args.what == "ideal":
        if len(args.args) != 2:
            raise CliInputError("usage: member ideal N EXPR")
        try:
            power = int(args.args[0])
        except ValueError:
            raise CliInputError(f"bad ideal power {args.args[0]!r}") from None
        if power < 0:
            raise CliInputError("ideal power must be nonnegative")
        p = parse_poly(args.args[1])
        if power == 0:
            print("member of I^0 = k[t] (trivially)")
            return EXIT_OK
        quot, rem = p.divrem(curve.f**power)
        if rem.is_zero:
            print(f"member of I^{power}: ({p}) = ({quot}) * ({curve.f})^{power}")
            return EXIT_OK
        print(f"not a member of I^{power}: remainder {rem} after division by ({curve.f})^{power}")
        return EXIT_REFUTED

    if len(args.args) != 1:
        raise CliInputError(f"usage: member {args.what} EXPR")

    if args.what == "A":
        p = parse_poly(args.args[0])
        constant = curve.subalgebra_constant(p)
        if constant is not None:
            print(f"member of A: constant part {constant}, ideal part ({p - Poly.constant(constant)})")
            return EXIT_OK
        rem = p.divrem(curve.f)[1]
        print(f"not a member of A: remainder {rem} mod f is not a constant")
        return EXIT_REFUTED

    op = parse_operator(args.args[0])
    split = curve.operator_split(op)
    if split is not None:
        print(f"member of D_A: constant part {split.constant}, cofactor {split.cofactor}")
        return EXIT_OK
    max_order = 0 if op.is_zero else int(op.order)
    for j in range(max_order + 1):
        pj = op.coefficient_poly(j)
        if pj.is_zero:
            continue
        rem = pj.divrem(curve.f)[1]
        if j == 0 and not rem.is_constant:
            print(f"not a member of D_A: order-0 coefficient ({pj}) has nonconstant remainder {rem} mod f")
            return EXIT_REFUTED
        if j >= 1 and not rem.is_zero:
            print(f"not a member of D_A: coefficient of d^{j} is ({pj}), remainder {rem} mod f")
            return EXIT_REFUTED
    raise AssertionError("split failed but no failing coefficient found")


def cmd_lemma(args: argparse.Namespace) -> int:
    curve = _resolve_curve(args)
    if args.which == 1:
        rng = random.Random(args.seed)
        hits = 0
        for _ in range(SUITE_SAMPLES):
            op = random_da_operator(rng, curve, 6, 6)
            g = random_ideal_element(rng, curve, 6)
            if curve.in_ideal_power(op.apply(g), 1):
                hits += 1
        print(f"{hits}/{SUITE_SAMPLES} samples in I")
        return EXIT_OK if hits == SUITE_SAMPLES else EXIT_REFUTED

    witness = ideal_escape_witness(curve) if args.which == 2 else square_escape_witness(curve)
    value = witness.operator.apply(witness.witness)
    rem = value.divrem(curve.f**witness.target_power)[1]
    print(f"operator: {witness.operator}")
    print(f"witness: {witness.witness}  (in I^{witness.source_power})")
    print(f"value: {value}")
    if args.which == 2:
        print("operator maps the subalgebra into the ideal (zero constant part)")
    print(
        f"remainder mod f^{witness.target_power}: {rem}  "
        f"(nonzero, so the value escapes I^{witness.target_power})"
    )
    return EXIT_OK


def cmd_refute(args: argparse.Namespace) -> int:
    curve = _resolve_curve(args)
    if args.bound < 0:
        raise CliInputError("--bound must be nonnegative")
    if args.target == "locproj":
        cert = refute_local_projectivity(curve, seed=args.seed, bound=args.bound)
    else:
        cert = refute_bialgebroid(curve, args.bound, seed=args.seed)
    print(f"claim: {cert.claim}")
    print(f"curve: f = {cert.curve.f}  (factors: {', '.join(str(p) for p in cert.curve.factors)})")
    print(f"witness operator: {cert.witness.operator}")
    print(f"witness polynomial: {cert.witness.witness}")
    if cert.product_pair is not None:
        print(f"escaping pair: ({cert.product_pair[0]}, {cert.product_pair[1]})")
    passed = sum(1 for c in cert.checks if c.verdict)
    print(f"checks: {passed}/{len(cert.checks)} passed")
    if not cert.all_passed():
        print("refutation incomplete: some check failed", file=sys.stderr)
        return EXIT_REFUTED
    if args.out:
        save_certificate(cert, args.out)
        print(f"wrote certificate to {args.out}")
    else:
        print(json.dumps(certificate_to_document(cert), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    doc = load_document(args.path)
    outcome = replay_document(doc)
    if outcome.ok:
        recorded_true = all(c["verdict"] for c in doc["checks"])
        print(f"replayed {outcome.checks_replayed} checks: all verdicts reproduced")
        if not recorded_true:
            print("note: certificate records failing verdicts; it proves nothing", file=sys.stderr)
        return EXIT_OK
    print(f"replay failed: {outcome.failure}", file=sys.stderr)
    return EXIT_REFUTED


def _reallocate_factor_args(argv: list[str]) -> list[str]:
    """Let positionals follow a greedy --factors list, as in
    ``lemma --factors "t-1" "t+1" 1``: pull them back out of the pool that
    argparse would otherwise hand to --factors."""
    if not argv or argv[0] not in ("member", "lemma", "refute") or "--factors" not in argv:
        return argv
    i = argv.index("--factors")
    j = i + 1
    while j < len(argv) and not argv[j].startswith("-"):
        j += 1
    pool = argv[i + 1 : j]
    positionals: list[str] = []
    factors = pool
    if argv[0] == "member":
        for k, tok in enumerate(pool):
            if tok in ("A", "DA", "ideal"):
                factors, positionals = pool[:k], pool[k:]
                break
    elif argv[0] == "refute":
        for k, tok in enumerate(pool):
            if tok in ("locproj", "bialgebroid"):
                factors, positionals = pool[:k], pool[k:]
                break
    elif argv[0] == "lemma" and pool and pool[-1] in ("1", "2", "3"):
        factors, positionals = pool[:-1], pool[-1:]
    if not positionals:
        return argv
    return argv[:i] + positionals + ["--factors"] + factors + argv[j:]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_reallocate_factor_args(list(argv)))
    try:
        return args.func(args)
    except (ParseError, CurveError, CertificateFormatError, CliInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BoundExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
