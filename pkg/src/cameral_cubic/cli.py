"""Command line front end.

Models are JSON documents:

    {
      "lie_type": "A",
      "rank": 1,
      "invariants": [["0", "-1"]],
      "deformations": {"beta": [["1"]]},
      "options": {"order": 8}
    }

invariants lists the base polynomials (c_2, ..., c_n) by ascending
coefficients; deformations names tangent directions of the same shape.
All scalars are exact rational literals "p" or "p/q" (or plain JSON
integers); decimal notation is rejected.

Commands:

    cameral-cubic analyze MODEL          branch point report
    cameral-cubic eval MODEL [...]       evaluate the cubic form
    cameral-cubic tensor MODEL [...]     full tensor over named directions
    cameral-cubic verify MODEL [...]     randomized identity checks

Exit codes: 0 success, 2 bad input, 3 degenerate branching, 4 irrational
branch data, 5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cover import (
    IrrationalBranchPointError,
    NonSimpleBranchError,
    build_cover,
)
from .cubic import EVALUATORS, cubic_tensor, verify_identities
from .deform import TangentVector
from .poly import Poly
from .scalars import RationalityError, format_fraction, parse_fraction
from .series import DEFAULT_ORDER, TruncationError


class ModelFormatError(ValueError):
    """Input document does not match the model schema."""


def _parse_scalar(x, where: str) -> Fraction:
    if isinstance(x, bool):
        raise ModelFormatError(f"{where}: expected an exact rational literal")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return parse_fraction(x)
        except (ValueError, ZeroDivisionError):
            raise ModelFormatError(f"{where}: not an exact rational literal: {x!r}") from None
    raise ModelFormatError(f"{where}: expected an exact rational literal, got {type(x).__name__}")


def _parse_poly(data, where: str) -> Poly:
    if not isinstance(data, list):
        raise ModelFormatError(f"{where}: expected a list of ascending coefficients")
    return Poly([_parse_scalar(c, f"{where}[{k}]") for k, c in enumerate(data)], "z")


def _parse_poly_list(data, rank: int, where: str) -> list:
    if not isinstance(data, list):
        raise ModelFormatError(f"{where}: expected a list of coefficient lists")
    if len(data) != rank:
        raise ModelFormatError(f"{where}: expected {rank} entries for rank {rank}, got {len(data)}")
    return [_parse_poly(p, f"{where}[{k}]") for k, p in enumerate(data)]


def load_model(path: str):
    """Read and validate a model document.

    Returns (cover, deformations, options); raises ModelFormatError for
    schema problems and the cover errors for geometric ones.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ModelFormatError(f"cannot read {path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"{path} is not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ModelFormatError("model document must be a JSON object")

    lie_type = doc.get("lie_type")
    if lie_type != "A":
        raise ModelFormatError(f"lie_type: only \"A\" is supported, got {lie_type!r}")
    rank = doc.get("rank")
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise ModelFormatError(f"rank: expected a positive integer, got {rank!r}")
    if "invariants" not in doc:
        raise ModelFormatError("invariants: missing")
    invariants = _parse_poly_list(doc["invariants"], rank, "invariants")

    deformations = {}
    raw_defs = doc.get("deformations", {})
    if not isinstance(raw_defs, dict):
        raise ModelFormatError("deformations: expected an object of named directions")
    for name, comp in raw_defs.items():
        deformations[name] = TangentVector(
            tuple(_parse_poly_list(comp, rank, f"deformations[{name!r}]"))
        )

    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise ModelFormatError("options: expected an object")
    order = options.get("order", DEFAULT_ORDER)
    if not isinstance(order, int) or isinstance(order, bool) or not 4 <= order <= 64:
        raise ModelFormatError(f"options.order: expected an integer between 4 and 64, got {order!r}")

    cover = build_cover(lie_type, rank, invariants)
    return cover, deformations, {"order": order}


def _poly_text(p: Poly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if not c:
            continue
        mag, neg = abs(c), c < 0
        if k == 0:
            body = format_fraction(mag)
        else:
            var = p.var if k == 1 else f"{p.var}^{k}"
            body = var if mag == 1 else f"{format_fraction(mag)}*{var}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def _pick(deformations: dict, name: str, flag: str) -> TangentVector:
    if name not in deformations:
        known = ", ".join(sorted(deformations)) or "none"
        raise ModelFormatError(f"{flag}: no deformation named {name!r} (defined: {known})")
    return deformations[name]


def _value_text(v: Fraction, mode: str) -> str:
    return repr(float(v)) if mode == "float" else format_fraction(v)


def cmd_analyze(args) -> int:
    cover, _, _ = load_model(args.model)
    if args.json:
        doc = {
            "lie_type": cover.lie_type,
            "rank": cover.rank,
            "n_sheets": cover.n_sheets,
            "invariants": [_poly_text(c) for c in cover.invariants],
            "discriminant": _poly_text(cover.discriminant),
            "branch_points": [
                {
                    "z0": format_fraction(bp.z0),
                    "double_root": format_fraction(bp.double_root),
                    "spectators": [format_fraction(s) for s in bp.spectators],
                    "radicand": format_fraction(bp.radicand),
                }
                for bp in cover.branch_points
            ],
        }
        if cover.rank == 1:
            doc["genus"] = cover.genus
        print(json.dumps(doc, indent=2))
        return 0
    print(f"model: type {cover.lie_type} rank {cover.rank}, {cover.n_sheets} sheets")
    for k, c in enumerate(cover.invariants, start=2):
        print(f"  c_{k} = {_poly_text(c)}")
    print(f"discriminant: {_poly_text(cover.discriminant)}")
    if cover.rank == 1:
        print(f"genus: {cover.genus}")
    print(f"branch points: {len(cover.branch_points)}")
    for bp in cover.branch_points:
        spect = ", ".join(format_fraction(s) for s in bp.spectators)
        print(
            f"  z0 = {format_fraction(bp.z0)}: double root {format_fraction(bp.double_root)},"
            f" spectators [{spect}], radicand {format_fraction(bp.radicand)}"
        )
    return 0


def cmd_eval(args) -> int:
    cover, deformations, opts = load_model(args.model)
    order = args.order or opts["order"]
    beta = _pick(deformations, args.beta, "--beta")
    gamma = _pick(deformations, args.gamma, "--gamma")
    delta = _pick(deformations, args.delta, "--delta")
    if args.evaluator == "all":
        names = ["pantev", "ks", "symmetric"] + (["sl2"] if cover.rank == 1 else [])
    else:
        names = [args.evaluator]
    results = [EVALUATORS[n](cover, beta, gamma, delta, order) for n in names]
    if args.json:
        doc = {
            "directions": {"beta": args.beta, "gamma": args.gamma, "delta": args.delta},
            "order": order,
            "results": [
                {
                    "evaluator": r.evaluator,
                    "per_branch": [
                        {"z0": format_fraction(z0), "value": _value_text(v, args.format)}
                        for z0, v in r.per_branch
                    ],
                    "total": _value_text(r.total, args.format),
                }
                for r in results
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"cubic({args.beta}, {args.gamma}, {args.delta}) at order {order}")
    for r in results:
        print(f"evaluator: {r.evaluator}")
        for z0, v in r.per_branch:
            print(f"  z0 = {format_fraction(z0)}: {_value_text(v, args.format)}")
        print(f"  total: {_value_text(r.total, args.format)}")
    return 0


def cmd_tensor(args) -> int:
    cover, deformations, opts = load_model(args.model)
    order = args.order or opts["order"]
    if args.basis:
        names = [n.strip() for n in args.basis.split(",") if n.strip()]
        if not names:
            raise ModelFormatError("--basis: expected a comma separated list of names")
    else:
        names = sorted(deformations)
        if not names:
            raise ModelFormatError("model defines no deformations to use as a basis")
    basis = [_pick(deformations, n, "--basis") for n in names]
    tensor = cubic_tensor(cover, basis, order, args.evaluator)
    if args.json:
        doc = {
            "evaluator": tensor.evaluator,
            "basis": names,
            "order": order,
            "entries": [
                {
                    "triple": [names[i] for i in idx],
                    "value": _value_text(v, args.format),
                }
                for idx, v in sorted(tensor.entries.items())
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"cubic tensor over [{', '.join(names)}] via {tensor.evaluator}, order {order}")
    for idx, v in sorted(tensor.entries.items()):
        label = ", ".join(names[i] for i in idx)
        print(f"  C[{label}] = {_value_text(v, args.format)}")
    return 0


def cmd_verify(args) -> int:
    cover, _, opts = load_model(args.model)
    order = args.order or opts["order"]
    report = verify_identities(cover, trials=args.trials, seed=args.seed, order=order)
    if args.json:
        doc = {
            "trials": args.trials,
            "seed": args.seed,
            "order": order,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in report.checks
            ],
            "constants": {
                k: (format_fraction(v) if v is not None else None)
                for k, v in report.constants.items()
            },
            "all_passed": report.all_passed,
        }
        print(json.dumps(doc, indent=2))
    else:
        for c in report.checks:
            word = "pass" if c.passed else "FAIL"
            print(f"check {c.name}: {word} ({c.detail})")
        consts = "; ".join(
            f"{k} = {format_fraction(v) if v is not None else 'undetermined'}"
            for k, v in report.constants.items()
        )
        print(f"constants: {consts}")
        print("all checks passed" if report.all_passed else "verification FAILED")
    return 0 if report.all_passed else 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cameral-cubic",
        description="Exact cubic form of a family of type A spectral models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order_flag=True):
        p.add_argument("model", help="path to the model JSON document")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if order_flag:
            p.add_argument(
                "--order", type=int, default=None,
                help="series order (overrides the model's options.order)",
            )

    p = sub.add_parser("analyze", help="validate the model and report its branch points")
    common(p, order_flag=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("eval", help="evaluate the cubic form on three named directions")
    common(p)
    p.add_argument("--beta", default="beta", help="first direction name (default: beta)")
    p.add_argument("--gamma", default="gamma", help="second direction name (default: gamma)")
    p.add_argument("--delta", default="delta", help="third direction name (default: delta)")
    p.add_argument(
        "--evaluator", default="all", choices=["pantev", "ks", "symmetric", "sl2", "all"],
        help="which evaluation to run (default: all applicable)",
    )
    p.add_argument(
        "--format", default="exact", choices=["exact", "float"],
        help="render values exactly (default) or as floats",
    )
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("tensor", help="evaluate on all triples from named directions")
    common(p)
    p.add_argument("--basis", default=None, help="comma separated direction names (default: all)")
    p.add_argument(
        "--evaluator", default="pantev", choices=["pantev", "ks", "symmetric", "sl2"],
    )
    p.add_argument("--format", default="exact", choices=["exact", "float"])
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("verify", help="run randomized identity checks on the model")
    common(p)
    p.add_argument("--trials", type=int, default=5, help="number of random direction triples")
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ModelFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NonSimpleBranchError as e:
        print(f"error: degenerate branching: {e}", file=sys.stderr)
        return 3
    except IrrationalBranchPointError as e:
        print(f"error: irrational branch data: {e}", file=sys.stderr)
        return 4
    except (AssertionError, RationalityError, TruncationError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 5
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
