"""Command-line front door: structural queries and verification suites.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
"""

import argparse
import json
import sys

from . import span as span_mod
from . import structure, verify
from .errors import NearVecError, NotCoprimeError
from .report import jsonify
from .space import (
    TwistedSpace,
    check_axioms_raw,
    vector_from_json,
    vector_to_json,
)


def load_space(path):
    with open(path) as fh:
        config = json.load(fh)
    return TwistedSpace.from_config(config)


def parse_vector(space, text):
    return vector_from_json(space, json.loads(text))


def emit(report, as_json):
    if as_json:
        print(json.dumps(jsonify(report), indent=2, sort_keys=True))
        return
    _print_plain(report)


def _print_plain(report, indent=0):
    pad = "  " * indent
    if isinstance(report, dict):
        for key, value in report.items():
            if isinstance(value, dict) or (
                isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value)
            ):
                print(f"{pad}{key}:")
                _print_plain(value, indent + 1)
            elif isinstance(value, list):
                print(f"{pad}{key}: {value}")
            else:
                print(f"{pad}{key}: {value}")
    elif isinstance(report, list):
        for value in report:
            if isinstance(value, dict):
                _print_plain(value, indent)
                print()
            else:
                print(f"{pad}- {value}")
    else:
        print(f"{pad}{report}")


# -- commands -------------------------------------------------------------


def cmd_info(args):
    space = load_space(args.config)
    regular = structure.is_regular(space)
    report = {
        "field": repr(space.field),
        "size": space.size,
        "exponents": list(space.exponents),
        "classes": [
            {"support": list(c.support), "exponent": c.exponent}
            for c in space.classes
        ],
        "regular": regular.regular,
        "component_count": len(space.classes),
    }
    if not regular.regular:
        report["incompatible_pair"] = [
            vector_to_json(space, v) for v in regular.witness
        ]
    emit(report, args.json)
    return 0


def _member_limit(args):
    # keep terminal output scannable; machine output carries the full sets
    return 4096 if args.json else 24


def cmd_qk(args):
    space = load_space(args.config)
    emit(space.quasi_kernel().to_json(member_limit=_member_limit(args)), args.json)
    return 0


def cmd_decompose(args):
    space = load_space(args.config)
    emit(structure.decompose(space).to_json(member_limit=_member_limit(args)), args.json)
    return 0


def cmd_span(args):
    space = load_space(args.config)
    vectors = [parse_vector(space, text) for text in args.vectors]
    emit(span_mod.span_of(space, vectors).to_json(member_limit=_member_limit(args)), args.json)
    return 0


def cmd_dim(args):
    space = load_space(args.config)
    vector = parse_vector(space, args.vector)
    emit(span_mod.dim_of_vector(space, vector).to_json(space), args.json)
    return 0


def cmd_verify(args):
    if args.raw:
        with open(args.raw) as fh:
            fixture = json.load(fh)
        report = check_axioms_raw(
            fixture["add_table"], [tuple(e) for e in fixture["endomorphisms"]]
        )
        payload = report.to_json()
        emit(payload, args.json)
        if not report.all_pass:
            print(f"FAIL: {report.failed()[0]}", file=sys.stderr)
            return 1
        return 0
    space = load_space(args.config)
    report = verify.run_suites(
        space, [args.suite], seed=args.seed, max_size=args.max_size
    )
    emit(report, args.json)
    if not report["pass"]:
        failing = next(s for s in report["suites"] if not s["pass"])
        bad = next(c for c in failing["checks"] if not c["pass"])
        print(f"FAIL: {failing['name']}: {bad['name']}", file=sys.stderr)
        return 1
    return 0


def hom_check(space1, space2, theta, eta):
    """Verify a homomorphism pair: theta additive, eta multiplicative on
    units, and theta(alpha x) = eta(alpha) theta(x) throughout."""
    v1 = space1.vectors()
    units1 = list(range(1, space1.field.order))
    if set(theta) != set(v1):
        raise ValueError("theta must be defined on every vector of the source")
    if set(eta) != set(units1):
        raise ValueError("eta must be defined on every unit scalar of the source")
    for image in theta.values():
        if len(image) != space2.n or any(
            not 0 <= x < space2.field.order for x in image
        ):
            raise ValueError(f"theta image {image} is not a target vector")
    for image in eta.values():
        if not 1 <= image < space2.field.order:
            raise ValueError(f"eta image {image} is not a target unit")

    checks = []
    ok, witness = True, None
    for x in v1:
        tx = theta[x]
        for y in v1:
            if theta[space1.add(x, y)] != space2.add(tx, theta[y]):
                ok, witness = False, (x, y)
                break
        if not ok:
            break
    checks.append({"name": "theta_additive", "pass": ok,
                   "witness": jsonify(witness)})

    ok2, witness = True, None
    for a in units1:
        for b in units1:
            if eta[space1.field.mul(a, b)] != space2.field.mul(eta[a], eta[b]):
                ok2, witness = False, (a, b)
                break
        if not ok2:
            break
    checks.append({"name": "eta_multiplicative", "pass": ok2,
                   "witness": jsonify(witness)})

    ok3, witness = True, None
    for a in units1:
        for x in v1:
            if theta[space1.scalar_mul(a, x)] != space2.scalar_mul(eta[a], theta[x]):
                ok3, witness = False, (a, x)
                break
        if not ok3:
            break
    checks.append({"name": "intertwining", "pass": ok3,
                   "witness": jsonify(witness)})

    return {"pass": ok and ok2 and ok3, "checks": checks}


def cmd_hom(args):
    space1 = load_space(args.config)
    space2 = load_space(args.config2)
    with open(args.map) as fh:
        tables = json.load(fh)
    theta_list = tables["theta"]
    eta_list = tables["eta"]
    v1 = space1.vectors()
    units1 = list(range(1, space1.field.order))
    if len(theta_list) != len(v1) or len(eta_list) != len(units1):
        raise ValueError("theta/eta tables have the wrong length")
    theta = {
        v: vector_from_json(space2, image) for v, image in zip(v1, theta_list)
    }
    eta = {}
    for a, image in zip(units1, eta_list):
        eta[a] = (
            image
            if isinstance(image, int)
            else space2.field.element(image)
        )
    report = hom_check(space1, space2, theta, eta)
    emit(report, args.json)
    return 0 if report["pass"] else 1


# -- argument parsing -------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nearvec",
        description="Exact structural computations on finite near-vector "
        "spaces with twisted scalar actions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_config=True):
        if needs_config:
            p.add_argument("config", help="space config JSON file")
        p.add_argument("--json", action="store_true", help="machine output")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for sampled sub-suites")
        p.add_argument("--max-size", type=int, default=None,
                       help="lower the enumeration bounds")

    p = sub.add_parser("info", help="field, classes, regularity")
    common(p)
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("qk", help="quasi-kernel members and class supports")
    common(p)
    p.set_defaults(fn=cmd_qk)

    p = sub.add_parser("decompose", help="regular components")
    common(p)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("span", help="span of the given vectors")
    common(p)
    p.add_argument("vectors", nargs="+", help="vectors as JSON arrays")
    p.set_defaults(fn=cmd_span)

    p = sub.add_parser("dim", help="dimension of a vector")
    common(p)
    p.add_argument("vector", help="vector as a JSON array")
    p.set_defaults(fn=cmd_dim)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("config", nargs="?", help="space config JSON file")
    p.add_argument(
        "--suite",
        default="all",
        choices=sorted(verify.SUITE_NAMES) + ["all"],
        help="which suite to run",
    )
    p.add_argument("--raw", help="raw fixture JSON (group table + endomorphisms)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("hom", help="check a homomorphism pair (theta, eta)")
    common(p)
    p.add_argument("config2", help="target space config JSON file")
    p.add_argument("map", help="JSON file with theta and eta tables")
    p.set_defaults(fn=cmd_hom)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.raw and args.config is None:
        print("error: verify needs a config file or --raw fixture", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except NotCoprimeError as exc:
        detail = {
            "error": "NotCoprime",
            "index": exc.index,
            "exponent": exc.exponent,
            "gcd": exc.gcd,
            "witness": {
                "alpha": exc.alpha,
                "beta": exc.beta,
                "vector": list(exc.vector),
            },
        }
        print(json.dumps(detail, indent=2, sort_keys=True), file=sys.stderr)
        return 2
    except (NearVecError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
