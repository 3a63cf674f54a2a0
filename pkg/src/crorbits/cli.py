"""Command-line front end: scenario files in, JSON reports out.

Commands: classify <file>, congruent <file1> <file2>, moduli --n <int>,
verify --suite <name> [--seed <int>] [--trials <int>].  All results go
to standard output as UTF-8 JSON; diagnostics go to standard error.

Exit codes: 0 success (CR orbit, congruent, suites passed), 1 negative
verdict (not congruent, failed suite), 3 valid input but not a CR
orbit, 64 usage error, 65 malformed JSON, 66 invalid scenario data,
70 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .model import AlgVec, GroupElement
from .subspaces import orthonormalize
from .classify import (
    InconsistencyError,
    OrbitQuery,
    SpecError,
    SubalgebraSpec,
    classify_orbit,
    structured_xi,
)
from .geometry import orbit_invariants
from .congruence import moduli_space
from .verify import SUITE_CHOICES, verify

EX_USAGE = 64
EX_DATAERR = 65
EX_INVALID = 66
EX_SOFTWARE = 70
EX_NOT_CR = 3

_STRUCTURED_KEYS = ("b", "T", "W", "y")


def load_scenario(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, dict):
        raise SpecError("scenario file must hold a JSON object")
    return obj


def scenario_query(obj: dict) -> OrbitQuery:
    """Build the orbit query a scenario object describes."""
    try:
        n = int(obj["n"])
    except KeyError:
        raise SpecError("scenario is missing the ambient dimension 'n'")
    except (TypeError, ValueError) as exc:
        raise SpecError(f"bad ambient dimension: {exc}") from exc

    sub = obj.get("subalgebra")
    if not isinstance(sub, dict):
        raise SpecError("scenario is missing the 'subalgebra' object")
    has_kind = "kind" in sub
    has_basis = "basis" in sub
    if has_kind == has_basis:
        raise SpecError("subalgebra must give exactly one of a kind descriptor or a basis")

    spec = None
    raw = None
    if has_kind:
        desc = dict(sub)
        desc.setdefault("n", n)
        spec = SubalgebraSpec.from_json(desc)
        if spec.n != n:
            raise SpecError(f"subalgebra dimension n={spec.n} contradicts scenario n={n}")
    else:
        arr = np.asarray(sub["basis"], dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2 * n:
            raise SpecError(f"basis rows must have length 2n = {2 * n}")
        raw = orthonormalize(arr)

    ge = obj.get("group_element")
    if not isinstance(ge, dict):
        raise SpecError("scenario is missing the 'group_element' object")
    has_xi = "xi" in ge
    has_coord = any(k in ge for k in _STRUCTURED_KEYS)
    if has_xi == has_coord:
        raise SpecError("group_element must give exactly one of raw 'xi' or structured {b,T,W,y}")

    if has_xi:
        xi = np.asarray(ge["xi"], dtype=float)
        if xi.shape != (2 * n,):
            raise SpecError(f"xi must be a flat vector of length 2n = {2 * n}")
        g = GroupElement(AlgVec(xi))
    else:
        if spec is None:
            raise SpecError("structured {b,T,W,y} coordinates need a kind descriptor, not a basis")
        try:
            b = float(ge.get("b", 0.0))
            y = float(ge.get("y", 0.0))
        except (TypeError, ValueError) as exc:
            raise SpecError(f"bad scalar displacement: {exc}") from exc
        T = np.asarray(ge.get("T", []), dtype=float) if "T" in ge else None
        W = np.asarray(ge.get("W", []), dtype=float) if "W" in ge else None
        g = GroupElement(structured_xi(spec, b=b, T=T, W=W, y=y))

    return OrbitQuery(spec, g, raw_subalgebra=raw)


def classify_report(obj: dict) -> dict:
    """Full classification report for one scenario object."""
    query = scenario_query(obj)
    report = classify_orbit(query)
    invariants = orbit_invariants(report.tangent_at_o)
    return {
        "orbit": report.to_json(),
        "invariants": invariants.to_json(),
        "key": report.congruence_key.to_json() if report.congruence_key else None,
        "diagnostics": list(report.diagnostics),
    }


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")


def cmd_classify(args) -> int:
    report = classify_report(load_scenario(args.scenario))
    _emit(report)
    return 0 if report["orbit"]["is_cr"] else EX_NOT_CR


def cmd_congruent(args) -> int:
    reports = [classify_orbit(scenario_query(load_scenario(p))) for p in (args.first, args.second)]
    for path, rep in zip((args.first, args.second), reports):
        if not rep.is_cr:
            raise SpecError(f"{path}: orbit is not CR; congruence is decided for CR orbits only")
    k1, k2 = (rep.congruence_key for rep in reports)
    same = k1.matches(k2)
    _emit({"congruent": same, "keys": [k1.to_json(), k2.to_json()]})
    return 0 if same else 1


def cmd_moduli(args) -> int:
    _emit([comp.to_json() for comp in moduli_space(args.n)])
    return 0


def cmd_verify(args) -> int:
    report = verify(args.suite, seed=args.seed, trials=args.trials)
    _emit(report)
    return 0 if report["ok"] else 1


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract wants the sysexits band
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="crorbits",
        description="Classify CR orbits of solvable subgroups acting on complex hyperbolic space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the orbit a scenario file describes")
    p.add_argument("scenario", help="path to a scenario JSON file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("congruent", help="decide congruence of two scenario orbits")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_congruent)

    p = sub.add_parser("moduli", help="describe the congruence moduli for ambient dimension n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_moduli)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITE_CHOICES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"crorbits: malformed JSON: {exc}", file=sys.stderr)
        return EX_DATAERR
    except SpecError as exc:
        print(f"crorbits: {exc}", file=sys.stderr)
        return EX_INVALID
    except InconsistencyError as exc:
        print(f"crorbits: internal inconsistency: {exc}", file=sys.stderr)
        return EX_SOFTWARE
    except OSError as exc:
        print(f"crorbits: {exc}", file=sys.stderr)
        return EX_INVALID
    except ValueError as exc:
        print(f"crorbits: invalid input: {exc}", file=sys.stderr)
        return EX_INVALID
    except Exception as exc:  # no panics on malformed input
        print(f"crorbits: unexpected failure: {exc}", file=sys.stderr)
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
