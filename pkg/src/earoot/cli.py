"""Command line entry point: scenario ingestion, dispatch and JSON/text reports.

Exit status: 0 when every asserted claim holds, 2 when a claim fails, 1 on input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from . import affine, ears, fixpoint, qtorus
from .ears import EarsPresentation, Root

EXIT_OK, EXIT_INPUT, EXIT_CLAIM = 0, 1, 2

KINDS = {
    ("ears", "verify"): "ears-verify",
    ("fixpoint", "decompose"): "fixpoint",
    ("qtorus", "run"): "qtorus",
    ("affinize", "run"): "affinize",
}

DEFAULT_WINDOWS = {"ears-verify": ears.DEFAULT_WINDOW, "fixpoint": fixpoint.DEFAULT_WINDOW,
                   "qtorus": 2, "affinize": affine.DEFAULT_WINDOW}


class InputError(ValueError):
    pass


# --- scenario loading ------------------------------------------------------------

def bundled_scenarios() -> List[str]:
    root = resources.files("earoot") / "scenarios"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))


def _read_scenario_text(name: str) -> Tuple[str, str]:
    path = Path(name)
    if path.is_file():
        return path.read_text(encoding="utf-8"), str(path)
    bundled = resources.files("earoot") / "scenarios" / name
    if bundled.is_file():
        return bundled.read_text(encoding="utf-8"), f"bundled:{name}"
    raise InputError(f"scenario not found: {name}")


def load_scenario(name: str, kind: str) -> Tuple[dict, str]:
    text, origin = _read_scenario_text(name)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{origin}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{origin}: scenario must be a JSON object")
    if "kind" in data:
        if data["kind"] != kind:
            raise InputError(f"{origin}: scenario kind {data['kind']!r} does not match command kind {kind!r}")
        if "payload" not in data or not isinstance(data["payload"], dict):
            raise InputError(f"{origin}: scenario needs an object 'payload'")
        payload = dict(data["payload"])
        if "window" in data:
            payload.setdefault("window", data["window"])
        return payload, origin
    return data, origin


def resolve_window(flag: Optional[int], payload: dict, kind: str) -> int:
    """--window beats the scenario value, which beats EAROOT_WINDOW, which beats the default."""
    if flag is not None:
        w = flag
    elif "window" in payload:
        w = payload["window"]
    elif os.environ.get("EAROOT_WINDOW"):
        try:
            w = int(os.environ["EAROOT_WINDOW"])
        except ValueError:
            raise InputError("EAROOT_WINDOW must be an integer") from None
    else:
        w = DEFAULT_WINDOWS[kind]
    if not isinstance(w, int) or isinstance(w, bool) or w < 0:
        raise InputError(f"window must be a non-negative integer, got {w!r}")
    return w


# --- per-kind runners ------------------------------------------------------------

def run_ears(payload: dict, window: int) -> Tuple[dict, Dict[str, bool]]:
    p = EarsPresentation.from_json(payload.get("presentation", payload))
    if window < 1:
        raise InputError("ears verify needs window >= 1")
    axioms = ears.axioms_check(p, window)
    claims = {k: axioms[k].passed for k in ("R1", "R2", "R3", "R4")}
    for k, v in payload.get("expect", {}).items():
        if k not in ("R5", "R6", "R7"):
            raise InputError(f"unknown expectation {k!r}")
        claims[f"expect_{k}"] = axioms[k].passed == bool(v)
    classes = []
    for c in p.isotropic_classes():
        cl = ears.classify_isotropic(p, Root((0,) * p.type.rank, c.residue))
        entry = {**c.to_json(), "kind": cl.kind}
        if cl.witness is not None:
            entry["witness"] = cl.witness.to_json()
        classes.append(entry)
    report = {
        "presentation": p.to_json(),
        "window": window,
        "axioms": {k: v.to_json() for k, v in axioms.items()},
        "isotropic_classes": classes,
        "flags": {"tame": axioms["R5"].passed, "indecomposable": axioms["R6"].passed,
                  "reduced": axioms["R7"].passed},
    }
    return report, claims


def run_fixpoint(payload: dict, window: int) -> Tuple[dict, Dict[str, bool]]:
    try:
        p = EarsPresentation.from_json(payload["presentation"])
        chi = fixpoint.Character.from_json(payload["character"])
    except KeyError as exc:
        raise InputError(f"fixpoint scenario missing field {exc}") from None
    f = fixpoint.fixed_root_system(p, chi)
    claims: Dict[str, bool] = {}
    z = (0,) * p.type.rank
    radius = max(window, 1)
    classes = []
    agree = True
    for c in f.isotropic_classes():
        delta = Root(z, c.residue)
        exact = fixpoint.is_isolated_exact(f, delta)
        brute = fixpoint.isolated_bruteforce(f, delta, 2 * f.modulus)
        agree &= brute == exact.isolated
        entry = {**c.to_json(), "kind": exact.kind, "bruteforce_isolated": brute}
        if exact.witness is not None:
            entry["witness"] = exact.witness.to_json()
        classes.append(entry)
    claims["bruteforce_agrees"] = agree
    report: dict = {
        "presentation": p.to_json(),
        "character": chi.to_json(),
        "window": window,
        "modulus": f.modulus,
        "isotropic_classes": classes,
    }
    if all(e == 0 for e in chi.alpha_exps + chi.delta_exps):
        same = set(f.window(radius)) == set(p.window(radius))
        report["fixed_equals_base"] = same
        claims["fixed_equals_base"] = same
    decomposition = None
    try:
        sears = fixpoint.sears_check(f, radius)
        report["sears"] = {k: v.to_json() for k, v in sears.items()}
        claims.update({f"sears_{k}": v.passed for k, v in sears.items()})
        decomposition = fixpoint.decompose_fixed(f, payload.get("dim_H_sigma"))
        report["decomposition"] = {"applicable": True, **decomposition.to_json()}
    except fixpoint.TheoremNotApplicable as exc:
        report["decomposition"] = {"applicable": False, "reason": str(exc)}
    expect = payload.get("expect", {})
    for k, v in expect.items():
        if k == "isolated_includes":
            got = {tuple(e["residue"]) for e in classes if e["kind"] == "isolated"}
            claims[k] = all(tuple(x % f.modulus for x in r) in got for r in v)
        elif k == "isolated":
            got = sorted(tuple(e["residue"]) for e in classes if e["kind"] == "isolated")
            claims[k] = got == sorted(tuple(x % f.modulus for x in r) for r in v)
        elif k in ("k", "dim_W", "has_I"):
            claims[k] = decomposition is not None and getattr(decomposition, k) == v
        elif k == "types":
            claims[k] = decomposition is not None and [str(c.type) for c in decomposition.components] == v
        elif k == "applicable":
            claims[k] = (decomposition is not None) == bool(v)
        else:
            raise InputError(f"unknown expectation {k!r}")
    return report, claims


def run_qtorus(payload: dict, window: int) -> Tuple[dict, Dict[str, bool]]:
    data = dict(payload)
    data["window"] = window
    try:
        sc = qtorus.ExampleScenario.from_json(data)
    except KeyError as exc:
        raise InputError(f"qtorus scenario missing field {exc}") from None
    return qtorus.qtorus_report(sc)


def run_affinize(payload: dict, window: int) -> Tuple[dict, Dict[str, bool]]:
    if "base" not in payload:
        raise InputError("affinize scenario missing field 'base'")
    return affine.affinize_report(payload, window)


RUNNERS: Dict[str, Callable[[dict, int], Tuple[dict, Dict[str, bool]]]] = {
    "ears-verify": run_ears,
    "fixpoint": run_fixpoint,
    "qtorus": run_qtorus,
    "affinize": run_affinize,
}


def run(kind: str, payload: dict, window: int) -> Tuple[dict, Dict[str, bool]]:
    try:
        return RUNNERS[kind](payload, window)
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        # malformed payload values surface as module-level validation errors
        raise InputError(f"invalid scenario: {exc}") from None


# --- rendering --------------------------------------------------------------------

def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    lines = [f"kind: {report['kind']}", f"scenario: {report['source']}"]
    for k, v in report["verdicts"].items():
        lines.append(f"{k}: {'pass' if v else 'FAIL'}")
    lines.append(f"overall: {'pass' if report['passed'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="earoot", description="Extended affine root systems and fixed points.")
    groups = parser.add_subparsers(dest="group", required=True)
    for (group, action), kind in KINDS.items():
        g = groups.add_parser(group)
        sub = g.add_subparsers(dest="action", required=True)
        cmd = sub.add_parser(action, help=f"run a {kind} scenario")
        cmd.add_argument("--scenario", required=True, help="scenario JSON path or bundled scenario name")
        cmd.add_argument("--window", type=int, default=None, help="window radius")
        cmd.add_argument("--format", choices=("json", "text"), default="json")
        cmd.add_argument("--output", default=None, help="write the report here instead of stdout")
        cmd.add_argument("--timing", action="store_true", help="include wall time in the report")
    lst = groups.add_parser("scenarios")
    lst.add_subparsers(dest="action", required=True).add_parser("list")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.group == "scenarios":
        print("\n".join(bundled_scenarios()))
        return EXIT_OK
    kind = KINDS[(args.group, args.action)]
    t0 = time.perf_counter()
    try:
        payload, origin = load_scenario(args.scenario, kind)
        window = resolve_window(args.window, payload, kind)
        data, verdicts = run(kind, payload, window)
    except InputError as exc:
        print(f"earoot: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    passed = all(verdicts.values())
    source = origin if origin.startswith("bundled:") else Path(origin).name
    report = {"kind": kind, "source": source, "scenario": payload, "window": window,
              "verdicts": verdicts, "passed": passed, "data": data}
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    out = render(report, args.format)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return EXIT_OK if passed else EXIT_CLAIM


if __name__ == "__main__":
    raise SystemExit(main())
