"""Command line front end.  Exit codes: 0 success, 1 mismatch, 2 parse
error, 3 singular surface, 4 non-generic parameters, 5 degree overflow."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as cat
from . import divisors
from .errors import (DegreeOverflow, GenericityError, K3FibError, NotAQuartic, OpaquePairing,
                     ParseError)
from .expr import evaluate, parse
from .fields import QQ, Polynomial, RationalFunction
from .neighbor import NeighborSpec, two_neighbor
from .sixlines import ClassicalParameter, SixLinesConfig, classical_eliminate, genericity_check, sample_tuples
from .transform import QuarticY2, genus_one_to_model, isomorphic
from .weierstrass import (Configuration, WeierstrassModel, euler_sum, fiber_configuration,
                          shioda_tate_rank)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _emit(obj, out: str | None, text: str | None = None) -> None:
    if out and out != "-":
        Path(out).write_text(dumps(obj) + "\n")
    if out == "-" or text is None:
        print(dumps(obj))
    else:
        print(text)


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _params(text: str | None) -> SixLinesConfig | None:
    if text is None:
        return None
    try:
        return SixLinesConfig.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad --params {text!r}: {exc}") from exc


def _rf(text: str, var: str, cfg: SixLinesConfig | None) -> RationalFunction:
    const = lambda n: RationalFunction(Polynomial([QQ(n)]))  # noqa: E731
    env = {var: RationalFunction(Polynomial.gen())}
    if cfg is not None:
        env.update({k: const(v) for k, v in zip("abcd", cfg.params)})
    try:
        val = evaluate(parse(str(text)), env, const)
    except ZeroDivisionError as exc:
        raise ParseError(f"division by zero in {text!r}") from exc
    return val if isinstance(val, RationalFunction) else const(val)


def fiber_report(m: WeierstrassModel) -> dict:
    fibers = fiber_configuration(m)
    return {
        "fibers": [f.to_json() for f in fibers],
        "configuration": Configuration.of(fibers).to_str().replace(" ", ""),
        "euler": euler_sum(fibers),
        "n": m.weight,
        "rank": shioda_tate_rank(fibers),
    }


def _fiber_text(rep: dict) -> str:
    lines = [f"{f['place']}: {f['type']} (vDelta={f['vDelta']}, euler={f['euler']})" for f in rep["fibers"]]
    lines.append(f"configuration {rep['configuration']}, euler {rep['euler']}")
    return "\n".join(lines)


# --------------------------------------------------------------------------


def cmd_classify(args) -> int:
    m = WeierstrassModel.from_json(_read_json(args.model))
    rep = fiber_report(m)
    _emit(rep, args.json, _fiber_text(rep))
    return 0


def cmd_model(args) -> int:
    cfg = _params(args.params)
    if args.source == "resolved":
        m = cat.resolved_model(args.class_id, cfg)
    else:
        entry = cat.CATALOG[args.class_id]
        variants = {v.label: v for v in entry.models}
        if args.source not in variants:
            raise ParseError(f"class {args.class_id} has no model {args.source!r}; "
                             f"choose from {', '.join(['resolved', *variants])}")
        m = variants[args.source].build(cfg)
    _emit(m.to_json(), args.json, dumps(m.to_json()))
    return 0


def _spec_from_json(data: dict, cfg: SixLinesConfig | None) -> NeighborSpec:
    try:
        case, A, B = data["case"], data["A"], data["B"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed spec: missing {exc}") from exc
    P = data.get("P")
    point = None
    if P is not None:
        point = (_rf(P["x"], "t", cfg), _rf(P.get("y", "0"), "t", cfg))
    try:
        return NeighborSpec(case, _rf(A, "t", cfg), _rf(B, "t", cfg), point)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def cmd_neighbor(args) -> int:
    cfg = _params(args.params)
    m = WeierstrassModel.from_json(_read_json(args.model))
    data = _read_json(args.spec)
    if cfg is None and isinstance(data, dict) and "params" in data:
        cfg = _params(data["params"])
    spec = _spec_from_json(data, cfg)
    try:
        new = two_neighbor(m, spec, args.var)
    except NotAQuartic as exc:
        raise DegreeOverflow(str(exc)) from exc
    rep = {"model": new.to_json(), **fiber_report(new)}
    if args.target:
        target = WeierstrassModel.from_json(_read_json(args.target), var=args.var)
        rep["isomorphic_to_target"] = isomorphic(new, target.renamed(new.var))
    _emit(rep, args.json, dumps(rep))
    return 0


def cmd_derive_classical(args) -> int:
    cfg = _params(args.params)
    if args.class_id:
        entry = cat.CATALOG[args.class_id]
        if not entry.classical:
            raise ParseError(f"class {args.class_id} is not derived by elimination")
        par = entry.classical[0]
    else:
        if not args.num:
            raise ParseError("give --class or --num/--den")
        solve = None if args.solve == "none" else args.solve
        par = ClassicalParameter(args.num, args.den, solve)
    g = classical_eliminate(cfg, par)
    m = genus_one_to_model(QuarticY2(g))
    rep = {"parameter": par.text(), "quartic": [c.to_str("t") for c in g.coeffs],
           "model": m.to_json(), **fiber_report(m)}
    _emit(rep, args.json, dumps(rep))
    return 0


def _report_text(r) -> str:
    flags = " ".join(f"{k}={'yes' if v else 'no'}" for k, v in (
        ("config", r.config_match), ("torsion", r.torsion_match), ("rank", r.rank_match),
        ("derivation", r.derivation_match)))
    head = f"[{'PASS' if r.ok else 'FAIL'}] class {r.class_id} at ({','.join(r.params)}): {r.computed} [{r.model}] {flags}"
    return "\n".join([head] + [f"    anomaly: {a}" for a in r.anomalies])


def cmd_verify_catalog(args) -> int:
    ids = cat.CLASS_IDS if args.class_id == "all" else [args.class_id]
    unknown = [c for c in ids if c not in cat.CATALOG]
    if unknown:
        raise ParseError(f"unknown class {unknown[0]!r}")
    cfg = _params(args.params)
    if cfg is not None:
        ok, violations = genericity_check(cfg, ids)
        if not ok:
            raise GenericityError("non-generic parameters: " + "; ".join(violations))
        tuples = [cfg]
    else:
        tuples = sample_tuples()
    reports = []
    for t in tuples:
        for cid in ids:
            if genericity_check(t, [cid])[0]:
                reports.append(cat.verify_class(cid, t))
    payload = [r.to_json() for r in reports]
    if len(payload) == 1:
        payload = payload[0]
    _emit(payload, args.json, "\n".join(_report_text(r) for r in reports))
    return 0 if all(r.ok for r in reports) else 1


def cmd_divisor(args) -> int:
    if args.check:
        ok, msg = divisors.run_check(args.check)
        print(msg)
        return 0 if ok else 1
    try:
        value = divisors.evaluate_expression(args.expr)
        if isinstance(value, divisors.Divisor) and args.type:
            print(f"{value}: {divisors.kodaira_type_of_divisor(value)}")
        else:
            print(value)
    except OpaquePairing as exc:
        print(f"OpaquePairing: {exc}", file=sys.stderr)
        return 1
    return 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k3fib", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="singular fibres of a Weierstrass model")
    c.add_argument("--model", required=True)
    c.add_argument("--json", metavar="OUT")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("model", help="export a catalog model as JSON")
    c.add_argument("--class", dest="class_id", required=True, choices=cat.CLASS_IDS)
    c.add_argument("--params", required=True)
    c.add_argument("--source", default="resolved")
    c.add_argument("--json", metavar="OUT")
    c.set_defaults(func=cmd_model)

    c = sub.add_parser("neighbor", help="2-neighbor step")
    c.add_argument("--model", required=True)
    c.add_argument("--spec", required=True)
    c.add_argument("--params", help="values of a,b,c,d used in the spec")
    c.add_argument("--target", help="model JSON to compare the result with")
    c.add_argument("--var", default="s")
    c.add_argument("--json", metavar="OUT")
    c.set_defaults(func=cmd_neighbor)

    c = sub.add_parser("derive-classical", help="eliminate a variable on the double plane")
    c.add_argument("--params", required=True)
    c.add_argument("--class", dest="class_id")
    c.add_argument("--num")
    c.add_argument("--den", default="1")
    c.add_argument("--solve", default="v", choices=("u", "v", "w", "none"))
    c.add_argument("--json", metavar="OUT")
    c.set_defaults(func=cmd_derive_classical)

    c = sub.add_parser("verify-catalog", help="check catalog classes against their expected rows")
    c.add_argument("--class", dest="class_id", default="all")
    c.add_argument("--params")
    c.add_argument("--json", metavar="OUT")
    c.set_defaults(func=cmd_verify_catalog)

    c = sub.add_parser("divisor", help="divisor identities and intersection numbers")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--check", choices=sorted(divisors.CHECKS))
    g.add_argument("--expr")
    c.add_argument("--type", action="store_true", help="also report the fibre type")
    c.set_defaults(func=cmd_divisor)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except K3FibError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
