"""Command-line front end.

Every subcommand reads one JSON document and writes one JSON document.
Exit status: 0 on success, 1 for a mathematical domain error, 2 for
unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import higgs
from .components import components, dualize, euler_set
from .errors import DomainError, SchemaError
from .lift import CLASS_TOL, LiftedIsometry, classify, euler_number, milnor_wood, rot
from .sampler import SampleConfig, measurement_consistent, sample_many
from .schema import (
    dump_class,
    dump_component,
    dump_representation,
    dump_signature,
    dump_stratum,
    dump_topology,
    dump_uniformization,
    parse_geometry,
    parse_higgs,
    parse_matrix_doc,
    parse_representation,
    parse_signature,
    rational,
)
from .uniformization import mapped_signature, uniformization_component


class InputError(Exception):
    pass


def _load(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def cmd_classify(args) -> Any:
    obj = parse_matrix_doc(_load(args.input))
    if isinstance(obj, LiftedIsometry):
        out = dump_class(classify(obj.matrix, args.tol))
        out["rot"] = rot(obj, args.tol)
        return out
    return dump_class(classify(obj, args.tol))


def cmd_euler(args) -> Any:
    rep = parse_representation(_load(args.input), args.relation_tol)
    mw = milnor_wood(rep, args.tol)
    return {
        "euler": mw.eu,
        "bound": mw.bound,
        "slack": mw.slack,
        "boundary_classes": [dump_class(classify(c, args.tol)) for c in rep.boundaries],
    }


def cmd_components(args) -> Any:
    sig = parse_signature(_load(args.input))
    return [dump_component(c) for c in components(sig, closure=args.closure)]


def _stratum_report(st: higgs.Stratum, quotient: bool) -> dict:
    out = dump_stratum(st)
    out["topology"] = dump_topology(higgs.stratum_topology(st, quotient=quotient))
    out["closure_topology"] = dump_topology(higgs.stratum_topology(st, quotient=quotient, closure=True))
    if not (st.g == 0 and st.n == 3 + st.counts.s0):
        comp = higgs.is_compact(st)
        out["compact"] = comp.compact
        if comp.compact:
            out["projective_dim"] = comp.projective_dim
    return out


def cmd_strata(args) -> Any:
    g, d0, weights, residues, extra = parse_higgs(_load(args.input))
    if "d" in extra:
        st = higgs.Stratum(g, d0, weights, residues, extra["d"], extra["a"], extra.get("eps"))
        if not higgs.is_stratum_admissible(st):
            raise higgs.NotAdmissible(f"(d, a) = ({st.d}, {list(st.a)}) is not admissible")
        return _stratum_report(st, args.quotient)
    locus = higgs.sigma_fixed_locus(weights, residues, d0, g)
    return {
        "strata": [_stratum_report(st, args.quotient) for st in locus.strata],
        "boundary_e0": [dump_stratum(st) for st in locus.boundary],
        "bundles_locus": locus.bundles_locus,
    }


def cmd_uniformize(args) -> Any:
    g, specs = parse_geometry(_load(args.input))
    out = dump_uniformization(uniformization_component(g, specs))
    out["signature"] = dump_signature(mapped_signature(g, specs))
    return out


def _sample_config(args) -> SampleConfig:
    return SampleConfig(seed=args.seed, max_tries=args.max_tries, relation_tol=args.relation_tol, class_tol=args.tol)


def cmd_sample(args) -> Any:
    sig = parse_signature(_load(args.input))
    cfg = _sample_config(args)
    out = []
    for i, s in enumerate(sample_many(sig, cfg, args.count)):
        out.append(
            {
                "index": i,
                "euler": euler_number(s.rep, tol=args.tol),
                "forced_puncture": s.forced_index,
                "achieved_frac_rot": s.achieved_frac_rot,
                "tries": s.tries,
                "rep": dump_representation(s.rep),
            }
        )
    return out


def cmd_crosscheck(args) -> Any:
    sig = parse_signature(_load(args.input))
    cfg = _sample_config(args)
    exact = euler_set(sig)
    lifted = higgs.lifted_euler_set(sig.genus, sig.specs)
    measured = []
    failures = 0
    for s in sample_many(sig, cfg, args.samples):
        eu = euler_number(s.rep, tol=args.tol)
        measured.append(eu)
        failures += not measurement_consistent(sig, s, eu)
    return {
        "euler_set": [rational(e) for e in exact],
        "negative_euler_set": [rational(-e) for e in reversed(euler_set(dualize(sig)))],
        "higgs_euler_set": [rational(e) for e in lifted],
        "classifier_vs_strata": exact == lifted,
        "samples": len(measured),
        "measured_euler": sorted({round(x, 6) + 0.0 for x in measured}),
        "classifier_vs_sampler": failures == 0,
        "inconsistent_samples": failures,
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="classification tolerance")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")
    common.add_argument("--output", default=argparse.SUPPRESS, help="write JSON here instead of stdout")
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indent JSON output")

    parser = argparse.ArgumentParser(prog="psl2rep", description=__doc__.splitlines()[0], parents=[common])
    parser.set_defaults(tol=CLASS_TOL, seed=0, output=None, pretty=False, relation_tol=1e-6, max_tries=1000)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, input_help):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", help=input_help + " ('-' for stdin)")
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "classify a PSL(2,R) matrix", "matrix JSON")
    add("euler", cmd_euler, "Euler number and Milnor-Wood slack", "representation JSON")
    p = add("components", cmd_components, "components of a relative representation space", "signature JSON")
    p.add_argument("--closure", action="store_true", help="describe the closures")
    p = add("strata", cmd_strata, "sigma-fixed Higgs strata", "Higgs data JSON")
    p.add_argument("--quotient", action="store_true", help="quotient by the 2-torsion of the Jacobian")
    add("uniformize", cmd_uniformize, "uniformization component of a hyperbolic metric type", "geometry JSON")
    for name, func, help_text, count in (
        ("sample", cmd_sample, "sample representations", "--count"),
        ("crosscheck", cmd_crosscheck, "compare classifier, Higgs strata and sampler", "--samples"),
    ):
        p = add(name, func, help_text, "signature JSON")
        p.add_argument(count, dest=count.strip("-"), type=int, default=10)
        p.add_argument("--max-tries", dest="max_tries", type=int, default=1000)
    return parser


def _emit(result: Any, args) -> None:
    text = json.dumps(result, indent=2 if args.pretty else None, sort_keys=True) + "\n"
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        _emit(args.func(args), args)
    except SchemaError as exc:
        print(json.dumps({"error": "schema", "pointer": exc.pointer, "message": str(exc)}), file=sys.stderr)
        return 2
    except InputError as exc:
        print(json.dumps({"error": "io", "message": str(exc)}), file=sys.stderr)
        return 2
    except DomainError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    except ValueError as exc:
        print(json.dumps({"error": "invalid_argument", "message": str(exc)}), file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
