"""Command-line entry points.

Each pipeline stage is independently invokable; ``pipeline`` runs a preset
or a JSON config end to end.  Exit codes: 0 success, 2 verification
failure, 3 solver shortfall, 4 comparison mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import io as ngio
from .compare import compare_modular_data
from .condense import condense, factor_pointed
from .groups import Bicharacter, GroupSpec
from .halfbraiding import solve_triples_report
from .center import build_center
from .mtc import find_tannakian_subgroups, verify_modular
from .pipeline import PRESETS, run_pipeline
from .refdata import REFERENCES
from .solver import SolverOptions, feasible_pairs, solve_b


def _group(text: str) -> GroupSpec:
    return GroupSpec(tuple(int(x) for x in text.split(",")))


def _bichar(spec: GroupSpec, text: str) -> Bicharacter:
    if text.startswith("m"):
        if len(spec.factors) != 1:
            raise SystemExit("shorthand mK needs a cyclic group")
        return Bicharacter.cyclic(spec.factors[0], int(text[1:]))
    with open(text) as fh:
        rows = json.load(fh)
    return Bicharacter(spec, [[Fraction(v) for v in row] for row in rows])


def _load_md(path: str):
    return ngio.modular_from_dict(ngio.read_json(path))


def _opts(args) -> SolverOptions:
    o = SolverOptions(rng_seed=args.seed)
    if getattr(args, "multistart", None):
        o.multistart_count = args.multistart
    if getattr(args, "tol", None):
        o.residual_tol = args.tol
    return o


def cmd_solve(args):
    spec = _group(args.group)
    bichar = _bichar(spec, args.bichar)
    sols = []
    for a, c, cp in feasible_pairs(spec, bichar):
        sols += solve_b(spec, bichar, a, c, _opts(args), c_phase=cp)
    doc = {"solutions": [ngio.neargroup_to_dict(s) for s in sols]}
    ngio.write_json(f"{args.out}/neargroup.json", doc)
    print(f"{len(sols)} solutions -> {args.out}/neargroup.json")
    return 0 if sols else 3


def cmd_triples(args):
    data = ngio.neargroup_from_dict(ngio.read_json(args.data)["solutions"][args.index])
    triples, rep = solve_triples_report(data, _opts(args))
    ngio.write_json(
        f"{args.out}/halfbraidings.json",
        {"triples": ngio.triples_to_dict(triples), "report": {k: rep[k] for k in ("count", "expected")}},
    )
    print(f"{rep['count']}/{rep['expected']} triples -> {args.out}/halfbraidings.json")
    return 0 if not rep["shortfall"] else 3


def cmd_center(args):
    data = ngio.neargroup_from_dict(ngio.read_json(args.data)["solutions"][args.index])
    triples = ngio.triples_from_dict(ngio.read_json(args.triples)["triples"])
    md = build_center(data, triples)
    ngio.write_json(f"{args.out}/center.json", ngio.modular_to_dict(md))
    print(f"rank {md.rank} center -> {args.out}/center.json")
    return 0


def cmd_verify(args):
    md = _load_md(args.data)
    rep = verify_modular(md, tol=args.tol or 1e-8)
    print(json.dumps({"passed": rep.passed, "t_order": rep.t_order,
                      "residuals": {k: float(v) for k, v in rep.residuals.items()},
                      "failures": rep.failures}, indent=1))
    return 0 if rep.passed else 2


def cmd_condense(args):
    md = _load_md(args.data)
    subs = [s for s in find_tannakian_subgroups(md) if len(s["labels"]) > 1]
    if not subs:
        print("no nontrivial Tannakian subgroup", file=sys.stderr)
        return 2
    rec = max(subs, key=lambda s: len(s["labels"]))
    result = condense(md, rec["labels"], rng_seed=args.seed)
    ngio.write_json(f"{args.out}/condensed.json", ngio.modular_to_dict(
        result.condensed, meta={"subgroup": rec["labels"], "ambiguous": result.ambiguous}))
    print(f"rank {result.condensed.rank} condensation by {rec['group_type']} -> {args.out}/condensed.json")
    return 0


def cmd_factor(args):
    md = _load_md(args.data)
    out = factor_pointed(md)
    if out is None:
        print("pointed part is degenerate", file=sys.stderr)
        return 2
    pointed, complement, _ = out
    ngio.write_json(f"{args.out}/pointed.json", ngio.modular_to_dict(pointed))
    ngio.write_json(f"{args.out}/complement.json", ngio.modular_to_dict(complement))
    print(f"pointed rank {pointed.rank} + complement rank {complement.rank} -> {args.out}/")
    return 0


def cmd_compare(args):
    md = _load_md(args.data)
    ref = REFERENCES[args.ref]() if args.ref in REFERENCES else _load_md(args.ref)
    rep = compare_modular_data(md, ref, allow_galois=args.galois, tol=args.tol or 1e-6)
    print(json.dumps({"matched": rep.matched, "galois": rep.galois,
                      "permutation": rep.permutation,
                      "max_deviation": rep.max_deviation,
                      "diagnostics": rep.diagnostics}, indent=1))
    return 0 if rep.matched else 4


def cmd_decompose(args):
    from .sl2z import candidate_decompositions, shortlist, verify_decomposition

    md = _load_md(args.data)
    types = candidate_decompositions(md)
    short = shortlist(types)
    accepted = []
    for t in short:
        out = verify_decomposition(md, t)
        if out is not None and out[1] <= 1e-8:
            accepted.append({"type": t.name(), "residual": out[1]})
    print(json.dumps({"candidates": [t.name() for t in types],
                      "shortlist": [t.name() for t in short],
                      "accepted": accepted}, indent=1))
    return 0


def cmd_pipeline(args):
    if args.config:
        with open(args.config) as fh:
            config = json.load(fh)
    else:
        config = PRESETS[args.preset]
    report = run_pipeline(config, out_dir=args.out)
    print(json.dumps(report.summary(), indent=1, default=str))
    return report.exit_code()


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="neargroup", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(q, out=True):
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--tol", type=float, default=None)
        if out:
            q.add_argument("--out", default=".")

    q = sub.add_parser("solve", help="solve the defining equations for (a, b, c)")
    q.add_argument("--group", required=True, help="cyclic factors, e.g. 4,4")
    q.add_argument("--bichar", required=True, help="mK shorthand or JSON exponent-matrix file")
    q.add_argument("--multistart", type=int, default=None)
    common(q)
    q.set_defaults(fn=cmd_solve)

    q = sub.add_parser("triples", help="solve the half-braiding equations")
    q.add_argument("--data", required=True, help="neargroup.json from solve")
    q.add_argument("--index", type=int, default=0)
    common(q)
    q.set_defaults(fn=cmd_triples)

    q = sub.add_parser("center", help="assemble the center's modular data")
    q.add_argument("--data", required=True)
    q.add_argument("--triples", required=True)
    q.add_argument("--index", type=int, default=0)
    common(q)
    q.set_defaults(fn=cmd_center)

    q = sub.add_parser("verify", help="modular-axiom verification report")
    q.add_argument("--data", required=True)
    common(q, out=False)
    q.set_defaults(fn=cmd_verify)

    q = sub.add_parser("condense", help="condense by the largest Tannakian subgroup")
    q.add_argument("--data", required=True)
    common(q)
    q.set_defaults(fn=cmd_condense)

    q = sub.add_parser("factor", help="split off the pointed modular factor")
    q.add_argument("--data", required=True)
    common(q)
    q.set_defaults(fn=cmd_factor)

    q = sub.add_parser("compare", help="match against a reference up to permutation/Galois")
    q.add_argument("--data", required=True)
    q.add_argument("--ref", required=True, help=f"one of {sorted(REFERENCES)} or a JSON path")
    q.add_argument("--galois", action="store_true")
    common(q, out=False)
    q.set_defaults(fn=cmd_compare)

    q = sub.add_parser("decompose", help="SL(2,Z) decomposition search")
    q.add_argument("--data", required=True)
    common(q, out=False)
    q.set_defaults(fn=cmd_decompose)

    q = sub.add_parser("pipeline", help="run a preset or JSON config end to end")
    q.add_argument("--preset", choices=sorted(PRESETS), default=None)
    q.add_argument("--config", default=None)
    q.add_argument("--out", default=None)
    q.set_defaults(fn=cmd_pipeline)

    args = p.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
