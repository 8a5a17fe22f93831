"""End-to-end pipelines: solve -> triples -> center -> verify ->
condense -> factor -> compare -> decompose, with every intermediate
artifact written to disk and a machine-readable summary.

Configs are plain dicts (see PRESETS); runs are idempotent for a fixed
seed.  Stage failures are recorded and later stages are skipped with the
reason.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .compare import compare_modular_data
from .condense import condense, factor_pointed
from .groups import Bicharacter, GroupSpec
from .halfbraiding import solve_triples_report
from .center import build_center, global_dim_exact, pointed_part
from .mtc import balancing_check, find_tannakian_subgroups, verify_modular, verlinde_fusion
from .refdata import REFERENCES
from .solver import SolverOptions, feasible_pairs, solve_b
from . import io as ngio

PRESETS = {
    "trivial-group": {
        "name": "trivial-group",
        "group": [1],
        "bichar": [["0"]],
        "stages": ["solve", "triples", "center", "verify", "decompose"],
        "seed": 0,
    },
    "z8-j81-full": {
        "name": "z8-j81-full",
        "group": [8],
        "bichar": [["-1/8"]],
        "gen_phases": ["1/8"],
        "c": "-1/24",
        "solution_pick": {"j1": 0.872276},
        "multistart": 256,
        "stages": ["solve", "triples", "center", "verify", "condense", "factor", "compare"],
        "condense_by": "auto",
        "compare_ref": "g2_level4",
        "compare_allow_galois": True,
        "seed": 0,
    },
    "z4z4-full": {
        "name": "z4z4-full",
        "group": [4, 4],
        "bichar": [["1/4", "0"], ["0", "-1/4"]],
        "gen_phases": ["3/4", "5/4"],
        "c": "0/1",
        "multistart": 1024,
        "stages": ["solve", "triples", "center", "verify", "condense", "compare", "decompose"],
        "condense_by": "auto",
        "compare_ref": "rank10",
        "compare_allow_galois": False,
        "seed": 0,
    },
}


@dataclass
class StageResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)
    error: str | None = None


@dataclass
class PipelineReport:
    config: dict
    stages: list[StageResult] = field(default_factory=list)
    artifacts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.stages)

    def exit_code(self) -> int:
        for s in self.stages:
            if not s.ok:
                if s.name in ("verify",):
                    return 2
                if s.name in ("solve", "triples"):
                    return 3
                if s.name in ("compare",):
                    return 4
                return 2
        return 0

    def summary(self) -> dict:
        return {
            "config": self.config.get("name", "unnamed"),
            "ok": self.ok,
            "stages": [
                {"name": s.name, "ok": s.ok, "detail": s.detail, "error": s.error}
                for s in self.stages
            ],
        }


def _parse_config(config: dict):
    spec = GroupSpec(tuple(config["group"]))
    bichar = Bicharacter(spec, [[Fraction(v) for v in row] for row in config["bichar"]])
    return spec, bichar


def _select_form(spec, bichar, config):
    from .groups import quadratic_forms_for

    forms_c = feasible_pairs(spec, bichar)
    if "gen_phases" in config:
        k = len(spec.factors)
        gens = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
        want = [Fraction(v) % 2 for v in config["gen_phases"]]
        forms_c = [
            (a, c, cp)
            for (a, c, cp) in forms_c
            if all(a.phase(g) == w for g, w in zip(gens, want))
        ]
    if "c" in config:
        cp_want = 2 * Fraction(config["c"]) % 2  # "k/N" means exp(2 pi i k/N)
        forms_c = [(a, c, cp) for (a, c, cp) in forms_c if cp == cp_want]
    return forms_c


def run_pipeline(config: dict | str, out_dir: str | None = None) -> PipelineReport:
    if isinstance(config, str):
        config = PRESETS[config]
    report = PipelineReport(config=config)
    spec, bichar = _parse_config(config)
    opts = SolverOptions(
        rng_seed=config.get("seed", 0), multistart_count=config.get("multistart")
    )
    if "residual_tol" in config:
        opts.residual_tol = config["residual_tol"]

    def emit(name, doc):
        if out_dir:
            path = os.path.join(out_dir, f"{name}.json")
            ngio.write_json(path, doc)
            report.artifacts[name] = path

    state: dict = {}
    stages = list(config.get("stages", []))
    skip_reason = None
    for stage in stages:
        if skip_reason is not None:
            report.stages.append(
                StageResult(stage, False, error=f"skipped: {skip_reason}")
            )
            continue
        try:
            detail = _run_stage(stage, state, spec, bichar, config, opts, emit)
            report.stages.append(StageResult(stage, True, detail=detail))
        except Exception as exc:  # noqa: BLE001 - reported, not swallowed
            report.stages.append(StageResult(stage, False, error=str(exc)))
            skip_reason = f"{stage} failed"
    emit("summary", report.summary())
    return report


def _run_stage(stage, state, spec, bichar, config, opts, emit):
    if stage == "solve":
        sols = []
        for a, c, cp in _select_form(spec, bichar, config):
            sols += solve_b(spec, bichar, a, c, opts, c_phase=cp)
        if not sols:
            raise RuntimeError("no solutions found for the configured (a, c)")
        pick = 0
        if "solution_pick" in config:
            j1 = config["solution_pick"]["j1"]
            gen = tuple(1 if i == 0 else 0 for i in range(len(spec.factors)))
            pick = int(
                np.argmin([abs(s.b_phases()[gen] - j1) for s in sols])
            )
        state["solutions"] = sols
        state["data"] = sols[pick]
        emit("neargroup", {"solutions": [ngio.neargroup_to_dict(s) for s in sols], "picked": pick})
        return {"solutions": len(sols), "picked": pick}
    if stage == "triples":
        triples, rep = solve_triples_report(state["data"], opts)
        if rep["shortfall"]:
            raise RuntimeError(f"triple shortfall: {rep['count']} < {rep['expected']}")
        state["triples"] = triples
        emit("halfbraidings", {"triples": ngio.triples_to_dict(triples), "report": {
            "count": rep["count"], "expected": rep["expected"]}})
        return {"count": rep["count"]}
    if stage == "center":
        md = build_center(state["data"], state["triples"])
        state["center"] = md
        state["current"] = md
        emit("center", ngio.modular_to_dict(md))
        return {"rank": md.rank, "global_dim": md.global_dim,
                "global_dim_exact": str(global_dim_exact(md))}
    if stage == "verify":
        md = state["current"]
        rep = verify_modular(md)
        if not rep.passed:
            raise RuntimeError(f"verification failed: {rep.failures}")
        detail = {k: float(v) for k, v in rep.residuals.items()}
        detail["t_order"] = rep.t_order
        emit("verify_report", detail)
        return detail
    if stage == "condense":
        md = state["current"]
        subs = [s for s in find_tannakian_subgroups(md) if len(s["labels"]) > 1]
        if not subs:
            raise RuntimeError("no nontrivial Tannakian subgroup")
        choice = config.get("condense_by", "auto")
        if choice == "auto":
            rec = max(subs, key=lambda s: len(s["labels"]))
        else:
            rec = [s for s in subs if s["labels"] == sorted(choice)][0]
        result = condense(md, rec["labels"], rng_seed=config.get("seed", 0))
        state["condensation"] = result
        state["current"] = result.condensed
        emit("condensed", ngio.modular_to_dict(result.condensed, meta={
            "subgroup": rec["labels"], "group_type": list(rec["group_type"]),
            "ambiguous": result.ambiguous,
            "orbits": [
                {"rep": o.rep, "members": o.members, "stabilizer": o.stabilizer_order}
                for o in result.orbits
            ],
        }))
        return {"rank": result.condensed.rank, "subgroup": rec["labels"],
                "group_type": list(rec["group_type"]), "ambiguous": result.ambiguous}
    if stage == "factor":
        md = state["current"]
        out = factor_pointed(md)
        if out is None:
            raise RuntimeError("pointed part is degenerate; nothing split off")
        pointed, complement, _ = out
        state["pointed"], state["current"] = pointed, complement
        emit("pointed", ngio.modular_to_dict(pointed))
        emit("complement", ngio.modular_to_dict(complement))
        return {"pointed_rank": pointed.rank, "complement_rank": complement.rank}
    if stage == "compare":
        md = state["current"]
        ref = REFERENCES[config["compare_ref"]]()
        rep = compare_modular_data(
            md, ref, allow_galois=config.get("compare_allow_galois", False)
        )
        emit("match_report", {
            "matched": rep.matched, "permutation": rep.permutation,
            "galois": list(rep.galois) if rep.galois else None,
            "max_deviation": rep.max_deviation, "diagnostics": rep.diagnostics,
        })
        if not rep.matched:
            raise RuntimeError(f"no match against {config['compare_ref']}: {rep.diagnostics}")
        return {"matched": True, "galois": rep.galois, "max_deviation": rep.max_deviation}
    if stage == "decompose":
        from .sl2z import candidate_decompositions, shortlist, verify_decomposition

        md = state["current"]
        types = candidate_decompositions(md)
        short = shortlist(types)
        accepted = []
        for t in short:
            out = verify_decomposition(md, t)
            if out is not None and out[1] <= 1e-8:
                accepted.append((t.name(), out[1]))
        emit("decomposition", {
            "candidates": [t.name() for t in types],
            "shortlist": [t.name() for t in short],
            "accepted": accepted,
        })
        return {"candidates": len(types), "shortlist": len(short), "accepted": accepted}
    raise ValueError(f"unknown stage {stage}")
