"""Property-style invariants at desk scale (seeded, no fixed tables)."""
import math
from fractions import Fraction

import numpy as np
import pytest

from neargroup.groups import Bicharacter, GroupSpec, enumerate_elements, quadratic_forms_for
from neargroup.halfbraiding import expected_count, solve_triples_report
from neargroup.center import build_center
from neargroup.mtc import GaloisElement, galois_action, verify_modular
from neargroup.solver import SolverOptions, feasible_pairs, residual, solve_b


@pytest.mark.parametrize("n,m", [(2, 1), (3, 1)])
def test_small_cyclic_counts(n, m):
    """Solve then count triples for tiny cyclic groups: n(n+3)/2 holds."""
    spec = GroupSpec.of(n)
    bichar = Bicharacter.cyclic(n, m)
    sols = []
    for a, c, cp in feasible_pairs(spec, bichar):
        sols += solve_b(spec, bichar, a, c, SolverOptions(multistart_count=128), c_phase=cp)
    assert sols, f"no near-group solution for n={n}"
    data = sols[0]
    assert residual(data) <= 1e-10
    triples, rep = solve_triples_report(data)
    assert rep["count"] == expected_count(n) == n * (n + 3) // 2
    md = build_center(data, triples)
    assert md.rank == n * (n + 3)
    assert verify_modular(md).passed


def test_multistart_monotonicity():
    """Doubling the start budget never loses a previously found solution."""
    spec = GroupSpec.of(8)
    bichar = Bicharacter.cyclic(8, -1)
    want = {(x,): Fraction(x * x, 8) % 2 for x in range(8)}
    a = [f for f in quadratic_forms_for(bichar) if f.phases == want][0]
    c = np.exp(-2j * np.pi / 24)
    small = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=64, rng_seed=4))
    large = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=128, rng_seed=4))
    for s in small:
        assert any(np.abs(s.b - t.b).max() < 1e-6 for t in large)


def test_b_moduli_and_fourier(z8_data):
    data = z8_data
    n = data.n
    assert abs(data.b[0] + 1 / float(data.d)) < 1e-12
    assert np.abs(np.abs(data.b[1:]) - 1 / math.sqrt(n)).max() <= 1e-9
    P = data.bichar.matrix()
    lhs = P.conj() @ data.b
    rhs = math.sqrt(n) * data.c * np.conj(data.b)
    assert np.abs(lhs - rhs).max() <= 1e-10


def test_galois_non_closure_diagnostic():
    from neargroup.center import ModularData
    from neargroup.refdata import rank10_reference

    md = rank10_reference()
    md.S = md.S.copy()
    md.S[3, 4] += 0.21  # breaks Galois stability (and everything else)
    md.S[4, 3] = md.S[3, 4]
    with pytest.raises(ValueError):
        galois_action(md, GaloisElement(20, 13))


def test_pipeline_z8_preset(tmp_path):
    from neargroup.pipeline import run_pipeline

    rep = run_pipeline("z8-j81-full", out_dir=str(tmp_path))
    assert rep.ok, rep.summary()
    byname = {s.name: s for s in rep.stages}
    assert byname["triples"].detail["count"] == 44
    assert byname["center"].detail["rank"] == 88
    assert byname["condense"].detail["rank"] == 36
    assert byname["factor"].detail == {"pointed_rank": 4, "complement_rank": 9}
    assert byname["compare"].detail["galois"] == (24, 23)
    for artifact in ("neargroup", "halfbraidings", "center", "condensed", "pointed", "complement", "match_report", "summary"):
        assert (tmp_path / f"{artifact}.json").exists()


def test_pipeline_stage_skip_on_failure(tmp_path):
    from neargroup.pipeline import run_pipeline

    config = {
        "name": "broken",
        "group": [8],
        "bichar": [["-1/8"]],
        "gen_phases": ["1/8"],
        "c": "5/24",  # no solutions at this cube root
        "multistart": 32,
        "stages": ["solve", "triples", "center"],
        "seed": 0,
    }
    rep = run_pipeline(config, out_dir=str(tmp_path))
    assert not rep.ok
    assert rep.exit_code() == 3
    assert not rep.stages[0].ok
    assert rep.stages[1].error.startswith("skipped")
