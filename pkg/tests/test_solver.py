import math
from fractions import Fraction

import numpy as np
import pytest

from neargroup.groups import Bicharacter, GroupSpec, enumerate_elements
from neargroup.solver import (
    SolverOptions,
    dedupe_up_to_aut,
    dim_d,
    feasible_pairs,
    residual,
    solve_b,
)

# reference phase rows for Z/8, pairing m=-1, c = zeta_24^-1 (6-digit tables)
J81 = {1: 0.872276, 2: -2.70426, 3: 2.9768, 4: 3.14159}
J82 = {1: -1.26498, 2: 1.13347, 3: -0.227903, 4: 3.14159}
# and for m=-3, c = zeta_24^17
J83 = {1: -2.46405, 2: 3.07557, 3: 0.491887, 4: 0.0}
J84 = {1: 1.28595, 2: -1.50478, 3: 1.47161, 4: 0.0}


def a_form_cyclic(bichar, m, n):
    """a(x) = exp(-pi i m x^2 / n) among the computed quadratic forms."""
    from neargroup.groups import quadratic_forms_for

    want = {(x,): Fraction(-m * x * x, n) % 2 for x in range(n)}
    forms = [f for f in quadratic_forms_for(bichar) if f.phases == want]
    assert len(forms) == 1
    return forms[0]


def test_dim_d_values():
    assert float(dim_d(1)) == pytest.approx((1 + math.sqrt(5)) / 2)
    assert float(dim_d(8)) == pytest.approx(4 + math.sqrt(24))
    assert float(dim_d(16)) == pytest.approx(8 + math.sqrt(80))
    assert dim_d(8).p == 4 and dim_d(8).m == 6  # 4 + 2*sqrt(6)


def test_feasible_pairs_trivial_group():
    spec = GroupSpec.of(1)
    pairs = feasible_pairs(spec, Bicharacter(spec, [[0]]))
    assert len(pairs) == 3
    cs = sorted(np.round([c for _, c, _ in pairs], 8).tolist(), key=lambda z: (z.real, z.imag))
    roots = sorted(
        np.round([np.exp(2j * np.pi * k / 3) for k in range(3)], 8).tolist(),
        key=lambda z: (z.real, z.imag),
    )
    assert cs == roots


def test_feasible_pairs_z8():
    spec = GroupSpec.of(8)
    pairs = feasible_pairs(spec, Bicharacter.cyclic(8, -1))
    # both forms (eps = +-1) have |gauss| = sqrt(8); three cube roots each
    assert len(pairs) == 6
    cs = [c for _, c, _ in pairs]
    assert any(abs(c - np.exp(-2j * np.pi / 24)) < 1e-12 for c in cs)
    pairs3 = feasible_pairs(spec, Bicharacter.cyclic(8, -3))
    assert any(abs(c - np.exp(2j * np.pi * 17 / 24)) < 1e-12 for _, c, _ in pairs3)


def test_trivial_group_solution():
    spec = GroupSpec.of(1)
    bichar = Bicharacter(spec, [[0]])
    sols = []
    for a, c, cp in feasible_pairs(spec, bichar):
        sols += solve_b(spec, bichar, a, c, SolverOptions(), c_phase=cp)
    assert len(sols) == 1  # only c = 1 is consistent
    s = sols[0]
    phi = (1 + math.sqrt(5)) / 2
    assert s.b[0] == pytest.approx(-1 / phi)
    assert s.b[0] ** 2 == pytest.approx(1 - 1 / float(s.d))
    assert residual(s) <= 1e-13
    assert s.c == pytest.approx(1.0)


@pytest.mark.parametrize(
    "m,c_num,rows",
    [(-1, -1, (J81, J82)), (-3, 17, (J83, J84))],
)
def test_z8_reference_rows(m, c_num, rows):
    spec = GroupSpec.of(8)
    bichar = Bicharacter.cyclic(8, m)
    a = a_form_cyclic(bichar, m, 8)
    c = np.exp(2j * np.pi * c_num / 24)
    sols = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=256, rng_seed=0))
    assert len(sols) == 2
    for row in rows:
        hit = 0
        for s in sols:
            ph = s.b_phases()
            diffs = [
                abs((ph[(x,)] - row[x] + np.pi) % (2 * np.pi) - np.pi) for x in (1, 2, 3, 4)
            ]
            if max(diffs) < 1e-4:
                hit += 1
        assert hit == 1, f"row {row} not uniquely recovered"
    for s in sols:
        assert residual(s) <= 1e-10
        nz = np.abs(s.b[1:])
        assert np.abs(nz - 1 / math.sqrt(8)).max() < 1e-9


def test_residual_sensitivity():
    spec = GroupSpec.of(8)
    bichar = Bicharacter.cyclic(8, -1)
    a = a_form_cyclic(bichar, -1, 8)
    c = np.exp(-2j * np.pi / 24)
    s = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=128))[0]
    base = residual(s)
    assert base <= 1e-10
    s.b[1] *= np.exp(1e-3j)
    assert residual(s) > 1e-5


def test_dedupe_z8_negation_witness():
    # the two phase rows are related by x -> -x, which preserves the pairing
    # and the quadratic form, so the stated criterion merges them
    spec = GroupSpec.of(8)
    bichar = Bicharacter.cyclic(8, -1)
    a = a_form_cyclic(bichar, -1, 8)
    c = np.exp(-2j * np.pi / 24)
    sols = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=256))
    assert len(sols) == 2
    classes = dedupe_up_to_aut(sols)
    assert len(classes) == 1
    witness = classes[0]["witnesses"][1]
    assert witness[(1,)] in {(1,), (7,)}


def test_dedupe_merges_noise():
    spec = GroupSpec.of(8)
    bichar = Bicharacter.cyclic(8, -1)
    a = a_form_cyclic(bichar, -1, 8)
    c = np.exp(-2j * np.pi / 24)
    s = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=128))[0]
    import copy

    s2 = copy.deepcopy(s)
    s2.b = s2.b * np.exp(1e-12j)
    classes = dedupe_up_to_aut([s, s2])
    assert len(classes) == 1


def test_solver_deterministic():
    spec = GroupSpec.of(8)
    bichar = Bicharacter.cyclic(8, -1)
    a = a_form_cyclic(bichar, -1, 8)
    c = np.exp(-2j * np.pi / 24)
    s1 = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=64, rng_seed=7))
    s2 = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=64, rng_seed=7))
    assert len(s1) == len(s2)
    for u, v in zip(s1, s2):
        assert np.array_equal(u.b, v.b)
