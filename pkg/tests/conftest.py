"""Shared solved objects; session-scoped so the pipelines run once."""
import numpy as np
import pytest

from neargroup.groups import Bicharacter, GroupSpec, quadratic_forms_for
from neargroup.halfbraiding import solve_triples_report
from neargroup.center import build_center
from neargroup.solver import SolverOptions, feasible_pairs, solve_b


def cyclic_form(bichar, m, n):
    from fractions import Fraction

    want = {(x,): Fraction(-m * x * x, n) % 2 for x in range(n)}
    forms = [f for f in quadratic_forms_for(bichar) if f.phases == want]
    assert len(forms) == 1
    return forms[0]


@pytest.fixture(scope="session")
def fib_data():
    spec = GroupSpec.of(1)
    bichar = Bicharacter(spec, [[0]])
    sols = []
    for a, c, cp in feasible_pairs(spec, bichar):
        sols += solve_b(spec, bichar, a, c, SolverOptions(), c_phase=cp)
    assert len(sols) == 1
    return sols[0]


@pytest.fixture(scope="session")
def fib_center(fib_data):
    triples, report = solve_triples_report(fib_data)
    assert not report["shortfall"]
    return build_center(fib_data, triples)


@pytest.fixture(scope="session")
def z8_data():
    """The first Z/8+8 solution at pairing m=-1, c=zeta_24^-1."""
    spec = GroupSpec.of(8)
    bichar = Bicharacter.cyclic(8, -1)
    a = cyclic_form(bichar, -1, 8)
    c = np.exp(-2j * np.pi / 24)
    sols = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=256, rng_seed=0))
    assert len(sols) == 2
    # pick the row whose j(1) is 0.872276
    ref = 0.872276
    sols.sort(key=lambda s: abs(s.b_phases()[(1,)] - ref))
    return sols[0]


@pytest.fixture(scope="session")
def z8_triples(z8_data):
    triples, report = solve_triples_report(z8_data)
    assert not report["shortfall"], report
    return triples


@pytest.fixture(scope="session")
def z8_center(z8_data, z8_triples):
    return build_center(z8_data, z8_triples)
