import numpy as np
import pytest

from neargroup.halfbraiding import expected_count, solve_triples_report, triple_residual
from neargroup.refdata import Z8_TRIPLES


def test_expected_count():
    assert expected_count(16) == 152
    assert expected_count(8) == 44
    assert expected_count(1) == 2


def test_trivial_group_triples(fib_data):
    triples, report = solve_triples_report(fib_data)
    assert report["count"] == 2
    omegas = sorted(np.angle([t.omega for t in triples]))
    want = sorted([-4 * np.pi / 5, 4 * np.pi / 5])
    assert np.allclose(omegas, want, atol=1e-9)
    for t in triples:
        assert t.tau == (0,)
        assert triple_residual(fib_data, t) <= 1e-10


def test_z8_triple_count_and_residuals(z8_data, z8_triples):
    assert len(z8_triples) == 44
    for t in z8_triples:
        assert triple_residual(z8_data, t) <= 1e-10
        assert abs(np.abs(t.xi) - 1).max() < 1e-9


def test_z8_triples_match_reference_rows(z8_data, z8_triples):
    """Content match: every published row appears exactly once (omega^2
    exponent over zeta_48, tau, xi phases to table precision)."""
    used = set()
    for (row_id, k48, tau, phases) in Z8_TRIPLES:
        om2 = np.exp(2j * np.pi * k48 / 48)
        xi_ref = np.exp(1j * np.array(phases))
        hits = [
            i
            for i, t in enumerate(z8_triples)
            if t.tau == (tau,)
            and abs(t.omega**2 - om2) < 1e-4
            and np.abs(t.xi - xi_ref).max() < 2e-4
        ]
        assert len(hits) == 1, f"row {row_id}: {len(hits)} matches"
        assert hits[0] not in used
        used.add(hits[0])
    assert len(used) == 44


def test_z8_omega_snapping(z8_triples):
    for t in z8_triples:
        assert t.omega_sq_exponent is not None and t.omega_sq_exponent[1] == 48
        assert t.omega_exponent is not None and t.omega_exponent[1] in (48, 96)


def test_eq3_symmetry_identity(z8_data, z8_triples):
    # xi(tau-g) xi(g) = omega c^4 a(g) a(tau-g), checkable independently
    data = z8_data
    for t in z8_triples[:10]:
        for i, g in enumerate(data.elements):
            h = data.spec.sub(t.tau, g)
            lhs = t.xi[data.index[h]] * t.xi[i]
            rhs = t.omega * data.c**4 * data.a.eval(g) * data.a.eval(h)
            assert abs(lhs - rhs) < 1e-9


def test_perturbed_triple_detected(z8_data, z8_triples):
    import copy

    t = copy.deepcopy(z8_triples[0])
    t.xi[3] *= np.exp(1e-3j)
    assert triple_residual(z8_data, t) > 1e-6
