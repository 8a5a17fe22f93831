from collections import Counter

import numpy as np
import pytest

from neargroup.condense import (
    condense,
    factor_pointed,
    invertible_action,
    invertible_permutation,
    orbit_decomposition,
)
from neargroup.center import global_dim_exact
from neargroup.mtc import (
    balancing_check,
    centralizer,
    find_tannakian_subgroups,
    fusion_slice,
    verify_modular,
    verlinde_fusion,
)
from neargroup.refdata import (
    Z8_BOSON_W_ACTION,
    Z8_BOSON_W_CENTRALIZED,
    Z8_CONDENSED_CENSUS,
    Z8_TRIPLES,
    z8_condensation_factor_reference,
)


@pytest.fixture(scope="module")
def z8_cond(z8_center):
    return condense(z8_center, [0, 4], rng_seed=3, n_starts=40)


def _d_index_map(z8_triples):
    """Map published triple row index -> our canonical D index."""
    out = {}
    for (row_id, k48, tau, phases) in Z8_TRIPLES:
        om2 = np.exp(2j * np.pi * k48 / 48)
        xi_ref = np.exp(1j * np.array(phases))
        hits = [
            j
            for j, t in enumerate(z8_triples)
            if t.tau == (tau,) and abs(t.omega**2 - om2) < 1e-4 and np.abs(t.xi - xi_ref).max() < 2e-4
        ]
        assert len(hits) == 1
        out[row_id] = hits[0]
    return out


def test_boson_action_on_invertibles(z8_center):
    # X4 is the boson; X4 x X_g = X_{g+4}
    perm = invertible_permutation(z8_center, 4)
    for g in range(8):
        assert perm[g] == (g + 4) % 8
    # Y and Z families shift the same way
    for h in range(8):
        assert perm[8 + h] == 8 + (h + 4) % 8
    N = verlinde_fusion(z8_center)
    assert invertible_action(z8_center, N, 4, 0) == 4


def test_boson_action_on_pairs(z8_center):
    perm = invertible_permutation(z8_center, 4)
    pairs = [(k, l) for k in range(8) for l in range(k + 1, 8)]
    base = 16
    for i, (k, l) in enumerate(pairs):
        kk, ll = sorted(((k + 4) % 8, (l + 4) % 8))
        assert z8_center.labels[perm[base + i]] == ("C", ((kk,), (ll,)))


def test_boson_action_on_triples_matches_reference(z8_center, z8_triples):
    perm = invertible_permutation(z8_center, 4)
    dmap = _d_index_map(z8_triples)
    base = 16 + 28
    for row, target in Z8_BOSON_W_ACTION.items():
        got = perm[base + dmap[row]]
        assert got == base + dmap[target], f"row {row} -> {target}"


def test_boson_centralized_membership(z8_center, z8_triples):
    cent = set(centralizer(z8_center, [0, 4]))
    dmap = _d_index_map(z8_triples)
    base = 16 + 28
    for row in range(1, 45):
        want = row in Z8_BOSON_W_CENTRALIZED
        assert ((base + dmap[row]) in cent) == want
    # Z objects: centralized iff k+l even
    pairs = [(k, l) for k in range(8) for l in range(k + 1, 8)]
    for i, (k, l) in enumerate(pairs):
        assert ((16 + i) in cent) == ((k + l) % 2 == 0)


def test_orbit_table(z8_center):
    cent = centralizer(z8_center, [0, 4])
    orbits = orbit_decomposition(z8_center, [0, 4], cent)
    split = [o for o in orbits if o.stabilizer_order == 2]
    free = [o for o in orbits if o.stabilizer_order == 1]
    assert len(split) == 8 and len(free) == 20
    split_labels = sorted(z8_center.labels[o.rep] for o in split if o.rep < 44)
    assert ("C", ((0,), (4,))) in [z8_center.labels[o.rep] for o in split]
    assert len(cent) == 48


def test_condensed_rank_and_census(z8_cond):
    md = z8_cond.condensed
    assert md.rank == 36
    assert not z8_cond.ambiguous, "condensation should be unambiguous"
    got = Counter(
        (round(float(d), 6), round(complex(t).real, 6), round(complex(t).imag, 6))
        for d, t in zip(md.dims, md.T)
    )
    want = Counter()
    for d, t, mult in Z8_CONDENSED_CENSUS:
        want[(round(float(d), 6), round(complex(t).real, 6), round(complex(t).imag, 6))] += mult
    assert got == want


def test_condensed_is_modular(z8_cond):
    md = z8_cond.condensed
    rep = verify_modular(md, tol=1e-7)
    assert rep.passed, rep.failures
    N = verlinde_fusion(md)
    assert balancing_check(md, N) <= 1e-6
    parent_dim = z8_cond.parent.global_dim
    assert md.global_dim == pytest.approx(parent_dim / 4, rel=1e-9)


def test_split_sum_rule(z8_cond):
    # for each split parent X and free F(Y): sum_i S'[(X)_i][F(Y)] = S_parent[X, Y]
    md = z8_cond.condensed
    parent = z8_cond.parent
    prov = z8_cond.provenance
    free_idx = [i for i, (rep, part) in enumerate(prov) if part == 0]
    for i, (rep_i, part_i) in enumerate(prov):
        if part_i != 1:
            continue
        for j in free_idx:
            rep_j = prov[j][0]
            total = md.S[i, j] + md.S[i + 1, j]
            assert abs(total - parent.S[rep_i, rep_j]) < 1e-7


def test_factorization_and_nine_by_nine(z8_cond):
    out = factor_pointed(z8_cond.condensed)
    assert out is not None
    pointed, complement, assignment = out
    assert pointed.rank == 4 and complement.rank == 9
    # pointed part is the Z/4 premetric group with twists (1, z8^-1, -1, z8^-1)
    tw = sorted(np.round(np.angle(pointed.T) / np.pi, 6).tolist())
    assert tw == sorted([0.0, -0.25, 1.0, -0.25]) or tw == sorted([0.0, -0.25, -1.0, -0.25])
    ref = z8_condensation_factor_reference()
    from neargroup.compare import compare_modular_data

    rep = compare_modular_data(complement, ref, allow_galois=False, tol=1e-6)
    assert rep.matched, rep.diagnostics


def test_condense_rejects_non_tannakian(z8_center):
    with pytest.raises(ValueError):
        condense(z8_center, [0, 2, 4, 6])  # X2 has twist -1
