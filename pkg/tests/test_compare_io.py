import json
import os

import numpy as np
import pytest

from neargroup import io as ngio
from neargroup.compare import compare_modular_data
from neargroup.refdata import (
    g2_level4_reference,
    rank10_reference,
    z8_condensation_factor_reference,
)


def test_roundtrip_modular(tmp_path, z8_center):
    path = tmp_path / "center.json"
    ngio.write_json(str(path), ngio.modular_to_dict(z8_center))
    back = ngio.modular_from_dict(ngio.read_json(str(path)))
    assert back.rank == z8_center.rank
    assert np.abs(back.S - z8_center.S).max() == 0.0  # floats serialize exactly
    assert np.abs(back.T - z8_center.T).max() <= 1e-15
    assert back.labels == z8_center.labels
    assert [str(q) for q in back.dims_exact] == [str(q) for q in z8_center.dims_exact]


def test_roundtrip_neargroup(tmp_path, z8_data):
    doc = ngio.neargroup_to_dict(z8_data)
    path = tmp_path / "ng.json"
    ngio.write_json(str(path), doc)
    back = ngio.neargroup_from_dict(ngio.read_json(str(path)))
    assert np.array_equal(back.b, z8_data.b)
    assert back.a.phases == z8_data.a.phases
    assert back.c == pytest.approx(z8_data.c, abs=1e-15)


def test_roundtrip_triples(tmp_path, z8_triples):
    doc = ngio.triples_to_dict(z8_triples)
    back = ngio.triples_from_dict(doc)
    for t1, t2 in zip(z8_triples, back):
        assert t1.tau == t2.tau
        assert t1.omega == t2.omega
        assert np.array_equal(t1.xi, t2.xi)
        assert t1.omega_sq_exponent == t2.omega_sq_exponent


def test_compare_self_identity():
    md = rank10_reference()
    rep = compare_modular_data(md, rank10_reference())
    assert rep.matched and rep.galois is None
    assert rep.permutation == list(range(10))
    assert rep.max_deviation <= 1e-12


def test_compare_after_permutation():
    md = rank10_reference()
    # swap the two twist-zeta5 labels and their S rows/cols
    perm = [0, 1, 2, 3, 4, 5, 6, 8, 7, 9]
    shuffled = md.permuted(perm)
    rep = compare_modular_data(shuffled, rank10_reference())
    assert rep.matched
    assert rep.permutation != list(range(10))
    inv = compare_modular_data(rank10_reference(), shuffled)
    assert inv.matched  # symmetric in success


def test_compare_rank_mismatch(fib_center):
    rep = compare_modular_data(fib_center, rank10_reference())
    assert not rep.matched
    assert "rank" in rep.diagnostics


def test_compare_g2_galois_match():
    d9 = z8_condensation_factor_reference()
    g2 = g2_level4_reference()
    direct = compare_modular_data(d9, g2, allow_galois=False)
    assert not direct.matched
    rep = compare_modular_data(d9, g2, allow_galois=True)
    assert rep.matched
    assert rep.galois == (24, 23)  # zeta24 -> zeta24^{-1}


def test_cli_smoke(tmp_path):
    from neargroup.cli import main

    out = str(tmp_path)
    assert main(["solve", "--group", "8", "--bichar", "m-1", "--multistart", "64", "--out", out]) == 0
    assert main(["triples", "--data", f"{out}/neargroup.json", "--out", out]) == 0
    assert (
        main(
            [
                "center",
                "--data",
                f"{out}/neargroup.json",
                "--triples",
                f"{out}/halfbraidings.json",
                "--out",
                out,
            ]
        )
        == 0
    )
    assert main(["verify", "--data", f"{out}/center.json"]) == 0
    assert main(["condense", "--data", f"{out}/center.json", "--out", out]) == 0
    assert main(["factor", "--data", f"{out}/condensed.json", "--out", out]) == 0
    code = main(["compare", "--data", f"{out}/complement.json", "--ref", "g2_level4", "--galois"])
    assert code == 0
    # mismatch exit code
    assert main(["compare", "--data", f"{out}/complement.json", "--ref", "rank10"]) == 4


def test_pipeline_trivial(tmp_path):
    from neargroup.pipeline import run_pipeline

    rep = run_pipeline("trivial-group", out_dir=str(tmp_path))
    assert rep.ok, rep.summary()
    assert rep.exit_code() == 0
    names = {s.name for s in rep.stages}
    assert {"solve", "triples", "center", "verify", "decompose"} <= names
    assert os.path.exists(tmp_path / "summary.json")
    with open(tmp_path / "center.json") as fh:
        doc = json.load(fh)
    assert len(doc["labels"]) == 4
