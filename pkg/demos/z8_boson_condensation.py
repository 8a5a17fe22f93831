"""
Z/8+8: from the defining equations to the g2 level-4 modular data.
==================================================================

The cyclic pairing <x,y> = exp(-2 pi i x y / 8) with quadratic form
a(x) = exp(pi i x^2/8) and c = zeta_24^{-1} admits exactly two solution
rows for b.  Carrying the first through the pipeline:

  * 44 half-braiding triples label the d-dimensional simples,
  * the center has rank 88 = 8 + 8 + 28 + 44,
  * the invertible X_4 is a boson; condensing by {1, X_4} gives a rank-36
    category that factors as (pointed Z/4) boxtimes (rank 9),
  * the rank-9 factor has the modular data of the g2 level-4 quantum
    group category after replacing zeta_24 by its inverse.
"""
import time
from fractions import Fraction

import numpy as np

from neargroup.compare import compare_modular_data
from neargroup.condense import condense, factor_pointed
from neargroup.groups import Bicharacter, GroupSpec, quadratic_forms_for
from neargroup.halfbraiding import solve_triples_report
from neargroup.center import build_center, global_dim_exact
from neargroup.mtc import find_tannakian_subgroups, verify_modular
from neargroup.refdata import g2_level4_reference
from neargroup.solver import SolverOptions, solve_b

t0 = time.time()
spec = GroupSpec.of(8)
bichar = Bicharacter.cyclic(8, -1)
# the form a(x) = exp(pi i x^2/8)
a = [f for f in quadratic_forms_for(bichar) if f.phases[(1,)] == Fraction(1, 8)][0]
c = np.exp(-2j * np.pi / 24)

solutions = solve_b(spec, bichar, a, c, SolverOptions(multistart_count=256, rng_seed=0))
print(f"{len(solutions)} b-solutions; phase rows:")
for s in solutions:
    ph = s.b_phases()
    print("  j(1..4) =", [round(ph[(x,)], 6) for x in (1, 2, 3, 4)])
data = max(solutions, key=lambda s: s.b_phases()[(1,)])

triples, report = solve_triples_report(data)
print(f"{report['count']} triples (expected {report['expected']})")

center = build_center(data, triples)
print("center rank:", center.rank, "; global dim:", global_dim_exact(center))
print("modular:", verify_modular(center).passed)

bosons = [s for s in find_tannakian_subgroups(center) if len(s["labels"]) == 2]
print("Tannakian Z/2:", bosons[0]["labels"])

cond = condense(center, bosons[0]["labels"], rng_seed=3)
print("condensed rank:", cond.condensed.rank, "; ambiguous:", cond.ambiguous)

pointed, complement, _ = factor_pointed(cond.condensed)
print("factors: pointed rank", pointed.rank, "x complement rank", complement.rank)

report = compare_modular_data(complement, g2_level4_reference(), allow_galois=True)
print("g2 level-4 match:", report.matched, "; Galois witness: zeta_%d -> zeta_%d^%d" % (
    report.galois[0], report.galois[0], report.galois[1]))
print(f"total {time.time()-t0:.1f}s")
