"""
Z/4 x Z/4 + 16: realizing the rank-10 modular datum.
====================================================

The pairing <(g1,g2),(h1,h2)> = i^(g1 h1 - g2 h2) supports the quadratic
form a(g1,g2) = zeta_8^{3(g1^2-g2^2)} with c = 1, and the b-system has
exactly four solutions forming a single equivalence class.  The center
has rank 304; its pointed part contains a Tannakian Rep(Z/2 x Z/4), and
condensing collapses everything to a rank-10 modular category whose
(S, T) equal the known rank-10 datum with s = -1+2i blocks.  Its SL(2,Z)
representation decomposes as rho1 + rho2 + rho4 + rho5 + 2 rho0.

Allow ~15 minutes (most of it spent on the 152 half-braiding triples and
the 1024-start solver sweep).
"""
import time
from fractions import Fraction

import numpy as np

from neargroup.compare import compare_modular_data
from neargroup.condense import condense
from neargroup.groups import Bicharacter, GroupSpec
from neargroup.halfbraiding import solve_triples_report
from neargroup.center import build_center, global_dim_exact, pointed_part
from neargroup.mtc import centralizer, find_tannakian_subgroups, verify_modular
from neargroup.refdata import rank10_reference
from neargroup.solver import SolverOptions, feasible_pairs, solve_b
from neargroup.sl2z import candidate_decompositions, shortlist, verify_decomposition

t0 = time.time()
spec = GroupSpec.of(4, 4)
bichar = Bicharacter(spec, [[Fraction(1, 4), 0], [0, Fraction(-1, 4)]])

# restrict to the quadratic form zeta_8^{3(g1^2 - g2^2)} at c = 1
pair = [
    (a, c, cp)
    for a, c, cp in feasible_pairs(spec, bichar)
    if a.phase((1, 0)) == Fraction(3, 4) and a.phase((0, 1)) == Fraction(5, 4) and cp == 0
][0]
solutions = solve_b(spec, bichar, pair[0], pair[1], SolverOptions(multistart_count=1024), c_phase=pair[2])
print(f"{len(solutions)} b-solutions [{time.time()-t0:.0f}s]")

data = solutions[0]
triples, report = solve_triples_report(data)
print(f"{report['count']} triples (expected {report['expected']}) [{time.time()-t0:.0f}s]")

center = build_center(data, triples)
print("center rank:", center.rank, "; modular:", verify_modular(center).passed)
print("global dim:", global_dim_exact(center), "= (160+64 sqrt5)^2")
print("pointed T snapshot:", np.round(pointed_part(center).T[:4], 6))

H = [s for s in find_tannakian_subgroups(center) if s["group_type"] == (2, 4)][0]
print("Tannakian Rep(Z/2 x Z/4) on invertibles:", H["labels"])
print("centralizer rank:", len(centralizer(center, H["labels"])))

cond = condense(center, H["labels"], rng_seed=5)
print("condensed rank:", cond.condensed.rank, "; ambiguous:", cond.ambiguous)

match = compare_modular_data(cond.condensed, rank10_reference(), tol=1e-6)
print("rank-10 match:", match.matched, "; max deviation:", match.max_deviation)

types = candidate_decompositions(cond.condensed)
print("t-spectrum candidates:", [t.name() for t in types])
print("connected shortlist:", [t.name() for t in shortlist(types)])
for t in shortlist(types):
    out = verify_decomposition(cond.condensed, t)
    verdict = "ACCEPTED" if out and out[1] <= 1e-8 else "rejected"
    print(f"  {t.name()}: {verdict}")
print(f"total {time.time()-t0:.0f}s")
