"""
The smallest near-group pipeline: the trivial group.
=====================================================

For G trivial (n = 1) the near-group category is the Fibonacci category:
d = (1 + sqrt(5))/2 and the b-system collapses to b(0) = -1/d with c = 1.
Its Drinfeld center is Fibonacci boxtimes reverse-Fibonacci, a rank-4
modular category.  This script walks the whole chain and finishes with
the SL(2,Z) content of the center.
"""
import numpy as np

from neargroup.groups import Bicharacter, GroupSpec
from neargroup.solver import SolverOptions, feasible_pairs, residual, solve_b
from neargroup.halfbraiding import solve_triples_report
from neargroup.center import build_center
from neargroup.mtc import verify_modular, verlinde_fusion
from neargroup.sl2z import candidate_decompositions, verify_decomposition

spec = GroupSpec.of(1)
bichar = Bicharacter(spec, [[0]])

# Three cube roots of unity are a-priori possible for c, but the Fourier
# constraint pins c = 1: only one solution survives.
solutions = []
for a, c, c_phase in feasible_pairs(spec, bichar):
    solutions += solve_b(spec, bichar, a, c, SolverOptions(), c_phase=c_phase)
print(f"{len(solutions)} solution(s); residual {residual(solutions[0]):.2e}")
data = solutions[0]
print("b(0) =", data.b[0], " (= -1/golden ratio)")

triples, report = solve_triples_report(data)
print(f"{report['count']} half-braiding triples; omegas:",
      np.round([t.omega for t in triples], 6))

center = build_center(data, triples)
print("center rank:", center.rank)
print("dims:", np.round(center.dims, 6))
print("twists:", np.round(center.T, 6))
print("modular:", verify_modular(center).passed)

# fusion: two commuting Fibonacci rings
N = verlinde_fusion(center)
tau_tau = [i for i, d in enumerate(center.dims) if abs(d - center.dims.max()) < 1e-9][0]
print("X x X decomposition row for the largest object:", N[tau_tau, tau_tau])

# the center's SL(2,Z) representation is rho1 + rho0
for dtype in candidate_decompositions(center):
    out = verify_decomposition(center, dtype)
    print(f"decomposition {dtype.name()}:",
          "accepted" if out and out[1] <= 1e-8 else "rejected",
          f"(residual {out[1]:.1e})" if out else "")
