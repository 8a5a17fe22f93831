"""Solve the near-group equations for the data (a, b, c) of type G+n.

For a finite abelian group G of order n with non-degenerate symmetric
bicharacter, the defining system is

    a(0)=1,  a(x)=a(-x),  a(x+y)<x,y> = a(x)a(y),  sum_x a(x) = sqrt(n) c^-3
    b(0) = -1/d,  sum_y conj<x,y> b(y) = sqrt(n) c conj(b(x)),
    a(x) b(-x) = conj(b(x))
    sum_x b(x+y) conj(b(x)) = delta_{y,0} - 1/d
    sum_x b(x+y) b(x+z) conj(b(x)) = conj<y,z> b(y) b(z) - c/(d sqrt(n))

with d = (n + sqrt(n^2+4n))/2.  The unknown is the phase vector of b on
representatives of the {x,-x} orbits; everything else is exact data.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import QuadIrr, snap_phase
from .groups import Bicharacter, GroupSpec, QuadraticForm, enumerate_elements, gauss_sum
from .numerics import angle_dist, lm_minimize, wrap_angles


def dim_d(n: int) -> QuadIrr:
    """d = (n + sqrt(n^2+4n))/2, exactly."""
    return QuadIrr.make(Fraction(n, 2), Fraction(1, 2), n * n + 4 * n)


@dataclass
class SolverOptions:
    residual_tol: float = 1e-10
    dedupe_tol: float = 1e-4
    multistart_count: int | None = None  # default 64*n
    rng_seed: int = 0
    max_iterations: int = 2500

    def starts_for(self, n: int) -> int:
        return self.multistart_count if self.multistart_count is not None else 64 * n


@dataclass
class NearGroupData:
    """A solved tuple (<.,.>, a, b, c, d) for a near-group category G+n."""

    spec: GroupSpec
    bichar: Bicharacter
    a: QuadraticForm
    c: complex
    b: np.ndarray  # over enumerate_elements order
    d: QuadIrr
    c_phase: Fraction | None = None  # exact phase of c when snapped, c = exp(i*pi*c_phase)
    elements: list = field(default_factory=list)

    def __post_init__(self):
        if not self.elements:
            self.elements = enumerate_elements(self.spec)
        self.index = {x: i for i, x in enumerate(self.elements)}

    @property
    def n(self) -> int:
        return self.spec.order

    def b_phases(self) -> dict:
        """Phase of b(x) for x != 0 (b = exp(i j)/sqrt(n))."""
        return {
            x: float(cmath.phase(self.b[i]))
            for i, x in enumerate(self.elements)
            if x != self.spec.zero
        }


def _tables(spec: GroupSpec, bichar: Bicharacter, a: QuadraticForm):
    els = enumerate_elements(spec)
    idx = {x: i for i, x in enumerate(els)}
    P = bichar.matrix()
    av = a.table()
    add = np.array([[idx[spec.add(x, y)] for y in els] for x in els])
    neg = np.array([idx[spec.neg(x)] for x in els])
    return els, idx, P, av, add, neg


def feasible_pairs(
    spec: GroupSpec, bichar: Bicharacter
) -> list[tuple[QuadraticForm, complex, Fraction]]:
    """(a, c) candidates: forms with |gauss sum| = sqrt(n), c among the cube
    roots of sqrt(n)/gauss_sum, as (form, c, exact phase of c)."""
    n = spec.order
    out = []
    for a in quadratic_forms_for_cached(bichar):
        g = gauss_sum(a)
        if abs(abs(g) - math.sqrt(n)) > 1e-9:
            continue
        # c^-3 = g/sqrt(n) is a root of unity with exact rational phase
        r = snap_phase(g / math.sqrt(n), max_den=4 * spec.exponent * 3)
        if r is None:
            raise RuntimeError("gauss sum phase did not snap to a root of unity")
        for k in range(3):
            c_phase = (Fraction(-r, 3) + Fraction(2 * k, 3)) % 2
            out.append((a, cmath.exp(1j * math.pi * float(c_phase)), c_phase))
    return out


_FORMS_CACHE: dict = {}


def quadratic_forms_for_cached(bichar: Bicharacter):
    from .groups import quadratic_forms_for

    key = (bichar.spec.factors, tuple(tuple(row) for row in bichar.exponents))
    if key not in _FORMS_CACHE:
        _FORMS_CACHE[key] = quadratic_forms_for(bichar)
    return _FORMS_CACHE[key]


class _BSystem:
    """Residual builder with the b(-x) relation eliminated structurally."""

    def __init__(self, spec, bichar, a, c):
        self.spec = spec
        self.c = c
        self.n = spec.order
        self.sqn = math.sqrt(self.n)
        self.d = float(dim_d(self.n))
        els, idx, P, av, add, neg = _tables(spec, bichar, a)
        self.els, self.idx, self.P, self.av, self.add, self.neg = els, idx, P, av, add, neg
        self.free = []  # one per {x,-x} orbit, x != -x
        self.torsion = []  # x = -x, x != 0
        seen = {spec.zero}
        for x in els:
            if x in seen:
                continue
            if spec.neg(x) == x:
                self.torsion.append(x)
            else:
                self.free.append(x)
                seen.add(spec.neg(x))
            seen.add(x)
        # 2-torsion branch base phase: b(x) = conj(a(x) b(x)) forces
        # exp(2 i j) = conj(a(x)), two branches j0, j0 + pi
        self.torsion_base = [-cmath.phase(self.av[idx[x]]) / 2 for x in self.torsion]

    def build_b(self, phases, branches) -> np.ndarray:
        b = np.zeros(self.n, dtype=complex)
        b[0] = -1 / self.d
        for ph, x in zip(phases, self.free):
            i = self.idx[x]
            b[i] = cmath.exp(1j * ph) / self.sqn
            b[self.neg[i]] = np.conj(self.av[i] * b[i])
        for br, base, x in zip(branches, self.torsion_base, self.torsion):
            b[self.idx[x]] = cmath.exp(1j * (base + br * math.pi)) / self.sqn
        return b

    def residual_b(self, b: np.ndarray) -> np.ndarray:
        n, d, c, sqn = self.n, self.d, self.c, self.sqn
        bs = b[self.add]  # bs[y, x] = b(x+y)
        r1 = self.P.conj() @ b - sqn * c * np.conj(b)
        tgt = -1 / d + (np.arange(n) == 0)
        r2 = bs @ np.conj(b) - tgt
        B = np.einsum("yx,zx,x->yz", bs, bs, np.conj(b))
        R = np.conj(self.P) * np.outer(b, b) - c / (d * sqn)
        v = np.concatenate([r1, r2, (B - R).ravel()])
        return np.concatenate([v.real, v.imag])

    def __call__(self, phases, branches):
        return self.residual_b(self.build_b(phases, branches))


def solve_b(
    spec: GroupSpec,
    bichar: Bicharacter,
    a: QuadraticForm,
    c: complex,
    opts: SolverOptions | None = None,
    c_phase: Fraction | None = None,
) -> list[NearGroupData]:
    """All distinct b-solutions found by seeded multistart damped least squares.

    Returns an empty list when no start converges below ``residual_tol``;
    output order is canonical (lexicographic in the wrapped phase vector).
    """
    opts = opts or SolverOptions()
    sys = _BSystem(spec, bichar, a, c)
    n = spec.order
    rng = np.random.default_rng(opts.rng_seed)
    nb = len(sys.torsion)
    found: list[tuple[np.ndarray, tuple]] = []
    if not sys.free:
        # only discrete branch choices remain; enumerate them all
        for bits in itertools.product((0, 1), repeat=nb):
            resid = float(np.abs(sys(np.zeros(0), bits)).max())
            if resid <= opts.residual_tol:
                found.append((np.zeros(0), bits))
    else:
        n_starts = opts.starts_for(n)
        for start in range(n_starts):
            # cycle branch patterns so every combination gets starts
            branches = tuple((start >> i) & 1 for i in range(nb))
            x0 = rng.uniform(-math.pi, math.pi, size=len(sys.free))
            x, resid = lm_minimize(lambda t: sys(t, branches), x0, max_nfev=opts.max_iterations)
            if resid <= opts.residual_tol:
                x = wrap_angles(x)
                if not any(
                    br == branches and angle_dist(x, xf) <= opts.dedupe_tol for xf, br in found
                ):
                    found.append((x, branches))
    out = []
    for x, branches in sorted(found, key=lambda t: (tuple(np.round(t[0], 9)), t[1])):
        b = sys.build_b(x, branches)
        out.append(
            NearGroupData(spec, bichar, a, c, b, dim_d(n), c_phase=c_phase, elements=sys.els)
        )
    return out


def residual(data: NearGroupData) -> float:
    """Max deviation over every instance of every defining equation."""
    sys = _BSystem(data.spec, data.bichar, data.a, data.c)
    r = float(np.abs(sys.residual_b(data.b)).max())
    # the eliminated relations, re-checked directly
    n = data.n
    idx = data.index
    b = data.b
    r = max(r, abs(b[0] + 1 / float(data.d)))
    for i, x in enumerate(data.elements):
        r = max(r, abs(data.a.eval(x) * b[idx[data.spec.neg(x)]] - np.conj(b[i])))
    # sum_x a(x) = sqrt(n) c^-3
    r = max(r, abs(data.a.table().sum() - math.sqrt(n) * data.c ** (-3)))
    return r


def _automorphisms(spec: GroupSpec) -> list[dict]:
    """All automorphisms of G as element maps (matrix action on generators)."""
    els = enumerate_elements(spec)
    k = len(spec.factors)
    out = []

    def order(x):
        o = 1
        y = x
        while y != spec.zero:
            y = spec.add(y, x)
            o += 1
        return o

    orders = {x: order(x) for x in els}
    cand = [[x for x in els if spec.factors[i] % orders[x] == 0] for i in range(k)]
    # images of the generators with dividing order; bijectivity filters the rest
    for images in itertools.product(*cand):
        psi = {}
        for x in els:
            y = spec.zero
            for i in range(k):
                for _ in range(x[i]):
                    y = spec.add(y, images[i])
            psi[x] = y
        if len(set(psi.values())) == len(els):
            out.append(psi)
    return out


def dedupe_up_to_aut(solutions: list[NearGroupData], tol: float = 1e-4) -> list[dict]:
    """Group solutions by the equivalence of the existence theorem.

    Two tuples are equivalent when some automorphism psi preserves the
    pairing and transports (a, b) with equal c.  Returns one record per
    class: representative index, members and a witness map per member.
    """
    if not solutions:
        return []
    spec = solutions[0].spec
    els = enumerate_elements(spec)
    auts = _automorphisms(spec)
    pair_auts = []
    for psi in auts:
        b1 = solutions[0].bichar
        if all(b1.phase(x, y) == b1.phase(psi[x], psi[y]) for x in els for y in els):
            pair_auts.append(psi)

    def equivalent(s1: NearGroupData, s2: NearGroupData):
        if abs(s1.c - s2.c) > tol:
            return None
        for psi in pair_auts:
            if any(s1.a.phase(x) != s2.a.phase(psi[x]) for x in els):
                continue
            if all(abs(s1.b[s1.index[x]] - s2.b[s2.index[psi[x]]]) <= tol for x in els):
                return psi
        return None

    classes: list[dict] = []
    for i, s in enumerate(solutions):
        placed = False
        for cl in classes:
            w = equivalent(solutions[cl["representative"]], s)
            if w is not None:
                cl["members"].append(i)
                cl["witnesses"][i] = w
                placed = True
                break
        if not placed:
            classes.append({"representative": i, "members": [i], "witnesses": {i: {x: x for x in els}}})
    return classes
