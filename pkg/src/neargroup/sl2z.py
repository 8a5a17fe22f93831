"""The six congruence SL(2,Z) irreducibles used for rank-10 reconstruction,
decomposition-type search by t-spectrum, and verification of a claimed
decomposition by solving for a real orthogonal intertwiner.

Catalog entries keep the printed generator images together with their
multiplier lambda in (st)^3 = lambda s^2; rho3/rho4/rho5 as printed carry
lambda = -1, and the linear lifts (s negated, resp. the unique linear
1-dimensionals with the same t) are what decompositions of anomaly-free
data are matched against.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from collections import Counter

import numpy as np

from .center import ModularData
from .numerics import lm_minimize


@dataclass
class RepSpec:
    name: str
    level: int
    dim: int
    s: np.ndarray  # printed form
    t: np.ndarray  # diagonal entries
    multiplier: complex  # (st)^3 = multiplier * s^2 for the printed form

    @property
    def s_linear(self) -> np.ndarray:
        # multiplying s by -1 flips the multiplier: ((-s)t)^3 = -(st)^3,
        # (-s)^2 = s^2
        return self.s if self.multiplier == 1 else -self.s

    def t_multiset(self) -> Counter:
        return Counter((round(z.real, 9), round(z.imag, 9)) for z in self.t)


def _catalog() -> list[RepSpec]:
    z4 = 1j
    z5 = cmath.exp(2j * math.pi / 5)
    s1 = (-1 / math.sqrt(5)) * np.array(
        [
            [1, math.sqrt(2), math.sqrt(2)],
            [math.sqrt(2), 2 * math.cos(2 * math.pi / 5), 2 * math.cos(6 * math.pi / 5)],
            [math.sqrt(2), 2 * math.cos(6 * math.pi / 5), 2 * math.cos(2 * math.pi / 5)],
        ]
    )
    t1 = np.array([1, z5**2, z5**3])
    # third row of the printed matrix fails unitarity; (sqrt2, sqrt2, 0)/2
    # is the orthogonal repair and satisfies (st)^3 = s^2 exactly
    s2 = 0.5 * np.array(
        [[-1, 1, math.sqrt(2)], [1, -1, math.sqrt(2)], [math.sqrt(2), math.sqrt(2), 0]]
    )
    t2 = np.array([z4, z4**3, 1])
    s3 = (z4 / 2) * np.array([[1, math.sqrt(3)], [math.sqrt(3), -1]])
    t3 = np.array([z4, z4**3])
    return [
        RepSpec("rho0", 1, 1, np.array([[1.0]]), np.array([1.0 + 0j]), 1),
        RepSpec("rho1", 5, 3, s1.astype(complex), t1, 1),
        RepSpec("rho2", 4, 3, s2.astype(complex), t2, 1),
        RepSpec("rho3", 4, 2, s3.astype(complex), t3, -1),
        RepSpec("rho4", 4, 1, np.array([[z4**3]]), np.array([z4]), -1),
        RepSpec("rho5", 4, 1, np.array([[z4]]), np.array([z4**3]), -1),
    ]


CATALOG = _catalog()
CATALOG_BY_NAME = {r.name: r for r in CATALOG}


def projective_rep(md: ModularData):
    """(s, t) with s = S/sqrt(dim) (unitary) and t = T."""
    s = md.normalized_s()
    dev = float(np.abs(s @ s.conj().T - np.eye(md.rank)).max())
    if dev > 1e-8:
        raise ValueError(f"normalized S is not unitary (deviation {dev:.2e})")
    return s, md.T.copy()


@dataclass
class DecompositionType:
    counts: dict[str, int]

    def name(self) -> str:
        parts = []
        for nm in ("rho1", "rho2", "rho3", "rho4", "rho5", "rho0"):
            c = self.counts.get(nm, 0)
            if c:
                parts.append(nm if c == 1 else f"{c}*{nm}")
        return " + ".join(parts)

    def summands(self) -> list[RepSpec]:
        out = []
        for nm, c in sorted(self.counts.items()):
            out += [CATALOG_BY_NAME[nm]] * c
        return out

    def dim(self) -> int:
        return sum(CATALOG_BY_NAME[nm].dim * c for nm, c in self.counts.items())

    def t_spectra_connected(self) -> bool:
        """False when the summands split into two groups with disjoint
        t-spectra (such decompositions cannot carry modular data)."""
        reps = self.summands()
        n = len(reps)
        specs = [set(r.t_multiset()) for r in reps]
        seen = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for j in range(n):
                if j not in seen and specs[i] & specs[j]:
                    seen.add(j)
                    frontier.append(j)
        return len(seen) == n


def candidate_decompositions(md: ModularData, catalog=None) -> list[DecompositionType]:
    """All catalog multisets whose t-eigenvalue multiset equals the data's.

    Raises when the T entries are not covered by the catalog levels.
    """
    catalog = catalog or CATALOG
    target = Counter((round(complex(z).real, 6), round(complex(z).imag, 6)) for z in md.T)
    covered = set()
    for r in catalog:
        covered |= {(round(z.real, 6), round(z.imag, 6)) for z in r.t}
    if not set(target) <= covered:
        raise ValueError(f"T spectrum {sorted(set(target) - covered)} outside catalog coverage")

    out = []

    def rec(i, remaining, counts):
        if not remaining:
            out.append(DecompositionType({k: v for k, v in counts.items() if v}))
            return
        if i == len(catalog):
            return
        r = catalog[i]
        rm = Counter((round(z.real, 6), round(z.imag, 6)) for z in r.t)
        max_mult = min(remaining.get(k, 0) // v for k, v in rm.items())
        for c in range(max_mult, -1, -1):
            rem2 = remaining.copy()
            for k, v in rm.items():
                rem2[k] -= v * c
                if rem2[k] == 0:
                    del rem2[k]
            counts[r.name] = c
            rec(i + 1, rem2, counts)
        counts.pop(r.name, None)

    rec(0, target, {})
    out = [t for t in out if t.dim() == md.rank]
    out.sort(key=lambda t: t.name())
    return out


def shortlist(types: list[DecompositionType]) -> list[DecompositionType]:
    """Candidates whose summand t-spectra are connected."""
    return [t for t in types if t.t_spectra_connected()]


def character_mismatch(md: ModularData, dtype: DecompositionType, max_len: int = 6) -> float:
    """Max trace deviation over all words in s, t up to the given length.

    A nonzero value certifies the rejection of the decomposition type; the
    data's s is normalized by its multiplier so linear lifts apply.
    """
    s, t = projective_rep(md)
    lam = complex((md.dims**2 * md.T).sum() / math.sqrt(md.global_dim))
    s = s / lam
    reps = dtype.summands()
    mats = [(s, np.diag(t))] + [(r.s_linear, np.diag(r.t)) for r in reps]
    worst = 0.0
    for length in range(1, max_len + 1):
        for word in itertools.product((0, 1), repeat=length):
            traces = []
            for sm, tm in mats:
                M = np.eye(len(sm), dtype=complex)
                for g in word:
                    M = M @ (sm if g == 0 else tm)
                traces.append(np.trace(M))
            got = traces[0]
            want = sum(traces[1:])
            worst = max(worst, abs(got - want))
    return worst


def verify_decomposition(
    md: ModularData,
    dtype: DecompositionType,
    n_starts: int = 6,
    rng_seed: int = 0,
    tol: float = 1e-8,
):
    """Search for a real orthogonal U, block-diagonal over t-eigenspaces,
    with s_data = U s_type U^T; returns (U, residual) or None.

    The data's s is first divided by its multiplier so that both sides
    satisfy (st)^3 = s^2; a character mismatch certifies rejection before
    any search.
    """
    if dtype.dim() != md.rank:
        return None
    if character_mismatch(md, dtype) > 1e-6:
        return None
    s, _ = projective_rep(md)
    lam = complex((md.dims**2 * md.T).sum() / math.sqrt(md.global_dim))
    s = s / lam
    reps = dtype.summands()

    # slot assignment: group data indices by t-eigenvalue, fill with the
    # summands' eigenvectors in order
    def key(z):
        return (round(complex(z).real, 6), round(complex(z).imag, 6))

    slots = {}
    for i, z in enumerate(md.T):
        slots.setdefault(key(z), []).append(i)
    avail = {k: list(v) for k, v in slots.items()}
    stilde = np.zeros((md.rank, md.rank), dtype=complex)
    for r in reps:
        pos = []
        for z in r.t:
            lst = avail.get(key(z))
            if not lst:
                return None
            pos.append(lst.pop(0))
        sl = r.s_linear
        for a, pa in enumerate(pos):
            for b, pb in enumerate(pos):
                stilde[pa, pb] += sl[a, b]

    blocks = [v for v in slots.values()]
    skew_sizes = [len(v) * (len(v) - 1) // 2 for v in blocks]
    total_params = sum(skew_sizes)

    def build_U(x, signs):
        U = np.zeros((md.rank, md.rank))
        off = 0
        for blk, sz, sgn in zip(blocks, skew_sizes, signs):
            k = len(blk)
            K = np.zeros((k, k))
            iu = np.triu_indices(k, 1)
            K[iu] = x[off : off + sz]
            K -= K.T
            off += sz
            import scipy.linalg

            Ub = scipy.linalg.expm(K)
            if sgn:
                Ub = Ub @ np.diag([-1.0] + [1.0] * (k - 1))
            for a, pa in enumerate(blk):
                for b, pb in enumerate(blk):
                    U[pa, pb] = Ub[a, b]
        return U

    rng = np.random.default_rng(rng_seed)
    best = None
    for signs in itertools.product((0, 1), repeat=len(blocks)):

        def resid(x, signs=signs):
            U = build_U(x, signs)
            M = s - U @ stilde @ U.T
            return np.concatenate([M.real.ravel(), M.imag.ravel()])

        if total_params == 0:
            res = float(np.abs(resid(np.zeros(0))).max())
            if best is None or res < best[1]:
                best = (build_U(np.zeros(0), signs), res)
            if res <= tol:
                return best
            continue
        for _ in range(n_starts):
            x0 = rng.normal(size=total_params)
            x, res = lm_minimize(resid, x0, max_nfev=4000)
            if best is None or res < best[1]:
                best = (build_U(x, signs), res)
            if res <= tol:
                return best
    return None
