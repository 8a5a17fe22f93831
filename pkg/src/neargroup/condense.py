"""Condensation of a verified modular datum by a Tannakian subgroup of
invertibles, and factorization off pointed modular subcategories.

Free orbits keep their parent S-entries; an orbit fixed by a subgroup of
order s splits into s simples of dimension dim/s.  Entries between split
parts are determined only up to a finite ambiguity by (S, T); they are
found by a constraint solver over the split-difference matrix Delta:

  * row sums: the parts of (V, V') sum to the parent entry,
  * equal free-side entries: S'[F(X), (V)_i] = S[X, V]/s,
  * Delta conj(Delta) = dim' * I  (unitarity of S' restricted to parts),
  * Delta T_f Delta = sqrt(dim') T_f^-1 Delta T_f^-1  (defect sector),
  * (S'T')^3 = p+' S'^2 and S'^4 = dim'^2  on the full candidate,
  * covariance S'[gX, Y] = S'[g, Y] S'[X, Y]/d_Y under condensed
    invertibles, which collapses Delta onto family representatives.

Solutions from seeded multistarts are deduplicated modulo the split-part
relabelling signs, then filtered by Verlinde integrality, balancing and
Galois closure; every survivor is reported.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .center import ModularData
from .exact import exactify
from .mtc import (
    FusionError,
    balancing_check,
    centralizer,
    invertible_labels,
    verify_modular,
    verlinde_fusion,
)
from .numerics import lm_minimize


def invertible_action(md: ModularData, fusion: np.ndarray, g: int, X: int) -> int:
    """The unique Y with N[g][X][Y] = 1, for invertible g."""
    row = fusion[g, X]
    ys = np.flatnonzero(row)
    if len(ys) != 1 or row[ys[0]] != 1:
        raise ValueError(f"fusion with label {g} is not a permutation at {X}")
    return int(ys[0])


def invertible_permutation(md: ModularData, g: int, tol: float = 1e-8) -> np.ndarray:
    """Fusion action of invertible g on all labels, from S-row characters.

    Avoids the full fusion tensor: g x X = Y is the unique Y with
    S[Y, :] = S[g, :] * S[X, :] / S[0, :].
    """
    S = md.S
    ratio = S[g] / S[0]
    target = ratio[None, :] * S
    perm = np.empty(md.rank, dtype=int)
    for X in range(md.rank):
        dist = np.abs(S - target[X]).max(axis=1)
        Y = int(np.argmin(dist))
        if dist[Y] > tol * max(1.0, float(np.abs(S[X]).max())):
            raise ValueError(f"no label matches {g} x {X}")
        perm[X] = Y
    if sorted(perm.tolist()) != list(range(md.rank)):
        raise ValueError(f"action of {g} is not a permutation")
    return perm


@dataclass
class Orbit:
    rep: int
    members: list[int]
    stabilizer_order: int

    @property
    def split_count(self) -> int:
        return self.stabilizer_order


@dataclass
class CondensationResult:
    parent: ModularData
    subgroup: list[int]
    group_type: tuple
    orbits: list[Orbit]
    condensed: ModularData
    provenance: list[tuple]  # per condensed label: (parent rep, split index)
    survivors: list[ModularData] = field(default_factory=list)
    ambiguous: bool = False


def subgroup_permutations(md: ModularData, H: list[int]) -> dict[int, np.ndarray]:
    """Fusion permutations of every element of the subgroup H."""
    perms = {g: invertible_permutation(md, g) for g in H}
    if 0 not in perms:
        perms[0] = np.arange(md.rank)
    return perms


def orbit_decomposition(md: ModularData, H: list[int], centr: list[int]) -> list[Orbit]:
    """H-orbits on the centralizer, each with stabilizer order (= split count)."""
    perms = subgroup_permutations(md, H)
    seen = set()
    out = []
    cset = set(centr)
    for V in centr:
        if V in seen:
            continue
        members = sorted({int(p[V]) for p in perms.values()})
        if any(m not in cset for m in members):
            raise ValueError("H-orbit leaves the centralizer")
        seen.update(members)
        stab = len(H) // len(members)
        out.append(Orbit(rep=V, members=members, stabilizer_order=stab))
    return out


def is_tannakian(md: ModularData, H: list[int], tol: float = 1e-8) -> bool:
    return all(abs(md.T[g] - 1) <= tol for g in H) and all(
        abs(md.S[g, h] - 1) <= tol for g in H for h in H
    )


def condense(
    md: ModularData,
    H: list[int],
    fusion: np.ndarray | None = None,
    rng_seed: int = 0,
    n_starts: int = 60,
    tol: float = 1e-8,
) -> CondensationResult:
    """Condense by the Tannakian subgroup H of invertibles.

    Returns the unique surviving condensed datum when the constraint
    pipeline determines it; when several inequivalent candidates pass all
    filters the result is flagged ambiguous and all are attached.
    """
    if not is_tannakian(md, H, tol):
        raise ValueError("subgroup is not Tannakian (twists or mutual braiding nontrivial)")
    S, T = md.S, md.T
    dims = md.dims
    Dpar = md.global_dim
    Dc = Dpar / len(H) ** 2

    centr = centralizer(md, H, tol)
    orbits = orbit_decomposition(md, H, centr)
    free = [o for o in orbits if o.stabilizer_order == 1]
    split = [o for o in orbits if o.stabilizer_order > 1]
    if any(o.stabilizer_order > 2 for o in split):
        raise NotImplementedError("split multiplicity above 2 is not supported")

    # unit first among the free orbits
    free.sort(key=lambda o: (0 if 0 in o.members else 1, o.rep))
    nfree, nsplit = len(free), len(split)
    rank_c = nfree + 2 * nsplit

    labels = [("F", md.labels[o.rep]) for o in free] + [
        (("P", md.labels[o.rep], i)) for o in split for i in (1, 2)
    ]
    provenance = [(o.rep, 0) for o in free] + [(o.rep, i) for o in split for i in (1, 2)]
    cdims = np.array(
        [dims[o.rep] for o in free] + [dims[o.rep] / 2 for o in split for _ in (1, 2)]
    )
    cT = np.array([T[o.rep] for o in free] + [T[o.rep] for o in split for _ in (1, 2)])
    if abs(cdims @ cdims - Dc) > 1e-6 * Dpar:
        raise ValueError("condensed global dimension mismatch")
    pplus = complex((cdims**2 * cT).sum())

    # known entries
    Sc = np.zeros((rank_c, rank_c), dtype=complex)
    for a, oa in enumerate(free):
        for b, ob in enumerate(free):
            Sc[a, b] = S[oa.rep, ob.rep]
        for k, ok in enumerate(split):
            val = S[oa.rep, ok.rep] / 2
            Sc[a, nfree + 2 * k] = Sc[a, nfree + 2 * k + 1] = val
            Sc[nfree + 2 * k, a] = Sc[nfree + 2 * k + 1, a] = val
    Pmat = np.array([[S[ok.rep, ol.rep] / 2 for ol in split] for ok in split], dtype=complex)
    tf = np.array([T[o.rep] for o in split])

    if nsplit == 0:
        cond = _package(md, labels, Sc, cT, H, orbits, provenance)
        return cond

    deltas = _solve_split(md, H, free, split, Sc, Pmat, tf, cdims, cT, Dc, pplus, rng_seed, n_starts)

    survivors = []
    for dm in deltas:
        Sf = _assemble(Sc, Pmat, dm, nfree, nsplit)
        cand = ModularData(list(labels), Sf, cT.copy())
        cand.snap_T()
        rep = verify_modular(cand, tol=1e-7)
        if not rep.passed:
            continue
        try:
            N = verlinde_fusion(cand, tol=1e-6)
        except FusionError:
            continue
        if balancing_check(cand, N) > 1e-6:
            continue
        if not _galois_closed(cand):
            continue
        survivors.append(cand)
    survivors = _dedupe_candidates(survivors, nfree, nsplit)
    if not survivors:
        raise ValueError("no condensed S-matrix candidate passed the filters")
    survivors.sort(key=lambda c: tuple(np.round(c.S.ravel().view(float), 6)))
    result = CondensationResult(
        parent=md,
        subgroup=list(H),
        group_type=_abstract_type(md, H),
        orbits=orbits,
        condensed=survivors[0],
        provenance=provenance,
        survivors=survivors,
        ambiguous=len(survivors) > 1,
    )
    return result


def _package(md, labels, Sc, cT, H, orbits, provenance):
    cand = ModularData(list(labels), Sc, cT.copy())
    cand.snap_T()
    rep = verify_modular(cand, tol=1e-7)
    if not rep.passed:
        raise ValueError(f"condensed datum fails verification: {rep.failures}")
    return CondensationResult(
        parent=md,
        subgroup=list(H),
        group_type=_abstract_type(md, H),
        orbits=orbits,
        condensed=cand,
        provenance=provenance,
        survivors=[cand],
        ambiguous=False,
    )


def _abstract_type(md, H):
    from .mtc import find_tannakian_subgroups

    for rec in find_tannakian_subgroups(md):
        if rec["labels"] == sorted(H):
            return rec["group_type"]
    return None


def _assemble(Sc, Pmat, delta, nfree, nsplit):
    Sf = Sc.copy()
    al = (Pmat + delta) / 2
    be = (Pmat - delta) / 2
    block = np.empty((2 * nsplit, 2 * nsplit), dtype=complex)
    block[0::2, 0::2] = al
    block[1::2, 1::2] = al
    block[0::2, 1::2] = be
    block[1::2, 0::2] = be
    Sf[nfree:, nfree:] = block
    return Sf


def _solve_split(md, H, free, split, Sc, Pmat, tf, cdims, cT, Dc, pplus, rng_seed, n_starts):
    """Multistart solve for the split-difference matrix Delta."""
    S, dims = md.S, md.dims
    nfree, nsplit = len(free), len(split)
    rank_c = nfree + 2 * nsplit
    sqD = math.sqrt(Dc)

    # families of split parents under the condensed invertibles
    cinv = [i for i, o in enumerate(free) if abs(dims[o.rep] - 1) < 1e-9]
    split_rep = [o.rep for o in split]
    gperm = {i: invertible_permutation(md, free[i].rep) for i in cinv}

    def to_split_index(parent_label):
        for k, o in enumerate(split):
            if parent_label == o.rep or parent_label in o.members:
                return k
        raise ValueError("invertible action leaves the split set")

    fam_of = {}
    g_of = {}
    fams = []
    for k in range(nsplit):
        if k in fam_of:
            continue
        A = len(fams)
        members = {}
        for i in cinv:
            m = to_split_index(int(gperm[i][split_rep[k]]))
            if m not in members:
                members[m] = i
        # the reduction needs a free transitive action on the family
        if len(members) != len(cinv):
            members = {k: cinv[0]}  # fall back to a singleton family
        fams.append((k, members))
        for m, i in members.items():
            fam_of[m] = A
            g_of[m] = i
    nfam = len(fams)

    def chi(i, l):
        return S[free[i].rep, split_rep[l]] / dims[split_rep[l]]

    PHI = np.ones((nsplit, nsplit), dtype=complex)
    for m in range(nsplit):
        for mp in range(nsplit):
            gi, gj = g_of[m], g_of[mp]
            astar = fams[fam_of[m]][0]
            bstar = fams[fam_of[mp]][0]
            PHI[m, mp] = S[free[gi].rep, free[gj].rep] * chi(gi, bstar) * chi(gj, astar)

    futs = np.triu_indices(nfam)
    nfut = len(futs[0])
    FA = np.array([fam_of[m] for m in range(nsplit)])

    def expand(dstar):
        return PHI * dstar[np.ix_(FA, FA)]

    def unpack(x):
        dm = np.zeros((nfam, nfam), dtype=complex)
        vals = x[:nfut] + 1j * x[nfut:]
        dm[futs] = vals
        dm[(futs[1], futs[0])] = vals
        return dm

    def resid(x):
        delta = expand(unpack(x))
        s = delta / sqD
        U = s @ s.conj() - np.eye(nsplit)
        W = s @ (tf[:, None] * s) - (1 / tf)[:, None] * s * (1 / tf)[None, :]
        Sf = _assemble(Sc, Pmat, delta, nfree, nsplit) / sqD
        M = Sf * cT[None, :]
        S2 = Sf @ Sf
        an = M @ M @ M - (pplus / sqD) * S2
        s4 = S2 @ S2 - np.eye(rank_c)
        v = np.concatenate([U.ravel(), W.ravel(), an.ravel(), s4.ravel()])
        return np.concatenate([v.real, v.imag])

    rng = np.random.default_rng(rng_seed)
    sols = []
    for _ in range(n_starts):
        x0 = rng.normal(size=2 * nfut) * sqD / math.sqrt(nsplit)
        x, res = lm_minimize(resid, x0, max_nfev=40000)
        if res < 1e-7:
            dm = expand(unpack(x))
            if not any(np.abs(dm - o).max() < 1e-5 for o in sols):
                sols.append(dm)
    return sols


def _dedupe_candidates(cands: list[ModularData], nfree: int, nsplit: int) -> list[ModularData]:
    """Quotient by split-part relabelling (simultaneous row/col swaps)."""
    out = []
    for cand in cands:
        dup = False
        for kept in out:
            if _same_up_to_part_swaps(kept, cand, nfree, nsplit):
                dup = True
                break
        if not dup:
            out.append(cand)
    return out


def _same_up_to_part_swaps(a: ModularData, b: ModularData, nfree, nsplit, tol=1e-6):
    for bits in itertools.product((0, 1), repeat=nsplit):
        perm = list(range(nfree))
        for k, s in enumerate(bits):
            i, j = nfree + 2 * k, nfree + 2 * k + 1
            perm += [j, i] if s else [i, j]
        if np.abs(a.S[np.ix_(perm, perm)] - b.S).max() <= tol:
            return True
    return False


def _galois_closed(cand: ModularData, max_conductor: int = 128) -> bool:
    """Entries must lie in Q(zeta_N) with N the T-order."""
    N = cand.t_order()
    if N is None or N > max_conductor:
        return False
    vals = {(round(v.real, 9), round(v.imag, 9)) for v in cand.S.ravel()}
    for re, im in vals:
        if exactify(complex(re, im), N, tol=1e-6) is None:
            return False
    return True


def factor_pointed(md: ModularData, tol: float = 1e-6):
    """Split off the pointed part when it is itself modular.

    Returns (pointed, complement, assignment) where assignment[i] = (a, x)
    writes label i as invertible a tensor complement-label x; None when the
    pointed part is degenerate.
    """
    inv = invertible_labels(md)
    k = len(inv)
    Spt = md.S[np.ix_(inv, inv)]
    # nondegenerate pointed part has |det| = k^(k/2)
    if abs(np.linalg.det(Spt)) < 0.5 * k ** (k / 2.0):
        return None
    comp = centralizer(md, inv, tol)
    if len(comp) * len(inv) != md.rank:
        return None
    pointed = md.permuted(inv)
    complement = md.permuted(comp)
    # assignment via the invertible action
    perms = {g: invertible_permutation(md, g) for g in inv}
    assignment = {}
    for gi, g in enumerate(inv):
        for xi, x in enumerate(comp):
            assignment[int(perms[g][x])] = (gi, xi)
    if len(assignment) != md.rank:
        return None
    # verify the outer-product factorization
    for i in range(md.rank):
        a, x = assignment[i]
        for j in range(md.rank):
            b, y = assignment[j]
            want = pointed.S[a, b] * complement.S[x, y]
            if abs(md.S[i, j] - want) > tol * max(1.0, abs(want)):
                return None
    return pointed, complement, assignment
