"""Assemble the modular data of the Drinfeld center of a near-group
category G+n from solved data and its half-braiding triples.

The center has rank n(n+3) with simple objects in four families:
invertibles a_g (dim 1), b_h (dim d+1), c_{k,l} = c_{l,k} for k != l
(dim d+2), and d_j (dim d) indexed by triples.  T is diagonal with
entries (<g,g>, <h,h>, <k,l>, omega_j); S is the block matrix whose
explicit entries are reproduced in ``build_center``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import QuadIrr, snap_phase
from .groups import enumerate_elements
from .halfbraiding import HalfBraidingTriple, expected_count
from .solver import NearGroupData


@dataclass
class ModularData:
    """Labelled simple objects with unnormalized S (S[unit][unit] = 1) and
    diagonal T; the universal currency of the toolkit."""

    labels: list
    S: np.ndarray
    T: np.ndarray
    dims_exact: list | None = None  # QuadIrr per label when available
    T_phases: list | None = None  # exact Fraction r with T = exp(i pi r) when snapped
    meta: dict = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def dims(self) -> np.ndarray:
        return self.S[0].real.copy()

    @property
    def global_dim(self) -> float:
        d = self.dims
        return float(d @ d)

    def normalized_s(self) -> np.ndarray:
        return self.S / math.sqrt(self.global_dim)

    def snap_T(self, max_den: int = 240) -> None:
        """Attach exact rational phases to T where they snap."""
        out = []
        for t in self.T:
            out.append(snap_phase(complex(t), max_den=max_den))
        self.T_phases = out if all(p is not None for p in out) else out

    def t_order(self, max_order: int = 10**4) -> int | None:
        """Smallest N with T^N = 1, via snapped phases."""
        if self.T_phases is None:
            self.snap_T()
        N = 1
        for r in self.T_phases:
            if r is None:
                return None
            # exp(i pi r): order is denominator of r/2
            N = math.lcm(N, (Fraction(r) / 2).denominator)
        return N if N <= max_order else None

    def permuted(self, perm) -> "ModularData":
        perm = list(perm)
        S = self.S[np.ix_(perm, perm)]
        T = self.T[perm]
        de = [self.dims_exact[i] for i in perm] if self.dims_exact else None
        tp = [self.T_phases[i] for i in perm] if self.T_phases else None
        return ModularData([self.labels[i] for i in perm], S, T, de, tp, dict(self.meta))


def build_center(data: NearGroupData, triples: list[HalfBraidingTriple]) -> ModularData:
    """Rank-n(n+3) modular data of the center."""
    spec = data.spec
    n = spec.order
    if len(triples) != expected_count(n):
        raise ValueError(f"need {expected_count(n)} triples, got {len(triples)}")
    els = enumerate_elements(spec)
    idx = {x: i for i, x in enumerate(els)}
    d = float(data.d)
    c = data.c
    P = data.bichar.matrix()
    av = data.a.table()

    pairs = []
    for i, k in enumerate(els):
        for l in els[i + 1 :]:
            pairs.append((k, l))
    labels = (
        [("A", g) for g in els]
        + [("B", h) for h in els]
        + [("C", kl) for kl in pairs]
        + [("D", j) for j in range(len(triples))]
    )
    rank = len(labels)

    taus = np.array([idx[t.tau] for t in triples], dtype=int)
    omegas = np.array([t.omega for t in triples])
    xis = np.array([t.xi for t in triples])

    T = np.concatenate(
        [
            np.array([P[i, i] for i in range(n)]),
            np.array([P[i, i] for i in range(n)]),
            np.array([P[idx[k], idx[l]] for k, l in pairs]),
            omegas,
        ]
    )

    S = np.zeros((rank, rank), dtype=complex)
    A = slice(0, n)
    B = slice(n, 2 * n)
    C = slice(2 * n, 2 * n + len(pairs))
    D = slice(2 * n + len(pairs), rank)

    Pm2 = P ** (-2)
    S[A, A] = Pm2
    S[A, B] = (d + 1) * Pm2
    S[B, A] = (d + 1) * Pm2
    S[B, B] = Pm2
    klsum = np.array([idx[spec.add(k, l)] for k, l in pairs], dtype=int)
    S[A, C] = (d + 2) * np.conj(P[:, klsum])
    S[C, A] = S[A, C].T
    S[B, C] = (d + 2) * np.conj(P[:, klsum])
    S[C, B] = S[B, C].T
    S[A, D] = d * P[:, taus]
    S[D, A] = S[A, D].T
    S[B, D] = -d * P[:, taus]
    S[D, B] = S[B, D].T

    karr = np.array([idx[k] for k, l in pairs], dtype=int)
    larr = np.array([idx[l] for k, l in pairs], dtype=int)
    S[C, C] = (d + 2) * (
        np.conj(P[np.ix_(karr, karr)] * P[np.ix_(larr, larr)])
        + np.conj(P[np.ix_(karr, larr)] * P[np.ix_(larr, karr)])
    )
    # C x D block vanishes identically
    S[D, D] = _dd_block(spec, P, av, c, d, taus, omegas, xis, idx, els)

    dims_exact = (
        [QuadIrr.make(1)] * n
        + [data.d + QuadIrr.make(1)] * n
        + [data.d + QuadIrr.make(2)] * len(pairs)
        + [data.d] * len(triples)
    )
    md = ModularData(labels=labels, S=S, T=T, dims_exact=dims_exact, meta={"n": n})
    md.snap_T()
    return md


def _dd_block(spec, P, av, c, d, taus, omegas, xis, idx, els):
    n = len(els)
    nd = len(taus)
    # G1[t] = sum_g <t+g, g>
    G1 = np.array([sum(P[idx[spec.add(els[t], g)], idx[g]] for g in els) for t in range(n)])
    # PG[t, u] = conj <t+u, u>
    PG = np.conj(
        np.array([[P[idx[spec.add(els[t], els[u])], u] for u in range(n)] for t in range(n)])
    )
    # R[j, j', u] = sum_g conj(xi_j(g)) conj(xi_j'(g+u))
    XC = np.conj(xis)
    shift = np.array([[idx[spec.add(els[g], els[u])] for g in range(n)] for u in range(n)])
    R = np.empty((nd, nd, n), dtype=complex)
    for u in range(n):
        R[:, :, u] = XC @ XC[:, shift[u]].T
    tsum = np.array([[idx[spec.add(els[i], els[j])] for j in taus] for i in taus])
    tdiff = np.array([[idx[spec.sub(els[i], els[j])] for j in taus] for i in taus])
    term1 = np.outer(omegas, omegas) * G1[tsum]
    inner = np.einsum("iju,iju->ij", PG[tdiff], R)
    term2 = d * np.outer(omegas, omegas) * c**6 * np.outer(av[taus], av[taus]) / n * inner
    return term1 + term2


def pointed_part(md: ModularData) -> ModularData:
    """Restriction of (S, T) to the dimension-1 labels."""
    inv = [i for i in range(md.rank) if abs(md.S[0, i].real - 1) < 1e-9 and abs(md.S[0, i].imag) < 1e-9]
    return md.permuted(inv)


def global_dim_exact(md: ModularData) -> QuadIrr | float:
    """sum dims^2 as an exact quadratic irrational when exact dims exist."""
    if md.dims_exact is None:
        return md.global_dim
    total = QuadIrr.make(0)
    for q in md.dims_exact:
        total = total + q * q
    return total
