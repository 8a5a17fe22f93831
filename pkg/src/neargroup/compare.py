"""Comparison of modular data up to label permutation and Galois conjugation."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .center import ModularData
from .mtc import GaloisElement, _sigma_map


@dataclass
class MatchReport:
    matched: bool
    permutation: list | None = None  # candidate index per reference index
    galois: tuple | None = None  # (conductor, exponent) applied to the reference
    max_deviation: float | None = None
    diagnostics: str = ""


def _buckets(md: ModularData, tol):
    keys = []
    for i in range(md.rank):
        keys.append(
            (
                round(float(md.dims[i]), 6),
                round(complex(md.T[i]).real, 6),
                round(complex(md.T[i]).imag, 6),
            )
        )
    return keys


def _refine(cand: ModularData, ref: ModularData, tol):
    """Iteratively refined label classes from (dim, twist) and S-row multisets."""
    ck = _buckets(cand, tol)
    rk = _buckets(ref, tol)
    for _ in range(4):
        classes = sorted(set(ck) | set(rk))
        cls_id = {c: i for i, c in enumerate(classes)}
        ck2, rk2 = [], []
        for md, keys, out in ((cand, ck, ck2), (ref, rk, rk2)):
            for i in range(md.rank):
                finger = sorted(
                    (cls_id[keys[j]], round(complex(md.S[i, j]).real, 5), round(complex(md.S[i, j]).imag, 5))
                    for j in range(md.rank)
                )
                out.append((keys[i], tuple(finger)))
        if ck2 == ck and rk2 == rk:
            break
        ck, rk = ck2, rk2
    return ck, rk


def _search_perm(cand: ModularData, ref: ModularData, tol):
    """Backtracking assignment ref-label -> cand-label within refined classes."""
    ck, rk = _refine(cand, ref, tol)
    from collections import Counter, defaultdict

    if Counter(ck) != Counter(rk):
        return None
    cands_for = defaultdict(list)
    for i, key in enumerate(ck):
        cands_for[key].append(i)
    order = sorted(range(ref.rank), key=lambda i: len(cands_for[rk[i]]))
    assign = [-1] * ref.rank
    used = set()

    def ok(ri, ci):
        if abs(cand.T[ci] - ref.T[ri]) > tol:
            return False
        for rj in range(ref.rank):
            cj = assign[rj]
            if cj >= 0:
                if abs(cand.S[ci, cj] - ref.S[ri, rj]) > tol:
                    return False
        return True

    def bt(k):
        if k == ref.rank:
            return True
        ri = order[k]
        for ci in cands_for[rk[ri]]:
            if ci in used or not ok(ri, ci):
                continue
            assign[ri] = ci
            used.add(ci)
            if bt(k + 1):
                return True
            used.discard(ci)
            assign[ri] = -1
        return False

    return list(assign) if bt(0) else None


def compare_modular_data(
    cand: ModularData, ref: ModularData, allow_galois: bool = False, tol: float = 1e-6
) -> MatchReport:
    """Match (S, T) up to permutation, optionally composing a Galois map
    zeta_N -> zeta_N^k (N the reference T-order) applied to the reference.

    The first match found is returned with its full witness; on failure the
    diagnostics describe the best bucket alignment.
    """
    if cand.rank != ref.rank:
        return MatchReport(False, diagnostics=f"rank {cand.rank} != {ref.rank}")
    exponents = [1]
    N = ref.t_order() or 1
    if allow_galois:
        exponents += [k for k in range(2, N) if math.gcd(k, N) == 1]
    for k in exponents:
        if k == 1:
            target = ref
        else:
            try:
                Sg = _sigma_map(ref.S.ravel(), N, k, tol).reshape(ref.S.shape)
                Tg = _sigma_map(ref.T, N, k, tol)
            except ValueError:
                continue
            target = ModularData(list(ref.labels), Sg, Tg)
        perm = _search_perm(cand, target, tol)
        if perm is not None:
            dev = max(
                float(np.abs(cand.S[np.ix_(perm, perm)] - target.S).max()),
                float(np.abs(cand.T[perm] - target.T).max()),
            )
            return MatchReport(
                True,
                permutation=perm,
                galois=(N, k) if k != 1 else None,
                max_deviation=dev,
            )
    from collections import Counter

    ck = Counter(_buckets(cand, tol))
    rk = Counter(_buckets(ref, tol))
    miss = {k: (ck.get(k, 0), rk.get(k, 0)) for k in set(ck) | set(rk) if ck.get(k, 0) != rk.get(k, 0)}
    return MatchReport(False, diagnostics=f"no match; (dim,twist) bucket mismatches: {miss}")
