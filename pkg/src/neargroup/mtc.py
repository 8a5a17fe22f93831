"""Generic operations on modular data: axiom verification, Verlinde
fusion, the balancing equation, Galois action, exactification and
subcategory detection.

Tolerances follow a fixed ladder: construction noise is expected below
1e-10, verification passes at 1e-8, and integrality rounding at 1e-6.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .center import ModularData
from .exact import ExactValue, exactify


@dataclass
class VerifyReport:
    passed: bool
    residuals: dict
    t_order: int | None
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.passed


def verify_modular(md: ModularData, tol: float = 1e-8) -> VerifyReport:
    """Check the modular axioms; the report carries per-axiom residuals.

    Checked: S symmetric; S/sqrt(dim) unitary; T diagonal of finite order;
    S^2 = dim * C for a permutation C; (sT)^3 proportional to s^2 with a
    unit-modulus constant (the anomaly).
    """
    S, T = md.S, md.T
    rank = md.rank
    D = md.global_dim
    res = {}
    failures = []

    res["symmetry"] = float(np.abs(S - S.T).max())
    sn = S / math.sqrt(D)
    res["unitarity"] = float(np.abs(sn @ sn.conj().T - np.eye(rank)).max())
    res["unit_row"] = float(np.abs(S[0] - md.dims).max())

    t_order = md.t_order()
    if t_order is None:
        failures.append("T order not a root of unity of order <= 1e4")

    s2 = sn @ sn
    C = np.round(s2.real)
    res["charge_conjugation"] = float(np.abs(s2 - C).max())
    perm_ok = (
        np.all(np.isin(C.astype(int), (0, 1)))
        and np.all(C.sum(axis=0) == 1)
        and np.all(C.sum(axis=1) == 1)
    )
    if not perm_ok:
        failures.append("S^2/dim is not a permutation")

    p_plus = complex((md.dims**2 * T).sum() / math.sqrt(D))
    res["anomaly_magnitude"] = abs(abs(p_plus) - 1.0)
    st3 = np.linalg.matrix_power(sn * T[None, :], 3)
    res["st_relation"] = float(np.abs(st3 - p_plus * s2).max())

    for key in ("symmetry", "unitarity", "unit_row", "charge_conjugation", "st_relation", "anomaly_magnitude"):
        if res[key] > tol:
            failures.append(f"{key} residual {res[key]:.3e} exceeds {tol:.1e}")
    return VerifyReport(passed=not failures, residuals=res, t_order=t_order, failures=failures)


class FusionError(ValueError):
    pass


def verlinde_fusion(md: ModularData, tol: float = 1e-6) -> np.ndarray:
    """Fusion tensor N[i][j][k] by the Verlinde formula; integer-rounded.

    Raises FusionError naming the worst entry when some value is farther
    than tol from a non-negative integer.
    """
    S = md.S
    D = md.global_dim
    N = np.einsum("iw,jw,kw,w->ijk", S, S, S.conj(), 1.0 / S[0]) / D
    dev = np.abs(N - np.round(N.real))
    if dev.max() > tol:
        i, j, k = np.unravel_index(int(dev.argmax()), dev.shape)
        raise FusionError(
            f"Verlinde value at ({i},{j},{k}) deviates {dev.max():.3e} from an integer"
        )
    Nr = np.round(N.real).astype(int)
    if Nr.min() < 0:
        i, j, k = np.unravel_index(int(Nr.argmin()), Nr.shape)
        raise FusionError(f"negative fusion coefficient at ({i},{j},{k})")
    return Nr


def fusion_slice(md: ModularData, i: int, tol: float = 1e-6) -> np.ndarray:
    """Row N[i][:][:] only; usable at ranks where the full tensor is large."""
    S = md.S
    D = md.global_dim
    Ni = np.einsum("w,jw,kw->jk", S[i] / S[0] / D, S, S.conj())
    dev = np.abs(Ni - np.round(Ni.real))
    if dev.max() > tol:
        raise FusionError(f"Verlinde slice {i} deviates {dev.max():.3e} from integers")
    return np.round(Ni.real).astype(int)


def charge_conjugation(md: ModularData) -> np.ndarray:
    """The permutation i -> i* read off S^2 = dim * C."""
    sn = md.normalized_s()
    C = np.round((sn @ sn).real).astype(int)
    dual = np.argmax(C, axis=1)
    if sorted(dual.tolist()) != list(range(md.rank)):
        raise ValueError("charge conjugation is not a permutation")
    return dual


def balancing_check(md: ModularData, fusion: np.ndarray | None = None) -> float:
    """Max deviation of theta_i theta_j S_ij = sum_k N[i*][j][k] theta_k d_k."""
    if fusion is None:
        fusion = verlinde_fusion(md)
    dual = charge_conjugation(md)
    rhs = np.einsum("ijk,k->ij", fusion[dual], md.T * md.dims)
    lhs = np.outer(md.T, md.T) * md.S
    return float(np.abs(lhs - rhs).max())


def exactify_entry(value: complex, conductor: int, coeff_bound=None, tol: float = 1e-8):
    """Cyclotomic recognition in Q(zeta_N); see ``neargroup.exact.exactify``."""
    return exactify(value, conductor, coeff_bound=coeff_bound or 10**6, tol=tol)


@dataclass
class GaloisElement:
    conductor: int
    exponent: int

    def __post_init__(self):
        if math.gcd(self.exponent, self.conductor) != 1:
            raise ValueError("exponent must be coprime to the conductor")


def _sigma_map(values, N, k, tol):
    """Apply zeta_N -> zeta_N^k entrywise, caching by rounded value."""
    cache: dict = {}
    out = np.empty(len(values), dtype=complex)
    for i, v in enumerate(values):
        key = (round(v.real, 10), round(v.imag, 10))
        if key not in cache:
            ev = exactify(complex(v), N, tol=tol)
            if ev is None:
                raise ValueError(f"value {v} has no fit in Q(zeta_{N})")
            cache[key] = ev.galois(k).shadow
        out[i] = cache[key]
    return out


def galois_action(md: ModularData, sigma: GaloisElement, tol: float = 1e-6):
    """Permutation sigma-hat with sigma(S_{X,Y}/S_{1,Y}) = S_{X,sh(Y)}/S_{1,sh(Y)}.

    Entries are exactified over Q(zeta_N) to apply sigma; raises when some
    column has no exact fit or no matching partner (data not Galois-stable).
    """
    N = sigma.conductor
    k = sigma.exponent % N
    S = md.S
    rank = md.rank
    if k == 1:
        return list(range(rank)), md
    cols = S / S[0][None, :]
    conj_cols = _sigma_map(cols.ravel(), N, k, tol).reshape(cols.shape)
    perm = []
    for j in range(rank):
        dist = np.abs(cols - conj_cols[:, j][:, None]).max(axis=0)
        tgt = int(np.argmin(dist))
        if dist[tgt] > tol:
            raise ValueError(f"no column matches the conjugate of column {j}")
        perm.append(tgt)
    if sorted(perm) != list(range(rank)):
        raise ValueError("conjugated columns do not induce a bijection")
    Sg = _sigma_map(S.ravel(), N, k, tol).reshape(S.shape)
    Tg = _sigma_map(md.T, N, k, tol)
    out = ModularData(list(md.labels), Sg, Tg, meta=dict(md.meta))
    return perm, out


def invertible_labels(md: ModularData, tol: float = 1e-9) -> list[int]:
    return [i for i in range(md.rank) if abs(md.S[0, i] - 1) < tol]


def invertible_group(md: ModularData, tol: float = 1e-8):
    """Multiplication table of the invertibles, from S-row characters."""
    inv = invertible_labels(md)
    S = md.S
    table = {}
    for g in inv:
        ratio = S[g] / S[0]
        for h in inv:
            target = ratio * S[h]
            dist = np.abs(S[inv] - target[None, :]).max(axis=1)
            m = int(np.argmin(dist))
            if dist[m] > tol:
                raise ValueError("invertibles do not close under fusion")
            table[(g, h)] = inv[m]
    return inv, table


def _subgroup_closures(inv, table, unit):
    """All subgroups of the invertible group, by closing small generator sets."""
    import itertools

    def close(gens):
        group = {unit}
        frontier = set(gens)
        while frontier:
            new = set()
            for a in frontier:
                for b in list(group) + list(frontier):
                    for x in (table[(a, b)], table[(b, a)]):
                        if x not in group and x not in frontier and x not in new:
                            new.add(x)
            group |= frontier
            frontier = new
        return frozenset(group)

    subs = {frozenset({unit})}
    # abelian groups of order <= 64 here need at most 3 generators
    for r in (1, 2, 3):
        for gens in itertools.combinations([g for g in inv if g != unit], r):
            subs.add(close(gens))
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def group_type(order_counts: dict[int, int]) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group from its order statistics."""
    n = sum(order_counts.values())
    # factor as product over primes using counts of elements of order p^k
    from collections import Counter

    target = Counter()
    for o, c in order_counts.items():
        target[o] = c
    # search small abelian group types of order n
    import itertools

    def types(m, maxf=None):
        if m == 1:
            yield ()
            return
        f = maxf or m
        for k in range(min(f, m), 1, -1):
            if m % k == 0:
                for rest in types(m // k, k):
                    # invariant factors: each divides the previous
                    if not rest or k % rest[0] == 0:
                        yield rest + (k,)

    def orders_of(factors):
        from math import lcm

        cnt = Counter()
        def rec(i, o):
            if i == len(factors):
                cnt[o] += 1
                return
            for a in range(factors[i]):
                rec(i + 1, lcm(o, factors[i] // math.gcd(a, factors[i])))
        rec(0, 1)
        return cnt

    for t in types(n):
        if orders_of(t) == target:
            return tuple(sorted(t))
    raise ValueError("order statistics do not match an abelian group")


def find_tannakian_subgroups(md: ModularData, tol: float = 1e-8):
    """Subsets H of invertibles closed under fusion with trivial twists and
    trivial mutual braiding (normalized S = 1 on H x H), tagged with the
    abstract group type."""
    inv, table = invertible_group(md)
    unit = 0
    out = []
    for H in _subgroup_closures(inv, table, unit):
        Hl = sorted(H)
        if any(abs(md.T[g] - 1) > tol for g in Hl):
            continue
        if any(abs(md.S[g, h] - 1) > tol for g in Hl for h in Hl):
            continue
        orders = {}
        for g in Hl:
            o, x = 1, g
            while x != unit:
                x = table[(x, g)]
                o += 1
            orders[o] = orders.get(o, 0) + 1
        out.append({"labels": Hl, "group_type": group_type(orders)})
    return out


def centralizer(md: ModularData, subset, tol: float = 1e-8) -> list[int]:
    """Labels X with S_{g,X} = d_g d_X for every g in the subset."""
    dims = md.dims
    out = []
    for X in range(md.rank):
        if all(abs(md.S[g, X] - dims[g] * dims[X]) <= tol * max(1.0, dims[X]) for g in subset):
            out.append(X)
    return out
