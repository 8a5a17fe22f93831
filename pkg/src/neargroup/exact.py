"""Exact scalar types used alongside floating point.

Discrete data (bicharacters, quadratic forms, snapped twists) is held as
rational phases, quadratic irrationals ``p + q*sqrt(m)``, or small integer
combinations of roots of unity.  Complex doubles appear only when such a
value is evaluated.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction


_QUARTER_TURNS = {0: 1 + 0j, 1: 1j, 2: -1 + 0j, 3: -1j}


def phase_to_complex(r: Fraction | int) -> complex:
    """exp(i*pi*r) for a rational r; quarter turns are exact."""
    r = Fraction(r) % 2
    if r.denominator in (1, 2):
        return _QUARTER_TURNS[int(r * 2) % 4]
    return cmath.exp(1j * math.pi * float(r))


def snap_phase(z: complex, max_den: int = 240, tol: float = 1e-7) -> Fraction | None:
    """Return rational r with z ~ exp(i*pi*r), r in (-1, 1], or None.

    The denominator of r is at most ``max_den`` (so z is a root of unity of
    order at most 2*max_den).  The snap is rejected if it moves z by more
    than ``tol``.
    """
    if abs(abs(z) - 1.0) > tol:
        return None
    r = Fraction(cmath.phase(z) / math.pi).limit_denominator(max_den)
    if r <= -1:
        r += 2
    if abs(phase_to_complex(r) - z) > tol:
        return None
    return r


def snap_root_of_unity(z: complex, order: int, tol: float = 1e-6) -> int | None:
    """Exponent k with z ~ exp(2*pi*i*k/order), else None."""
    k = round(cmath.phase(z) / (2 * math.pi) * order) % order
    if abs(cmath.exp(2j * math.pi * k / order) - z) > tol:
        return None
    return k


@dataclass(frozen=True)
class QuadIrr:
    """Exact quadratic irrational p + q*sqrt(m) with rational p, q."""

    p: Fraction
    q: Fraction
    m: int

    @staticmethod
    def make(p, q=0, m=1) -> "QuadIrr":
        p, q = Fraction(p), Fraction(q)
        if q == 0:
            m = 1
        # pull square factors out of m so equal values compare equal
        m = int(m)
        k = 2
        while k * k <= m:
            while m % (k * k) == 0:
                m //= k * k
                q *= k
            k += 1
        if m == 1:
            p, q = p + q, Fraction(0)
        return QuadIrr(p, q, m)

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(self.m)

    def __add__(self, other: "QuadIrr") -> "QuadIrr":
        if self.q == 0:
            return QuadIrr.make(other.p + self.p, other.q, other.m)
        if other.q == 0:
            return QuadIrr.make(self.p + other.p, self.q, self.m)
        if self.m != other.m:
            raise ValueError(f"incompatible radicands {self.m} and {other.m}")
        return QuadIrr.make(self.p + other.p, self.q + other.q, self.m)

    def __mul__(self, other: "QuadIrr") -> "QuadIrr":
        if self.q == 0 or other.q == 0 or self.m == other.m:
            m = max(self.m, other.m) if (self.q == 0 or other.q == 0) else self.m
            p = self.p * other.p + self.q * other.q * (self.m if self.q and other.q else 0)
            q = self.p * other.q + self.q * other.p
            return QuadIrr.make(p, q, m)
        raise ValueError(f"incompatible radicands {self.m} and {other.m}")

    def conjugate(self) -> "QuadIrr":
        return QuadIrr(self.p, -self.q, self.m)

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        return f"{self.p}+{self.q}*sqrt({self.m})"

    @staticmethod
    def parse(text: str) -> "QuadIrr":
        # format "<p>+<q>*sqrt(<m>)", or just "<p>"
        text = text.replace(" ", "")
        if "sqrt" not in text:
            return QuadIrr.make(Fraction(text))
        i = text.index("*sqrt(")
        j = text.rindex("+", 1, i)
        p = Fraction(text[:j])
        q = Fraction(text[j + 1 : i])
        m = int(text[i + len("*sqrt(") : -1])
        return QuadIrr.make(p, q, m)


def fit_quadratic(value: float, m: int, max_den: int = 64, tol: float = 1e-8) -> QuadIrr | None:
    """Recognize value as p + q*sqrt(m) with bounded rational p, q."""
    s = math.sqrt(m)
    scale = 10**7
    for den in (1, 2, 4, 8, max_den):
        rows = [
            [1, 0, 0, round(scale * den)],
            [0, 1, 0, round(scale * den * s)],
            [0, 0, 1, round(scale * den * value)],
        ]
        for cand in _lll(rows):
            if cand[2] == 0:
                continue
            q0 = -cand[2]
            p, q = Fraction(cand[0], q0 * den), Fraction(cand[1], q0 * den)
            if abs(float(p) + float(q) * s - value) < tol:
                return QuadIrr.make(p, q, m)
    return None


# ---------------------------------------------------------------------------
# cyclotomic recognition


def _lll(basis: list[list[int]], delta: float = 0.75) -> list[list[int]]:
    """LLL reduction of integer rows; float Gram-Schmidt, exact row ops."""
    import numpy as np

    b = [list(map(int, row)) for row in basis]
    n = len(b)

    def gso():
        B = np.array(b, dtype=float)
        mu = np.eye(n)
        bstar = np.zeros_like(B)
        norms = np.zeros(n)
        for i in range(n):
            v = B[i].copy()
            for j in range(i):
                if norms[j] > 0:
                    mu[i, j] = B[i] @ bstar[j] / norms[j]
                    v -= mu[i, j] * bstar[j]
            bstar[i] = v
            norms[i] = v @ v
        return mu, norms

    mu, norms = gso()
    k = 1
    steps = 0
    while k < n and steps < 20000:
        steps += 1
        for j in range(k - 1, -1, -1):
            if abs(mu[k, j]) > 0.5:
                r = round(mu[k, j])
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                mu[k, : j + 1] -= r * mu[j, : j + 1]
        if norms[k] >= (delta - mu[k, k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gso()
            k = max(k - 1, 1)
    return b


def _euler_phi(n: int) -> int:
    out, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            out *= p - 1
            m //= p
            while m % p == 0:
                out *= p
                m //= p
        p += 1
    if m > 1:
        out *= m - 1
    return out


@dataclass
class ExactValue:
    """A complex number as sum_j (coeffs[j]/den) * zeta_N^j, plus float shadow.

    ``coeffs`` is indexed by all residues j in Z_N so Galois maps act by
    permuting indices; the representation need not be reduced.
    """

    conductor: int
    coeffs: tuple[int, ...]
    den: int
    shadow: complex

    def value(self) -> complex:
        N = self.conductor
        return sum(c * cmath.exp(2j * math.pi * j / N) for j, c in enumerate(self.coeffs) if c) / self.den

    def galois(self, k: int) -> "ExactValue":
        N = self.conductor
        if math.gcd(k, N) != 1:
            raise ValueError(f"exponent {k} not coprime to {N}")
        out = [0] * N
        for j, c in enumerate(self.coeffs):
            out[(j * k) % N] += c
        ev = ExactValue(N, tuple(out), self.den, 0j)
        ev.shadow = ev.value()
        return ev


_EXACTIFY_CACHE: dict = {}


def exactify(
    value: complex,
    conductor: int,
    coeff_bound: int = 10**6,
    max_den: int = 64,
    tol: float = 1e-8,
) -> ExactValue | None:
    """Fit value in Z[zeta_N]/den by lattice reduction; verified to tol.

    Returns None when no fit with bounded coefficients/denominator exists.
    """
    value = complex(value)
    key = (round(value.real, 10), round(value.imag, 10), conductor, max_den)
    if key in _EXACTIFY_CACHE:
        return _EXACTIFY_CACHE[key]
    out = _exactify_impl(value, conductor, coeff_bound, max_den, tol)
    _EXACTIFY_CACHE[key] = out
    return out


def _exactify_impl(value, conductor, coeff_bound, max_den, tol) -> ExactValue | None:
    N = conductor
    deg = _euler_phi(N)
    zs = [cmath.exp(2j * math.pi * j / N) for j in range(deg)]
    scale = 10**7
    rows = []
    for j in range(deg):
        rows.append(
            [1 if i == j else 0 for i in range(deg + 1)]
            + [round(scale * zs[j].real), round(scale * zs[j].imag)]
        )
    for den in sorted({1, 2, 4, 8, 16, max_den}):
        if den > max_den:
            continue
        vrow = [0] * deg + [1] + [round(scale * den * value.real), round(scale * den * value.imag)]
        red = _lll(rows + [vrow])
        for cand in red:
            q = cand[deg]
            if q == 0:
                continue
            coeffs = [-c * (1 if q > 0 else -1) for c in cand[:deg]]
            qq = abs(q)
            approx = sum(c * z for c, z in zip(coeffs, zs)) / (qq * den)
            if abs(approx - value) < tol and max((abs(c) for c in coeffs), default=0) <= coeff_bound:
                full = [0] * N
                for j, c in enumerate(coeffs):
                    full[j] = c
                return ExactValue(N, tuple(full), qq * den, approx)
    return None
