"""Finite abelian groups, bicharacters and quadratic forms.

Groups are products of cyclic factors; elements are tuples of residues in
canonical range.  Pairings and quadratic forms are held as exact rational
phases so the defining identities can be checked with zero error.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import phase_to_complex

Element = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """Product of cyclic groups Z/f1 x ... x Z/fk."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if not self.factors or any(f < 1 for f in self.factors):
            raise ValueError("factors must be positive integers")

    @staticmethod
    def of(*factors: int) -> "GroupSpec":
        return GroupSpec(tuple(int(f) for f in factors))

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.factors)

    def reduce(self, x) -> Element:
        return tuple(int(a) % f for a, f in zip(x, self.factors))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % f for a, b, f in zip(x, y, self.factors))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % f for a, f in zip(x, self.factors))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % f for a, b, f in zip(x, y, self.factors))

    @property
    def zero(self) -> Element:
        return (0,) * len(self.factors)


def enumerate_elements(spec: GroupSpec) -> list[Element]:
    """All elements in lexicographic order, identity first."""
    return list(itertools.product(*[range(f) for f in spec.factors]))


class Bicharacter:
    """Symmetric bicharacter <x,y> = exp(2*pi*i * sum_ij E[i][j] x_i y_j).

    E is a symmetric matrix of rationals, well defined modulo the factor
    orders (E[i][j] * f_i and E[i][j] * f_j must be integers times 1/1...
    concretely exp is evaluated on reduced residues so well-definedness is
    checked explicitly at construction).
    """

    def __init__(self, spec: GroupSpec, exponents):
        self.spec = spec
        k = len(spec.factors)
        E = [[Fraction(exponents[i][j]) for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(k):
                if E[i][j] != E[j][i]:
                    raise ValueError("exponent matrix must be symmetric")
                # well-defined mod factor orders
                if (E[i][j] * spec.factors[i]).denominator != 1 or (
                    E[i][j] * spec.factors[j]
                ).denominator != 1:
                    raise ValueError("pairing not well defined modulo factor orders")
        self.exponents = E

    @staticmethod
    def cyclic(n: int, m: int = 1) -> "Bicharacter":
        """<x,y> = exp(2*pi*i*m*x*y/n) on Z/n."""
        return Bicharacter(GroupSpec.of(n), [[Fraction(m, n)]])

    def phase(self, x: Element, y: Element) -> Fraction:
        """Rational r with <x,y> = exp(i*pi*r)."""
        x = self.spec.reduce(x)
        y = self.spec.reduce(y)
        r = 2 * sum(self.exponents[i][j] * x[i] * y[j] for i in range(len(x)) for j in range(len(y)))
        return Fraction(r) % 2

    def eval(self, x: Element, y: Element) -> complex:
        if len(x) != len(self.spec.factors) or len(y) != len(self.spec.factors):
            raise ValueError("element shape does not match group")
        return phase_to_complex(self.phase(x, y))

    def matrix(self) -> np.ndarray:
        """Full pairing table over the element enumeration."""
        els = enumerate_elements(self.spec)
        return np.array([[self.eval(x, y) for y in els] for x in els])


def pairing_eval(b: Bicharacter, x: Element, y: Element) -> complex:
    return b.eval(x, y)


def is_nondegenerate(b: Bicharacter) -> bool:
    """Brute-force: x -> <x,.> is injective iff only 0 pairs trivially with all."""
    els = enumerate_elements(b.spec)
    for x in els:
        if x == b.spec.zero:
            continue
        if all(b.phase(x, y) == 0 for y in els):
            return False
    return True


class QuadraticForm:
    """a: G -> T with a(0)=1, a(x)=a(-x), a(x+y)<x,y> = a(x)a(y).

    Stored as exact phases: a(x) = exp(i*pi*r(x)) with rational r.
    """

    def __init__(self, bichar: Bicharacter, phases: dict[Element, Fraction]):
        self.bichar = bichar
        self.spec = bichar.spec
        self.phases = {k: Fraction(v) % 2 for k, v in phases.items()}

    def phase(self, x: Element) -> Fraction:
        return self.phases[self.spec.reduce(x)]

    def eval(self, x: Element) -> complex:
        return phase_to_complex(self.phase(x))

    def table(self) -> np.ndarray:
        els = enumerate_elements(self.spec)
        return np.array([self.eval(x) for x in els])

    def check(self) -> Fraction:
        """Max deviation (as a phase fraction) over all defining identities; 0 when exact."""
        spec = self.spec
        els = enumerate_elements(spec)
        worst = Fraction(0)

        def circ(r):
            r = Fraction(r) % 2
            return min(r, 2 - r)

        worst = max(worst, circ(self.phase(spec.zero)))
        for x in els:
            worst = max(worst, circ(self.phase(x) - self.phase(spec.neg(x))))
            for y in els:
                lhs = self.phase(spec.add(x, y)) + self.bichar.phase(x, y)
                worst = max(worst, circ(lhs - self.phase(x) - self.phase(y)))
        return worst


def quadratic_forms_for(bichar: Bicharacter) -> list[QuadraticForm]:
    """All quadratic forms refining the pairing, by generator search.

    The cocycle identity propagates a from its values on the cyclic
    generators, so candidates are the finitely many generator phases with
    a(f_i * e_i) = 1; each candidate is verified pointwise afterwards.
    Phase denominators divide 2*exponent(G).
    """
    spec = bichar.spec
    els = enumerate_elements(spec)
    k = len(spec.factors)
    gens = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]

    # a(c*e) = a(e)^c * <e,e>^{-c(c-1)/2}; a(f*e) = a(0) = 1 constrains a(e)
    gen_choices = []
    for i, e in enumerate(gens):
        f = spec.factors[i]
        target = bichar.phase(e, e) * (f * (f - 1) // 2)  # phase of a(e)^f
        base = Fraction(target, f)
        gen_choices.append([(base + Fraction(2 * t, f)) % 2 for t in range(f)])

    out = []
    for combo in itertools.product(*gen_choices):
        phases: dict[Element, Fraction] = {}
        for x in els:
            r = Fraction(0)
            prefix = spec.zero
            for i in range(k):
                c = x[i]
                e = gens[i]
                # a(prefix + c*e) = a(prefix) a(c*e) / <prefix, c*e>
                r_ce = combo[i] * c - bichar.phase(e, e) * (c * (c - 1) // 2)
                step = tuple(c if j == i else 0 for j in range(k))
                r = r + r_ce - bichar.phase(prefix, step)
                prefix = spec.add(prefix, step)
            phases[x] = r % 2
        form = QuadraticForm(bichar, phases)
        if form.check() == 0:
            out.append(form)
    return out


def gauss_sum(a: QuadraticForm) -> complex:
    """sum_x a(x); magnitude sqrt(|G|) iff the underlying pairing is non-degenerate."""
    return complex(a.table().sum())
