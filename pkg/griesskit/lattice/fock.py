#!/usr/bin/env python
"""Fock space of the lattice vertex algebra V_L, L = Z^n with (a_i|a_j) = 2 delta_ij.

A basis state is a Heisenberg monomial a_{i1}(-k1) ... a_{ir}(-kr) acting on e^gamma.
Monomials only use the coordinate directions a_i, so every state has a unique normal
form; a general direction h = sum h_i a_i is expanded by linearity when an operator
is applied.

Weight of a basis state: sum of the modes k plus norm(gamma)/2.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from griesskit.errors import InvalidParameterError, UnsupportedShapeError
from griesskit.utils.utils import fmt_rational, to_fraction

log = logging.getLogger(__name__)

DEFAULT_WEIGHT_CAP = 4


@dataclass(frozen=True, order=True)
class LatticeVector:
    """A point gamma = sum coords[i] a_{i+1} of L."""

    coords: Tuple[int, ...]

    @classmethod
    def zero(cls, n):
        return cls((0,) * n)

    @classmethod
    def root(cls, n, i, j):
        """a_i - a_j (1-based indices)."""
        c = [0] * n
        c[i - 1] += 1
        c[j - 1] -= 1
        return cls(tuple(c))

    @classmethod
    def unit(cls, n, i, sign=1):
        c = [0] * n
        c[i - 1] = sign
        return cls(tuple(c))

    @property
    def n(self):
        return len(self.coords)

    def pairing(self, other):
        if other.n != self.n:
            raise InvalidParameterError('lattice vectors of rank {} and {}'.format(self.n, other.n))
        return 2 * sum(a * b for a, b in zip(self.coords, other.coords))

    def norm(self):
        return self.pairing(self)

    def is_zero(self):
        return not any(self.coords)

    def __add__(self, other):
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return LatticeVector(tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def direction(self):
        """gamma as a Heisenberg direction vector."""
        return tuple(Fraction(a) for a in self.coords)


def pairing(h, g):
    """2 sum h_i g_i for directions (or lattice coordinates) h, g."""
    return 2 * sum(to_fraction(a) * to_fraction(b) for a, b in zip(h, g))


@dataclass(frozen=True, order=True)
class FockMonomial:
    """Creation factors (mode k > 0, coordinate index i), sorted by mode descending then index.

    Stands for the product of a_{i+1}(-k) over the factors.
    """

    factors: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_factors(cls, factors):
        for k, i in factors:
            if k <= 0:
                raise InvalidParameterError('creation factors need a positive mode, got {}'.format(k))
        return cls(tuple(sorted(factors, key=lambda f: (-f[0], f[1]))))

    def weight(self):
        return sum(k for k, _ in self.factors)

    def __len__(self):
        return len(self.factors)

    def times(self, k, i):
        return FockMonomial.from_factors(self.factors + ((k, i),))

    def without(self, k, i):
        """Removes one copy of the factor (k, i) and returns (multiplicity, monomial)."""
        counts = Counter(self.factors)
        mult = counts[(k, i)]
        if not mult:
            return 0, None
        counts[(k, i)] -= 1
        return mult, FockMonomial.from_factors(list(counts.elements()))

    def to_json(self, n):
        out = []
        for k, i in self.factors:
            direction = [0] * n
            direction[i] = 1
            out.append([direction, k])
        return out


VACUUM_MONOMIAL = FockMonomial()


class VOAState:
    """Finite rational combination of basis states (FockMonomial, LatticeVector).

    Zero coefficients are never stored.

    Args:
        n (int): Rank of the lattice.
        terms (dict): {(FockMonomial, LatticeVector): coefficient}.
    """

    __slots__ = ('n', 'terms')

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for key, c in (terms or {}).items():
            c = to_fraction(c)
            if c != 0:
                if key[1].n != n:
                    raise InvalidParameterError('lattice part of rank {} in a rank-{} state'.format(key[1].n, n))
                clean[key] = c
        self.terms = clean

    @classmethod
    def vacuum(cls, n):
        return cls(n, {(VACUUM_MONOMIAL, LatticeVector.zero(n)): 1})

    @classmethod
    def exp(cls, gamma):
        """The state e^gamma."""
        return cls(gamma.n, {(VACUUM_MONOMIAL, gamma): 1})

    @classmethod
    def zero(cls, n):
        return cls(n)

    def _check(self, other):
        if not isinstance(other, VOAState) or other.n != self.n:
            raise InvalidParameterError('states of different lattices')

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return VOAState(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return VOAState(self.n, {k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar):
        scalar = to_fraction(scalar)
        return VOAState(self.n, {k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, VOAState) and other.n == self.n and other.terms == self.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return 'VOAState({})'.format(self.to_json())

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self):
        return not self.terms

    def coefficient(self, monomial, gamma):
        return self.terms.get((monomial, gamma), Fraction(0))

    def vacuum_coefficient(self):
        return self.coefficient(VACUUM_MONOMIAL, LatticeVector.zero(self.n))

    def to_json(self):
        return [{'monomial': mon.to_json(self.n), 'lattice': list(gamma.coords), 'coeff': fmt_rational(c)}
                for (mon, gamma), c in self.items()]


@dataclass(frozen=True)
class WeightCap:
    """Results of weight strictly above max_weight are dropped."""

    max_weight: int = DEFAULT_WEIGHT_CAP

    def __post_init__(self):
        if isinstance(self.max_weight, bool) or not isinstance(self.max_weight, int) or self.max_weight < 0:
            raise InvalidParameterError('weight cap must be an integer >= 0, got {!r}'.format(self.max_weight))

    def admits(self, w):
        return w <= self.max_weight


def term_weight(monomial, gamma):
    return Fraction(monomial.weight()) + Fraction(gamma.norm(), 2)


def weight(state):
    """The weight of a homogeneous state; None for the zero state.

    Raises:
        InvalidParameterError: If the state mixes weights.
    """
    weights = {term_weight(mon, gamma) for mon, gamma in state.terms}
    if not weights:
        return None
    if len(weights) > 1:
        raise InvalidParameterError('state is not homogeneous: weights {}'.format(sorted(weights)))
    return weights.pop()


def homogeneous_components(state):
    """{weight: VOAState} splitting state by weight."""
    parts = {}
    for (mon, gamma), c in state.terms.items():
        parts.setdefault(term_weight(mon, gamma), {})[(mon, gamma)] = c
    return {w: VOAState(state.n, t) for w, t in sorted(parts.items())}


def component(state, w):
    return homogeneous_components(state).get(Fraction(w), VOAState.zero(state.n))


def truncate(state, cap):
    """Drops every term of weight above cap."""
    max_weight = cap.max_weight if isinstance(cap, WeightCap) else cap
    return VOAState(state.n, {(mon, gamma): c for (mon, gamma), c in state.terms.items()
                              if term_weight(mon, gamma) <= max_weight})


def _check_direction(h, n):
    h = tuple(to_fraction(x) for x in h)
    if len(h) != n:
        raise InvalidParameterError('direction of length {} on a rank-{} lattice'.format(len(h), n))
    return h


def heisenberg_apply(h, k, v):
    """h(k) v for a nonzero mode k.

    k < 0 adds a creation factor; k > 0 contracts using [a_i(p), a_j(q)] = 2 p delta_ij delta_{p+q,0}.

    Args:
        h (sequence): Direction, coordinates in the a_i basis.
        k (int): Nonzero mode.
        v (VOAState): Input state.

    Returns:
        VOAState
    """
    if k == 0:
        raise UnsupportedShapeError('h(0) acts through zero_mode')
    h = _check_direction(h, v.n)
    out = {}
    for (mon, gamma), c in v.terms.items():
        for i, hi in enumerate(h):
            if hi == 0:
                continue
            if k < 0:
                key = (mon.times(-k, i), gamma)
                out[key] = out.get(key, 0) + c * hi
            else:
                mult, rest = mon.without(k, i)
                if mult:
                    key = (rest, gamma)
                    out[key] = out.get(key, 0) + c * hi * 2 * k * mult
    return VOAState(v.n, out)


def zero_mode(h, v):
    """h(0) v: multiplies each term by pairing(h, gamma)."""
    h = _check_direction(h, v.n)
    return VOAState(v.n, {(mon, gamma): c * pairing(h, gamma.coords) for (mon, gamma), c in v.terms.items()})


def mode(h, k, v):
    """h(k) v for any integer k."""
    if k == 0:
        return zero_mode(h, v)
    return heisenberg_apply(h, k, v)


def fock_weight(v):
    """Largest Heisenberg weight among the terms of v."""
    return max((mon.weight() for mon, _ in v.terms), default=0)
