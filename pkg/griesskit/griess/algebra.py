#!/usr/bin/env python
"""The weight-2 Griess algebra V_2 spanned by Virasoro vectors w^{ij}.

The basis is {w^{ij} : 1 <= i < j <= n} in lexicographic order. Structure
constants, with alpha = h_{m+1,1} = m(m+1)/4 and beta = c_m (or arbitrary Matsuo
parameters):

    w^{ij} . w^{ij} = 2 w^{ij}
    w^{ij} . w^{jl} = (alpha/2)(w^{ij} + w^{jl} - w^{il})
    w^{ij} . w^{kl} = 0                    ({i,j} and {k,l} disjoint)

    (w^{ij} | w^{ij}) = beta/2,  (w^{ij} | w^{jl}) = beta*alpha/8,  disjoint -> 0
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from griesskit import linalg
from griesskit.errors import ConsistencyError, DegenerateSpectrumError, InvalidParameterError
from griesskit.minimal import KacLabel, central_charge, conformal_weight
from griesskit.utils.utils import fmt_rational, to_fraction

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class PairIndex:
    """An unordered index pair {i, j} stored with i < j (w^{ij} = w^{ji})."""

    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise InvalidParameterError('pair index needs 1 <= i < j, got ({}, {})'.format(self.i, self.j))

    def __contains__(self, k):
        return k == self.i or k == self.j

    def __str__(self):
        return '{},{}'.format(self.i, self.j)

    def as_set(self):
        return frozenset((self.i, self.j))


def pair_index(i, j):
    if i == j:
        raise InvalidParameterError('w^{{ij}} needs i != j, got i = j = {}'.format(i))
    return PairIndex(min(i, j), max(i, j))


@dataclass(frozen=True)
class GriessParams:
    """Parameters of the algebra.

    Args:
        n (int): Number of indices, n >= 3.
        alpha (Fraction): Eigenvalue of ad(w^{ij}) on w^{il} - w^{jl}.
        beta (Fraction): Central charge of each w^{ij}.
        m (int, optional): Minimal-model index when built from m.
    """

    n: int
    alpha: Fraction
    beta: Fraction
    m: Optional[int] = None

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 3:
            raise InvalidParameterError('n must be an integer >= 3, got {!r}'.format(self.n))
        if self.alpha in (0, 2):
            raise DegenerateSpectrumError(
                'alpha = {} collides with an eigenvalue of ad(w^ij)'.format(fmt_rational(self.alpha)))
        if (self.n - 2) * self.alpha + 2 == 0:
            raise InvalidParameterError(
                'alpha = {} leaves no conformal vector for n = {}'.format(fmt_rational(self.alpha), self.n))
        if self.m is not None:
            if self.alpha != Fraction(self.m * (self.m + 1), 4) or self.beta != central_charge(self.m):
                raise InvalidParameterError('alpha/beta inconsistent with m = {}'.format(self.m))


class GriessElement:
    """A vector of V_2 in the w^{ij} basis.

    Args:
        n (int): Rank of the ambient algebra.
        coefficients (iterable): C(n,2) exact coefficients, lexicographic pair order.
    """

    __slots__ = ('n', 'coefficients')

    def __init__(self, n, coefficients):
        coefficients = linalg.vector(coefficients)
        if len(coefficients) != n * (n - 1) // 2:
            raise InvalidParameterError(
                'expected {} coefficients for n = {}, got {}'.format(n * (n - 1) // 2, n, len(coefficients)))
        self.n = n
        self.coefficients = coefficients

    def _check(self, other):
        if not isinstance(other, GriessElement) or other.n != self.n:
            raise InvalidParameterError('elements of different algebras')

    def __add__(self, other):
        self._check(other)
        return GriessElement(self.n, self.coefficients + other.coefficients)

    def __sub__(self, other):
        self._check(other)
        return GriessElement(self.n, self.coefficients - other.coefficients)

    def __neg__(self):
        return GriessElement(self.n, -self.coefficients)

    def __mul__(self, scalar):
        return GriessElement(self.n, self.coefficients * to_fraction(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GriessElement) and other.n == self.n and \
            linalg.equal(self.coefficients, other.coefficients)

    def __hash__(self):
        return hash((self.n, tuple(self.coefficients)))

    def __repr__(self):
        return 'GriessElement({})'.format(self.to_json())

    def is_zero(self):
        return linalg.is_zero(self.coefficients)

    def to_json(self):
        pairs = all_pairs(self.n)
        return [{'pair': str(p), 'coeff': fmt_rational(c)} for p, c in zip(pairs, self.coefficients) if c != 0]


class LinearEndo:
    """A linear map of V_2 given by its exact matrix in the w^{ij} basis."""

    __slots__ = ('matrix',)

    def __init__(self, matrix):
        matrix = np.asarray(matrix, dtype=object)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidParameterError('a LinearEndo needs a square matrix, got {}'.format(matrix.shape))
        self.matrix = matrix

    @property
    def dim(self):
        return self.matrix.shape[0]

    def __call__(self, x):
        if x.coefficients.shape[0] != self.dim:
            raise InvalidParameterError('dimension mismatch')
        return GriessElement(x.n, self.matrix.dot(x.coefficients))

    def __matmul__(self, other):
        return LinearEndo(linalg.matmul(self.matrix, other.matrix))

    def __eq__(self, other):
        return isinstance(other, LinearEndo) and linalg.equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(tuple(self.matrix.flat))

    def is_identity(self):
        return linalg.equal(self.matrix, linalg.identity(self.dim))

    def as_permutation(self):
        """The basis permutation this map performs, or None if it is not a permutation matrix."""
        images = []
        for col in range(self.dim):
            nz = [row for row in range(self.dim) if self.matrix[row, col] != 0]
            if len(nz) != 1 or self.matrix[nz[0], col] != 1:
                return None
            images.append(nz[0])
        if len(set(images)) != self.dim:
            return None
        return tuple(images)


def all_pairs(n):
    return [PairIndex(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]


class GriessAlgebra:
    """V_2 with its product, invariant form and conformal vector.

    Build with build(n, m) or build_general(n, alpha, beta); tables are immutable
    after construction.

    Args:
        params (GriessParams): Validated parameters.

    Attributes:
        pairs (list): Basis labels in lexicographic order.
        dim (int): C(n, 2).
        gram (ndarray): Gram matrix of the invariant form.
    """

    def __init__(self, params):
        self.params = params
        self.pairs = all_pairs(params.n)
        self.dim = len(self.pairs)
        self._index = {p: k for k, p in enumerate(self.pairs)}
        self._ad = [self._build_ad(p) for p in self.pairs]
        self.gram = self._build_gram()
        for M in self._ad:
            M.setflags(write=False)
        self.gram.setflags(write=False)
        log.debug('built Griess algebra n=%d alpha=%s beta=%s (dim %d)',
                  params.n, fmt_rational(params.alpha), fmt_rational(params.beta), self.dim)

    @property
    def n(self):
        return self.params.n

    @property
    def alpha(self):
        return self.params.alpha

    @property
    def beta(self):
        return self.params.beta

    @property
    def m(self):
        return self.params.m

    def index(self, p):
        if not isinstance(p, PairIndex):
            p = pair_index(*p)
        if p.j > self.n:
            raise InvalidParameterError('pair {} outside 1..{}'.format(p, self.n))
        return self._index[p]

    def _basis_product(self, p, q):
        out = linalg.zeros(self.dim)
        if p == q:
            out[self.index(p)] = Fraction(2)
            return out
        common = p.as_set() & q.as_set()
        if not common:
            return out
        (c,) = common
        (a,) = p.as_set() - common
        (b,) = q.as_set() - common
        half = self.alpha / 2
        out[self.index(p)] += half
        out[self.index(q)] += half
        out[self.index(pair_index(a, b))] -= half
        return out

    def _basis_form(self, p, q):
        if p == q:
            return self.beta / 2
        if p.as_set() & q.as_set():
            return self.beta * self.alpha / 8
        return Fraction(0)

    def _build_ad(self, p):
        M = linalg.zeros_matrix(self.dim)
        for col, q in enumerate(self.pairs):
            M[:, col] = self._basis_product(p, q)
        return M

    def _build_gram(self):
        G = linalg.zeros_matrix(self.dim)
        for a, p in enumerate(self.pairs):
            for b, q in enumerate(self.pairs):
                G[a, b] = self._basis_form(p, q)
        return G

    def basis_vector(self, p):
        v = linalg.zeros(self.dim)
        v[self.index(p)] = Fraction(1)
        return GriessElement(self.n, v)

    def element(self, coefficients):
        """Element from a {pair: coeff} mapping or a full coefficient list."""
        if isinstance(coefficients, dict):
            v = linalg.zeros(self.dim)
            for p, c in coefficients.items():
                v[self.index(p)] += to_fraction(c)
            return GriessElement(self.n, v)
        return GriessElement(self.n, coefficients)

    def zero(self):
        return GriessElement(self.n, linalg.zeros(self.dim))

    def _check(self, *xs):
        for x in xs:
            if not isinstance(x, GriessElement) or x.n != self.n:
                raise InvalidParameterError('element does not belong to the algebra with n = {}'.format(self.n))

    def ad_matrix(self, p):
        """Matrix of x -> w^p . x in the w-basis."""
        return LinearEndo(self._ad[self.index(p)])

    def _ad_of(self, x):
        M = linalg.zeros_matrix(self.dim)
        for k, c in enumerate(x.coefficients):
            if c != 0:
                M = M + c * self._ad[k]
        return M

    def product(self, a, b):
        """The Griess product a . b = a_1 b, bilinear extension of the basis table."""
        self._check(a, b)
        out = linalg.zeros(self.dim)
        for k, c in enumerate(a.coefficients):
            if c != 0:
                out = out + c * self._ad[k].dot(b.coefficients)
        return GriessElement(self.n, out)

    def form(self, a, b):
        """The invariant bilinear form (a | b), normalized by (1|1) = 1."""
        self._check(a, b)
        return linalg.bilinear(a.coefficients, self.gram, b.coefficients)

    def gram_matrix(self):
        return self.gram.copy()

    def _sum_of_basis(self, pairs):
        v = linalg.zeros(self.dim)
        for p in pairs:
            v[self.index(p)] += 1
        return GriessElement(self.n, v)

    def conformal_vector(self):
        """w = (2/((n-2) alpha + 2)) * sum_{i<j} w^{ij}."""
        return Fraction(2) / ((self.n - 2) * self.alpha + 2) * self._sum_of_basis(self.pairs)

    def omega_triple(self, i, j, l):
        """w^{ijl} = (2/(alpha+2)) (w^{ij} + w^{jl} + w^{il}), the conformal vector of the rank-3 piece."""
        if len({i, j, l}) != 3:
            raise InvalidParameterError('omega_triple needs distinct indices, got ({}, {}, {})'.format(i, j, l))
        if self.alpha + 2 == 0:
            raise InvalidParameterError('no w^{ijl}: alpha + 2 = 0')
        pairs = [pair_index(i, j), pair_index(j, l), pair_index(i, l)]
        return Fraction(2) / (self.alpha + 2) * self._sum_of_basis(pairs)

    def expected_spectrum(self):
        n = self.n
        return [(Fraction(2), 1), (self.alpha, n - 2), (Fraction(0), self.dim - (n - 1))]

    def spectrum(self, p):
        """Eigenvalues of ad(w^p) with multiplicities, from exact ranks of M - lambda I.

        Args:
            p (PairIndex): The Virasoro vector.

        Returns:
            [(2, 1), (alpha, n-2), (0, C(n,2)-(n-1))]

        Raises:
            ConsistencyError: If the ranks do not produce this spectrum.
        """
        M = self._ad[self.index(p)]
        identity = linalg.identity(self.dim)
        found = []
        for lam, _ in self.expected_spectrum():
            found.append((lam, self.dim - linalg.rank(M - lam * identity)))
        if found != self.expected_spectrum():
            raise ConsistencyError('unexpected spectrum of ad(w^{}): {}'.format(
                p, [(fmt_rational(lam), k) for lam, k in found]))
        return found

    def eigenspace(self, p, lam):
        """Exact basis of the lam-eigenspace of ad(w^p)."""
        M = self._ad[self.index(p)] - to_fraction(lam) * linalg.identity(self.dim)
        return [GriessElement(self.n, v) for v in linalg.nullspace(M)]

    def minimal_polynomial_vanishes(self, p):
        """M (M - alpha I)(M - 2 I) == 0 for M = ad(w^p)."""
        M = self._ad[self.index(p)]
        identity = linalg.identity(self.dim)
        return linalg.is_zero(M.dot(M - self.alpha * identity).dot(M - 2 * identity))

    def is_virasoro_vector(self, x):
        self._check(x)
        return self.product(x, x) == 2 * x

    def vector_central_charge(self, x):
        """c = 2 (x|x) for a Virasoro vector x (x_3 x = (c/2) 1)."""
        return 2 * self.form(x, x)

    def central_charge_total(self):
        return self.vector_central_charge(self.conformal_vector())

    def same_tables(self, other):
        return self.n == other.n and all(linalg.equal(a, b) for a, b in zip(self._ad, other._ad)) and \
            linalg.equal(self.gram, other.gram)

    def is_commutative(self):
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                if not linalg.equal(self._ad[a][:, b], self._ad[b][:, a]):
                    return False
        return True

    def form_is_invariant(self):
        """(a.b | c) == (b | a.c) on all basis triples, i.e. ad(a)^T G == G ad(a)."""
        return all(linalg.equal(M.T.dot(self.gram), self.gram.dot(M)) for M in self._ad)

    def conformal_acts_as_two(self):
        M = self._ad_of(self.conformal_vector())
        return linalg.equal(M, 2 * linalg.identity(self.dim))

    # automorphism group, see griesskit.griess.automorphisms

    def miyamoto(self, p):
        from griesskit.griess.automorphisms import miyamoto
        return miyamoto(self, p)

    def is_automorphism(self, f):
        from griesskit.griess.automorphisms import is_automorphism
        return is_automorphism(self, f)

    def generated_group_order(self, pairs, max_n=None):
        from griesskit.griess.automorphisms import generated_group_order
        return generated_group_order(self, pairs, max_n=max_n)


def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise InvalidParameterError('n must be an integer >= 3, got {!r}'.format(n))


def build(n, m):
    """The Griess algebra of the VOA with parameters (n, m).

    Args:
        n (int): n >= 3.
        m (int): m >= 1; alpha = h_{m+1,1} = m(m+1)/4, beta = c_m.

    Returns:
        A GriessAlgebra.
    """
    _check_n(n)
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidParameterError('m must be an integer >= 1, got {!r}'.format(m))
    alpha = conformal_weight(KacLabel(m, m + 1, 1))
    return GriessAlgebra(GriessParams(n, alpha, central_charge(m), m))


def build_general(n, alpha, beta):
    """The non-degenerate Matsuo algebra of S_n with parameters (alpha, beta)."""
    _check_n(n)
    return GriessAlgebra(GriessParams(n, to_fraction(alpha), to_fraction(beta)))
