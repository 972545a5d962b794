#!/usr/bin/env python
"""Positivity of the invariant form on V_2.

The form is positive definite exactly when m <= 3 (n = 3) or m <= 2 (n >= 4).
Two routes to the verdict are computed and compared:

* Sylvester's criterion on the full C(n,2) x C(n,2) Gram matrix;
* the block route over the basis {w^12} u U_2 u {w^1k - w^2k} u {w^1k + w^2k - (alpha/2) w^12},
  where positivity reduces to the n = 3 matrix A together with det B(s) > 0 and
  det C(s) > 0 for 3 <= s <= n.
"""

import functools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

import numpy as np

from griesskit import linalg
from griesskit.errors import ConsistencyError, InvalidParameterError
from griesskit.griess import build, pair_index
from griesskit.minimal import central_charge
from griesskit.utils.utils import matrix_to_strings

log = logging.getLogger(__name__)


@functools.lru_cache(maxsize=64)
def _algebra(n, m):
    return build(n, m)


def _check_s(s):
    if isinstance(s, bool) or not isinstance(s, int) or s < 3:
        raise InvalidParameterError('s must be an integer >= 3, got {!r}'.format(s))


def gram_matrix(n, m):
    """Gram matrix of the invariant form in the w^{ij} basis.

    Args:
        n (int): n >= 3.
        m (int): m >= 1.

    Returns:
        C(n,2) x C(n,2) object array of Fractions.
    """
    return _algebra(n, m).gram_matrix()


def is_positive_definite(M):
    """Exact Sylvester criterion: every leading principal minor is > 0.

    Args:
        M (ndarray): Symmetric rational matrix.

    Returns:
        bool
    """
    M = np.asarray(M, dtype=object)
    if not linalg.is_symmetric(M):
        raise InvalidParameterError('is_positive_definite needs a symmetric matrix')
    return all(d > 0 for d in linalg.leading_minors(M))


def _q(m):
    return Fraction(m * (m + 1), 16)


def _f(m):
    return central_charge(m)


def _two_param_matrix(size, diag, off):
    M = linalg.zeros_matrix(size)
    for k in range(size):
        for l in range(size):
            M[k, l] = diag if k == l else off
    return M


def _b_formula(s, m):
    f, q = _f(m), _q(m)
    return _two_param_matrix(s - 2, f * (1 - q), f * q)


def _c_offdiag(m):
    f, q = _f(m), _q(m)
    return f * q * (1 - 2 * q)


def _c_formula(s, m):
    f = _f(m)
    p = _c_offdiag(m)
    return _two_param_matrix(s - 2, f + p, p)


def b_vectors(algebra):
    """w^{1k} - w^{2k} for 3 <= k <= n."""
    return [algebra.basis_vector(pair_index(1, k)) - algebra.basis_vector(pair_index(2, k))
            for k in range(3, algebra.n + 1)]


def c_vectors(algebra):
    """w^{1k} + w^{2k} - (alpha/2) w^{12} for 3 <= k <= n."""
    w12 = algebra.basis_vector(pair_index(1, 2))
    return [algebra.basis_vector(pair_index(1, k)) + algebra.basis_vector(pair_index(2, k)) - algebra.alpha / 2 * w12
            for k in range(3, algebra.n + 1)]


def form_block(algebra, xs, ys):
    M = linalg.zeros_matrix(len(xs), len(ys))
    for a, x in enumerate(xs):
        for b, y in enumerate(ys):
            M[a, b] = algebra.form(x, y)
    return M


def B_matrix_from_form(s, m):
    algebra = _algebra(s, m)
    vs = b_vectors(algebra)
    return form_block(algebra, vs, vs)


def C_matrix_from_form(s, m):
    algebra = _algebra(s, m)
    vs = c_vectors(algebra)
    return form_block(algebra, vs, vs)


def B_matrix(s, m):
    """(s-2) x (s-2) matrix b_kl = (w^1k - w^2k | w^1l - w^2l).

    Built from the entry formulas and cross-checked against the form on V_2.
    """
    _check_s(s)
    B = _b_formula(s, m)
    if not linalg.equal(B, B_matrix_from_form(s, m)):
        raise ConsistencyError('B entry formulas disagree with the form at s={}, m={}'.format(s, m))
    return B


def C_matrix(s, m):
    """(s-2) x (s-2) matrix c_kl of the vectors w^1k + w^2k - (alpha/2) w^12."""
    _check_s(s)
    C = _c_formula(s, m)
    if not linalg.equal(C, C_matrix_from_form(s, m)):
        raise ConsistencyError('C entry formulas disagree with the form at s={}, m={}'.format(s, m))
    return C


def detB_closed(s, m):
    """f^{s-2} (1 - m(m+1)/8)^{s-3} (1 + (s-4) m(m+1)/16), f = m(m+5)/((m+2)(m+3))."""
    _check_s(s)
    f, q = _f(m), _q(m)
    return f ** (s - 2) * (1 - 2 * q) ** (s - 3) * (1 + (s - 4) * q)


def detC_closed(s, m):
    """f^{s-3} [f + (s-2) f (m(m+1)/16)(1 - m(m+1)/8)]."""
    _check_s(s)
    f = _f(m)
    return f ** (s - 3) * (f + (s - 2) * _c_offdiag(m))


def classify(n, m_max):
    """Positivity verdict of the Gram matrix for m = 1..m_max.

    Args:
        n (int): n >= 3.
        m_max (int): m_max >= 1.

    Returns:
        list of (m, bool).
    """
    if isinstance(m_max, bool) or not isinstance(m_max, int) or m_max < 1:
        raise InvalidParameterError('m_max must be an integer >= 1, got {!r}'.format(m_max))
    return [(m, is_positive_definite(gram_matrix(n, m))) for m in range(1, m_max + 1)]


def decomposition_basis(n, m):
    """The four families spanning V_2 used by the block route.

    Returns:
        dict with keys 'w12', 'U2', 'B', 'C', each a list of GriessElement.
    """
    algebra = _algebra(n, m)
    return {
        'w12': [algebra.basis_vector(pair_index(1, 2))],
        'U2': [algebra.basis_vector(p) for p in algebra.pairs if p.i >= 3],
        'B': b_vectors(algebra),
        'C': c_vectors(algebra),
    }


# pairs of families whose form block must be zero
ORTHOGONAL_FAMILIES = [('w12', 'U2'), ('w12', 'B'), ('w12', 'C'), ('U2', 'B'), ('B', 'C')]


def mixed_blocks_vanish(n, m):
    """Evaluates every cross block listed in ORTHOGONAL_FAMILIES and checks it is zero."""
    algebra = _algebra(n, m)
    basis = decomposition_basis(n, m)
    for a, b in ORTHOGONAL_FAMILIES:
        if basis[a] and basis[b] and not linalg.is_zero(form_block(algebra, basis[a], basis[b])):
            log.debug('block (%s, %s) nonzero at n=%d m=%d', a, b, n, m)
            return False
    return True


def decomposition_spans(n, m):
    algebra = _algebra(n, m)
    vs = [x.coefficients for fam in decomposition_basis(n, m).values() for x in fam]
    return linalg.rank(linalg.matrix([list(v) for v in vs])) == algebra.dim


def block_verdict(n, m):
    """Positivity from the block route: A positive definite, det B(s) > 0 and det C(s) > 0 for 3 <= s <= n."""
    if not is_positive_definite(gram_matrix(3, m)):
        return False
    for s in range(3, n + 1):
        if linalg.det(B_matrix(s, m)) <= 0 or linalg.det(C_matrix(s, m)) <= 0:
            return False
    return True


@dataclass
class GramReport:
    """Everything computed for one grid point (n, m).

    The determinant lists are indexed by s = 3..n.
    """

    n: int
    m: int
    gram: np.ndarray
    leading_minors: List[Fraction]
    positive_definite: bool
    detB_closed: List[Fraction] = field(default_factory=list)
    detB_direct: List[Fraction] = field(default_factory=list)
    detC_closed: List[Fraction] = field(default_factory=list)
    detC_direct: List[Fraction] = field(default_factory=list)
    block_verdict: bool = False
    mixed_blocks_vanish: bool = False
    outside_hypothesis: bool = False

    @property
    def determinants_agree(self):
        return self.detB_closed == self.detB_direct and self.detC_closed == self.detC_direct

    def to_json(self):
        return {
            'n': self.n,
            'm': self.m,
            'gram': matrix_to_strings(self.gram),
            'leading_minors': list(self.leading_minors),
            'positive_definite': self.positive_definite,
            'detB_closed': list(self.detB_closed),
            'detB_direct': list(self.detB_direct),
            'detC_closed': list(self.detC_closed),
            'detC_direct': list(self.detC_direct),
            'determinants_agree': self.determinants_agree,
            'block_verdict': self.block_verdict,
            'mixed_blocks_vanish': self.mixed_blocks_vanish,
            'outside_hypothesis': self.outside_hypothesis,
        }


def gram_report(n, m):
    """Assembles the GramReport for (n, m).

    m = 1 is flagged outside_hypothesis: the positivity statement is made for m >= 2,
    the m = 1 row is still computed.
    """
    G = gram_matrix(n, m)
    minors = linalg.leading_minors(G)
    ss = range(3, n + 1)
    report = GramReport(
        n=n, m=m, gram=G, leading_minors=minors,
        positive_definite=all(d > 0 for d in minors),
        detB_closed=[detB_closed(s, m) for s in ss],
        detB_direct=[linalg.det(B_matrix(s, m)) for s in ss],
        detC_closed=[detC_closed(s, m) for s in ss],
        detC_direct=[linalg.det(C_matrix(s, m)) for s in ss],
        block_verdict=block_verdict(n, m),
        mixed_blocks_vanish=mixed_blocks_vanish(n, m),
        outside_hypothesis=(m == 1),
    )
    log.debug('gram report n=%d m=%d: positive_definite=%s', n, m, report.positive_definite)
    return report
