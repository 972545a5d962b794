#!/usr/bin/env python
"""Virasoro minimal-model data: central charges, Kac weights and fusion rules.

Everything here is exact. The unitary series is indexed by m >= 1 with
c_m = 1 - 6/((m+2)(m+3)); irreducible modules are labelled by (r, s) with
1 <= r <= m+1, 1 <= s <= m+2, and (r, s) ~ (m+2-r, m+3-s) label the same module.
"""

import functools
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from griesskit.errors import ConsistencyError, InvalidParameterError

log = logging.getLogger(__name__)


def _check_m(m):
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidParameterError('m must be an integer >= 1, got {!r}'.format(m))


@dataclass(frozen=True, order=True)
class KacLabel:
    """A Kac table label (m, r, s).

    Args:
        m (int): Minimal-model index, m >= 1.
        r (int): 1 <= r <= m+1.
        s (int): 1 <= s <= m+2.
    """

    m: int
    r: int
    s: int

    def __post_init__(self):
        _check_m(self.m)
        if not (1 <= self.r <= self.m + 1 and 1 <= self.s <= self.m + 2):
            raise InvalidParameterError(
                'label (r, s) = ({}, {}) outside the Kac table of m = {}'.format(self.r, self.s, self.m))

    @property
    def pair(self):
        return (self.r, self.s)

    def __str__(self):
        return '({},{})'.format(self.r, self.s)


@dataclass(frozen=True, order=True)
class ModuleClass:
    """An isomorphism class of irreducible L(c_m, 0)-modules.

    Holds the lexicographically smallest of the two labels (r, s), (m+2-r, m+3-s).
    """

    canonical: KacLabel

    @property
    def m(self):
        return self.canonical.m

    def representatives(self):
        return (self.canonical, kac_reflection(self.canonical))

    def __str__(self):
        return str(self.canonical)


def central_charge(m):
    """Central charge c_m = 1 - 6/((m+2)(m+3)).

    Args:
        m (int): Minimal-model index, m >= 1.

    Returns:
        c_m as a Fraction.
    """
    _check_m(m)
    return 1 - Fraction(6, (m + 2) * (m + 3))


def conformal_weight(label):
    """Kac weight h_{r,s} = ([r(m+3) - s(m+2)]^2 - 1) / (4(m+2)(m+3)).

    Args:
        label (KacLabel): A valid label.

    Returns:
        The lowest L(0)-eigenvalue of L(c_m, h_{r,s}) as a Fraction.
    """
    if not isinstance(label, KacLabel):
        raise InvalidParameterError('expected a KacLabel, got {!r}'.format(label))
    m, r, s = label.m, label.r, label.s
    return Fraction((r * (m + 3) - s * (m + 2)) ** 2 - 1, 4 * (m + 2) * (m + 3))


def top_weight(m):
    """The largest Kac weight h_{1,m+2} (equal to h_{m+1,1} = m(m+1)/4)."""
    _check_m(m)
    return conformal_weight(KacLabel(m, 1, m + 2))


def kac_reflection(label):
    """(m, r, s) -> (m, m+2-r, m+3-s); the two labels carry the same weight."""
    return KacLabel(label.m, label.m + 2 - label.r, label.m + 3 - label.s)


def module_class(label):
    return ModuleClass(min(label, kac_reflection(label)))


def weight(c):
    return conformal_weight(c.canonical)


def kac_labels(m):
    _check_m(m)
    return [KacLabel(m, r, s) for r in range(1, m + 2) for s in range(1, m + 3)]


@functools.lru_cache(maxsize=None)
def _kac_table(m):
    classes = sorted({module_class(label) for label in kac_labels(m)})
    table = [(c, weight(c)) for c in classes]
    weights = [h for _, h in table]
    if len(set(weights)) != len(weights):
        raise ConsistencyError('Kac weights of distinct classes coincide for m = {}'.format(m))
    log.debug('kac table m=%d: %d classes', m, len(table))
    return tuple(table)


def kac_table(m):
    """One entry per module class with its conformal weight.

    The weights of distinct classes are asserted pairwise distinct.

    Args:
        m (int): Minimal-model index.

    Returns:
        A list of (ModuleClass, Fraction) sorted by canonical label.
    """
    _check_m(m)
    return list(_kac_table(m))


def _as_pair(t, m):
    r, s = t
    if not (1 <= r <= m + 1 and 1 <= s <= m + 2):
        raise InvalidParameterError('pair ({}, {}) outside the Kac table of m = {}'.format(r, s, m))
    return r, s


def is_admissible(t1, t2, t3, m):
    """Admissibility of an ordered triple of (r, s) pairs.

    Args:
        t1, t2, t3 (tuple): (r, s) pairs within the Kac bounds for m.
        m (int): Minimal-model index.

    Returns:
        True iff the r- and s-sums are bounded by 2m+3 and 2m+5, both sums are odd,
        and the strict triangle inequalities hold among the r's and among the s's.
    """
    _check_m(m)
    (r1, s1), (r2, s2), (r3, s3) = (_as_pair(t, m) for t in (t1, t2, t3))
    rsum = r1 + r2 + r3
    ssum = s1 + s2 + s3
    if rsum > 2 * m + 3 or ssum > 2 * m + 5:
        return False
    if rsum % 2 == 0 or ssum % 2 == 0:
        return False
    if not (r1 < r2 + r3 and r2 < r1 + r3 and r3 < r1 + r2):
        return False
    if not (s1 < s2 + s3 and s2 < s1 + s3 and s3 < s1 + s2):
        return False
    return True


def fusion_dim(a, b, c):
    """Fusion multiplicity N_{a,b}^c between module classes (0 or 1).

    The admissibility test is stated on labels, not classes, so the class-level
    multiplicity is its maximum over all 2^3 choices of representatives.

    Args:
        a, b, c (ModuleClass): Classes sharing the same m.

    Returns:
        1 if some choice of representatives is admissible, else 0.
    """
    m = a.m
    if b.m != m or c.m != m:
        raise InvalidParameterError('fusion_dim across different m: {}, {}, {}'.format(a.m, b.m, c.m))
    for x, y, z in itertools.product(a.representatives(), b.representatives(), c.representatives()):
        if is_admissible(x.pair, y.pair, z.pair, m):
            return 1
    return 0


def fusion_table(m):
    """All (a, b, c) with fusion_dim(a, b, c) = 1, in canonical order."""
    classes = [c for c, _ in kac_table(m)]
    return [(a, b, c) for a, b, c in itertools.product(classes, repeat=3) if fusion_dim(a, b, c)]
