#!/usr/bin/env python
"""Ising vectors in V_L and checks of the Griess relations on the lattice side.

    w^{ij} = (1/16) (a_i - a_j)(-1)^2 1 - (1/4) (e^{a_i - a_j} + e^{a_j - a_i})

For n = 3 the conformal vector of the commutant M(A_2) is w = (4/5)(w^12 + w^23 + w^13)
and the vectors w - w^{ij} are Virasoro vectors of central charge 7/10.
"""

import itertools
import logging
from fractions import Fraction

from griesskit import linalg
from griesskit.errors import InvalidParameterError
from griesskit.griess.algebra import pair_index
from griesskit.lattice.fock import (LatticeVector, VOAState, WeightCap, component, heisenberg_apply)
from griesskit.lattice.vertex import mode_product
from griesskit.minimal import central_charge

log = logging.getLogger(__name__)


def ising_vector(i, j, n):
    """The Ising vector w^{ij} of V_L, L = Z^n.

    Args:
        i, j (int): Distinct indices in 1..n.
        n (int): Lattice rank.

    Returns:
        VOAState of weight 2.
    """
    if i == j:
        raise InvalidParameterError('ising_vector needs i != j, got i = j = {}'.format(i))
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidParameterError('indices ({}, {}) outside 1..{}'.format(i, j, n))
    root = LatticeVector.root(n, i, j)
    direction = root.direction()
    vac = VOAState.vacuum(n)
    heis = heisenberg_apply(direction, -1, heisenberg_apply(direction, -1, vac))
    exps = VOAState.exp(root) + VOAState.exp(-root)
    return Fraction(1, 16) * heis - Fraction(1, 4) * exps


def ising_family(n):
    """{PairIndex: w^{ij}} for all pairs of 1..n."""
    return {pair_index(i, j): ising_vector(i, j, n) for i, j in itertools.combinations(range(1, n + 1), 2)}


def ma2_conformal(n=3):
    if n != 3:
        raise InvalidParameterError('the M(A_2) conformal vector lives in rank 3, got n = {}'.format(n))
    total = ising_vector(1, 2, 3) + ising_vector(2, 3, 3) + ising_vector(1, 3, 3)
    return Fraction(4, 5) * total


def tilde_vector(i, j, n=3):
    """w - w^{ij} in M(A_2)."""
    if n != 3:
        raise InvalidParameterError('tilde vectors are defined for n = 3, got n = {}'.format(n))
    return ma2_conformal(n) - ising_vector(i, j, n)


def tilde_family(n=3):
    return {pair_index(i, j): tilde_vector(i, j, n) for i, j in itertools.combinations(range(1, n + 1), 2)}


def _family_n(vectors):
    ns = {v.n for v in vectors.values()}
    if len(ns) != 1:
        raise InvalidParameterError('vectors live on lattices of different ranks {}'.format(sorted(ns)))
    return ns.pop()


def _normalize(vectors):
    return {(p if not isinstance(p, tuple) else pair_index(*p)): v for p, v in vectors.items()}


def _entry(relation, pairs, p, ok):
    return {'relation': relation, 'pairs': [str(x) for x in pairs], 'p': p, 'pass': bool(ok)}


def verify_relations(vectors, m, cap=None):
    """Checks the Griess relations for a family {w^{ij}} with alpha = m(m+1)/4, beta = c_m.

    Instances checked (for every applicable index pattern):

    * virasoro:          w^{ij}_1 w^{ij} = 2 w^{ij}
    * norm:              w^{ij}_3 w^{ij} = (beta/2) 1
    * adjacent_product:  w^{ij}_1 w^{jl} = (alpha/2)(w^{ij} + w^{jl} - w^{il})
    * adjacent_form:     w^{ij}_3 w^{jl} = (beta alpha/8) 1
    * disjoint:          w^{ij}_p w^{kl} = 0 for p = 0..3
    * eigenvector:       w^{ij}_1 (w^{il} - w^{jl}) = alpha (w^{il} - w^{jl}), killed by p = 2, 3

    Args:
        vectors (dict): {PairIndex: VOAState}.
        m (int): Minimal-model index.
        cap (WeightCap): Truncation passed to mode_product.

    Returns:
        dict report; failures are entries with pass = false.
    """
    vectors = _normalize(vectors)
    cap = cap if cap is not None else WeightCap()
    n = _family_n(vectors)
    alpha = Fraction(m * (m + 1), 4)
    beta = central_charge(m)
    vac = VOAState.vacuum(n)
    indices = sorted({k for p in vectors for k in (p.i, p.j)})
    entries = []

    def w(a, b):
        return vectors[pair_index(a, b)]

    for p, v in sorted(vectors.items()):
        entries.append(_entry('virasoro', [p], 1, mode_product(v, 1, v, cap) == 2 * v))
        entries.append(_entry('norm', [p], 3, mode_product(v, 3, v, cap) == beta / 2 * vac))

    for i, j, l in itertools.permutations(indices, 3):
        if not all(pair_index(a, b) in vectors for a, b in ((i, j), (j, l), (i, l))):
            continue
        pij, pjl = pair_index(i, j), pair_index(j, l)
        expected = alpha / 2 * (w(i, j) + w(j, l) - w(i, l))
        entries.append(_entry('adjacent_product', [pij, pjl], 1, mode_product(w(i, j), 1, w(j, l), cap) == expected))
        entries.append(_entry('adjacent_form', [pij, pjl], 3,
                              mode_product(w(i, j), 3, w(j, l), cap) == beta * alpha / 8 * vac))
        diff = w(i, l) - w(j, l)
        entries.append(_entry('eigenvector', [pij, pair_index(i, l), pair_index(j, l)], 1,
                              mode_product(w(i, j), 1, diff, cap) == alpha * diff))
        for q in (2, 3):
            entries.append(_entry('eigenvector', [pij, pair_index(i, l), pair_index(j, l)], q,
                                  mode_product(w(i, j), q, diff, cap).is_zero()))

    for a, b in itertools.permutations(sorted(vectors), 2):
        if a.as_set() & b.as_set():
            continue
        for q in range(4):
            entries.append(_entry('disjoint', [a, b], q, mode_product(vectors[a], q, vectors[b], cap).is_zero()))

    failures = [e for e in entries if not e['pass']]
    log.info('verified %d relation instances (m=%d, n=%d): %d failures', len(entries), m, n, len(failures))
    return {'n': n, 'm': m, 'alpha': alpha, 'beta': beta, 'checked': len(entries),
            'entries': entries, 'failures': failures, 'pass': not failures}


def sl2_generators(n):
    """H = sum a_i(-1) 1, E = sum e^{a_i}, F = sum e^{-a_i} (diagonal sl_2 at level n)."""
    vac = VOAState.vacuum(n)
    H = VOAState.zero(n)
    E = VOAState.zero(n)
    F = VOAState.zero(n)
    for i in range(1, n + 1):
        unit = LatticeVector.unit(n, i)
        H = H + heisenberg_apply(unit.direction(), -1, vac)
        E = E + VOAState.exp(unit)
        F = F + VOAState.exp(-unit)
    return {'H': H, 'E': E, 'F': F}


def commutant_check(vectors, n=None, cap=None):
    """Every vector must be killed by X_p, p >= 0, for X in {H, E, F}.

    Only p = 0..3 can contribute for weight-2 vectors.

    Returns:
        dict report with one entry per (vector, generator, p).
    """
    vectors = _normalize(vectors)
    n = _family_n(vectors) if n is None else n
    cap = cap if cap is not None else WeightCap()
    entries = []
    for name, X in sorted(sl2_generators(n).items()):
        for p, v in sorted(vectors.items()):
            for q in range(4):
                entries.append(_entry('commutant_' + name, [p], q, mode_product(X, q, v, cap).is_zero()))
    failures = [e for e in entries if not e['pass']]
    return {'n': n, 'checked': len(entries), 'entries': entries, 'failures': failures, 'pass': not failures}


def _coordinates(vectors, keys):
    index = {}
    for v in vectors:
        for key in v.terms:
            index.setdefault(key, len(index))
    for key in keys:
        index.setdefault(key, len(index))
    return index


def _as_column(state, index):
    col = linalg.zeros(len(index))
    for key, c in state.terms.items():
        col[index[key]] = c
    return col


def extract_structure_constants(vectors, pairs=None, cap=None):
    """Griess product and form read off the lattice computation.

    For each ordered pair (p, q) the weight-2 part of w^p_1 w^q is written in the family
    {w^r}, and the form value is the vacuum coefficient of w^p_3 w^q.

    Args:
        vectors (dict): {PairIndex: VOAState}.
        pairs (list): Ordered (p, q) pairs to extract, default all.
        cap (WeightCap): Truncation passed to mode_product.

    Returns:
        dict with 'labels', 'product' {(p, q): coefficient vector or None} and 'form' {(p, q): Fraction}.
        A None product means w^p_1 w^q is not in the span of the family.
    """
    vectors = _normalize(vectors)
    cap = cap if cap is not None else WeightCap()
    labels = sorted(vectors)
    if pairs is None:
        pairs = list(itertools.product(labels, repeat=2))
    product = {}
    form = {}
    for p, q in pairs:
        prod = component(mode_product(vectors[p], 1, vectors[q], cap), 2)
        index = _coordinates([vectors[r] for r in labels], prod.terms)
        A = linalg.zeros_matrix(len(index), len(labels))
        for col, r in enumerate(labels):
            A[:, col] = _as_column(vectors[r], index)
        product[(p, q)] = linalg.solve(A, _as_column(prod, index))
        form[(p, q)] = mode_product(vectors[p], 3, vectors[q], cap).vacuum_coefficient()
    return {'labels': labels, 'product': product, 'form': form}


def compare_with_abstract(vectors, algebra, cap=None):
    """Checks lattice-side structure constants against the tables of a GriessAlgebra.

    The family must be indexed by the pairs of the algebra.

    Returns:
        dict report with one 'product' and one 'form' entry per ordered pair.
    """
    vectors = _normalize(vectors)
    if sorted(vectors) != list(algebra.pairs):
        raise InvalidParameterError('family indexed by {} pairs, algebra has {}'.format(len(vectors), algebra.dim))
    extracted = extract_structure_constants(vectors, cap=cap)
    labels = extracted['labels']
    entries = []
    for (p, q), coeffs in sorted(extracted['product'].items()):
        expected = algebra.product(algebra.basis_vector(p), algebra.basis_vector(q))
        ok = coeffs is not None and linalg.equal(
            [coeffs[labels.index(r)] for r in algebra.pairs], expected.coefficients)
        entries.append(_entry('product', [p, q], 1, ok))
        form_ok = extracted['form'][(p, q)] == algebra.form(algebra.basis_vector(p), algebra.basis_vector(q))
        entries.append(_entry('form', [p, q], 3, form_ok))
    failures = [e for e in entries if not e['pass']]
    return {'n': algebra.n, 'm': algebra.m, 'checked': len(entries), 'entries': entries,
            'failures': failures, 'pass': not failures}
