#!/usr/bin/env python
"""Miyamoto involutions of V_2 and the group they generate."""

import itertools
import logging
from collections import deque

from griesskit import linalg
from griesskit.errors import InvalidParameterError, SizeLimitError
from griesskit.griess.algebra import LinearEndo, pair_index

log = logging.getLogger(__name__)

MAX_CLOSURE_N = 8
MAX_MATRIX_CLOSURE = 50000


def identity(algebra):
    return LinearEndo(linalg.identity(algebra.dim))


def compose(f, g):
    """f o g (apply g first)."""
    if f.dim != g.dim:
        raise InvalidParameterError('cannot compose maps of size {} and {}'.format(f.dim, g.dim))
    return f @ g


def is_involution(f):
    return (f @ f).is_identity()


def permutation_endo(algebra, perm):
    """The map w^{ij} -> w^{perm(i) perm(j)} induced by a permutation of 1..n.

    Args:
        algebra (GriessAlgebra): The ambient algebra.
        perm (sequence or dict): perm[k-1] (or perm[k]) is the image of index k.

    Returns:
        The LinearEndo permuting the w-basis.
    """
    n = algebra.n
    if isinstance(perm, dict):
        images = [perm.get(k, k) for k in range(1, n + 1)]
    else:
        images = list(perm)
    if sorted(images) != list(range(1, n + 1)):
        raise InvalidParameterError('{!r} is not a permutation of 1..{}'.format(perm, n))
    M = linalg.zeros_matrix(algebra.dim)
    for col, p in enumerate(algebra.pairs):
        M[algebra.index(pair_index(images[p.i - 1], images[p.j - 1])), col] = 1
    return LinearEndo(M)


def miyamoto(algebra, p):
    """sigma^{ij}: fixes w^{ij} and the w^{kl} disjoint from {i,j}, swaps w^{il} <-> w^{jl}.

    This is the action of the transposition (i j) on index pairs.
    """
    p = p if not isinstance(p, tuple) else pair_index(*p)
    algebra.index(p)
    return permutation_endo(algebra, {p.i: p.j, p.j: p.i})


def sign_on_eigenspaces(algebra, p):
    """Checks sigma^p against its eigenspace description.

    sigma^p must be +1 on the 0- and 2-eigenspaces of ad(w^p) and -1 on the
    alpha-eigenspace.

    Returns:
        True when every eigenvector is mapped to +-itself as required.
    """
    sigma = miyamoto(algebra, p)
    signs = [(2, 1), (algebra.alpha, -1), (0, 1)]
    for lam, sign in signs:
        for v in algebra.eigenspace(p, lam):
            if sigma(v) != sign * v:
                return False
    return True


def is_automorphism(algebra, f):
    """Whether f preserves the product, the form and the conformal vector.

    Args:
        algebra (GriessAlgebra): The ambient algebra.
        f (LinearEndo): Candidate map.

    Returns:
        True iff f(a.b) = f(a).f(b) on all basis pairs, (f a | f b) = (a | b), and f(w) = w.
    """
    if f.dim != algebra.dim:
        raise InvalidParameterError('map of size {} on an algebra of dimension {}'.format(f.dim, algebra.dim))
    F = f.matrix
    G = algebra.gram
    if not linalg.equal(F.T.dot(G).dot(F), G):
        return False
    omega = algebra.conformal_vector()
    if f(omega) != omega:
        return False
    images = [f(algebra.basis_vector(p)) for p in algebra.pairs]
    for a, p in enumerate(algebra.pairs):
        for b in range(a, algebra.dim):
            lhs = f(algebra.product(algebra.basis_vector(p), algebra.basis_vector(algebra.pairs[b])))
            if lhs != algebra.product(images[a], images[b]):
                return False
    return True


def _compose_perm(p1, p2):
    return tuple(p1[p2[i]] for i in range(len(p1)))


def _closure(generators, compose_fn, start, limit=None):
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = compose_fn(s, g)
            if h not in seen:
                seen.add(h)
                queue.append(h)
                if limit is not None and len(seen) > limit:
                    raise SizeLimitError('group closure exceeded {} elements'.format(limit))
    return seen


def generated_group_order(algebra, pairs, max_n=None):
    """Order of the group generated by the sigma^p, p in pairs.

    Each sigma^p permutes the w-basis, so group_order closes over index tuples.

    Args:
        algebra (GriessAlgebra): The ambient algebra.
        pairs (list): Generating PairIndex values (or (i, j) tuples).
        max_n (int): Largest n accepted, defaults to 8.

    Returns:
        The group order as an int.
    """
    max_n = MAX_CLOSURE_N if max_n is None else max_n
    if algebra.n > max_n:
        raise SizeLimitError('group closure limited to n <= {}, got n = {}'.format(max_n, algebra.n))
    return group_order(algebra, [miyamoto(algebra, p) for p in pairs])


def group_order(algebra, maps, limit=MAX_MATRIX_CLOSURE):
    """Order of the group generated by arbitrary invertible LinearEndos of V_2.

    Basis permutations are closed as index tuples; any other generator forces
    closure over exact matrices, capped at limit elements.

    Raises:
        SizeLimitError: If the matrix closure grows past limit.
    """
    for f in maps:
        if f.dim != algebra.dim:
            raise InvalidParameterError('map of size {} on an algebra of dimension {}'.format(f.dim, algebra.dim))
    perms = [f.as_permutation() for f in maps]
    if all(pm is not None for pm in perms):
        group = _closure(perms, _compose_perm, tuple(range(algebra.dim)))
    else:
        group = _closure(maps, compose, identity(algebra), limit=limit)
    log.info('closure of %d generators on n=%d: %d elements', len(maps), algebra.n, len(group))
    return len(group)


def miyamoto_relations(algebra):
    """Checks sigma^{ij} sigma^{kl} = sigma^{kl} sigma^{ij} (disjoint) and sigma^{ij} sigma^{jk} sigma^{ij} = sigma^{ik}.

    Returns:
        dict with the number of instances checked per relation and the failing instances.
    """
    sigma = {p: miyamoto(algebra, p) for p in algebra.pairs}
    checked = {'commute': 0, 'braid': 0}
    failures = []
    for p, q in itertools.combinations(algebra.pairs, 2):
        if p.as_set() & q.as_set():
            continue
        checked['commute'] += 1
        if sigma[p] @ sigma[q] != sigma[q] @ sigma[p]:
            failures.append({'relation': 'commute', 'pairs': [str(p), str(q)]})
    for i, j, k in itertools.permutations(range(1, algebra.n + 1), 3):
        checked['braid'] += 1
        a, b, c = pair_index(i, j), pair_index(j, k), pair_index(i, k)
        if sigma[a] @ sigma[b] @ sigma[a] != sigma[c]:
            failures.append({'relation': 'braid', 'pairs': [str(a), str(b)]})
    return {'n': algebra.n, 'checked': checked, 'failures': failures, 'pass': not failures}
