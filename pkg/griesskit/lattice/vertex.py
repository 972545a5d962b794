#!/usr/bin/env python
"""Modes u_p of a few vertex operators on V_L.

Y(u, z) = sum_p u_p z^{-p-1}. Supported left factors u:

* e^gamma:             Y = E^-(gamma, z) E^+(gamma, z) e_gamma z^{gamma(0)}, cocycle 1
* h(-1) h'(-1) 1:      Y = :h(z) h'(z):
* h(-1) 1:             Y = h(z), so (h(-1) 1)_p = h(p)
* 1:                   1_p = delta_{p,-1}

Every pairing in L is even, so the constant cocycle is a valid choice.
"""

import logging
from fractions import Fraction

from griesskit.errors import InvalidParameterError, UnsupportedShapeError
from griesskit.lattice.fock import (VACUUM_MONOMIAL, VOAState, WeightCap, fock_weight, heisenberg_apply, mode,
                                    term_weight, truncate)

log = logging.getLogger(__name__)


def _as_cap(cap):
    if cap is None:
        return WeightCap()
    if isinstance(cap, WeightCap):
        return cap
    return WeightCap(cap)


def _annihilation_series(direction, u, depth):
    """[S_0 u, ..., S_depth u] with E^+(gamma, z) = sum_N S_N z^{-N}.

    S_N = (1/N) sum_{k=1..N} -gamma(k) S_{N-k}.
    """
    series = [u]
    for N in range(1, depth + 1):
        acc = VOAState.zero(u.n)
        for k in range(1, N + 1):
            prev = series[N - k]
            if not prev.is_zero():
                acc = acc - heisenberg_apply(direction, k, prev)
        series.append(acc * Fraction(1, N))
    return series


def _creation_series(direction, w, depth):
    """[T_0 w, ..., T_depth w] with E^-(gamma, z) = sum_A T_A z^A.

    T_A = (1/A) sum_{k=1..A} gamma(-k) T_{A-k}.
    """
    series = [w]
    for A in range(1, depth + 1):
        acc = VOAState.zero(w.n)
        for k in range(1, A + 1):
            acc = acc + heisenberg_apply(direction, -k, series[A - k])
        series.append(acc * Fraction(1, A))
    return series


def exp_vertex_mode(gamma, p, v, cap=None):
    """(e^gamma)_p v, the coefficient of z^{-p-1} in Y(e^gamma, z) v.

    On a term u (x) e^delta this is sum_B T_A S_B (u (x) e^{gamma+delta}) with
    A = B - (gamma|delta) - p - 1 >= 0, where S_B lowers the Heisenberg weight by B.

    Args:
        gamma (LatticeVector): Lattice point of the left factor.
        p (int): Mode index.
        v (VOAState): Right factor.
        cap (WeightCap): Terms of output weight above the cap are skipped.

    Returns:
        VOAState
    """
    cap = _as_cap(cap)
    if gamma.n != v.n:
        raise InvalidParameterError('lattice ranks {} and {}'.format(gamma.n, v.n))
    direction = gamma.direction()
    out = VOAState.zero(v.n)
    for (mon, delta), c in v.terms.items():
        out_weight = Fraction(gamma.norm(), 2) + term_weight(mon, delta) - p - 1
        if not cap.admits(out_weight):
            continue
        shift = gamma.pairing(delta)
        u = VOAState(v.n, {(mon, gamma + delta): c})
        lowered = _annihilation_series(direction, u, mon.weight())
        for B, piece in enumerate(lowered):
            A = B - shift - p - 1
            if A < 0 or piece.is_zero():
                continue
            out = out + _creation_series(direction, piece, A)[A]
    return out


def quadratic_mode(h, h2, p, v):
    """(h(-1) h2(-1) 1)_p v.

    Applies sum_{k<0} h(k) h2(p-1-k) + sum_{k>=0} h2(p-1-k) h(k); only the finite range
    p-1-fw <= k <= fw contributes, fw being the Heisenberg weight of v.
    """
    fw = fock_weight(v)
    out = VOAState.zero(v.n)
    for k in range(p - 1 - fw, 0):
        inner = mode(h2, p - 1 - k, v)
        if not inner.is_zero():
            out = out + mode(h, k, inner)
    for k in range(0, fw + 1):
        inner = mode(h, k, v)
        if not inner.is_zero():
            out = out + mode(h2, p - 1 - k, inner)
    return out


def linear_mode(h, p, v):
    """(h(-1) 1)_p v = h(p) v."""
    return mode(h, p, v)


def _unit(n, i):
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def mode_product(u, p, v, cap=None):
    """u_p v for u a combination of the supported shapes, extended bilinearly.

    Args:
        u (VOAState): Left factor.
        p (int): Mode index.
        v (VOAState): Right factor.
        cap (WeightCap): Weight truncation, default 4.

    Returns:
        VOAState truncated above the cap.

    Raises:
        UnsupportedShapeError: If a term of u is not e^gamma, a(-1) b(-1) 1, a(-1) 1 or 1.
    """
    cap = _as_cap(cap)
    if u.n != v.n:
        raise InvalidParameterError('lattice ranks {} and {}'.format(u.n, v.n))
    n = v.n
    out = VOAState.zero(n)
    for (mon, gamma), c in u.items():
        if mon == VACUUM_MONOMIAL:
            if gamma.is_zero():
                piece = v if p == -1 else VOAState.zero(n)
            else:
                piece = exp_vertex_mode(gamma, p, v, cap)
        elif not gamma.is_zero():
            raise UnsupportedShapeError('Heisenberg factors on e^gamma with gamma != 0 are not supported')
        elif all(k == 1 for k, _ in mon.factors) and len(mon) == 2:
            (_, i), (_, j) = mon.factors
            piece = quadratic_mode(_unit(n, i), _unit(n, j), p, v)
        elif all(k == 1 for k, _ in mon.factors) and len(mon) == 1:
            (_, i), = mon.factors
            piece = linear_mode(_unit(n, i), p, v)
        else:
            raise UnsupportedShapeError('unsupported left factor {}'.format(mon.to_json(n)))
        out = out + c * piece
    return truncate(out, cap)
