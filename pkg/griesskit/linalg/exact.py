#!/usr/bin/env python
"""Exact vector and matrix operations over the rationals.

Vectors and matrices are numpy arrays with dtype=object holding Fractions, so
numpy's broadcasting and matmul run on exact Python arithmetic. Rank, nullspace
and determinants are delegated to sympy's DomainMatrix over QQ.
"""

from fractions import Fraction

import numpy as np
from sympy import QQ, Matrix
from sympy.polys.matrices import DomainMatrix

from griesskit.errors import InvalidParameterError
from griesskit.utils.utils import to_fraction


def vector(entries):
    """Builds an exact vector.

    Args:
        entries (iterable): Values convertible to Fraction.

    Returns:
        A 1-d object array of Fractions.
    """
    return np.array([to_fraction(x) for x in entries], dtype=object)

def zeros(n):
    return np.array([Fraction(0)] * n, dtype=object)

def zeros_matrix(rows, cols=None):
    cols = rows if cols is None else cols
    M = np.empty((rows, cols), dtype=object)
    M.fill(Fraction(0))
    return M

def identity(n):
    M = zeros_matrix(n)
    for i in range(n):
        M[i, i] = Fraction(1)
    return M

def matrix(rows):
    """Builds an exact matrix from nested lists."""
    rows = [[to_fraction(x) for x in row] for row in rows]
    if not rows:
        return zeros_matrix(0)
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise InvalidParameterError('ragged matrix rows')
    M = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            M[i, j] = x
    return M

def dot(x1, x2):
    """Finds the dot product of two exact vectors.

    Args:
        x1 (ndarray): The first input vector.
        x2 (ndarray): The second input vector.

    Returns:
        The dot product of x1 and x2 as a Fraction.
    """
    if len(x1) != len(x2):
        raise InvalidParameterError('dimension mismatch: {} vs {}'.format(len(x1), len(x2)))
    return sum((a * b for a, b in zip(x1, x2)), Fraction(0))

def bilinear(x1, G, x2):
    """Evaluates the bilinear form x1^T G x2.

    Args:
        x1 (ndarray): Left vector.
        G (ndarray): Gram matrix of the form.
        x2 (ndarray): Right vector.

    Returns:
        The value as a Fraction.
    """
    return dot(x1, G.dot(x2))

def matmul(A, B):
    if A.shape[-1] != B.shape[0]:
        raise InvalidParameterError('dimension mismatch: {} vs {}'.format(A.shape, B.shape))
    return A.dot(B)

def is_zero(A):
    return all(x == 0 for x in np.asarray(A, dtype=object).flat)

def equal(A, B):
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    return A.shape == B.shape and all(a == b for a, b in zip(A.flat, B.flat))

def is_symmetric(M):
    M = np.asarray(M, dtype=object)
    return M.ndim == 2 and M.shape[0] == M.shape[1] and equal(M, M.T)

def _to_domain(M):
    M = np.asarray(M, dtype=object)
    rows = [[QQ(int(x.numerator), int(x.denominator)) for x in map(to_fraction, row)] for row in M]
    return DomainMatrix(rows, M.shape, QQ)

def rank(M):
    """Exact rank of a rational matrix."""
    M = np.asarray(M, dtype=object)
    if M.size == 0:
        return 0
    return int(_to_domain(M).rank())

def det(M):
    """Exact determinant (fraction-free elimination inside sympy's DomainMatrix).

    Args:
        M (ndarray): Square rational matrix.

    Returns:
        The determinant as a Fraction; the empty matrix has determinant 1.
    """
    M = np.asarray(M, dtype=object)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidParameterError('determinant of a non-square matrix {}'.format(M.shape))
    if M.shape[0] == 0:
        return Fraction(1)
    return to_fraction(_to_domain(M).det())

def leading_minors(M):
    """All leading principal minors of a square matrix, smallest first."""
    M = np.asarray(M, dtype=object)
    return [det(M[:k, :k]) for k in range(1, M.shape[0] + 1)]

def nullspace(M):
    """Exact basis of the right nullspace.

    Args:
        M (ndarray): Rational matrix.

    Returns:
        A list of 1-d object arrays spanning {x : M x = 0}.
    """
    M = np.asarray(M, dtype=object)
    basis = Matrix(M.tolist()).nullspace()
    return [vector(list(v)) for v in basis]

def solve(A, b):
    """Unique exact solution of A x = b, or None when the system is inconsistent.

    Args:
        A (ndarray): Rational matrix with independent columns.
        b (ndarray): Right-hand side.

    Returns:
        A 1-d object array, or None.
    """
    A = np.asarray(A, dtype=object)
    try:
        sol, params = Matrix(A.tolist()).gauss_jordan_solve(Matrix([to_fraction(x) for x in b]))
    except ValueError:
        return None
    if params.shape[0]:
        raise InvalidParameterError('solve needs independent columns')
    return vector(list(sol))
