from fractions import Fraction

import pytest

from griesskit import linalg
from griesskit.errors import InvalidParameterError


def test_det_rank_minors():
    M = linalg.matrix([[2, 1], [1, 2]])
    assert linalg.det(M) == 3
    assert linalg.rank(M) == 2
    assert linalg.leading_minors(M) == [2, 3]
    assert linalg.rank(linalg.matrix([[1, 2], [2, 4]])) == 1
    assert linalg.det(linalg.zeros_matrix(0)) == 1


def test_det_exact_rationals():
    M = linalg.matrix([['1/2', '1/3'], ['1/4', '1/5']])
    assert linalg.det(M) == Fraction(1, 10) - Fraction(1, 12)


def test_nullspace_and_solve():
    M = linalg.matrix([[1, 1, 0], [0, 0, 1]])
    (v,) = linalg.nullspace(M)
    assert linalg.is_zero(M.dot(v))
    A = linalg.matrix([[1, 0], [0, 2], [1, 1]])
    assert list(linalg.solve(A, linalg.vector([1, 4, 3]))) == [1, 2]
    assert linalg.solve(A, linalg.vector([1, 4, 0])) is None


def test_errors():
    with pytest.raises(InvalidParameterError):
        linalg.det(linalg.zeros_matrix(2, 3))
    with pytest.raises(InvalidParameterError):
        linalg.dot(linalg.vector([1]), linalg.vector([1, 2]))
    with pytest.raises(InvalidParameterError):
        linalg.matrix([[1], [1, 2]])


def test_bilinear():
    G = linalg.identity(2) * 2
    x = linalg.vector([1, '1/2'])
    assert linalg.bilinear(x, G, x) == Fraction(5, 2)
    assert linalg.is_symmetric(G)
