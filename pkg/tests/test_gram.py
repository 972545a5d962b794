from fractions import Fraction

import pytest

from griesskit import linalg, positivity
from griesskit.errors import InvalidParameterError
from griesskit.minimal import central_charge

FAST_S = [(s, m) for s in range(3, 6) for m in range(1, 5)]
FULL_S = [(s, m) for s in range(3, 9) for m in range(1, 11)]


def test_gram_n3_m1():
    G = positivity.gram_matrix(3, 1)
    for i in range(3):
        for j in range(3):
            assert G[i, j] == (Fraction(1, 4) if i == j else Fraction(1, 32))


@pytest.mark.parametrize("m", range(1, 7))
def test_gram_n3_shape(m):
    f = central_charge(m)
    q = Fraction(m * (m + 1), 16)
    G = positivity.gram_matrix(3, m)
    expected = linalg.matrix([[1, q, q], [q, 1, q], [q, q, 1]]) * (f / 2)
    assert linalg.equal(G, expected)


def test_gram_disjoint_entries_vanish():
    G = positivity.gram_matrix(4, 2)
    # pairs in order 12, 13, 14, 23, 24, 34
    assert G[0, 5] == 0 and G[1, 4] == 0 and G[2, 3] == 0


def test_sylvester():
    assert positivity.is_positive_definite(linalg.identity(3))
    assert not positivity.is_positive_definite(linalg.matrix([[1, 2], [2, 1]]))
    with pytest.raises(InvalidParameterError):
        positivity.is_positive_definite(linalg.matrix([[1, 2], [0, 1]]))
    assert positivity.is_positive_definite(positivity.gram_matrix(3, 3))
    assert not positivity.is_positive_definite(positivity.gram_matrix(3, 4))


def test_b_matrix_entries():
    assert linalg.equal(positivity.B_matrix(3, 1), linalg.matrix([['7/16']]))
    m = 3
    f = central_charge(m)
    B = positivity.B_matrix(5, m)
    assert B[0, 0] == f * (1 - Fraction(m * (m + 1), 16))
    assert B[0, 1] == Fraction(m * m * (m + 1) * (m + 5), 16 * (m + 2) * (m + 3))


@pytest.mark.parametrize("m", range(1, 6))
def test_detb_s3(m):
    f = central_charge(m)
    assert positivity.detB_closed(3, m) == f * (1 - Fraction(m * (m + 1), 16))


def test_small_s_rejected():
    with pytest.raises(InvalidParameterError):
        positivity.B_matrix(2, 1)
    with pytest.raises(InvalidParameterError):
        positivity.detC_closed(2, 1)


def check_determinants(s, m):
    assert linalg.equal(positivity.B_matrix(s, m), positivity.B_matrix_from_form(s, m))
    assert linalg.equal(positivity.C_matrix(s, m), positivity.C_matrix_from_form(s, m))
    assert positivity.detB_closed(s, m) == linalg.det(positivity.B_matrix(s, m))
    assert positivity.detC_closed(s, m) == linalg.det(positivity.C_matrix(s, m))


@pytest.mark.parametrize("s,m", FAST_S)
def test_closed_determinants(s, m):
    check_determinants(s, m)


@pytest.mark.slow
@pytest.mark.parametrize("s,m", FULL_S)
def test_closed_determinants_full_grid(s, m):
    check_determinants(s, m)


def test_classify_n3():
    assert positivity.classify(3, 10) == [(m, m <= 3) for m in range(1, 11)]


@pytest.mark.parametrize("n", [4, 5])
def test_classify_n_ge_4(n):
    assert positivity.classify(n, 6) == [(m, m <= 2) for m in range(1, 7)]


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7, 8])
def test_classify_large_n(n):
    assert positivity.classify(n, 10) == [(m, m <= 2) for m in range(1, 11)]


def test_classify_bad_m_max():
    with pytest.raises(InvalidParameterError):
        positivity.classify(3, 0)


@pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (5, 3), (6, 2)])
def test_decomposition(n, m):
    basis = positivity.decomposition_basis(n, m)
    assert len(basis['U2']) == (n - 2) * (n - 3) // 2
    assert len(basis['B']) == len(basis['C']) == n - 2
    assert positivity.decomposition_spans(n, m)
    assert positivity.mixed_blocks_vanish(n, m)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(3, 6) for m in range(1, 6)])
def test_block_verdict_matches_sylvester(n, m):
    assert positivity.block_verdict(n, m) == positivity.is_positive_definite(positivity.gram_matrix(n, m))


def test_gram_report():
    report = positivity.gram_report(4, 1)
    assert report.outside_hypothesis
    assert report.positive_definite and report.block_verdict
    assert report.determinants_agree
    data = report.to_json()
    assert data['gram'][0][0] == '1/4'
    assert len(data['detB_closed']) == 2
    assert not positivity.gram_report(4, 3).positive_definite
    assert not positivity.gram_report(4, 2).outside_hypothesis
