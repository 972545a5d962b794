from fractions import Fraction

import pytest

from griesskit import griess, lattice
from griesskit.errors import InvalidParameterError
from griesskit.griess import pair_index
from griesskit.lattice import VOAState, mode_product, weight


def vac(n=3):
    return VOAState.vacuum(n)


def test_ising_vector_shape():
    w = lattice.ising_vector(1, 2, 3)
    assert weight(w) == 2
    assert len(w) == 5
    assert lattice.ising_vector(2, 1, 3) == w
    with pytest.raises(InvalidParameterError):
        lattice.ising_vector(2, 2, 3)
    with pytest.raises(InvalidParameterError):
        lattice.ising_vector(1, 4, 3)


def test_ising_relations_by_hand(ising3):
    w12, w13, w23 = ising3[pair_index(1, 2)], ising3[pair_index(1, 3)], ising3[pair_index(2, 3)]
    assert mode_product(w12, 1, w12) == 2 * w12
    assert mode_product(w12, 3, w12) == Fraction(1, 4) * vac()
    assert mode_product(w12, 1, w23) == Fraction(1, 4) * (w12 + w23 - w13)
    assert weight(mode_product(w12, 0, w12)) == 3


def test_disjoint_ising_vectors(ising4):
    w12, w34 = ising4[pair_index(1, 2)], ising4[pair_index(3, 4)]
    for p in range(4):
        assert mode_product(w12, p, w34).is_zero()


def test_ma2_conformal_vector(ising3):
    w = lattice.ma2_conformal()
    assert mode_product(w, 1, w) == 2 * w
    assert mode_product(w, 3, w) == Fraction(3, 5) * vac()
    assert mode_product(w, 1, ising3[pair_index(1, 2)]) == 2 * ising3[pair_index(1, 2)]
    with pytest.raises(InvalidParameterError):
        lattice.ma2_conformal(4)
    with pytest.raises(InvalidParameterError):
        lattice.tilde_vector(1, 2, 4)


def test_tilde_vectors(tilde3):
    t12, t23 = tilde3[pair_index(1, 2)], tilde3[pair_index(2, 3)]
    assert mode_product(t12, 1, t12) == 2 * t12
    assert mode_product(t12, 3, t12) == Fraction(7, 20) * vac()
    assert mode_product(t12, 3, t23) == Fraction(21, 160) * vac()


def test_verify_relations_ising3(ising3):
    report = lattice.verify_relations(ising3, 1)
    assert report['pass'], report['failures']
    assert {e['relation'] for e in report['entries']} == {
        'virasoro', 'norm', 'adjacent_product', 'adjacent_form', 'eigenvector'}


def test_verify_relations_ising4(ising4):
    report = lattice.verify_relations(ising4, 1)
    assert report['pass'], report['failures']
    assert any(e['relation'] == 'disjoint' for e in report['entries'])


def test_verify_relations_tilde(tilde3):
    report = lattice.verify_relations(tilde3, 2)
    assert report['pass'], report['failures']


def test_wrong_parameters_fail_as_data(ising3):
    report = lattice.verify_relations(ising3, 2)
    assert not report['pass']
    assert report['failures']


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_verify_relations_large_n(n):
    report = lattice.verify_relations(lattice.ising_family(n), 1)
    assert report['pass'], report['failures']


@pytest.mark.parametrize("family,n,m", [('ising3', 3, 1), ('ising4', 4, 1), ('tilde3', 3, 2)])
def test_compare_with_abstract(request, family, n, m):
    vectors = request.getfixturevalue(family)
    report = lattice.compare_with_abstract(vectors, griess.build(n, m))
    assert report['pass'], report['failures']


def test_compare_needs_matching_family(ising3):
    with pytest.raises(InvalidParameterError):
        lattice.compare_with_abstract(ising3, griess.build(4, 1))


def test_extracted_constants_are_symmetric(ising3):
    data = lattice.extract_structure_constants(ising3)
    for (p, q), coeffs in data['product'].items():
        assert list(coeffs) == list(data['product'][(q, p)])
        assert data['form'][(p, q)] == data['form'][(q, p)]


def test_commutant_check(ising3):
    report = lattice.commutant_check(ising3)
    assert report['pass'], report['failures']


def test_non_commutant_vector_is_detected():
    h = lattice.heisenberg_apply((1, 0, 0), -1, lattice.heisenberg_apply((1, 0, 0), -1, vac()))
    report = lattice.commutant_check({(1, 2): h}, n=3)
    assert not report['pass']
