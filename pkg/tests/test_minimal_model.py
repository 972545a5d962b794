from fractions import Fraction

import pytest

from griesskit.errors import InvalidParameterError
from griesskit.minimal import (KacLabel, central_charge, conformal_weight, fusion_dim, fusion_table,
                               is_admissible, kac_labels, kac_reflection, kac_table, module_class,
                               top_weight, weight)


def cls(m, r, s):
    return module_class(KacLabel(m, r, s))


def test_central_charges():
    assert central_charge(1) == Fraction(1, 2)
    assert central_charge(2) == Fraction(7, 10)
    assert central_charge(3) == Fraction(4, 5)


def test_central_charge_is_m_m5_form():
    for m in range(1, 13):
        assert central_charge(m) == Fraction(m * (m + 5), (m + 2) * (m + 3))


def test_tricritical_weight():
    assert conformal_weight(KacLabel(2, 3, 1)) == Fraction(3, 2)


def test_ising_kac_table():
    table = kac_table(1)
    assert [(str(c), h) for c, h in table] == [('(1,1)', 0), ('(1,2)', Fraction(1, 16)), ('(1,3)', Fraction(1, 2))]


@pytest.mark.parametrize("m", range(1, 13))
def test_kac_symmetry_and_class_count(m):
    for label in kac_labels(m):
        assert conformal_weight(label) == conformal_weight(kac_reflection(label))
        assert module_class(label) == module_class(kac_reflection(label))
    table = kac_table(m)
    assert len(table) == (m + 1) * (m + 2) // 2
    weights = [h for _, h in table]
    assert len(set(weights)) == len(weights)


@pytest.mark.parametrize("m", range(1, 13))
def test_top_weight_is_maximal(m):
    assert top_weight(m) == Fraction(m * (m + 1), 4)
    assert top_weight(m) == conformal_weight(KacLabel(m, m + 1, 1))
    assert max(h for _, h in kac_table(m)) == top_weight(m)


def test_canonical_label_is_smallest():
    c = cls(1, 2, 3)
    assert c.canonical == KacLabel(1, 1, 1)
    assert weight(c) == 0


@pytest.mark.parametrize("args", [(0, 1, 1), (1, 3, 1), (1, 1, 4), (2, 0, 1)])
def test_invalid_labels(args):
    with pytest.raises(InvalidParameterError):
        KacLabel(*args)


def test_invalid_m():
    with pytest.raises(InvalidParameterError):
        central_charge(0)
    with pytest.raises(InvalidParameterError):
        kac_table(-1)


def test_admissibility_rules():
    assert is_admissible((1, 2), (1, 2), (1, 1), 1)
    assert not is_admissible((1, 2), (1, 2), (1, 2), 1)
    assert is_admissible((2, 1), (2, 1), (1, 1), 1)
    # r-sum 6 is even
    assert not is_admissible((2, 1), (2, 1), (2, 1), 1)
    with pytest.raises(InvalidParameterError):
        is_admissible((3, 1), (1, 1), (1, 1), 1)


def test_ising_fusion_rules():
    one, sigma, eps = cls(1, 1, 1), cls(1, 1, 2), cls(1, 1, 3)
    classes = [one, sigma, eps]

    def products(a, b):
        return {c for c in classes if fusion_dim(a, b, c)}

    assert products(sigma, sigma) == {one, eps}
    assert products(sigma, eps) == {sigma}
    assert products(eps, eps) == {one}
    assert products(one, sigma) == {sigma}
    assert len(fusion_table(1)) == 10


@pytest.mark.parametrize("m", range(1, 9))
def test_top_module_fuses_to_vacuum_only(m):
    top = cls(m, m + 1, 1)
    vacuum = cls(m, 1, 1)
    for c, _ in kac_table(m):
        assert fusion_dim(top, top, c) == (1 if c == vacuum else 0)


def test_fusion_mixed_m():
    with pytest.raises(InvalidParameterError):
        fusion_dim(cls(1, 1, 1), cls(2, 1, 1), cls(1, 1, 1))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5] + [pytest.param(m, marks=pytest.mark.slow) for m in (6, 7, 8)])
def test_vacuum_is_unit_and_fusion_commutes(m):
    classes = [c for c, _ in kac_table(m)]
    vacuum = cls(m, 1, 1)
    for b in classes:
        for c in classes:
            assert fusion_dim(vacuum, b, c) == (1 if b == c else 0)
    table = set(fusion_table(m))
    for a, b, c in table:
        assert (b, a, c) in table
