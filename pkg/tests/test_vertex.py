from fractions import Fraction

import pytest

from griesskit.errors import UnsupportedShapeError
from griesskit.lattice import (LatticeVector, VOAState, WeightCap, component, exp_vertex_mode, heisenberg_apply,
                               homogeneous_components, ising_vector, mode_product, quadratic_mode, weight)

N = 3
A1 = (1, 0, 0)


def vac():
    return VOAState.vacuum(N)


def creation(h, k, v):
    return heisenberg_apply(h, -k, v)


@pytest.fixture
def gamma():
    return LatticeVector.root(N, 1, 2)


def test_exp_mode_to_vacuum(gamma):
    assert exp_vertex_mode(gamma, 3, VOAState.exp(-gamma)) == vac()


def test_exp_mode_first_descendant(gamma):
    g = gamma.direction()
    assert exp_vertex_mode(gamma, 2, VOAState.exp(-gamma)) == creation(g, 1, vac())


def test_exp_mode_second_descendant(gamma):
    g = gamma.direction()
    expected = Fraction(1, 2) * (creation(g, 1, creation(g, 1, vac())) + creation(g, 2, vac()))
    assert exp_vertex_mode(gamma, 1, VOAState.exp(-gamma)) == expected


def test_exp_mode_high_modes_vanish(gamma):
    assert exp_vertex_mode(gamma, 4, VOAState.exp(-gamma)).is_zero()
    assert exp_vertex_mode(gamma, 0, VOAState.exp(gamma)).is_zero()


def test_quadratic_double_contraction():
    h, h2, h3, h4 = (1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 0, 1)
    v = creation(h3, 1, creation(h4, 1, vac()))
    # (h|h3)(h2|h4) + (h|h4)(h2|h3) = 2*2 + 2*6
    scale = 16
    assert quadratic_mode(h, h2, 3, v) == scale * vac()


def test_quadratic_on_vacuum():
    h, h2 = (1, 0, 0), (0, 1, 0)
    assert quadratic_mode(h, h2, 0, vac()).is_zero()
    assert quadratic_mode(h, h2, -1, vac()) == creation(h, 1, creation(h2, 1, vac()))
    expected = creation(h, 2, creation(h2, 1, vac())) + creation(h, 1, creation(h2, 2, vac()))
    assert quadratic_mode(h, h2, -2, vac()) == expected


def test_heisenberg_virasoro_vector():
    w = Fraction(1, 4) * creation(A1, 1, creation(A1, 1, vac()))
    assert mode_product(w, 1, w) == 2 * w
    assert mode_product(w, 3, w) == Fraction(1, 2) * vac()


def test_linear_and_vacuum_shapes():
    h = creation(A1, 1, vac())
    assert mode_product(h, 1, h) == 2 * vac()
    assert mode_product(vac(), -1, h) == h
    assert mode_product(vac(), 0, h).is_zero()


def test_unsupported_shapes():
    with pytest.raises(UnsupportedShapeError):
        mode_product(creation(A1, 2, vac()), 1, vac())
    with pytest.raises(UnsupportedShapeError):
        mode_product(creation(A1, 1, VOAState.exp(LatticeVector.unit(N, 1))), 1, vac())


def test_grading():
    w = ising_vector(1, 2, N)
    for p in range(0, 4):
        out = mode_product(w, p, w)
        if not out.is_zero():
            assert weight(out) == 3 - p
    assert weight(mode_product(w, 0, w)) == 3


def test_truncation_soundness():
    u, v = ising_vector(1, 2, N), ising_vector(2, 3, N)
    for p in range(-1, 4):
        low = homogeneous_components(mode_product(u, p, v, WeightCap(4)))
        high = homogeneous_components(mode_product(u, p, v, WeightCap(6)))
        assert {w: s for w, s in high.items() if w <= 3} == {w: s for w, s in low.items() if w <= 3}


def test_weight_two_products_commute():
    u, v = ising_vector(1, 2, N), ising_vector(1, 3, N)
    x = u + Fraction(1, 3) * ising_vector(2, 3, N)
    assert component(mode_product(u, 1, v), 2) == component(mode_product(v, 1, u), 2)
    assert component(mode_product(x, 1, v), 2) == component(mode_product(v, 1, x), 2)
