from fractions import Fraction

import pytest

from fusionring.errors import InputError, NotPrequantizableError, ResourceError
from fusionring.fusion import (
    FusionElement,
    basis_element,
    brane_quantize,
    fuse,
    fusion_coefficient,
    fusion_sum,
    fusion_table,
    su2_fusion_oracle,
    unit,
)
from fusionring.rootdata import build_root_datum, enumerate_level_weights
from fusionring.tensor import tensor_decompose

A1 = build_root_datum("A1")
A2 = build_root_datum("A2")


def test_su2_level4_spin_one_squared():
    assert fuse(A1, 4, [2], [2]).as_dict() == {(0,): 1, (2,): 1, (4,): 1}


def test_su3_examples():
    assert fuse(A2, 2, [1, 0], [1, 0]).as_dict() == {(0, 1): 1, (2, 0): 1}
    assert fuse(A2, 1, [1, 0], [1, 0]).as_dict() == {(0, 1): 1}


def test_level_zero():
    assert fuse(A1, 0, [0], [0]).as_dict() == {(0,): 1}


@pytest.mark.parametrize("k", range(1, 7))
def test_su2_against_oracle(k):
    for a in range(k + 1):
        for b in range(k + 1):
            got = fuse(A1, k, [a], [b]).as_dict()
            for c in range(k + 1):
                assert got.get((c,), 0) == su2_fusion_oracle(Fraction(a, 2), Fraction(b, 2), Fraction(c, 2), k)


def test_large_level_recovers_tensor_product():
    d = build_root_datum("B2")
    for lam, mu in [([1, 0], [0, 1]), ([1, 1], [0, 2])]:
        assert fuse(d, 20, lam, mu).as_dict() == tensor_decompose(d, lam, mu).as_dict()


def test_out_of_level_weight_rejected():
    with pytest.raises(InputError):
        fuse(A2, 1, [1, 1], [0, 0])
    with pytest.raises(InputError):
        fuse(A1, -1, [0], [0])


def test_element_arithmetic():
    k = 3
    x = basis_element(A1, k, [1])
    y = basis_element(A1, k, [2])
    assert (x * y).as_dict() == {(1,): 1, (3,): 1}
    assert (x + y - y).as_dict() == x.as_dict()
    assert (2 * x).coefficient([1]) == 2
    assert unit(A1, k) * x == x
    assert fusion_sum([x, y, x]).as_dict() == {(1,): 2, (2,): 1}
    assert not (x - x)


def test_level_mismatch():
    with pytest.raises(InputError, match="level mismatch"):
        basis_element(A1, 2, [1]) * basis_element(A1, 3, [1])
    with pytest.raises(InputError):
        basis_element(A1, 2, [1]) + basis_element(A2, 2, [1, 0])


def test_from_mapping_validates():
    with pytest.raises(InputError):
        FusionElement.from_mapping(A1, 2, {(3,): 1})


def test_table_lookup_and_cap(monkeypatch):
    t = fusion_table(A2, 1)
    idx = {w: i for i, w in enumerate(t.basis)}
    look = t.lookup()
    assert look[(idx[(1, 0)], idx[(1, 0)], idx[(0, 1)])] == 1
    assert all(i <= j for i, j, _, _ in t.coefficients)
    monkeypatch.setenv("FUSIONRING_MAX_BASIS", "5")
    with pytest.raises(ResourceError):
        fusion_table(A2, 3)


def test_brane_quantize():
    assert brane_quantize(A2, 2, [1, 1]) == basis_element(A2, 2, [1, 1])
    with pytest.raises(NotPrequantizableError):
        brane_quantize(A2, 1, [1, 1])
    with pytest.raises(NotPrequantizableError):
        brane_quantize(A2, 3, [-1, 2])


def test_fusion_coefficient_symmetric_under_conjugation():
    d = build_root_datum("A3")
    k = 2
    basis = enumerate_level_weights(d, k)
    conj = lambda w: tuple(reversed(w))
    for lam in basis:
        for mu in basis:
            for nu in basis:
                assert fusion_coefficient(d, k, lam, mu, nu) == fusion_coefficient(d, k, conj(lam), conj(mu), conj(nu))
