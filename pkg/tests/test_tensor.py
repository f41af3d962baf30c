import pytest
from hypothesis import given, settings, strategies as st

from fusionring.errors import InputError
from fusionring.rootdata import build_root_datum, conjugate_weight, weyl_dim
from fusionring.tensor import tensor_decompose, weight_multiplicity


def test_a2_fundamental_times_antifundamental():
    d = build_root_datum("A2")
    assert tensor_decompose(d, [1, 0], [0, 1]).as_dict() == {(0, 0): 1, (1, 1): 1}


def test_a2_adjoint_zero_weight():
    assert weight_multiplicity(build_root_datum("A2"), [1, 1], [0, 0]) == 2


def test_g2_seven_squared():
    d = build_root_datum("G2")
    dec = tensor_decompose(d, [1, 0], [1, 0]).as_dict()
    assert sorted(weyl_dim(d, w) for w in dec) == [1, 7, 14, 27]


@pytest.mark.parametrize("a,b", [(0, 0), (1, 1), (2, 3), (4, 1), (5, 5)])
def test_su2_clebsch_gordan(a, b):
    d = build_root_datum("A1")
    expected = {(c,): 1 for c in range(abs(a - b), a + b + 1, 2)}
    assert tensor_decompose(d, [a], [b]).as_dict() == expected


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2", "A3", "C3"]), st.data())
def test_dimensions_multiply(name, data):
    d = build_root_datum(name)
    lam = data.draw(st.lists(st.integers(0, 2), min_size=d.rank, max_size=d.rank))
    mu = data.draw(st.lists(st.integers(0, 2), min_size=d.rank, max_size=d.rank))
    dec = tensor_decompose(d, lam, mu)
    assert sum(weyl_dim(d, w) * m for w, m in dec.components) == weyl_dim(d, lam) * weyl_dim(d, mu)
    assert dec.as_dict() == tensor_decompose(d, mu, lam).as_dict()
    # the trivial module occurs exactly when mu is dual to lam
    assert dec.as_dict().get((0,) * d.rank, 0) == int(tuple(mu) == conjugate_weight(d, lam))


def test_non_dominant_rejected():
    with pytest.raises(InputError):
        tensor_decompose(build_root_datum("A2"), [-1, 0], [0, 0])
    with pytest.raises(InputError):
        tensor_decompose(build_root_datum("A2"), [1], [0, 0])
