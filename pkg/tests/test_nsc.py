import itertools
from fractions import Fraction

import numpy as np
import pytest

from fusionring.center import center_action, orbits, parse_group_spec, partition_by_character
from fusionring.errors import InputError, UnsupportedError
from fusionring.fusion import fuse, fusion_coefficient
from fusionring.modular import modular_data
from fusionring.nsc import (
    ModularInvariant,
    check_modular_invariance,
    classify_irreps,
    free_orbit_fusion,
    free_orbit_product,
    free_orbits,
    invariance_defects,
    modular_invariant,
    quantize_orbit,
    virasoro_character,
)
from fusionring.rootdata import enumerate_level_weights

_, SO3 = parse_group_spec("A1/Z2")
_, PSU3 = parse_group_spec("A2/Z3")


def _summary(labels):
    return [(lab.orbit.members, lab.stabilizer_order, lab.rho_index) for lab in labels]


def test_so3_level4():
    assert _summary(classify_irreps(SO3, 4, 0)) == [
        (((0,), (4,)), 1, ()),
        (((2,),), 2, (0,)),
        (((2,),), 2, (1,)),
    ]


def test_so3_level6_odd_character():
    assert _summary(classify_irreps(SO3, 6, 1)) == [
        (((1,), (5,)), 1, ()),
        (((3,),), 2, (0,)),
        (((3,),), 2, (1,)),
    ]


def test_psu3_level3_trivial_character():
    labels = classify_irreps(PSU3, 3, 0)
    assert len(labels) == 4
    fixed = [lab for lab in labels if lab.stabilizer_order == 3]
    assert [lab.rho_index for lab in fixed] == [(0,), (1,), (2,)]
    # rho_m sends the generator to m/3 of a turn
    assert [lab.rho.values[1] for lab in fixed] == [0, Fraction(1, 3), Fraction(2, 3)]


def test_classify_requires_extension():
    with pytest.raises(UnsupportedError):
        classify_irreps(SO3, 3, 0)
    with pytest.raises(InputError):
        classify_irreps(SO3, 4, 2)


@pytest.mark.parametrize("spec,levels", [("A1/Z2", range(0, 9, 2)), ("A2/Z3", (0, 3, 6)), ("A3/Z4", (4, 8)), ("D4/Z2xZ2", (2, 4))])
def test_counting(spec, levels):
    _, cd = parse_group_spec(spec)
    for k in levels:
        total = 0
        for _, chi in cd.characters():
            labels = classify_irreps(cd, k, chi)
            sharing = {}
            for lab in labels:
                sharing[lab.orbit] = sharing.get(lab.orbit, 0) + 1
            # a fixed orbit carries |Z_lam| labels
            assert all(n == len(o.stabilizer) for o, n in sharing.items())
            total += sum(Fraction(len(lab.orbit), sharing[lab.orbit]) for lab in labels)
        assert total == len(enumerate_level_weights(cd.ambient, k))


def test_virasoro_character():
    labels = classify_irreps(SO3, 4, 0)
    assert virasoro_character(labels[0]).as_dict() == {(0,): 1, (4,): 1}
    assert virasoro_character(labels[1]) == virasoro_character(labels[2])
    assert virasoro_character(labels[1]).as_dict() == {(2,): 1}


def test_free_orbit_fusion_examples():
    assert free_orbit_fusion(SO3, 6, [2], [2], [2]) == 2
    assert free_orbit_fusion(SO3, 6, [2], [2], [0]) == 1
    zero = orbits(SO3, 6)[0]
    for o in free_orbits(SO3, 6, 0):
        for p in free_orbits(SO3, 6, 0):
            assert free_orbit_fusion(SO3, 6, zero, o, p) == int(o == p)


def test_fixed_point_fusion_refused():
    with pytest.raises(UnsupportedError, match="fixed-point"):
        free_orbit_fusion(SO3, 4, [2], [0], [2])


@pytest.mark.parametrize("cd,levels", [(SO3, range(1, 9)), (PSU3, (3, 6))])
def test_orbit_symmetry(cd, levels):
    d = cd.ambient
    for k in levels:
        basis = enumerate_level_weights(d, k)
        act = {(z, w): center_action(cd, k, z, w) for z in range(cd.order) for w in basis}
        for lam, mu in itertools.product(basis, repeat=2):
            base = fuse(d, k, lam, mu).as_dict()
            for z1, z2 in itertools.product(range(cd.order), repeat=2):
                moved = fuse(d, k, act[z1, lam], act[z2, mu]).as_dict()
                z = cd.mul(z1, z2)
                assert {act[z, nu]: n for nu, n in base.items()} == moved


@pytest.mark.parametrize("cd,k", [(SO3, 8), (PSU3, 6), (SO3, 10)])
def test_representative_independence(cd, k):
    free = [o for o in orbits(cd, k) if o.is_free]
    for a, b, c in itertools.product(free, repeat=3):
        values = {
            free_orbit_fusion(cd, k, x, y, w) for x in a.members for y in b.members for w in c.members
        }
        assert len(values) == 1


@pytest.mark.parametrize("cd,k", [(SO3, 8), (PSU3, 6)])
def test_free_sector_ring_axioms(cd, k):
    free = free_orbits(cd, k, 0)
    zero = next(o for o in free if (0,) * cd.ambient.rank in o.members)
    for a in free:
        assert free_orbit_product(cd, k, {zero: 1}, {a: 1}) == {a: 1}
    for a, b in itertools.product(free, repeat=2):
        assert free_orbit_product(cd, k, {a: 1}, {b: 1}) == free_orbit_product(cd, k, {b: 1}, {a: 1})
    for a, b, c in itertools.product(free, repeat=3):
        left = free_orbit_product(cd, k, free_orbit_product(cd, k, {a: 1}, {b: 1}), {c: 1})
        right = free_orbit_product(cd, k, {a: 1}, free_orbit_product(cd, k, {b: 1}, {c: 1}))
        assert left == right


def test_so3_invariant_level4():
    mi = modular_invariant(SO3, 4)
    expected = np.zeros((5, 5), dtype=int)
    expected[np.ix_([0, 4], [0, 4])] = 1
    expected[2, 2] = 2
    assert np.array_equal(mi.M, expected)
    assert check_modular_invariance(mi, modular_data(SO3.ambient, 4))


@pytest.mark.parametrize("spec,k", [("A1/Z2", 8), ("A2/Z3", 3), ("A2/Z3", 6), ("A3/Z4", 8), ("A3/Z2", 4), ("D4/Z2xZ2", 2), ("D4/Z2{s}", 2), ("C3/Z2", 4), ("B3/Z2", 2)])
def test_invariant_properties(spec, k):
    d, cd = parse_group_spec(spec)
    mi = modular_invariant(cd, k)
    m = mi.M
    assert m[0, 0] == 1
    assert (m >= 0).all()
    assert np.array_equal(m, m.T)
    assert check_modular_invariance(mi, modular_data(d, k))
    index = {w: i for i, w in enumerate(mi.basis)}
    orbit_of = {}
    for o in orbits(cd, k):
        for w in o.members:
            orbit_of[w] = o
    for i, j in zip(*np.nonzero(m)):
        assert orbit_of[mi.basis[i]] is orbit_of[mi.basis[j]]
    for o in partition_by_character(cd, k)[cd.characters()[0][1]]:
        block = m[np.ix_([index[w] for w in o.members], [index[w] for w in o.members])]
        assert (block.sum(axis=1) == len(o.stabilizer) * len(o.members)).all()


def test_invariant_requires_multiplicative_level():
    with pytest.raises(UnsupportedError):
        modular_invariant(SO3, 6)
    with pytest.raises(UnsupportedError):
        modular_invariant(PSU3, 4)


def test_invariance_check_rejects_non_symmetries():
    md = modular_data(SO3.ambient, 4)
    ident = ModularInvariant(SO3, 4, md.basis, np.eye(5, dtype=int))
    assert check_modular_invariance(ident, md)
    perm = np.eye(5, dtype=int)[[1, 0, 2, 3, 4]]
    assert not check_modular_invariance(ModularInvariant(SO3, 4, md.basis, perm), md)
    assert invariance_defects(perm, md)[0] > 1e-3
    with pytest.raises(InputError):
        check_modular_invariance(ident, modular_data(SO3.ambient, 2))


def test_quantize_orbit_identity():
    labels = classify_irreps(PSU3, 6, 0)
    for lab in labels:
        assert quantize_orbit(PSU3, 6, 0, lab) is lab
    unit_label = next(lab for lab in labels if (0, 0) in lab.orbit.members)
    assert virasoro_character(quantize_orbit(PSU3, 6, 0, unit_label)).coefficient([0, 0]) == 1
    with pytest.raises(InputError):
        quantize_orbit(PSU3, 6, 1, unit_label)


def test_free_fusion_equals_orbit_sum():
    # summing N over the target orbit gives the same number as summing over the center
    k = 8
    d = SO3.ambient
    free = free_orbits(SO3, k, 0) + free_orbits(SO3, k, 1)
    for a, b, c in itertools.product(free, repeat=3):
        direct = sum(fusion_coefficient(d, k, a.representative, b.representative, w) for w in c.members)
        assert free_orbit_fusion(SO3, k, a, b, c) == direct
