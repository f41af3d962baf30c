"""Center of the simply connected group, its subgroups, and their action on level-k weights.

Center elements are classes of coweights modulo the coroot lattice; each
non-trivial class is represented by the special fundamental coweight of a
node whose mark in the highest root is 1.  The element ``z`` acts on
``Lambda_k^*`` by the affine Weyl element "apply ``omega_z``, then translate by
``k lambda_z^vee``".
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from importlib import resources
from itertools import product
from math import lcm
from typing import Sequence

import numpy as np

from .errors import InputError, UnsupportedError
from .rootdata import (
    Coweight,
    RootDatum,
    Weight,
    as_weight,
    build_root_datum,
    check_level_weight,
    coweight_as_weight,
    coweight_form,
    enumerate_level_weights,
    inner_product,
    is_dominant,
    level_of,
    longest_element_word,
    reduce_to_dominant_word,
    weight_coweight_pairing,
    word_to_matrix,
)

__all__ = [
    "CenterDatum",
    "CenterCharacter",
    "Orbit",
    "center_group",
    "subgroup",
    "center_action",
    "character_of_weight",
    "partition_by_character",
    "orbits",
    "basic_level",
    "multiplicative_level",
    "fundamental_level",
    "extension_exists",
    "integrality_level",
    "orbit_of",
    "parse_group_spec",
]


@dataclass(frozen=True)
class CenterCharacter:
    """Homomorphism ``Z -> U(1)`` stored as turn fractions in ``[0, 1)``, one per element."""

    values: tuple[Fraction, ...]

    def __call__(self, index: int) -> Fraction:
        return self.values[index]

    @property
    def is_trivial(self) -> bool:
        return not any(self.values)


@dataclass(frozen=True)
class Orbit:
    representative: Weight
    members: tuple[Weight, ...]
    stabilizer: tuple[int, ...]

    @property
    def is_free(self) -> bool:
        return len(self.stabilizer) == 1

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.members


def _coroot_coordinates(d: RootDatum, c: Sequence[int]) -> tuple[Fraction, ...]:
    # lambda_j^vee = sum_m (A^-1)_{jm} alpha_m^vee
    inv = d.inverse_cartan
    n = d.rank
    return tuple(sum((c[j] * inv[j][m] for j in range(n)), Fraction(0)) for m in range(n))


def _class_key(d: RootDatum, c: Sequence[int]) -> tuple[Fraction, ...]:
    return tuple(x % 1 for x in _coroot_coordinates(d, c))


def _reduced_word(d: RootDatum, m: np.ndarray) -> tuple[int, ...]:
    image = m @ np.array(d.rho, dtype=np.int64)
    applied, final = reduce_to_dominant_word(d, image)
    assert tuple(final) == tuple(d.rho)
    return tuple(applied)


@lru_cache(maxsize=None)
def _omega_word(d: RootDatum, node: int) -> tuple[int, ...]:
    """Reduced word of the Weyl element fixing ``Delta + {-theta}`` and sending ``-theta`` to ``alpha_node``."""
    others = [i for i in range(d.rank) if i != node]
    m = word_to_matrix(d, longest_element_word(d, others)) @ word_to_matrix(d, longest_element_word(d))
    return _reduced_word(d, m)


@dataclass(frozen=True, eq=False)
class CenterDatum:
    """A subgroup ``Z`` of the center, as an explicit finite abelian group.

    ``elements[0]`` is the identity.  ``special_nodes[z]`` is the node ``i(z)``
    (``None`` for the identity) and ``weyl_words[z]`` a reduced word for
    ``omega_{i(z)}``.
    """

    ambient: RootDatum
    name: str
    elements: tuple[Coweight, ...]
    table: tuple[tuple[int, ...], ...]
    special_nodes: tuple[int | None, ...]
    weyl_words: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def label(self) -> str:
        return f"{self.ambient}/{self.name}"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element_order(self, z: int) -> int:
        x, n = z, 1
        while x != 0:
            x = self.mul(x, z)
            n += 1
        return n

    def inverse(self, z: int) -> int:
        return next(y for y in range(self.order) if self.mul(z, y) == 0)

    @cached_property
    def weyl_matrices(self) -> tuple[np.ndarray, ...]:
        return tuple(word_to_matrix(self.ambient, w) for w in self.weyl_words)

    @cached_property
    def translations(self) -> tuple[tuple[int, ...], ...]:
        """Weight coordinates of each special coweight (integral for special nodes)."""
        out = []
        for c in self.elements:
            v = coweight_as_weight(self.ambient, c)
            assert all(x.denominator == 1 for x in v)
            out.append(tuple(int(x) for x in v))
        return tuple(out)

    @cached_property
    def pairings(self) -> tuple[tuple[Fraction, ...], ...]:
        """``pairings[z][i] = <lambda_i, lambda_z^vee>``."""
        d = self.ambient
        return tuple(
            tuple(weight_coweight_pairing(d, [int(i == j) for j in range(d.rank)], c) for i in range(d.rank))
            for c in self.elements
        )

    def generators(self, subset: Sequence[int] | None = None) -> tuple[int, ...]:
        """Independent generators of the subgroup ``subset`` (default: all of Z)."""
        subset = list(range(self.order)) if subset is None else sorted(subset)
        n = len(subset)
        if n == 1:
            return ()
        for z in subset:
            if self.element_order(z) == n:
                return (z,)
        # Z2 x Z2 is the only non-cyclic case
        nontrivial = [z for z in subset if z != 0]
        return (nontrivial[0], nontrivial[1])

    def characters(self, subset: Sequence[int] | None = None) -> list[tuple[tuple[int, ...], CenterCharacter]]:
        """All characters of a subgroup, labelled by their exponents on :meth:`generators`.

        For a cyclic group with generator ``g`` the label ``(m,)`` is the
        character with ``g -> m / |Z|`` turns.  Values are listed in the order
        of ``subset``.
        """
        subset = list(range(self.order)) if subset is None else sorted(subset)
        gens = self.generators(subset)
        orders = [self.element_order(g) for g in gens]
        exps: dict[int, tuple[int, ...]] = {}
        for e in product(*(range(o) for o in orders)):
            x = 0
            for g, k in zip(gens, e):
                for _ in range(k):
                    x = self.mul(x, g)
            exps[x] = e
        assert sorted(exps) == subset
        out = []
        for m in product(*(range(o) for o in orders)):
            vals = tuple(
                sum((Fraction(mi * ei, o) for mi, ei, o in zip(m, exps[z], orders)), Fraction(0)) % 1
                for z in subset
            )
            out.append((tuple(m), CenterCharacter(vals)))
        return out

    def character(self, label: Sequence[int] | int) -> CenterCharacter:
        if isinstance(label, int):
            label = (label,)
        label = tuple(label)
        chars = self.characters()
        if self.order == 1 and label in ((0,), ()):
            return chars[0][1]
        for lab, ch in chars:
            if lab == label:
                return ch
        raise InputError(f"no character {list(label)} of {self.label}")

    def character_label(self, ch: CenterCharacter) -> tuple[int, ...]:
        for lab, c in self.characters():
            if c == ch:
                return lab
        raise InputError("not a character of this group")


def _special_nodes(d: RootDatum) -> list[int]:
    return [i for i, m in enumerate(d.marks) if m == 1]


def _make(d: RootDatum, name: str, reps: list[Coweight]) -> CenterDatum:
    keys = [_class_key(d, c) for c in reps]
    assert len(set(keys)) == len(keys)
    index = {k: i for i, k in enumerate(keys)}
    table = []
    for a in keys:
        row = []
        for b in keys:
            s = tuple((x + y) % 1 for x, y in zip(a, b))
            if s not in index:
                raise InputError(f"elements do not form a subgroup in {d}/{name}")
            row.append(index[s])
        table.append(tuple(row))
    nodes = []
    words = []
    for c in reps:
        if not any(c):
            nodes.append(None)
            words.append(())
        else:
            i = next(j for j, x in enumerate(c) if x)
            nodes.append(i)
            words.append(_omega_word(d, i))
    return CenterDatum(d, name, tuple(reps), tuple(table), tuple(nodes), tuple(words))


def _unit(n: int, i: int) -> Coweight:
    return Coweight(int(j == i) for j in range(n))


@lru_cache(maxsize=None)
def center_group(d: RootDatum) -> CenterDatum:
    """The full center ``Z(G~) = Lambda_w^vee / Lambda_r^vee``.

    Cyclic centers are listed as powers of one generator: the special node
    with the largest index (``lambda_n^vee`` for ``A_n``).  The Klein group of
    ``D_{2m}`` is listed as ``(e, v, s, c)`` with ``v`` on node 1, ``s`` on
    node ``n`` and ``c`` on node ``n - 1``.
    """
    n = d.rank
    special = _special_nodes(d)
    reps = {_class_key(d, _unit(n, i)): _unit(n, i) for i in special}
    zero = Coweight([0] * n)
    order = 1 + len(special)
    if d.type.series == "D" and n % 2 == 0:
        elems = [zero, _unit(n, 0), _unit(n, n - 1), _unit(n, n - 2)]
        return _make(d, "Z2xZ2", elems)
    if order == 1:
        return _make(d, "Z1", [zero])
    g = _unit(n, max(special))
    elems = [zero]
    key = _class_key(d, g)
    acc = key
    while any(acc):
        elems.append(reps[acc])
        acc = tuple((x + y) % 1 for x, y in zip(acc, key))
    assert len(elems) == order
    return _make(d, f"Z{order}", elems)


_ZSPEC_RE = re.compile(r"^Z(\d+)(?:\{([vsc])\})?$|^Z2xZ2$")


def subgroup(cd: CenterDatum, spec: str) -> CenterDatum:
    """Restrict to the subgroup named by ``spec``.

    ``Zn`` names the cyclic subgroup of order n of a cyclic center (``Z1`` is
    trivial); ``Z2{v}``, ``Z2{s}``, ``Z2{c}`` pick one of the order-2 elements
    of ``D_n``; ``Z2xZ2`` is the full center of ``D_{2m}``.
    """
    spec = spec.strip()
    m = _ZSPEC_RE.match(spec)
    if not m:
        raise InputError(f"malformed subgroup spec {spec!r}")
    d = cd.ambient
    if spec == "Z2xZ2":
        if cd.name != "Z2xZ2" or cd.order != 4:
            raise InputError(f"Z2xZ2 is not a subgroup of the center of {d}")
        return cd
    order = int(m.group(1))
    flavour = m.group(2)
    if order == 1:
        return _make(d, "Z1", [cd.elements[0]])
    if flavour is not None:
        if order != 2 or d.type.series != "D":
            raise InputError(f"{spec} only makes sense for D-series groups")
        node = {"v": 0, "s": d.rank - 1, "c": d.rank - 2}[flavour]
        target = _class_key(d, _unit(d.rank, node))
        z = next((i for i, c in enumerate(cd.elements) if _class_key(d, c) == target), None)
        if z is None or cd.element_order(z) != 2:
            raise InputError(f"{spec} is not an order-2 subgroup of the center of {d}")
        return _make(d, spec, [cd.elements[0], cd.elements[z]])
    if cd.name == "Z2xZ2":
        if order == 2:
            raise InputError(f"the center of {d} has three Z2 subgroups; use Z2{{v}}, Z2{{s}} or Z2{{c}}")
        if order == 4:
            raise InputError(f"the center of {d} is Z2xZ2, not Z4")
    if cd.order % order:
        raise InputError(f"{spec} is not a subgroup of the center {cd.name} of {d}")
    step = cd.order // order
    g = 0
    for _ in range(step):
        g = cd.mul(g, 1)
    elems = [cd.elements[0]]
    x = g
    while x != 0:
        elems.append(cd.elements[x])
        x = cd.mul(x, g)
    name = f"Z{order}"
    return _make(d, name, elems)


def _check_element(cd: CenterDatum, z: int) -> None:
    if not 0 <= z < cd.order:
        raise InputError(f"no element {z} in {cd.label}")


def _act(cd: CenterDatum, k: int, z: int, lam: Sequence[int]) -> Weight:
    m = cd.weyl_matrices[z]
    t = cd.translations[z]
    img = m @ np.asarray(lam, dtype=np.int64)
    return Weight(int(x) + k * y for x, y in zip(img, t))


def center_action(cd: CenterDatum, k: int, z: int, lam) -> Weight:
    """``z . lam`` for ``lam`` in ``Lambda_k^*``.

    >>> d = build_root_datum("A2")
    >>> cd = center_group(d)
    >>> center_action(cd, 3, 2, [1, 0])  # z = [lambda_1^vee]
    Weight([2, 1])
    """
    d = cd.ambient
    lam = check_level_weight(d, lam, k)
    _check_element(cd, z)
    out = _act(cd, k, z, lam)
    if not is_dominant(out) or level_of(d, out) > k:
        raise ArithmeticError(f"center action left the level-{k} alcove: {list(lam)} -> {list(out)}")
    return out


def character_of_weight(cd: CenterDatum, lam) -> CenterCharacter:
    """``z -> <lam, lambda_z^vee>`` modulo 1."""
    lam = as_weight(cd.ambient, lam)
    return CenterCharacter(
        tuple(sum((p * x for p, x in zip(row, lam) if x), Fraction(0)) % 1 for row in cd.pairings)
    )


@lru_cache(maxsize=256)
def _orbits(cd: CenterDatum, k: int) -> tuple[Orbit, ...]:
    basis = enumerate_level_weights(cd.ambient, k)
    seen: set[Weight] = set()
    out = []
    for lam in basis:
        if lam in seen:
            continue
        images = [center_action(cd, k, z, lam) for z in range(cd.order)]
        members = tuple(sorted(set(images)))
        stab = tuple(z for z, w in enumerate(images) if w == lam)
        assert len(members) * len(stab) == cd.order
        seen.update(members)
        out.append(Orbit(members[0], members, stab))
    return tuple(out)


def orbits(cd: CenterDatum, k: int) -> list[Orbit]:
    """All Z-orbits in ``Lambda_k^*``, ordered by representative."""
    if not isinstance(k, int) or k < 0:
        raise InputError(f"level must be a non-negative integer, got {k!r}")
    return list(_orbits(cd, k))


def orbit_of(cd: CenterDatum, k: int, lam) -> Orbit:
    lam = check_level_weight(cd.ambient, lam, k)
    for o in _orbits(cd, k):
        if lam in o.members:
            return o
    raise AssertionError("weight missing from orbit decomposition")


def partition_by_character(cd: CenterDatum, k: int) -> dict[CenterCharacter, list[Orbit]]:
    """Group the orbits of ``Lambda_k^*`` by the character of ``Z`` they induce.

    Every character of ``Z`` appears as a key, in label order, possibly with
    an empty list.  The character is only constant on orbits when
    ``k <.,.>`` is integral on ``Lambda_Z^vee``; other levels are refused.
    """
    if not isinstance(k, int) or k < 0:
        raise InputError(f"level must be a non-negative integer, got {k!r}")
    if k % integrality_level(cd):
        raise UnsupportedError(
            f"characters are not constant on {cd.label} orbits at level {k}; "
            f"use a multiple of {integrality_level(cd)}"
        )
    out: dict[CenterCharacter, list[Orbit]] = {ch: [] for _, ch in cd.characters()}
    for o in orbits(cd, k):
        chars = {character_of_weight(cd, w) for w in o.members}
        if len(chars) != 1:
            raise ArithmeticError(f"character not constant on orbit {o}")
        out[chars.pop()].append(o)
    return out


def _smallest_multiple(conditions: list[tuple[Fraction, int]]) -> int:
    """Smallest l >= 1 with ``l * q`` divisible by ``m`` for all ``(q, m)``."""
    l = 1
    for q, m in conditions:
        q = Fraction(q) / m
        l = lcm(l, q.denominator)
    return l


def basic_level(cd: CenterDatum) -> int:
    """Smallest level admitting the central extension of the loop group of ``G~/Z``.

    The commutator of the lifted discontinuous loops must be an alternating
    bicharacter on ``Lambda_Z^vee`` restricting to ``(-1)^{l <x, y>}`` when one
    argument is a coroot.  With independent generators ``g_a`` of orders
    ``m_a`` this holds exactly when ``l m_a <g_a, g_a>`` is even and
    ``l lcm(m_a, m_b) <g_a, g_b>`` is an integer.
    """
    d = cd.ambient
    gens = cd.generators()
    conds: list[tuple[Fraction, int]] = []
    for a in gens:
        ga = cd.elements[a]
        conds.append((cd.element_order(a) * coweight_form(d, ga, ga), 2))
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            m = lcm(cd.element_order(a), cd.element_order(b))
            conds.append((m * coweight_form(d, cd.elements[a], cd.elements[b]), 1))
    return _smallest_multiple(conds)


def integrality_level(cd: CenterDatum) -> int:
    """Smallest ``l`` making ``l <.,.>`` integral on ``Lambda_Z^vee`` (for comparison)."""
    d = cd.ambient
    conds = [(coweight_form(d, a, b), 1) for a in cd.elements for b in cd.elements]
    return _smallest_multiple(conds)


def multiplicative_level(cd: CenterDatum) -> int:
    """Smallest ``k >= 1`` with ``(k/2) <lambda_z, lambda_z> in Z`` for every ``z`` in ``Z``."""
    d = cd.ambient
    conds = []
    for node in cd.special_nodes:
        if node is None:
            continue
        w = [int(j == node) for j in range(d.rank)]
        conds.append((inner_product(d, w, w), 2))
    return _smallest_multiple(conds)


@lru_cache(maxsize=1)
def _fundamental_table() -> dict[tuple[str, str], dict]:
    raw = json.loads(resources.files("fusionring").joinpath("data/fundamental_levels.json").read_text())
    return {(e["group"], e["subgroup"]): e for e in raw["entries"]}


def fundamental_level(cd: CenterDatum) -> int:
    """Curated lookup; raises :class:`UnsupportedError` for pairs not in the table."""
    if cd.order == 1:
        return 1
    entry = _fundamental_table().get((str(cd.ambient), cd.name))
    if entry is None:
        raise UnsupportedError(f"unknown fundamental level for {cd.label}")
    return int(entry["fundamental_level"])


def extension_exists(cd: CenterDatum, k: int) -> bool:
    """True iff the loop group of ``G~/Z`` has a central extension at level ``k``."""
    if not isinstance(k, int) or k < 0:
        raise InputError(f"level must be a non-negative integer, got {k!r}")
    return k % basic_level(cd) == 0


_GROUP_RE = re.compile(r"^\s*([A-Ga-g]\s*\d+)\s*(?:/\s*([^,\s]+))?\s*(,\s*-)?\s*$")


def parse_group_spec(text: str) -> tuple[RootDatum, CenterDatum]:
    """Parse ``SERIES RANK [/ ZSPEC]``.  Without a quotient the subgroup is trivial.

    The non-canonical ``,-`` extension of ``Spin(4n)/(Z2xZ2)`` is refused.
    """
    m = _GROUP_RE.match(text)
    if not m:
        raise InputError(f"malformed group spec {text!r}")
    d = build_root_datum(m.group(1).replace(" ", ""))
    full = center_group(d)
    if m.group(3):
        raise UnsupportedError(f"the twisted extension of {text.strip()} is not supported")
    zspec = m.group(2)
    cd = subgroup(full, zspec) if zspec else subgroup(full, "Z1")
    return d, cd


def weight_from_coweight_translation(cd: CenterDatum, z: int) -> Weight:
    return Weight(cd.translations[z])
