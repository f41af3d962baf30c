"""Level-k representations of loop groups of non-simply-connected ``G = G~/Z``.

Irreducibles at a level where the central extension exists are labelled by a
Z-orbit in ``Lambda_{k,chi}^*`` together with a character of its stabilizer.
Fusion is only computed between free orbits; fixed-point coefficients are
refused.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .center import (
    CenterCharacter,
    CenterDatum,
    Orbit,
    center_action,
    extension_exists,
    basic_level,
    multiplicative_level,
    orbit_of,
    partition_by_character,
)
from .errors import InputError, UnsupportedError
from .fusion import FusionElement, fusion_coefficient
from .modular import ModularData
from .rootdata import RootDatum, Weight, check_level_weight, enumerate_level_weights

__all__ = [
    "IrrepLabel",
    "ModularInvariant",
    "classify_irreps",
    "virasoro_character",
    "free_orbit_fusion",
    "free_orbits",
    "free_orbit_product",
    "modular_invariant",
    "check_modular_invariance",
    "quantize_orbit",
    "resolve_character",
    "invariance_defects",
]


@dataclass(frozen=True)
class IrrepLabel:
    """An orbit plus a character ``rho`` of its stabilizer.

    ``rho_index`` holds the exponents of ``rho`` on the stabilizer's
    generators (``()`` for a free orbit); ``rho.values`` is aligned with
    ``orbit.stabilizer``.
    """

    datum: RootDatum
    level: int
    orbit: Orbit
    rho_index: tuple[int, ...]
    rho: CenterCharacter

    @property
    def stabilizer_order(self) -> int:
        return len(self.orbit.stabilizer)


@dataclass(frozen=True, eq=False)
class ModularInvariant:
    center: CenterDatum
    level: int
    basis: tuple[Weight, ...]
    M: np.ndarray

    @property
    def datum(self) -> RootDatum:
        return self.center.ambient


def resolve_character(cd: CenterDatum, chi: Union[CenterCharacter, int, Sequence[int]]) -> CenterCharacter:
    """Accept a character object or its label (``m`` for cyclic Z, ``(m1, m2)`` for Z2xZ2)."""
    if isinstance(chi, CenterCharacter):
        if len(chi.values) != cd.order:
            raise InputError("character does not belong to this group")
        cd.character_label(chi)
        return chi
    return cd.character(chi)


def _require_extension(cd: CenterDatum, k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise InputError(f"level must be a non-negative integer, got {k!r}")
    if not extension_exists(cd, k):
        raise UnsupportedError(
            f"no central extension of the loop group of {cd.label} at level {k}; basic level is {basic_level(cd)}"
        )


def classify_irreps(cd: CenterDatum, k: int, chi) -> list[IrrepLabel]:
    """Irreducible positive-energy representations at level ``k`` with center character ``chi``.

    >>> from fusionring.center import parse_group_spec
    >>> _, cd = parse_group_spec("A1/Z2")
    >>> [(list(map(list, l.orbit.members)), l.rho_index) for l in classify_irreps(cd, 4, 0)]
    [([[0], [4]], ()), ([[2]], (0,)), ([[2]], (1,))]
    """
    _require_extension(cd, k)
    chi = resolve_character(cd, chi)
    out = []
    for orb in partition_by_character(cd, k)[chi]:
        for label, rho in cd.characters(orb.stabilizer):
            idx = label if orb.stabilizer != (0,) else ()
            out.append(IrrepLabel(cd.ambient, k, orb, idx, rho))
    return out


def virasoro_character(label: IrrepLabel) -> FusionElement:
    """The formal sum of the basis characters over the orbit; independent of ``rho``."""
    return FusionElement.from_mapping(label.datum, label.level, {w: 1 for w in label.orbit.members})


def _as_free_orbit(cd: CenterDatum, k: int, x) -> tuple[Orbit, Weight]:
    if isinstance(x, Orbit):
        orb, rep = x, x.representative
    else:
        rep = check_level_weight(cd.ambient, x, k)
        orb = orbit_of(cd, k, rep)
    if not orb.is_free:
        raise UnsupportedError(
            f"fixed-point fusion unsupported: orbit of {list(orb.representative)} has stabilizer of order {len(orb.stabilizer)}"
        )
    return orb, rep


def free_orbit_fusion(cd: CenterDatum, k: int, lam, mu, nu) -> int:
    """``N_{Z lam, Z mu}^{Z nu} = sum_z N_{lam mu}^{z nu}`` for free orbits.

    Arguments are orbits or level-k weights; a weight is used as the orbit's
    representative.
    """
    _require_extension(cd, k)
    _, a = _as_free_orbit(cd, k, lam)
    _, b = _as_free_orbit(cd, k, mu)
    _, c = _as_free_orbit(cd, k, nu)
    d = cd.ambient
    return sum(fusion_coefficient(d, k, a, b, center_action(cd, k, z, c)) for z in range(cd.order))


def free_orbits(cd: CenterDatum, k: int, chi=0) -> list[Orbit]:
    _require_extension(cd, k)
    return [o for o in partition_by_character(cd, k)[resolve_character(cd, chi)] if o.is_free]


def free_orbit_product(cd: CenterDatum, k: int, a: dict[Orbit, int], b: dict[Orbit, int], chi=0) -> dict[Orbit, int]:
    """Product of two integer combinations of free orbits, truncated to the free part of ``chi``."""
    targets = free_orbits(cd, k, chi)
    out: dict[Orbit, int] = {}
    for x, p in a.items():
        for y, q in b.items():
            for o in targets:
                n = free_orbit_fusion(cd, k, x, y, o)
                if n:
                    out[o] = out.get(o, 0) + p * q * n
    return {o: n for o, n in out.items() if n}


def modular_invariant(cd: CenterDatum, k: int) -> ModularInvariant:
    """Simple-current invariant ``M = sum_O |Z_O| 1_O 1_O^T`` over orbits with trivial character.

    >>> from fusionring.center import parse_group_spec
    >>> _, cd = parse_group_spec("A1/Z2")
    >>> modular_invariant(cd, 4).M.tolist()
    [[1, 0, 0, 0, 1], [0, 0, 0, 0, 0], [0, 0, 2, 0, 0], [0, 0, 0, 0, 0], [1, 0, 0, 0, 1]]
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise InputError(f"level must be a non-negative integer, got {k!r}")
    lm = multiplicative_level(cd)
    if k % lm:
        raise UnsupportedError(f"level {k} is not a multiple of the multiplicative level {lm} of {cd.label}")
    basis = tuple(enumerate_level_weights(cd.ambient, k))
    index = {w: i for i, w in enumerate(basis)}
    m = np.zeros((len(basis), len(basis)), dtype=np.int64)
    trivial = cd.characters()[0][1]
    for orb in partition_by_character(cd, k)[trivial]:
        ind = [index[w] for w in orb.members]
        m[np.ix_(ind, ind)] += len(orb.stabilizer)
    m.setflags(write=False)
    return ModularInvariant(cd, k, basis, m)


def check_modular_invariance(mi: ModularInvariant, md: ModularData, tol: float = 1e-8) -> bool:
    if md.datum is not mi.datum or md.level != mi.level or tuple(md.basis) != mi.basis:
        raise InputError("modular invariant and modular data use different bases")
    ds, dt = invariance_defects(mi.M, md)
    return ds < tol and dt < tol


def invariance_defects(m: np.ndarray, md: ModularData) -> tuple[float, float]:
    """``(max|MS - SM|, max|MT - TM|)``."""
    if m.shape != md.S.shape:
        raise InputError("matrix shape does not match the modular data")
    ds = np.max(np.abs(m @ md.S - md.S @ m)) if m.size else 0.0
    dt = np.max(np.abs(m @ md.T - md.T @ m)) if m.size else 0.0
    return float(ds), float(dt)


def quantize_orbit(cd: CenterDatum, k: int, chi, label: IrrepLabel) -> IrrepLabel:
    """Quantization of the coadjoint-orbit brane labelled by ``label``: the label itself."""
    if label not in classify_irreps(cd, k, chi):
        raise InputError("label is not an irreducible of this sector")
    return label
