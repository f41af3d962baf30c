"""Weight multiplicities and tensor-product decomposition of finite-dimensional modules.

Multiplicities come from Freudenthal's recursion over the dominant weights of
``V_lam``; tensor products from the Racah-Speiser reflection of
``lam + (weights of V_mu) + rho`` into the dominant chamber.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import InputError, ResourceError
from .rootdata import (
    RootDatum,
    Weight,
    as_weight,
    dominant_representative,
    is_dominant,
    weyl_dim,
    weyl_orbit,
)

MAX_MODULE_DIM = 10**6


@dataclass(frozen=True)
class WeightSystem:
    base: Weight
    dominant: tuple[tuple[Weight, int], ...]

    @property
    def multiplicities(self) -> dict[Weight, int]:
        return dict(self.dominant)


@dataclass(frozen=True)
class TensorDecomposition:
    factors: tuple[Weight, Weight]
    components: tuple[tuple[Weight, int], ...]

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.components)


def _dominant(d: RootDatum, lam: Weight) -> Weight:
    lam = as_weight(d, lam)
    if not is_dominant(lam):
        raise InputError(f"expected a dominant weight, got {list(lam)}")
    return lam


def _dominant_weights_below(d: RootDatum, lam: Weight) -> list[Weight]:
    # every dominant mu < lam is reachable through dominant weights by subtracting positive roots
    roots = d.positive_root_labels
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a in roots:
            nu = Weight(x - y for x, y in zip(mu, a))
            if nu not in seen and is_dominant(nu):
                seen.add(nu)
                stack.append(nu)
    return list(seen)


def _depth(d: RootDatum, diff) -> int:
    # height of lam - mu in simple-root coordinates: labels = A n
    inv = d.inverse_cartan
    n = d.rank
    return int(sum(inv[i][j] * diff[j] for i in range(n) for j in range(n)))


@lru_cache(maxsize=2048)
def _weight_system(d: RootDatum, lam: Weight) -> WeightSystem:
    dim = weyl_dim(d, lam)
    if dim > MAX_MODULE_DIM:
        raise ResourceError(f"module {list(lam)} of {d} has dimension {dim} > {MAX_MODULE_DIM}")
    doms = _dominant_weights_below(d, lam)
    doms.sort(key=lambda mu: _depth(d, [a - b for a, b in zip(lam, mu)]))
    q = d.int_form  # scaled form; the recursion is scale invariant
    rho = np.array(d.rho)
    roots = [np.array(a, dtype=np.int64) for a in d.positive_root_labels]

    def norm_shift(v):
        x = np.asarray(v, dtype=np.int64) + rho
        return int(x @ q @ x)

    top = norm_shift(lam)
    mult: dict[Weight, int] = {lam: 1}
    for mu in doms:
        if mu == lam:
            continue
        denom = top - norm_shift(mu)
        acc = 0
        m_arr = np.array(mu, dtype=np.int64)
        for a in roots:
            aq = q @ a
            j = 1
            while True:
                nu = m_arr + j * a
                rep = dominant_representative(d, nu)
                mnu = mult.get(rep, 0)
                if mnu == 0:
                    break
                acc += mnu * int(nu @ aq)
                j += 1
        num = 2 * acc
        if num % denom:
            raise ArithmeticError(f"non-integral Freudenthal step at {list(mu)}")
        m = num // denom
        if m:
            mult[mu] = m
    dominant = tuple(sorted(mult.items()))
    return WeightSystem(base=lam, dominant=dominant)


def weight_system(d: RootDatum, lam) -> WeightSystem:
    """Dominant weights of ``V_lam`` with their multiplicities."""
    return _weight_system(d, _dominant(d, lam))


@lru_cache(maxsize=2048)
def _all_weights(d: RootDatum, lam: Weight) -> tuple[np.ndarray, np.ndarray]:
    pts = []
    mults = []
    for mu, m in _weight_system(d, lam).dominant:
        orb = weyl_orbit(d, mu)
        pts.extend(orb)
        mults.extend([m] * len(orb))
    pts_arr = np.array(pts, dtype=np.int64).reshape(len(pts), d.rank)
    mult_arr = np.array(mults, dtype=np.int64)
    pts_arr.setflags(write=False)
    mult_arr.setflags(write=False)
    return pts_arr, mult_arr


def all_weights(d: RootDatum, lam) -> tuple[np.ndarray, np.ndarray]:
    """Every weight of ``V_lam`` (rows) with multiplicities."""
    return _all_weights(d, _dominant(d, lam))


def weight_multiplicity(d: RootDatum, lam, mu) -> int:
    """Multiplicity of the weight ``mu`` in ``V_lam``.

    >>> from fusionring.rootdata import build_root_datum
    >>> weight_multiplicity(build_root_datum("A2"), [1, 1], [0, 0])
    2
    """
    lam = _dominant(d, lam)
    mu = as_weight(d, mu)
    rep = dominant_representative(d, mu)
    return _weight_system(d, lam).multiplicities.get(rep, 0)


def fold(d: RootDatum, lam: Weight, mu: Weight, shifted_level: int) -> dict[Weight, int]:
    """Signed reflection of ``lam + wt(V_mu) + rho``.

    ``shifted_level < 0`` reduces into the dominant chamber (classical tensor
    product); otherwise into the alcove of level ``shifted_level`` (fusion).
    """
    pts, mults = _all_weights(d, mu)
    shifted = pts + np.asarray(lam, dtype=np.int64) + 1
    out, signs = kernels.reflect_batch(shifted, d.simple_root_array, d.theta_array, d.comark_array, shifted_level)
    acc: dict[tuple, int] = defaultdict(int)
    keep = signs != 0
    out = out[keep] - 1
    weights = (signs * mults)[keep]
    for row, w in zip(out.tolist(), weights.tolist()):
        acc[tuple(row)] += w
    return {Weight(k): v for k, v in acc.items() if v}


@lru_cache(maxsize=8192)
def _tensor(d: RootDatum, lam: Weight, mu: Weight) -> TensorDecomposition:
    # fold over the smaller factor
    a, b = (lam, mu) if weyl_dim(d, lam) >= weyl_dim(d, mu) else (mu, lam)
    comps = fold(d, a, b, -1)
    if any(v < 0 for v in comps.values()):
        raise ArithmeticError("negative tensor multiplicity")
    return TensorDecomposition(factors=(lam, mu), components=tuple(sorted(comps.items())))


def tensor_decompose(d: RootDatum, lam, mu) -> TensorDecomposition:
    """Decompose ``V_lam (x) V_mu`` into irreducibles.

    >>> from fusionring.rootdata import build_root_datum
    >>> tensor_decompose(build_root_datum("A1"), [1], [1]).as_dict()
    {Weight([0]): 1, Weight([2]): 1}
    """
    return _tensor(d, _dominant(d, lam), _dominant(d, mu))
