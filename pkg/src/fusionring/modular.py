"""Kac-Peterson modular data and the Verlinde-formula cross-check.

Pairings are evaluated exactly and reduced modulo the period before the
exponential is taken; floating point enters only in the final phases.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import InputError, ResourceError
from .rootdata import (
    MAX_WEYL_ORDER,
    RootDatum,
    Weight,
    check_level_weight,
    conjugate_weight,
    enumerate_level_weights,
    inner_product,
    weyl_group_matrices,
)

INTEGRALITY_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class ModularData:
    datum: RootDatum
    level: int
    basis: tuple[Weight, ...]
    S: np.ndarray
    T: np.ndarray
    c: Fraction
    h: dict[Weight, Fraction]
    t_phase: tuple[Fraction, ...]

    def index(self, w) -> int:
        return self._index[Weight(w)]

    @property
    def _index(self) -> dict[Weight, int]:
        return {w: i for i, w in enumerate(self.basis)}

    def conjugation_matrix(self) -> np.ndarray:
        n = len(self.basis)
        idx = self._index
        c = np.zeros((n, n))
        for i, w in enumerate(self.basis):
            c[i, idx[conjugate_weight(self.datum, w)]] = 1
        return c


def central_charge(d: RootDatum, k: int) -> Fraction:
    """Virasoro central charge ``k dim G / (k + h^vee)``; 0 at level 0."""
    if not isinstance(k, int) or k < 0:
        raise InputError(f"level must be a non-negative integer, got {k!r}")
    return Fraction(k * d.dim_g, k + d.dual_coxeter)


def conformal_weight(d: RootDatum, k: int, lam) -> Fraction:
    """``h_lam = <lam, lam + 2 rho> / (2 (k + h^vee))``."""
    lam = check_level_weight(d, lam, k)
    shifted = [x + 2 for x in lam]
    return inner_product(d, lam, shifted) / (2 * (k + d.dual_coxeter))


@lru_cache(maxsize=64)
def modular_data(d: RootDatum, k: int, max_weyl: int = MAX_WEYL_ORDER) -> ModularData:
    """S and T matrices over the lexicographically ordered level-k basis.

    S is the alternating Weyl sum with its normalisation fixed by unitarity
    and ``S_00 > 0``.
    """
    if not isinstance(k, int) or k < 0:
        raise InputError(f"level must be a non-negative integer, got {k!r}")
    mats, dets = weyl_group_matrices(d, max_weyl)
    basis = tuple(enumerate_level_weights(d, k))
    n = len(basis)
    if n * n * len(mats) > 5 * 10**8:
        raise ResourceError(f"S-matrix of {d} at level {k} too large ({n} x {n} x |W|={len(mats)})")
    period = d.form_denominator * (k + d.dual_coxeter)
    shifted = np.array(basis, dtype=np.int64) + 1
    q = d.int_form
    right = shifted @ q  # (n, r): scaled form applied to mu + rho
    raw = np.zeros((n, n), dtype=complex)
    for w, det in zip(mats, dets):
        wl = shifted @ w.T  # rows are w(lam + rho)
        num = np.mod(wl @ right.T, period)
        raw += det * np.exp(-2j * np.pi * num / period)
    norm = np.sqrt(np.sum(np.abs(raw[0]) ** 2))
    phase = raw[0, 0] / abs(raw[0, 0])
    s = raw / (norm * phase)

    c = central_charge(d, k)
    h = {w: conformal_weight(d, k, w) for w in basis}
    t_phase = tuple((h[w] - c / 24) % 1 for w in basis)
    t = np.diag([np.exp(2j * np.pi * float(p)) for p in t_phase])
    # cached and shared between callers
    s.setflags(write=False)
    t.setflags(write=False)
    return ModularData(d, k, basis, s, t, c, h, t_phase)


def verlinde_from_s(md: ModularData, lam, mu, nu) -> int:
    """``sum_s S_{lam s} S_{mu s} conj(S_{nu s}) / S_{0 s}`` rounded to an integer.

    Raises ``ArithmeticError`` if the sum is not within 1e-6 of an integer.
    """
    i, j, l = (md.index(check_level_weight(md.datum, w, md.level)) for w in (lam, mu, nu))
    s = md.S
    val = np.sum(s[i] * s[j] * np.conj(s[l]) / s[0])
    r = round(val.real)
    if abs(val - r) > INTEGRALITY_TOL:
        raise ArithmeticError(f"Verlinde sum {val} is not integral")
    return int(r)


def verlinde_tensor(md: ModularData) -> np.ndarray:
    """All ``N_{ij}^l`` at once as a rounded integer array, integrality checked."""
    s = md.S
    ratio = s / s[0]
    vals = np.einsum("is,js,ls->ijl", s, ratio, np.conj(s))
    r = np.rint(vals.real)
    err = np.max(np.abs(vals - r)) if vals.size else 0.0
    if err > INTEGRALITY_TOL:
        raise ArithmeticError(f"Verlinde sums deviate from integers by {err}")
    return r.astype(np.int64)


def unitarity_defect(md: ModularData) -> float:
    s = md.S
    return float(np.max(np.abs(s @ s.conj().T - np.eye(len(s)))))
