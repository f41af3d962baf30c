"""Level-k fusion coefficients and the Verlinde ring ``R_k`` of a simply connected group.

The production path is the Kac-Walton algorithm: the classical tensor product
is folded through the affine Weyl group at the shifted level ``k + h^vee``.
Terms landing on an affine wall drop out, all others are reflected into the
fundamental alcove with the sign of the reflecting element.
"""
from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import InputError, NotPrequantizableError, ResourceError
from .rootdata import (
    RootDatum,
    Weight,
    as_weight,
    check_level_weight,
    enumerate_level_weights,
    is_dominant,
    level_of,
    weyl_dim,
)
from .tensor import fold

DEFAULT_MAX_BASIS = 1000


def max_basis() -> int:
    return int(os.environ.get("FUSIONRING_MAX_BASIS", DEFAULT_MAX_BASIS))


@dataclass(frozen=True)
class FusionElement:
    """Finitely supported integer combination of level-k basis characters."""

    datum: RootDatum
    level: int
    terms: tuple[tuple[Weight, int], ...]

    @classmethod
    def from_mapping(cls, d: RootDatum, k: int, coeffs: Mapping) -> "FusionElement":
        clean: dict[Weight, int] = defaultdict(int)
        for w, c in coeffs.items():
            clean[check_level_weight(d, w, k)] += int(c)
        return cls(d, k, tuple(sorted((w, c) for w, c in clean.items() if c)))

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.terms)

    def coefficient(self, w) -> int:
        return self.as_dict().get(Weight(w), 0)

    def _check(self, other: "FusionElement") -> None:
        if not isinstance(other, FusionElement):
            raise TypeError(f"cannot combine FusionElement with {type(other).__name__}")
        if other.datum is not self.datum or other.level != self.level:
            raise InputError(
                f"level mismatch: {self.datum} level {self.level} vs {other.datum} level {other.level}"
            )

    def __add__(self, other: "FusionElement") -> "FusionElement":
        self._check(other)
        acc = self.as_dict()
        for w, c in other.terms:
            acc[w] = acc.get(w, 0) + c
        return FusionElement(self.datum, self.level, tuple(sorted((w, c) for w, c in acc.items() if c)))

    def __mul__(self, other):
        if isinstance(other, int):
            return FusionElement(self.datum, self.level, tuple((w, c * other) for w, c in self.terms if c * other))
        return multiply(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "FusionElement":
        return self * -1

    def __sub__(self, other: "FusionElement") -> "FusionElement":
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*{list(w)}" for w, c in self.terms) or "0"
        return f"FusionElement({self.datum}, k={self.level}: {inner})"


@dataclass(frozen=True)
class FusionTable:
    datum: RootDatum
    level: int
    basis: tuple[Weight, ...]
    # (i, j, l, N) with i <= j and N > 0, sorted
    coefficients: tuple[tuple[int, int, int, int], ...]

    def lookup(self) -> dict[tuple[int, int, int], int]:
        out = {}
        for i, j, l, n in self.coefficients:
            out[(i, j, l)] = n
            out[(j, i, l)] = n
        return out


@lru_cache(maxsize=65536)
def _fuse(d: RootDatum, k: int, lam: Weight, mu: Weight) -> tuple[tuple[Weight, int], ...]:
    if lam > mu:
        lam, mu = mu, lam
    # fold over the smaller module
    a, b = (lam, mu) if weyl_dim(d, lam) >= weyl_dim(d, mu) else (mu, lam)
    folded = fold(d, a, b, k + d.dual_coxeter)
    if any(v < 0 for v in folded.values()):
        raise ArithmeticError(f"negative fusion coefficient for {list(lam)} x {list(mu)} at level {k}")
    return tuple(sorted(folded.items()))


def fuse(d: RootDatum, k: int, lam, mu) -> FusionElement:
    """Fusion product of two level-k basis elements.

    >>> from fusionring.rootdata import build_root_datum
    >>> fuse(build_root_datum("A2"), 1, [1, 0], [1, 0]).as_dict()
    {Weight([0, 1]): 1}
    """
    _check_level(k)
    lam = check_level_weight(d, lam, k)
    mu = check_level_weight(d, mu, k)
    return FusionElement(d, k, _fuse(d, k, lam, mu))


def fusion_coefficient(d: RootDatum, k: int, lam, mu, nu) -> int:
    """The Verlinde coefficient ``N_{lam mu}^{nu}``."""
    nu = check_level_weight(d, nu, k)
    return fuse(d, k, lam, mu).as_dict().get(nu, 0)


def su2_fusion_oracle(j1: Fraction, j2: Fraction, j3: Fraction, k: int) -> int:
    """Closed-form SU(2) level-k fusion rule, in spins.

    Independent of the folding code; used to cross-check it.

    >>> su2_fusion_oracle(Fraction(1, 2), Fraction(1, 2), 0, 1)
    1
    >>> su2_fusion_oracle(Fraction(1, 2), Fraction(1, 2), 1, 1)
    0
    """
    js = [Fraction(j) for j in (j1, j2, j3)]
    for j in js:
        if (2 * j).denominator != 1 or not 0 <= 2 * j <= k:
            raise InputError(f"spin {j} is not allowed at level {k}")
    a, b, c = js
    if (a + b + c).denominator != 1:
        return 0
    return int(abs(a - b) <= c <= min(a + b, k - a - b))


def _check_level(k) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise InputError(f"level must be a non-negative integer, got {k!r}")


def fusion_table(d: RootDatum, k: int) -> FusionTable:
    """All nonzero ``N_{ij}^l`` over the level-k basis, ``i <= j``."""
    _check_level(k)
    basis = enumerate_level_weights(d, k)
    if len(basis) > max_basis():
        raise ResourceError(f"basis size {len(basis)} exceeds cap {max_basis()} (FUSIONRING_MAX_BASIS)")
    index = {w: i for i, w in enumerate(basis)}
    entries = []
    for i, lam in enumerate(basis):
        for j in range(i, len(basis)):
            for nu, n in _fuse(d, k, lam, basis[j]):
                entries.append((i, j, index[nu], n))
    entries.sort()
    return FusionTable(d, k, tuple(basis), tuple(entries))


def unit(d: RootDatum, k: int) -> FusionElement:
    _check_level(k)
    return FusionElement(d, k, ((Weight([0] * d.rank), 1),))


def basis_element(d: RootDatum, k: int, lam) -> FusionElement:
    _check_level(k)
    return FusionElement(d, k, ((check_level_weight(d, lam, k), 1),))


def multiply(a: FusionElement, b: FusionElement) -> FusionElement:
    """Bilinear extension of :func:`fuse`."""
    a._check(b)
    d, k = a.datum, a.level
    acc: dict[Weight, int] = defaultdict(int)
    for lam, x in a.terms:
        for mu, y in b.terms:
            for nu, n in _fuse(d, k, lam, mu):
                acc[nu] += x * y * n
    return FusionElement(d, k, tuple(sorted((w, c) for w, c in acc.items() if c)))


def add(a: FusionElement, b: FusionElement) -> FusionElement:
    return a + b


def brane_quantize(d: RootDatum, k: int, lam) -> FusionElement:
    """Quantization of the conjugacy-class brane through ``exp(lam)``.

    Only weights of level at most ``k`` give prequantizable branes; the
    quantization of such a brane is the basis character of ``lam``.
    """
    _check_level(k)
    lam = as_weight(d, lam)
    if not is_dominant(lam) or level_of(d, lam) > k:
        raise NotPrequantizableError(f"brane {list(lam)} is not pre-quantizable at level {k}")
    return basis_element(d, k, lam)


def fusion_sum(elements: Iterable[FusionElement]) -> FusionElement:
    elements = list(elements)
    out = elements[0]
    for e in elements[1:]:
        out = out + e
    return out
