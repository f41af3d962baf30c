"""Root systems, weight lattices and Weyl group actions for simple Lie types.

Weights are integer vectors of Dynkin labels (coordinates in the basis of
fundamental weights).  Coweights share the same shape but live in the basis
of fundamental coweights; they are carried as :class:`Coweight` so that the
two roles cannot be mixed silently.

Conventions (Bourbaki numbering, nodes indexed from 0 in code):

* ``cartan[i][j] = <alpha_i^vee, alpha_j>``; the Dynkin labels of the simple
  root ``alpha_j`` are therefore the column ``j`` of the Cartan matrix.
* the invariant form is normalised so that the highest root has norm 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, ResourceError
from . import kernels

__all__ = [
    "SimpleType",
    "RootDatum",
    "Weight",
    "Coweight",
    "parse_type",
    "build_root_datum",
    "inner_product",
    "dominant_reflect",
    "dominant_representative",
    "conjugate_weight",
    "enumerate_level_weights",
    "weyl_dim",
    "weyl_orbit",
    "is_dominant",
]

SERIES = ("A", "B", "C", "D", "E", "F", "G")
MAX_WEYL_ORDER = 1152


class Weight(tuple):
    """Dynkin labels of a weight."""

    __slots__ = ()
    role = "weight"

    def __new__(cls, labels: Iterable[int] = ()):
        return super().__new__(cls, (int(x) for x in labels))

    def __repr__(self) -> str:
        return f"Weight({list(self)})"


class Coweight(tuple):
    """Coordinates of a coweight in the fundamental-coweight basis."""

    __slots__ = ()
    role = "coweight"

    def __new__(cls, labels: Iterable[int] = ()):
        return super().__new__(cls, (int(x) for x in labels))

    def __repr__(self) -> str:
        return f"Coweight({list(self)})"


@dataclass(frozen=True)
class SimpleType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if s not in SERIES or not isinstance(n, int) or n < 1:
            raise InputError(f"invalid simple type {s}{n}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[s]
        if not ok:
            raise InputError(f"invalid simple type {s}{n}")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def parse_type(text: str) -> SimpleType:
    """Parse ``"A2"``, ``"D4"``, ``"g2"`` ... into a :class:`SimpleType`."""
    m = _TYPE_RE.match(text)
    if not m:
        raise InputError(f"malformed group spec {text!r}")
    return SimpleType(m.group(1).upper(), int(m.group(2)))


def _simple_root_gram(t: SimpleType) -> list[list[Fraction]]:
    """Gram matrix of the simple roots, long roots of norm 2."""
    n, s = t.rank, t.series
    edges: list[tuple[int, int]] = []
    norms = [Fraction(2)] * n
    if s in "ABCD":
        edges = [(i, i + 1) for i in range(n - 2)]
        if s == "D":
            edges += [(n - 3, n - 1)]
        elif n >= 2:
            edges += [(n - 2, n - 1)]
        if s == "B":
            norms[n - 1] = Fraction(1)
        elif s == "C":
            norms = [Fraction(1)] * (n - 1) + [Fraction(2)]
    elif s == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    elif s == "F":
        edges = [(0, 1), (1, 2), (2, 3)]
        norms = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
    elif s == "G":
        edges = [(0, 1)]
        norms = [Fraction(2, 3), Fraction(2)]
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = norms[i]
    for i, j in edges:
        g[i][j] = g[j][i] = -max(norms[i], norms[j]) / 2
    return g


def _rational_inverse(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, ordered by height."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = list(simple)
    known = set(roots)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, alpha_i^vee>
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        q += 1
                    else:
                        break
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        roots.extend(sorted(nxt))
        layer = nxt
    return roots


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Immutable Cartan data of a simple Lie type.

    Instances are cached by :func:`build_root_datum`, so identity comparison
    is equivalent to comparing types.
    """

    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    form: tuple[tuple[Fraction, ...], ...]
    rho: Weight
    theta: Weight
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    dual_coxeter: int
    dim_g: int
    root_norms: tuple[Fraction, ...]
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def __str__(self) -> str:
        return str(self.type)

    def __reduce__(self):
        return (build_root_datum, (self.type,))

    @cached_property
    def simple_root_labels(self) -> tuple[Weight, ...]:
        """Dynkin labels of each simple root."""
        n = self.rank
        return tuple(Weight(self.cartan[i][j] for i in range(n)) for j in range(n))

    @cached_property
    def positive_root_labels(self) -> tuple[Weight, ...]:
        n = self.rank
        return tuple(
            Weight(sum(b[j] * self.cartan[i][j] for j in range(n)) for i in range(n))
            for b in self.positive_roots
        )

    @cached_property
    def positive_coroot_pairings(self) -> tuple[tuple[Fraction, ...], ...]:
        """Row ``a`` gives ``<lambda_i, alpha_a^vee>`` for each positive root ``alpha_a``."""
        rows = []
        for beta in self.positive_roots:
            norm = sum(
                beta[i] * beta[j] * self._root_gram[i][j]
                for i in range(self.rank)
                for j in range(self.rank)
            )
            rows.append(tuple(beta[i] * self.root_norms[i] / norm for i in range(self.rank)))
        return tuple(rows)

    @cached_property
    def _root_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.rank
        c = self.cartan
        return tuple(tuple(c[i][j] * self.root_norms[i] / 2 for j in range(n)) for i in range(n))

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(r) for r in _rational_inverse(self.cartan))

    @cached_property
    def form_denominator(self) -> int:
        return lcm(*(x.denominator for row in self.form for x in row))

    @cached_property
    def int_form(self) -> np.ndarray:
        """The form scaled by :attr:`form_denominator` to an integer matrix."""
        d = self.form_denominator
        return np.array([[int(x * d) for x in row] for row in self.form], dtype=np.int64)

    @cached_property
    def simple_root_array(self) -> np.ndarray:
        return np.array(self.simple_root_labels, dtype=np.int64)

    @cached_property
    def theta_array(self) -> np.ndarray:
        return np.array(self.theta, dtype=np.int64)

    @cached_property
    def comark_array(self) -> np.ndarray:
        return np.array(self.comarks, dtype=np.int64)

    @cached_property
    def num_roots(self) -> int:
        return 2 * len(self.positive_roots)


@lru_cache(maxsize=None)
def _build(t: SimpleType) -> RootDatum:
    n = t.rank
    gram = _simple_root_gram(t)
    cartan = [[2 * gram[i][j] / gram[i][i] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for row in cartan for x in row)
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    pos = _positive_roots(cartan)
    theta_root = pos[-1]

    def root_norm(beta):
        return sum(beta[i] * beta[j] * gram[i][j] for i in range(n) for j in range(n))

    theta_norm = root_norm(theta_root)
    scale = 2 / theta_norm
    gram = [[x * scale for x in row] for row in gram]
    norms = tuple(gram[i][i] for i in range(n))

    # <lambda_i, lambda_j> = (A^-1)_{ji} |alpha_j|^2 / 2
    inv = _rational_inverse(cartan)
    form = tuple(tuple(inv[j][i] * norms[j] / 2 for j in range(n)) for i in range(n))

    theta = Weight(sum(theta_root[j] * cartan[i][j] for j in range(n)) for i in range(n))
    marks = tuple(theta_root)
    comarks = tuple(int(theta_root[i] * norms[i] / 2) for i in range(n))
    d = RootDatum(
        type=t,
        cartan=cartan,
        form=form,
        rho=Weight([1] * n),
        theta=theta,
        marks=marks,
        comarks=comarks,
        dual_coxeter=1 + sum(comarks),
        dim_g=n + 2 * len(pos),
        root_norms=norms,
        positive_roots=tuple(pos),
    )
    assert inner_product(d, theta, theta) == 2
    return d


def build_root_datum(t: SimpleType | str) -> RootDatum:
    """Return the (cached) :class:`RootDatum` of a simple type.

    >>> d = build_root_datum("A2")
    >>> d.dual_coxeter, d.dim_g
    (3, 8)
    """
    if isinstance(t, str):
        t = parse_type(t)
    return _build(t)


def as_weight(d: RootDatum, w) -> Weight:
    if isinstance(w, Coweight):
        raise InputError("expected a weight, got a coweight")
    w = w if isinstance(w, Weight) else Weight(w)
    if len(w) != d.rank:
        raise InputError(f"weight {list(w)} has length {len(w)}, expected {d.rank} for {d}")
    return w


def inner_product(d: RootDatum, a, b) -> Fraction:
    """Exact normalised invariant form ``<a, b>`` on weights."""
    a = as_weight(d, a)
    b = as_weight(d, b)
    f = d.form
    return sum((a[i] * f[i][j] * b[j] for i in range(d.rank) for j in range(d.rank) if a[i] and b[j]), Fraction(0))


def coweight_as_weight(d: RootDatum, c: Coweight) -> tuple[Fraction, ...]:
    """Image of a coweight in weight coordinates under the normalised form."""
    if not isinstance(c, Coweight):
        raise InputError("expected a coweight")
    # lambda_i^vee corresponds to (2 / |alpha_i|^2) lambda_i
    return tuple(Fraction(2) * c[i] / d.root_norms[i] for i in range(d.rank))


def weight_coweight_pairing(d: RootDatum, w, c: Coweight) -> Fraction:
    """``<w, c>`` for a weight and a coweight; ``<lambda_i, lambda_j^vee> = (A^-1)_{ji}``."""
    w = as_weight(d, w)
    if not isinstance(c, Coweight) or len(c) != d.rank:
        raise InputError("expected a coweight of matching rank")
    inv = d.inverse_cartan
    return sum((c[j] * inv[j][i] * w[i] for i in range(d.rank) for j in range(d.rank)), Fraction(0))


def coweight_form(d: RootDatum, a: Coweight, b: Coweight) -> Fraction:
    """Normalised form on coweights (``t`` identified with ``t*``)."""
    return inner_product_rational(d, coweight_as_weight(d, a), coweight_as_weight(d, b))


def inner_product_rational(d: RootDatum, a: Sequence, b: Sequence) -> Fraction:
    f = d.form
    n = d.rank
    return sum((a[i] * f[i][j] * b[j] for i in range(n) for j in range(n)), Fraction(0))


def is_dominant(w: Sequence[int]) -> bool:
    return all(x >= 0 for x in w)


def dominant_reflect(d: RootDatum, w) -> tuple[Weight, int] | None:
    """Reduce ``w`` to the dominant chamber under the rho-shifted Weyl action.

    Returns ``(dominant weight, sign)`` where ``sign`` is the determinant of the
    reducing Weyl element, or ``None`` when ``w + rho`` lies on a wall.

    >>> dominant_reflect(build_root_datum("A1"), [-2])
    (Weight([0]), -1)
    >>> dominant_reflect(build_root_datum("A1"), [-1]) is None
    True
    """
    w = as_weight(d, w)
    pts = np.array([w], dtype=np.int64) + 1
    out, sign = kernels.reflect_batch(pts, d.simple_root_array, d.theta_array, d.comark_array, -1)
    if sign[0] == 0:
        return None
    return Weight(out[0] - 1), int(sign[0])


def dominant_representative(d: RootDatum, w) -> Weight:
    """Dominant element of the (unshifted) Weyl orbit of ``w``."""
    x = list(as_weight(d, w))
    cols = d.simple_root_labels
    while True:
        for i, xi in enumerate(x):
            if xi < 0:
                a = cols[i]
                x = [xj - xi * aj for xj, aj in zip(x, a)]
                break
        else:
            return Weight(x)


def conjugate_weight(d: RootDatum, lam) -> Weight:
    """Highest weight ``-w0(lam)`` of the dual representation."""
    lam = as_weight(d, lam)
    if not is_dominant(lam):
        raise InputError(f"conjugate_weight needs a dominant weight, got {list(lam)}")
    return dominant_representative(d, [-x for x in lam])


def level_of(d: RootDatum, lam: Sequence[int]) -> int:
    """``<lam, theta>``, the minimal level at which ``lam`` is integrable."""
    return sum(c * x for c, x in zip(d.comarks, lam))


@lru_cache(maxsize=256)
def _level_weights(d: RootDatum, k: int) -> tuple[Weight, ...]:
    out: list[Weight] = []
    n = d.rank
    com = d.comarks

    def rec(i, budget, prefix):
        if i == n:
            out.append(Weight(prefix))
            return
        for x in range(budget // com[i] + 1):
            rec(i + 1, budget - x * com[i], prefix + [x])

    rec(0, k, [])
    return tuple(sorted(out))


def enumerate_level_weights(d: RootDatum, k: int) -> list[Weight]:
    """Dominant weights with ``<lam, theta> <= k`` in lexicographic order.

    >>> enumerate_level_weights(build_root_datum("A2"), 1)
    [Weight([0, 0]), Weight([0, 1]), Weight([1, 0])]
    """
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise InputError(f"level must be a non-negative integer, got {k!r}")
    return list(_level_weights(d, int(k)))


def check_level_weight(d: RootDatum, lam, k: int) -> Weight:
    lam = as_weight(d, lam)
    if not is_dominant(lam) or level_of(d, lam) > k:
        raise InputError(f"weight {list(lam)} is not a level-{k} dominant weight of {d}")
    return lam


@lru_cache(maxsize=4096)
def _weyl_dim(d: RootDatum, lam: Weight) -> int:
    num = Fraction(1)
    for row in d.positive_coroot_pairings:
        top = sum((c * (x + 1) for c, x in zip(row, lam)), Fraction(0))
        bottom = sum(row, Fraction(0))
        num *= top / bottom
    assert num.denominator == 1
    return int(num)


def weyl_dim(d: RootDatum, lam) -> int:
    """Dimension of the irreducible module of highest weight ``lam``.

    >>> weyl_dim(build_root_datum("A2"), [1, 1])
    8
    """
    lam = as_weight(d, lam)
    if not is_dominant(lam):
        raise InputError(f"weyl_dim needs a dominant weight, got {list(lam)}")
    return _weyl_dim(d, lam)


@lru_cache(maxsize=4096)
def _orbit(d: RootDatum, lam: Weight) -> tuple[Weight, ...]:
    cols = d.simple_root_labels
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for i, mi in enumerate(mu):
            if mi > 0:
                nu = Weight(x - mi * a for x, a in zip(mu, cols[i]))
                if nu not in seen:
                    seen.add(nu)
                    stack.append(nu)
    return tuple(sorted(seen))


def weyl_orbit(d: RootDatum, lam) -> tuple[Weight, ...]:
    """All weights in the Weyl orbit of a dominant weight, sorted."""
    lam = as_weight(d, lam)
    if not is_dominant(lam):
        raise InputError("weyl_orbit expects a dominant weight")
    return _orbit(d, lam)


def weyl_group_order(d: RootDatum) -> int:
    """``prod (m_i + 1)`` over the exponents, read off from the heights of the positive roots."""
    heights = [sum(r) for r in d.positive_roots]
    top = max(heights)
    counts = [sum(1 for h in heights if h == j) for j in range(1, top + 1)]
    order = 1
    for m in range(1, top + 1):
        # exponent m occurs (#roots of height m) - (#roots of height m + 1) times
        mult = counts[m - 1] - (counts[m] if m < top else 0)
        order *= (m + 1) ** mult
    return order


@lru_cache(maxsize=32)
def weyl_group_matrices(d: RootDatum, cap: int = MAX_WEYL_ORDER) -> tuple[np.ndarray, np.ndarray]:
    """All Weyl group elements as integer matrices on Dynkin labels, with determinants.

    Only used where a full sum over the group is unavoidable; refuses groups
    larger than ``cap``.
    """
    order = weyl_group_order(d)
    if order > cap:
        raise ResourceError(f"Weyl group of {d} exceeds the enumeration cap {cap}")
    n = d.rank
    gens = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[:, i] -= d.simple_root_array[i]
        gens.append(s)
    ident = np.eye(n, dtype=np.int64)
    seen = {ident.tobytes(): (ident, 1)}
    layer = [(ident, 1)]
    while layer:
        nxt = []
        for m, det in layer:
            for s in gens:
                p = s @ m
                key = p.tobytes()
                if key not in seen:
                    seen[key] = (p, -det)
                    nxt.append((p, -det))
        layer = nxt
    mats = np.array([v[0] for v in seen.values()])
    dets = np.array([v[1] for v in seen.values()], dtype=np.int64)
    assert len(mats) == order
    return mats, dets


def simple_reflection_matrix(d: RootDatum, i: int) -> np.ndarray:
    s = np.eye(d.rank, dtype=np.int64)
    s[:, i] -= d.simple_root_array[i]
    return s


def word_to_matrix(d: RootDatum, word: Sequence[int]) -> np.ndarray:
    """Matrix of ``s_{w[0]} s_{w[1]} ... s_{w[-1]}`` acting on Dynkin labels."""
    m = np.eye(d.rank, dtype=np.int64)
    for i in word:
        m = m @ simple_reflection_matrix(d, i)
    return m


def reduce_to_dominant_word(d: RootDatum, w: Sequence[int], nodes: Iterable[int] | None = None) -> tuple[list[int], Weight]:
    """Reflect ``w`` by simple reflections (restricted to ``nodes``) until its
    labels on those nodes are non-negative; return the reflections applied in order."""
    x = list(w)
    nodes = list(range(d.rank)) if nodes is None else list(nodes)
    cols = d.simple_root_labels
    applied = []
    while True:
        for i in nodes:
            if x[i] < 0:
                xi = x[i]
                x = [xj - xi * aj for xj, aj in zip(x, cols[i])]
                applied.append(i)
                break
        else:
            return applied, Weight(x)


def longest_element_word(d: RootDatum, nodes: Iterable[int] | None = None) -> tuple[int, ...]:
    """Reduced word for the longest element of the parabolic subgroup on ``nodes``."""
    nodes = list(range(d.rank)) if nodes is None else sorted(nodes)
    if not nodes:
        return ()
    # take the dominant regular point -rho_J to the J-dominant chamber
    start = [-1 if i in nodes else 0 for i in range(d.rank)]
    applied, _ = reduce_to_dominant_word(d, start, nodes)
    # reflections were applied left-to-right on the point: w = s_last ... s_first
    return tuple(reversed(applied))
