"""Reproduction of the reference SO(3) and SU(3)/Z3 tables.

Expected data lives in ``data/reference_tables.json``; every check compares
it with a fresh computation and reports a :class:`CheckResult`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import numpy as np

from .center import basic_level, extension_exists, fundamental_level, multiplicative_level, parse_group_spec
from .modular import modular_data
from .nsc import classify_irreps, invariance_defects, modular_invariant
from .rootdata import Weight, enumerate_level_weights

DEFAULT_TOLERANCE = 1e-8


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@lru_cache(maxsize=1)
def load_reference() -> dict:
    text = resources.files("fusionring").joinpath("data/reference_tables.json").read_text()
    return json.loads(text)


def spin_to_label(s) -> int:
    two_j = 2 * Fraction(s)
    if two_j.denominator != 1 or two_j < 0:
        raise ValueError(f"bad spin {s!r}")
    return int(two_j)


def _weight(group: str, w) -> Weight:
    if group.startswith("A1"):
        return Weight([spin_to_label(w)])
    return Weight(w)


def expected_classification(entry: dict) -> list[tuple[tuple[Weight, ...], int | None]]:
    g = entry["group"]
    out = []
    for irr in entry["irreps"]:
        members = tuple(sorted(_weight(g, w) for w in irr["orbit"]))
        out.append((members, irr.get("rho")))
    return sorted(out, key=lambda t: (t[0], -1 if t[1] is None else t[1]))


def computed_classification(group: str, k: int, chi) -> list[tuple[tuple[Weight, ...], int | None]]:
    _, cd = parse_group_spec(group)
    out = []
    for lab in classify_irreps(cd, k, chi):
        rho = None if lab.orbit.is_free else lab.rho_index[0]
        out.append((tuple(lab.orbit.members), rho))
    return sorted(out, key=lambda t: (t[0], -1 if t[1] is None else t[1]))


def invariant_from_terms(group: str, k: int, terms: list[dict]) -> np.ndarray:
    """Coefficient matrix of ``sum_t c_t |sum_{w in t} chi_w|^2``."""
    d, _ = parse_group_spec(group)
    basis = enumerate_level_weights(d, k)
    index = {w: i for i, w in enumerate(basis)}
    m = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for t in terms:
        idx = [index[_weight(group, w)] for w in t["sum"]]
        for i in idx:
            for j in idx:
                m[i, j] += t["coeff"]
    return m


def so3_invariant_formula(k: int) -> np.ndarray:
    """``sum_{j<k/4} |chi_j + chi_{k/2-j}|^2 + 2 |chi_{k/4}|^2`` (integer spins j) for ``k = 4n``."""
    if k % 4:
        raise ValueError("formula holds for k = 4n")
    m = np.zeros((k + 1, k + 1), dtype=np.int64)
    for j in range(k // 4):
        a, b = 2 * j, k - 2 * j
        for x in (a, b):
            for y in (a, b):
                m[x, y] += 1
    m[k // 2, k // 2] += 2
    return m


def check_classification() -> list[CheckResult]:
    out = []
    for entry in load_reference()["classification"]:
        name = f"classify {entry['group']} k={entry['level']} chi={entry['chi']}"
        exp = expected_classification(entry)
        got = computed_classification(entry["group"], entry["level"], entry["chi"])
        detail = "" if exp == got else f"expected {exp}, got {got}"
        out.append(CheckResult(name, exp == got, detail))
    return out


def check_invariants(tol: float = DEFAULT_TOLERANCE) -> list[CheckResult]:
    out = []
    for entry in load_reference()["invariants"]:
        g, k = entry["group"], entry["level"]
        d, cd = parse_group_spec(g)
        mi = modular_invariant(cd, k)
        exp = invariant_from_terms(g, k, entry["terms"])
        same = np.array_equal(mi.M, exp)
        if g == "A1/Z2":
            same = same and np.array_equal(mi.M, so3_invariant_formula(k))
        ds, dt = invariance_defects(mi.M, modular_data(d, k))
        ok = same and ds < tol and dt < tol
        out.append(CheckResult(f"invariant {g} k={k}", ok, f"matrix match={same} |[M,S]|={ds:.1e} |[M,T]|={dt:.1e}"))
    return out


def check_levels() -> list[CheckResult]:
    _, so3 = parse_group_spec("A1/Z2")
    _, psu3 = parse_group_spec("A2/Z3")
    got_so3 = (basic_level(so3), multiplicative_level(so3), fundamental_level(so3))
    got_psu3 = (basic_level(psu3), multiplicative_level(psu3))
    ext = all(extension_exists(so3, k) == (k % 2 == 0) for k in range(0, 25)) and all(
        extension_exists(psu3, k) for k in range(0, 25)
    )
    return [
        CheckResult("levels A1/Z2 (basic, multiplicative, fundamental)", got_so3 == (2, 4, 2), str(got_so3)),
        CheckResult("levels A2/Z3 (basic, multiplicative)", got_psu3 == (1, 3), str(got_psu3)),
        CheckResult("extension exists iff basic level divides k", ext, ""),
    ]


def run_all(tol: float = DEFAULT_TOLERANCE) -> list[CheckResult]:
    return check_classification() + check_invariants(tol) + check_levels()
