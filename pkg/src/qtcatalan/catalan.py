"""q,t-polynomials assembled from path statistics.

Every polynomial here is a sum of q^area t^bounce over an enumerated set
of paths, optionally refined by extra variables recording the path
parameters (y2, y3 for red ranks; y2, y3, y4 for k^4 run parameters) and
optionally restricted to one region of the piecewise bounce formula.
Region labels: P1C1..P2C2 for length-3 vectors, P1C1..P3C3 for k^4.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from .dyck import (KVec3, Path3, Path4, area3, area4, bounce3, bounce4,
                   bounce4_case, enumerate_paths3, enumerate_paths4)
from .polynomial import SparsePoly, VarTable

QT_VARS = ("q", "t")
REFINED3_VARS = ("q", "t", "y2", "y3")
REFINED4_VARS = ("q", "t", "y2", "y3", "y4")
GF3_VARS = ("q", "t", "x1", "x2", "x3")
GF3_REFINED_VARS = ("q", "t", "x1", "x2", "x3", "y2", "y3")
GF4_VARS = ("q", "t", "x")
GF4_REFINED_VARS = ("q", "t", "x", "y2", "y3", "y4")

F_REGIONS = ("P1C1", "P1C2", "P2C1", "P2C2")
H_REGIONS = ("P1C1", "P1C2", "P2C1", "P2C2", "P2C3", "P3C1", "P3C2", "P3C3")


def region_of_path3(p: Path3) -> str:
    """Bounce region of a length-3 path (partition of the (r2, r3) grid)."""
    k2, r2, r3 = p.k.k2, p.r2, p.r3
    if r2 > k2:
        return "P1C1" if r2 - r3 - k2 >= 0 else "P1C2"
    return "P2C1" if k2 - r2 - r3 >= 0 else "P2C2"


def region_of_path4(p: Path4) -> str:
    """Bounce region of a k^4 path (one of the eight cases)."""
    return H_REGIONS[bounce4_case(p) - 1]


def _poly(names: Sequence[str], terms: dict) -> SparsePoly:
    # every exponent is a path statistic or parameter, never negative
    if terms and min(min(exps) for exps in terms) < 0:
        raise AssertionError("negative exponent in a path polynomial")
    return SparsePoly(VarTable(names), terms)


def catalan_poly3(k: KVec3) -> SparsePoly:
    """Sum of q^area t^bounce over all paths for k, over variables (q, t)."""
    terms: dict[tuple[int, ...], int] = {}
    for p in enumerate_paths3(k):
        key = (area3(p), bounce3(p))
        terms[key] = terms.get(key, 0) + 1
    return _poly(QT_VARS, terms)


def catalan_poly_lambda3(lam: Sequence[int]) -> SparsePoly:
    """Sum of catalan_poly3 over the distinct rearrangements of a partition.

    ``lam`` must be weakly decreasing with nonnegative parts; each distinct
    ordered vector is counted once.
    """
    lam = tuple(lam)
    if len(lam) != 3:
        raise ValueError(f"expected 3 parts, got {lam!r}")
    if not (lam[0] >= lam[1] >= lam[2] >= 0):
        raise ValueError(f"parts must be weakly decreasing and nonnegative: {lam!r}")
    total = SparsePoly.zero(VarTable(QT_VARS))
    for vec in sorted(set(permutations(lam))):
        total = total + catalan_poly3(KVec3(*vec))
    return total


def catalan_poly_k4(k: int) -> SparsePoly:
    """Sum of q^area t^bounce over all paths for k^4."""
    terms: dict[tuple[int, ...], int] = {}
    for p in enumerate_paths4(k):
        key = (area4(p), bounce4(p))
        terms[key] = terms.get(key, 0) + 1
    return _poly(QT_VARS, terms)


def _check_region(region: str | None, allowed: tuple[str, ...]):
    if region is not None and region not in allowed:
        raise ValueError(f"unknown region {region!r}; expected one of {allowed}")


def refined_poly3(k: KVec3, region: str | None = None) -> SparsePoly:
    """Refined sum q^area t^bounce y2^r2 y3^r3 over (q, t, y2, y3).

    With ``region`` set, only paths in that bounce region contribute.
    """
    _check_region(region, F_REGIONS)
    terms: dict[tuple[int, ...], int] = {}
    for p in enumerate_paths3(k):
        if region is not None and region_of_path3(p) != region:
            continue
        key = (area3(p), bounce3(p), p.r2, p.r3)
        terms[key] = terms.get(key, 0) + 1
    return _poly(REFINED3_VARS, terms)


def refined_poly4(k: int, region: str | None = None) -> SparsePoly:
    """Refined sum q^area t^bounce y2^a y3^b y4^c over (q, t, y2, y3, y4)."""
    _check_region(region, H_REGIONS)
    terms: dict[tuple[int, ...], int] = {}
    for p in enumerate_paths4(k):
        if region is not None and region_of_path4(p) != region:
            continue
        key = (area4(p), bounce4(p), p.a, p.b, p.c)
        terms[key] = terms.get(key, 0) + 1
    return _poly(REFINED4_VARS, terms)


def _vectors3(max_total: int) -> Iterable[KVec3]:
    for k1 in range(max_total + 1):
        for k2 in range(max_total - k1 + 1):
            for k3 in range(max_total - k1 - k2 + 1):
                yield KVec3(k1, k2, k3)


def gf_series3(max_total: int, region: str | None = None,
               refined: bool = False) -> SparsePoly:
    """Generating series sum over k1+k2+k3 <= max_total of x1^k1 x2^k2 x3^k3
    times the (optionally refined, optionally region-filtered) path sum."""
    _check_region(region, F_REGIONS)
    terms: dict[tuple[int, ...], int] = {}
    for k in _vectors3(max_total):
        for p in enumerate_paths3(k):
            if region is not None and region_of_path3(p) != region:
                continue
            key = (area3(p), bounce3(p), k.k1, k.k2, k.k3)
            if refined:
                key += (p.r2, p.r3)
            terms[key] = terms.get(key, 0) + 1
    return _poly(GF3_REFINED_VARS if refined else GF3_VARS, terms)


def gf_series4(max_k: int, region: str | None = None,
               refined: bool = False) -> SparsePoly:
    """Generating series sum over k <= max_k of x^k times the path sum."""
    _check_region(region, H_REGIONS)
    terms: dict[tuple[int, ...], int] = {}
    for k in range(max_k + 1):
        for p in enumerate_paths4(k):
            if region is not None and region_of_path4(p) != region:
                continue
            key = (area4(p), bounce4(p), k)
            if refined:
                key += (p.a, p.b, p.c)
            terms[key] = terms.get(key, 0) + 1
    return _poly(GF4_REFINED_VARS if refined else GF4_VARS, terms)
