"""Truncated partition-analysis engine.

A :class:`FactoredOmegaExpr` denotes

    numerator / prod_j (1 - m_j)

where the numerator is a signed sum of monomials and each m_j is a
monomial, over a variable table split into *retained* variables and
*eliminated* ones.  Eliminated variables carry a mode: ``nonneg`` keeps
the terms whose exponent in that variable is >= 0, ``zero`` keeps the
terms with exponent exactly 0; either way the variable is then set to 1.

:func:`expand_truncated` expands every factor geometrically and applies
the elimination term by term.  Enumeration is bounded by a weighted total
degree on the retained variables: every factor must have strictly positive
weight, which makes the multiplicity search finite, and the result is then
exact for all terms of weighted degree <= the bound.

The crude generating functions for the two path families are *generated*
from their linear constraint systems by :func:`build_crude_F` and
:func:`build_crude_H`: every summation variable becomes a geometric
factor, every inequality L >= 0 becomes a slack variable exponent, and
every ceiling p = ceil(A/z) becomes an auxiliary variable of mode ``zero``
with numerator 1 + mu + ... + mu^(z-1) and exponent A - z*p.  The closed
rational forms they eliminate to are transcribed in
``data/closed_forms.json`` and loaded by :func:`closed_form`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cache
from importlib import resources
from typing import Mapping, Sequence

from .polynomial import SparsePoly, VarTable

MODE_NONNEG = "nonneg"
MODE_ZERO = "zero"

# per eliminated variable: MODE_NONNEG keeps exponents >= 0, MODE_ZERO
# keeps exponent == 0; the variable is then set to 1
EliminationSpec = dict[str, str]

CLOSED_FORM_IDS = ("F11", "F12", "F21", "F22", "EQ1",
                   "H11", "H12", "H21", "H22", "H23", "H31", "H32", "H33", "EQ2")


@dataclass(frozen=True)
class WeightVector:
    """Truncation discipline: weight per retained variable plus a bound.

    Variables missing from ``weights`` default to weight 1.  Terms of
    weighted total degree <= ``bound`` are computed exactly.
    """

    bound: int
    weights: Mapping[str, int] | None = None

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError(f"bound must be nonnegative, got {self.bound}")
        if self.weights:
            bad = {n: w for n, w in self.weights.items() if w < 0}
            if bad:
                raise ValueError(f"weights must be nonnegative: {bad}")

    def resolve(self, names: Sequence[str]) -> list[int]:
        """Weights for the given variables, defaulting to 1."""
        wmap = dict(self.weights or {})
        unknown = set(wmap) - set(names)
        if unknown:
            raise ValueError(f"weights given for unknown variables {sorted(unknown)}")
        return [wmap.get(n, 1) for n in names]


@dataclass
class FactoredOmegaExpr:
    """Signed monomial numerator over a product of (1 - monomial) factors."""

    vars: VarTable
    numerator: list[tuple[int, tuple[int, ...]]]
    factors: list[tuple[int, ...]]
    elim: EliminationSpec = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.vars)
        for name, mode in self.elim.items():
            self.vars.index(name)
            if mode not in (MODE_NONNEG, MODE_ZERO):
                raise ValueError(f"unknown elimination mode {mode!r} for {name!r}")
        for _, mono in self.numerator:
            if len(mono) != n:
                raise ValueError("numerator monomial length mismatch")
        for mono in self.factors:
            if len(mono) != n:
                raise ValueError("factor monomial length mismatch")

    @property
    def retained_names(self) -> tuple[str, ...]:
        return tuple(n for n in self.vars.names if n not in self.elim)

    def retained_vars(self) -> VarTable:
        return VarTable(self.retained_names)


def expand_truncated(expr: FactoredOmegaExpr, wv: WeightVector) -> SparsePoly:
    """Expand with elimination, exact up to retained weighted degree wv.bound.

    Raises ValueError if any factor has nonpositive retained weight (the
    expansion would not terminate).
    """
    names = expr.vars.names
    n_all = len(names)
    retained = expr.retained_names
    ret_weights = wv.resolve(retained)
    wmap = dict(zip(retained, ret_weights))
    w_full = [wmap.get(n, 0) for n in names]

    ret_idx = [i for i, n in enumerate(names) if n not in expr.elim]
    elim_info = [(i, expr.elim[n]) for i, n in enumerate(names) if n in expr.elim]

    factors = [tuple(f) for f in expr.factors]
    fwt = []
    for f in factors:
        w = sum(w_full[i] * f[i] for i in range(n_all))
        if w <= 0:
            desc = {names[i]: f[i] for i in range(n_all) if f[i]}
            raise ValueError(f"factor {desc} has nonpositive weight {w}; "
                             f"expansion would not terminate")
        fwt.append(w)
    fexps = [tuple((i, c) for i, c in enumerate(f) if c) for f in factors]
    nf = len(factors)

    # Feasibility tables: at position j, for each eliminated variable, the
    # (coefficient, weight) pairs of the remaining factors that can raise
    # or lower its exponent.  rem // weight bounds each multiplicity.
    checks = []
    for j in range(nf + 1):
        entry = []
        for ie, mode in elim_info:
            pos = tuple((factors[jj][ie], fwt[jj])
                        for jj in range(j, nf) if factors[jj][ie] > 0)
            neg = tuple((factors[jj][ie], fwt[jj])
                        for jj in range(j, nf) if factors[jj][ie] < 0)
            entry.append((ie, mode == MODE_ZERO, pos, neg))
        checks.append(tuple(entry))

    acc: dict[tuple[int, ...], int] = {}
    cur = [0] * n_all

    def rec(j: int, rem: int, sign: int):
        for ie, is_zero, pos, neg in checks[j]:
            v = cur[ie]
            if v < 0:
                hi = v
                for c, w in pos:
                    hi += c * (rem // w)
                if hi < 0:
                    return
            elif is_zero and v > 0:
                lo = v
                for c, w in neg:
                    lo += c * (rem // w)
                if lo > 0:
                    return
        if j == nf:
            key = tuple(cur[i] for i in ret_idx)
            s = acc.get(key, 0) + sign
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
            return
        wt = fwt[j]
        exps = fexps[j]
        rec(j + 1, rem, sign)
        n = 0
        while rem >= wt:
            rem -= wt
            n += 1
            for i, c in exps:
                cur[i] += c
            rec(j + 1, rem, sign)
        if n:
            for i, c in exps:
                cur[i] -= n * c

    for coeff, mono in expr.numerator:
        mw = sum(w_full[i] * mono[i] for i in range(n_all))
        rem = wv.bound - mw
        if rem < 0:
            continue
        for i in range(n_all):
            cur[i] = mono[i]
        rec(0, rem, coeff)

    result = SparsePoly.zero(expr.retained_vars())
    result.terms = acc
    return result


def truncate_weighted(p: SparsePoly, wv: WeightVector) -> SparsePoly:
    """Drop terms of weighted degree above wv.bound."""
    w = wv.resolve(p.vars.names)
    res = SparsePoly.zero(p.vars)
    res.terms = {exps: c for exps, c in p.terms.items()
                 if sum(wi * e for wi, e in zip(w, exps)) <= wv.bound}
    return res


@dataclass(frozen=True)
class SeriesDiff:
    """Outcome of a truncated series comparison."""

    equal: bool
    witness: tuple[int, ...] | None = None
    left: int = 0
    right: int = 0


def series_equal(p: SparsePoly, r: SparsePoly, wv: WeightVector) -> SeriesDiff:
    """Compare all terms of weighted degree <= wv.bound.

    On mismatch the witness is the first differing exponent tuple in
    canonical (descending lexicographic) order.
    """
    if p.vars != r.vars:
        raise ValueError(f"variable table mismatch: {p.vars!r} vs {r.vars!r}")
    pt = truncate_weighted(p, wv).terms
    rt = truncate_weighted(r, wv).terms
    diffs = [key for key in set(pt) | set(rt) if pt.get(key, 0) != rt.get(key, 0)]
    if not diffs:
        return SeriesDiff(True)
    key = max(diffs)
    return SeriesDiff(False, key, pt.get(key, 0), rt.get(key, 0))


def slice_weight_vector(oracle: SparsePoly, x_names: Sequence[str],
                        base: Mapping[str, int], max_x_total: int,
                        min_m: int = 0) -> WeightVector:
    """Weight vector whose truncation set is exactly an x-degree slice.

    ``oracle`` must contain every term with total x-degree <= ``max_x_total``
    of the series under test.  The non-x variables get the ``base`` weights;
    the x variables get M+1 where M is the largest base-weighted degree any
    oracle term carries outside the x's (at least ``min_m``).  Terms with
    total x-degree at most ``max_x_total`` then all fit under the bound,
    while any term with larger x-degree exceeds it.
    """
    x_set = set(x_names)
    non_x = [(i, base.get(n, 1)) for i, n in enumerate(oracle.vars.names)
             if n not in x_set]
    m = min_m
    for exps in oracle.terms:
        m = max(m, sum(w * exps[i] for i, w in non_x))
    weights = dict(base)
    for x in x_names:
        weights[x] = m + 1
    return WeightVector(bound=max_x_total * (m + 1) + m, weights=weights)


def slice_term_bound(expr: FactoredOmegaExpr, x_names: Sequence[str],
                     base: Mapping[str, int], max_x_total: int) -> int:
    """Largest base-weighted non-x degree a slice term of ``expr`` can have.

    Requires every factor to carry positive total x-degree, so a term of
    total x-degree <= ``max_x_total`` uses at most that many factor copies.
    Passing the result as ``min_m`` to :func:`slice_weight_vector` makes a
    slice comparison against ``expr`` complete rather than bounded by what
    the oracle happens to contain.
    """
    names = expr.vars.names
    x_set = set(x_names)
    base_w = [0 if n in x_set else base.get(n, 1) for n in names]
    x_deg = [1 if n in x_set else 0 for n in names]

    def qty(mono):
        return sum(w * e for w, e in zip(base_w, mono))

    worst = 0
    for mono in expr.factors:
        if sum(d * e for d, e in zip(x_deg, mono)) <= 0:
            raise ValueError("factor without x content; slice bound unavailable")
        worst = max(worst, qty(mono))
    num = max((qty(mono) for _, mono in expr.numerator), default=0)
    return max_x_total * worst + max(0, num)


# ----------------------------------------------------------------------
# crude generating functions from constraint systems

F_RETAINED = ("q", "t", "x1", "x2", "x3", "y2", "y3")
H_RETAINED = ("q", "t", "x", "y2", "y3", "y4")

# Base weights under which every crude factor has positive weight; the
# default all-ones vector gives e.g. the P1C2 r2-factor (q y2 / t^2)
# weight zero, so the y variables are weighted 2.
F_BASE_WEIGHTS = {"q": 1, "t": 1, "y2": 2, "y3": 2}
H_BASE_WEIGHTS = {"q": 1, "t": 1, "y2": 2, "y3": 2, "y4": 2}

Linear = Mapping[str, int]  # sum-variable coefficients, "const" for the constant


def _assemble(retained: Sequence[str], sum_vars: Sequence[str],
              functionals: Mapping[str, Linear],
              constraints: Sequence[Linear],
              ceilings: Sequence[tuple[int, Linear, str]]) -> FactoredOmegaExpr:
    """Build the crude expression for one region.

    ``functionals`` gives, per retained variable, its exponent as a linear
    function of the summation variables; ``constraints`` lists the
    inequalities L >= 0; ``ceilings`` lists (z, A, p) encodings of
    p = ceil(A/z).
    """
    lam_names = [f"l{i + 1}" for i in range(len(constraints))]
    mu_names = [f"mu{i + 1}" if len(ceilings) > 1 else "mu"
                for i in range(len(ceilings))]
    all_names = list(retained) + lam_names + mu_names
    vt = VarTable(all_names)
    elim = {n: MODE_NONNEG for n in lam_names}
    elim.update({n: MODE_ZERO for n in mu_names})

    def coef_of(name: str, v: str) -> int:
        if name in functionals:
            return functionals[name].get(v, 0)
        if name in lam_names:
            return constraints[lam_names.index(name)].get(v, 0)
        z, a_func, p_name = ceilings[mu_names.index(name)]
        return a_func.get(v, 0) - (z if v == p_name else 0)

    factors = []
    for v in sum_vars:
        factors.append(tuple(coef_of(name, v) for name in all_names))

    base = tuple(coef_of(name, "const") for name in all_names)
    numerator = [(1, base)]
    for idx, (z, _a, _p) in enumerate(ceilings):
        mu_i = vt.index(mu_names[idx])
        expanded = []
        for coeff, mono in numerator:
            for j in range(z):
                m = list(mono)
                m[mu_i] += j
                expanded.append((coeff, tuple(m)))
        numerator = expanded
    return FactoredOmegaExpr(vt, numerator, factors, elim)


_AREA3 = {"r2": 1, "r3": 1}
_BASE3 = {"q": _AREA3, "x1": {"k1": 1}, "x2": {"k2": 1}, "x3": {"k3": 1},
          "y2": {"r2": 1}, "y3": {"r3": 1}}
_BOUNDS3 = [{"k1": 1, "r2": -1},            # r2 <= k1
            {"r2": 1, "k2": 1, "r3": -1}]   # r3 <= r2 + k2
_CEIL3 = (2, {"r2": 1, "k2": 1, "r3": -1}, "p")

_F_REGION_DEFS = {
    # part 1: r2 > k2; case 1: r2 - r3 >= k2
    "P1C1": dict(
        sum_vars=("k1", "r2", "k2", "r3", "k3"),
        bounce={"k1": 2, "r2": -1, "r3": -1},
        constraints=_BOUNDS3 + [{"r2": 1, "k2": -1, "const": -1},
                                {"r2": 1, "k2": -1, "r3": -1}],
        ceilings=[]),
    # part 1, case 2: r2 - r3 < k2, bounce needs ceil((r2 + k2 - r3)/2)
    "P1C2": dict(
        sum_vars=("k1", "r2", "k2", "r3", "p", "k3"),
        bounce={"k1": 2, "r2": -2, "p": 1},
        constraints=_BOUNDS3 + [{"r2": 1, "k2": -1, "const": -1},
                                {"k2": 1, "r3": 1, "r2": -1, "const": -1}],
        ceilings=[_CEIL3]),
    # part 2: r2 <= k2; case 1: r2 + r3 <= k2
    "P2C1": dict(
        sum_vars=("k1", "k2", "r2", "r3", "k3"),
        bounce={"k1": 2, "r2": -2, "k2": 1, "r3": -1},
        constraints=_BOUNDS3 + [{"k2": 1, "r2": -1},
                                {"k2": 1, "r2": -1, "r3": -1}],
        ceilings=[]),
    # part 2, case 2: r2 + r3 > k2
    "P2C2": dict(
        sum_vars=("k1", "k2", "r2", "r3", "p", "k3"),
        bounce={"k1": 2, "r2": -2, "p": 1},
        constraints=_BOUNDS3 + [{"k2": 1, "r2": -1},
                                {"r2": 1, "r3": 1, "k2": -1, "const": -1}],
        ceilings=[_CEIL3]),
}

# k^4 regions.  Even b is written b = 2s, odd b is written b = 2s + 1, so
# the s variable carries y3^2 (plus a constant y3 when odd).
_AREA4_B = {"k": 6, "a": -3, "b": -2, "c": -1}
_AREA4_S = {"k": 6, "a": -3, "s": -4, "c": -1}
_BASE4_B = {"q": _AREA4_B, "x": {"k": 1}, "y2": {"a": 1}, "y3": {"b": 1},
            "y4": {"c": 1}}
_BASE4_S_EVEN = {"q": _AREA4_S, "x": {"k": 1}, "y2": {"a": 1},
                 "y3": {"s": 2}, "y4": {"c": 1}}
_BASE4_S_ODD = {"q": {**_AREA4_S, "const": -2}, "x": {"k": 1}, "y2": {"a": 1},
                "y3": {"s": 2, "const": 1}, "y4": {"c": 1}}

_H_REGION_DEFS = {
    # part 1: b >= 2k - 2a; case 1: c >= 4k - 2a - 2b
    "P1C1": dict(
        base=_BASE4_B,
        sum_vars=("k", "a", "b", "c"),
        bounce={"a": 6, "b": 3, "c": 1, "k": -4},
        constraints=[{"k": 1, "a": -1},
                     {"k": 2, "a": -1, "b": -1},
                     {"k": 3, "a": -1, "b": -1, "c": -1},
                     {"a": 2, "b": 1, "k": -2},
                     {"a": 2, "b": 2, "c": 1, "k": -4}],
        ceilings=[]),
    # part 1, case 2: c < 4k - 2a - 2b, bounce needs ceil(c/2)
    "P1C2": dict(
        base=_BASE4_B,
        sum_vars=("k", "a", "b", "c", "p"),
        bounce={"a": 5, "b": 2, "p": 1, "k": -2},
        constraints=[{"k": 1, "a": -1},
                     {"k": 2, "a": -1, "b": -1},
                     {"k": 3, "a": -1, "b": -1, "c": -1},
                     {"a": 2, "b": 1, "k": -2},
                     {"k": 4, "a": -2, "b": -2, "c": -1, "const": -1}],
        ceilings=[(2, {"c": 1}, "p")]),
    # part 2: b = 2s < 2k - 2a; case 1: c >= 3k - a - 3s
    "P2C1": dict(
        base=_BASE4_S_EVEN,
        sum_vars=("k", "a", "s", "c"),
        bounce={"a": 4, "s": 4, "c": 1, "k": -2},
        constraints=[{"k": 1, "a": -1},
                     {"k": 2, "a": -1, "s": -2},
                     {"k": 3, "a": -1, "s": -2, "c": -1},
                     {"k": 2, "a": -2, "s": -2, "const": -1},
                     {"a": 1, "s": 3, "c": 1, "k": -3}],
        ceilings=[]),
    # part 2, case 2: 3k - 3a - 3s <= c < 3k - a - 3s
    "P2C2": dict(
        base=_BASE4_S_EVEN,
        sum_vars=("k", "a", "s", "c", "p"),
        bounce={"a": 2, "s": 1, "k": 1, "p": 1},
        constraints=[{"k": 1, "a": -1},
                     {"k": 2, "a": -1, "s": -2},
                     {"k": 3, "a": -1, "s": -2, "c": -1},
                     {"k": 2, "a": -2, "s": -2, "const": -1},
                     {"a": 3, "s": 3, "c": 1, "k": -3},
                     {"k": 3, "a": -1, "s": -3, "c": -1, "const": -1}],
        ceilings=[(2, {"a": 3, "s": 3, "c": 1, "k": -3}, "p")]),
    # part 2, case 3: c < 3k - 3a - 3s, bounce needs ceil(c/3)
    "P2C3": dict(
        base=_BASE4_S_EVEN,
        sum_vars=("k", "a", "s", "c", "p"),
        bounce={"a": 3, "s": 2, "p": 1},
        constraints=[{"k": 1, "a": -1},
                     {"k": 2, "a": -1, "s": -2},
                     {"k": 3, "a": -1, "s": -2, "c": -1},
                     {"k": 2, "a": -2, "s": -2, "const": -1},
                     {"k": 3, "a": -3, "s": -3, "c": -1, "const": -1}],
        ceilings=[(3, {"c": 1}, "p")]),
    # part 3: b = 2s + 1 < 2k - 2a; case bounds shift by the odd step
    "P3C1": dict(
        base=_BASE4_S_ODD,
        sum_vars=("k", "a", "s", "c"),
        bounce={"a": 4, "s": 4, "c": 1, "k": -2, "const": 3},
        constraints=[{"k": 1, "a": -1},
                     {"k": 2, "a": -1, "s": -2, "const": -1},
                     {"k": 3, "a": -1, "s": -2, "c": -1, "const": -1},
                     {"k": 2, "a": -2, "s": -2, "const": -2},
                     {"a": 1, "s": 3, "c": 1, "k": -3, "const": 2}],
        ceilings=[]),
    "P3C2": dict(
        base=_BASE4_S_ODD,
        sum_vars=("k", "a", "s", "c", "p"),
        bounce={"a": 2, "s": 1, "k": 1, "p": 1, "const": 1},
        constraints=[{"k": 1, "a": -1},
                     {"k": 2, "a": -1, "s": -2, "const": -1},
                     {"k": 3, "a": -1, "s": -2, "c": -1, "const": -1},
                     {"k": 2, "a": -2, "s": -2, "const": -2},
                     {"a": 3, "s": 3, "c": 1, "k": -3, "const": 2},
                     {"k": 3, "a": -1, "s": -3, "c": -1, "const": -3}],
        ceilings=[(2, {"a": 3, "s": 3, "c": 1, "k": -3, "const": 2}, "p")]),
    "P3C3": dict(
        base=_BASE4_S_ODD,
        sum_vars=("k", "a", "s", "c", "p"),
        bounce={"a": 3, "s": 2, "p": 1, "const": 2},
        constraints=[{"k": 1, "a": -1},
                     {"k": 2, "a": -1, "s": -2, "const": -1},
                     {"k": 3, "a": -1, "s": -2, "c": -1, "const": -1},
                     {"k": 2, "a": -2, "s": -2, "const": -2},
                     {"k": 3, "a": -3, "s": -3, "c": -1, "const": -3}],
        ceilings=[(3, {"c": 1, "const": -1}, "p")]),
}


def build_crude_F(region: str) -> FactoredOmegaExpr:
    """Crude generating function for one length-3 bounce region."""
    if region not in _F_REGION_DEFS:
        raise ValueError(f"unknown region {region!r}; expected one of {tuple(_F_REGION_DEFS)}")
    defn = _F_REGION_DEFS[region]
    functionals = dict(_BASE3)
    functionals["t"] = defn["bounce"]
    return _assemble(F_RETAINED, defn["sum_vars"], functionals,
                     defn["constraints"], defn["ceilings"])


def build_crude_H(region: str) -> FactoredOmegaExpr:
    """Crude generating function for one k^4 bounce region."""
    if region not in _H_REGION_DEFS:
        raise ValueError(f"unknown region {region!r}; expected one of {tuple(_H_REGION_DEFS)}")
    defn = _H_REGION_DEFS[region]
    functionals = dict(defn["base"])
    functionals["t"] = defn["bounce"]
    return _assemble(H_RETAINED, defn["sum_vars"], functionals,
                     defn["constraints"], defn["ceilings"])


# ----------------------------------------------------------------------
# closed forms


@cache
def _closed_form_registry() -> dict:
    text = resources.files("qtcatalan.data").joinpath("closed_forms.json").read_text()
    return json.loads(text)


def closed_form(form_id: str) -> FactoredOmegaExpr:
    """Closed rational form from the registry, with nothing to eliminate."""
    registry = _closed_form_registry()
    if form_id not in registry:
        raise ValueError(f"unknown closed form {form_id!r}; "
                         f"expected one of {tuple(registry)}")
    entry = registry[form_id]
    vt = VarTable(entry["vars"])

    def mono(exps: Mapping[str, int]) -> tuple[int, ...]:
        out = [0] * len(vt)
        for name, e in exps.items():
            out[vt.index(name)] = e
        return tuple(out)

    numerator = [(item["coeff"], mono(item["monomial"]))
                 for item in entry["numerator"]]
    factors = [mono(f) for f in entry["factors"]]
    return FactoredOmegaExpr(vt, numerator, factors, {})
