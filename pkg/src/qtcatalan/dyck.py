"""Path models and statistics for length-3 vectors and for k^4.

A path for a vector (k1, k2, k3) is determined by its red ranks
(r1 = 0, r2, r3) with 0 <= r2 <= k1 and 0 <= r3 <= r2 + k2.  The same path
can be described by run parameters (b, d): b down-steps after the first
up-run and d after the second, with r2 = a - b and r3 = a - b + c - d for
(a, c, e) = (k1, k2, k3).  A path for k^4 is determined by run parameters
(a, b, c) with 0 <= a <= k, 0 <= b <= 2k - a, 0 <= c <= 3k - a - b.

The statistics are area (sum of red ranks) and bounce (piecewise-linear
formulas below, taken as the definition here).  Neither depends on the
last vector component.
"""

from __future__ import annotations

from dataclasses import dataclass


def ceil_div(a: int, z: int) -> int:
    """Mathematical ceiling of a/z for z >= 1, correct for negative a."""
    if z <= 0:
        raise ValueError(f"ceil_div requires a positive divisor, got {z}")
    return -((-a) // z)


# ----------------------------------------------------------------------
# length-3 vectors


@dataclass(frozen=True)
class KVec3:
    """Vector (k1, k2, k3) of nonnegative integers; zero entries allowed."""

    k1: int
    k2: int
    k3: int

    def __post_init__(self):
        if min(self.k1, self.k2, self.k3) < 0:
            raise ValueError(f"vector components must be nonnegative: {self}")


@dataclass(frozen=True)
class Path3:
    """Path for a length-3 vector, given by red ranks (r2, r3)."""

    k: KVec3
    r2: int
    r3: int

    def __post_init__(self):
        if not (0 <= self.r2 <= self.k.k1):
            raise ValueError(f"r2={self.r2} out of range [0, {self.k.k1}]")
        if not (0 <= self.r3 <= self.r2 + self.k.k2):
            raise ValueError(f"r3={self.r3} out of range [0, {self.r2 + self.k.k2}]")


@dataclass(frozen=True)
class ParamPath3:
    """Path for (a, c, e) in run-parameter form (b, d)."""

    a: int
    c: int
    e: int
    b: int
    d: int

    def __post_init__(self):
        if min(self.a, self.c, self.e, self.b, self.d) < 0:
            raise ValueError(f"parameters must be nonnegative: {self}")
        if self.a - self.b < 0:
            raise ValueError(f"b={self.b} exceeds a={self.a}")
        if self.a - self.b + self.c - self.d < 0:
            raise ValueError(f"d={self.d} exceeds {self.a - self.b + self.c} for {self}")


@dataclass(frozen=True)
class Path4:
    """Path for k^4, given by run parameters (a, b, c)."""

    k: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        k, a, b, c = self.k, self.a, self.b, self.c
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        if not (0 <= a <= k):
            raise ValueError(f"a={a} out of range [0, {k}]")
        if not (0 <= b <= 2 * k - a):
            raise ValueError(f"b={b} out of range [0, {2 * k - a}]")
        if not (0 <= c <= 3 * k - a - b):
            raise ValueError(f"c={c} out of range [0, {3 * k - a - b}]")

    @property
    def red_ranks(self) -> tuple[int, int, int, int]:
        k, a, b, c = self.k, self.a, self.b, self.c
        return (0, k - a, 2 * k - a - b, 3 * k - a - b - c)


def count_paths3(k: KVec3) -> int:
    """Closed-form path count (k1+1)(k2+1) + k1(k1+1)/2."""
    return (k.k1 + 1) * (k.k2 + 1) + k.k1 * (k.k1 + 1) // 2


def enumerate_paths3(k: KVec3) -> list[Path3]:
    """All paths for k, ordered lexicographically by (r2, r3)."""
    return [Path3(k, r2, r3)
            for r2 in range(k.k1 + 1)
            for r3 in range(r2 + k.k2 + 1)]


def area3(p: Path3) -> int:
    return p.r2 + p.r3


def bounce3(p: Path3) -> int:
    """Bounce statistic from the red ranks, two-branch formula."""
    k1, k2, r2, r3 = p.k.k1, p.k.k2, p.r2, p.r3
    m = min(r2, k2)
    u = r2 + k2 - r3
    if u >= 2 * m:
        return 2 * (k1 - r2) + u - m
    return 2 * (k1 - r2) + ceil_div(u, 2)


def area_from_runs(a: int, c: int, b: int, d: int) -> int:
    """Area in run parameters: r2 + r3 = 2a - 2b + c - d."""
    return 2 * a - 2 * b + c - d


def bounce_from_runs(a: int, c: int, b: int, d: int) -> int:
    """Bounce in run parameters (e plays no role)."""
    m = min(a - b, c)
    if d >= 2 * m:
        return 2 * b + d - m
    return 2 * b + ceil_div(d, 2)


def bounce3_bd(p: ParamPath3) -> int:
    return bounce_from_runs(p.a, p.c, p.b, p.d)


def to_param3(p: Path3) -> ParamPath3:
    """Convert red ranks to run parameters: b = a - r2, d = r2 + c - r3."""
    a, c, e = p.k.k1, p.k.k2, p.k.k3
    return ParamPath3(a, c, e, a - p.r2, p.r2 + c - p.r3)


def to_redrank3(p: ParamPath3) -> Path3:
    """Inverse of :func:`to_param3`."""
    r2 = p.a - p.b
    return Path3(KVec3(p.a, p.c, p.e), r2, r2 + p.c - p.d)


# ----------------------------------------------------------------------
# k^4


def enumerate_paths4(k: int) -> list[Path4]:
    """All paths for k^4, ordered lexicographically by (a, b, c)."""
    return [Path4(k, a, b, c)
            for a in range(k + 1)
            for b in range(2 * k - a + 1)
            for c in range(3 * k - a - b + 1)]


def area4(p: Path4) -> int:
    """Sum of red ranks: 6k - 3a - 2b - c."""
    return 6 * p.k - 3 * p.a - 2 * p.b - p.c


def bounce4_case(p: Path4) -> int:
    """Index (1..8) of the unique bounce case containing the path.

    All eight predicates are evaluated; exactly one must hold.
    """
    k, a, b, c = p.k, p.a, p.b, p.c
    s = b // 2
    hits = []
    if b >= 2 * k - 2 * a:
        if c >= 4 * k - 2 * a - 2 * b:
            hits.append(1)
        if c < 4 * k - 2 * a - 2 * b:
            hits.append(2)
    else:
        if b % 2 == 0:
            # bounds use 3b/2 = 3s for even b = 2s
            if c >= 3 * k - a - 3 * s:
                hits.append(3)
            if 3 * k - 3 * a - 3 * s <= c < 3 * k - a - 3 * s:
                hits.append(4)
            if c < 3 * k - 3 * a - 3 * s:
                hits.append(5)
        else:
            # bounds use 3(b+1)/2 = 3(s+1) for odd b = 2s+1
            t = 3 * (s + 1)
            if c >= 3 * k - a - t + 1:
                hits.append(6)
            if 3 * k - 3 * a - t + 1 <= c < 3 * k - a - t + 1:
                hits.append(7)
            if c < 3 * k - 3 * a - t + 1:
                hits.append(8)
    if len(hits) != 1:
        raise AssertionError(f"bounce cases {hits} fired for {p}; expected exactly one")
    return hits[0]


def bounce4(p: Path4) -> int:
    """Bounce statistic for k^4 paths, eight-case piecewise formula."""
    k, a, b, c = p.k, p.a, p.b, p.c
    case = bounce4_case(p)
    s = b // 2
    if case == 1:
        return 6 * a + 3 * b + c - 4 * k
    if case == 2:
        return 5 * a + 2 * b + ceil_div(c, 2) - 2 * k
    if case == 3:
        return 4 * a + 2 * b + c - 2 * k
    if case == 4:
        return 2 * a + s + k + ceil_div(3 * a + 3 * s + c - 3 * k, 2)
    if case == 5:
        return 3 * a + b + ceil_div(c, 3)
    if case == 6:
        return 4 * a + 2 * b + c - 2 * k + 1
    if case == 7:
        return 2 * a + s + 1 + k + ceil_div(3 * a + 3 * s + c - 3 * k + 2, 2)
    return 3 * a + b + 1 + ceil_div(c - 1, 3)
