"""Monoid-level verification of the local saturation computations.

The local charts behind tame base change at a point of the special fiber
come in two shapes. Case 1 (a smooth point of a branch of multiplicity a,
after a degree-m extension, a | m) is the image Q of Z x N^2 in
Z^3 / <(1, a, -m)>, written in coordinates q = (u, v, w); the first
generator is a unit, so membership and saturation only involve (v, w):

    q in Q       iff  there is k in Z with v + k a >= 0 and w - k m >= 0,
                 iff  ceil(-v/a) <= floor(w/m);
    q in Q^sat   iff  m v + a w >= 0.

Case 2 (a node joining branches of multiplicities a and b, a | m, b | m)
is the image of N^3 in Z^3 / <(a, b, -m)>:

    q in Q       iff  max(ceil(-u/a), ceil(-v/b)) <= floor(w/m);
    q in Q^sat   iff  m u + a w >= 0 and m v + b w >= 0.

The closed forms are what the package computes with; the _search variants
re-derive them from the definitions with bounded enumeration (the bounds
a*m and m*max(a, b) on the saturation multiplier are exact: off the cone
boundary, scaling by a*m makes the feasible interval for k at least 1
long, and on a boundary facet the denominator of the critical ratio
divides the branch multiplicity). The membership and saturation functions
accept plain integers or integer numpy arrays componentwise.

AffineMonoid covers finitely generated submonoids of N^r for the pushout
lemma: Q = P +_N (1/d) N glued along 1 |-> e in P has canonical forms
(x, n/d) with x in P^gp and 0 <= n < d, and for saturated P,
(x, n/d) in Q^sat iff d x + n e in P (multiplying any witness multiple by
d lands in P's group and saturation finishes the argument).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, lcm

import numpy as np

from .errors import (InternalInconsistency, NotSaturatedInput,
                     PreconditionFailed)
from .lattices import column_hnf


def _check_chart_int(name, x):
    if not isinstance(x, int) or isinstance(x, bool) or x < 1:
        raise PreconditionFailed(f"{name} must be a positive integer, got {x!r}")


@dataclass(frozen=True)
class SaturationChartCase1:
    """Chart at a smooth point of a branch of multiplicity a, with a | m."""

    a: int
    m: int

    def __post_init__(self):
        _check_chart_int("a", self.a)
        _check_chart_int("m", self.m)
        if self.m % self.a != 0:
            raise PreconditionFailed(f"a must divide m, got a={self.a}, m={self.m}")


@dataclass(frozen=True)
class SaturationChartCase2:
    """Chart at a node joining branches of multiplicities a and b, a | m, b | m."""

    a: int
    b: int
    m: int

    def __post_init__(self):
        _check_chart_int("a", self.a)
        _check_chart_int("b", self.b)
        _check_chart_int("m", self.m)
        if self.m % self.a != 0 or self.m % self.b != 0:
            raise PreconditionFailed(
                f"a and b must divide m, got a={self.a}, b={self.b}, m={self.m}")


def member_case1(chart, q):
    """Whether q = (u, v, w) lies in the case-1 chart monoid."""
    _, v, w = q
    return -(v // chart.a) <= w // chart.m


def sat_member_case1(chart, q):
    """Whether q = (u, v, w) lies in the saturation of the case-1 monoid."""
    _, v, w = q
    return chart.m * v + chart.a * w >= 0


def member_case2(chart, q):
    """Whether q = (u, v, w) lies in the case-2 chart monoid."""
    u, v, w = q
    f = w // chart.m
    return (-(u // chart.a) <= f) & (-(v // chart.b) <= f)


def sat_member_case2(chart, q):
    """Whether q = (u, v, w) lies in the saturation of the case-2 monoid."""
    u, v, w = q
    return (chart.m * u + chart.a * w >= 0) & (chart.m * v + chart.b * w >= 0)


def member_case1_search(chart, q):
    """Definition-level membership: search the shift k directly."""
    _, v, w = q
    bound = abs(v) + abs(w) + 1
    return any(v + k * chart.a >= 0 and w - k * chart.m >= 0
               for k in range(-bound, bound + 1))


def sat_member_case1_search(chart, q):
    """Definition-level saturation membership: try multiples up to a*m."""
    u, v, w = q
    return any(member_case1_search(chart, (n * u, n * v, n * w))
               for n in range(1, chart.a * chart.m + 1))


def member_case2_search(chart, q):
    u, v, w = q
    bound = abs(u) + abs(v) + abs(w) + 1
    return any(u + k * chart.a >= 0 and v + k * chart.b >= 0
               and w - k * chart.m >= 0
               for k in range(-bound, bound + 1))


def sat_member_case2_search(chart, q):
    u, v, w = q
    top = chart.m * max(chart.a, chart.b)
    return any(member_case2_search(chart, (n * u, n * v, n * w))
               for n in range(1, top + 1))


def cokernel_generators_case1(chart):
    """Generators (j, floor(j a / m)) of Q^sat over Q in the case-1 chart.

    The pair (j, f) stands for the chart element (0, -f, j): it always lies
    in Q^sat, and it lies in Q itself exactly when f = 0.
    """
    a, m = chart.a, chart.m
    return tuple((j, (j * a) // m) for j in range(1, m))


def divisible_case1(chart, s, t, i):
    """Divisibility of monomials in the case-1 chart algebra: whether the
    degree-(s, i) element is divisible by t powers of the base parameter."""
    for name, x in (("s", s), ("t", t), ("i", i)):
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise PreconditionFailed(f"{name} must be a non-negative integer, got {x!r}")
    return chart.a * (s - i) - chart.m * t >= 0


def filtration_summands(chart, i):
    """Indices of the graded summands above level i, for 0 <= i < m."""
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i <= chart.m - 1:
        raise PreconditionFailed(f"need 0 <= i <= m - 1 = {chart.m - 1}, got {i!r}")
    return list(range(1, chart.m - i))


def charts_case1(max_m):
    """All case-1 charts with m <= max_m."""
    return [SaturationChartCase1(a, m)
            for m in range(1, max_m + 1)
            for a in range(1, m + 1) if m % a == 0]


def charts_case2(max_m):
    """All case-2 charts with m <= max_m."""
    return [SaturationChartCase2(a, b, m)
            for m in range(1, max_m + 1)
            for a in range(1, m + 1) if m % a == 0
            for b in range(1, m + 1) if m % b == 0]


# -- base-change stability of a chart ----------------------------------------

def _branch_saturated(e, n, c, box):
    """Bounded check that one branch condition of the degree-(e, n) pushout
    is saturated: no (t, W) in the box has e n t + c W >= 0 but
    e t + c floor(W / n) < 0."""
    rng = np.arange(-box, box + 1)
    T, W = np.meshgrid(rng, rng, indexing="ij")
    sat = e * n * T + c * W >= 0
    mem = e * T + c * (W // n) >= 0
    return not bool(np.any(sat & ~mem))


def chart_saturation_index(chart, nmax=3, box=24):
    """Least degree e of base extension after which the chart stays
    saturated under every further tame extension.

    A further degree-n pushout of the degree-e extension is saturated for
    all n exactly when each branch multiplicity divides e, so the index is
    the lcm of the branch multiplicities; the implementation finds it by
    the bounded box checks rather than by quoting that fact.
    """
    if isinstance(chart, SaturationChartCase1):
        branch = (chart.a,)
    elif isinstance(chart, SaturationChartCase2):
        branch = (chart.a, chart.b)
    else:
        raise PreconditionFailed(f"not a saturation chart: {chart!r}")
    cap = lcm(*branch)
    for e in range(1, cap + 1):
        if all(_branch_saturated(e, n, c, box)
               for n in range(2, nmax + 1) for c in branch):
            return e
    raise InternalInconsistency("no stable degree found up to the lcm bound")


# -- finitely generated submonoids of N^r ------------------------------------

@dataclass
class AffineMonoid:
    """Submonoid of N^r generated by finitely many non-negative vectors."""

    generators: tuple
    _grid: object = field(default=None, init=False, repr=False, compare=False)
    _grid_bound: int = field(default=-1, init=False, repr=False, compare=False)
    _hnf: object = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        if not gens:
            raise PreconditionFailed("need at least one generator")
        r = len(gens[0])
        if r < 1 or any(len(g) != r for g in gens):
            raise PreconditionFailed("generators must be nonempty vectors of equal length")
        for g in gens:
            for x in g:
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise PreconditionFailed(
                        f"generator entries must be non-negative integers, got {x!r}")
        self.generators = gens

    @property
    def rank(self):
        return len(self.generators[0])

    def _ensure_grid(self, bound):
        if bound <= self._grid_bound:
            return
        bound = max(bound, 2 * self._grid_bound, 8)
        r = self.rank
        grid = np.zeros((bound + 1,) * r, dtype=bool)
        grid[(0,) * r] = True
        gens = [g for g in set(self.generators)
                if any(g) and all(c <= bound for c in g)]
        changed = True
        while changed:
            changed = False
            for g in gens:
                src = grid[tuple(slice(None, bound + 1 - c) for c in g)]
                dst = grid[tuple(slice(c, None) for c in g)]
                new = src & ~dst
                if new.any():
                    dst |= src
                    changed = True
        self._grid = grid
        self._grid_bound = bound

    def contains(self, x):
        """Membership in the monoid (non-negative combinations only)."""
        x = tuple(x)
        if len(x) != self.rank:
            raise PreconditionFailed("vector has the wrong length")
        if any(c < 0 for c in x):
            return False
        self._ensure_grid(max(x) if x else 0)
        return bool(self._grid[x])

    def group_contains(self, x):
        """Membership in the group generated by the monoid."""
        x = tuple(x)
        if len(x) != self.rank:
            raise PreconditionFailed("vector has the wrong length")
        if self._hnf is None:
            rows = [[g[i] for g in self.generators] for i in range(self.rank)]
            self._hnf = column_hnf(rows)
        cols, pivots = self._hnf
        residual = list(x)
        for col, pr in zip(cols, pivots):
            q, r = divmod(residual[pr], col[pr])
            if r != 0:
                return False
            residual = [ri - q * ci for ri, ci in zip(residual, col)]
        return all(ri == 0 for ri in residual)

    def is_saturated(self, box, kmax=None):
        """Bounded saturation check on [0, box]^r with multipliers up to kmax."""
        if kmax is None:
            kmax = max(2, box)
        for x in itertools.product(range(box + 1), repeat=self.rank):
            if not any(x) or self.contains(x) or not self.group_contains(x):
                continue
            if any(self.contains(tuple(k * c for c in x))
                   for k in range(2, kmax + 1)):
                return False
        return True


def verify_lemm_coker(P, e, d, box):
    """Check, over a box, that every saturation element of Q = P +_N (1/d)N
    glued along e already becomes integral after adding e once.

    For each x in [-box, box]^r inside P^gp and each n in [0, d), the
    canonical element q = (x, n/d) lies in Q^sat iff d x + n e lies in P
    (P must be saturated for that criterion, hence NotSaturatedInput);
    whenever it does, the claim is that x + e lies in P. Returns the number
    of saturation elements checked; a counterexample raises
    InternalInconsistency.
    """
    if not isinstance(P, AffineMonoid):
        raise PreconditionFailed("P must be an AffineMonoid")
    e = tuple(e)
    if not P.contains(e):
        raise PreconditionFailed("e must be an element of P")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise PreconditionFailed(f"d must be a positive integer, got {d!r}")
    if not isinstance(box, int) or box < 1:
        raise PreconditionFailed(f"box must be a positive integer, got {box!r}")
    if not P.is_saturated(box):
        raise NotSaturatedInput("P is not saturated on the verification box")
    r = P.rank
    count = 0
    for x in itertools.product(range(-box, box + 1), repeat=r):
        if not P.group_contains(x):
            continue
        for n in range(d):
            scaled = tuple(d * xi + n * ei for xi, ei in zip(x, e))
            if not P.contains(scaled):
                continue
            if not P.contains(tuple(xi + ei for xi, ei in zip(x, e))):
                raise InternalInconsistency(
                    f"saturation element (x={x}, n={n}/{d}) with x + e outside P")
            count += 1
    return count


def _cross(p, q):
    return p[0] * q[1] - p[1] * q[0]


def random_cone_monoid(rng):
    """A saturated submonoid of N^2: all lattice points of a random
    two-dimensional cone, generated by its points with coordinates <= 6."""
    while True:
        r1 = (rng.randint(0, 3), rng.randint(0, 3))
        r2 = (rng.randint(0, 3), rng.randint(0, 3))
        if any(r1) and any(r2):
            break
    if _cross(r1, r2) < 0:
        r1, r2 = r2, r1

    def in_cone(p):
        if _cross(r1, r2) == 0:
            return _cross(r1, p) == 0 and p[0] * r1[0] + p[1] * r1[1] >= 0
        return _cross(r1, p) >= 0 and _cross(p, r2) >= 0

    gens = [(x, y) for x in range(7) for y in range(7)
            if (x, y) != (0, 0) and in_cone((x, y))]
    return AffineMonoid(tuple(gens))
