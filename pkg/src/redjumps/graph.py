"""Multiplicity/genus-labelled dual graphs of sncd special fibers.

A reduction graph records the combinatorial shadow of a regular model with
strict normal crossings: one vertex per irreducible component of the special
fiber, labelled with its multiplicity N_v >= 1 and geometric genus g_v >= 0,
and one edge per intersection point (parallel edges allowed, loops not:
strict normal crossings means smooth components, so a self-intersecting
component must be resolved by one blow-up before it fits this data model).

Since the whole special fiber has zero intersection with each component,
the self-intersection of a component is determined by the labels:

    N_v * E_v^2 + sum over incident edges of N_opposite = 0

and the genus of the generic fiber comes out of adjunction:

    2g - 2 = sum_v N_v * (2 g_v - 2 - E_v^2).

Everything downstream (jump spectra, stabilization indices) consumes these
two derived quantities, so validity of the labels is enforced up front.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, lcm

import networkx as nx

from .errors import (
    InconsistentGeometry,
    InternalInconsistency,
    NonIntegralSelfIntersection,
    NoPrincipalFound,
    NotContractible,
    NotMinimal,
    PreconditionFailed,
    UnknownEdge,
    UnknownVertex,
    ValidationError,
    WouldCreateLoop,
)


@dataclass(frozen=True)
class Vertex:
    """One irreducible component: multiplicity N >= 1, genus >= 0."""

    id: str
    multiplicity: int
    genus: int = 0


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: str = ""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def messages(self):
        return [f"{v.code}: {v.message}" for v in self.violations]


def _structural_problems(vertices, edges):
    problems = []
    seen = set()
    for v in vertices:
        if not isinstance(v.id, str) or not v.id:
            problems.append(Violation("vertex-id", "vertex ids must be non-empty strings", str(v.id)))
        elif v.id in seen:
            problems.append(Violation("vertex-id", f"duplicate vertex id {v.id!r}", v.id))
        seen.add(v.id)
        if not isinstance(v.multiplicity, int) or isinstance(v.multiplicity, bool) or v.multiplicity < 1:
            problems.append(Violation("multiplicity", f"vertex {v.id!r} needs integer multiplicity >= 1, got {v.multiplicity!r}", v.id))
        if not isinstance(v.genus, int) or isinstance(v.genus, bool) or v.genus < 0:
            problems.append(Violation("genus-label", f"vertex {v.id!r} needs integer genus >= 0, got {v.genus!r}", v.id))
    if not vertices:
        problems.append(Violation("empty", "graph needs at least one vertex"))
    for k, (a, b) in enumerate(edges):
        if a not in seen or b not in seen:
            problems.append(Violation("edge-endpoint", f"edge #{k} {a!r}-{b!r} references an unknown vertex", f"{a}-{b}"))
        if a == b:
            problems.append(Violation("loop", f"edge #{k} is a loop at {a!r}; loops are forbidden (resolve the node by a blow-up first)", a))
    return problems


@dataclass(frozen=True)
class ReductionGraph:
    """Immutable labelled multigraph. Edges are unordered id pairs.

    Construction rejects structural garbage (duplicate ids, loops, unknown
    endpoints, bad label types). The semantic invariants (connectivity,
    gcd of multiplicities = 1, integral self-intersections, derived genus
    >= 1) are checked by :meth:`validate`; use :func:`build` to construct
    and validate in one step. All operations below assume a valid graph.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, str], ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(sorted(e)) for e in self.edges))
        problems = _structural_problems(self.vertices, self.edges)
        if problems:
            report = ValidationReport(False, tuple(problems))
            raise ValidationError("; ".join(report.messages()), report)

    # -- basic accessors ---------------------------------------------------

    @cached_property
    def _by_id(self):
        return {v.id: v for v in self.vertices}

    @cached_property
    def _adjacency(self):
        adj = {v.id: [] for v in self.vertices}
        for k, (a, b) in enumerate(self.edges):
            adj[a].append((b, k))
            adj[b].append((a, k))
        return adj

    @property
    def ids(self):
        return [v.id for v in self.vertices]

    def vertex(self, vid: str) -> Vertex:
        try:
            return self._by_id[vid]
        except KeyError:
            raise UnknownVertex(f"no vertex {vid!r}") from None

    def has_vertex(self, vid: str) -> bool:
        return vid in self._by_id

    def degree(self, vid: str) -> int:
        self.vertex(vid)
        return len(self._adjacency[vid])

    def neighbors(self, vid: str):
        """Ids opposite each incident edge (repeats for parallel edges)."""
        self.vertex(vid)
        return [w for w, _ in self._adjacency[vid]]

    def multiplicity(self, vid: str) -> int:
        return self.vertex(vid).multiplicity

    # -- semantic validation ----------------------------------------------

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0].id}
        stack = [self.vertices[0].id]
        while stack:
            for w, _ in self._adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def validate(self) -> ValidationReport:
        """Check the semantic invariants; never raises."""
        problems = []
        if not self.is_connected():
            problems.append(Violation("connected", "graph is not connected"))
        g = gcd(*(v.multiplicity for v in self.vertices)) if len(self.vertices) > 1 else self.vertices[0].multiplicity
        if g != 1:
            problems.append(Violation("gcd", f"gcd of multiplicities is {g}, must be 1"))
        bad_div = False
        for v in self.vertices:
            s = sum(self._by_id[w].multiplicity for w, _ in self._adjacency[v.id])
            if s % v.multiplicity != 0:
                bad_div = True
                problems.append(Violation(
                    "self-intersection",
                    f"vertex {v.id!r}: multiplicity {v.multiplicity} does not divide "
                    f"the sum {s} of neighbouring multiplicities",
                    v.id,
                ))
        if not bad_div:
            # genus is computable once self-intersections are integral
            twice = self._twice_genus_minus_two()
            if twice % 2 != 0:
                problems.append(Violation("genus-parity", f"adjunction sum {twice} is odd"))
            elif 1 + twice // 2 < 1:
                problems.append(Violation("genus", f"derived genus {1 + twice // 2} < 1"))
        return ValidationReport(not problems, tuple(problems))

    # -- derived geometry ---------------------------------------------------

    def self_intersection(self, vid: str) -> int:
        v = self.vertex(vid)
        s = sum(self._by_id[w].multiplicity for w, _ in self._adjacency[vid])
        if s % v.multiplicity != 0:
            raise NonIntegralSelfIntersection(
                f"vertex {vid!r}: {v.multiplicity} does not divide neighbour sum {s}")
        return -(s // v.multiplicity)

    def _twice_genus_minus_two(self) -> int:
        total = 0
        for v in self.vertices:
            total += v.multiplicity * (2 * v.genus - 2 - self.self_intersection(v.id))
        return total

    def genus(self) -> int:
        """Genus of the generic fiber, via adjunction."""
        twice = self._twice_genus_minus_two()
        if twice % 2 != 0:
            raise InconsistentGeometry(f"adjunction sum {twice} is odd")
        g = 1 + twice // 2
        if g < 1:
            raise InconsistentGeometry(f"derived genus {g} < 1")
        return g

    def first_betti(self) -> int:
        """b_1 of the dual graph: |E| - |V| + 1 (graph is connected)."""
        return len(self.edges) - len(self.vertices) + 1

    def multiplicity_lcm(self) -> int:
        return lcm(*(v.multiplicity for v in self.vertices)) if len(self.vertices) > 1 else self.vertices[0].multiplicity

    def principal_components(self) -> set[str]:
        """Components of genus >= 1, or genus 0 meeting the rest in >= 3 points."""
        return {v.id for v in self.vertices
                if v.genus >= 1 or len(self._adjacency[v.id]) >= 3}

    def is_minimal(self) -> bool:
        """No genus-0 vertex of degree <= 2 has self-intersection -1."""
        return not any(self._eligible(v) for v in self.vertices)

    def _eligible(self, v: Vertex) -> bool:
        return (v.genus == 0 and len(self._adjacency[v.id]) <= 2
                and self.self_intersection(v.id) == -1)

    def stabilization_index(self) -> int:
        """lcm of principal multiplicities. Defined on minimal graphs only."""
        if not self.is_minimal():
            raise NotMinimal("stabilization index is read off the minimal model; minimize() first")
        principal = self.principal_components()
        if not principal:
            return 1
        return lcm(*(self._by_id[i].multiplicity for i in principal)) if len(principal) > 1 \
            else self._by_id[next(iter(principal))].multiplicity

    def as_multigraph(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        for v in self.vertices:
            G.add_node(v.id, multiplicity=v.multiplicity, genus=v.genus)
        G.add_edges_from(self.edges)
        return G


def build(vertices, edges, name: str = "") -> ReductionGraph:
    """Construct a graph and raise ValidationError unless it is fully valid."""
    g = ReductionGraph(tuple(vertices), tuple(edges), name)
    report = g.validate()
    if not report.ok:
        raise ValidationError("; ".join(report.messages()), report)
    return g


def _check_valid(g: ReductionGraph):
    report = g.validate()
    if not report.ok:
        raise ValidationError("; ".join(report.messages()), report)


def _fresh_id(g: ReductionGraph, hint: str = "b") -> str:
    for n in itertools.count(1):
        cand = f"{hint}{n}"
        if not g.has_vertex(cand):
            return cand


# -- model surgery ----------------------------------------------------------

def blow_up_free_point(g: ReductionGraph, v: str, new_id: str | None = None) -> ReductionGraph:
    """Blow up a point lying on the single component v.

    The exceptional curve inherits multiplicity N_v, genus 0, and meets v
    once. Genus, first Betti number and the jump spectrum are unchanged.
    """
    vert = g.vertex(v)
    nid = new_id if new_id is not None else _fresh_id(g)
    if g.has_vertex(nid):
        raise ValidationError(f"vertex id {nid!r} already in use")
    return build(g.vertices + (Vertex(nid, vert.multiplicity, 0),),
                 g.edges + ((v, nid),), g.name)


def _edge_index(g: ReductionGraph, e) -> int:
    if isinstance(e, int):
        if not 0 <= e < len(g.edges):
            raise UnknownEdge(f"edge index {e} out of range (graph has {len(g.edges)} edges)")
        return e
    pair = tuple(sorted(e))
    for k, known in enumerate(g.edges):
        if known == pair:
            return k
    raise UnknownEdge(f"no edge {pair[0]!r}-{pair[1]!r}")


def blow_up_edge(g: ReductionGraph, e, new_id: str | None = None) -> ReductionGraph:
    """Blow up an intersection point.

    The edge e (an index, or an endpoint pair) between i and j is replaced
    by a new genus-0 vertex of multiplicity N_i + N_j joined to both.
    """
    k = _edge_index(g, e)
    a, b = g.edges[k]
    nid = new_id if new_id is not None else _fresh_id(g)
    if g.has_vertex(nid):
        raise ValidationError(f"vertex id {nid!r} already in use")
    nv = Vertex(nid, g.multiplicity(a) + g.multiplicity(b), 0)
    edges = g.edges[:k] + g.edges[k + 1:] + ((a, nid), (b, nid))
    return build(g.vertices + (nv,), edges, g.name)


def blow_down(g: ReductionGraph, v: str) -> ReductionGraph:
    """Contract an exceptional curve (genus 0, E^2 = -1, degree <= 2).

    Degree 1 removes the vertex and its edge; degree 2 with distinct
    neighbours i, j replaces the two edges by a single edge i-j. Two
    parallel edges to one neighbour would turn into a loop, which leaves
    the strict-normal-crossings class: WouldCreateLoop.
    """
    vert = g.vertex(v)
    deg = g.degree(v)
    if vert.genus != 0 or deg == 0 or deg > 2 or g.self_intersection(v) != -1:
        raise NotContractible(
            f"vertex {v!r}: need genus 0, degree 1 or 2, self-intersection -1 "
            f"(got genus {vert.genus}, degree {deg}, E^2 {g.self_intersection(v)})")
    nbrs = g.neighbors(v)
    keep_edges = [e for e in g.edges if v not in e]
    if deg == 2:
        i, j = nbrs
        if i == j:
            raise WouldCreateLoop(
                f"vertex {v!r} has both edges to {i!r}; contraction would create a node")
        keep_edges.append(tuple(sorted((i, j))))
    vertices = tuple(w for w in g.vertices if w.id != v)
    return build(vertices, keep_edges, g.name)


def minimize(g: ReductionGraph) -> ReductionGraph:
    """Greedily blow down until no exceptional curve remains.

    Contraction order is deterministic (lexicographic by id); the result is
    independent of order. If the only remaining exceptional curves have both
    edges on one neighbour the graph cannot be minimized inside the sncd
    class and WouldCreateLoop propagates.
    """
    _check_valid(g)
    while True:
        eligible = sorted(v.id for v in g.vertices if g._eligible(v))
        if not eligible:
            return g
        blocked = None
        for vid in eligible:
            try:
                g = blow_down(g, vid)
                blocked = None
                break
            except WouldCreateLoop as exc:
                blocked = exc
        if blocked is not None:
            raise blocked


def contract_chains(g: ReductionGraph):
    """Multiplicities surviving the contraction of all open genus-0 chains.

    Keeps every vertex of genus >= 1 or degree != 2 and returns (sorted
    multiplicity list, their lcm). The lcm is the saturation index of the
    log regular model obtained by contracting the degree-2 rational chains.
    If ALL vertices are genus-0 of degree 2 (a cycle), the multiplicities
    are constant = 1 on a minimal valid graph; the lcm over everything is
    returned (1).
    """
    if not g.is_minimal():
        raise NotMinimal("contract_chains is defined on the minimal model")
    kept = [v.multiplicity for v in g.vertices
            if v.genus >= 1 or g.degree(v.id) != 2]
    if not kept:
        kept = [v.multiplicity for v in g.vertices]
    return sorted(kept), lcm(*kept) if len(kept) > 1 else kept[0]


def principal_dominating(g: ReductionGraph, v0: str) -> str:
    """Walk a genus-0 tail of multiplicity N_0 > 1 to its principal end.

    From a degree-1 genus-0 vertex the walk follows the unique chain of
    degree-2 genus-0 vertices; the component it lands on is principal,
    has multiplicity divisible by N_0, and (on minimal graphs) strictly
    larger than N_0. Both divisibility facts are asserted.
    """
    if not g.is_minimal():
        raise PreconditionFailed("principal_dominating expects a minimal graph")
    start = g.vertex(v0)
    if start.genus != 0 or g.degree(v0) != 1 or start.multiplicity <= 1:
        raise PreconditionFailed(
            f"vertex {v0!r}: need genus 0, degree 1 and multiplicity > 1 "
            f"(got genus {start.genus}, degree {g.degree(v0)}, N {start.multiplicity})")
    principal = g.principal_components()
    prev, cur = v0, g.neighbors(v0)[0]
    while cur not in principal:
        v = g.vertex(cur)
        if v.genus != 0 or g.degree(cur) != 2:
            raise NoPrincipalFound(f"chain from {v0!r} dead-ends at {cur!r}")
        nxt = [w for w, _ in g._adjacency[cur] if w != prev]
        if not nxt:
            raise NoPrincipalFound(f"chain from {v0!r} dead-ends at {cur!r}")
        prev, cur = cur, nxt[0]
    n0, nt = start.multiplicity, g.multiplicity(cur)
    if nt % n0 != 0 or nt <= n0:
        raise InternalInconsistency(
            f"tail multiplicity {n0} should strictly divide principal {nt}")
    return cur


def is_isomorphic(g1: ReductionGraph, g2: ReductionGraph) -> bool:
    """Label-preserving multigraph isomorphism (multiplicity and genus)."""
    match = nx.algorithms.isomorphism.categorical_node_match(
        ["multiplicity", "genus"], [None, None])
    return nx.is_isomorphic(g1.as_multigraph(), g2.as_multigraph(), node_match=match)
