"""Named reduction graphs and a seeded generator of random valid ones.

The named shapes are the dual graphs of the Kodaira fibers of elliptic
curves (types I_n, I_n*, II, III, IV and their duals), a doubled-edge model
for type I_1 (whose naive dual graph would need a loop), and a couple of
higher-genus shapes used as corpus seeds. Each carries its classical jump
value so the table can be regenerated and checked.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from . import graph as _graph
from .errors import UnsupportedType
from .graph import ReductionGraph, Vertex


def _star(center_mult, center_genus, tail_mults, name):
    """Central component with one tail per entry of tail_mults."""
    verts = [Vertex("c", center_mult, center_genus)]
    edges = []
    for k, n in enumerate(tail_mults, start=1):
        verts.append(Vertex(f"t{k}", n, 0))
        edges.append(("c", f"t{k}"))
    return _graph.build(verts, edges, name=name)


def _arms(center_mult, arms, name):
    """Central component with chains of given multiplicities hanging off it."""
    verts = [Vertex("c", center_mult, 0)]
    edges = []
    for a, arm in enumerate(arms, start=1):
        prev = "c"
        for k, n in enumerate(arm, start=1):
            vid = f"a{a}_{k}"
            verts.append(Vertex(vid, n, 0))
            edges.append((prev, vid))
            prev = vid
    return _graph.build(verts, edges, name=name)


def _cycle(n, name):
    verts = [Vertex(f"v{k}", 1, 0) for k in range(1, n + 1)]
    edges = [(f"v{k}", f"v{k % n + 1}") for k in range(1, n + 1)]
    return _graph.build(verts, edges, name=name)


def _istar(n):
    """Type I_n*: a chain of n+1 double components, two reduced tails per end."""
    verts = [Vertex(f"c{k}", 2, 0) for k in range(n + 1)]
    edges = [(f"c{k}", f"c{k + 1}") for k in range(n)]
    verts += [Vertex("t1", 1, 0), Vertex("t2", 1, 0),
              Vertex("t3", 1, 0), Vertex("t4", 1, 0)]
    edges += [("c0", "t1"), ("c0", "t2"), (f"c{n}", "t3"), (f"c{n}", "t4")]
    return _graph.build(verts, edges, name=f"I{n}*")


_TAG_RE = re.compile(r"^I(\d+)(\*?)$")


def kodaira_graph(tag: str) -> ReductionGraph:
    """Dual graph of the Kodaira fiber named by tag ("I3", "I0*", "II*", ...).

    "I1" has no sncd dual graph without a loop and raises UnsupportedType;
    use "I1res" for the model with two reduced components and a doubled edge.
    """
    if tag == "I1res":
        return _graph.build(
            [Vertex("u", 1, 0), Vertex("v", 1, 0)],
            [("u", "v"), ("u", "v")], name="I1res")
    if tag == "II":
        return _star(6, 0, [3, 2, 1], "II")
    if tag == "III":
        return _star(4, 0, [2, 1, 1], "III")
    if tag == "IV":
        return _star(3, 0, [1, 1, 1], "IV")
    if tag == "IV*":
        return _arms(3, [[2, 1], [2, 1], [2, 1]], "IV*")
    if tag == "III*":
        return _arms(4, [[2], [3, 2, 1], [3, 2, 1]], "III*")
    if tag == "II*":
        return _arms(6, [[3], [4, 2], [5, 4, 3, 2, 1]], "II*")
    m = _TAG_RE.match(tag)
    if m is None:
        raise UnsupportedType(f"unknown fiber tag {tag!r}")
    n, starred = int(m.group(1)), bool(m.group(2))
    if starred:
        return _istar(n)
    if n == 0:
        return _graph.build([Vertex("e", 1, 1)], [], name="I0")
    if n == 1:
        raise UnsupportedType(
            "the I1 dual graph needs a loop; use the doubled-edge model I1res")
    return _cycle(n, f"I{n}")


def expected_jump(tag: str) -> Fraction:
    """The classical nonzero jump of the fiber type (0 for the I_n family)."""
    table = {"II": Fraction(1, 6), "III": Fraction(1, 4), "IV": Fraction(1, 3),
             "IV*": Fraction(2, 3), "III*": Fraction(3, 4), "II*": Fraction(5, 6)}
    if tag in table:
        return table[tag]
    m = _TAG_RE.match(tag)
    if m is None and tag != "I1res":
        raise UnsupportedType(f"unknown fiber tag {tag!r}")
    if m is not None and m.group(2):
        return Fraction(1, 2)
    return Fraction(0)


def genus2_example() -> ReductionGraph:
    """Genus-2 graph with jumps 0 and 1/2: an elliptic double component
    with two reduced tails."""
    return _graph.build(
        [Vertex("c", 2, 1), Vertex("t1", 1, 0), Vertex("t2", 1, 0)],
        [("c", "t1"), ("c", "t2")], name="genus2")


def _star5() -> ReductionGraph:
    """Genus-5 seed: elliptic component of multiplicity 4 with three tails."""
    return _star(4, 1, [2, 1, 1], "star5")


def _twin() -> ReductionGraph:
    """Genus-2 seed: two elliptic reduced components joined by an edge."""
    return _graph.build(
        [Vertex("u", 1, 1), Vertex("v", 1, 1)], [("u", "v")], name="twin")


def seed_graphs() -> dict:
    """Pool of minimal valid graphs the random generator starts from."""
    pool = {}
    for tag in ("I0", "I2", "I5", "II", "III", "IV",
                "I0*", "I3*", "IV*", "III*", "II*", "I1res"):
        pool[tag] = kodaira_graph(tag)
    pool["genus2"] = genus2_example()
    pool["star5"] = _star5()
    pool["twin"] = _twin()
    return pool


def catalog_tags() -> list:
    """Names accepted by the CLI catalog command."""
    tags = ["I0", "I1res"] + [f"I{n}" for n in range(2, 11)]
    tags += [f"I{n}*" for n in range(0, 6)]
    tags += ["II", "III", "IV", "IV*", "III*", "II*", "genus2"]
    return tags


def catalog_graph(name: str) -> ReductionGraph:
    if name == "genus2":
        return genus2_example()
    return kodaira_graph(name)


@dataclass(frozen=True)
class GeneratedGraph:
    """A corpus instance: the graph, the seed it grew from, and the moves."""

    graph: ReductionGraph
    base: ReductionGraph
    base_name: str
    moves: tuple


def random_instance(seed: int, moves: int) -> GeneratedGraph:
    """Grow a random valid graph by `moves` blow-ups from a pool seed.

    Deterministic in (seed, moves). Every move is a valid-by-construction
    blow-up, so the result is always a valid graph with the same genus and
    jump spectrum as its base.
    """
    rng = random.Random(seed)
    pool = seed_graphs()
    base_name = rng.choice(sorted(pool))
    g = base = pool[base_name]
    log = []
    for _ in range(moves):
        # an edgeless graph (the I0 seed before any move) only admits the
        # free-point move
        if rng.random() < 0.5 or not g.edges:
            v = rng.choice(list(g.ids))
            g = _graph.blow_up_free_point(g, v)
            log.append(("free", v))
        else:
            e = rng.randrange(len(g.edges))
            g = _graph.blow_up_edge(g, e)
            log.append(("edge", e))
    return GeneratedGraph(g, base, base_name, tuple(log))


def random_valid_graph(seed: int, moves: int) -> ReductionGraph:
    """The graph of random_instance(seed, moves)."""
    return random_instance(seed, moves).graph
