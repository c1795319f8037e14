"""Construction, validation and model surgery on reduction graphs."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redjumps import ReductionGraph, Vertex
from redjumps import (
    blow_down,
    blow_up_edge,
    blow_up_free_point,
    build,
    catalog_graph,
    catalog_tags,
    contract_chains,
    genus2_example,
    is_isomorphic,
    kodaira_graph,
    minimize,
    principal_dominating,
    random_valid_graph,
)
from redjumps.errors import (
    NonIntegralSelfIntersection,
    NotContractible,
    NotMinimal,
    PreconditionFailed,
    UnknownEdge,
    UnknownVertex,
    ValidationError,
    WouldCreateLoop,
)


def codes(exc: ValidationError):
    return {v.code for v in exc.report.violations}


# -- structural validation ---------------------------------------------------

def test_duplicate_vertex_id_rejected():
    with pytest.raises(ValidationError) as e:
        ReductionGraph((Vertex("a", 1), Vertex("a", 2)), ())
    assert "vertex-id" in codes(e.value)


def test_loop_edge_rejected():
    with pytest.raises(ValidationError) as e:
        ReductionGraph((Vertex("a", 1, 1),), (("a", "a"),))
    assert "loop" in codes(e.value)


def test_unknown_edge_endpoint_rejected():
    with pytest.raises(ValidationError) as e:
        ReductionGraph((Vertex("a", 1, 1),), (("a", "b"),))
    assert "edge-endpoint" in codes(e.value)


def test_bad_labels_rejected():
    with pytest.raises(ValidationError) as e:
        ReductionGraph((Vertex("a", 0, 1), Vertex("b", 2, -1), Vertex("", 1)), ())
    got = codes(e.value)
    assert {"multiplicity", "genus-label", "vertex-id"} <= got


def test_bool_labels_rejected():
    with pytest.raises(ValidationError) as e:
        ReductionGraph((Vertex("a", True, 1),), ())
    assert "multiplicity" in codes(e.value)


def test_empty_graph_rejected():
    with pytest.raises(ValidationError) as e:
        ReductionGraph((), ())
    assert "empty" in codes(e.value)


def test_edges_are_normalized():
    g = ReductionGraph((Vertex("b", 1, 1), Vertex("a", 1, 1)), (("b", "a"), ("a", "b")))
    assert g.edges == (("a", "b"), ("a", "b"))


# -- semantic validation ------------------------------------------------------

def test_disconnected_graph_reported():
    g = ReductionGraph((Vertex("a", 1, 1), Vertex("b", 1, 1)), ())
    report = g.validate()
    assert not report.ok
    assert {v.code for v in report.violations} == {"connected"}


def test_gcd_violation_reported():
    g = ReductionGraph((Vertex("a", 2, 1),), ())
    got = {v.code for v in g.validate().violations}
    assert "gcd" in got


def test_nonintegral_self_intersection_reported():
    # neighbour sum at b is 1, not divisible by 2
    g = ReductionGraph((Vertex("a", 1), Vertex("b", 2)), (("a", "b"),))
    got = {v.code for v in g.validate().violations}
    assert "self-intersection" in got
    with pytest.raises(NonIntegralSelfIntersection):
        g.self_intersection("b")


def test_genus_zero_reported():
    g = ReductionGraph((Vertex("a", 1, 0),), ())
    got = {v.code for v in g.validate().violations}
    assert got == {"genus"}


def test_build_raises_on_semantic_violation():
    with pytest.raises(ValidationError) as e:
        build([Vertex("a", 2, 1)], [])
    assert "gcd" in codes(e.value)


def test_build_accepts_plain_iterables():
    g = build([Vertex("a", 1, 1)], [], name="point")
    assert g.name == "point"
    assert g.validate().ok


# -- derived geometry ---------------------------------------------------------

def test_self_intersections_on_star():
    g = kodaira_graph("II")
    assert g.self_intersection("c") == -1
    assert sorted(g.self_intersection(t) for t in ("t1", "t2", "t3")) == [-6, -3, -2]


def test_unknown_vertex_raises():
    g = kodaira_graph("II")
    with pytest.raises(UnknownVertex):
        g.vertex("zz")
    with pytest.raises(UnknownVertex):
        g.degree("zz")


def test_genus_of_catalog_entries():
    for tag in catalog_tags():
        g = catalog_graph(tag)
        expected = 2 if tag == "genus2" else 1
        assert g.genus() == expected, tag


def test_first_betti():
    assert kodaira_graph("I5").first_betti() == 1
    assert kodaira_graph("I1res").first_betti() == 1
    assert kodaira_graph("II").first_betti() == 0


def test_multiplicity_lcm():
    assert kodaira_graph("II").multiplicity_lcm() == 6
    assert kodaira_graph("I3*").multiplicity_lcm() == 2
    assert kodaira_graph("I4").multiplicity_lcm() == 1


def test_principal_components():
    assert kodaira_graph("II").principal_components() == {"c"}
    assert kodaira_graph("I5").principal_components() == set()
    assert genus2_example().principal_components() == {"c"}


def test_stabilization_index():
    assert kodaira_graph("II").stabilization_index() == 6
    assert kodaira_graph("I5").stabilization_index() == 1
    assert kodaira_graph("I0*").stabilization_index() == 2
    assert genus2_example().stabilization_index() == 2


def test_stabilization_index_requires_minimal_model():
    g = blow_up_free_point(kodaira_graph("II"), "c")
    with pytest.raises(NotMinimal):
        g.stabilization_index()


# -- blow-ups and blow-downs --------------------------------------------------

def test_blow_up_free_point_shape():
    g = kodaira_graph("II")
    h = blow_up_free_point(g, "c", new_id="x")
    assert h.multiplicity("x") == 6
    assert h.vertex("x").genus == 0
    assert h.degree("x") == 1
    assert h.genus() == g.genus()
    assert not h.is_minimal()


def test_blow_up_edge_shape():
    g = kodaira_graph("II")
    h = blow_up_edge(g, ("c", "t1"), new_id="x")
    assert h.multiplicity("x") == 9
    assert sorted(h.neighbors("x")) == ["c", "t1"]
    assert ("c", "t1") not in h.edges
    assert h.genus() == g.genus()


def test_blow_up_edge_by_index():
    g = kodaira_graph("I2")
    h = blow_up_edge(g, 0)
    assert len(h.vertices) == 3
    assert h.genus() == 1


def test_blow_up_unknown_targets():
    g = kodaira_graph("II")
    with pytest.raises(UnknownVertex):
        blow_up_free_point(g, "zz")
    with pytest.raises(UnknownEdge):
        blow_up_edge(g, ("t1", "t2"))
    with pytest.raises(UnknownEdge):
        blow_up_edge(g, 99)


def test_blow_down_inverts_blow_ups():
    g = kodaira_graph("III")
    assert blow_down(blow_up_free_point(g, "c", new_id="x"), "x") == g
    assert is_isomorphic(blow_down(blow_up_edge(g, ("c", "t1"), new_id="x"), "x"), g)


def test_blow_down_rejects_non_exceptional():
    g = kodaira_graph("II")
    with pytest.raises(NotContractible):
        blow_down(g, "t1")  # E^2 = -2
    star = genus2_example()
    with pytest.raises(NotContractible):
        blow_down(star, "c")  # genus 1


def test_blow_down_refuses_to_create_loop():
    # u and b joined by two parallel edges; b is exceptional but its
    # contraction would close a loop at u.
    g = build([Vertex("u", 1, 0), Vertex("b", 2, 0)], [("u", "b"), ("u", "b")])
    assert g.genus() == 1
    with pytest.raises(WouldCreateLoop):
        blow_down(g, "b")
    with pytest.raises(WouldCreateLoop):
        minimize(g)


def test_minimize_round_trip():
    g = kodaira_graph("IV*")
    h = blow_up_free_point(g, "c", new_id="x")
    h = blow_up_edge(h, ("c", "x"), new_id="y")
    h = blow_up_free_point(h, "y", new_id="z")
    assert not h.is_minimal()
    assert is_isomorphic(minimize(h), g)


def test_minimize_of_minimal_is_identity():
    g = kodaira_graph("II*")
    assert minimize(g) == g


def test_catalog_entries_are_minimal():
    for tag in catalog_tags():
        assert catalog_graph(tag).is_minimal(), tag


# -- chain contraction and tail domination ------------------------------------

def test_contract_chains_examples():
    assert contract_chains(kodaira_graph("II")) == ([1, 2, 3, 6], 6)
    assert contract_chains(kodaira_graph("III*")) == ([1, 1, 2, 4], 4)
    assert contract_chains(kodaira_graph("I5")) == ([1, 1, 1, 1, 1], 1)
    assert contract_chains(genus2_example()) == ([1, 1, 2], 2)


def test_contract_chains_requires_minimal_model():
    with pytest.raises(NotMinimal):
        contract_chains(blow_up_free_point(kodaira_graph("II"), "c"))


def test_principal_dominating_walks_to_center():
    g = kodaira_graph("II")
    assert principal_dominating(g, "t1") == "c"
    assert principal_dominating(g, "t2") == "c"
    assert principal_dominating(kodaira_graph("III*"), "a1_1") == "c"
    # end of the middle II* arm, two steps from the center
    assert principal_dominating(kodaira_graph("II*"), "a2_2") == "c"


def test_principal_dominating_preconditions():
    g = kodaira_graph("IV")
    with pytest.raises(PreconditionFailed):
        principal_dominating(g, "t1")  # multiplicity 1
    with pytest.raises(PreconditionFailed):
        principal_dominating(g, "c")  # not a tail
    with pytest.raises(PreconditionFailed):
        principal_dominating(blow_up_free_point(g, "c"), "t1")


# -- isomorphism ---------------------------------------------------------------

def test_isomorphism_ignores_ids_but_not_labels():
    g = kodaira_graph("IV")
    relabeled = build(
        [Vertex("x", 3, 0), Vertex("p", 1, 0), Vertex("q", 1, 0), Vertex("r", 1, 0)],
        [("x", "p"), ("x", "q"), ("x", "r")],
    )
    assert is_isomorphic(g, relabeled)
    assert not is_isomorphic(g, kodaira_graph("III"))
    assert not is_isomorphic(g, kodaira_graph("I3"))


# -- randomized surgery --------------------------------------------------------

@settings(deadline=None, max_examples=40)
@given(seed=st.integers(0, 10_000), moves=st.integers(0, 10))
def test_random_surgery_preserves_validity_and_genus(seed, moves):
    g = random_valid_graph(seed, moves=moves)
    assert g.validate().ok
    h = minimize(g)
    assert h.validate().ok
    assert h.genus() == g.genus()
    assert h.first_betti() == g.first_betti()
    assert len(h.vertices) <= len(g.vertices)
