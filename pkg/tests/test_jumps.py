"""Jump spectra, conductors and the consistency-check suite.

The single-value multiplicities asserted here were computed by hand from
the intersection formula (index set, floor divisor, sigma) and frozen.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redjumps import (
    IntegralDivisor,
    RationalDivisor,
    analyze,
    blow_up_edge,
    blow_up_free_point,
    candidate_values,
    catalog_graph,
    catalog_tags,
    compute_jumps,
    expected_jump,
    floor_divisor,
    genus2_example,
    index_set,
    intersect,
    jump_multiplicity,
    jump_multiplicity_via_euler,
    kodaira_graph,
    lower_bound,
    random_instance,
    run_checks,
    seed_graphs,
    sigma,
    tame_base_change_conductor,
    unipotent_rank,
)
from redjumps.errors import PreconditionFailed

F = Fraction


# -- divisor helpers -----------------------------------------------------------

def test_divisor_lookup_defaults_to_zero():
    d = IntegralDivisor({"a": 3})
    assert d["a"] == 3
    assert d["b"] == 0


def test_rational_divisor_floor_and_frac():
    d = RationalDivisor({"a": F(7, 3), "b": F(-1, 2), "c": F(2)})
    assert d.floor().coefficients == {"a": 2, "b": -1, "c": 2}
    assert d.frac().coefficients == {"a": F(1, 3), "b": F(1, 2), "c": 0}
    assert set(d.support()) == {"a", "b", "c"}


# -- the intersection-formula ingredients on the type II star -------------------

def test_index_set_on_star():
    g = kodaira_graph("II")  # multiplicities 6, 3, 2, 1; m = 6
    assert index_set(g, 1) == {"c"}
    assert index_set(g, 2) == {"c", "t1"}
    assert index_set(g, 3) == {"c", "t2"}
    assert index_set(g, 0) == {"c", "t1", "t2", "t3"}


def test_sigma_counts_incident_edges():
    g = kodaira_graph("II")
    assert sigma(g, 1) == 3
    assert sigma(g, 0) == 3
    h = kodaira_graph("I4")
    assert sigma(h, 0) == 4


def test_floor_divisor_and_intersect():
    g = kodaira_graph("II")
    d = floor_divisor(g, 1)
    assert d.coefficients == {"c": 1, "t1": 0, "t2": 0, "t3": 0}
    assert intersect(g, d, "c") == -1
    assert intersect(g, d, "t1") == 1


def test_candidate_values():
    got = candidate_values(kodaira_graph("II"))
    assert got == [F(0), F(1, 6), F(1, 3), F(1, 2), F(2, 3), F(5, 6)]
    assert candidate_values(kodaira_graph("I7")) == [F(0)]


def test_j_range_is_validated():
    g = kodaira_graph("II")
    for bad in (-1, 6, "1", F(1, 6)):
        with pytest.raises(PreconditionFailed):
            jump_multiplicity(g, bad)
    with pytest.raises(PreconditionFailed):
        jump_multiplicity_via_euler(g, 0)
    with pytest.raises(PreconditionFailed):
        lower_bound(g, 0)


# -- frozen single multiplicities ------------------------------------------------

def test_hand_computed_multiplicities():
    assert jump_multiplicity(kodaira_graph("II"), 1) == 1
    assert jump_multiplicity(kodaira_graph("II"), 2) == 0
    assert jump_multiplicity(kodaira_graph("I3*"), 1) == 1
    assert jump_multiplicity(kodaira_graph("II*"), 50) == 1  # 50/60 = 5/6
    assert jump_multiplicity(kodaira_graph("III*"), 9) == 1  # 9/12 = 3/4
    assert jump_multiplicity(kodaira_graph("IV*"), 4) == 1  # 4/6 = 2/3
    assert jump_multiplicity(genus2_example(), 0) == 1
    assert jump_multiplicity(genus2_example(), 1) == 1


# -- full spectra ----------------------------------------------------------------

def test_elliptic_spectra_match_classical_table():
    for tag in catalog_tags():
        if tag == "genus2":
            continue
        s = compute_jumps(catalog_graph(tag))
        assert s.genus == 1
        assert s.entries == ((expected_jump(tag), 1),), tag


def test_genus2_spectrum():
    s = compute_jumps(genus2_example())
    assert s.as_dict() == {F(0): 1, F(1, 2): 1}
    assert tame_base_change_conductor(s) == F(1, 2)


def test_star5_spectrum():
    s = compute_jumps(seed_graphs()["star5"])
    assert s.as_dict() == {F(0): 1, F(1, 4): 2, F(1, 2): 1, F(3, 4): 1}
    assert s.genus == 5
    assert s.denominator_lcm() == 4
    assert tame_base_change_conductor(s) == F(7, 4)


def test_twin_spectrum():
    s = compute_jumps(seed_graphs()["twin"])
    assert s.as_dict() == {F(0): 2}
    assert tame_base_change_conductor(s) == 0


def test_spectrum_helpers():
    s = compute_jumps(seed_graphs()["star5"])
    assert s.multiplicity(F(1, 4)) == 2
    assert s.multiplicity("1/4") == 2
    assert s.multiplicity(F(1, 3)) == 0
    assert s.values() == [F(0), F(1, 4), F(1, 2), F(3, 4)]


def test_unipotent_ranks():
    assert unipotent_rank(kodaira_graph("II")) == 1
    assert unipotent_rank(kodaira_graph("I5")) == 0
    assert unipotent_rank(kodaira_graph("I0")) == 0
    assert unipotent_rank(genus2_example()) == 1
    assert unipotent_rank(seed_graphs()["star5"]) == 4
    assert unipotent_rank(seed_graphs()["twin"]) == 0


def test_lower_bound_values():
    assert lower_bound(genus2_example(), 1) == 1
    star5 = seed_graphs()["star5"]
    assert lower_bound(star5, 1) == 1
    assert lower_bound(star5, 2) == 1
    assert lower_bound(kodaira_graph("I0*"), 1) == 0


# -- the two formulas agree everywhere -------------------------------------------

def test_dual_route_on_catalog_exhaustive():
    for tag in catalog_tags():
        g = catalog_graph(tag)
        m = g.multiplicity_lcm()
        for j in range(1, m):
            assert jump_multiplicity(g, j) == jump_multiplicity_via_euler(g, j), (tag, j)


# -- analyze and the check suite ---------------------------------------------------

def test_analyze_report_fields():
    r = analyze(kodaira_graph("II"))
    assert r.name == "II"
    assert r.genus == 1
    assert r.jumps == ((F(1, 6), 1),)
    assert r.tame_base_change_conductor == F(1, 6)
    assert r.unipotent_rank == 1
    assert r.stabilization_index == 6
    assert r.principal_components == ("c",)
    assert r.minimal is True
    assert r.checks is None


def test_analyze_with_checks():
    r = analyze(genus2_example(), with_checks=True)
    assert r.checks is not None
    assert all(ok for _, ok in r.checks)


def test_analyze_on_non_minimal_model():
    g = blow_up_free_point(kodaira_graph("IV"), "c")
    r = analyze(g)
    assert r.minimal is False
    assert r.stabilization_index == 3
    assert r.jumps == ((F(1, 3), 1),)


def test_run_checks_names_and_results():
    got = dict(run_checks(kodaira_graph("II*")))
    expected_names = {
        "total-equals-genus", "zero-jump-multiplicity",
        "nonzero-count-equals-unipotent-rank", "lower-bound", "dual-route",
        "principal-denominators", "principal-converse", "positive-genus-jumps",
        "denominator-lcm", "chain-contraction",
    }
    assert set(got) == expected_names
    assert all(got.values())


# -- properties on the random corpus ----------------------------------------------

@settings(deadline=None, max_examples=60)
@given(seed=st.integers(0, 100_000), moves=st.integers(0, 12))
def test_spectrum_invariants(seed, moves):
    inst = random_instance(seed, moves)
    g = inst.graph
    s = compute_jumps(g)
    values = s.values()
    assert values == sorted(set(values))
    assert all(0 <= v < 1 for v in values)
    m = g.multiplicity_lcm()
    assert all(m % v.denominator == 0 for v in values)
    assert sum(mult for _, mult in s.entries) == g.genus()
    assert all(mult > 0 for _, mult in s.entries)
    assert s.multiplicity(0) == g.genus() - unipotent_rank(g)


@settings(deadline=None, max_examples=40)
@given(seed=st.integers(0, 100_000), moves=st.integers(0, 10))
def test_spectrum_is_a_blow_up_invariant(seed, moves):
    inst = random_instance(seed, moves)
    base = compute_jumps(inst.base)
    assert compute_jumps(inst.graph).entries == base.entries
    again = blow_up_free_point(inst.graph, inst.graph.ids[seed % len(inst.graph.ids)])
    assert compute_jumps(again).entries == base.entries
    if inst.graph.edges:
        again = blow_up_edge(inst.graph, seed % len(inst.graph.edges))
        assert compute_jumps(again).entries == base.entries


@settings(deadline=None, max_examples=40)
@given(seed=st.integers(0, 100_000), moves=st.integers(0, 10))
def test_checks_pass_on_random_instances(seed, moves):
    g = random_instance(seed, moves).graph
    assert all(ok for _, ok in run_checks(g))
