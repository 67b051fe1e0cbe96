"""Tests for certifying representations and their conversions to orderings."""

import itertools
from fractions import Fraction

import pytest
from conftest import complete, cycle, path

from ordercert.conditions import ConditionId, check_ordering, holds_all
from ordercert.errors import PreconditionError, RepresentationError
from ordercert.generators import enumerate_all_graphs
from ordercert.graph import complement, from_edge_list, relabel
from ordercert.recognition import recognize, recognize_chordal_fast
from ordercert.representations import (
    FunctionDiagram,
    IntervalModel,
    Orientation,
    OrientationMode,
    Permutation,
    canonicalize_intervals,
    curves_intersect,
    intersection_graph_of_diagram,
    intersection_graph_of_intervals,
    intersection_graph_of_subtrees,
    interval_model_from_ordering,
    is_transitive,
    linear_diagram_from_permutation,
    ordering_from_diagram,
    ordering_from_intervals,
    orientation_from_ordering,
    permutation_from_ordering,
    permutation_graph,
    proper_interval_model_from_ordering,
    split_ordering,
    split_partition_from_ordering,
    transitivity_violation,
)


def endpoints(model):
    """Intervals as integer pairs."""
    return [(int(a), int(b)) for a, b in model.intervals]


# --- interval models ---
def test_interval_model_p3():
    """Test P3 in path order gets [1,2], [2,3], [3,3]."""
    model = interval_model_from_ordering(path(3), (0, 1, 2))
    assert endpoints(model) == [(1, 2), (2, 3), (3, 3)]
    assert intersection_graph_of_intervals(model) == path(3)


@pytest.mark.parametrize("order", list(itertools.permutations(range(3))))
def test_interval_model_k3(order):
    """Test K3 in any order gets [1,3], [2,3], [3,3] by position."""
    model = interval_model_from_ordering(complete(3), order)
    by_position = [endpoints(model)[v] for v in order]
    assert by_position == [(1, 3), (2, 3), (3, 3)]


def test_interval_model_edgeless():
    """Test isolated vertices get pairwise disjoint points."""
    model = interval_model_from_ordering(from_edge_list(3, []), (2, 0, 1))
    assert endpoints(model) == [(2, 2), (3, 3), (1, 1)]


def test_interval_model_precondition():
    """Test a non-INTERVAL ordering is rejected with its witness."""
    with pytest.raises(PreconditionError) as excinfo:
        interval_model_from_ordering(path(3), (0, 2, 1))
    assert excinfo.value.witness.positions == (0, 1, 2)


def test_interval_model_rejects_reversed_endpoints():
    """Test left > right is a representation error."""
    with pytest.raises(RepresentationError):
        IntervalModel.of([(2, 1)])


def test_ordering_from_intervals_p3():
    """Test [0,2], [1,3], [5/2,4] order by left endpoint."""
    model = IntervalModel.of([(0, 2), (1, 3), ("5/2", 4)])
    g = intersection_graph_of_intervals(model)
    assert g == path(3)
    ordering = ordering_from_intervals(model)
    assert ordering.order == (0, 1, 2)
    assert check_ordering(g, ordering, "interval").holds


def test_ordering_from_nested_intervals():
    """Test the outer interval comes first."""
    assert ordering_from_intervals(IntervalModel.of([(0, 10), (1, 2)])).order == (0, 1)


def test_ordering_from_tied_left_endpoints():
    """Test equal left endpoints are tie-broken and INTERVAL holds either way."""
    model = IntervalModel.of([(0, 1), (0, 2)])
    g = intersection_graph_of_intervals(model)
    assert ordering_from_intervals(model).order == (0, 1)
    for order in itertools.permutations(range(2)):
        assert check_ordering(g, order, "interval").holds


def test_canonicalize_keeps_touching_intervals():
    """Test touching closed intervals still meet after canonicalisation."""
    model = IntervalModel.of([(0, 1), (1, 2), (3, 3)])
    canonical = canonicalize_intervals(model)
    ends = sorted(x for iv in canonical.intervals for x in iv)
    assert ends == [Fraction(k) for k in range(1, 7)]
    expected = intersection_graph_of_intervals(model)
    assert intersection_graph_of_intervals(canonical) == expected


def test_proper_interval_model_is_proper():
    """Test the proper model of P4 has no nested intervals."""
    model = proper_interval_model_from_ordering(path(4), (0, 1, 2, 3))
    assert model.is_proper()
    assert intersection_graph_of_intervals(model) == path(4)


def test_proper_interval_precondition():
    """Test the claw ordering fails PROPER_INTERVAL."""
    claw = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(PreconditionError):
        proper_interval_model_from_ordering(claw, (1, 0, 2, 3))


def _check_interval_round_trip(g):
    rec = recognize(g, "interval")
    if not rec.member:
        return
    model = interval_model_from_ordering(g, rec.ordering)
    assert intersection_graph_of_intervals(model) == g
    assert check_ordering(g, ordering_from_intervals(model), "interval").holds
    proper = recognize(g, "proper-interval")
    if proper.member:
        pmodel = proper_interval_model_from_ordering(g, proper.ordering)
        assert pmodel.is_proper()
        assert intersection_graph_of_intervals(pmodel) == g


def test_interval_round_trips_exhaustively():
    """Test ordering -> model -> graph and model -> ordering on every interval graph."""
    for n in range(1, 6):
        for g in enumerate_all_graphs(n, canonical=True):
            _check_interval_round_trip(g)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_interval_round_trips_exhaustively_large(n):
    """Test the interval round trips on every graph with 6 and 7 vertices."""
    for g in enumerate_all_graphs(n, canonical=True):
        _check_interval_round_trip(g)



# --- subtrees ---
def test_subtrees_of_a_path():
    """Test subtrees {a}, {a,b}, {b,c} of a-b-c intersect as P3."""
    host = path(3)
    assert intersection_graph_of_subtrees(host, [{0}, {0, 1}, {1, 2}]) == path(3)


def test_disconnected_subtree_rejected():
    """Test a disconnected vertex set is not a subtree."""
    with pytest.raises(RepresentationError, match="disconnected"):
        intersection_graph_of_subtrees(path(3), [{0, 2}])


def test_non_tree_host_rejected():
    """Test the host must be a tree."""
    with pytest.raises(RepresentationError, match="not a tree"):
        intersection_graph_of_subtrees(cycle(4), [{0}])


def test_subtree_graphs_are_chordal():
    """Test every family of subtrees of a small tree gives a chordal graph."""
    host = from_edge_list(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    connected = []
    for r in range(1, 6):
        for subset in itertools.combinations(range(5), r):
            try:
                intersection_graph_of_subtrees(host, [subset])
            except RepresentationError:
                continue
            connected.append(subset)
    for family in itertools.combinations(connected, 4):
        g = intersection_graph_of_subtrees(host, family)
        assert recognize_chordal_fast(g) is not None


# --- orientations ---
def test_k3_orientation_is_total_order():
    """Test the identity ordering orients K3 as 0 -> 1 -> 2."""
    o = orientation_from_ordering(complete(3), (0, 1, 2))
    assert o.sorted_arcs() == [(0, 1), (0, 2), (1, 2)]
    assert is_transitive(o)


def test_c4_orientations():
    """Test both orientations of C4 from (0, 2, 1, 3)."""
    c4 = cycle(4)
    edges = orientation_from_ordering(c4, (0, 2, 1, 3), OrientationMode.EDGES)
    assert edges.underlying_graph() == c4
    assert is_transitive(edges)
    non_edges = orientation_from_ordering(c4, (0, 2, 1, 3), "non-edges")
    assert non_edges.underlying_graph() == complement(c4)
    assert non_edges.sorted_arcs() == [(0, 2), (1, 3)]


def test_orientation_precondition():
    """Test edges mode requires COMPARABILITY and reports the witness."""
    with pytest.raises(PreconditionError) as excinfo:
        orientation_from_ordering(path(3), (0, 1, 2), "edges")
    assert excinfo.value.witness.positions == (0, 1, 2)


def test_transitivity_violation_found():
    """Test an open directed 2-path is reported."""
    o = Orientation(3, frozenset({(0, 1), (1, 2)}))
    assert transitivity_violation(o) == (0, 1, 2)


def test_orientation_rejects_antiparallel_arcs():
    """Test arcs in both directions are rejected."""
    with pytest.raises(RepresentationError):
        Orientation(2, frozenset({(0, 1), (1, 0)}))


def _check_orientations(g):
    for order in itertools.permutations(range(g.n)):
        if check_ordering(g, order, ConditionId.COMPARABILITY).holds:
            assert is_transitive(orientation_from_ordering(g, order, "edges"))
        if check_ordering(g, order, ConditionId.CO_COMPARABILITY).holds:
            assert is_transitive(orientation_from_ordering(g, order, "non-edges"))


def test_orientations_exhaustively_transitive():
    """Test every passing ordering on n <= 5 yields transitive orientations."""
    for g in enumerate_all_graphs(5, canonical=True):
        _check_orientations(g)


@pytest.mark.slow
def test_orientations_exhaustively_transitive_n6():
    """Test every passing ordering on n = 6 yields transitive orientations."""
    for g in enumerate_all_graphs(6, canonical=True):
        _check_orientations(g)



# --- diagrams and permutations ---
def test_crossing_segments():
    """Test two segments crossing at x = 1/2 intersect."""
    d = FunctionDiagram((0, 1), ((0, 1), (1, 0)))
    assert intersection_graph_of_diagram(d) == complete(2)


def test_parallel_curves():
    """Test parallel non-touching curves give an edgeless graph."""
    d = FunctionDiagram((0, "1/2", 1), ((0, 1, 0), (1, 2, 1), (2, 3, 2)))
    assert intersection_graph_of_diagram(d).num_edges == 0
    assert ordering_from_diagram(d).order == (0, 1, 2)


def test_touching_curves_intersect():
    """Test curves meeting at a breakpoint count as intersecting."""
    assert curves_intersect((Fraction(0), Fraction(1)), (Fraction(1), Fraction(1)))


def test_diagram_grid_validation():
    """Test grids must run from 0 to 1 strictly increasing."""
    with pytest.raises(RepresentationError):
        FunctionDiagram((0, "1/2"), ((0, 1),))
    with pytest.raises(RepresentationError):
        FunctionDiagram((0, 1, 1), ((0, 1, 2),))
    with pytest.raises(RepresentationError):
        FunctionDiagram((0, 1), ((0, 1, 2),))


def test_diagram_ordering_is_co_comparability():
    """Test a piecewise-linear diagram's x = 0 ordering satisfies CO_COMPARABILITY."""
    d = FunctionDiagram(
        (0, "1/2", 1),
        ((0, 3, 0), (1, 0, 3), (2, 2, 1), (3, 1, 2)),
    )
    g = intersection_graph_of_diagram(d)
    assert check_ordering(g, ordering_from_diagram(d), "co-comparability").holds


def test_diagram_ordering_with_tie_at_zero():
    """Test curves 0 and 1 start together and both tie orders pass."""
    d = FunctionDiagram(
        (0, "1/2", 1),
        ((0, 2, 2), (0, 0, 0), (1, 1, 3), (3, 3, 1)),
    )
    g = intersection_graph_of_diagram(d)
    assert g.edges() == [(0, 1), (0, 2), (0, 3), (2, 3)]
    assert ordering_from_diagram(d).order == (1, 0, 2, 3)
    for order in ((1, 0, 2, 3), (0, 1, 2, 3)):
        assert check_ordering(g, order, "co-comparability").holds


@pytest.mark.parametrize(
    "curves",
    [
        ((0, 2, 2), (0, 0, 0), (1, 1, 3), (3, 3, 1)),
        ((1, 0, 0), (1, 2, 0), (1, 3, 3), (0, 1, 3), (2, 2, 2)),
        ((0, 1, 0), (0, 0, 1), (0, 2, 2), (1, 1, 1), (1, 3, 0)),
    ],
)
def test_diagram_ordering_ignores_tie_order(curves):
    """Test every order of the curves tied at x = 0 satisfies CO_COMPARABILITY."""
    d = FunctionDiagram((0, "1/2", 1), curves)
    g = intersection_graph_of_diagram(d)
    order = ordering_from_diagram(d).order
    groups = [
        list(block)
        for _, block in itertools.groupby(order, key=lambda c: d.curves[c][0])
    ]
    assert any(len(block) > 1 for block in groups)
    for choice in itertools.product(*(itertools.permutations(b) for b in groups)):
        candidate = [v for block in choice for v in block]
        assert check_ordering(g, candidate, "co-comparability").holds


def test_permutation_graph_examples():
    """Test identity, reversal and (3, 1, 2) permutation graphs."""
    assert permutation_graph(Permutation((1, 2, 3, 4))).num_edges == 0
    assert permutation_graph(Permutation((4, 3, 2, 1))) == complete(4)
    assert permutation_graph(Permutation((3, 1, 2))).edges() == [(0, 2), (1, 2)]


def test_permutation_rejects_non_bijection():
    """Test repeated values are rejected."""
    with pytest.raises(RepresentationError):
        Permutation((1, 1, 2))


def test_linear_diagram_of_312():
    """Test the linear diagram of (3, 1, 2) reproduces P3 and orders v1, v2, v3."""
    pi = Permutation((3, 1, 2))
    d = linear_diagram_from_permutation(pi)
    assert d.is_linear
    g = intersection_graph_of_diagram(d)
    assert g == permutation_graph(pi)
    ordering = ordering_from_diagram(d)
    assert ordering.order == (0, 1, 2)
    assert check_ordering(g, ordering, "co-comparability").holds


def test_permutations_exhaustively_coherent():
    """Test diagram and inversion graphs agree and the identity self-certifies."""
    for n in range(1, 7):
        for values in itertools.permutations(range(1, n + 1)):
            pi = Permutation(values)
            g = permutation_graph(pi)
            diagram = linear_diagram_from_permutation(pi)
            assert intersection_graph_of_diagram(diagram) == g
            assert holds_all(g, tuple(range(n)), ["comparability", "co-comparability"])


def test_permutation_from_ordering_c4():
    """Test the realiser built from (0, 2, 1, 3) reproduces C4."""
    c4 = cycle(4)
    model = permutation_from_ordering(c4, (0, 2, 1, 3))
    assert model.labelling == (0, 2, 1, 3)
    assert permutation_graph(model.permutation) == relabel(c4, model.labelling)
    expected = relabel(c4, model.labelling)
    assert intersection_graph_of_diagram(model.diagram()) == expected


def test_permutation_from_ordering_exhaustive():
    """Test every permutation graph on n <= 5 gets a realiser."""
    for g in enumerate_all_graphs(5, canonical=True):
        rec = recognize(g, "permutation")
        if rec.member:
            model = permutation_from_ordering(g, rec.ordering)
            assert permutation_graph(model.permutation) == relabel(g, model.labelling)


# --- split partitions ---
def test_split_ordering_k3_pendant(k3_pendant):
    """Test the pendant vertex comes first and SIMPLE_SPLIT holds."""
    ordering = split_ordering(k3_pendant, [0, 1, 2], [3])
    assert ordering.order == (3, 0, 1, 2)
    assert check_ordering(k3_pendant, ordering, "simple-split").holds


def test_split_ordering_edgeless_and_complete():
    """Test the trivial partitions of edgeless and complete graphs."""
    assert split_ordering(from_edge_list(3, []), [], [0, 1, 2]).order == (0, 1, 2)
    assert split_ordering(complete(3), [0, 1, 2], []).order == (0, 1, 2)


def test_split_ordering_names_offending_pair(k3_pendant):
    """Test an invalid partition reports the non-adjacent clique pair."""
    with pytest.raises(PreconditionError) as excinfo:
        split_ordering(k3_pendant, [1, 2, 3], [0])
    assert excinfo.value.witness == (1, 3)


def test_split_partition_from_ordering(k3_pendant):
    """Test the partition is read back off a SIMPLE_SPLIT ordering."""
    assert split_partition_from_ordering(k3_pendant, (3, 0, 1, 2)) == ((0, 1, 2), (3,))
