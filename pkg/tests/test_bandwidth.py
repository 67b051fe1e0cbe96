"""Tests for bandwidth: widths, lower bounds, the exact solver and bound orderings."""

import itertools
from math import ceil

import pytest
from conftest import complete, cycle, path

from ordercert.bandwidth import (
    Caterpillar,
    atfree_bandwidth_ordering,
    bound_ordering,
    caterpillar_ordering,
    cocomp_bandwidth_ordering,
    exact_bandwidth,
    find_spanning_caterpillar,
    interval_bandwidth_ordering,
    lower_bounds,
    ordering_width,
    proper_interval_bandwidth_ordering,
    split_bandwidth_ordering,
    validate_kkm,
)
from ordercert.errors import (
    NotInClassError,
    PreconditionError,
    RepresentationError,
    SizeGuardError,
)
from ordercert.generators import (
    complete_bipartite,
    enumerate_all_graphs,
    split_extremal,
)
from ordercert.graph import from_edge_list, max_clique_size, max_degree
from ordercert.recognition import ClassId, recognize


def brute_force_bandwidth(g):
    """Minimum width over all n! orderings."""
    return min(ordering_width(g, o) for o in itertools.permutations(range(g.n)))


# --- widths and lower bounds ---
def test_ordering_width_c4():
    """Test widths of C4 in two orders."""
    assert ordering_width(cycle(4), (0, 1, 2, 3)) == 3
    assert ordering_width(cycle(4), (0, 1, 3, 2)) == 2


def test_ordering_width_edgeless():
    """Test an edgeless graph has width 0."""
    assert ordering_width(from_edge_list(3, []), (2, 1, 0)) == 0


def test_lower_bounds_p4():
    """Test all three bounds are 1 on P4."""
    assert lower_bounds(path(4)) == {"degree": 1, "diameter": 1, "clique": 1}


def test_lower_bounds_k33():
    """Test the K_{3,3} bounds."""
    assert lower_bounds(complete_bipartite(3, 3)) == {
        "degree": 2,
        "diameter": 3,
        "clique": 1,
    }


def test_lower_bounds_split_extremal():
    """Test the diameter bound of split_extremal(4) is ceil(7 / 3)."""
    assert lower_bounds(split_extremal(4))["diameter"] == 3


# --- exact solver ---
def test_exact_bandwidth_path():
    """Test paths have bandwidth 1."""
    assert exact_bandwidth(path(7)).value == 1


def test_exact_bandwidth_complete():
    """Test K_n has bandwidth n - 1."""
    assert exact_bandwidth(complete(5)).value == 4


def test_exact_bandwidth_c6():
    """Test C6 has bandwidth 2."""
    assert exact_bandwidth(cycle(6)).value == 2


def test_exact_bandwidth_k33():
    """Test K_{3,3} has bandwidth 4, confirmed by brute force."""
    g = complete_bipartite(3, 3)
    result = exact_bandwidth(g)
    assert result.value == 4
    assert brute_force_bandwidth(g) == 4
    assert ordering_width(g, result.ordering) == 4
    assert result.lower_bounds == lower_bounds(g)


def test_exact_bandwidth_disconnected():
    """Test components are solved separately and concatenated."""
    g = from_edge_list(6, [(0, 1), (1, 2), (3, 4), (3, 5), (4, 5)])
    result = exact_bandwidth(g)
    assert result.value == 2
    assert set(result.ordering.order[:3]) == {0, 1, 2}


def test_exact_bandwidth_trivial_graphs():
    """Test the empty and single-vertex graphs have bandwidth 0."""
    assert exact_bandwidth(from_edge_list(0, [])).value == 0
    assert exact_bandwidth(from_edge_list(1, [])).value == 0


def test_exact_bandwidth_guard():
    """Test the solver refuses graphs above its guard."""
    with pytest.raises(SizeGuardError, match="bandwidth"):
        exact_bandwidth(path(15))
    assert exact_bandwidth(path(15), max_n=15).value == 1


def test_exact_bandwidth_exhaustive():
    """Test the solver against brute force and its lower bounds on n <= 6."""
    for n in range(1, 7):
        for g in enumerate_all_graphs(n, canonical=True):
            result = exact_bandwidth(g)
            assert ordering_width(g, result.ordering) == result.value
            assert result.value >= max(result.lower_bounds.values())
            assert result.value == brute_force_bandwidth(g)


# --- bound orderings ---
def test_interval_bound_p4():
    """Test P4 gets width 1 against the guarantee 2."""
    result = interval_bandwidth_ordering(path(4))
    assert (result.width, result.bound, result.bound_name) == (1, 2, "max_degree")


def test_interval_bound_star_and_triangle():
    """Test the star and K3 stay within max degree."""
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert interval_bandwidth_ordering(star).width <= 3
    assert interval_bandwidth_ordering(complete(3)).width == 2


def test_interval_bound_non_member():
    """Test C4 is refused with its refutation."""
    with pytest.raises(NotInClassError) as excinfo:
        interval_bandwidth_ordering(cycle(4))
    assert not excinfo.value.recognition.member
    assert excinfo.value.recognition.graph_class is ClassId.INTERVAL_GRAPH


def test_proper_interval_bound_is_clique_number():
    """Test the proper interval ordering of P5 has width 1."""
    result = proper_interval_bandwidth_ordering(path(5))
    assert result.width == result.bound == 1


def test_cocomp_bound_examples():
    """Test C4, K5 and P4 against 2 max degree - 1."""
    c4 = cocomp_bandwidth_ordering(cycle(4))
    assert c4.bound == 3 and c4.width <= 3
    k5 = cocomp_bandwidth_ordering(complete(5))
    assert k5.width == 4 and k5.bound == 7
    assert cocomp_bandwidth_ordering(path(4)).width <= 3


def test_cocomp_bound_needs_an_edge():
    """Test the edgeless graph is a precondition error."""
    with pytest.raises(PreconditionError):
        cocomp_bandwidth_ordering(from_edge_list(3, []))


def test_split_bound_k3_pendant(k3_pendant):
    """Test K3 plus pendant: width 3 against 15 and |I1|+|K|-1 = 3."""
    result = split_bandwidth_ordering(k3_pendant)
    assert result.bound == 15
    assert result.extra_bounds == {"|I1|+|K|-1": 3}
    assert result.width == 3


def test_split_bound_trivial_cases():
    """Test complete and edgeless split graphs."""
    assert split_bandwidth_ordering(complete(4)).width == 3
    edgeless = split_bandwidth_ordering(from_edge_list(3, []))
    assert edgeless.width == 0 and edgeless.bound == 0


def test_split_bound_isolated_first():
    """Test isolated vertices are placed before the rest."""
    g = from_edge_list(5, [(1, 2), (1, 3), (2, 3)])
    assert split_bandwidth_ordering(g).ordering.order == (0, 4, 1, 2, 3)


def test_bound_ordering_dispatch():
    """Test dispatch by class name and refusal of classes without a bound."""
    assert bound_ordering(path(4), "interval").graph_class is ClassId.INTERVAL_GRAPH
    with pytest.raises(ValueError, match="no bandwidth bound"):
        bound_ordering(path(4), "comparability")


def test_bound_suites_exhaustive():
    """Test every class bound on all graphs with n <= 6."""
    for n in range(1, 7):
        for g in enumerate_all_graphs(n, canonical=True):
            delta = max_degree(g)
            if recognize(g, "interval").member:
                assert interval_bandwidth_ordering(g).width <= delta
            if recognize(g, "proper-interval").member:
                omega = max_clique_size(g)
                assert proper_interval_bandwidth_ordering(g).width <= omega - 1
                assert exact_bandwidth(g).value == omega - 1
            if g.num_edges and recognize(g, "co-comparability").member:
                assert cocomp_bandwidth_ordering(g).width <= 2 * delta - 1
            if recognize(g, "split").member:
                assert split_bandwidth_ordering(g).width <= delta * (delta + 2)
            if recognize(g, "at-free").member:
                assert atfree_bandwidth_ordering(g).width <= 3 * delta
                assert exact_bandwidth(g).value <= 3 * delta


# --- caterpillars ---
def test_caterpillar_ordering_star():
    """Test the star orders centre then leaves."""
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    c = Caterpillar(star, (0,), ((1, 2, 3),))
    assert caterpillar_ordering(c).order == (0, 1, 2, 3)
    assert ordering_width(star, caterpillar_ordering(c)) == 3


def test_caterpillar_ordering_path():
    """Test a bare path is its own spine."""
    c = Caterpillar.from_tree(path(5))
    assert c.spine == (0, 1, 2, 3, 4)
    assert caterpillar_ordering(c).order == (0, 1, 2, 3, 4)


def test_caterpillar_ordering_two_spine_vertices():
    """Test leaves follow their spine vertex: (a, x, b, y, z)."""
    tree = from_edge_list(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
    c = Caterpillar(tree, (0, 1), ((2,), (3, 4)))
    assert caterpillar_ordering(c).order == (0, 2, 1, 3, 4)
    assert ordering_width(tree, caterpillar_ordering(c)) <= 3


def test_caterpillar_rejects_bad_decomposition():
    """Test leaves must hang off their spine vertex."""
    tree = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(RepresentationError):
        Caterpillar(tree, (1, 2), ((0,), (0,)))
    with pytest.raises(RepresentationError):
        Caterpillar(cycle(4), (0, 1, 2, 3), ((),) * 4)


def test_from_tree_rejects_spider(spider):
    """Test the subdivided claw is not a caterpillar."""
    with pytest.raises(RepresentationError, match="not a caterpillar"):
        Caterpillar.from_tree(spider)


def test_caterpillar_width_on_own_tree():
    """Test caterpillar orderings stay within the tree's max degree."""
    for n in range(2, 8):
        for t in enumerate_all_graphs(n, canonical=True):
            try:
                c = Caterpillar.from_tree(t)
            except RepresentationError:
                continue
            assert ordering_width(t, caterpillar_ordering(c)) <= max_degree(t)


def test_atfree_with_spanning_path_of_c4():
    """Test C4 with the spanning path 0-1-2-3 gives width 3."""
    c = Caterpillar.from_tree(path(4))
    result = atfree_bandwidth_ordering(cycle(4), c)
    assert result.ordering.order == (0, 1, 2, 3)
    assert result.width == 3 and result.bound == 6


def test_kkm_violation_on_c6():
    """Test the closing edge of C6 lies at tree distance 5 on a spanning path."""
    c = Caterpillar.from_tree(path(6))
    assert validate_kkm(cycle(6), c) == (0, 5)


def test_atfree_explicit_caterpillar_violation():
    """Test a caterpillar breaking the distance condition is a precondition error."""
    spokes = [(0, v) for v in range(1, 6)]
    fan = from_edge_list(6, spokes + [(i, i + 1) for i in range(1, 5)])
    assert recognize(fan, "at-free").member
    with pytest.raises(PreconditionError) as excinfo:
        atfree_bandwidth_ordering(fan, Caterpillar.from_tree(path(6)))
    assert excinfo.value.witness == (0, 4)


def test_kkm_requires_spanning_tree():
    """Test a caterpillar using a non-edge is rejected."""
    with pytest.raises(PreconditionError):
        g = from_edge_list(4, [(0, 1), (1, 2)])
        validate_kkm(g, Caterpillar.from_tree(path(4)))


def test_find_spanning_caterpillar_examples():
    """Test paths, C4 and C6."""
    found = find_spanning_caterpillar(path(5))
    assert found is not None and validate_kkm(path(5), found) is None
    c4 = find_spanning_caterpillar(cycle(4))
    assert c4 is not None and validate_kkm(cycle(4), c4) is None
    assert find_spanning_caterpillar(cycle(6)) is None


def test_find_spanning_caterpillar_preconditions():
    """Test disconnected and oversized graphs are refused."""
    with pytest.raises(PreconditionError):
        find_spanning_caterpillar(from_edge_list(3, [(0, 1)]))
    with pytest.raises(SizeGuardError):
        find_spanning_caterpillar(path(11))


# --- split extremal ---
@pytest.mark.parametrize("delta", [2, 3, 4, 5])
def test_split_extremal_bandwidth_lower_bounds(delta):
    """Test split_extremal(delta) needs width >= (N-1)/3 and >= delta^2/12."""
    g = split_extremal(delta)
    value = exact_bandwidth(g).value
    assert value >= ceil((g.n - 1) / 3)
    assert value >= delta * delta / 12
    assert split_bandwidth_ordering(g).width <= delta * (delta + 2)


@pytest.mark.slow
def test_bounds_exhaustive_n7():
    """Test the exact solver and class bounds on every graph with 7 vertices."""
    for g in enumerate_all_graphs(7, canonical=True):
        result = exact_bandwidth(g)
        delta = max_degree(g)
        assert result.value >= max(result.lower_bounds.values())
        if recognize(g, "at-free").member:
            assert result.value <= 3 * delta
            assert atfree_bandwidth_ordering(g).width <= 3 * delta
        if g.num_edges and recognize(g, "co-comparability").member:
            assert cocomp_bandwidth_ordering(g).width <= 2 * delta - 1
        if recognize(g, "proper-interval").member:
            assert result.value == max_clique_size(g) - 1
