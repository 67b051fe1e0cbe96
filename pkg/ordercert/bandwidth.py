"""Bandwidth: exact values at desk scale, lower bounds, and bound-achieving orderings.

ordercert.bandwidth
-------------------

The width of an ordering is the longest edge it stretches; the bandwidth of a
graph is the minimum width over all orderings. This module provides:

    - ordering_width and the exact solver exact_bandwidth (branch and bound
      per connected component, iterative deepening on the width).
    - lower_bounds: half the maximum degree, (n' - 1)/d' per component and
      one less than the clique number.
    - Class-specific orderings with guaranteed widths: interval (<= max
      degree), proper interval (<= clique number - 1), co-comparability
      (<= 2 max degree - 1), split (<= max degree (max degree + 2)) and AT-free
      (<= 3 max degree, through a spanning caterpillar).

Every bound ordering is measured with ordering_width before it is returned and
an InvariantError is raised if a guarantee is ever missed.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from math import ceil
from typing import Optional, Union

from .errors import (
    InvariantError,
    NotInClassError,
    PreconditionError,
    RepresentationError,
)
from .graph import (
    Graph,
    VertexOrdering,
    as_ordering,
    component_masks,
    distances_from,
    from_edge_list,
    induced_subgraph,
    max_clique_size,
    max_degree,
)
from .limits import guard
from .recognition import ClassId, Recognition, recognize
from .utils import bits_to_mask, iter_bits

log = logging.getLogger(__name__)


def ordering_width(g: Graph, ordering: Union[VertexOrdering, Sequence[int]]) -> int:
    """Largest |pos(u) - pos(v)| over the edges uv; 0 without edges.

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        >>> ordering_width(c4, [0, 1, 3, 2])
        2

    """
    pos = as_ordering(g, ordering).pos
    return max((abs(pos[u] - pos[v]) for u, v in g.edges()), default=0)


# --- Lower bounds ---


def _component_graphs(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    return [induced_subgraph(g, iter_bits(mask)) for mask in component_masks(g)]


def _eccentricity_diameter(h: Graph) -> int:
    return max((max(d for d in distances_from(h, v)) for v in range(h.n)), default=0)


def lower_bounds(g: Graph) -> dict[str, int]:
    """Three lower bounds on the bandwidth of g.

    Returns:
        dict[str, int]: ``degree`` = ceil(max degree / 2); ``diameter`` = max
            over components of ceil((n' - 1) / d'), where n' and d' are the
            component's order and diameter; ``clique`` = clique number - 1.
            Each is 0 when it does not apply.

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> k33 = from_edge_list(6, [(a, b) for a in range(3) for b in range(3, 6)])
        >>> lower_bounds(k33)
        {'degree': 2, 'diameter': 3, 'clique': 1}

    """
    diameter_bound = 0
    for h, _ in _component_graphs(g):
        d = _eccentricity_diameter(h)
        if d:
            diameter_bound = max(diameter_bound, ceil((h.n - 1) / d))
    return {
        "degree": ceil(max_degree(g) / 2),
        "diameter": diameter_bound,
        "clique": max(max_clique_size(g) - 1, 0),
    }


# --- Exact solver ---


@dataclass(frozen=True)
class BandwidthResult:
    """Exact bandwidth with a witnessing ordering and the recorded lower bounds."""

    value: int
    ordering: VertexOrdering
    lower_bounds: dict[str, int] = field(default_factory=dict)


class _LayoutSearch:
    """Decide whether one connected component fits in width k.

    Positions are filled left to right, candidates in increasing index. Every
    unplaced vertex with a placed neighbour has a deadline (earliest placed
    neighbour's position + k); the sorted deadlines must leave one free slot
    each, and a vertex whose deadline is the current slot is forced. Reversal
    symmetry is broken by requiring the first vertex to have a smaller index
    than the last one.
    """

    def __init__(self, adj: Sequence[int], vertices: Sequence[int], k: int):
        self.adj = adj
        self.k = k
        self.size = len(vertices)
        self.unplaced = bits_to_mask(vertices)
        self.order: list[int] = []
        self.anchor: dict[int, int] = {}
        self.anchored: list[list[int]] = []
        self.nodes = 0

    def run(self) -> Optional[list[int]]:
        return list(self.order) if self._extend() else None

    def _push(self, v: int) -> None:
        p = len(self.order)
        self.order.append(v)
        self.unplaced &= ~(1 << v)
        fresh = [
            u for u in iter_bits(self.adj[v] & self.unplaced) if u not in self.anchor
        ]
        for u in fresh:
            self.anchor[u] = p
        self.anchored.append(fresh)

    def _pop(self) -> None:
        v = self.order.pop()
        self.unplaced |= 1 << v
        for u in self.anchored.pop():
            del self.anchor[u]

    def _extend(self) -> bool:
        p = len(self.order)
        if p == self.size:
            return True
        deadlines = sorted(
            (self.anchor[w] + self.k, w)
            for w in iter_bits(self.unplaced)
            if w in self.anchor
        )
        for t, (d, _) in enumerate(deadlines):
            if d < p + t:
                return False
        urgent = deadlines[0][1] if deadlines and deadlines[0][0] == p else None
        first = self.order[0] if self.order else None
        for v in iter_bits(self.unplaced):
            if urgent is not None and v != urgent:
                continue
            rest = self.unplaced & ~(1 << v)
            if rest:
                if rest.bit_length() - 1 < (v if first is None else first):
                    continue
            elif first is not None and v < first:
                continue
            self.nodes += 1
            self._push(v)
            if self._extend():
                return True
            self._pop()
        return False


def _component_bandwidth(
    g: Graph, vertices: tuple[int, ...], start: int
) -> tuple[int, list[int]]:
    """Smallest k >= start for which the component fits, with its layout."""
    if len(vertices) == 1:
        return 0, list(vertices)
    for k in range(max(start, 1), len(vertices)):
        search = _LayoutSearch(g.adj, vertices, k)
        layout = search.run()
        log.debug("component %s width %d: %d nodes", vertices, k, search.nodes)
        if layout is not None:
            return k, layout
    return len(vertices) - 1, list(vertices)


def exact_bandwidth(g: Graph, *, max_n: Optional[int] = None) -> BandwidthResult:
    """Minimum width over all orderings, with a witness.

    Components are solved separately and concatenated in order of their
    smallest vertex; the bandwidth is the largest component value.

    Raises:
        SizeGuardError: If g.n exceeds the "bandwidth" guard.

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> c6 = from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])
        >>> exact_bandwidth(c6).value
        2

    """
    guard("bandwidth", g.n, max_n)
    bounds = lower_bounds(g)
    value = 0
    order: list[int] = []
    for h, mapping in _component_graphs(g):
        start = max(lower_bounds(h).values())
        k, layout = _component_bandwidth(h, tuple(range(h.n)), start)
        value = max(value, k)
        order.extend(mapping[v] for v in layout)
    ordering = VertexOrdering(tuple(order))
    if ordering_width(g, ordering) != value or value < max(bounds.values(), default=0):
        raise InvariantError("exact bandwidth witness is inconsistent with its value")
    return BandwidthResult(value, ordering, bounds)


# --- Bound orderings ---


@dataclass(frozen=True)
class BoundOrdering:
    """An ordering built for a class, its measured width and the guarantee.

    Attributes:
        graph_class (ClassId): Class whose construction produced the ordering.
        ordering (VertexOrdering): The ordering.
        width (int): Its measured width.
        bound_name (str): Formula of the guarantee, e.g. "2*max_degree-1".
        bound (int): Value of the guarantee on this graph.
        extra_bounds (dict[str, int]): Further guarantees the ordering meets.

    """

    graph_class: ClassId
    ordering: VertexOrdering
    width: int
    bound_name: str
    bound: int
    extra_bounds: dict[str, int] = field(default_factory=dict)


def _member(g: Graph, cls: ClassId, max_n: Optional[int]) -> Recognition:
    rec = recognize(g, cls, max_n=max_n)
    if not rec.member:
        raise NotInClassError(f"graph is not a {cls.value} graph", rec)
    return rec


def _bound_ordering(
    g: Graph,
    cls: ClassId,
    ordering: VertexOrdering,
    bound_name: str,
    bound: int,
    extra_bounds: Optional[dict[str, int]] = None,
) -> BoundOrdering:
    width = ordering_width(g, ordering)
    extra_bounds = extra_bounds or {}
    for name, value in {bound_name: bound, **extra_bounds}.items():
        if width > value:
            raise InvariantError(
                f"{cls.value} ordering has width {width} > {name} = {value}"
            )
    return BoundOrdering(cls, ordering, width, bound_name, bound, extra_bounds)


def interval_bandwidth_ordering(
    g: Graph, *, max_n: Optional[int] = None
) -> BoundOrdering:
    """INTERVAL ordering of an interval graph; width <= max degree.

    Raises:
        NotInClassError: If g is not an interval graph.

    """
    rec = _member(g, ClassId.INTERVAL_GRAPH, max_n)
    return _bound_ordering(
        g, rec.graph_class, rec.ordering, "max_degree", max_degree(g)
    )


def proper_interval_bandwidth_ordering(
    g: Graph, *, max_n: Optional[int] = None
) -> BoundOrdering:
    """PROPER_INTERVAL ordering; width <= clique number - 1, hence optimal."""
    rec = _member(g, ClassId.PROPER_INTERVAL_GRAPH, max_n)
    omega = max_clique_size(g)
    return _bound_ordering(
        g, rec.graph_class, rec.ordering, "clique_number-1", max(omega - 1, 0)
    )


def cocomp_bandwidth_ordering(
    g: Graph, *, max_n: Optional[int] = None
) -> BoundOrdering:
    """CO_COMPARABILITY ordering; width <= 2 max degree - 1.

    Raises:
        PreconditionError: If g has no edge (the bound would be -1).
        NotInClassError: If g is not a co-comparability graph.

    """
    if g.num_edges == 0:
        raise PreconditionError("the co-comparability bound needs at least one edge")
    rec = _member(g, ClassId.CO_COMPARABILITY_GRAPH, max_n)
    return _bound_ordering(
        g, rec.graph_class, rec.ordering, "2*max_degree-1", 2 * max_degree(g) - 1
    )


def split_bandwidth_ordering(g: Graph, *, max_n: Optional[int] = None) -> BoundOrdering:
    """Isolated vertices first, then the rest of the split graph in index order.

    The non-isolated independent vertices I1 and the clique K follow the
    isolated ones, so the width is at most |I1| + |K| - 1 and at most
    max degree (max degree + 2).

    Raises:
        NotInClassError: If g is not a split graph.

    """
    rec = _member(g, ClassId.SPLIT_GRAPH, max_n)
    clique, independent = rec.partition
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    rest = sorted(set(range(g.n)) - set(isolated))
    i1 = [v for v in independent if g.degree(v) > 0]
    delta = max_degree(g)
    return _bound_ordering(
        g,
        rec.graph_class,
        VertexOrdering(tuple(isolated + rest)),
        "max_degree*(max_degree+2)",
        delta * (delta + 2),
        {"|I1|+|K|-1": max(len(i1) + len(clique) - 1, 0)},
    )


# --- Caterpillars ---


def _is_tree(t: Graph) -> bool:
    if t.n == 0:
        return False
    return t.num_edges == t.n - 1 and len(component_masks(t)) == 1


@dataclass(frozen=True)
class Caterpillar:
    """A tree whose non-leaf vertices lie on one path, the spine.

    Attributes:
        tree (Graph): The tree.
        spine (tuple[int, ...]): The spine path, in order.
        leaves (tuple[tuple[int, ...], ...]): leaves[i] are the degree-1
            vertices hanging off spine[i], in index order.

    The spine may include degree-1 path ends, so a bare path can be its own
    spine.
    """

    tree: Graph
    spine: tuple[int, ...]
    leaves: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        """Check that spine and leaves decompose the tree."""
        spine = tuple(self.spine)
        leaves = tuple(tuple(sorted(ls)) for ls in self.leaves)
        object.__setattr__(self, "spine", spine)
        object.__setattr__(self, "leaves", leaves)
        t = self.tree
        if not _is_tree(t):
            raise RepresentationError("caterpillar host is not a tree")
        if not spine or len(leaves) != len(spine):
            raise RepresentationError(
                "spine must be non-empty with one leaf list per spine vertex"
            )
        seen = list(spine) + [x for ls in leaves for x in ls]
        if sorted(seen) != list(range(t.n)):
            raise RepresentationError(
                "spine and leaves must partition the tree's vertices"
            )
        for a, b in zip(spine, spine[1:]):
            if not t.has_edge(a, b):
                raise RepresentationError(
                    f"spine vertices {a} and {b} are not adjacent"
                )
        for s, ls in zip(spine, leaves):
            for x in ls:
                if not t.has_edge(s, x) or t.degree(x) != 1:
                    raise RepresentationError(
                        f"vertex {x} is not a leaf hanging off {s}"
                    )

    @classmethod
    def from_tree(cls, tree: Graph) -> "Caterpillar":
        """Decompose a caterpillar tree along a longest path.

        Raises:
            RepresentationError: If tree is not a tree or not a caterpillar.

        Example:
            >>> from ordercert.graph import from_edge_list
            >>> Caterpillar.from_tree(from_edge_list(4, [(0, 1), (1, 2), (2, 3)])).spine
            (0, 1, 2, 3)

        """
        if not _is_tree(tree):
            raise RepresentationError("caterpillar host is not a tree")
        if tree.n <= 2:
            return cls(tree, tuple(range(tree.n)), ((),) * tree.n)
        core = [v for v in range(tree.n) if tree.degree(v) >= 2]
        core_mask = bits_to_mask(core)
        core_degree = {v: (tree.adj[v] & core_mask).bit_count() for v in core}
        ends = [v for v in core if core_degree[v] <= 1]
        if any(d > 2 for d in core_degree.values()) or len(ends) != min(len(core), 2):
            raise RepresentationError(
                "tree is not a caterpillar: its non-leaves do not form a path"
            )
        path = [min(ends)]
        while len(path) < len(core):
            nxt = iter_bits(tree.adj[path[-1]] & core_mask)
            path.append(next(u for u in nxt if u not in path[-2:]))
        head = [u for u in iter_bits(tree.adj[path[0]]) if tree.degree(u) == 1]
        tail = [
            u
            for u in iter_bits(tree.adj[path[-1]])
            if tree.degree(u) == 1 and u not in head[:1]
        ]
        spine = head[:1] + path + tail[:1]
        if spine[0] > spine[-1]:
            spine.reverse()
        on_spine = set(spine)
        leaves = tuple(
            tuple(u for u in iter_bits(tree.adj[s]) if u not in on_spine) for s in spine
        )
        return cls(tree, tuple(spine), leaves)


def caterpillar_ordering(c: Caterpillar) -> VertexOrdering:
    """Spine order with each spine vertex's leaves right after it.

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        >>> caterpillar_ordering(Caterpillar(star, (0,), ((1, 2, 3),))).order
        (0, 1, 2, 3)

    """
    order = []
    for s, ls in zip(c.spine, c.leaves):
        order.append(s)
        order.extend(ls)
    return VertexOrdering(tuple(order))


def validate_kkm(g: Graph, c: Caterpillar) -> Optional[tuple[int, int]]:
    """First edge of g breaking the spanning-caterpillar distance condition.

    Every edge must join vertices at tree distance at most 4, and distance 4
    is allowed only between two leaves (degree-1 vertices) of the tree.

    Raises:
        PreconditionError: If the caterpillar does not span g (different
            vertex count, or a tree edge that is not an edge of g).

    """
    t = c.tree
    if t.n != g.n:
        raise PreconditionError(f"caterpillar has {t.n} vertices, graph has {g.n}")
    for u, v in t.edges():
        if not g.has_edge(u, v):
            raise PreconditionError(
                f"tree edge ({u}, {v}) is not an edge of the graph", witness=(u, v)
            )
    dist = [distances_from(t, v) for v in range(t.n)]
    for u, v in g.edges():
        d = dist[u][v]
        if d > 4 or (d == 4 and not (t.degree(u) == 1 and t.degree(v) == 1)):
            return u, v
    return None


class _CaterpillarSearch:
    """Exhaustive search for a spanning caterpillar meeting the distance condition.

    Spines are simple paths with spine[0] <= spine[-1] whose closed
    neighbourhood covers the graph, enumerated depth first from each start
    vertex; off-spine vertices are then hung on adjacent spine vertices by
    backtracking, in index order.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.nodes = 0

    def run(self) -> Optional[Caterpillar]:
        for start in range(self.g.n):
            found = self._grow([start])
            if found is not None:
                return found
        return None

    def _grow(self, path: list[int]) -> Optional[Caterpillar]:
        g = self.g
        self.nodes += 1
        covered = 0
        for s in path:
            covered |= g.adj[s] | 1 << s
        if covered == g.full_mask and path[0] <= path[-1]:
            found = self._hang(path)
            if found is not None:
                return found
        on_path = bits_to_mask(path)
        for u in iter_bits(g.adj[path[-1]] & ~on_path):
            path.append(u)
            found = self._grow(path)
            path.pop()
            if found is not None:
                return found
        return None

    def _hang(self, spine: list[int]) -> Optional[Caterpillar]:
        g = self.g
        index = {s: i for i, s in enumerate(spine)}
        off = [v for v in range(g.n) if v not in index]
        attach: dict[int, int] = {}

        def distance_ok(v: int, i: int) -> bool:
            for u in iter_bits(g.adj[v]):
                if u in index:
                    d = abs(index[u] - i) + 1
                elif u in attach:
                    d = abs(attach[u] - i) + 2
                else:
                    continue
                if d > 4:
                    return False
            return True

        def assign(k: int) -> Optional[Caterpillar]:
            if k == len(off):
                return self._build(spine, attach)
            v = off[k]
            for i, s in enumerate(spine):
                if g.has_edge(v, s) and distance_ok(v, i):
                    attach[v] = i
                    found = assign(k + 1)
                    del attach[v]
                    if found is not None:
                        return found
            return None

        return assign(0)

    def _build(self, spine: list[int], attach: dict[int, int]) -> Optional[Caterpillar]:
        edges = list(zip(spine, spine[1:])) + [(spine[i], v) for v, i in attach.items()]
        leaves = tuple(
            tuple(sorted(v for v, i in attach.items() if i == j))
            for j in range(len(spine))
        )
        c = Caterpillar(from_edge_list(self.g.n, edges), tuple(spine), leaves)
        return c if validate_kkm(self.g, c) is None else None


def find_spanning_caterpillar(
    g: Graph, *, max_n: Optional[int] = None
) -> Optional[Caterpillar]:
    """Search for a spanning caterpillar satisfying the distance condition.

    Returns:
        Caterpillar | None: The first one found, or None if none exists.

    Raises:
        PreconditionError: If g is empty or disconnected.
        SizeGuardError: If g.n exceeds the "caterpillar" guard.

    """
    guard("caterpillar", g.n, max_n)
    if g.n == 0 or len(component_masks(g)) != 1:
        raise PreconditionError(
            "a spanning caterpillar needs a non-empty connected graph"
        )
    search = _CaterpillarSearch(g)
    found = search.run()
    log.debug("spanning caterpillar search on n=%d: %d spine nodes", g.n, search.nodes)
    return found


def atfree_bandwidth_ordering(
    g: Graph,
    caterpillar: Optional[Caterpillar] = None,
    *,
    max_n: Optional[int] = None,
) -> BoundOrdering:
    """Caterpillar ordering of an AT-free graph; width <= 3 max degree.

    With an explicit caterpillar (g must then be connected) it is validated
    against the distance condition. Without one, a spanning caterpillar is
    searched for in every component and the component orderings are
    concatenated.

    Raises:
        NotInClassError: If g has an asteroidal triple.
        PreconditionError: If the given caterpillar breaks the distance
            condition; the witness is the offending edge.

    """
    rec = _member(g, ClassId.AT_FREE_GRAPH, max_n)
    if caterpillar is not None:
        bad = validate_kkm(g, caterpillar)
        if bad is not None:
            raise PreconditionError(
                f"edge {bad} breaks the caterpillar distance condition", witness=bad
            )
        ordering = caterpillar_ordering(caterpillar)
    else:
        order: list[int] = []
        for h, mapping in _component_graphs(g):
            c = find_spanning_caterpillar(h, max_n=max_n)
            if c is None:
                raise InvariantError("AT-free component has no spanning caterpillar")
            order.extend(mapping[v] for v in caterpillar_ordering(c))
        ordering = VertexOrdering(tuple(order))
    return _bound_ordering(
        g, rec.graph_class, ordering, "3*max_degree", 3 * max_degree(g)
    )


def bound_ordering(
    g: Graph, cls: Union[ClassId, str], *, max_n: Optional[int] = None
) -> BoundOrdering:
    """Dispatch to the bound ordering of a class.

    Raises:
        ValueError: If the class has no bandwidth construction (comparability,
            permutation and chordal graphs).

    """
    cls = ClassId.parse(cls)
    builders = {
        ClassId.INTERVAL_GRAPH: interval_bandwidth_ordering,
        ClassId.PROPER_INTERVAL_GRAPH: proper_interval_bandwidth_ordering,
        ClassId.CO_COMPARABILITY_GRAPH: cocomp_bandwidth_ordering,
        ClassId.SPLIT_GRAPH: split_bandwidth_ordering,
        ClassId.AT_FREE_GRAPH: atfree_bandwidth_ordering,
    }
    if cls not in builders:
        raise ValueError(
            f"no bandwidth bound for {cls.value} graphs; expected one of "
            f"{', '.join(c.value for c in builders)}"
        )
    return builders[cls](g, max_n=max_n)
