"""Certifying representations: interval models, orientations, diagrams, partitions.

ordercert.representations
-------------------------

Builds the objects that witness class membership and converts between them and
vertex orderings, in both directions where the constructions exist:

    - IntervalModel  <-> INTERVAL ordering (left-endpoint sort, [i, r(i)] model)
    - IntervalModel  <-  PROPER_INTERVAL ordering (containment-free model)
    - Orientation    <-  COMPARABILITY / CO_COMPARABILITY ordering
    - FunctionDiagram ->  CO_COMPARABILITY ordering (sweep at x = 0)
    - Permutation    <-> linear FunctionDiagram, permutation graph
    - PermutationModel <- ordering satisfying both comparability conditions
    - split partition <-> SIMPLE_SPLIT ordering

Every constructor re-validates its output against the checker in
:mod:`ordercert.conditions` and raises InvariantError if that ever fails.
Arithmetic on endpoints and curve values is exact (``fractions.Fraction``).
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Union

from .conditions import ConditionId, check_ordering
from .errors import InvariantError, PreconditionError, RepresentationError
from .graph import (
    Graph,
    VertexOrdering,
    as_ordering,
    complement,
    from_edge_list,
    reachable_within,
    relabel,
)
from .utils import iter_bits, lowest_bit, parse_fraction

Number = Union[int, str, Fraction]


def _require(g: Graph, ordering: VertexOrdering, condition: ConditionId) -> None:
    verdict = check_ordering(g, ordering, condition)
    if not verdict.holds:
        w = verdict.witness
        raise PreconditionError(
            f"ordering violates {condition.value} at positions {w.positions} "
            f"(vertices {w.vertices})",
            witness=w,
        )


# --- Interval models ---


@dataclass(frozen=True)
class IntervalModel:
    """One closed interval [left, right] per vertex, rational endpoints."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        """Coerce endpoints to Fraction and check left <= right."""
        coerced = []
        for v, (left, right) in enumerate(self.intervals):
            left, right = parse_fraction(left), parse_fraction(right)
            if left > right:
                raise RepresentationError(
                    f"interval of vertex {v} has left {left} > right {right}"
                )
            coerced.append((left, right))
        object.__setattr__(self, "intervals", tuple(coerced))

    @classmethod
    def of(cls, intervals: Iterable[tuple[Number, Number]]) -> "IntervalModel":
        """Build a model from pairs of ints, "p/q" strings or Fractions."""
        return cls(tuple((left, right) for left, right in intervals))

    def __len__(self) -> int:
        """Number of intervals (vertices)."""
        return len(self.intervals)

    def is_proper(self) -> bool:
        """Return True iff no interval is a proper subset of another."""
        ivs = self.intervals
        for a, (la, ra) in enumerate(ivs):
            for b, (lb, rb) in enumerate(ivs):
                if a != b and lb <= la and ra <= rb and (la, ra) != (lb, rb):
                    return False
        return True


def intersection_graph_of_intervals(model: IntervalModel) -> Graph:
    """Intersection graph of closed intervals (touching endpoints intersect)."""
    ivs = model.intervals
    edges = [
        (a, b)
        for a in range(len(ivs))
        for b in range(a + 1, len(ivs))
        if max(ivs[a][0], ivs[b][0]) <= min(ivs[a][1], ivs[b][1])
    ]
    return from_edge_list(len(ivs), edges)


def canonicalize_intervals(model: IntervalModel) -> IntervalModel:
    """Spread endpoints onto the distinct integers 1..2n, keeping every overlap.

    Endpoints are ranked by value; at equal values left endpoints precede right
    endpoints (so touching closed intervals still meet), then by vertex index.
    """
    events = []
    for v, (left, right) in enumerate(model.intervals):
        events.append((left, 0, v))
        events.append((right, 1, v))
    events.sort()
    rank: dict[tuple[int, int], int] = {}
    for r, (_, kind, v) in enumerate(events, 1):
        rank[(kind, v)] = r
    return IntervalModel(
        tuple(
            (Fraction(rank[(0, v)]), Fraction(rank[(1, v)])) for v in range(len(model))
        )
    )


def ordering_from_intervals(model: IntervalModel) -> VertexOrdering:
    """Order vertices by increasing left endpoint of the canonicalised model.

    Equal left endpoints are broken by vertex index. The result satisfies
    INTERVAL on the model's intersection graph.

    Example:
        >>> ordering_from_intervals(IntervalModel.of([(0, 10), (1, 2)])).order
        (0, 1)

    """
    canonical = canonicalize_intervals(model)
    order = sorted(range(len(model)), key=lambda v: canonical.intervals[v][0])
    return VertexOrdering(tuple(order))


def _right_reach(g: Graph, ordering: VertexOrdering) -> list[int]:
    """r(i): position of the rightmost neighbour of v_i, at least i."""
    padj = relabel(g, ordering).adj
    return [max(i, padj[i].bit_length() - 1) for i in range(g.n)]


def interval_model_from_ordering(
    g: Graph, ordering: Union[VertexOrdering, Sequence[int]]
) -> IntervalModel:
    """Assign [i, r(i)] (1-based positions) to the vertex at position i.

    r(i) is the position of the rightmost neighbour of v_i; isolated vertices
    and vertices with no neighbour to their right get the point [i, i].

    Raises:
        PreconditionError: If INTERVAL fails on the ordering (carries the
            violating triple).

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> p3 = from_edge_list(3, [(0, 1), (1, 2)])
        >>> model = interval_model_from_ordering(p3, [0, 1, 2])
        >>> [tuple(map(int, iv)) for iv in model.intervals]
        [(1, 2), (2, 3), (3, 3)]

    """
    ordering = as_ordering(g, ordering)
    _require(g, ordering, ConditionId.INTERVAL)
    reach = _right_reach(g, ordering)
    intervals: list[tuple[Fraction, Fraction]] = [(Fraction(0), Fraction(0))] * g.n
    for i, v in enumerate(ordering.order):
        intervals[v] = (Fraction(i + 1), Fraction(reach[i] + 1))
    model = IntervalModel(tuple(intervals))
    if intersection_graph_of_intervals(model) != g:
        raise InvariantError("interval model does not reproduce the graph")
    return model


def proper_interval_model_from_ordering(
    g: Graph, ordering: Union[VertexOrdering, Sequence[int]]
) -> IntervalModel:
    """Containment-free interval model from a PROPER_INTERVAL ordering.

    Uses [i, r(i) + i/(n+1)]: r is non-decreasing along such an ordering, so
    both endpoint sequences become strictly increasing while every overlap and
    gap of the [i, r(i)] model survives.

    Raises:
        PreconditionError: If PROPER_INTERVAL fails on the ordering.

    """
    ordering = as_ordering(g, ordering)
    _require(g, ordering, ConditionId.PROPER_INTERVAL)
    reach = _right_reach(g, ordering)
    shift = Fraction(1, g.n + 1)
    intervals: list[tuple[Fraction, Fraction]] = [(Fraction(0), Fraction(0))] * g.n
    for i, v in enumerate(ordering.order):
        intervals[v] = (Fraction(i + 1), reach[i] + 1 + (i + 1) * shift)
    model = IntervalModel(tuple(intervals))
    if intersection_graph_of_intervals(model) != g or not model.is_proper():
        raise InvariantError("proper interval model failed re-validation")
    return model


# --- Subtrees of a tree ---


def intersection_graph_of_subtrees(
    host: Graph, subtrees: Sequence[Iterable[int]]
) -> Graph:
    """Intersection graph of connected subtrees of a host tree.

    Args:
        host (Graph): A tree.
        subtrees (Sequence[Iterable[int]]): Non-empty vertex sets of host, each
            inducing a connected subgraph.

    Raises:
        RepresentationError: If host is not a tree or a subtree is empty or
            disconnected.

    """
    full = host.full_mask
    spans = host.n > 0 and reachable_within(host, 1, full) == full
    if not spans or host.num_edges != host.n - 1:
        raise RepresentationError("host graph is not a tree")
    masks = []
    for t, vertices in enumerate(subtrees):
        mask = 0
        for v in vertices:
            if not 0 <= v < host.n:
                raise RepresentationError(
                    f"subtree {t} names vertex {v} outside the host"
                )
            mask |= 1 << v
        if not mask:
            raise RepresentationError(f"subtree {t} is empty")
        if reachable_within(host, 1 << lowest_bit(mask), mask) != mask:
            raise RepresentationError(f"subtree {t} is disconnected in the host tree")
        masks.append(mask)
    edges = [
        (a, b)
        for a in range(len(masks))
        for b in range(a + 1, len(masks))
        if masks[a] & masks[b]
    ]
    return from_edge_list(len(masks), edges)


# --- Orientations ---


class OrientationMode(str, Enum):
    """Which pairs an orientation built from an ordering directs."""

    EDGES = "edges"
    NON_EDGES = "non-edges"


@dataclass(frozen=True)
class Orientation:
    """A set of arcs u -> v over the vertices 0..n-1."""

    n: int
    arcs: frozenset[tuple[int, int]]
    mode: OrientationMode = OrientationMode.EDGES
    out: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate arcs and index them as out-neighbour bitsets."""
        out = [0] * self.n
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise RepresentationError(f"arc ({u}, {v}) is not between two vertices")
            if out[v] >> u & 1:
                raise RepresentationError(
                    f"arcs ({u}, {v}) and ({v}, {u}) are both present"
                )
            out[u] |= 1 << v
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        object.__setattr__(self, "mode", OrientationMode(self.mode))
        object.__setattr__(self, "out", tuple(out))

    def underlying_graph(self) -> Graph:
        """The undirected graph whose edges the arcs orient."""
        return from_edge_list(self.n, self.arcs)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        """Arcs in lexicographic order."""
        return sorted(self.arcs)


def transitivity_violation(o: Orientation) -> Optional[tuple[int, int, int]]:
    """First directed 2-path u -> v -> w without the arc u -> w, or None."""
    for u in range(o.n):
        for v in iter_bits(o.out[u]):
            missing = o.out[v] & ~o.out[u]
            if missing:
                return u, v, lowest_bit(missing)
    return None


def is_transitive(o: Orientation) -> bool:
    """Return True iff the orientation has no open directed 2-path."""
    return transitivity_violation(o) is None


def orientation_from_ordering(
    g: Graph,
    ordering: Union[VertexOrdering, Sequence[int]],
    mode: Union[OrientationMode, str] = OrientationMode.EDGES,
) -> Orientation:
    """Direct every edge (or non-edge) from the earlier to the later vertex.

    In edges mode the ordering must satisfy COMPARABILITY and the result is a
    transitive orientation of g. In non-edges mode it must satisfy
    CO_COMPARABILITY and the result is a transitive orientation of the
    complement.

    Raises:
        PreconditionError: If the required condition fails (carries the
            violating triple).
        InvariantError: If the result is not transitive.

    """
    mode = OrientationMode(mode)
    ordering = as_ordering(g, ordering)
    if mode is OrientationMode.EDGES:
        _require(g, ordering, ConditionId.COMPARABILITY)
        target = g
    else:
        _require(g, ordering, ConditionId.CO_COMPARABILITY)
        target = complement(g)
    pos = ordering.pos
    arcs = frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in target.edges())
    o = Orientation(g.n, arcs, mode)
    bad = transitivity_violation(o)
    if bad is not None:
        raise InvariantError(f"orientation is not transitive at the 2-path {bad}")
    return o


# --- Function diagrams and permutations ---


@dataclass(frozen=True)
class FunctionDiagram:
    """Piecewise-linear curves over [0, 1] sharing one breakpoint grid.

    Attributes:
        grid (tuple[Fraction, ...]): Breakpoints 0 = x_0 < ... < x_m = 1.
        curves (tuple[tuple[Fraction, ...], ...]): curves[c][t] is the value
            of curve c at grid[t].

    """

    grid: tuple[Fraction, ...]
    curves: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        """Check the grid and coerce every value to Fraction."""
        grid = tuple(parse_fraction(x) for x in self.grid)
        if len(grid) < 2 or grid[0] != 0 or grid[-1] != 1:
            raise RepresentationError("grid must start at 0, end at 1 and have m >= 1")
        if any(a >= b for a, b in zip(grid, grid[1:])):
            raise RepresentationError("grid breakpoints must be strictly increasing")
        curves = []
        for c, values in enumerate(self.curves):
            values = tuple(parse_fraction(y) for y in values)
            if len(values) != len(grid):
                raise RepresentationError(
                    f"curve {c} has {len(values)} values for {len(grid)} breakpoints"
                )
            curves.append(values)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "curves", tuple(curves))

    @property
    def is_linear(self) -> bool:
        """True iff every curve is a single segment (m = 1)."""
        return len(self.grid) == 2

    def __len__(self) -> int:
        """Number of curves."""
        return len(self.curves)


def curves_intersect(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    """True iff two curves on a shared grid meet (touching counts)."""
    diffs = [x - y for x, y in zip(a, b)]
    if any(d == 0 for d in diffs):
        return True
    return any((d1 < 0) != (d2 < 0) for d1, d2 in zip(diffs, diffs[1:]))


def intersection_graph_of_diagram(d: FunctionDiagram) -> Graph:
    """Intersection graph of the curves of a function diagram."""
    edges = [
        (a, b)
        for a in range(len(d))
        for b in range(a + 1, len(d))
        if curves_intersect(d.curves[a], d.curves[b])
    ]
    return from_edge_list(len(d), edges)


def ordering_from_diagram(d: FunctionDiagram) -> VertexOrdering:
    """Order curves by their value at x = 0.

    Ties are broken by the first differing later breakpoint value, then by
    index. The result satisfies CO_COMPARABILITY on the intersection graph.
    """
    return VertexOrdering(tuple(sorted(range(len(d)), key=lambda c: (d.curves[c], c))))


@dataclass(frozen=True)
class Permutation:
    """A permutation pi of 1..n with its inverse.

    Attributes:
        values (tuple[int, ...]): values[p - 1] = pi(p).
        inverse (tuple[int, ...]): inverse[i - 1] = pi^-1(i), the position of
            i in pi.

    """

    values: tuple[int, ...]
    inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Check bijectivity and build the inverse."""
        values = tuple(self.values)
        n = len(values)
        inverse = [0] * n
        for p, value in enumerate(values, 1):
            if not isinstance(value, int) or not 1 <= value <= n or inverse[value - 1]:
                raise RepresentationError(f"{values} is not a permutation of 1..{n}")
            inverse[value - 1] = p
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "inverse", tuple(inverse))

    @property
    def n(self) -> int:
        """Size of the permutation."""
        return len(self.values)


def permutation_graph(pi: Permutation) -> Graph:
    """Inversion graph: v_i v_j is an edge iff (i - j)(pi^-1(i) - pi^-1(j)) < 0.

    Vertex v_i is graph vertex i - 1.

    Example:
        >>> permutation_graph(Permutation((3, 1, 2))).edges()
        [(0, 2), (1, 2)]

    """
    inv = pi.inverse
    edges = [
        (i, j)
        for i in range(pi.n)
        for j in range(i + 1, pi.n)
        if (i - j) * (inv[i] - inv[j]) < 0
    ]
    return from_edge_list(pi.n, edges)


def linear_diagram_from_permutation(pi: Permutation) -> FunctionDiagram:
    """Segments from (0, i) to (1, pi^-1(i)); their intersection graph is G(pi)."""
    return FunctionDiagram(
        (Fraction(0), Fraction(1)),
        tuple((Fraction(i), Fraction(pi.inverse[i - 1])) for i in range(1, pi.n + 1)),
    )


@dataclass(frozen=True)
class PermutationModel:
    """A permutation together with the graph vertex playing each v_i.

    Attributes:
        permutation (Permutation): pi with permutation_graph(pi) isomorphic to
            the graph.
        labelling (tuple[int, ...]): labelling[i - 1] is the graph vertex
            represented by v_i.

    """

    permutation: Permutation
    labelling: tuple[int, ...]

    def diagram(self) -> FunctionDiagram:
        """Linear function diagram of the permutation (curve i-1 is v_i)."""
        return linear_diagram_from_permutation(self.permutation)


def permutation_from_ordering(
    g: Graph, ordering: Union[VertexOrdering, Sequence[int]]
) -> PermutationModel:
    """Build a permutation realiser from an ordering satisfying both conditions.

    The ordering is one linear order; the second reverses it on edges and keeps
    it on non-edges, which is transitive exactly because COMPARABILITY and
    CO_COMPARABILITY both hold. Pairs ordered differently by the two orders are
    the edges of g.

    Raises:
        PreconditionError: If either comparability condition fails.

    """
    ordering = as_ordering(g, ordering)
    _require(g, ordering, ConditionId.COMPARABILITY)
    _require(g, ordering, ConditionId.CO_COMPARABILITY)
    pos = ordering.pos

    def compare(u: int, v: int) -> int:
        if u == v:
            return 0
        first = pos[u] > pos[v] if g.has_edge(u, v) else pos[u] < pos[v]
        return -1 if first else 1

    second = sorted(range(g.n), key=cmp_to_key(compare))
    model = PermutationModel(
        Permutation(tuple(pos[u] + 1 for u in second)), ordering.order
    )
    if permutation_graph(model.permutation) != relabel(g, ordering):
        raise InvariantError("permutation realiser does not reproduce the graph")
    return model


# --- Split partitions ---


def split_ordering(
    g: Graph, clique: Iterable[int], independent: Iterable[int]
) -> VertexOrdering:
    """Independent part first, then the clique part, each in index order.

    Raises:
        PreconditionError: If (clique, independent) is not a split partition;
            the witness names the offending vertex or pair.

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> g = from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
        >>> split_ordering(g, [0, 1, 2], [3]).order
        (3, 0, 1, 2)

    """
    k_part, i_part = sorted(set(clique)), sorted(set(independent))
    overlap = set(k_part) & set(i_part)
    if overlap:
        v = min(overlap)
        raise PreconditionError(f"vertex {v} is in both parts", witness=(v,))
    missing = set(range(g.n)) - set(k_part) - set(i_part)
    extra = (set(k_part) | set(i_part)) - set(range(g.n))
    if missing or extra:
        v = min(missing | extra)
        raise PreconditionError(
            f"vertex {v} breaks the partition of 0..{g.n - 1}", witness=(v,)
        )
    for a, u in enumerate(k_part):
        for v in k_part[a + 1 :]:
            if not g.has_edge(u, v):
                raise PreconditionError(
                    f"clique part has non-adjacent pair ({u}, {v})", witness=(u, v)
                )
    for a, u in enumerate(i_part):
        for v in i_part[a + 1 :]:
            if g.has_edge(u, v):
                raise PreconditionError(
                    f"independent part has adjacent pair ({u}, {v})", witness=(u, v)
                )
    ordering = VertexOrdering(tuple(i_part + k_part))
    if not check_ordering(g, ordering, ConditionId.SIMPLE_SPLIT).holds:
        raise InvariantError("split ordering violates simple-split")
    return ordering


def split_partition_from_ordering(
    g: Graph, ordering: Union[VertexOrdering, Sequence[int]]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Read (clique, independent) off a SIMPLE_SPLIT ordering.

    The clique part starts at the first position with an earlier neighbour;
    everything before it is independent.

    Raises:
        PreconditionError: If SIMPLE_SPLIT fails on the ordering.

    """
    ordering = as_ordering(g, ordering)
    _require(g, ordering, ConditionId.SIMPLE_SPLIT)
    padj = relabel(g, ordering).adj
    start = next(
        (j for j in range(g.n) if padj[j] & ((1 << j) - 1)),
        g.n,
    )
    clique = tuple(sorted(ordering.order[start:]))
    independent = tuple(sorted(ordering.order[:start]))
    return clique, independent
