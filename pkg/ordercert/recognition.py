"""Class recognition by ordering search, with validated fast paths.

ordercert.recognition
---------------------

Every class except AT-free is characterised by a set of triple conditions (see
:data:`CLASS_CONDITIONS`). Membership is decided by searching for an ordering
that satisfies all of them: a depth-first search over prefixes, trying vertices
in increasing index order and pruning any extension that closes a violating
triple. Because the conditions only quantify over triples, a pruned prefix can
never be completed, so an exhausted search is a proof of non-membership.

Chordal and split graphs also have classical linear-time tests (maximum
cardinality search, the degree-sequence partition). ``recognize`` uses them
under ``method="auto"`` and re-validates their output with the checker.

Example:
    >>> from ordercert.graph import from_edge_list
    >>> c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    >>> find_ordering(c4, {"comparability", "co-comparability"}).order
    (0, 2, 1, 3)
    >>> recognize(c4, "chordal").member
    False

"""

import concurrent.futures
import logging
import os
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Literal, Optional, Union

from .conditions import (
    ConditionId,
    ConditionsLike,
    Pattern,
    check_ordering,
    extends_without_violation,
    forbidden_patterns,
    holds_all,
    normalize_conditions,
)
from .errors import InvariantError
from .graph import Graph, VertexOrdering, is_clique, is_independent
from .limits import guard
from .representations import (
    OrientationMode,
    interval_model_from_ordering,
    orientation_from_ordering,
    permutation_from_ordering,
    proper_interval_model_from_ordering,
    split_ordering,
    split_partition_from_ordering,
)
from .utils import iter_bits, lowest_bit

log = logging.getLogger(__name__)

Mode = Literal["serial", "thread", "process"]
Method = Literal["auto", "search"]


class ClassId(str, Enum):
    """The eight graph classes ordercert recognises."""

    INTERVAL_GRAPH = "interval"
    PROPER_INTERVAL_GRAPH = "proper-interval"
    COMPARABILITY_GRAPH = "comparability"
    CO_COMPARABILITY_GRAPH = "co-comparability"
    PERMUTATION_GRAPH = "permutation"
    CHORDAL_GRAPH = "chordal"
    SPLIT_GRAPH = "split"
    AT_FREE_GRAPH = "at-free"

    @classmethod
    def parse(cls, name: Union[str, "ClassId"]) -> "ClassId":
        """Look up a class by value, case-insensitively ("at_free" works too)."""
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(
            f"unknown graph class {name!r}; expected one of "
            f"{', '.join(m.value for m in cls)}"
        )


CLASS_CONDITIONS: dict[ClassId, tuple[ConditionId, ...]] = {
    ClassId.INTERVAL_GRAPH: (ConditionId.INTERVAL,),
    ClassId.PROPER_INTERVAL_GRAPH: (ConditionId.PROPER_INTERVAL,),
    ClassId.COMPARABILITY_GRAPH: (ConditionId.COMPARABILITY,),
    ClassId.CO_COMPARABILITY_GRAPH: (ConditionId.CO_COMPARABILITY,),
    ClassId.PERMUTATION_GRAPH: (
        ConditionId.COMPARABILITY,
        ConditionId.CO_COMPARABILITY,
    ),
    ClassId.CHORDAL_GRAPH: (ConditionId.PEO,),
    ClassId.SPLIT_GRAPH: (ConditionId.SIMPLE_SPLIT,),
    ClassId.AT_FREE_GRAPH: (),
}


# --- Asteroidal triples ---


@dataclass(frozen=True)
class AsteroidalTriple:
    """Three pairwise non-adjacent vertices, each pair joined avoiding N[third]."""

    a: int
    b: int
    c: int

    def as_tuple(self) -> tuple[int, int, int]:
        """The triple as (a, b, c)."""
        return self.a, self.b, self.c


def _component_labels(g: Graph, v: int) -> list[int]:
    """Component label of every vertex in G - N[v]; -1 inside N[v]."""
    labels = [-1] * g.n
    remaining = g.full_mask & ~(g.adj[v] | 1 << v)
    label = 0
    while remaining:
        frontier = comp = 1 << lowest_bit(remaining)
        while frontier:
            grow = 0
            for u in iter_bits(frontier):
                grow |= g.adj[u]
            frontier = grow & remaining & ~comp
            comp |= frontier
        for u in iter_bits(comp):
            labels[u] = label
        remaining &= ~comp
        label += 1
    return labels


def _avoids(labels: Sequence[list[int]], a: int, b: int, c: int) -> bool:
    return all(
        labels[z][x] != -1 and labels[z][x] == labels[z][y]
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a))
    )


def is_asteroidal_triple(g: Graph, triple: Sequence[int]) -> bool:
    """Return True iff triple is an asteroidal triple of g.

    The three vertices must be distinct and pairwise non-adjacent, and each
    pair must lie in one component of g minus the closed neighbourhood of the
    third.
    """
    if len(triple) != 3 or len(set(triple)) != 3:
        return False
    if any(not 0 <= v < g.n for v in triple):
        return False
    a, b, c = triple
    if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
        return False
    labels = {v: _component_labels(g, v) for v in triple}
    return _avoids(labels, a, b, c)


def find_asteroidal_triple(g: Graph) -> Optional[AsteroidalTriple]:
    """Return the lexicographically smallest asteroidal triple, or None.

    g is AT-free iff this returns None.

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> c6 = from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])
        >>> find_asteroidal_triple(c6)
        AsteroidalTriple(a=0, b=2, c=4)

    """
    labels = [_component_labels(g, v) for v in range(g.n)]
    full = g.full_mask
    for a in range(g.n):
        after_a = full & ~g.adj[a] & ~((1 << (a + 1)) - 1)
        for b in iter_bits(after_a):
            after_b = after_a & ~g.adj[b] & ~((1 << (b + 1)) - 1)
            for c in iter_bits(after_b):
                if _avoids(labels, a, b, c):
                    return AsteroidalTriple(a, b, c)
    return None


# --- Fast paths ---


def recognize_chordal_fast(g: Graph) -> Optional[VertexOrdering]:
    """Maximum cardinality search; return a validated PEO, or None.

    Vertices are numbered by repeatedly picking the unnumbered vertex with the
    most numbered neighbours (smallest index on ties). The reverse of the visit
    order is a perfect elimination ordering iff g is chordal; the candidate is
    checked against the PEO condition before it is returned.
    """
    weight = [0] * g.n
    numbered = 0
    visit = []
    for _ in range(g.n):
        v = max(
            iter_bits(g.full_mask & ~numbered),
            key=lambda u: (weight[u], -u),
        )
        visit.append(v)
        numbered |= 1 << v
        for u in iter_bits(g.adj[v] & ~numbered):
            weight[u] += 1
    candidate = VertexOrdering(tuple(reversed(visit)))
    if check_ordering(g, candidate, ConditionId.PEO).holds:
        return candidate
    log.debug("maximum cardinality search order is not a PEO; graph is not chordal")
    return None


def recognize_split_fast(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Degree-sequence split test; return (clique, independent) or None.

    With degrees sorted d_1 >= ... >= d_n and m = max{i : d_i >= i - 1}, g is
    split iff sum_{i<=m} d_i = m(m - 1) + sum_{i>m} d_i. The m highest-degree
    vertices then form the clique part. The returned partition is checked with
    is_clique and is_independent.

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> recognize_split_fast(from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)]))
        ((0, 1, 2), (3,))

    """
    if g.num_edges == 0:
        return (), tuple(range(g.n))
    by_degree = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degrees = [g.degree(v) for v in by_degree]
    m = max(i for i in range(1, g.n + 1) if degrees[i - 1] >= i - 1)
    if sum(degrees[:m]) != m * (m - 1) + sum(degrees[m:]):
        return None
    clique = tuple(sorted(by_degree[:m]))
    independent = tuple(sorted(by_degree[m:]))
    if not (is_clique(g, clique) and is_independent(g, independent)):
        raise InvariantError(
            "degree partition passed the sum test but is not a split partition"
        )
    return clique, independent


# --- Ordering search ---


@dataclass
class _SearchStats:
    nodes: int = 0


def _search(
    adj: Sequence[int],
    forbidden: frozenset[Pattern],
    prefix: list[int],
    remaining: int,
    stats: _SearchStats,
) -> Optional[list[int]]:
    if not remaining:
        return list(prefix)
    for v in iter_bits(remaining):
        stats.nodes += 1
        if extends_without_violation(adj, prefix, v, forbidden):
            prefix.append(v)
            found = _search(adj, forbidden, prefix, remaining & ~(1 << v), stats)
            if found is not None:
                return found
            prefix.pop()
    return None


def _search_branch(
    adj: tuple[int, ...], forbidden: frozenset[Pattern], first: int
) -> Optional[list[int]]:
    """Search the subtree of orderings that start with first (picklable)."""
    full = (1 << len(adj)) - 1
    return _search(adj, forbidden, [first], full & ~(1 << first), _SearchStats())


def find_ordering(
    g: Graph,
    conds: ConditionsLike,
    *,
    max_n: Optional[int] = None,
    parallel: bool = False,
    workers: Optional[int] = None,
    mode: Mode = "thread",
) -> Optional[VertexOrdering]:
    """Find the lexicographically first ordering satisfying every condition.

    Args:
        g (Graph): The graph.
        conds (ConditionsLike): Condition ids or names; all must hold.
        max_n (int, optional): Override for the "search" size guard.
        parallel (bool): Fan the first-level branches out to an executor.
        workers (int, optional): Executor size (default: CPU count).
        mode (str): 'thread', 'process' or 'serial'.

    Returns:
        VertexOrdering | None: The first satisfying ordering by vertex index,
            or None if no ordering satisfies all conditions.

    Raises:
        SizeGuardError: If g.n exceeds the search guard.

    """
    guard("search", g.n, max_n)
    if mode not in {"thread", "process", "serial"}:
        raise ValueError(f"Invalid mode: {mode}")
    forbidden = forbidden_patterns(conds)
    if not parallel or mode == "serial" or g.n < 3:
        stats = _SearchStats()
        found = _search(g.adj, forbidden, [], g.full_mask, stats)
        log.debug(
            "ordering search for %s on n=%d: %d nodes, %s",
            ",".join(c.value for c in normalize_conditions(conds)),
            g.n,
            stats.nodes,
            "found" if found is not None else "exhausted",
        )
    else:
        executor_cls = {
            "thread": concurrent.futures.ThreadPoolExecutor,
            "process": concurrent.futures.ProcessPoolExecutor,
        }[mode]
        with executor_cls(max_workers=workers or os.cpu_count() or 1) as executor:
            branches = list(
                executor.map(
                    _search_branch,
                    [g.adj] * g.n,
                    [forbidden] * g.n,
                    range(g.n),
                )
            )
        found = next((b for b in branches if b is not None), None)
    if found is None:
        return None
    ordering = VertexOrdering(tuple(found))
    if not holds_all(g, ordering, conds):
        raise InvariantError("search returned an ordering that fails re-validation")
    return ordering


# --- Recognition ---


@dataclass(frozen=True)
class Recognition:
    """Outcome of recognising one class on one graph.

    Attributes:
        graph_class (ClassId): The class asked about.
        member (bool): Verdict.
        method (str): "search", "maximum-cardinality-search",
            "degree-partition" or "asteroidal-triple-scan".
        conditions (tuple[ConditionId, ...]): The characterising conditions.
        ordering (VertexOrdering, optional): Satisfying ordering (members).
        obstruction (AsteroidalTriple, optional): Refutation for AT-free.
        partition (tuple, optional): (clique, independent) for split members.
        representations (tuple): Certifying objects built from the ordering.

    """

    graph_class: ClassId
    member: bool
    method: str
    conditions: tuple[ConditionId, ...] = ()
    ordering: Optional[VertexOrdering] = None
    obstruction: Optional[AsteroidalTriple] = None
    partition: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    representations: tuple[Any, ...] = field(default=(), compare=False)


def build_representations(
    g: Graph, cls: ClassId, ordering: VertexOrdering
) -> tuple[Any, ...]:
    """Certifying representations for a member, built from its ordering."""
    if cls is ClassId.INTERVAL_GRAPH:
        return (interval_model_from_ordering(g, ordering),)
    if cls is ClassId.PROPER_INTERVAL_GRAPH:
        return (proper_interval_model_from_ordering(g, ordering),)
    if cls is ClassId.COMPARABILITY_GRAPH:
        return (orientation_from_ordering(g, ordering, OrientationMode.EDGES),)
    if cls is ClassId.CO_COMPARABILITY_GRAPH:
        return (orientation_from_ordering(g, ordering, OrientationMode.NON_EDGES),)
    if cls is ClassId.PERMUTATION_GRAPH:
        model = permutation_from_ordering(g, ordering)
        return (
            orientation_from_ordering(g, ordering, OrientationMode.EDGES),
            orientation_from_ordering(g, ordering, OrientationMode.NON_EDGES),
            model,
            model.diagram(),
        )
    return ()


def recognize(
    g: Graph,
    cls: Union[ClassId, str],
    *,
    method: Method = "auto",
    max_n: Optional[int] = None,
    parallel: bool = False,
    workers: Optional[int] = None,
    mode: Mode = "thread",
) -> Recognition:
    """Decide whether g belongs to cls and return the certifying evidence.

    Args:
        g (Graph): The graph.
        cls (ClassId | str): Class to test.
        method (str): "auto" uses the validated fast paths for chordal and
            split graphs; "search" always runs the exhaustive ordering search.
        max_n (int, optional): Override for the "search" size guard.
        parallel, workers, mode: Forwarded to find_ordering.

    Returns:
        Recognition: Positive results carry an ordering (and representations,
            and the partition for split graphs); AT-free refutations carry an
            asteroidal triple; other negatives rest on the exhausted search.

    Raises:
        SizeGuardError: If the search path is taken and g is too large.

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> two_k2 = from_edge_list(4, [(0, 1), (2, 3)])
        >>> recognize(two_k2, "split").member
        False

    """
    cls = ClassId.parse(cls)
    if method not in ("auto", "search"):
        raise ValueError(f"Invalid method: {method}")
    conds = CLASS_CONDITIONS[cls]

    if cls is ClassId.AT_FREE_GRAPH:
        at = find_asteroidal_triple(g)
        return Recognition(cls, at is None, "asteroidal-triple-scan", obstruction=at)

    if method == "auto" and cls is ClassId.CHORDAL_GRAPH:
        peo = recognize_chordal_fast(g)
        return Recognition(
            cls, peo is not None, "maximum-cardinality-search", conds, ordering=peo
        )

    if method == "auto" and cls is ClassId.SPLIT_GRAPH:
        partition = recognize_split_fast(g)
        if partition is None:
            return Recognition(cls, False, "degree-partition", conds)
        ordering = split_ordering(g, *partition)
        return Recognition(
            cls, True, "degree-partition", conds, ordering=ordering, partition=partition
        )

    ordering = find_ordering(
        g, conds, max_n=max_n, parallel=parallel, workers=workers, mode=mode
    )
    if ordering is None:
        return Recognition(cls, False, "search", conds)
    partition = None
    if cls is ClassId.SPLIT_GRAPH:
        partition = split_partition_from_ordering(g, ordering)
    return Recognition(
        cls,
        True,
        "search",
        conds,
        ordering=ordering,
        partition=partition,
        representations=build_representations(g, cls, ordering),
    )
