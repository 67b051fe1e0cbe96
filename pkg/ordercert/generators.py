"""Deterministic graph families and exhaustive small-graph corpora.

Families are addressed by specs such as ``"cycle:5"``,
``"complete-bipartite:3,3"`` or ``"split-extremal:4"``; random families take
an explicit seed as their last parameter (``"random-interval:8,42"``) so the
same spec always yields the same graph.
"""

import itertools
import logging
import random
import warnings
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .constants import _RE_FAMILY_SPEC
from .errors import FamilySpecError, RepresentationError
from .graph import Graph, canonical_form, from_edge_list
from .limits import guard
from .representations import (
    IntervalModel,
    Permutation,
    intersection_graph_of_intervals,
    permutation_graph,
)

log = logging.getLogger(__name__)


def path(n: int) -> Graph:
    """P_n: vertices 0..n-1 joined in order."""
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """C_n for n >= 3."""
    if n < 3:
        raise FamilySpecError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """K_n."""
    return from_edge_list(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    """n isolated vertices."""
    return from_edge_list(n, [])


def star(leaves: int) -> Graph:
    """K_{1,leaves}: centre 0, leaves 1..leaves."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1."""
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def complete_binary_tree(n: int) -> Graph:
    """Heap-indexed binary tree on n vertices: i is joined to 2i+1 and 2i+2."""
    return from_edge_list(
        n, [(i, c) for i in range(n) for c in (2 * i + 1, 2 * i + 2) if c < n]
    )


def split_extremal(max_degree: int) -> Graph:
    """Split graph with maximum degree max_degree and a large bandwidth.

    The clique has m = max_degree // 2 vertices (0..m-1). Each clique vertex j
    owns a block of max_degree - m + 1 independent vertices, each adjacent to
    j only, so every clique vertex has degree exactly max_degree.

    Example:
        >>> g = split_extremal(4)
        >>> g.n, g.num_edges
        (8, 7)

    """
    if max_degree < 2:
        raise FamilySpecError(f"split-extremal needs max degree >= 2, got {max_degree}")
    m = max_degree // 2
    block = max_degree - m + 1
    edges = list(itertools.combinations(range(m), 2))
    for j in range(m):
        edges.extend((j, m + j * block + t) for t in range(block))
    return from_edge_list(m + m * block, edges)


def random_interval(n: int, seed: int = 0) -> Graph:
    """Intersection graph of n seeded random intervals with integer endpoints."""
    rng = random.Random(seed)
    intervals = []
    for _ in range(n):
        left = rng.randint(0, 2 * n)
        intervals.append((left, left + rng.randint(0, n)))
    return intersection_graph_of_intervals(IntervalModel.of(intervals))


def random_split(n: int, seed: int = 0) -> Graph:
    """Seeded random split graph on n vertices.

    A random subset forms the clique; every other vertex is joined to each
    clique vertex with probability 1/2.
    """
    rng = random.Random(seed)
    vertices = list(range(n))
    rng.shuffle(vertices)
    k = rng.randint(0, n)
    clique, independent = vertices[:k], vertices[k:]
    edges = list(itertools.combinations(clique, 2))
    edges.extend((v, c) for v in independent for c in clique if rng.random() < 0.5)
    return from_edge_list(n, edges)


def permutation(*values: int) -> Graph:
    """Inversion graph of the permutation values (of 1..n)."""
    try:
        return permutation_graph(Permutation(tuple(values)))
    except RepresentationError as e:
        raise FamilySpecError(str(e)) from e


@dataclass(frozen=True)
class Family:
    """A graph family: its builder and how many integer parameters it takes."""

    name: str
    builder: Callable[..., Graph]
    min_params: int
    max_params: Optional[int]
    summary: str

    def accepts(self, count: int) -> bool:
        """Return True iff count parameters are valid for this family."""
        if count < self.min_params:
            return False
        return self.max_params is None or count <= self.max_params


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in (
        Family("path", path, 1, 1, "path:n"),
        Family("cycle", cycle, 1, 1, "cycle:n (n >= 3)"),
        Family("complete", complete, 1, 1, "complete:n"),
        Family("empty", empty, 1, 1, "empty:n"),
        Family("star", star, 1, 1, "star:leaves"),
        Family(
            "complete-bipartite", complete_bipartite, 2, 2, "complete-bipartite:a,b"
        ),
        Family(
            "complete-binary-tree", complete_binary_tree, 1, 1, "complete-binary-tree:n"
        ),
        Family("split-extremal", split_extremal, 1, 1, "split-extremal:max_degree"),
        Family("random-interval", random_interval, 1, 2, "random-interval:n[,seed]"),
        Family("random-split", random_split, 1, 2, "random-split:n[,seed]"),
        Family("permutation", permutation, 0, None, "permutation:p1,...,pn"),
    )
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters, e.g. ("cycle", (5,))."""

    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        """Normalise the name and check it against FAMILIES."""
        name = self.family.strip().lower().replace("_", "-")
        object.__setattr__(self, "family", name)
        object.__setattr__(self, "params", tuple(self.params))
        if name not in FAMILIES:
            raise FamilySpecError(
                f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}"
            )
        if not FAMILIES[name].accepts(len(self.params)):
            raise FamilySpecError(
                f"wrong number of parameters for {name}: usage {FAMILIES[name].summary}"
            )

    def __str__(self) -> str:
        """Spec text, e.g. 'cycle:5'."""
        return f"{self.family}:{','.join(map(str, self.params))}"


def is_family_spec(text: str) -> bool:
    """Return True iff text looks like a family spec (name:params)."""
    return bool(_RE_FAMILY_SPEC.match(text.strip().lower()))


def parse_family_spec(text: str) -> FamilySpec:
    """Parse "name:p1,p2,..." into a FamilySpec.

    Raises:
        FamilySpecError: On bad syntax, an unknown family or a wrong number
            of parameters.

    Example:
        >>> parse_family_spec("split-extremal:4")
        FamilySpec(family='split-extremal', params=(4,))

    """
    match = _RE_FAMILY_SPEC.match(text.strip().lower())
    if not match:
        raise FamilySpecError(f"not a family spec: {text!r} (expected e.g. 'cycle:5')")
    name, raw = match.groups()
    params = tuple(int(p) for p in raw.replace(" ", "").split(",") if p)
    return FamilySpec(name, params)


def gen(spec: Union[FamilySpec, str]) -> Graph:
    """Build the graph a family spec names.

    Example:
        >>> gen("complete-bipartite:3,3").num_edges
        9

    """
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    return FAMILIES[spec.family].builder(*spec.params)


# --- Exhaustive corpora ---


def _labelled(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def _representatives(n: int) -> list[Graph]:
    reps = [Graph(0, ())]
    for k in range(1, n + 1):
        seen: dict[tuple[int, int], Graph] = {}
        for h in reps:
            for nbrs in range(1 << (k - 1)):
                adj = list(h.adj) + [nbrs]
                for u in range(k - 1):
                    if nbrs >> u & 1:
                        adj[u] |= 1 << (k - 1)
                g = Graph(k, tuple(adj))
                seen.setdefault(canonical_form(g), g)
        reps = list(seen.values())
        log.debug("canonical enumeration: %d classes on %d vertices", len(reps), k)
    return reps


def enumerate_all_graphs(
    n: int, canonical: bool = False, *, max_n: Optional[int] = None
) -> Iterator[Graph]:
    """Stream every graph on n vertices.

    Args:
        n (int): Vertex count.
        canonical (bool): Emit one graph per isomorphism class instead of all
            2^(n choose 2) labelled graphs.
        max_n (int, optional): Override for the "enumeration" guard.

    Raises:
        SizeGuardError: If n exceeds the enumeration guard (default 7).

    Example:
        >>> sum(1 for _ in enumerate_all_graphs(4, canonical=True))
        11

    """
    guard("enumeration", n, max_n)
    if canonical:
        return iter(_representatives(n))
    if n >= 7:
        total = 1 << (n * (n - 1) // 2)
        warnings.warn(
            f"enumerating all {total} labelled graphs on {n} vertices; "
            "pass canonical=True for one graph per isomorphism class",
            UserWarning,
            stacklevel=2,
        )
    return _labelled(n)
