"""Graph core for ordercert: bitset graphs, vertex orderings and text formats.

ordercert.graph
---------------

Vertices are the dense indices ``0..n-1``. Adjacency is stored as one Python
integer per vertex whose set bits are the neighbours, so every triple condition
in :mod:`ordercert.conditions` reduces to a handful of bitwise operations.

Key exports:
    - Graph, VertexOrdering: immutable value types shared by every module.
    - from_edge_list, complement, induced_subgraph, relabel: constructors.
    - degree, max_degree, components, component_masks, reachable_within,
      distances_from, diameter, component_diameters, is_clique, is_independent,
      max_clique_size: queries.
    - parse_graph6, emit_graph6, parse_edge_list, emit_edge_list, read_graph,
      graph_digest: text formats.
    - canonical_form, is_isomorphic: brute-force canonical labelling for small
      graphs.

Example:
    >>> from ordercert.graph import from_edge_list, diameter
    >>> p4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    >>> diameter(p4)
    3

"""

import hashlib
import itertools
import sys
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, Optional, Union

from .constants import (
    _RE_EDGE_LIST_COMMENT,
    GRAPH6_HEADER,
    GRAPH6_LONG_MARKER,
    GRAPH6_LONG_MAX_N,
    GRAPH6_MEDIUM_MAX_N,
    GRAPH6_OFFSET,
    GRAPH6_SHORT_MAX_N,
    GRAPH6_SUFFIXES,
)
from .errors import GraphFormatError, GraphInputError, OrderingError
from .utils import bits_to_mask, iter_bits, lowest_bit

GraphFormat = Literal["edgelist", "graph6"]


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on the vertices 0..n-1.

    Attributes:
        n (int): Number of vertices.
        adj (tuple[int, ...]): Neighbour bitsets; bit u of adj[v] is set iff uv
            is an edge.

    The constructor checks symmetry, irreflexivity and index range, so every
    Graph in circulation satisfies them.

    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        """Validate the adjacency bitsets."""
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphInputError(
                f"vertex count must be a non-negative int, got {self.n!r}"
            )
        adj = tuple(self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise GraphInputError(
                f"adjacency has {len(adj)} rows but the graph has {self.n} vertices"
            )
        full = (1 << self.n) - 1
        for v, mask in enumerate(adj):
            if not isinstance(mask, int) or mask < 0 or mask & ~full:
                raise GraphInputError(
                    f"vertex {v} has a neighbour index outside 0..{self.n - 1}"
                )
            if mask >> v & 1:
                raise GraphInputError(f"self-loop at vertex {v}: simple graphs only")
            for u in iter_bits(mask):
                if not adj[u] >> v & 1:
                    raise GraphInputError(
                        f"adjacency is not symmetric on the pair ({v}, {u})"
                    )

    @property
    def full_mask(self) -> int:
        """Bitmask with every vertex set."""
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        """Return True iff uv is an edge."""
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        """Return the neighbours of v in increasing order."""
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        """Return the degree of v."""
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Return the edges as sorted pairs (u, v) with u < v."""
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def __repr__(self) -> str:
        """Short form showing size and edges."""
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class VertexOrdering:
    """A total order of the vertices 0..n-1.

    Attributes:
        order (tuple[int, ...]): order[i] is the vertex at position i.
        pos (tuple[int, ...]): Inverse map, pos[v] is the position of v.

    """

    order: tuple[int, ...]
    pos: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate that order is a permutation and build the inverse."""
        order = tuple(self.order)
        n = len(order)
        pos = [-1] * n
        for i, v in enumerate(order):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise OrderingError(
                    f"ordering entry {v!r} is not a vertex of 0..{n - 1}"
                )
            if pos[v] != -1:
                raise OrderingError(f"vertex {v} appears twice in the ordering")
            pos[v] = i
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "pos", tuple(pos))

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        """Return the ordering (0, 1, ..., n-1)."""
        return cls(tuple(range(n)))

    def reversed(self) -> "VertexOrdering":
        """Return the reverse ordering."""
        return VertexOrdering(self.order[::-1])

    def __len__(self) -> int:
        """Number of vertices ordered."""
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        """Iterate vertices from first to last position."""
        return iter(self.order)

    def __getitem__(self, i: int) -> int:
        """Vertex at position i."""
        return self.order[i]


def as_ordering(
    g: Graph, ordering: Union[VertexOrdering, Sequence[int]]
) -> VertexOrdering:
    """Coerce a sequence to a VertexOrdering and check it fits g.

    Raises:
        OrderingError: If the length differs from g.n or it is not a
            permutation.

    """
    if not isinstance(ordering, VertexOrdering):
        ordering = VertexOrdering(tuple(ordering))
    if len(ordering) != g.n:
        raise OrderingError(
            f"ordering has {len(ordering)} vertices but the graph has {g.n}"
        )
    return ordering


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from a vertex count and a list of index pairs.

    Duplicate edges (in either direction) are collapsed.

    Args:
        n (int): Number of vertices.
        edges (Iterable[Sequence[int]]): Pairs (u, v) with 0 <= u, v < n.

    Returns:
        Graph: The symmetric, irreflexive graph.

    Raises:
        GraphInputError: On an endpoint outside 0..n-1 or a self-loop.

    Example:
        >>> from_edge_list(3, [(0, 1), (1, 2)]).edges()
        [(0, 1), (1, 2)]

    """
    if not isinstance(n, int) or n < 0:
        raise GraphInputError(f"vertex count must be a non-negative int, got {n!r}")
    adj = [0] * n
    for edge in edges:
        if len(edge) != 2:
            raise GraphInputError(f"edge {edge!r} is not a pair")
        u, v = edge
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphInputError(f"edge {edge!r} has non-integer endpoints")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop ({u}, {v}): simple graphs only")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    """Return the complement: uv is an edge iff u != v and uv is not an edge of g."""
    full = g.full_mask
    return Graph(g.n, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(g.adj)))


def induced_subgraph(
    g: Graph, vertices: Iterable[int]
) -> tuple[Graph, tuple[int, ...]]:
    """Return the subgraph induced by vertices, relabelled 0..k-1 in sorted order.

    Returns:
        tuple[Graph, tuple[int, ...]]: The subgraph and the map new index ->
            original vertex.

    """
    keep = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(bits_to_mask(index[u] for u in iter_bits(g.adj[v]) if u in index))
    return Graph(len(keep), tuple(adj)), keep


def relabel(g: Graph, ordering: Union[VertexOrdering, Sequence[int]]) -> Graph:
    """Return the graph whose vertex i is the vertex at position i of ordering."""
    ordering = as_ordering(g, ordering)
    pos = ordering.pos
    adj = [bits_to_mask(pos[u] for u in iter_bits(g.adj[v])) for v in ordering.order]
    return Graph(g.n, tuple(adj))


# --- Queries ---


def degree(g: Graph, v: int) -> int:
    """Return the degree of v."""
    return g.degree(v)


def max_degree(g: Graph) -> int:
    """Return the maximum degree, 0 for the empty graph."""
    return max((mask.bit_count() for mask in g.adj), default=0)


def reachable_within(g: Graph, start_mask: int, allowed: int) -> int:
    """Vertices reachable from start_mask inside the allowed vertex set."""
    reached = start_mask & allowed
    frontier = reached
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~reached
        reached |= nxt
        frontier = nxt
    return reached


def component_masks(g: Graph, allowed: Optional[int] = None) -> list[int]:
    """Return connected components of g[allowed] as bitmasks, by smallest vertex."""
    remaining = g.full_mask if allowed is None else allowed
    found = []
    while remaining:
        comp = reachable_within(g, 1 << lowest_bit(remaining), remaining)
        found.append(comp)
        remaining &= ~comp
    return found


def components(g: Graph) -> list[tuple[int, ...]]:
    """Return the connected components, each sorted, ordered by smallest vertex."""
    return [tuple(iter_bits(mask)) for mask in component_masks(g)]


def distances_from(g: Graph, source: int) -> list[Optional[int]]:
    """Breadth-first distances from source; None for unreachable vertices."""
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    layer = 0
    while frontier:
        layer += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        for v in iter_bits(nxt):
            dist[v] = layer
        seen |= nxt
        frontier = nxt
    return dist


def component_diameters(g: Graph) -> list[int]:
    """Return the diameter of each component, aligned with components(g)."""
    result = []
    for comp in components(g):
        ecc = 0
        for v in comp:
            dist = distances_from(g, v)
            ecc = max(ecc, max(dist[u] for u in comp))
        result.append(ecc)
    return result


def diameter(g: Graph) -> int:
    """Return the largest component diameter (0 for empty or edgeless graphs).

    Example:
        >>> diameter(from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))
        3

    """
    return max(component_diameters(g), default=0)


def _vertex_mask(g: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} is not in 0..{g.n - 1}")
        mask |= 1 << v
    return mask


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """Return True iff the vertices are pairwise adjacent."""
    mask = _vertex_mask(g, vertices)
    return all(not (mask & ~(1 << v) & ~g.adj[v]) for v in iter_bits(mask))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    """Return True iff no two of the vertices are adjacent."""
    mask = _vertex_mask(g, vertices)
    return all(not (mask & g.adj[v]) for v in iter_bits(mask))


def max_clique_size(g: Graph) -> int:
    """Return the clique number by exhaustive branch and bound (for n up to ~20).

    Example:
        >>> max_clique_size(from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]))
        2

    """
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            v = lowest_bit(candidates)
            candidates &= ~(1 << v)
            expand(size + 1, candidates & g.adj[v])

    expand(0, g.full_mask)
    return best


# --- Canonical labelling ---


def _refined_colours(g: Graph) -> list[int]:
    """Colour refinement from degrees; colours are isomorphism-invariant."""
    colours = [g.degree(v) for v in range(g.n)]
    n_classes = len(set(colours))
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[u] for u in iter_bits(g.adj[v]))))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == n_classes:
            return refined
        colours, n_classes = refined, len(palette)


def canonical_form(g: Graph) -> tuple[int, int]:
    """Return a canonical code: equal for two graphs iff they are isomorphic.

    The code is (n, adjacency bits) minimised over every labelling that lists
    the colour-refinement cells in colour order. Brute force inside each cell;
    intended for the small graphs of the exhaustive test corpora.
    """
    n = g.n
    colours = _refined_colours(g)
    cells = [
        [v for v in range(n) if colours[v] == c] for c in sorted(set(colours))
    ]
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    best: Optional[int] = None
    for parts in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        order = [v for part in parts for v in part]
        code = 0
        for i, j in pairs:
            code = code << 1 | (g.adj[order[i]] >> order[j] & 1)
        if best is None or code < best:
            best = code
    return n, best or 0


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Return True iff g and h are isomorphic (small graphs only)."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    degrees_g = sorted(g.degree(v) for v in range(g.n))
    if degrees_g != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)


# --- graph6 ---


def _graph6_size_prefix(n: int) -> list[int]:
    if n <= GRAPH6_SHORT_MAX_N:
        return [n]
    if n <= GRAPH6_MEDIUM_MAX_N:
        return [GRAPH6_LONG_MARKER - GRAPH6_OFFSET] + [n >> s & 63 for s in (12, 6, 0)]
    if n <= GRAPH6_LONG_MAX_N:
        return [GRAPH6_LONG_MARKER - GRAPH6_OFFSET] * 2 + [
            n >> s & 63 for s in (30, 24, 18, 12, 6, 0)
        ]
    raise GraphInputError(f"graph6 cannot encode n={n}")


def emit_graph6(g: Graph) -> str:
    """Encode g in graph6 (no header), bit-exact with the published format.

    Example:
        >>> emit_graph6(from_edge_list(2, [(0, 1)]))
        'A_'

    """
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    values = _graph6_size_prefix(g.n)
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k : k + 6]:
            value = value << 1 | bit
        values.append(value)
    return "".join(chr(v + GRAPH6_OFFSET) for v in values)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (optional ``>>graph6<<`` header).

    Raises:
        GraphFormatError: On an invalid character, malformed size header or a
            bit-vector of the wrong length.

    Example:
        >>> parse_graph6("D?{").edges()
        [(0, 4), (1, 4), (2, 4), (3, 4)]

    """
    if not isinstance(text, str):
        raise TypeError("graph6 input must be a string")
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :].strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - GRAPH6_OFFSET for c in s]
    for k, value in enumerate(data):
        if not 0 <= value <= 63:
            raise GraphFormatError(f"invalid graph6 character {s[k]!r} at offset {k}")
    long_marker = GRAPH6_LONG_MARKER - GRAPH6_OFFSET
    if data[0] != long_marker:
        n, body = data[0], data[1:]
    elif len(data) >= 2 and data[1] == long_marker:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size header")
        n, body = _six_bit_int(data[2:8]), data[8:]
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size header")
        n, body = _six_bit_int(data[1:4]), data[4:]
    n_bits = n * (n - 1) // 2
    expected = (n_bits + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 bit-vector for n={n} needs {expected} bytes, got {len(body)}"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def _six_bit_int(groups: Sequence[int]) -> int:
    value = 0
    for group in groups:
        value = value << 6 | group
    return value


# --- Edge-list text ---


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: a line "n m", then m lines "u v" (0-based).

    Everything after '#' on a line is a comment; blank lines are ignored.

    Raises:
        GraphFormatError: On a malformed header, a bad line or an edge count
            that does not match the header.
        GraphInputError: On an out-of-range endpoint or a self-loop.

    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = _RE_EDGE_LIST_COMMENT.sub("", line).split()
        if fields:
            rows.append((lineno, fields))
    if not rows:
        raise GraphFormatError("edge list is empty: expected a header line 'n m'")
    header_line, header = rows[0]
    n, m = _parse_int_pair(header, header_line, "header 'n m'")
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {header_line}: n and m must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(
            f"header declares {m} edges but {len(body)} edge lines follow"
        )
    edges = [_parse_int_pair(fields, lineno, "edge 'u v'") for lineno, fields in body]
    return from_edge_list(n, edges)


def _parse_int_pair(fields: list[str], lineno: int, what: str) -> tuple[int, int]:
    if len(fields) != 2:
        raise GraphFormatError(
            f"line {lineno}: expected {what}, got {' '.join(fields)!r}"
        )
    try:
        return int(fields[0]), int(fields[1])
    except ValueError as e:
        raise GraphFormatError(f"line {lineno}: expected integers in {what}") from e


def emit_edge_list(g: Graph) -> str:
    """Serialise g in the edge-list format with sorted edges."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def graph_digest(g: Graph) -> str:
    """SHA-256 hex digest of the canonical edge-list text of g."""
    return hashlib.sha256(emit_edge_list(g).encode("ascii")).hexdigest()


def guess_format(path: Union[str, Path]) -> GraphFormat:
    """Pick graph6 for .g6/.graph6 files and the edge list otherwise."""
    return "graph6" if str(path).lower().endswith(GRAPH6_SUFFIXES) else "edgelist"


def parse_graph(text: str, fmt: GraphFormat) -> Graph:
    """Parse text in the named format."""
    if fmt == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise GraphFormatError("empty graph6 input")
        return parse_graph6(lines[0])
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def read_graph(path: Union[str, Path], fmt: Optional[GraphFormat] = None) -> Graph:
    """Read a graph from a file ('-' for stdin).

    Args:
        path (str | Path): File path, or '-' for standard input.
        fmt (str, optional): "edgelist" or "graph6"; guessed from the suffix
            when omitted.

    Returns:
        Graph: The parsed graph.

    """
    if str(path) == "-":
        text = sys.stdin.read()
        return parse_graph(text, fmt or "edgelist")
    with open(path, encoding="utf-8") as f:
        text = f.read()
    return parse_graph(text, fmt or guess_format(path))
