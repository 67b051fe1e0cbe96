"""Triple conditions over vertex orderings.

Each graph class handled by ordercert is characterised by an implication that
must hold for every triple of positions i < j < k of some vertex ordering. A
condition only looks at the three pair-adjacencies (v_i v_j, v_i v_k, v_j v_k),
so it is fully described by the set of adjacency patterns it forbids. The
``TripleRule`` table below holds those patterns; the checkers evaluate them
with bitset operations.
"""

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Union

from .errors import OrderingError
from .graph import Graph, VertexOrdering, as_ordering, relabel
from .utils import lowest_bit

# (e_ij, e_ik, e_jk): adjacency of the pairs of a triple i < j < k
Pattern = tuple[bool, bool, bool]


class ConditionId(str, Enum):
    """The seven triple conditions."""

    INTERVAL = "interval"
    PROPER_INTERVAL = "proper-interval"
    COMPARABILITY = "comparability"
    CO_COMPARABILITY = "co-comparability"
    PEO = "peo"
    SPLIT_EQ = "split-eq"
    SIMPLE_SPLIT = "simple-split"

    @classmethod
    def parse(cls, name: Union[str, "ConditionId"]) -> "ConditionId":
        """Look up a condition by value or member name, case-insensitively.

        Example:
            >>> ConditionId.parse("co_comparability")
            <ConditionId.CO_COMPARABILITY: 'co-comparability'>

        """
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(
            f"unknown condition {name!r}; expected one of "
            f"{', '.join(m.value for m in cls)}"
        )


@dataclass(frozen=True)
class TripleRule:
    """One condition: its implication and the adjacency patterns violating it."""

    condition: ConditionId
    formula: str
    forbidden: frozenset[Pattern]

    def violated(self, e_ij: bool, e_ik: bool, e_jk: bool) -> bool:
        """Return True iff the implication fails on this adjacency pattern."""
        return (bool(e_ij), bool(e_ik), bool(e_jk)) in self.forbidden


def _rule(
    condition: ConditionId,
    formula: str,
    implication: Callable[[bool, bool, bool], bool],
) -> TripleRule:
    forbidden = frozenset(
        p for p in itertools.product((False, True), repeat=3) if not implication(*p)
    )
    return TripleRule(condition, formula, forbidden)


RULES: dict[ConditionId, TripleRule] = {
    r.condition: r
    for r in (
        _rule(
            ConditionId.INTERVAL,
            "v_i v_k in E => v_i v_j in E",
            lambda ij, ik, jk: not ik or ij,
        ),
        _rule(
            ConditionId.PROPER_INTERVAL,
            "v_i v_k in E => v_i v_j in E and v_j v_k in E",
            lambda ij, ik, jk: not ik or (ij and jk),
        ),
        _rule(
            ConditionId.COMPARABILITY,
            "v_i v_j in E and v_j v_k in E => v_i v_k in E",
            lambda ij, ik, jk: not (ij and jk) or ik,
        ),
        _rule(
            ConditionId.CO_COMPARABILITY,
            "v_i v_k in E => v_i v_j in E or v_j v_k in E",
            lambda ij, ik, jk: not ik or ij or jk,
        ),
        _rule(
            ConditionId.PEO,
            "v_i v_j in E and v_i v_k in E => v_j v_k in E",
            lambda ij, ik, jk: not (ij and ik) or jk,
        ),
        _rule(
            ConditionId.SPLIT_EQ,
            "v_i v_j in E => v_j v_k in E or v_i v_k in E",
            lambda ij, ik, jk: not ij or jk or ik,
        ),
        _rule(
            ConditionId.SIMPLE_SPLIT,
            "v_i v_j in E => v_j v_k in E",
            lambda ij, ik, jk: not ij or jk,
        ),
    )
}

ConditionsLike = Union[ConditionId, str, Iterable[Union[ConditionId, str]]]


def normalize_conditions(conds: ConditionsLike) -> tuple[ConditionId, ...]:
    """Return the conditions as a sorted, duplicate-free tuple of ConditionId."""
    if isinstance(conds, (ConditionId, str)):
        conds = [conds]
    parsed = {ConditionId.parse(c) for c in conds}
    order = list(ConditionId)
    return tuple(sorted(parsed, key=order.index))


def forbidden_patterns(conds: ConditionsLike) -> frozenset[Pattern]:
    """Union of the forbidden patterns: the conjunction of the conditions."""
    patterns: set[Pattern] = set()
    for c in normalize_conditions(conds):
        patterns |= RULES[c].forbidden
    return frozenset(patterns)


@dataclass(frozen=True)
class Witness:
    """A violating triple: positions i < j < k and the vertices there."""

    condition: ConditionId
    positions: tuple[int, int, int]
    vertices: tuple[int, int, int]


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one condition on one ordering."""

    condition: ConditionId
    holds: bool
    witness: Optional[Witness] = None

    def __post_init__(self):
        """A verdict fails exactly when it carries a witness."""
        if self.holds == (self.witness is not None):
            raise ValueError("a verdict holds iff it has no witness")


def _first_violation(
    padj: Sequence[int], n: int, forbidden: frozenset[Pattern]
) -> Optional[tuple[int, int, int]]:
    """Lexicographically smallest violating triple in position space."""
    full = (1 << n) - 1
    for i in range(n - 2):
        a = padj[i]
        for j in range(i + 1, n - 1):
            e_ij = bool(a >> j & 1)
            b = padj[j]
            bad = 0
            for p_ij, p_ik, p_jk in forbidden:
                if p_ij == e_ij:
                    bad |= (a if p_ik else ~a) & (b if p_jk else ~b)
            bad &= full >> (j + 1) << (j + 1)
            if bad:
                return i, j, lowest_bit(bad)
    return None


def _verdict(
    condition: ConditionId,
    ordering: VertexOrdering,
    triple: Optional[tuple[int, int, int]],
) -> Verdict:
    if triple is None:
        return Verdict(condition, True)
    vertices = tuple(ordering.order[p] for p in triple)
    return Verdict(condition, False, Witness(condition, triple, vertices))


def check_ordering(
    g: Graph,
    ordering: Union[VertexOrdering, Sequence[int]],
    condition: Union[ConditionId, str],
) -> Verdict:
    """Evaluate one condition on an ordering.

    Args:
        g (Graph): The graph.
        ordering (VertexOrdering | Sequence[int]): A permutation of g's
            vertices.
        condition (ConditionId | str): The condition to evaluate.

    Returns:
        Verdict: holds, or the lexicographically smallest violating triple of
            positions (i, j, k).

    Raises:
        OrderingError: If the ordering is not a permutation of g's vertices.

    Example:
        >>> from ordercert.graph import from_edge_list
        >>> c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        >>> check_ordering(c4, [0, 1, 2, 3], "peo").witness.positions
        (0, 1, 3)

    """
    condition = ConditionId.parse(condition)
    ordering = as_ordering(g, ordering)
    padj = relabel(g, ordering).adj
    triple = _first_violation(padj, g.n, RULES[condition].forbidden)
    return _verdict(condition, ordering, triple)


def check_ordering_naive(
    g: Graph,
    ordering: Union[VertexOrdering, Sequence[int]],
    condition: Union[ConditionId, str],
) -> Verdict:
    """Reference O(n^3) evaluation of a condition over all triples."""
    condition = ConditionId.parse(condition)
    ordering = as_ordering(g, ordering)
    rule = RULES[condition]
    order = ordering.order
    for i, j, k in itertools.combinations(range(g.n), 3):
        vi, vj, vk = order[i], order[j], order[k]
        if rule.violated(g.has_edge(vi, vj), g.has_edge(vi, vk), g.has_edge(vj, vk)):
            return _verdict(condition, ordering, (i, j, k))
    return _verdict(condition, ordering, None)


def check_all(
    g: Graph,
    ordering: Union[VertexOrdering, Sequence[int]],
    conds: ConditionsLike = tuple(ConditionId),
) -> dict[ConditionId, Verdict]:
    """Evaluate several conditions on one ordering."""
    ordering = as_ordering(g, ordering)
    return {c: check_ordering(g, ordering, c) for c in normalize_conditions(conds)}


def holds_all(
    g: Graph,
    ordering: Union[VertexOrdering, Sequence[int]],
    conds: ConditionsLike,
) -> bool:
    """Return True iff every condition holds on the ordering."""
    return all(v.holds for v in check_all(g, ordering, conds).values())


def _check_prefix(g: Graph, prefix: Sequence[int]) -> None:
    seen = set()
    for v in prefix:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise OrderingError(f"prefix entry {v!r} is not a vertex of the graph")
        if v in seen:
            raise OrderingError(f"vertex {v} appears twice in the prefix")
        seen.add(v)


def prefix_admissible(
    g: Graph,
    prefix: Sequence[int],
    condition: ConditionsLike,
) -> bool:
    """Return True iff no violating triple lies wholly inside the prefix.

    A False prefix never extends to a satisfying ordering, since the
    conditions quantify over triples only.

    Raises:
        OrderingError: If the prefix repeats a vertex or names a non-vertex.

    """
    _check_prefix(g, prefix)
    index = {v: p for p, v in enumerate(prefix)}
    padj = []
    for v in prefix:
        mask = 0
        for u, p in index.items():
            if g.adj[v] >> u & 1:
                mask |= 1 << p
        padj.append(mask)
    return _first_violation(padj, len(prefix), forbidden_patterns(condition)) is None


def extends_without_violation(
    adj: Sequence[int],
    prefix: Sequence[int],
    v: int,
    forbidden: frozenset[Pattern],
) -> bool:
    """True iff appending v to an admissible prefix creates no violation.

    Works on raw adjacency bitsets and a precomputed forbidden-pattern set,
    which is the form the ordering search keeps at hand.
    """
    av = adj[v]
    before = 0
    for u in prefix:
        au = adj[u]
        e_jk = bool(au >> v & 1)
        for p_ij, p_ik, p_jk in forbidden:
            if p_jk == e_jk and before & (au if p_ij else ~au) & (av if p_ik else ~av):
                return False
        before |= 1 << u
    return True


def extension_admissible(
    g: Graph,
    prefix: Sequence[int],
    v: int,
    conds: ConditionsLike,
) -> bool:
    """Check only the new triples (i, j, v) created by appending v to prefix.

    The prefix itself is assumed admissible; this is the incremental test the
    backtracking search runs at every node.
    """
    if v in prefix:
        raise OrderingError(f"vertex {v} is already in the prefix")
    return extends_without_violation(g.adj, prefix, v, forbidden_patterns(conds))
