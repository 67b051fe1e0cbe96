"""Versioned JSON certificates and their offline verification.

ordercert.certificates
----------------------

Certificates are frozen pydantic models (schema ``"ordercert/1"``). Field order
is fixed by the models, so ``model_dump_json(indent=2)`` is byte-stable for a
given input. Rationals are written as ``"p/q"`` strings.

Key exports:
    - Certificate: recognition verdict with ordering, obstruction and
      representation payloads.
    - CheckReport, BandwidthReport: outputs of the check and bandwidth
      commands.
    - to_certificate, check_report, exact_report, bound_report: builders.
    - verify_certificate: re-validate a certificate against its graph using
      only the certificate contents (negative search results are re-run).
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .bandwidth import (
    BandwidthResult,
    BoundOrdering,
    Caterpillar,
    lower_bounds,
    ordering_width,
    validate_kkm,
)
from .conditions import ConditionId, Verdict, Witness, check_ordering
from .constants import SCHEMA_VERSION
from .errors import OrdercertError
from .graph import (
    Graph,
    VertexOrdering,
    complement,
    from_edge_list,
    graph_digest,
    is_clique,
    is_independent,
    relabel,
)
from .recognition import (
    CLASS_CONDITIONS,
    ClassId,
    Recognition,
    find_asteroidal_triple,
    is_asteroidal_triple,
    recognize,
)
from .representations import (
    FunctionDiagram,
    IntervalModel,
    Orientation,
    OrientationMode,
    Permutation,
    PermutationModel,
    intersection_graph_of_diagram,
    intersection_graph_of_intervals,
    permutation_graph,
    transitivity_violation,
)
from .utils import fraction_to_str, parse_fraction

log = logging.getLogger(__name__)


class _Model(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class GraphRef(_Model):
    """Identifies the input graph: size plus SHA-256 of its edge-list text."""

    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    sha256: str = Field(..., min_length=64, max_length=64)


class WitnessModel(_Model):
    """A violating triple of positions and the vertices at them."""

    condition: ConditionId
    positions: tuple[int, int, int]
    vertices: tuple[int, int, int]


class VerdictModel(_Model):
    condition: ConditionId
    holds: bool
    witness: Optional[WitnessModel] = None


# --- Representation payloads ---


class IntervalPayload(_Model):
    kind: Literal["interval-model"] = "interval-model"
    proper: bool
    intervals: list[tuple[str, str]]

    def to_object(self) -> IntervalModel:
        return IntervalModel.of(
            (parse_fraction(a), parse_fraction(b)) for a, b in self.intervals
        )


class OrientationPayload(_Model):
    kind: Literal["orientation"] = "orientation"
    mode: OrientationMode
    arcs: list[tuple[int, int]]

    def to_object(self, n: int) -> Orientation:
        return Orientation(n, frozenset(tuple(a) for a in self.arcs), self.mode)


class DiagramPayload(_Model):
    """Function diagram; curve i represents graph vertex labelling[i]."""

    kind: Literal["function-diagram"] = "function-diagram"
    grid: list[str]
    curves: list[list[str]]
    labelling: list[int]

    def to_object(self) -> FunctionDiagram:
        return FunctionDiagram(
            tuple(parse_fraction(x) for x in self.grid),
            tuple(tuple(parse_fraction(y) for y in c) for c in self.curves),
        )


class PermutationPayload(_Model):
    kind: Literal["permutation"] = "permutation"
    values: list[int]
    labelling: list[int]

    def to_object(self) -> PermutationModel:
        return PermutationModel(Permutation(tuple(self.values)), tuple(self.labelling))


class SplitPartitionPayload(_Model):
    kind: Literal["split-partition"] = "split-partition"
    clique: list[int]
    independent: list[int]


class CaterpillarPayload(_Model):
    kind: Literal["caterpillar"] = "caterpillar"
    spine: list[int]
    leaves: list[list[int]]

    def to_object(self, n: int) -> Caterpillar:
        edges = list(zip(self.spine, self.spine[1:]))
        edges += [(s, x) for s, ls in zip(self.spine, self.leaves) for x in ls]
        leaves = tuple(map(tuple, self.leaves))
        return Caterpillar(from_edge_list(n, edges), tuple(self.spine), leaves)


Payload = Annotated[
    Union[
        IntervalPayload,
        OrientationPayload,
        DiagramPayload,
        PermutationPayload,
        SplitPartitionPayload,
        CaterpillarPayload,
    ],
    Field(discriminator="kind"),
]


class BoundsModel(_Model):
    """Lower bounds on the bandwidth and the width of the certificate ordering."""

    lower_bounds: dict[str, int]
    ordering_width: Optional[int] = None


class Certificate(_Model):
    """Self-contained recognition verdict."""

    schema_version: Literal["ordercert/1"] = SCHEMA_VERSION
    graph: GraphRef
    graph_class: ClassId
    verdict: Literal["holds", "fails"]
    method: str
    conditions: list[ConditionId] = []
    ordering: Optional[list[int]] = None
    obstruction: Optional[tuple[int, int, int]] = None
    representations: list[Payload] = []
    bounds: Optional[BoundsModel] = None

    @property
    def holds(self) -> bool:
        """True iff the verdict is positive."""
        return self.verdict == "holds"


class CheckReport(_Model):
    """Verdicts of several conditions on one ordering."""

    schema_version: Literal["ordercert/1"] = SCHEMA_VERSION
    graph: GraphRef
    ordering: list[int]
    holds: bool
    verdicts: list[VerdictModel]


class BandwidthReport(_Model):
    """Exact bandwidth or a class-specific bound ordering."""

    schema_version: Literal["ordercert/1"] = SCHEMA_VERSION
    graph: GraphRef
    mode: Literal["exact", "bound"]
    graph_class: Optional[ClassId] = None
    value: Optional[int] = None
    width: int
    ordering: list[int]
    lower_bounds: dict[str, int]
    bound_name: Optional[str] = None
    bound: Optional[int] = None
    extra_bounds: dict[str, int] = {}


# --- Builders ---


def graph_ref(g: Graph) -> GraphRef:
    """Size and digest of g."""
    return GraphRef(n=g.n, m=g.num_edges, sha256=graph_digest(g))


def witness_model(w: Witness) -> WitnessModel:
    return WitnessModel(
        condition=w.condition, positions=w.positions, vertices=w.vertices
    )


def payload(obj: Any) -> Payload:
    """Serialise a representation object to its payload model.

    Raises:
        TypeError: For objects with no payload type.

    """
    if isinstance(obj, IntervalModel):
        return IntervalPayload(
            proper=obj.is_proper(),
            intervals=[
                (fraction_to_str(a), fraction_to_str(b)) for a, b in obj.intervals
            ],
        )
    if isinstance(obj, Orientation):
        return OrientationPayload(mode=obj.mode, arcs=obj.sorted_arcs())
    if isinstance(obj, PermutationModel):
        return PermutationPayload(
            values=list(obj.permutation.values), labelling=list(obj.labelling)
        )
    if isinstance(obj, Caterpillar):
        return CaterpillarPayload(
            spine=list(obj.spine), leaves=[list(ls) for ls in obj.leaves]
        )
    raise TypeError(f"no certificate payload for {type(obj).__name__}")


def _diagram_payload(d: FunctionDiagram, labelling: tuple[int, ...]) -> DiagramPayload:
    return DiagramPayload(
        grid=[fraction_to_str(x) for x in d.grid],
        curves=[[fraction_to_str(y) for y in c] for c in d.curves],
        labelling=list(labelling),
    )


def to_certificate(g: Graph, rec: Recognition) -> Certificate:
    """Build the certificate of a recognition result on g.

    Example:
        >>> from ordercert.generators import gen
        >>> from ordercert.recognition import recognize
        >>> c4 = gen("cycle:4")
        >>> to_certificate(c4, recognize(c4, "permutation")).ordering
        [0, 2, 1, 3]

    """
    reps: list[Payload] = []
    labelling: tuple[int, ...] = ()
    for obj in rec.representations:
        if isinstance(obj, FunctionDiagram):
            reps.append(_diagram_payload(obj, labelling))
            continue
        if isinstance(obj, PermutationModel):
            labelling = obj.labelling
        reps.append(payload(obj))
    if rec.partition is not None:
        clique, independent = rec.partition
        reps.append(
            SplitPartitionPayload(clique=list(clique), independent=list(independent))
        )
    ordering = list(rec.ordering.order) if rec.ordering is not None else None
    return Certificate(
        graph=graph_ref(g),
        graph_class=rec.graph_class,
        verdict="holds" if rec.member else "fails",
        method=rec.method,
        conditions=list(rec.conditions),
        ordering=ordering,
        obstruction=rec.obstruction.as_tuple() if rec.obstruction is not None else None,
        representations=reps,
        bounds=BoundsModel(
            lower_bounds=lower_bounds(g),
            ordering_width=(
                ordering_width(g, rec.ordering) if rec.ordering is not None else None
            ),
        ),
    )


def check_report(
    g: Graph, ordering: VertexOrdering, verdicts: Mapping[ConditionId, Verdict]
) -> CheckReport:
    """Report for the check command."""
    models = [
        VerdictModel(
            condition=c,
            holds=v.holds,
            witness=witness_model(v.witness) if v.witness is not None else None,
        )
        for c, v in verdicts.items()
    ]
    return CheckReport(
        graph=graph_ref(g),
        ordering=list(ordering.order),
        holds=all(v.holds for v in verdicts.values()),
        verdicts=models,
    )


def exact_report(g: Graph, result: BandwidthResult) -> BandwidthReport:
    """Report for an exact bandwidth computation."""
    return BandwidthReport(
        graph=graph_ref(g),
        mode="exact",
        value=result.value,
        width=result.value,
        ordering=list(result.ordering.order),
        lower_bounds=dict(result.lower_bounds),
    )


def bound_report(g: Graph, result: BoundOrdering) -> BandwidthReport:
    """Report for a class-specific bound ordering."""
    return BandwidthReport(
        graph=graph_ref(g),
        mode="bound",
        graph_class=result.graph_class,
        width=result.width,
        ordering=list(result.ordering.order),
        lower_bounds=lower_bounds(g),
        bound_name=result.bound_name,
        bound=result.bound,
        extra_bounds=dict(result.extra_bounds),
    )


def load_certificate(text: str) -> Certificate:
    """Parse certificate JSON (raises pydantic.ValidationError when malformed)."""
    return Certificate.model_validate_json(text)


# --- Verification ---


@dataclass
class Verification:
    """Outcome of verifying a certificate; problems lists every failed check."""

    ok: bool = True
    problems: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.ok = False
        self.problems.append(message)


def _verify_payload(g: Graph, p: Any, out: Verification) -> None:
    try:
        if isinstance(p, IntervalPayload):
            model = p.to_object()
            if intersection_graph_of_intervals(model) != g:
                out.fail("interval model does not reproduce the graph")
            if p.proper and not model.is_proper():
                out.fail("interval model marked proper has nested intervals")
        elif isinstance(p, OrientationPayload):
            o = p.to_object(g.n)
            target = g if p.mode is OrientationMode.EDGES else complement(g)
            if o.underlying_graph() != target:
                out.fail(
                    f"orientation ({p.mode.value}) does not orient the right pairs"
                )
            bad = transitivity_violation(o)
            if bad is not None:
                out.fail(f"orientation is not transitive at {bad}")
        elif isinstance(p, PermutationPayload):
            model = p.to_object()
            if permutation_graph(model.permutation) != relabel(g, model.labelling):
                out.fail("permutation does not reproduce the graph")
        elif isinstance(p, DiagramPayload):
            if intersection_graph_of_diagram(p.to_object()) != relabel(g, p.labelling):
                out.fail("function diagram does not reproduce the graph")
        elif isinstance(p, SplitPartitionPayload):
            if sorted(p.clique + p.independent) != list(range(g.n)):
                out.fail("split partition does not partition the vertices")
            elif not (is_clique(g, p.clique) and is_independent(g, p.independent)):
                out.fail(
                    "split partition parts are not a clique and an independent set"
                )
        elif isinstance(p, CaterpillarPayload):
            bad = validate_kkm(g, p.to_object(g.n))
            if bad is not None:
                out.fail(f"edge {bad} breaks the caterpillar distance condition")
    except (OrdercertError, ValueError) as e:
        out.fail(f"{p.kind} payload is malformed: {e}")


def verify_certificate(
    cert: Certificate, g: Graph, *, max_n: Optional[int] = None
) -> Verification:
    """Re-check a certificate against g.

    The conditions are taken from the claimed class; a certificate whose own
    condition list differs is a problem. Positive verdicts are checked from
    the certificate alone: every condition of the class must hold on the
    ordering and every representation must reproduce g. AT-free refutations
    are checked through the obstruction; other refutations are re-derived by
    the exhaustive search.

    Raises:
        SizeGuardError: If re-running a refutation exceeds the search guard.

    """
    out = Verification()
    if cert.graph != graph_ref(g):
        out.fail("graph digest does not match the certificate")
        return out
    expected = CLASS_CONDITIONS[cert.graph_class]
    if set(cert.conditions) != set(expected):
        listed = ", ".join(c.value for c in cert.conditions) or "none"
        required = ", ".join(c.value for c in expected) or "none"
        out.fail(
            f"certificate lists conditions [{listed}], "
            f"{cert.graph_class.value} requires [{required}]"
        )
    if cert.graph_class is ClassId.AT_FREE_GRAPH:
        if cert.holds and find_asteroidal_triple(g) is not None:
            out.fail("graph has an asteroidal triple")
        if not cert.holds and (
            cert.obstruction is None or not is_asteroidal_triple(g, cert.obstruction)
        ):
            out.fail("obstruction is not an asteroidal triple")
        return out
    if not cert.holds:
        if recognize(g, cert.graph_class, method="search", max_n=max_n).member:
            out.fail(f"graph belongs to the {cert.graph_class.value} class")
        return out
    if cert.ordering is None:
        out.fail("positive certificate has no ordering")
        return out
    try:
        ordering = VertexOrdering(tuple(cert.ordering))
        for c in expected:
            verdict = check_ordering(g, ordering, c)
            if not verdict.holds:
                out.fail(f"{c.value} fails at positions {verdict.witness.positions}")
    except OrdercertError as e:
        out.fail(f"ordering is invalid: {e}")
    for p in cert.representations:
        _verify_payload(g, p, out)
    log.debug(
        "verified %s certificate: %s",
        cert.graph_class.value,
        "ok" if out.ok else out.problems,
    )
    return out
