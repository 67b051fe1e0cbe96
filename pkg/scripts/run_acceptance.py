#!/usr/bin/env python3
"""Sweep the ordercert acceptance properties over exhaustive small-graph corpora.

Every check runs over all graphs up to a given size (one per isomorphism class
by default, every labelled graph with --labelled) and counts exceptions. The
co-comparability survey records, per maximum degree, the largest width of the
ordering found by the search next to the 2*max_degree - 1 guarantee.

Usage:
    python scripts/run_acceptance.py
    python scripts/run_acceptance.py --labelled --json
    python scripts/run_acceptance.py --only split-equivalence bandwidth-bounds
"""

import argparse
import itertools
import json
import random
import sys
import time
from collections.abc import Callable, Iterator
from dataclasses import asdict, dataclass, field

from ordercert.bandwidth import bound_ordering, exact_bandwidth, lower_bounds
from ordercert.conditions import ConditionId, check_ordering, holds_all
from ordercert.errors import OrdercertError
from ordercert.generators import enumerate_all_graphs, gen, split_extremal
from ordercert.graph import (
    Graph,
    complement,
    diameter,
    from_edge_list,
    max_clique_size,
    max_degree,
)
from ordercert.recognition import find_ordering, recognize
from ordercert.representations import (
    OrientationMode,
    Permutation,
    canonicalize_intervals,
    intersection_graph_of_diagram,
    intersection_graph_of_intervals,
    interval_model_from_ordering,
    linear_diagram_from_permutation,
    ordering_from_intervals,
    orientation_from_ordering,
    permutation_graph,
    transitivity_violation,
)

MAX_MESSAGES = 5


@dataclass
class CheckResult:
    """Outcome of one acceptance check."""

    name: str
    cases: int = 0
    failure_count: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, message: str) -> None:
        """Count one exception; only the first few messages are kept."""
        self.failure_count += 1
        if len(self.failures) < MAX_MESSAGES:
            self.failures.append(message)


def corpus(n_max: int, labelled: bool, n_min: int = 1) -> Iterator[Graph]:
    """All graphs with n_min..n_max vertices."""
    for n in range(n_min, n_max + 1):
        yield from enumerate_all_graphs(n, canonical=not labelled)


def member(g: Graph, cls: str) -> bool:
    """Membership through the default recognition path."""
    return recognize(g, cls).member


def check_split_equivalence(args: argparse.Namespace, out: CheckResult) -> None:
    """Split iff chordal and co-chordal."""
    for g in corpus(7, args.labelled, n_min=7):
        out.cases += 1
        split = member(g, "split")
        if split != (member(g, "chordal") and member(complement(g), "chordal")):
            out.fail(f"split={split} on {g.edges()}")


def check_permutation_equivalence(args: argparse.Namespace, out: CheckResult) -> None:
    """One ordering for both orientation conditions iff each holds separately."""
    both = [ConditionId.COMPARABILITY, ConditionId.CO_COMPARABILITY]
    for g in corpus(6, args.labelled):
        out.cases += 1
        joint = find_ordering(g, both) is not None
        separate = member(g, "comparability") and member(g, "co-comparability")
        if joint != separate:
            out.fail(f"joint={joint} separate={separate} on {g.edges()}")


def check_interval_round_trip(args: argparse.Namespace, out: CheckResult) -> None:
    """Ordering -> interval model -> graph, and model -> left-endpoint ordering."""
    for g in corpus(7, args.labelled):
        rec = recognize(g, "interval")
        if not rec.member:
            continue
        out.cases += 1
        model = interval_model_from_ordering(g, rec.ordering)
        if intersection_graph_of_intervals(model) != g:
            out.fail(f"model does not reproduce {g.edges()}")
            continue
        ordering = ordering_from_intervals(canonicalize_intervals(model))
        if not check_ordering(g, ordering, ConditionId.INTERVAL).holds:
            out.fail(f"left-endpoint ordering fails on {g.edges()}")


def check_bandwidth_bounds(args: argparse.Namespace, out: CheckResult) -> None:
    """Class bound orderings stay within their guarantees; exact >= lower bounds."""
    for g in corpus(7, args.labelled):
        out.cases += 1
        exact = exact_bandwidth(g)
        worst = max(lower_bounds(g).values())
        if exact.value < worst:
            out.fail(f"bw={exact.value} below lower bound {worst} on {g.edges()}")
        for cls in ("interval", "co-comparability", "split"):
            if not member(g, cls) or (cls == "co-comparability" and g.num_edges == 0):
                continue
            try:
                bound_ordering(g, cls)
            except OrdercertError as e:
                out.fail(f"{cls}: {e}")
        if member(g, "at-free") and exact.value > 3 * max_degree(g):
            out.fail(f"AT-free bw={exact.value} > 3*max_degree on {g.edges()}")


def check_proper_interval_exact(args: argparse.Namespace, out: CheckResult) -> None:
    """Proper interval graphs have bandwidth exactly clique number - 1."""
    for g in corpus(7, args.labelled):
        if not member(g, "proper-interval"):
            continue
        out.cases += 1
        value = exact_bandwidth(g).value
        if value != max(max_clique_size(g) - 1, 0):
            out.fail(f"bw={value}, clique number {max_clique_size(g)} on {g.edges()}")


def check_spot_values(args: argparse.Namespace, out: CheckResult) -> None:
    """Exact bandwidth of paths, cycles, complete and complete bipartite graphs."""
    expected = {f"path:{n}": 1 for n in range(2, 10)}
    expected.update({f"cycle:{n}": 2 for n in range(4, 10)})
    expected.update({f"complete:{n}": n - 1 for n in range(2, 9)})
    expected["complete-bipartite:3,3"] = 4
    for spec, value in expected.items():
        out.cases += 1
        got = exact_bandwidth(gen(spec)).value
        if got != value:
            out.fail(f"{spec}: bw={got}, expected {value}")


def check_split_extremal(args: argparse.Namespace, out: CheckResult) -> None:
    """Structure of the extremal split family and its bandwidth lower bound."""
    for delta in range(2, 13):
        out.cases += 1
        g = split_extremal(delta)
        if max_degree(g) != delta or not member(g, "split"):
            out.fail(f"delta={delta}: max degree {max_degree(g)}")
        if delta >= 4 and diameter(g) != 3:
            out.fail(f"delta={delta}: diameter {diameter(g)}")
        bound = lower_bounds(g)["diameter"]
        if bound * 12 < delta * delta:
            out.fail(f"delta={delta}: diameter bound {bound} < delta^2/12")
        if delta <= 5 and exact_bandwidth(g).value < bound:
            out.fail(f"delta={delta}: exact bandwidth below the diameter bound")


def _random_graph(rng: random.Random, n: int) -> Graph:
    pairs = itertools.combinations(range(n), 2)
    return from_edge_list(n, [p for p in pairs if rng.random() < 0.5])


def check_orientations(args: argparse.Namespace, out: CheckResult) -> None:
    """Orientations built from satisfying orderings are transitive."""
    cases = (
        (OrientationMode.EDGES, ConditionId.COMPARABILITY),
        (OrientationMode.NON_EDGES, ConditionId.CO_COMPARABILITY),
    )
    rng = random.Random(args.seed)
    graphs = itertools.chain(
        corpus(6, args.labelled),
        (_random_graph(rng, rng.randint(3, 7)) for _ in range(args.samples)),
    )
    for g in graphs:
        for mode, cond in cases:
            ordering = find_ordering(g, [cond])
            if ordering is None:
                continue
            out.cases += 1
            bad = transitivity_violation(orientation_from_ordering(g, ordering, mode))
            if bad is not None:
                out.fail(f"{mode.value}: 2-path {bad} on {g.edges()}")


def check_split_reversal(args: argparse.Namespace, out: CheckResult) -> None:
    """The reverse of a split-eq ordering is a PEO of the complement."""
    for g in corpus(6, args.labelled):
        ordering = find_ordering(g, [ConditionId.SPLIT_EQ])
        if ordering is None:
            continue
        out.cases += 1
        reversal = check_ordering(complement(g), ordering.reversed(), ConditionId.PEO)
        if not reversal.holds:
            out.fail(f"reversal is not a PEO of the complement on {g.edges()}")


def check_permutations(args: argparse.Namespace, out: CheckResult) -> None:
    """Linear diagrams and inversion graphs agree; identity passes both conditions."""
    both = [ConditionId.COMPARABILITY, ConditionId.CO_COMPARABILITY]
    for n in range(1, 7):
        for values in itertools.permutations(range(1, n + 1)):
            out.cases += 1
            pi = Permutation(values)
            g = permutation_graph(pi)
            if intersection_graph_of_diagram(linear_diagram_from_permutation(pi)) != g:
                out.fail(f"diagram mismatch for {values}")
            if not holds_all(g, tuple(range(n)), both):
                out.fail(f"identity ordering fails for {values}")


CHECKS: dict[str, Callable[[argparse.Namespace, CheckResult], None]] = {
    "split-equivalence": check_split_equivalence,
    "permutation-equivalence": check_permutation_equivalence,
    "interval-round-trip": check_interval_round_trip,
    "bandwidth-bounds": check_bandwidth_bounds,
    "proper-interval-exact": check_proper_interval_exact,
    "spot-values": check_spot_values,
    "split-extremal": check_split_extremal,
    "orientations": check_orientations,
    "split-reversal": check_split_reversal,
    "permutations": check_permutations,
}


def cocomp_survey(labelled: bool) -> dict[int, tuple[int, int]]:
    """Max width of the found co-comparability ordering per max degree, with 2D-1."""
    survey: dict[int, tuple[int, int]] = {}
    for g in corpus(7, labelled):
        if g.num_edges == 0 or not member(g, "co-comparability"):
            continue
        delta = max_degree(g)
        width = bound_ordering(g, "co-comparability").width
        seen = survey.get(delta, (0, 2 * delta - 1))[0]
        survey[delta] = (max(seen, width), 2 * delta - 1)
    return dict(sorted(survey.items()))


def main():
    """Run the selected acceptance checks and report them."""
    parser = argparse.ArgumentParser(
        description="Sweep ordercert acceptance properties on small graphs"
    )
    parser.add_argument(
        "--labelled",
        action="store_true",
        help="Use every labelled graph instead of one per isomorphism class "
        "(the n = 7 sweep covers 2^21 graphs and takes minutes)",
    )
    parser.add_argument(
        "--only",
        nargs="+",
        choices=sorted(CHECKS),
        default=None,
        help="Run only these checks",
    )
    parser.add_argument(
        "--samples",
        type=int,
        default=10000,
        help="Random graphs for the orientation check (default: 10000)",
    )
    parser.add_argument("--seed", type=int, default=0, help="Seed for random graphs")
    parser.add_argument(
        "--no-survey",
        dest="survey",
        action="store_false",
        help="Skip the co-comparability width survey",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="Output results as JSON (for automation)",
    )
    args = parser.parse_args()

    results = []
    for name in args.only or CHECKS:
        out = CheckResult(name)
        start = time.perf_counter()
        CHECKS[name](args, out)
        out.seconds = time.perf_counter() - start
        results.append(out)
    survey = cocomp_survey(args.labelled) if args.survey else {}
    failed = any(r.failure_count for r in results)

    if args.json:
        print(
            json.dumps(
                {
                    "checks": [asdict(r) for r in results],
                    "cocomp_survey": {
                        str(d): {"max_width": w, "bound": b}
                        for d, (w, b) in survey.items()
                    },
                },
                indent=2,
            )
        )
        sys.exit(1 if failed else 0)

    from rich.console import Console
    from rich.markup import escape
    from rich.table import Table

    console = Console()
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Check", style="cyan")
    table.add_column("Cases", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Seconds", justify="right")
    for r in results:
        count = r.failure_count
        status = f"[red]{count}[/red]" if count else "[green]0[/green]"
        table.add_row(r.name, str(r.cases), status, f"{r.seconds:.2f}")
    console.print(table)
    for r in results:
        for message in r.failures:
            console.print(f"[red]{r.name}:[/red] {escape(message)}")
        if r.failure_count > len(r.failures):
            hidden = r.failure_count - len(r.failures)
            console.print(f"[red]{r.name}:[/red] ... and {hidden} more")
    if survey:
        tight = Table(
            title="Co-comparability ordering width", header_style="bold yellow"
        )
        tight.add_column("Max degree", justify="right")
        tight.add_column("Max width found", justify="right")
        tight.add_column("2*max_degree-1", justify="right")
        for delta, (width, bound) in survey.items():
            tight.add_row(str(delta), str(width), str(bound))
        console.print(tight)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
