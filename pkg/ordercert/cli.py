"""CLI for ordercert: certifying graph-class recognition and bandwidth orderings.

Exit codes follow grep: 0 when the graph is a member (or every check holds),
1 when it is not, 2 on any error. Certificates and reports go to stdout as
JSON; diagnostics and log output go to stderr.
"""

import logging
import platform
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from . import __version__
from .api import batch_recognize
from .bandwidth import bound_ordering, exact_bandwidth, find_spanning_caterpillar
from .certificates import (
    bound_report,
    check_report,
    exact_report,
    load_certificate,
    payload,
    to_certificate,
    verify_certificate,
)
from .conditions import RULES, ConditionId, check_all, normalize_conditions
from .errors import NotInClassError, OrdercertError
from .generators import FAMILIES, FamilySpec, gen, is_family_spec, parse_family_spec
from .graph import (
    Graph,
    VertexOrdering,
    component_masks,
    emit_edge_list,
    emit_graph6,
    read_graph,
)
from .limits import Limits
from .recognition import CLASS_CONDITIONS, ClassId, recognize

app = typer.Typer(
    name="ordercert",
    help=(
        "ordercert: recognise graph classes through vertex orderings and emit "
        "checkable certificates.\n\n"
        "Inputs are edge-list or graph6 files, '-' for stdin, or family specs "
        "such as cycle:5 or split-extremal:4.\n\n"
        "Examples:\n"
        "  ordercert recognize --class permutation cycle:4\n"
        "  ordercert check cycle:4 '0 1 2 3' --cond peo\n"
        "  ordercert bandwidth --exact complete-bipartite:3,3\n"
        "  ordercert gen split-extremal:4 --format graph6\n\n"
        "Exit codes: 0 member / holds, 1 non-member / fails, 2 error."
    ),
)
app.name = "ordercert"  # Click test runner compatibility
app.main = app

console = Console()
err_console = Console(stderr=True)

log = logging.getLogger("ordercert")


class InputFormat(str, Enum):
    """Graph text formats accepted on input and written by gen."""

    edgelist = "edgelist"
    graph6 = "graph6"


format_option = typer.Option(
    None,
    "--format",
    "-f",
    help="Input format (default: graph6 for .g6/.graph6 files, edge list otherwise).",
)
max_n_option = typer.Option(
    None,
    "--max-n",
    help="Override every size guard (also settable with ORDERCERT_MAX_N).",
)
seed_option = typer.Option(
    None,
    "--seed",
    help="Seed for random families given without one (e.g. random-interval:8).",
)
json_option = typer.Option(
    False,
    "--json",
    help="Print JSON instead of a table.",
)
class_option = typer.Option(
    ...,
    "--class",
    "-c",
    help="Graph class.",
    case_sensitive=False,
)
method_option = typer.Option(
    "auto",
    "--method",
    help="'auto' (fast paths for chordal and split) or 'search'.",
)


@contextmanager
def _exit_on_error():
    """Turn library and I/O errors into a red diagnostic and exit code 2."""
    try:
        yield
    except (OrdercertError, OSError, ValueError, ValidationError) as e:
        err_console.print(f"[bold red]Error:[/bold red] {escape(str(e))}")
        raise typer.Exit(2) from e


def _family(text: str, seed: Optional[int]) -> Graph:
    spec = parse_family_spec(text)
    if seed is not None and spec.family.startswith("random-") and len(spec.params) == 1:
        spec = FamilySpec(spec.family, spec.params + (seed,))
    return gen(spec)


def _load_graph(
    source: str, fmt: Optional[InputFormat] = None, seed: Optional[int] = None
) -> Graph:
    """Read a graph from a file, stdin ('-') or a family spec."""
    if source != "-" and not Path(source).exists() and is_family_spec(source):
        return _family(source, seed)
    return read_graph(source, fmt.value if fmt else None)


def _parse_ordering(text: str, n: int) -> VertexOrdering:
    """Parse an ordering given inline ("0 2 1 3", "0,2,1,3") or as a file path."""
    path = Path(text)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    fields = text.replace(",", " ").split()
    try:
        order = tuple(int(f) for f in fields)
    except ValueError as e:
        raise ValueError(f"ordering must list vertex ids, got {text.strip()!r}") from e
    if len(order) != n:
        raise ValueError(f"ordering lists {len(order)} vertices, graph has {n}")
    return VertexOrdering(order)


def _parse_conditions(cond: str) -> tuple[ConditionId, ...]:
    if cond.strip().lower() == "all":
        return tuple(ConditionId)
    return normalize_conditions(c for c in cond.split(",") if c.strip())


def _validate_mode(mode: str) -> None:
    """Exit with code 2 unless mode is 'thread', 'process' or 'serial'."""
    valid_modes = {"thread", "process", "serial"}
    if mode not in valid_modes:
        err_console.print(
            f"[red]Error: --mode must be one of {valid_modes}, got '{mode}'.[/red]",
        )
        raise typer.Exit(2)


def _configure_logging(verbose: bool) -> None:
    log.handlers[:] = [RichHandler(console=err_console, show_path=False)]
    log.setLevel(logging.DEBUG if verbose else logging.WARNING)
    log.propagate = False


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        is_eager=True,
        help="Show version and exit.",
    ),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Log search statistics to stderr."
    ),
):
    """Certifying graph-class recognition through vertex orderings.

    Use `ordercert --help` or `ordercert <command> --help` for detailed usage.
    """
    if version:
        typer.echo(f"ordercert v{__version__}")
        raise typer.Exit(code=0)
    _configure_logging(verbose)
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        raise typer.Exit(code=0)


@app.command()
def version():
    """Show the installed ordercert version and exit."""
    typer.echo(f"ordercert v{__version__}")


@app.command("recognize")
def recognize_cmd(
    source: str = typer.Argument(..., help="Graph file, '-' or family spec."),
    graph_class: ClassId = class_option,
    fmt: Optional[InputFormat] = format_option,
    method: str = method_option,
    max_n: Optional[int] = max_n_option,
    seed: Optional[int] = seed_option,
):
    """Decide class membership and print the JSON certificate.

    Examples:
        ordercert recognize --class split cycle:4
        ordercert recognize --class interval graph.g6

    """
    with _exit_on_error():
        g = _load_graph(source, fmt, seed)
        rec = recognize(g, graph_class, method=method, max_n=max_n)
        cert = to_certificate(g, rec)
    typer.echo(cert.model_dump_json(indent=2))
    raise typer.Exit(0 if rec.member else 1)


@app.command()
def check(
    source: str = typer.Argument(..., help="Graph file, '-' or family spec."),
    ordering: str = typer.Argument(
        ..., help="Ordering file, or ids inline: '0 2 1 3'."
    ),
    cond: str = typer.Option(
        "all", "--cond", help="Comma-separated condition names, or 'all'."
    ),
    fmt: Optional[InputFormat] = format_option,
    as_json: bool = json_option,
    seed: Optional[int] = seed_option,
):
    """Evaluate triple conditions on a given ordering.

    Exit code 0 iff every requested condition holds.
    """
    with _exit_on_error():
        g = _load_graph(source, fmt, seed)
        order = _parse_ordering(ordering, g.n)
        verdicts = check_all(g, order, _parse_conditions(cond))
        report = check_report(g, order, verdicts)
    if as_json:
        typer.echo(report.model_dump_json(indent=2))
    else:
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Condition", style="cyan")
        table.add_column("Holds")
        table.add_column("Witness positions")
        table.add_column("Witness vertices")
        for v in report.verdicts:
            table.add_row(
                v.condition.value,
                "[green]yes[/green]" if v.holds else "[red]no[/red]",
                str(v.witness.positions) if v.witness else "",
                str(v.witness.vertices) if v.witness else "",
            )
        console.print(table)
    raise typer.Exit(0 if report.holds else 1)


@app.command()
def bandwidth(
    source: str = typer.Argument(..., help="Graph file, '-' or family spec."),
    exact: bool = typer.Option(False, "--exact", help="Exact branch-and-bound value."),
    bound: Optional[ClassId] = typer.Option(
        None,
        "--bound",
        help="Class whose bound ordering to build.",
        case_sensitive=False,
    ),
    fmt: Optional[InputFormat] = format_option,
    as_json: bool = json_option,
    max_n: Optional[int] = max_n_option,
    seed: Optional[int] = seed_option,
):
    """Exact bandwidth (--exact, the default) or a class bound ordering (--bound).

    For --bound on a non-member, the refutation certificate is printed and the
    exit code is 1.
    """
    if exact and bound is not None:
        err_console.print("[red]Error: use either --exact or --bound, not both.[/red]")
        raise typer.Exit(2)
    with _exit_on_error():
        g = _load_graph(source, fmt, seed)
        try:
            if bound is None:
                report = exact_report(g, exact_bandwidth(g, max_n=max_n))
            else:
                report = bound_report(g, bound_ordering(g, bound, max_n=max_n))
        except NotInClassError as e:
            typer.echo(to_certificate(g, e.recognition).model_dump_json(indent=2))
            raise typer.Exit(1) from e
    if as_json:
        typer.echo(report.model_dump_json(indent=2))
        return
    table = Table(show_header=False, box=None, pad_edge=False)
    table.add_row("[bold]Mode[/bold]", report.mode)
    if report.value is not None:
        table.add_row("[bold]Bandwidth[/bold]", f"[cyan]{report.value}[/cyan]")
    else:
        table.add_row("[bold]Class[/bold]", report.graph_class.value)
        table.add_row("[bold]Width[/bold]", f"[cyan]{report.width}[/cyan]")
        table.add_row("[bold]Guarantee[/bold]", f"{report.bound_name} = {report.bound}")
        for name, value in report.extra_bounds.items():
            table.add_row("[bold]Also[/bold]", f"{escape(name)} = {value}")
    table.add_row("[bold]Ordering[/bold]", " ".join(map(str, report.ordering)))
    for name, value in report.lower_bounds.items():
        table.add_row(f"[bold]Lower bound ({name})[/bold]", str(value))
    console.print(table)


@app.command("repr")
def repr_cmd(
    source: str = typer.Argument(..., help="Graph file, '-' or family spec."),
    graph_class: ClassId = class_option,
    fmt: Optional[InputFormat] = format_option,
    as_json: bool = json_option,
    max_n: Optional[int] = max_n_option,
    seed: Optional[int] = seed_option,
):
    """Build the certifying representation of a member.

    Interval models, transitive orientations, permutations with their linear
    diagrams, split partitions, and for connected AT-free graphs a spanning
    caterpillar.
    """
    with _exit_on_error():
        g = _load_graph(source, fmt, seed)
        rec = recognize(g, graph_class, max_n=max_n)
        if not rec.member:
            typer.echo(to_certificate(g, rec).model_dump_json(indent=2))
            raise typer.Exit(1)
        reps = list(to_certificate(g, rec).representations)
        connected = g.n > 0 and len(component_masks(g)) == 1
        if graph_class is ClassId.AT_FREE_GRAPH and connected:
            caterpillar = find_spanning_caterpillar(g, max_n=max_n)
            if caterpillar is not None:
                reps.append(payload(caterpillar))
    if as_json:
        typer.echo("[" + ",".join(p.model_dump_json() for p in reps) + "]")
        return
    if not reps:
        console.print(
            f"[yellow]no representation for {graph_class.value} beyond the "
            "ordering[/yellow]"
        )
    for p in reps:
        table = Table(title=p.kind, show_header=False)
        for key, value in p.model_dump(exclude={"kind"}).items():
            table.add_row(f"[bold]{key}[/bold]", escape(str(value)))
        console.print(table)


@app.command("gen")
def gen_cmd(
    spec: str = typer.Argument(..., help="Family spec, e.g. split-extremal:4."),
    fmt: InputFormat = typer.Option(
        InputFormat.edgelist, "--format", "-f", help="Output format."
    ),
    output: Optional[str] = typer.Option(None, "--output", "-o", help="Output file."),
    seed: Optional[int] = seed_option,
):
    """Generate a graph from a family spec."""
    with _exit_on_error():
        g = _family(spec, seed)
        text = emit_graph6(g) + "\n" if fmt is InputFormat.graph6 else emit_edge_list(g)
        if output:
            with open(output, "w", encoding="utf-8") as f:
                f.write(text)
            return
    typer.echo(text, nl=False)


@app.command()
def verify(
    certificate: str = typer.Argument(
        ..., help="Certificate JSON file ('-' for stdin)."
    ),
    source: str = typer.Argument(..., help="Graph file, '-' or family spec."),
    fmt: Optional[InputFormat] = format_option,
    max_n: Optional[int] = max_n_option,
):
    """Re-check a certificate against its graph; exit 0 iff it verifies."""
    with _exit_on_error():
        if certificate == "-":
            text = typer.get_text_stream("stdin").read()
        else:
            text = Path(certificate).read_text(encoding="utf-8")
        cert = load_certificate(text)
        g = _load_graph(source, fmt)
        outcome = verify_certificate(cert, g, max_n=max_n)
    if outcome.ok:
        console.print(
            f"[green]verified:[/green] {cert.graph_class.value} {cert.verdict}"
        )
        return
    for problem in outcome.problems:
        err_console.print(f"[red]{escape(problem)}[/red]")
    raise typer.Exit(1)


batch_parallel = typer.Option(
    False,
    "--parallel",
    help="Recognise the inputs on a worker pool.",
)
batch_workers = typer.Option(
    None,
    "--workers",
    help="Number of parallel workers (default: CPU count). Only used with --parallel.",
)
batch_mode = typer.Option(
    "thread",
    "--mode",
    help="Parallel mode: 'thread' (default), 'process', or 'serial'.",
)


@app.command()
def batch(
    sources: list[str] = typer.Argument(..., help="Graph files or family specs."),
    graph_class: ClassId = class_option,
    fmt: Optional[InputFormat] = format_option,
    method: str = method_option,
    max_n: Optional[int] = max_n_option,
    parallel: bool = batch_parallel,
    workers: Optional[int] = batch_workers,
    mode: str = batch_mode,
):
    """Recognise one class on many inputs; one JSON certificate per line.

    Exit code 0 iff every input is a member.
    """
    _validate_mode(mode)
    with _exit_on_error():
        graphs = [_load_graph(s, fmt) for s in sources]
        results = batch_recognize(
            graphs,
            graph_class,
            method=method,
            max_n=max_n,
            parallel=parallel,
            workers=workers,
            mode=mode,
            chunk_size=1,
        )
    for g, rec in zip(graphs, results):
        typer.echo(to_certificate(g, rec).model_dump_json())
    raise typer.Exit(0 if all(r.member for r in results) else 1)


@app.command()
def info():
    """Show classes, conditions, families and size limits."""
    with _exit_on_error():
        limits = Limits.from_env()

    about = Table(show_header=False, box=None, pad_edge=False)
    about.add_row("[bold]Version[/bold]", f"[cyan]{__version__}[/cyan]")
    about.add_row("[bold]Python[/bold]", f"[cyan]{platform.python_version()}[/cyan]")
    about.add_row(
        "[bold]Platform[/bold]",
        f"[cyan]{platform.system()} {platform.release()}[/cyan]",
    )
    console.print(about)

    classes = Table(title="Classes", show_header=True, header_style="bold yellow")
    classes.add_column("Class", style="cyan", no_wrap=True)
    classes.add_column("Conditions", style="green")
    for cls, conds in CLASS_CONDITIONS.items():
        names = ", ".join(c.value for c in conds)
        classes.add_row(cls.value, names or "asteroidal-triple scan")
    console.print(classes)

    conditions = Table(
        title="Conditions (all i < j < k)", show_header=True, header_style="bold yellow"
    )
    conditions.add_column("Condition", style="cyan", no_wrap=True)
    conditions.add_column("Implication", style="green")
    for c, rule in RULES.items():
        conditions.add_row(c.value, rule.formula)
    console.print(conditions)

    families = Table(title="Families", show_header=True, header_style="bold yellow")
    families.add_column("Family", style="cyan", no_wrap=True)
    families.add_column("Usage", style="green")
    for name, family in FAMILIES.items():
        families.add_row(name, family.summary)
    console.print(families)

    guards = Table(title="Size limits", show_header=True, header_style="bold yellow")
    guards.add_column("Guard", style="cyan")
    guards.add_column("Max n", style="green")
    for name in ("search", "bandwidth", "caterpillar", "enumeration"):
        guards.add_row(name, str(getattr(limits, name)))
    console.print(guards)


if __name__ == "__main__":
    app()
