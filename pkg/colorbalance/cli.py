"""
The `colorbalance` command line.

Graphs are read from CGF files (`-` reads standard input) or, where a command
accepts `--family`, built from a family shorthand such as `wheel:7`. Results
go to standard output; progress under `--verbose` goes to standard error.

Exit codes: 0 on success, 1 for a negative verdict or a failed construction,
2 for unreadable input or bad usage.

"""

import contextlib
from dataclasses import dataclass
import json

import click

from . import balance
from . import caterpillar as cat
from . import color_degree
from . import families
from . import formats
from . import graph
from . import reduction
from . import switching


class InputError(click.ClickException):
    exit_code = 2


DOMAIN_ERRORS = (
    color_degree.NotRealizableError,
    switching.SwitchError,
    switching.NotCoRealizableError,
    balance.InstanceTooLargeError,
    families.NotATreeError,
    cat.PrecisionError,
)


@contextlib.contextmanager
def reporting_errors():
    """Turn library errors into click errors with the matching exit code."""
    try:
        yield
    except DOMAIN_ERRORS as e:
        raise click.ClickException(str(e))
    except ValueError as e:
        raise InputError(str(e))


class DocumentFile(click.ParamType):
    """A text document read from a path, or from standard input for `-`."""

    def __init__(self, name, parse):
        self.name = name
        self.parse = parse

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            with click.open_file(value, "r") as f:
                text = f.read()
        except OSError as e:
            self.fail(f"cannot read {value}: {e.strerror}", param, ctx)
        try:
            return self.parse(text)
        except ValueError as e:
            self.fail(f"{value}: {e}", param, ctx)


CGF = DocumentFile("cgf", formats.parse_cgf)
CDM = DocumentFile("cdm", formats.parse_cdm)
SWITCHES = DocumentFile("switches", formats.parse_switches)


@dataclass(frozen=True)
class FamilyInput:
    name: str
    params: tuple
    graph: graph.Graph


class FamilyShorthand(click.ParamType):
    name = "family"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            name, params = formats.split_family(value)
            return FamilyInput(name, params, graph.make_family(name, *params))
        except ValueError as e:
            self.fail(str(e), param, ctx)


class WeightList(click.ParamType):
    """Comma separated spine weights, e.g. 0,2,1,0."""

    name = "weights"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return cat.CaterpillarSpec(tuple(int(w) for w in value.split(",")))
        except ValueError as e:
            self.fail(f"{value!r}: {e}", param, ctx)


def _classify_multipartite(*parts):
    return families.classify_complete_multipartite(parts)


# Families whose class membership has a closed form.
CLASSIFIERS = {
    "path": families.classify_path,
    "cycle": families.classify_cycle,
    "wheel": families.classify_wheel,
    "complete": families.classify_complete,
    "complete_bipartite": families.classify_complete_bipartite,
    "complete_multipartite": _classify_multipartite,
}

KINDS = [kind.value for kind in balance.BalanceKind]
CLASSES = [graph_class.value for graph_class in balance.GraphClass]

family_option = click.option(
    "--family",
    type=FamilyShorthand(),
    help="Use a built-in family instead of a GRAPH file, "
    "e.g. wheel:7, complete_multipartite:3,3,3 or petersen.",
)
threads_option = click.option(
    "--threads",
    default=1,
    type=click.IntRange(min=1),
    help="Worker processes for the exact search. Output does not depend on it.",
)
max_vertices_option = click.option(
    "--max-vertices",
    default=balance.DEFAULT_MAX_VERTICES,
    show_default=True,
    type=click.IntRange(min=0),
    help="Refuse exact search on larger graphs; 0 disables the limit.",
)
json_option = click.option(
    "--json", "as_json", is_flag=True, help="Write a JSON report instead of text."
)


@click.group()
@click.option("--verbose", is_flag=True, help="Report progress on standard error.")
@click.pass_context
def colorbalance(ctx, verbose):
    """
    Colored graphs: color degree matrices, color 2-switches and balanced
    colorings.
    """
    ctx.obj = {"verbose": verbose}


@colorbalance.command("cdm")
@click.argument("graph_file", metavar="GRAPH", type=CGF)
@click.option(
    "-k",
    "--colors",
    "k",
    default=None,
    type=click.IntRange(min=1),
    help="Palette size. Defaults to the k of GRAPH.",
)
@click.option("--letters", is_flag=True, help="Print color identifiers as R, B, G.")
def cdm(graph_file, k, letters):
    """Print the color degree matrix of GRAPH."""
    with reporting_errors():
        m = color_degree.compute_cdm(graph_file, k)
        click.echo(formats.render_cdm(m, letters=letters), nl=False)


@colorbalance.command("cdm-equal")
@click.argument("first", metavar="G", type=CGF)
@click.argument("second", metavar="H", type=CGF)
@click.option(
    "--multiset", is_flag=True, help="Compare the rows as multisets, ignoring order."
)
@click.pass_context
def cdm_equal(ctx, first, second, multiset):
    """Exit 0 when G and H have the same color degree matrix, 1 otherwise."""
    if multiset:
        compare = color_degree.cdm_equal_as_multiset
    else:
        compare = color_degree.cdm_equal

    with reporting_errors():
        equal = compare(
            color_degree.compute_cdm(first), color_degree.compute_cdm(second)
        )

    click.echo("equal" if equal else "different")
    ctx.exit(0 if equal else 1)


@colorbalance.command("realizable")
@click.argument("matrix", type=CDM)
@click.pass_context
def realizable(ctx, matrix):
    """Decide whether MATRIX is the color degree matrix of some colored graph."""
    with reporting_errors():
        violation = color_degree.realizability_violation(matrix)

    if violation is None:
        click.echo("realizable")
    else:
        click.echo(f"not realizable: {violation}")
        ctx.exit(1)


@colorbalance.command("realize")
@click.argument("matrix", type=CDM)
def realize(matrix):
    """Print a colored graph whose color degree matrix is MATRIX."""
    with reporting_errors():
        click.echo(formats.render_cgf(color_degree.realize(matrix)), nl=False)


@colorbalance.command("switch-apply")
@click.argument("graph_file", metavar="GRAPH", type=CGF)
@click.argument("switches", type=SWITCHES)
def switch_apply(graph_file, switches):
    """
    Apply the color 2-switches in SWITCHES to GRAPH in order and print the
    result. Each line of SWITCHES is `u x w y`: remove ux and wy, add uy and
    wx.

    """
    with reporting_errors():
        states = switching.replay(graph_file, switches)
    click.echo(formats.render_cgf(states[-1]), nl=False)


@colorbalance.command("switch-seq")
@click.argument("first", metavar="G", type=CGF)
@click.argument("second", metavar="H", type=CGF)
def switch_seq(first, second):
    """Print color 2-switches that turn G into H."""
    with reporting_errors():
        sequence = switching.find_switch_sequence(first, second)
    click.echo(formats.render_switches(sequence), nl=False)


@colorbalance.command("balance-check")
@click.argument("graph_file", metavar="[GRAPH]", type=CGF, required=False)
@family_option
@click.option("--kind", type=click.Choice(KINDS), default="open", show_default=True)
@click.option("--lam", default=0, show_default=True, type=click.IntRange(min=0))
@click.option(
    "-k",
    "--colors",
    "k",
    default=None,
    type=click.IntRange(min=1),
    help="Palette size. Defaults to the k of GRAPH, or 2 with --family.",
)
@click.option(
    "--search",
    is_flag=True,
    help="Search for a balanced coloring instead of checking the given one.",
)
@threads_option
@max_vertices_option
@json_option
@click.pass_context
def balance_check(
    ctx, graph_file, family, kind, lam, k, search, threads, max_vertices, as_json
):
    """
    Check whether the coloring of GRAPH is λ-balanced of the given kind, or
    with --search, whether any such coloring exists.

    """
    if not search:
        if graph_file is None or family is not None:
            raise click.UsageError("checking a coloring needs a GRAPH file")
        with reporting_errors():
            cg = graph_file
            if k is not None:
                cg = graph.ColoredGraph(cg.graph, graph.Coloring(cg.coloring.colors, k))
            balanced = balance.is_balanced(cg, lam, kind)
            report = balance.imbalance(cg)

        if balanced:
            click.echo("balanced")
            return
        click.echo("unbalanced")
        for v, (o, c) in enumerate(zip(report.open, report.closed), start=1):
            if o > lam or c > lam:
                click.echo(f"vertex {v} open {o} closed {c}")
        ctx.exit(1)

    g = _input_graph(graph_file, family)
    if k is None:
        k = 2 if family is not None else graph_file.k

    with reporting_errors():
        certificate = balance.certify(
            g, k, lam, kind, max_vertices=max_vertices or None, n_cpus=threads
        )

    _echo_result(
        certificate, formats.render_certificate, formats.CERTIFICATE_SPEC, as_json
    )
    ctx.exit(0 if certificate.witness is not None else 1)


@colorbalance.command("beta")
@click.argument("graph_file", metavar="[GRAPH]", type=CGF, required=False)
@family_option
@click.option(
    "-k",
    "--colors",
    "k",
    default=2,
    show_default=True,
    type=click.IntRange(min=2),
    help="Number of colors.",
)
@click.option(
    "--kind",
    type=click.Choice(KINDS[:3]),
    default="open",
    show_default=True,
)
@threads_option
@max_vertices_option
@json_option
@click.pass_context
def beta(ctx, graph_file, family, k, kind, threads, max_vertices, as_json):
    """
    Print the balance number of GRAPH: the least λ for which it has a
    λ-balanced k-coloring of the given kind, with a witness coloring.

    """
    g = _input_graph(graph_file, family)

    def progress(lam, found):
        _echo_progress(ctx, f"λ={lam}: {'found' if found else 'refuted'}")

    with reporting_errors():
        certificate = balance.beta(
            g,
            k,
            kind,
            max_vertices=max_vertices or None,
            n_cpus=threads,
            progress=progress,
        )

    _echo_result(
        certificate, formats.render_certificate, formats.CERTIFICATE_SPEC, as_json
    )


@colorbalance.command("classify")
@click.argument("graph_file", metavar="[GRAPH]", type=CGF, required=False)
@family_option
@click.option(
    "--solver",
    is_flag=True,
    help="Use exhaustive search even for families with a closed form.",
)
@click.option(
    "--class",
    "graph_class",
    type=click.Choice(CLASSES),
    help="Exit 1 unless the graph belongs to this class.",
)
@threads_option
@max_vertices_option
@json_option
@click.pass_context
def classify(
    ctx, graph_file, family, solver, graph_class, threads, max_vertices, as_json
):
    """
    Decide membership of GRAPH in NBC, CNBC, OSB, CSB, SBV and PB, printing a
    witness coloring for each class it belongs to.

    Family inputs with a closed form are classified without search.

    """
    g = _input_graph(graph_file, family)

    with reporting_errors():
        if family is not None and family.name in CLASSIFIERS and not solver:
            report = CLASSIFIERS[family.name](*family.params)
        else:
            _echo_progress(ctx, f"searching {g.n} vertices for all six classes")
            report = balance.class_membership(
                g, max_vertices=max_vertices or None, n_cpus=threads
            )

    _echo_result(
        report, formats.render_class_report, formats.CLASS_REPORT_SPEC, as_json
    )
    if graph_class is not None and not report.member(balance.GraphClass(graph_class)):
        ctx.exit(1)


@colorbalance.command("family")
@click.argument("shorthand", type=FamilyShorthand())
@click.option(
    "--class",
    "graph_class",
    type=click.Choice(CLASSES),
    help="Color the graph with a witness for this class.",
)
@click.option(
    "-k",
    "--colors",
    "k",
    default=2,
    show_default=True,
    type=click.IntRange(min=1),
    help="Palette size of the uncolored output.",
)
@threads_option
@max_vertices_option
@click.pass_context
def family(ctx, shorthand, graph_class, k, threads, max_vertices):
    """
    Print a member of a built-in family as CGF, e.g. `family wheel:7`.

    Without --class every vertex gets color 1.

    """
    g = shorthand.graph
    if graph_class is None:
        coloring = graph.Coloring((1,) * g.n, k)
        click.echo(formats.render_cgf(graph.ColoredGraph(g, coloring)), nl=False)
        return

    with reporting_errors():
        if shorthand.name in CLASSIFIERS:
            report = CLASSIFIERS[shorthand.name](*shorthand.params)
        else:
            report = balance.class_membership(
                g, max_vertices=max_vertices or None, n_cpus=threads
            )

    verdict = report[balance.GraphClass(graph_class)]
    if not verdict.member:
        click.echo(f"not {graph_class}: {verdict.reason}", err=True)
        ctx.exit(1)
    click.echo(formats.render_cgf(graph.ColoredGraph(g, verdict.witness)), nl=False)


@colorbalance.command("caterpillar")
@click.argument("spec", metavar="WEIGHTS", type=WeightList())
@click.option(
    "--emit",
    type=click.Choice(["PB", "CSB"]),
    help="Print the caterpillar as CGF, colored with the witness for this class.",
)
@json_option
@click.pass_context
def caterpillar(ctx, spec, emit, as_json):
    """
    Decide PB and CSB for the caterpillar whose spine has the comma separated
    WEIGHTS (leaf counts). The spine endpoints must have weight 0.

    """
    verdicts = {"PB": cat.is_pb_caterpillar(spec), "CSB": cat.is_csb_caterpillar(spec)}

    if emit is not None:
        verdict = verdicts[emit]
        if not verdict.member:
            click.echo(f"not {emit}: {verdict.reason}", err=True)
            ctx.exit(1)
        cg = graph.ColoredGraph(cat.caterpillar_graph(spec), verdict.witness)
        click.echo(formats.render_cgf(cg), nl=False)
        return

    if as_json:
        result = {
            "weights": list(spec.weights),
            "vertices": spec.total_vertices,
            "classes": [
                formats.to_json_ready(v, formats.VERDICT_SPEC)
                for v in verdicts.values()
            ],
        }
        click.echo(json.dumps(result, indent=2))
        return

    click.echo(f"# spine {spec.spine_length} vertices {spec.total_vertices}")
    for verdict in verdicts.values():
        click.echo(formats.render_verdict(verdict))


@colorbalance.command("count")
@click.option(
    "--from", "start", default=2, show_default=True, type=click.IntRange(min=2)
)
@click.option("--to", "stop", default=10, show_default=True, type=click.IntRange(min=2))
@click.option(
    "--method",
    type=click.Choice(["recurrence", "matrix", "closed-form", "enumerate"]),
    default="recurrence",
    show_default=True,
    help="closed-form prints A(n) only; enumerate checks every caterpillar.",
)
@click.option(
    "--max-weight",
    default=5,
    show_default=True,
    type=click.IntRange(min=0),
    help="Largest spine weight tried by --method enumerate.",
)
@threads_option
@click.pass_context
def count(ctx, start, stop, method, max_weight, threads):
    """
    Print `n A(n) B(n)` for each spine length n from --from to --to, where A(n)
    counts the weighted, colored spines with a balanced closed neighborhood
    everywhere.

    """
    with reporting_errors():
        for n in range(start, stop + 1):
            if method == "closed-form":
                click.echo(f"{n} {cat.count_closed_form(n)}")
                continue

            if method == "recurrence":
                pair = cat.count_recurrence(n)
            elif method == "matrix":
                pair = cat.count_matrix(n)
            else:

                def progress(done, total):
                    _echo_progress(ctx, f"n={n}: {done}/{total} slices")

                pair = cat.enumerate_counts(
                    n, max_weight, n_cpus=threads, progress=progress
                )
            click.echo(f"{n} {pair.a} {pair.b}")


@colorbalance.command("reduce")
@click.argument("graph_file", metavar="GRAPH", type=CGF)
@click.option(
    "--check",
    is_flag=True,
    help="GRAPH is complete multipartite: also check what the reduction keeps.",
)
@json_option
@click.pass_context
def reduce_graph(ctx, graph_file, check, as_json):
    """
    Repeatedly remove a red and a blue vertex with the same open neighborhood
    and print the removals followed by the reduced graph.

    """
    with reporting_errors():
        if check:
            observations = reduction.check_reduction_observations(graph_file)
            trace = observations.trace
        else:
            observations = None
            trace = reduction.red_blue_reduce(graph_file)

    checks = {}
    if observations is not None:
        checks = {
            "parts_monochromatic": observations.parts_monochromatic,
            "odd_parts_stay_odd": observations.odd_parts_stay_odd,
            "even_parts_stay_even": observations.even_parts_stay_even,
            "balance_preserved": observations.balance_preserved,
        }

    if as_json:
        result = formats.to_json_ready(trace, formats.TRACE_SPEC)
        if checks:
            result["checks"] = checks
        click.echo(json.dumps(result, indent=2))
    else:
        click.echo(formats.render_trace(trace), nl=False)
        for name, held in checks.items():
            click.echo(f"# {name}: {'yes' if held else 'no'}")

    if observations is not None and not observations.all_hold():
        ctx.exit(1)


def _input_graph(graph_file, family):
    if (graph_file is None) == (family is None):
        raise click.UsageError("give exactly one of GRAPH or --family")
    return family.graph if family is not None else graph_file.graph


def _echo_progress(ctx, message):
    if ctx.obj and ctx.obj.get("verbose"):
        click.echo(message, err=True)


def _echo_result(result, render, spec, as_json):
    if as_json:
        click.echo(json.dumps(formats.to_json_ready(result, spec), indent=2))
    else:
        click.echo(render(result), nl=False)
